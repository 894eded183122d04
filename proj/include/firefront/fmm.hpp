#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "firefront/front.hpp"
#include "firefront/grid.hpp"

namespace firefront {

struct SpeedConfig;

/// Arrival times of the front on a grid, from the stationary eikonal
/// reformulation |grad T| F = 1.
class ArrivalField {
 public:
  enum class State : std::uint8_t { kFar, kTrial, kKnown };

  ArrivalField() = default;
  explicit ArrivalField(const Grid& grid);

  const Grid& grid() const { return grid_; }
  /// Arrival time, clamped to 0 inside the initially burned region.
  double arrival(std::size_t k) const { return time_[k] > 0.0 ? time_[k] : 0.0; }
  /// Signed times: nodes inside the initial front hold -|phi0| / F.
  std::span<const double> signed_times() const { return time_; }
  State state(std::size_t k) const { return state_[k]; }

  std::size_t heap_pushes = 0;
  std::size_t accepted = 0;
  /// Times in acceptance order; non-decreasing by construction.
  std::vector<double> acceptance_order;

 private:
  friend ArrivalField fmm_solve(const Grid&, const InitialShape&, const std::function<double(Vec2)>&);
  Grid grid_;
  std::vector<double> time_;
  std::vector<State> state_;
};

/// First-order fast marching from the signed distance of `shape`. Nodes next
/// to the zero level set are seeded with |phi0| / F; the march covers the
/// unburned side. Throws InputError for a non-positive speed.
ArrivalField fmm_solve(const Grid& grid, const InitialShape& shape, const std::function<double(Vec2)>& speed);

/// Same, with the speed taken from a scenario speed law. Direction-dependent
/// laws are rejected with AnisotropicHamiltonian.
ArrivalField fmm_solve(const Grid& grid, const InitialShape& shape, const SpeedConfig& cfg);

/// The t-level set of the arrival field. Empty beyond the largest arrival.
Front front_at_time(const ArrivalField& arrival, double t);

}  // namespace firefront
