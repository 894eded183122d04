#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "firefront/grid.hpp"

namespace firefront {

enum class SchemeKind {
  kEngquistOsher1,
  kLaxFriedrichs1,
  kLocalLaxFriedrichs1,
  kEngquistOsherEno2,
};

std::string_view scheme_name(SchemeKind kind);
/// Accepts the canonical names and the short forms eo1, lf1, llf1, eno2.
SchemeKind parse_scheme(std::string_view name);

/// The ENO scheme runs without a narrow band.
inline bool requires_full_matrix(SchemeKind kind) { return kind == SchemeKind::kEngquistOsherEno2; }

struct StepReport {
  double dt = 0.0;
  double max_hprime = 0.0;  ///< largest |H'| estimate over the updated nodes
  double courant = 0.0;     ///< max_hprime * dt / min(dx, dy)
  std::size_t nodes = 0;
  bool accepted = true;
};

/// Lax-Friedrichs numerical Hamiltonian g(a, b) = H((a+b)/2) - theta (b-a)/2
/// with a the backward and b the forward difference. Non-decreasing in a
/// and non-increasing in b whenever theta >= max |H'| on the range.
template <class Hamiltonian>
double lf_flux(double a, double b, Hamiltonian&& hamiltonian, double theta) {
  return hamiltonian(0.5 * (a + b)) - theta * 0.5 * (b - a);
}

/// Per-node speeds aligned with band.active(). Each step writes the back
/// buffer at band nodes and swaps; nodes outside the band must already agree
/// between the two buffers. A step whose Courant number exceeds 1 is
/// rejected: the field is left untouched and `accepted` is false.
StepReport eo1_step(LevelSetField& field, const NarrowBand& band, std::span<const double> speed, double dt);

enum class LfMode { kGlobal, kLocal };

/// Dimension-by-dimension Lax-Friedrichs. Global mode uses `global_bound`
/// for both dissipation coefficients. Local mode bounds |dH/dp|, |dH/dq|
/// per node over the box spanned by the one-sided differences, using the
/// node speed and its angular slope.
StepReport lf1_step(LevelSetField& field, const NarrowBand& band, std::span<const double> speed,
                    std::span<const double> speed_slope, double dt, LfMode mode, double global_bound);

/// Second-order ENO differences in the Engquist-Osher upwind form.
/// Throws ConfigError unless `band` covers the whole grid.
StepReport eno2_step(LevelSetField& field, const NarrowBand& band, std::span<const double> speed, double dt);

/// Explicit step size safety * min(dx, dy) / max_hprime. A stationary
/// front (max_hprime == 0) returns `stationary_dt`.
double cfl_dt(double max_hprime, double dx, double dy, double safety, double stationary_dt);

}  // namespace firefront
