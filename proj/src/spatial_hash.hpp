#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "firefront/geometry.hpp"

namespace firefront::detail {

/// Uniform bucket grid over a rectangle. Items are registered in every
/// bucket their bounding box overlaps; storage is compressed by bucket.
class BucketGrid {
 public:
  BucketGrid(Vec2 lo, Vec2 hi, double bucket) : lo_(lo), size_(bucket) {
    nbx_ = std::max(1, static_cast<int>(std::ceil((hi.x - lo.x) / bucket)) + 1);
    nby_ = std::max(1, static_cast<int>(std::ceil((hi.y - lo.y) / bucket)) + 1);
    start_.assign(static_cast<std::size_t>(nbx_) * nby_ + 1, 0);
  }

  int bx(double x) const { return std::clamp(static_cast<int>(std::floor((x - lo_.x) / size_)), 0, nbx_ - 1); }
  int by(double y) const { return std::clamp(static_cast<int>(std::floor((y - lo_.y) / size_)), 0, nby_ - 1); }
  double bucket_size() const { return size_; }
  int nbx() const { return nbx_; }
  int nby() const { return nby_; }

  /// Two passes: count(), then build(), then place() in the same order.
  void count(Vec2 a, Vec2 b) {
    for_each_bucket(a, b, [&](std::size_t c) { ++start_[c + 1]; });
  }
  void build() {
    for (std::size_t c = 1; c < start_.size(); ++c) start_[c] += start_[c - 1];
    items_.resize(start_.back());
    fill_ = start_;
  }
  void place(Vec2 a, Vec2 b, std::size_t item) {
    for_each_bucket(a, b, [&](std::size_t c) { items_[fill_[c]++] = item; });
  }

  /// Visits items of all buckets at Chebyshev ring distance r from (ci, cj).
  template <class Fn>
  void visit_ring(int ci, int cj, int r, Fn&& fn) const {
    const int i0 = ci - r, i1 = ci + r, j0 = cj - r, j1 = cj + r;
    for (int j = std::max(j0, 0); j <= std::min(j1, nby_ - 1); ++j) {
      const bool edge_row = (j == j0 || j == j1);
      for (int i = std::max(i0, 0); i <= std::min(i1, nbx_ - 1); ++i) {
        if (!edge_row && i != i0 && i != i1) continue;
        const std::size_t c = static_cast<std::size_t>(j) * nbx_ + i;
        for (std::size_t s = start_[c]; s < start_[c + 1]; ++s) fn(items_[s]);
      }
    }
  }

  int max_ring() const { return std::max(nbx_, nby_); }

  std::size_t bucket_count() const { return static_cast<std::size_t>(nbx_) * nby_; }
  std::size_t bucket_of(Vec2 p) const { return static_cast<std::size_t>(by(p.y)) * nbx_ + bx(p.x); }
  Vec2 bucket_lo(std::size_t c) const {
    return {lo_.x + static_cast<double>(c % nbx_) * size_, lo_.y + static_cast<double>(c / nbx_) * size_};
  }

 private:
  template <class Fn>
  void for_each_bucket(Vec2 a, Vec2 b, Fn&& fn) const {
    const int i0 = bx(std::min(a.x, b.x)), i1 = bx(std::max(a.x, b.x));
    const int j0 = by(std::min(a.y, b.y)), j1 = by(std::max(a.y, b.y));
    for (int j = j0; j <= j1; ++j)
      for (int i = i0; i <= i1; ++i) fn(static_cast<std::size_t>(j) * nbx_ + i);
  }

  Vec2 lo_;
  double size_;
  int nbx_ = 1;
  int nby_ = 1;
  std::vector<std::size_t> start_;
  std::vector<std::size_t> fill_;
  std::vector<std::size_t> items_;
};

/// Exact nearest query by expanding rings until the best candidate is
/// strictly closer than any unvisited bucket can be.
template <class DistFn>
std::pair<double, std::size_t> nearest(const BucketGrid& grid, Vec2 p, DistFn&& dist) {
  const int ci = grid.bx(p.x);
  const int cj = grid.by(p.y);
  double best = std::numeric_limits<double>::infinity();
  std::size_t best_item = std::numeric_limits<std::size_t>::max();
  for (int r = 0; r <= grid.max_ring(); ++r) {
    grid.visit_ring(ci, cj, r, [&](std::size_t item) {
      const double d = dist(item);
      if (d < best || (d == best && item < best_item)) {
        best = d;
        best_item = item;
      }
    });
    if (best < r * grid.bucket_size()) break;
  }
  return {best, best_item};
}

struct Rect {
  Vec2 lo, hi;
};

inline double rect_distance(const Rect& r, Vec2 p) {
  const double dx = std::max({r.lo.x - p.x, 0.0, p.x - r.hi.x});
  const double dy = std::max({r.lo.y - p.y, 0.0, p.y - r.hi.y});
  return std::sqrt(dx * dx + dy * dy);
}

inline double rect_rect_distance(const Rect& a, const Rect& b) {
  const double dx = std::max({a.lo.x - b.hi.x, 0.0, b.lo.x - a.hi.x});
  const double dy = std::max({a.lo.y - b.hi.y, 0.0, b.lo.y - a.hi.y});
  return std::sqrt(dx * dx + dy * dy);
}

/// Nearest item for many query points at once. Queries are grouped by
/// bucket; each bucket first collects the items that can be nearest to any
/// point of its rectangle, then scans only those. `lower(rect, item)` must
/// not exceed the item's distance to any point of the rectangle and
/// `upper(rect, item)` must not be below it. Results are identical to
/// nearest(), ties included.
template <class DistFn, class LowerFn, class UpperFn>
std::vector<std::pair<double, std::size_t>> nearest_batch(const BucketGrid& grid, std::span<const Vec2> queries,
                                                          DistFn&& dist, LowerFn&& lower, UpperFn&& upper) {
  const std::size_t nq = queries.size();
  std::vector<std::pair<double, std::size_t>> out(nq);
  if (nq == 0) return out;

  // Counting sort of the queries by bucket.
  std::vector<std::size_t> bucket(nq);
  std::vector<std::size_t> start(grid.bucket_count() + 1, 0);
  for (std::size_t q = 0; q < nq; ++q) {
    bucket[q] = grid.bucket_of(queries[q]);
    ++start[bucket[q] + 1];
  }
  for (std::size_t c = 1; c < start.size(); ++c) start[c] += start[c - 1];
  std::vector<std::size_t> order(nq);
  {
    std::vector<std::size_t> fill(start.begin(), start.end() - 1);
    for (std::size_t q = 0; q < nq; ++q) order[fill[bucket[q]]++] = q;
  }
  std::vector<std::size_t> used;
  for (std::size_t c = 0; c + 1 < start.size(); ++c)
    if (start[c + 1] > start[c]) used.push_back(c);

  const double b = grid.bucket_size();
#pragma omp parallel
  {
    std::vector<std::size_t> cand;
    std::vector<std::pair<double, std::size_t>> seen;
#pragma omp for schedule(dynamic, 4)
    for (std::ptrdiff_t u = 0; u < static_cast<std::ptrdiff_t>(used.size()); ++u) {
      const std::size_t c = used[u];
      const Vec2 lo = grid.bucket_lo(c);
      const Rect rect{lo, {lo.x + b, lo.y + b}};
      const int ci = static_cast<int>(c % grid.nbx()), cj = static_cast<int>(c / grid.nbx());

      // Ring r + 1 lies at least r * b away from the rectangle, so once the
      // bound drops below that nothing further out can qualify.
      double bound = std::numeric_limits<double>::infinity();
      seen.clear();
      for (int r = 0; r <= grid.max_ring(); ++r) {
        grid.visit_ring(ci, cj, r, [&](std::size_t item) {
          bound = std::min(bound, upper(rect, item));
          seen.push_back({lower(rect, item), item});
        });
        if (r * b > bound) break;
      }
      // Rounding in lower() and upper() must never drop a tied item.
      const double slack = bound * (1.0 + 1e-12);
      cand.clear();
      for (const auto& [lo_d, item] : seen)
        if (lo_d <= slack) cand.push_back(item);
      std::sort(cand.begin(), cand.end());
      cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

      for (std::size_t s = start[c]; s < start[c + 1]; ++s) {
        const std::size_t q = order[s];
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_item = std::numeric_limits<std::size_t>::max();
        for (std::size_t item : cand) {
          const double d = dist(queries[q], item);
          if (d < best) {
            best = d;
            best_item = item;
          }
        }
        out[q] = {best, best_item};
      }
    }
  }
  return out;
}

}  // namespace firefront::detail
