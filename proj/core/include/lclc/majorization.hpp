#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lclc/lattice.hpp"
#include "lclc/report.hpp"

namespace lclc {

/// The right-continuous step function F(t) = #{i : xᵢ > t} on t ≥ 0.
///
/// `levels()` holds the distinct positive values in increasing order and
/// `counts()[j]` is F on [levels[j-1], levels[j]) with levels[-1] = 0.
/// F vanishes from the largest level on. For a probability pmf, F is a
/// probability density on (0, ∞).
class LevelCount {
 public:
  LevelCount() = default;
  explicit LevelCount(std::span<const double> values);
  explicit LevelCount(const LatticePMF& x) : LevelCount(x.weights()) {}

  std::span<const double> levels() const noexcept { return levels_; }
  std::span<const std::size_t> counts() const noexcept { return counts_; }

  std::size_t operator()(double t) const noexcept;

  /// ∫₀^∞ F(λ) dλ = Σ xᵢ.
  double integral() const noexcept;
  /// t ∫₀^∞ λ^{t-1} F(λ) dλ, exact per segment; equals Σ xᵢᵗ.
  double layer_cake(double t) const;

 private:
  std::vector<double> levels_;
  std::vector<std::size_t> counts_;
};

LevelCount level_count(const LatticePMF& x);

/// Half-open real interval [lo, hi).
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool empty() const noexcept { return !(lo < hi); }
  bool contains(double t) const noexcept { return lo <= t && t < hi; }
};

/// Sequence z_k = C·λᵏ on k ≥ 0.
struct GeometricComparator {
  double scale = 1.0;
  double ratio = 0.5;

  static GeometricComparator probability(double lambda) { return {1.0 - lambda, lambda}; }

  double value(Index k) const noexcept;
  /// #{k ≥ 0 : C λᵏ > t}.
  std::size_t level_count(double t) const noexcept;
};

struct Crossing {
  Interval interval;
  Index a = 0;
  Index b = 0;
  /// {k : x_k ≥ z_k} runs up to the truncation horizon (z_{b+1} below horizon_tol).
  bool b_unbounded = false;
};

/// I = [z_b, x_a) from a = min{k : x_k ≥ z_k}, b = max{k : x_k ≥ z_k}, where
/// x is re-indexed to start at 0. Comparisons treat relative differences
/// below 1e-12 as ties. Throws Error(NotMonotoneLogConcave) unless x is
/// non-increasing, Error(NoCrossing) if x_k < z_k for all k.
Crossing crossing_interval(const LatticePMF& x, const GeometricComparator& z,
                           double horizon_tol = kDefaultTailTol);

/// Checks F_z ≤ F_x on I and F_z ≥ F_x off I at all breakpoints of both step
/// functions and their midpoints. A failing verdict indicates a library defect.
CheckReport crossing_verify(const LatticePMF& x, const GeometricComparator& z);

struct FoldedLevels {
  LevelCount full;
  LevelCount half;
  CheckReport report;
};

/// For x symmetric about an integer center, checks F_x = 2F_{x*} - 1 below the
/// central mass, x* being the restriction to the center and the right half.
/// Throws Error(NotSymmetric) otherwise.
FoldedLevels fold_symmetric(const LatticePMF& x);

/// Σ xᵢᵗ against t ∫ λ^{t-1} F_x(λ) dλ. Throws Error(DomainError) for t < 1.
CheckReport cake_layer_check(const LatticePMF& x, double t);

/// Density c·u^e on [lo, hi).
struct PowerSegment {
  double lo = 0.0;
  double hi = 0.0;
  double coef = 0.0;
  double exponent = 0.0;
};

/// Piecewise power-law density on [0, ∞); every expectation is exact per segment.
class PowerDensity {
 public:
  PowerDensity() = default;
  explicit PowerDensity(std::vector<PowerSegment> segments);
  explicit PowerDensity(const LevelCount& steps);

  std::span<const PowerSegment> segments() const noexcept { return segments_; }

  double mass() const;
  /// ∫ u^k f(u) du.
  double moment(double k) const;
  double mean() const { return moment(1.0); }
  /// E[(U - t)₊].
  double hinge(double t) const;
  /// Segment endpoints, sorted and unique.
  std::vector<double> breakpoints() const;
  /// Density of U^p.
  PowerDensity power(double p) const;

 private:
  std::vector<PowerSegment> segments_;
};

/// Density of U^p for U distributed as the step density of `steps`.
PowerDensity power_transform_density(const LevelCount& steps, double p);

/// Union of both densities' breakpoints, their pairwise midpoints, and 0.
std::vector<double> default_hinge_grid(const PowerDensity& u, const PowerDensity& v);

/// Claim "V majorizes U": E[(V-t)₊] ≥ E[(U-t)₊] - 1e-10 on every hinge point.
/// An empty grid selects `default_hinge_grid`. Throws Error(MeanMismatch) when
/// the means differ by more than `mean_tol`.
CheckReport convex_order_check(const PowerDensity& u, const PowerDensity& v,
                               std::span<const double> hinge_grid = {},
                               double mean_tol = 1e-10);
CheckReport convex_order_check(const LevelCount& u, const LevelCount& v,
                               std::span<const double> hinge_grid = {},
                               double mean_tol = 1e-10);

}  // namespace lclc
