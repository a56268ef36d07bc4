#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lclc/lattice.hpp"
#include "lclc/report.hpp"

namespace lclc {

/// Default geometric grid for concavity checks of Φ.
inline constexpr double kConcavityGridMin = 0.05;
inline constexpr double kConcavityGridMax = 40.0;
inline constexpr std::size_t kConcavityGridPoints = 256;
/// Largest Φ'' (and relative slope change) accepted as concave.
inline constexpr double kConcavityTol = 1e-9;

/// Φ(t) = log(t · Σ xᵢᵗ).
double phi(const LatticePMF& x, double t);
/// Same functional on an arbitrary positive sequence (not necessarily summing to 1).
double phi(std::span<const double> weights, double t);
/// Closed form for (symmetric) geometric laws, e.g. log t + t·log(1-λ) - log(1-λᵗ).
double phi(const ParametricLaw& law, double t);

/// Φ''(t) = Var_{x^t}(log x) - 1/t², i.e. (V(X_t) - 1)/t² for the tilted law X_t.
double phi_second_derivative(const LatticePMF& x, double t);
double phi_second_derivative(std::span<const double> weights, double t);
double phi_second_derivative(const ParametricLaw& law, double t);

struct ConcavityReport {
  std::vector<double> grid;
  std::vector<double> phi;
  /// Analytic Φ'' at every grid node.
  std::vector<double> phi_second;
  /// Largest change of consecutive chord slopes, relative to max(1, max|Φ|).
  double max_slope_change = 0.0;
  double max_phi_second = 0.0;
  bool concave = true;
  /// Grid triple around the worst violation, when not concave.
  std::optional<std::array<double, 3>> witness;
};

std::vector<double> geometric_grid(double t_min, double t_max, std::size_t n_points);

/// Samples Φ on a log-spaced grid and checks both chord-slope changes and the
/// analytic second derivative against `tol`. Throws Error(DomainError) for a
/// bad grid (0 < t_min < t_max, n_points ≥ 3).
ConcavityReport check_concavity(const LatticePMF& x, double t_min = kConcavityGridMin,
                                double t_max = kConcavityGridMax,
                                std::size_t n_points = kConcavityGridPoints,
                                double tol = kConcavityTol);

/// Φ((1-s)p + s q) - (1-s)Φ(p) - sΦ(q); non-negative when Φ is concave.
double chord_gap(const LatticePMF& x, double p, double q, double s);

/// log((t + γ) · Σ yₙ^{t/γ}) for a positive sequence y. Throws
/// Error(DomainError) if t ≤ -γ, γ ≤ 0, or some yₙ ≤ 0.
double extended_phi(std::span<const double> y, double gamma, double t);

/// Three-point concavity test of the extended functional with y = {λ, 1+λ}
/// at t ∈ {0, γ, 2γ}. The claim checked is "concavity is violated".
///
/// Top-level lhs/rhs are the printed quantities 4γ²(2λ+1) and
/// 6γ²(λ² + (1+λ)²). The verdict comes from the exact comparison
/// 2Φ(γ) < Φ(0) + Φ(2γ), whose exponentiated lhs is 4γ²(2λ+1)²; both
/// appear as rows.
CheckReport counterexample_check(double lambda, double gamma);

/// Result of scanning a one-parameter family of symmetric pmfs for Φ'' > threshold.
struct WitnessSearch {
  bool found = false;
  std::optional<LatticePMF> pmf;
  double t = 0.0;
  double phi_second = 0.0;
  /// Largest Φ'' seen over the whole scan.
  double max_phi_second = -1e300;
  /// Largest varentropy of any tilt seen; Φ'' > 0 needs this above 1.
  double max_tilted_varentropy = 0.0;
  std::size_t candidates = 0;
};

/// Scans (a, 1-2a, a) for a on an even grid of (0, ½), keeping log-concave members.
WitnessSearch scan_three_atom_symmetric(std::size_t n_values = 2000, double threshold = 1e-6);

/// Scans c·(a^|k|)_{|k| ≤ half_width} for a on an even grid of (0, 1).
WitnessSearch scan_symmetric_log_affine(int half_width, std::size_t n_values = 2000,
                                        double threshold = 1e-6);

}  // namespace lclc
