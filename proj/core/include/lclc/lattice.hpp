#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace lclc {

using Index = std::int64_t;

/// Default tail mass discarded when an infinite-support law is truncated.
inline constexpr double kDefaultTailTol = 1e-15;

/// Probability mass function on a contiguous window of the integer lattice.
///
/// `weights()[k]` is P(X = offset() + k). The representation is trimmed: the
/// first and last stored weights are strictly positive. Interior zeros are
/// representable (they only fail the log-concavity predicate).
class LatticePMF {
 public:
  /// Divides by the total mass and trims leading/trailing zeros.
  ///
  /// Weights whose total is already 1 to within a few ulps are kept
  /// bit-for-bit, which makes `normalize` idempotent.
  static LatticePMF normalize(std::vector<double> weights, Index offset = 0);

  static LatticePMF dirac(Index at);

  Index offset() const noexcept { return offset_; }
  Index last_index() const noexcept { return offset_ + static_cast<Index>(weights_.size()) - 1; }
  std::size_t size() const noexcept { return weights_.size(); }
  std::span<const double> weights() const noexcept { return weights_; }

  /// P(X = i); zero off the stored window.
  double mass(Index i) const noexcept;
  double max_mass() const noexcept;
  /// Smallest index attaining the maximal mass.
  Index mode() const noexcept;
  std::size_t support_size() const noexcept;
  bool is_dirac() const noexcept { return weights_.size() == 1; }

  /// Law of X + shift.
  LatticePMF shifted(Index shift) const;
  /// Law of -X.
  LatticePMF reflected() const;

  friend bool operator==(const LatticePMF&, const LatticePMF&) = default;

 private:
  LatticePMF(Index offset, std::vector<double> weights)
      : offset_(offset), weights_(std::move(weights)) {}

  Index offset_ = 0;
  std::vector<double> weights_;
};

enum class LawKind { Geometric, SymmetricGeometric };

/// Geometric law (1-λ)λⁿ on n ≥ 0, or symmetric geometric ((1-λ)/(1+λ))λ^|n| on ℤ.
class ParametricLaw {
 public:
  /// Throws Error(BadLambda) unless 0 < lambda < 1.
  ParametricLaw(LawKind kind, double lambda);

  static ParametricLaw geometric(double lambda) { return {LawKind::Geometric, lambda}; }
  static ParametricLaw symmetric_geometric(double lambda) {
    return {LawKind::SymmetricGeometric, lambda};
  }

  LawKind kind() const noexcept { return kind_; }
  double lambda() const noexcept { return lambda_; }

  double mass(Index n) const noexcept;
  double log_mass(Index n) const noexcept;
  /// Mass at the mode: 1-λ or (1-λ)/(1+λ).
  double max_mass() const noexcept;

 private:
  LawKind kind_;
  double lambda_;
};

enum class Direction { Increasing, Decreasing, Both, Neither };

inline bool is_monotone(Direction d) noexcept { return d != Direction::Neither; }

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
};

/// Log-concavity on the lattice: contiguous support and x_i² ≥ x_{i-1}x_{i+1},
/// compared as 2·log x_i ≥ log x_{i-1} + log x_{i+1} with relative tolerance 1e-12.
bool is_log_concave(const LatticePMF& x);

Direction monotonicity(const LatticePMF& x);

/// Point c (integer or half-integer) with P(c+u) = P(c-u) for all u, if any.
std::optional<double> symmetry_center(const LatticePMF& x, double tol = 1e-12);

/// True when the symmetry center exists and is an integer.
bool is_integer_symmetric(const LatticePMF& x);

/// Truncated, renormalized copy of an infinite-support law with discarded
/// tail mass below `tail_tol`. Throws Error(BadTolerance) unless
/// 0 < tail_tol ≤ 1e-6.
LatticePMF materialize(const ParametricLaw& law, double tail_tol = kDefaultTailTol);

Moments mean_variance(const LatticePMF& x);

/// Law of X - Y for independent X ~ x and Y ~ y.
LatticePMF difference(const LatticePMF& x, const LatticePMF& y);

/// Deterministic inverse-CDF sampling; identical seeds give identical draws.
std::vector<Index> sample(const LatticePMF& x, std::uint64_t seed, std::size_t count);

}  // namespace lclc
