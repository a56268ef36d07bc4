#pragma once

#include <limits>
#include <span>

#include "lclc/lattice.hpp"

namespace lclc {

/// Order of a Rényi entropy: 0, any finite positive value, or +∞.
/// Order 1 is Shannon entropy and order ∞ is min-entropy.
class RenyiOrder {
 public:
  /// Throws Error(BadOrders) for negative or NaN values.
  explicit RenyiOrder(double value);

  static RenyiOrder infinity() { return RenyiOrder(std::numeric_limits<double>::infinity()); }
  static RenyiOrder shannon() { return RenyiOrder(1.0); }

  double value() const noexcept { return value_; }
  bool is_infinite() const noexcept { return value_ == std::numeric_limits<double>::infinity(); }
  bool is_zero() const noexcept { return value_ == 0.0; }
  /// Orders within 1e-12 of 1 are evaluated through the Shannon limit.
  bool is_shannon() const noexcept;

  friend auto operator<=>(const RenyiOrder&, const RenyiOrder&) = default;

 private:
  double value_;
};

/// Shannon entropy, min-entropy (nats) and varentropy (nats²) of one law.
struct InfoSummary {
  double shannon = 0.0;
  double min_entropy = 0.0;
  double varentropy = 0.0;
};

// Power sums Σ xᵢᵗ. All accumulate in the log domain with a max shift.
double power_sum(std::span<const double> weights, double t);
double log_power_sum(std::span<const double> weights, double t);
double power_sum(const LatticePMF& x, double t);
double log_power_sum(const LatticePMF& x, double t);
/// Closed forms: (1-λ)ᵗ/(1-λᵗ) and ((1-λ)/(1+λ))ᵗ(1+λᵗ)/(1-λᵗ).
double power_sum(const ParametricLaw& law, double t);
double log_power_sum(const ParametricLaw& law, double t);

double shannon(const LatticePMF& x);
double min_entropy(const LatticePMF& x);

/// H_p in nats. H_0 is log(#support), the p → 0⁺ limit.
double renyi(const LatticePMF& x, RenyiOrder p);
double renyi(const ParametricLaw& law, RenyiOrder p);
double renyi_geometric(double lambda, RenyiOrder p);
double renyi_symmetric_geometric(double lambda, RenyiOrder p);

/// Var(log f(X)), excluding zero-mass indices.
double varentropy(const LatticePMF& x);
double varentropy(const ParametricLaw& law);
/// λ·log²λ / (1-λ)².
double varentropy_geometric(double lambda);
/// log²λ · (2λ/(1-λ)² - (2λ/((1-λ)(1+λ)))²).
double varentropy_symmetric_geometric(double lambda);

InfoSummary summarize(const LatticePMF& x);

/// Exponential tilt: the pmf proportional to xᵢ^α.
LatticePMF tilt(const LatticePMF& x, double alpha);
/// Tilting a (symmetric) geometric law by α gives the same family at λ^α.
ParametricLaw tilt(const ParametricLaw& law, double alpha);

/// -log P(X = i). Throws Error(OutOfSupport) where the mass is zero.
double info_content(const LatticePMF& x, Index i);

}  // namespace lclc
