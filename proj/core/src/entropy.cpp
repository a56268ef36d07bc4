#include "lclc/entropy.hpp"

#include <cmath>
#include <string>

#include "detail/numeric.hpp"
#include "lclc/error.hpp"

namespace lclc {

namespace {

void require_positive_exponent(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw Error(Errc::DomainError, "power-sum exponent must be positive and finite");
  }
}

void require_lambda(double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw Error(Errc::BadLambda, "lambda must lie in (0,1), got " + std::to_string(lambda));
  }
}

// log(1 - λᵗ), accurate when λᵗ is close to 1.
double log_one_minus_pow(double lambda, double t) {
  return std::log(-std::expm1(t * std::log(lambda)));
}

}  // namespace

RenyiOrder::RenyiOrder(double value) : value_(value) {
  if (std::isnan(value) || value < 0.0) {
    throw Error(Errc::BadOrders, "Renyi order must be non-negative");
  }
}

bool RenyiOrder::is_shannon() const noexcept { return std::abs(value_ - 1.0) < 1e-12; }

double log_power_sum(std::span<const double> weights, double t) {
  require_positive_exponent(t);
  return detail::log_power_sum(weights, t);
}

double power_sum(std::span<const double> weights, double t) {
  return std::exp(log_power_sum(weights, t));
}

double log_power_sum(const LatticePMF& x, double t) { return log_power_sum(x.weights(), t); }

double power_sum(const LatticePMF& x, double t) { return power_sum(x.weights(), t); }

double log_power_sum(const ParametricLaw& law, double t) {
  require_positive_exponent(t);
  const double lambda = law.lambda();
  if (law.kind() == LawKind::Geometric) {
    return t * std::log1p(-lambda) - log_one_minus_pow(lambda, t);
  }
  return t * (std::log1p(-lambda) - std::log1p(lambda)) +
         std::log1p(std::pow(lambda, t)) - log_one_minus_pow(lambda, t);
}

double power_sum(const ParametricLaw& law, double t) { return std::exp(log_power_sum(law, t)); }

double shannon(const LatticePMF& x) {
  detail::CompensatedSum h;
  for (double w : x.weights()) {
    if (w > 0.0) h.add(-w * std::log(w));
  }
  return h.value();
}

double min_entropy(const LatticePMF& x) { return -std::log(x.max_mass()); }

double renyi(const LatticePMF& x, RenyiOrder p) {
  if (p.is_infinite()) return min_entropy(x);
  if (p.is_shannon()) return shannon(x);
  if (p.is_zero()) return std::log(static_cast<double>(x.support_size()));
  return log_power_sum(x, p.value()) / (1.0 - p.value());
}

double renyi_geometric(double lambda, RenyiOrder p) {
  require_lambda(lambda);
  if (p.is_infinite()) return -std::log1p(-lambda);
  if (p.is_zero()) return detail::kInf;
  if (p.is_shannon()) return -std::log1p(-lambda) - lambda / (1.0 - lambda) * std::log(lambda);
  return log_power_sum(ParametricLaw::geometric(lambda), p.value()) / (1.0 - p.value());
}

double renyi_symmetric_geometric(double lambda, RenyiOrder p) {
  require_lambda(lambda);
  const double log_c = std::log1p(-lambda) - std::log1p(lambda);
  if (p.is_infinite()) return -log_c;
  if (p.is_zero()) return detail::kInf;
  if (p.is_shannon()) {
    const double mean_abs = 2.0 * lambda / ((1.0 - lambda) * (1.0 + lambda));
    return -log_c - mean_abs * std::log(lambda);
  }
  return log_power_sum(ParametricLaw::symmetric_geometric(lambda), p.value()) / (1.0 - p.value());
}

double renyi(const ParametricLaw& law, RenyiOrder p) {
  return law.kind() == LawKind::Geometric ? renyi_geometric(law.lambda(), p)
                                          : renyi_symmetric_geometric(law.lambda(), p);
}

double varentropy(const LatticePMF& x) {
  const double h = shannon(x);
  detail::CompensatedSum v;
  for (double w : x.weights()) {
    if (w > 0.0) {
      const double d = std::log(w) + h;
      v.add(w * d * d);
    }
  }
  return v.value();
}

double varentropy_geometric(double lambda) {
  require_lambda(lambda);
  const double l = std::log(lambda);
  const double q = 1.0 - lambda;
  return lambda * l * l / (q * q);
}

double varentropy_symmetric_geometric(double lambda) {
  require_lambda(lambda);
  // 2λ/(1-λ)² - (2λ/((1-λ)(1+λ)))² rewritten as 2λ(1+λ²)/((1-λ)²(1+λ)²).
  const double l = std::log(lambda);
  const double a = (1.0 - lambda) * (1.0 + lambda);
  return l * l * 2.0 * lambda * (1.0 + lambda * lambda) / (a * a);
}

double varentropy(const ParametricLaw& law) {
  return law.kind() == LawKind::Geometric ? varentropy_geometric(law.lambda())
                                          : varentropy_symmetric_geometric(law.lambda());
}

InfoSummary summarize(const LatticePMF& x) {
  return {shannon(x), min_entropy(x), varentropy(x)};
}

LatticePMF tilt(const LatticePMF& x, double alpha) {
  require_positive_exponent(alpha);
  if (alpha == 1.0) return x;
  const auto w = x.weights();
  const double max_log = std::log(x.max_mass());
  std::vector<double> out(w.size(), 0.0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > 0.0) out[i] = std::exp(alpha * (std::log(w[i]) - max_log));
  }
  return LatticePMF::normalize(std::move(out), x.offset());
}

ParametricLaw tilt(const ParametricLaw& law, double alpha) {
  require_positive_exponent(alpha);
  return ParametricLaw(law.kind(), std::pow(law.lambda(), alpha));
}

double info_content(const LatticePMF& x, Index i) {
  const double m = x.mass(i);
  if (!(m > 0.0)) {
    throw Error(Errc::OutOfSupport, "index " + std::to_string(i) + " has zero mass");
  }
  return -std::log(m);
}

}  // namespace lclc
