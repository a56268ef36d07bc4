#include "lclc/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "detail/numeric.hpp"
#include "lclc/error.hpp"

namespace lclc {

namespace {

// Sums within this distance of 1 are treated as already normalized.
constexpr double kUnitSumSlack = 1e-14;

}  // namespace

LatticePMF LatticePMF::normalize(std::vector<double> weights, Index offset) {
  for (double w : weights) {
    if (!std::isfinite(w)) throw Error(Errc::BadInput, "non-finite weight");
    if (w < 0.0) throw Error(Errc::NegativeWeight, "weight " + std::to_string(w) + " < 0");
  }
  auto first = std::find_if(weights.begin(), weights.end(), [](double w) { return w > 0.0; });
  if (first == weights.end()) throw Error(Errc::AllZero, "every weight is zero");
  auto last = std::find_if(weights.rbegin(), weights.rend(), [](double w) { return w > 0.0; }).base();

  offset += static_cast<Index>(first - weights.begin());
  std::vector<double> trimmed(first, last);

  const double total = detail::sum(trimmed);
  if (std::abs(total - 1.0) > kUnitSumSlack) {
    for (double& w : trimmed) w /= total;
  }
  return LatticePMF(offset, std::move(trimmed));
}

LatticePMF LatticePMF::dirac(Index at) { return LatticePMF(at, {1.0}); }

double LatticePMF::mass(Index i) const noexcept {
  if (i < offset_ || i > last_index()) return 0.0;
  return weights_[static_cast<std::size_t>(i - offset_)];
}

double LatticePMF::max_mass() const noexcept {
  return *std::max_element(weights_.begin(), weights_.end());
}

Index LatticePMF::mode() const noexcept {
  return offset_ + static_cast<Index>(std::max_element(weights_.begin(), weights_.end()) -
                                      weights_.begin());
}

std::size_t LatticePMF::support_size() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(weights_.begin(), weights_.end(), [](double w) { return w > 0.0; }));
}

LatticePMF LatticePMF::shifted(Index shift) const { return LatticePMF(offset_ + shift, weights_); }

LatticePMF LatticePMF::reflected() const {
  std::vector<double> w(weights_.rbegin(), weights_.rend());
  return LatticePMF(-last_index(), std::move(w));
}

ParametricLaw::ParametricLaw(LawKind kind, double lambda) : kind_(kind), lambda_(lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw Error(Errc::BadLambda, "lambda must lie in (0,1), got " + std::to_string(lambda));
  }
}

double ParametricLaw::log_mass(Index n) const noexcept {
  if (kind_ == LawKind::Geometric) {
    if (n < 0) return -detail::kInf;
    return std::log1p(-lambda_) + static_cast<double>(n) * std::log(lambda_);
  }
  return std::log1p(-lambda_) - std::log1p(lambda_) +
         static_cast<double>(std::abs(n)) * std::log(lambda_);
}

double ParametricLaw::mass(Index n) const noexcept { return std::exp(log_mass(n)); }

double ParametricLaw::max_mass() const noexcept {
  return kind_ == LawKind::Geometric ? 1.0 - lambda_ : (1.0 - lambda_) / (1.0 + lambda_);
}

bool is_log_concave(const LatticePMF& x) {
  const auto w = x.weights();
  if (std::any_of(w.begin(), w.end(), [](double v) { return v <= 0.0; })) return false;
  for (std::size_t i = 1; i + 1 < w.size(); ++i) {
    const double lhs = 2.0 * std::log(w[i]);
    const double rhs = std::log(w[i - 1]) + std::log(w[i + 1]);
    if (lhs < rhs - 1e-12 * std::max(1.0, std::abs(lhs))) return false;
  }
  return true;
}

Direction monotonicity(const LatticePMF& x) {
  const auto w = x.weights();
  bool increasing = true;
  bool decreasing = true;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (!(w[i] > 0.0 && w[i + 1] > 0.0)) continue;
    if (w[i + 1] < w[i]) increasing = false;
    if (w[i + 1] > w[i]) decreasing = false;
  }
  if (increasing && decreasing) return Direction::Both;
  if (increasing) return Direction::Increasing;
  if (decreasing) return Direction::Decreasing;
  return Direction::Neither;
}

std::optional<double> symmetry_center(const LatticePMF& x, double tol) {
  // A trimmed pmf can only be symmetric about the midpoint of its window.
  const auto w = x.weights();
  for (std::size_t i = 0, j = w.size() - 1; i < j; ++i, --j) {
    if (std::abs(w[i] - w[j]) > tol) return std::nullopt;
  }
  return 0.5 * static_cast<double>(x.offset() + x.last_index());
}

bool is_integer_symmetric(const LatticePMF& x) {
  return symmetry_center(x).has_value() && x.size() % 2 == 1;
}

LatticePMF materialize(const ParametricLaw& law, double tail_tol) {
  if (!(tail_tol > 0.0 && tail_tol <= 1e-6)) {
    throw Error(Errc::BadTolerance, "tail_tol must lie in (0, 1e-6]");
  }
  const double lambda = law.lambda();
  const double log_lambda = std::log(lambda);
  // Discarded mass beyond N: λ^{N+1} (geometric), 2λ^{N+1}/(1+λ) (symmetric, both sides).
  const double side_factor =
      law.kind() == LawKind::Geometric ? 1.0 : 2.0 / (1.0 + lambda);
  auto tail = [&](Index n) {
    return side_factor * std::exp(static_cast<double>(n + 1) * log_lambda);
  };
  Index n = std::max<Index>(
      0, static_cast<Index>(std::floor(std::log(tail_tol / side_factor) / log_lambda)) - 1);
  while (n > 0 && tail(n - 1) < tail_tol) --n;
  while (tail(n) >= tail_tol) ++n;

  const Index lo = law.kind() == LawKind::Geometric ? 0 : -n;
  std::vector<double> w;
  w.reserve(static_cast<std::size_t>(n - lo + 1));
  for (Index i = lo; i <= n; ++i) w.push_back(law.mass(i));
  return LatticePMF::normalize(std::move(w), lo);
}

Moments mean_variance(const LatticePMF& x) {
  const auto w = x.weights();
  detail::CompensatedSum m;
  for (std::size_t k = 0; k < w.size(); ++k) {
    m.add(w[k] * static_cast<double>(x.offset() + static_cast<Index>(k)));
  }
  const double mean = m.value();
  detail::CompensatedSum v;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const double d = static_cast<double>(x.offset() + static_cast<Index>(k)) - mean;
    v.add(w[k] * d * d);
  }
  return {mean, v.value()};
}

LatticePMF difference(const LatticePMF& x, const LatticePMF& y) {
  const Index lo = x.offset() - y.last_index();
  const Index hi = x.last_index() - y.offset();
  std::vector<double> out(static_cast<std::size_t>(hi - lo + 1), 0.0);
  const auto xw = x.weights();
  const auto yw = y.weights();
  // X - Y = n  ⇔  X = n + Y.
  for (std::size_t j = 0; j < yw.size(); ++j) {
    const Index yk = y.offset() + static_cast<Index>(j);
    for (std::size_t i = 0; i < xw.size(); ++i) {
      const Index n = x.offset() + static_cast<Index>(i) - yk;
      out[static_cast<std::size_t>(n - lo)] += xw[i] * yw[j];
    }
  }
  return LatticePMF::normalize(std::move(out), lo);
}

std::vector<Index> sample(const LatticePMF& x, std::uint64_t seed, std::size_t count) {
  if (count == 0) throw Error(Errc::DomainError, "sample count must be at least 1");
  const auto w = x.weights();
  std::vector<double> cdf(w.size());
  detail::CompensatedSum acc;
  for (std::size_t k = 0; k < w.size(); ++k) {
    acc.add(w[k]);
    cdf[k] = acc.value();
  }
  const double total = cdf.back();

  std::mt19937_64 rng(seed);
  std::vector<Index> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    // 53 random mantissa bits; independent of the standard library's distributions.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    while (w[static_cast<std::size_t>(it - cdf.begin())] == 0.0) ++it;
    out.push_back(x.offset() + static_cast<Index>(it - cdf.begin()));
  }
  return out;
}

}  // namespace lclc
