#include "lclc/lyapunov.hpp"

#include <algorithm>
#include <cmath>

#include "detail/numeric.hpp"
#include "lclc/entropy.hpp"
#include "lclc/error.hpp"

namespace lclc {

namespace {

void require_positive(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw Error(Errc::DomainError, "t must be positive");
}

// Variance of log wᵢ under the law proportional to wᵢᵗ (two-pass).
double tilted_log_variance(std::span<const double> w, double t) {
  double max_log = -detail::kInf;
  for (double v : w) {
    if (v > 0.0) max_log = std::max(max_log, std::log(v));
  }
  detail::CompensatedSum z, m;
  for (double v : w) {
    if (v > 0.0) {
      const double l = std::log(v);
      const double e = std::exp(t * (l - max_log));
      z.add(e);
      m.add(e * l);
    }
  }
  const double norm = z.value();
  const double mean = m.value() / norm;
  detail::CompensatedSum var;
  for (double v : w) {
    if (v > 0.0) {
      const double l = std::log(v);
      const double d = l - mean;
      var.add(std::exp(t * (l - max_log)) * d * d);
    }
  }
  return var.value() / norm;
}

double max_phi_second_on_grid(std::span<const double> w, const std::vector<double>& grid,
                              double& at, double& max_tilted_v) {
  double best = -detail::kInf;
  for (double t : grid) {
    const double d2 = phi_second_derivative(w, t);
    max_tilted_v = std::max(max_tilted_v, t * t * d2 + 1.0);
    if (d2 > best) {
      best = d2;
      at = t;
    }
  }
  return best;
}

void consider(WitnessSearch& out, std::vector<double> weights, const std::vector<double>& grid,
              double threshold) {
  double at = 0.0;
  const double d2 = max_phi_second_on_grid(weights, grid, at, out.max_tilted_varentropy);
  ++out.candidates;
  if (d2 > out.max_phi_second) out.max_phi_second = d2;
  if (d2 > threshold && (!out.found || d2 > out.phi_second)) {
    const auto offset = -static_cast<Index>(weights.size() / 2);
    out.found = true;
    out.pmf = LatticePMF::normalize(std::move(weights), offset);
    out.t = at;
    out.phi_second = d2;
  }
}

}  // namespace

double phi(std::span<const double> weights, double t) {
  require_positive(t);
  return std::log(t) + log_power_sum(weights, t);
}

double phi(const LatticePMF& x, double t) { return phi(x.weights(), t); }

double phi(const ParametricLaw& law, double t) {
  require_positive(t);
  return std::log(t) + log_power_sum(law, t);
}

double phi_second_derivative(std::span<const double> weights, double t) {
  require_positive(t);
  return tilted_log_variance(weights, t) - 1.0 / (t * t);
}

double phi_second_derivative(const LatticePMF& x, double t) {
  return phi_second_derivative(x.weights(), t);
}

double phi_second_derivative(const ParametricLaw& law, double t) {
  require_positive(t);
  const double log_lambda = std::log(law.lambda());
  const double lt = std::exp(t * log_lambda);
  const double l2 = log_lambda * log_lambda;
  if (law.kind() == LawKind::Geometric) {
    // (λᵗ log²λᵗ - (1-λᵗ)²) / ((1-λᵗ) t)²
    const double one_minus = -std::expm1(t * log_lambda);
    const double llt = t * log_lambda;
    return (lt * llt * llt - one_minus * one_minus) / (one_minus * t * one_minus * t);
  }
  const double minus = -std::expm1(t * log_lambda);
  const double plus = 1.0 + lt;
  return -1.0 / (t * t) + lt * l2 * (1.0 / (plus * plus) + 1.0 / (minus * minus));
}

std::vector<double> geometric_grid(double t_min, double t_max, std::size_t n_points) {
  if (!(t_min > 0.0 && t_min < t_max) || n_points < 3) {
    throw Error(Errc::DomainError, "grid needs 0 < t_min < t_max and at least 3 points");
  }
  std::vector<double> grid(n_points);
  const double lo = std::log(t_min);
  const double step = (std::log(t_max) - lo) / static_cast<double>(n_points - 1);
  for (std::size_t i = 0; i < n_points; ++i) grid[i] = std::exp(lo + step * static_cast<double>(i));
  grid.front() = t_min;
  grid.back() = t_max;
  return grid;
}

ConcavityReport check_concavity(const LatticePMF& x, double t_min, double t_max,
                                std::size_t n_points, double tol) {
  ConcavityReport r;
  r.grid = geometric_grid(t_min, t_max, n_points);
  r.phi.reserve(n_points);
  r.phi_second.reserve(n_points);
  double scale = 1.0;
  for (double t : r.grid) {
    r.phi.push_back(phi(x, t));
    r.phi_second.push_back(phi_second_derivative(x, t));
    scale = std::max(scale, std::abs(r.phi.back()));
  }

  r.max_slope_change = -detail::kInf;
  r.max_phi_second = -detail::kInf;
  double worst = -detail::kInf;
  std::size_t worst_at = 0;
  for (std::size_t i = 1; i + 1 < n_points; ++i) {
    const double left = (r.phi[i] - r.phi[i - 1]) / (r.grid[i] - r.grid[i - 1]);
    const double right = (r.phi[i + 1] - r.phi[i]) / (r.grid[i + 1] - r.grid[i]);
    const double change = (right - left) / scale;
    r.max_slope_change = std::max(r.max_slope_change, change);
    r.max_phi_second = std::max(r.max_phi_second, r.phi_second[i]);
    const double excess = std::max(change, r.phi_second[i]);
    if (excess > worst) {
      worst = excess;
      worst_at = i;
    }
  }
  r.concave = r.max_slope_change <= tol && r.max_phi_second <= tol;
  if (!r.concave) {
    r.witness = std::array<double, 3>{r.grid[worst_at - 1], r.grid[worst_at], r.grid[worst_at + 1]};
  }
  return r;
}

double chord_gap(const LatticePMF& x, double p, double q, double s) {
  return phi(x, (1.0 - s) * p + s * q) - (1.0 - s) * phi(x, p) - s * phi(x, q);
}

double extended_phi(std::span<const double> y, double gamma, double t) {
  if (!(gamma > 0.0)) throw Error(Errc::DomainError, "gamma must be positive");
  if (!(t > -gamma)) throw Error(Errc::DomainError, "extended phi needs t > -gamma");
  if (y.empty() || std::any_of(y.begin(), y.end(), [](double v) { return !(v > 0.0); })) {
    throw Error(Errc::DomainError, "sequence entries must be positive");
  }
  detail::CompensatedSum s;
  for (double v : y) s.add(std::pow(v, t / gamma));
  return std::log((t + gamma) * s.value());
}

CheckReport counterexample_check(double lambda, double gamma) {
  if (!(lambda > 0.0) || !(gamma > 0.0)) {
    throw Error(Errc::DomainError, "counterexample needs lambda > 0 and gamma > 0");
  }
  const std::array<double, 2> y{lambda, 1.0 + lambda};
  const double g2 = gamma * gamma;
  const double printed_lhs = 4.0 * g2 * (2.0 * lambda + 1.0);
  const double rhs = 6.0 * g2 * (lambda * lambda + (1.0 + lambda) * (1.0 + lambda));
  const double exact_lhs = 4.0 * g2 * (2.0 * lambda + 1.0) * (2.0 * lambda + 1.0);

  const double two_phi_mid = 2.0 * extended_phi(y, gamma, gamma);
  const double phi_ends = extended_phi(y, gamma, 0.0) + extended_phi(y, gamma, 2.0 * gamma);

  CheckReport printed{"counterexample.printed_form", printed_lhs, rhs, rhs - printed_lhs,
                      printed_lhs < rhs ? Verdict::Pass : Verdict::Fail, {}, {}};
  CheckReport squared{"counterexample.squared_form", exact_lhs, rhs, rhs - exact_lhs,
                      exact_lhs < rhs ? Verdict::Pass : Verdict::Fail, {}, {}};
  CheckReport exact{"counterexample.exact_phi", two_phi_mid, phi_ends, phi_ends - two_phi_mid,
                    two_phi_mid < phi_ends ? Verdict::Pass : Verdict::Fail, {}, {}};

  CheckReport r{"counterexample.concavity_violated", printed_lhs, rhs, phi_ends - two_phi_mid,
                exact.verdict, {}, {}};
  r.with("lambda", lambda).with("gamma", gamma);
  r.rows = {printed, squared, exact};
  return r;
}

WitnessSearch scan_three_atom_symmetric(std::size_t n_values, double threshold) {
  const auto grid = geometric_grid(kConcavityGridMin, kConcavityGridMax, kConcavityGridPoints);
  WitnessSearch out;
  for (std::size_t k = 1; k < n_values; ++k) {
    const double a = 0.5 * static_cast<double>(k) / static_cast<double>(n_values);
    std::vector<double> w{a, 1.0 - 2.0 * a, a};
    if (!is_log_concave(LatticePMF::normalize(w, -1))) continue;
    consider(out, std::move(w), grid, threshold);
  }
  return out;
}

WitnessSearch scan_symmetric_log_affine(int half_width, std::size_t n_values, double threshold) {
  if (half_width < 1) throw Error(Errc::DomainError, "half_width must be at least 1");
  const auto grid = geometric_grid(kConcavityGridMin, kConcavityGridMax, kConcavityGridPoints);
  WitnessSearch out;
  for (std::size_t k = 1; k < n_values; ++k) {
    const double a = static_cast<double>(k) / static_cast<double>(n_values);
    std::vector<double> w;
    for (int i = -half_width; i <= half_width; ++i) w.push_back(std::pow(a, std::abs(i)));
    consider(out, std::move(w), grid, threshold);
  }
  return out;
}

}  // namespace lclc
