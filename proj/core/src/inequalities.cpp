#include "lclc/inequalities.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "detail/numeric.hpp"
#include "lclc/error.hpp"

namespace lclc {

namespace {

constexpr double kLog2 = std::numbers::ln2;

std::string order_text(RenyiOrder o) {
  return o.is_infinite() ? std::string("inf") : format_number(o.value());
}

bool monotone_log_concave(const LatticePMF& x) {
  return is_log_concave(x) && is_monotone(monotonicity(x));
}

bool half_integer_symmetric(const LatticePMF& x) {
  return symmetry_center(x).has_value() && x.size() % 2 == 0;
}

CheckReport not_applicable(std::string name, std::string reason) {
  CheckReport r{std::move(name), 0.0, 0.0, 0.0, Verdict::NotApplicable, {}, {}};
  r.with("reason", std::move(reason));
  return r;
}

// Varentropy of a (symmetric) geometric law given log λ, robust to λ → 0 or 1.
double varentropy_from_log_lambda(LawKind kind, double log_lambda) {
  const double lambda = std::exp(log_lambda);
  if (lambda == 0.0) return 0.0;
  const double one_minus = -std::expm1(log_lambda);
  if (kind == LawKind::Geometric) {
    return lambda * log_lambda * log_lambda / (one_minus * one_minus);
  }
  const double a = one_minus * (1.0 + lambda);
  return log_lambda * log_lambda * 2.0 * lambda * (1.0 + lambda * lambda) / (a * a);
}

// Maximizes f over [lo, hi]: coarse scan, then Brent around the best node.
std::pair<double, double> maximize_unimodal(const std::function<double(double)>& f, double lo,
                                            double hi) {
  constexpr int kScan = 2000;
  int best = 0;
  double best_val = -detail::kInf;
  const double step = (hi - lo) / kScan;
  for (int i = 0; i <= kScan; ++i) {
    const double v = f(lo + step * i);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  const double a = std::max(lo, lo + step * (best - 1));
  const double b = std::min(hi, lo + step * (best + 1));
  std::uintmax_t iterations = 500;
  const auto [x, neg] = boost::math::tools::brent_find_minima(
      [&](double l) { return -f(l); }, a, b, std::numeric_limits<double>::digits, iterations);
  if (-neg >= best_val) return {x, -neg};
  return {lo + step * best, best_val};
}

}  // namespace

double log_c(RenyiOrder alpha) {
  if (alpha.is_infinite()) return 0.0;
  if (alpha.is_shannon()) return 1.0;
  if (alpha.is_zero()) return detail::kInf;
  const double a = alpha.value();
  return std::log1p(a - 1.0) / (a - 1.0);
}

GapConstant gap_constant(RenyiOrder p, RenyiOrder q) {
  if (p.is_zero() || q.is_zero()) throw Error(Errc::BadOrders, "gap constant needs p, q > 0");
  return {p, q, log_c(p) - log_c(q)};
}

CheckReport check_renyi_gap(const LatticePMF& x, RenyiOrder p, RenyiOrder q) {
  if (!(p > q) || q.is_zero()) throw Error(Errc::BadOrders, "renyi gap needs p > q > 0");
  const double hp = renyi(x, p);
  const double hq = renyi(x, q);
  const double gap = gap_constant(p, q).value;
  const double margin = hp - hq - gap;
  CheckReport r{"renyi_gap", hp, hq + gap, margin, verdict_from_margin(margin, 1e-10), {}, {}};
  r.with("p", order_text(p)).with("q", order_text(q)).with("gap", gap);
  if (!(monotone_log_concave(x) || (is_log_concave(x) && half_integer_symmetric(x)))) {
    r.verdict = Verdict::NotApplicable;
    r.with("reason", "x is not monotone log-concave");
  }
  return r;
}

CheckReport check_renyi_gap(const ParametricLaw& law, RenyiOrder p, RenyiOrder q) {
  if (!(p > q) || q.is_zero()) throw Error(Errc::BadOrders, "renyi gap needs p > q > 0");
  if (law.kind() != LawKind::Geometric) {
    return not_applicable("renyi_gap", "symmetric geometric law is not monotone");
  }
  const double hp = renyi(law, p);
  const double hq = renyi(law, q);
  const double gap = gap_constant(p, q).value;
  const double margin = hp - hq - gap;
  CheckReport r{"renyi_gap", hp, hq + gap, margin, verdict_from_margin(margin, 1e-10), {}, {}};
  r.with("p", order_text(p)).with("q", order_text(q)).with("gap", gap).with("lambda", law.lambda());
  return r;
}

CheckReport check_varentropy(const LatticePMF& x) {
  if (!is_log_concave(x)) throw Error(Errc::Unclassified, "varentropy bound needs log-concave x");
  double bound = 0.0;
  std::string cls;
  if (is_monotone(monotonicity(x))) {
    bound = 1.0;
    cls = "monotone";
  } else if (half_integer_symmetric(x)) {
    bound = 1.0;
    cls = "half_integer_symmetric";
  } else if (is_integer_symmetric(x)) {
    bound = sup_varentropy_symmetric().value;
    cls = "integer_symmetric";
  } else {
    throw Error(Errc::Unclassified, "x is neither monotone nor symmetric");
  }
  const double v = varentropy(x);
  CheckReport r{"varentropy_bound", v, bound, bound - v, verdict_from_margin(bound - v, 1e-12),
                {}, {}};
  r.with("class", cls);
  return r;
}

CheckReport check_varentropy(const ParametricLaw& law) {
  const bool geo = law.kind() == LawKind::Geometric;
  const double bound = geo ? 1.0 : sup_varentropy_symmetric().value;
  const double v = varentropy(law);
  CheckReport r{"varentropy_bound", v, bound, bound - v, verdict_from_margin(bound - v, 1e-12),
                {}, {}};
  r.with("class", geo ? "geometric" : "symmetric_geometric").with("lambda", law.lambda());
  return r;
}

CheckReport mean_mode_check(const LatticePMF& x) {
  if (!is_log_concave(x)) return not_applicable("mean_mode", "x is not log-concave");
  const double mean = mean_variance(x).mean;
  const double fl = std::floor(mean);
  const double ce = std::ceil(mean);
  const double f_fl = x.mass(static_cast<Index>(fl));
  const double f_ce = x.mass(static_cast<Index>(ce));
  const double sup = x.max_mass();
  const double e = std::numbers::e;

  const double lhs = e * std::max(f_fl, f_ce);
  CheckReport r{"mean_mode", lhs, sup, lhs - sup, verdict_from_margin(lhs - sup, 1e-12), {}, {}};
  r.with("mean", mean).with("f_floor", f_fl).with("f_ceil", f_ce);

  const double frac = mean - fl;
  double interp = 0.0;
  if (frac == 0.0) {
    interp = f_fl;
  } else if (f_fl > 0.0 && f_ce > 0.0) {
    interp = std::exp((1.0 - frac) * std::log(f_fl) + frac * std::log(f_ce));
  }
  const double lhs2 = e * interp;
  CheckReport row{"mean_mode.interpolated", lhs2, sup, lhs2 - sup,
                  verdict_from_margin(lhs2 - sup, 1e-12), {}, {}};
  row.with("ratio", lhs2 / sup);
  r.rows.push_back(std::move(row));
  r.verdict = combine({r, r.rows.front()});
  return r;
}

double rate_r(double t) {
  if (!(t > -1.0)) return detail::kInf;
  return t - std::log1p(t);
}

TailBound concentration_bound(double t, double K, Tail side) {
  if (!(t >= 0.0) || !(K > 0.0)) throw Error(Errc::DomainError, "bound needs t >= 0 and K > 0");
  const double s = side == Tail::Upper ? t : -t;
  double bound = 0.0;
  if (s / K > -1.0) bound = std::exp(-(s - K * std::log1p(s / K)));
  return {side, t, K, std::min(bound, 1.0)};
}

double empirical_tail(const LatticePMF& x, double t, Tail side) {
  const double h = shannon(x);
  detail::CompensatedSum mass;
  for (double w : x.weights()) {
    if (!(w > 0.0)) continue;
    const double info = -std::log(w);
    const bool hit = side == Tail::Upper ? info >= h + t : info <= h - t;
    if (hit) mass.add(w);
  }
  return mass.value();
}

CheckReport concentration_check(const LatticePMF& x, std::span<const double> t_grid, double K) {
  CheckReport r{"concentration", 0.0, 0.0, detail::kInf, Verdict::NotApplicable, {}, {}};
  r.with("K", K);
  for (Tail side : {Tail::Upper, Tail::Lower}) {
    for (double t : t_grid) {
      const double tail = empirical_tail(x, t, side);
      const double bound = concentration_bound(t, K, side).bound;
      CheckReport row{side == Tail::Upper ? "concentration.upper" : "concentration.lower", tail,
                      bound, bound - tail, verdict_from_margin(bound - tail, 1e-12), {}, {}};
      row.with("t", t);
      r.margin = std::min(r.margin, row.margin);
      r.rows.push_back(std::move(row));
    }
  }
  r.verdict = combine(r.rows);
  return r;
}

CheckReport sampled_concentration_check(const LatticePMF& x, std::span<const double> t_grid,
                                        double K, std::uint64_t seed, std::size_t count) {
  const auto draws = sample(x, seed, count);
  const double h = shannon(x);
  const auto n = static_cast<double>(count);
  CheckReport r{"concentration_sampled", 0.0, 0.0, detail::kInf, Verdict::NotApplicable, {}, {}};
  r.with("K", K).with("seed", static_cast<double>(seed)).with("samples", n);
  for (Tail side : {Tail::Upper, Tail::Lower}) {
    for (double t : t_grid) {
      std::size_t hits = 0;
      for (Index i : draws) {
        const double info = -std::log(x.mass(i));
        if (side == Tail::Upper ? info >= h + t : info <= h - t) ++hits;
      }
      const double est = static_cast<double>(hits) / n;
      const double bound = concentration_bound(t, K, side).bound;
      const double slack = 4.0 * std::sqrt(bound * (1.0 - bound) / n) + 1.0 / n;
      CheckReport row{side == Tail::Upper ? "concentration_sampled.upper"
                                          : "concentration_sampled.lower",
                      est, bound, bound - est, verdict_from_margin(bound - est, slack), {}, {}};
      row.with("t", t);
      r.margin = std::min(r.margin, row.margin);
      r.rows.push_back(std::move(row));
    }
  }
  r.verdict = combine(r.rows);
  return r;
}

std::vector<double> default_alpha_grid() {
  constexpr int kPoints = 200;
  std::vector<double> grid(kPoints);
  const double lo = std::log(1e-3);
  const double hi = std::log(1e3);
  for (int i = 0; i < kPoints; ++i) grid[i] = std::exp(lo + (hi - lo) * i / (kPoints - 1));
  return grid;
}

double K_constant(const LatticePMF& x, std::span<const double> alpha_grid) {
  double k = 0.0;
  for (double a : alpha_grid) k = std::max(k, varentropy(tilt(x, a)));
  return k;
}

double K_constant(const ParametricLaw& law, std::span<const double> alpha_grid) {
  const double log_lambda = std::log(law.lambda());
  double k = 0.0;
  for (double a : alpha_grid) {
    if (!(a > 0.0)) throw Error(Errc::DomainError, "tilt exponents must be positive");
    k = std::max(k, varentropy_from_log_lambda(law.kind(), a * log_lambda));
  }
  return k;
}

CheckReport epi_reversal_check(const LatticePMF& x, RenyiOrder alpha) {
  if (!(alpha >= RenyiOrder(2.0))) throw Error(Errc::BadOrders, "EPI reversal needs alpha >= 2");
  const double lhs = renyi(difference(x, x), alpha);
  const double rhs = renyi(x, alpha) + kLog2;
  CheckReport r{"epi_reversal", lhs, rhs, rhs - lhs, verdict_from_margin(rhs - lhs, 1e-10), {}, {}};
  r.with("alpha", order_text(alpha));
  if (!monotone_log_concave(x)) {
    r.verdict = Verdict::NotApplicable;
    r.with("reason", "x is not monotone log-concave");
  }
  return r;
}

CheckReport epi_reversal_check(const ParametricLaw& law, RenyiOrder alpha) {
  if (!(alpha >= RenyiOrder(2.0))) throw Error(Errc::BadOrders, "EPI reversal needs alpha >= 2");
  if (law.kind() != LawKind::Geometric) {
    return not_applicable("epi_reversal", "symmetric geometric law is not monotone");
  }
  const double lhs = renyi_symmetric_geometric(law.lambda(), alpha);
  const double rhs = renyi_geometric(law.lambda(), alpha) + kLog2;
  CheckReport r{"epi_reversal", lhs, rhs, rhs - lhs, verdict_from_margin(rhs - lhs, 1e-10), {}, {}};
  r.with("alpha", order_text(alpha)).with("lambda", law.lambda());
  return r;
}

CheckReport h2_hinf_identity_check(const LatticePMF& x) {
  const LatticePMF d = difference(x, x);
  const double lhs = renyi(x, RenyiOrder(2.0));
  const double rhs = min_entropy(d);
  const double diff = std::abs(lhs - rhs);
  CheckReport r{"h2_hinf_identity", lhs, rhs, -diff, diff <= 1e-12 ? Verdict::Pass : Verdict::Fail,
                {}, {}};
  const double at_zero = d.mass(0);
  const double peak = d.max_mass();
  const double slack = peak - at_zero;
  r.rows.push_back(CheckReport{"h2_hinf_identity.mode_at_zero", at_zero, peak, -slack,
                               slack <= 1e-15 * peak ? Verdict::Pass : Verdict::Fail, {}, {}});
  r.verdict = combine({r, r.rows.front()});
  return r;
}

ExtremalVarentropy sup_varentropy_symmetric() {
  const auto [l, v] = maximize_unimodal(
      [](double lambda) { return varentropy_symmetric_geometric(lambda); }, 1e-9, 1.0 - 1e-9);
  return {l, v};
}

double C_constant(RenyiOrder q, RenyiOrder p) {
  if (q.is_zero() || !(p >= q)) throw Error(Errc::BadOrders, "C(q,p) needs p >= q > 0");
  if (p == q) return 0.0;
  const auto [l, v] = maximize_unimodal(
      [&](double lambda) {
        return renyi_symmetric_geometric(lambda, q) - renyi_symmetric_geometric(lambda, p);
      },
      1e-9, 1.0 - 1e-9);
  return v;
}

CheckReport check_renyi_spread(const LatticePMF& x, RenyiOrder q, RenyiOrder p) {
  const double c = C_constant(q, p);
  if (!(is_log_concave(x) && is_integer_symmetric(x))) {
    return not_applicable("renyi_spread", "x is not log-concave and symmetric about an integer");
  }
  const double lhs = renyi(x, q) - renyi(x, p);
  CheckReport r{"renyi_spread", lhs, c, c - lhs, verdict_from_margin(c - lhs, 1e-9), {}, {}};
  r.with("q", order_text(q)).with("p", order_text(p));
  return r;
}

}  // namespace lclc
