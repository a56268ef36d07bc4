#include "lclc/matching.hpp"

#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>

#include "lclc/error.hpp"

namespace lclc {

namespace {

struct Objective {
  // Log of the comparator quantity at λ; monotone in λ.
  std::function<double(double)> log_value;
  double log_target;
};

MatchResult solve(const Objective& obj, double target) {
  auto f = [&](double lambda) { return obj.log_value(lambda) - obj.log_target; };
  const double f_lo = f(kMatchBracketLo);
  const double f_hi = f(kMatchBracketHi);
  if (!(f_lo * f_hi <= 0.0)) {
    throw Error(Errc::NoBracket, "target " + format_number(target) +
                                     " is outside the comparator range on the bracket");
  }
  std::uintmax_t iterations = kMatchMaxIterations;
  const auto [a, b] = boost::math::tools::bisect(
      f, kMatchBracketLo, kMatchBracketHi,
      [](double lo, double hi) { return std::abs(hi - lo) <= 1e-15; }, iterations);

  MatchResult r;
  r.lambda = 0.5 * (a + b);
  r.target = target;
  r.bracket_width = b - a;
  r.iterations = static_cast<std::size_t>(iterations);
  r.residual = std::abs(std::expm1(f(r.lambda)));
  return r;
}

void require_order(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw Error(Errc::BadOrders, "matching order must be positive");
}

}  // namespace

MatchResult match_geometric(const LatticePMF& x, double p) {
  require_order(p);
  if (x.support_size() < 2) throw Error(Errc::DiracInput, "cannot match a point mass");
  if (RenyiOrder(p).is_shannon()) {
    const double h = shannon(x);
    Objective obj{[](double l) { return std::log(renyi_geometric(l, RenyiOrder::shannon())); },
                  std::log(h)};
    return solve(obj, h);
  }
  const double log_target = log_power_sum(x, p);
  Objective obj{[p](double l) { return log_power_sum(ParametricLaw::geometric(l), p); },
                log_target};
  return solve(obj, std::exp(log_target));
}

MatchResult match_symmetric_geometric(const LatticePMF& x, double p) {
  require_order(p);
  if (x.support_size() < 2) throw Error(Errc::DiracInput, "cannot match a point mass");
  if (RenyiOrder(p).is_shannon()) {
    const double h = shannon(x);
    Objective obj{
        [](double l) { return std::log(renyi_symmetric_geometric(l, RenyiOrder::shannon())); },
        std::log(h)};
    return solve(obj, h);
  }
  const double log_target = log_power_sum(x, p);
  Objective obj{[p](double l) { return log_power_sum(ParametricLaw::symmetric_geometric(l), p); },
                log_target};
  return solve(obj, std::exp(log_target));
}

LawKind comparator_kind(const LatticePMF& x) {
  if (is_monotone(monotonicity(x))) return LawKind::Geometric;
  if (is_integer_symmetric(x)) return LawKind::SymmetricGeometric;
  throw Error(Errc::Unclassified, "x is neither monotone nor symmetric about an integer");
}

CheckReport renyi_dominance_report(const LatticePMF& x, double p, std::span<const double> q_grid) {
  const LawKind kind = comparator_kind(x);
  const MatchResult m =
      kind == LawKind::Geometric ? match_geometric(x, p) : match_symmetric_geometric(x, p);
  const ParametricLaw z(kind, m.lambda);

  CheckReport r{"renyi_dominance", 0.0, 0.0, std::numeric_limits<double>::infinity(), Verdict::NotApplicable, {}, {}};
  r.with("p", p)
      .with("comparator", kind == LawKind::Geometric ? "geometric" : "symmetric_geometric")
      .with("lambda", m.lambda)
      .with("residual", m.residual);
  for (double q : q_grid) {
    const RenyiOrder order(q);
    const double hx = renyi(x, order);
    const double hz = renyi(z, order);
    // q ≥ p: H_q(X) ≥ H_q(Z); q ≤ p: H_q(X) ≤ H_q(Z). q = p satisfies both.
    double margin = q >= p ? hx - hz : hz - hx;
    if (q == p) margin = -std::abs(hx - hz);
    CheckReport row{q >= p ? "renyi_dominance.q_ge_p" : "renyi_dominance.q_le_p",
                    hx, hz, margin, verdict_from_margin(margin, 1e-9), {}, {}};
    row.with("q", q);
    r.margin = std::min(r.margin, margin);
    r.rows.push_back(std::move(row));
  }
  r.verdict = combine(r.rows);
  return r;
}

}  // namespace lclc
