#include "lclc/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "detail/numeric.hpp"
#include "lclc/entropy.hpp"
#include "lclc/error.hpp"

namespace lclc {

namespace {

constexpr double kTieTol = 1e-12;

// ∫ u^e du evaluated at u.
double antiderivative(double u, double e) {
  if (e == -1.0) return std::log(u);
  return std::pow(u, e + 1.0) / (e + 1.0);
}

double segment_integral(double lo, double hi, double coef, double e) {
  if (!(lo < hi)) return 0.0;
  return coef * (antiderivative(hi, e) - antiderivative(lo, e));
}

// Sorted union of the inputs plus midpoints of consecutive distinct values.
std::vector<double> with_midpoints(std::vector<double> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i + 1 < n; ++i) pts.push_back(0.5 * (pts[i] + pts[i + 1]));
  std::sort(pts.begin(), pts.end());
  return pts;
}

}  // namespace

LevelCount::LevelCount(std::span<const double> values) {
  std::vector<double> v;
  for (double x : values) {
    if (x > 0.0) v.push_back(x);
  }
  std::sort(v.begin(), v.end());
  std::size_t below = 0;  // entries ≤ previous level
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0 && v[i] == v[i - 1]) continue;
    counts_.push_back(v.size() - below);
    levels_.push_back(v[i]);
    below = static_cast<std::size_t>(std::upper_bound(v.begin(), v.end(), v[i]) - v.begin());
  }
}

std::size_t LevelCount::operator()(double t) const noexcept {
  auto it = std::upper_bound(levels_.begin(), levels_.end(), t);
  if (it == levels_.end()) return 0;
  return counts_[static_cast<std::size_t>(it - levels_.begin())];
}

double LevelCount::integral() const noexcept {
  detail::CompensatedSum s;
  double prev = 0.0;
  for (std::size_t j = 0; j < levels_.size(); ++j) {
    s.add(static_cast<double>(counts_[j]) * (levels_[j] - prev));
    prev = levels_[j];
  }
  return s.value();
}

double LevelCount::layer_cake(double t) const {
  detail::CompensatedSum s;
  double prev = 0.0;
  for (std::size_t j = 0; j < levels_.size(); ++j) {
    s.add(static_cast<double>(counts_[j]) * (std::pow(levels_[j], t) - std::pow(prev, t)));
    prev = levels_[j];
  }
  return s.value();
}

LevelCount level_count(const LatticePMF& x) { return LevelCount(x); }

double GeometricComparator::value(Index k) const noexcept {
  return scale * std::pow(ratio, static_cast<double>(k));
}

std::size_t GeometricComparator::level_count(double t) const noexcept {
  if (t >= scale) return 0;
  if (!(t > 0.0)) return std::numeric_limits<std::size_t>::max();
  auto n = static_cast<Index>(std::ceil(std::log(t / scale) / std::log(ratio)));
  n = std::max<Index>(n, 0);
  while (value(n) > t) ++n;
  while (n > 0 && !(value(n - 1) > t)) --n;
  return static_cast<std::size_t>(n);
}

Crossing crossing_interval(const LatticePMF& x, const GeometricComparator& z,
                           double horizon_tol) {
  // Log-concavity is what guarantees a single run {a..b}; it is not enforced
  // here so that the sign pattern can also be inspected on other decreasing x.
  const Direction dir = monotonicity(x);
  if (!(dir == Direction::Decreasing || dir == Direction::Both)) {
    throw Error(Errc::NotMonotoneLogConcave, "crossing needs a non-increasing x");
  }
  if (!(z.scale > 0.0 && z.ratio > 0.0 && z.ratio < 1.0)) {
    throw Error(Errc::BadLambda, "comparator needs C > 0 and ratio in (0,1)");
  }
  const auto w = x.weights();
  Index a = -1;
  Index b = -1;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] >= z.value(static_cast<Index>(k)) * (1.0 - kTieTol)) {
      if (a < 0) a = static_cast<Index>(k);
      b = static_cast<Index>(k);
    }
  }
  if (a < 0) throw Error(Errc::NoCrossing, "x_k < z_k for every k");

  Crossing c;
  c.a = a;
  c.b = b;
  c.b_unbounded = b == static_cast<Index>(w.size()) - 1 && z.value(b + 1) < horizon_tol;
  c.interval = {z.value(b), w[static_cast<std::size_t>(a)]};
  return c;
}

CheckReport crossing_verify(const LatticePMF& x, const GeometricComparator& z) {
  const Crossing c = crossing_interval(x, z);
  const LevelCount fx(x);

  std::vector<double> pts(fx.levels().begin(), fx.levels().end());
  const auto horizon = static_cast<Index>(x.size()) + 3;
  for (Index k = 0; k <= horizon; ++k) pts.push_back(z.value(k));
  pts.push_back(0.5 * std::min(z.value(horizon), x.weights().back()));
  pts.push_back(std::max(z.scale, x.max_mass()) * 1.5);
  pts = with_midpoints(std::move(pts));

  // Counts are compared with t nudged by a relative 1e-12 in the lenient
  // direction, so values equal up to rounding count as ties.
  const double up = 1.0 + kTieTol;
  const double down = 1.0 - kTieTol;
  std::size_t violations = 0;
  double worst_t = 0.0;
  for (double t : pts) {
    const bool ok = c.interval.contains(t) ? z.level_count(t * up) <= fx(t * down)
                                           : z.level_count(t * down) >= fx(t * up);
    if (!ok) {
      if (violations == 0) worst_t = t;
      ++violations;
    }
  }

  CheckReport r{"crossing.sign_pattern", static_cast<double>(violations), 0.0,
                -static_cast<double>(violations),
                violations == 0 ? Verdict::Pass : Verdict::Fail, {}, {}};
  r.with("a", static_cast<double>(c.a))
      .with("b", static_cast<double>(c.b))
      .with("b_unbounded", c.b_unbounded ? "true" : "false")
      .with("I_lo", c.interval.lo)
      .with("I_hi", c.interval.hi)
      .with("samples", static_cast<double>(pts.size()));
  if (violations > 0) r.with("first_violation_t", worst_t);
  return r;
}

FoldedLevels fold_symmetric(const LatticePMF& x) {
  if (!is_integer_symmetric(x)) {
    throw Error(Errc::NotSymmetric, "fold needs a pmf symmetric about an integer");
  }
  const auto w = x.weights();
  const std::size_t mid = w.size() / 2;
  FoldedLevels out{LevelCount(w), LevelCount(w.subspan(mid)), {}};
  const double center_mass = w[mid];

  std::vector<double> pts(out.full.levels().begin(), out.full.levels().end());
  pts.push_back(0.5 * out.full.levels().front());
  pts = with_midpoints(std::move(pts));

  std::size_t checked = 0;
  std::size_t violations = 0;
  for (double t : pts) {
    if (!(t < center_mass)) continue;
    ++checked;
    const auto lhs = static_cast<long long>(out.full(t));
    const auto rhs = 2 * static_cast<long long>(out.half(t)) - 1;
    if (lhs != rhs) ++violations;
  }
  out.report = CheckReport{"fold.identity", static_cast<double>(violations), 0.0,
                           -static_cast<double>(violations),
                           violations == 0 ? Verdict::Pass : Verdict::Fail, {}, {}};
  out.report.with("checked", static_cast<double>(checked))
      .with("center", static_cast<double>(x.offset() + static_cast<Index>(mid)));
  return out;
}

CheckReport cake_layer_check(const LatticePMF& x, double t) {
  if (!(t >= 1.0) || !std::isfinite(t)) throw Error(Errc::DomainError, "layer cake needs t >= 1");
  const double lhs = power_sum(x, t);
  const double rhs = LevelCount(x).layer_cake(t);
  const double margin = std::abs(lhs - rhs);
  CheckReport r{"layer_cake", lhs, rhs, margin, margin < 1e-12 ? Verdict::Pass : Verdict::Fail,
                {}, {}};
  r.with("t", t);
  return r;
}

PowerDensity::PowerDensity(std::vector<PowerSegment> segments) : segments_(std::move(segments)) {}

PowerDensity::PowerDensity(const LevelCount& steps) {
  double prev = 0.0;
  for (std::size_t j = 0; j < steps.levels().size(); ++j) {
    segments_.push_back({prev, steps.levels()[j], static_cast<double>(steps.counts()[j]), 0.0});
    prev = steps.levels()[j];
  }
}

double PowerDensity::mass() const { return moment(0.0); }

double PowerDensity::moment(double k) const {
  detail::CompensatedSum s;
  for (const auto& seg : segments_) s.add(segment_integral(seg.lo, seg.hi, seg.coef, seg.exponent + k));
  return s.value();
}

double PowerDensity::hinge(double t) const {
  detail::CompensatedSum s;
  for (const auto& seg : segments_) {
    if (seg.hi <= t) continue;
    const double lo = std::max(seg.lo, t);
    s.add(segment_integral(lo, seg.hi, seg.coef, seg.exponent + 1.0));
    s.add(-t * segment_integral(lo, seg.hi, seg.coef, seg.exponent));
  }
  return s.value();
}

std::vector<double> PowerDensity::breakpoints() const {
  std::vector<double> pts;
  for (const auto& seg : segments_) {
    pts.push_back(seg.lo);
    pts.push_back(seg.hi);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

PowerDensity PowerDensity::power(double p) const {
  if (!(p > 0.0) || !std::isfinite(p)) throw Error(Errc::DomainError, "power must be positive");
  // y = u^p: c u^e du = (c/p) y^{(e+1)/p - 1} dy.
  std::vector<PowerSegment> out;
  out.reserve(segments_.size());
  for (const auto& seg : segments_) {
    out.push_back({std::pow(seg.lo, p), std::pow(seg.hi, p), seg.coef / p,
                   (seg.exponent + 1.0) / p - 1.0});
  }
  return PowerDensity(std::move(out));
}

PowerDensity power_transform_density(const LevelCount& steps, double p) {
  return PowerDensity(steps).power(p);
}

std::vector<double> default_hinge_grid(const PowerDensity& u, const PowerDensity& v) {
  std::vector<double> pts = u.breakpoints();
  const auto vb = v.breakpoints();
  pts.insert(pts.end(), vb.begin(), vb.end());
  pts.push_back(0.0);
  return with_midpoints(std::move(pts));
}

CheckReport convex_order_check(const PowerDensity& u, const PowerDensity& v,
                               std::span<const double> hinge_grid, double mean_tol) {
  const double mu = u.mean();
  const double mv = v.mean();
  if (std::abs(mu - mv) > mean_tol) {
    throw Error(Errc::MeanMismatch, "means differ: " + format_number(mu) + " vs " + format_number(mv));
  }
  std::vector<double> grid;
  if (hinge_grid.empty()) {
    grid = default_hinge_grid(u, v);
  } else {
    grid.assign(hinge_grid.begin(), hinge_grid.end());
  }
  double worst = detail::kInf;
  double worst_t = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  for (double t : grid) {
    const double hu = u.hinge(t);
    const double hv = v.hinge(t);
    if (hv - hu < worst) {
      worst = hv - hu;
      worst_t = t;
      lhs = hv;
      rhs = hu;
    }
  }
  CheckReport r{"convex_order.v_majorizes_u", lhs, rhs, worst, verdict_from_margin(worst, 1e-10),
                {}, {}};
  r.with("worst_t", worst_t).with("hinges", static_cast<double>(grid.size()));
  r.with("mean_u", mu).with("mean_v", mv);
  return r;
}

CheckReport convex_order_check(const LevelCount& u, const LevelCount& v,
                               std::span<const double> hinge_grid, double mean_tol) {
  return convex_order_check(PowerDensity(u), PowerDensity(v), hinge_grid, mean_tol);
}

}  // namespace lclc
