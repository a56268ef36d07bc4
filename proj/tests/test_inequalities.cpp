#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "generators.hpp"
#include "lclc/entropy.hpp"
#include "lclc/error.hpp"
#include "lclc/inequalities.hpp"
#include "near.hpp"

using namespace lclc;
using testgen::near;

namespace {

const double kInf = std::numeric_limits<double>::infinity();
const double kE = std::numbers::e;
const std::vector<double> kTGrid{0.25, 0.5, 1.0, 2.0};

const CheckReport* row(const CheckReport& r, const std::string& name) {
  for (const auto& x : r.rows) {
    if (x.name == name) return &x;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("gap constants") {
  CHECK(near(gap_constant(RenyiOrder::infinity(), RenyiOrder::shannon()).value, -1.0, 1e-15));
  CHECK(gap_constant(RenyiOrder(2.0), RenyiOrder(2.0)).value == 0.0);
  CHECK(near(gap_constant(RenyiOrder(2.0), RenyiOrder(1.0)).value, std::log(2.0) - 1.0, 1e-15));
  CHECK(near(log_c(RenyiOrder(3.0)), std::log(3.0) / 2.0, 1e-15));
  CHECK(std::abs(gap_constant(RenyiOrder(1.0 + 1e-6), RenyiOrder(1.0)).value) < 1e-5);
  CHECK(std::abs(gap_constant(RenyiOrder(1e9), RenyiOrder::infinity()).value) < 1e-5);
}

TEST_CASE("Renyi gap") {
  auto sharp = check_renyi_gap(ParametricLaw::geometric(0.999), RenyiOrder(3.0), RenyiOrder(1.5));
  CHECK(sharp.passed());
  CHECK(sharp.margin > 0.0);
  CHECK(sharp.margin < 0.01);

  auto dirac = check_renyi_gap(LatticePMF::dirac(0), RenyiOrder(3.0), RenyiOrder(1.5));
  CHECK(dirac.passed());
  CHECK(near(dirac.margin, -gap_constant(RenyiOrder(3.0), RenyiOrder(1.5)).value, 1e-15));

  // (0.5, 0.3, 0.2) is decreasing but not log-concave (0.3² < 0.5·0.2), so
  // the numbers are reported without a verdict.
  auto x = LatticePMF::normalize({0.5, 0.3, 0.2});
  auto r = check_renyi_gap(x, RenyiOrder::infinity(), RenyiOrder::shannon());
  CHECK(r.verdict == Verdict::NotApplicable);
  CHECK(r.margin > 0.0);
  CHECK(near(r.margin, min_entropy(x) - shannon(x) + 1.0, 1e-14));
  auto lc = LatticePMF::normalize({0.5, 0.3, 0.15});
  CHECK(check_renyi_gap(lc, RenyiOrder::infinity(), RenyiOrder::shannon()).passed());

  auto nonmono = check_renyi_gap(LatticePMF::normalize({0.2, 0.6, 0.2}), RenyiOrder(2.0), RenyiOrder(1.0));
  CHECK(nonmono.verdict == Verdict::NotApplicable);
  CHECK_THROWS_AS(check_renyi_gap(x, RenyiOrder(1.0), RenyiOrder(2.0)), Error);
  CHECK(check_renyi_gap(LatticePMF::normalize({0.3, 0.7, 0.7, 0.3}), RenyiOrder(2.0), RenyiOrder(1.0)).passed());
}

TEST_CASE("varentropy bound") {
  auto g = check_varentropy(ParametricLaw::geometric(0.99));
  CHECK(g.passed());
  CHECK(near(g.lhs, varentropy_geometric(0.99), 1e-15));
  CHECK(g.margin < 1e-4);

  auto u = check_varentropy(LatticePMF::normalize(std::vector<double>(10, 1.0)));
  CHECK(u.passed());
  CHECK(near(u.lhs, 0.0, 1e-15));
  CHECK(near(u.margin, 1.0, 1e-15));

  const auto vs = sup_varentropy_symmetric();
  auto s = check_varentropy(ParametricLaw::symmetric_geometric(vs.lambda_star));
  CHECK(s.passed());
  CHECK(s.margin < 1e-6);
  CHECK(check_varentropy(LatticePMF::normalize({0.2, 0.6, 0.2})).passed());
  CHECK_THROWS_AS(check_varentropy(LatticePMF::normalize({0.4, 0.1, 0.4, 0.1})), Error);
}

TEST_CASE("mean and mode") {
  auto g = mean_mode_check(materialize(ParametricLaw::geometric(0.5)));
  CHECK(g.passed());
  CHECK(near(g.rhs, 0.5, 1e-15));
  CHECK(g.lhs >= kE * 0.25);
  auto d = mean_mode_check(LatticePMF::dirac(3));
  CHECK(d.passed());
  CHECK(near(d.margin, kE - 1.0, 1e-15));
}

TEST_CASE("rate function and concentration bounds") {
  CHECK(rate_r(0.0) == 0.0);
  CHECK(near(rate_r(1.0), 1.0 - std::log(2.0), 1e-15));
  CHECK(rate_r(-2.0) == kInf);
  CHECK(rate_r(-1.0) == kInf);

  CHECK(concentration_bound(1.0, 1.0, Tail::Lower).bound == 0.0);
  CHECK(near(concentration_bound(0.0, 1.0, Tail::Upper).bound, 1.0, 1e-15));
  CHECK(near(concentration_bound(0.0, 1.0, Tail::Lower).bound, 1.0, 1e-15));
  const double vs = sup_varentropy_symmetric().value;
  CHECK(near(concentration_bound(2.0, vs, Tail::Upper).bound, std::pow(1.0 + 2.0 / vs, vs) * std::exp(-2.0),
             1e-14));
  CHECK_THROWS_AS(concentration_bound(-1.0, 1.0, Tail::Upper), Error);
  CHECK_THROWS_AS(concentration_bound(1.0, 0.0, Tail::Upper), Error);
}

TEST_CASE("exact tails of a geometric law") {
  auto g = materialize(ParametricLaw::geometric(0.9));
  for (double t : {0.5, 1.0, 2.0}) {
    for (Tail side : {Tail::Upper, Tail::Lower}) {
      CHECK(empirical_tail(g, t, side) <= concentration_bound(t, 1.0, side).bound + 1e-12);
    }
  }
  CHECK(concentration_check(g, kTGrid, 1.0).passed());
  auto mc = sampled_concentration_check(g, kTGrid, 1.0, 5, 20000);
  CHECK(mc.passed());
}

TEST_CASE("K constant") {
  const auto grid = default_alpha_grid();
  CHECK(grid.size() == 200);
  CHECK(near(grid.front(), 1e-3, 1e-15));
  CHECK(near(grid.back(), 1e3, 1e-9));
  CHECK(K_constant(LatticePMF::normalize(std::vector<double>(6, 1.0)), grid) == 0.0);
  const double k9 = K_constant(ParametricLaw::geometric(0.9), grid);
  CHECK(k9 < 1.0);
  CHECK(k9 > 0.999);
  CHECK(near(k9, varentropy_geometric(std::pow(0.9, grid.front())), 1e-12));
  // Truncation caps the support, so small tilts of the explicit pmf flatten out.
  CHECK(K_constant(materialize(ParametricLaw::geometric(0.9)), grid) < 1.0);
}

TEST_CASE("entropy power reversal") {
  auto sharp = epi_reversal_check(ParametricLaw::geometric(0.999), RenyiOrder(2.0));
  CHECK(sharp.passed());
  CHECK(sharp.margin < 0.01);
  auto x = LatticePMF::normalize({0.5, 0.3, 0.2});
  auto r = epi_reversal_check(x, RenyiOrder(2.0));
  CHECK(r.verdict == Verdict::NotApplicable);
  CHECK(r.margin > 0.0);
  CHECK(epi_reversal_check(x, RenyiOrder::infinity()).margin > 0.0);
  auto lc = LatticePMF::normalize({0.5, 0.3, 0.15});
  CHECK(epi_reversal_check(lc, RenyiOrder(2.0)).passed());
  CHECK(epi_reversal_check(lc, RenyiOrder::infinity()).passed());
  CHECK(epi_reversal_check(LatticePMF::dirac(0), RenyiOrder(2.0)).passed());
  CHECK(epi_reversal_check(LatticePMF::normalize({0.2, 0.6, 0.2}), RenyiOrder(2.0)).verdict ==
        Verdict::NotApplicable);
}

TEST_CASE("collision identity") {
  auto r = h2_hinf_identity_check(LatticePMF::normalize({0.5, 0.3, 0.2}));
  CHECK(r.passed());
  REQUIRE(row(r, "h2_hinf_identity.mode_at_zero"));
}

TEST_CASE("symmetric extremal varentropy and spread constants") {
  const auto vs = sup_varentropy_symmetric();
  CHECK(near(vs.value, 1.16923, 1e-3));
  CHECK(near(vs.value, varentropy_symmetric_geometric(vs.lambda_star), 1e-15));
  for (double l = 0.01; l < 1.0; l += 0.01) CHECK(varentropy_symmetric_geometric(l) <= vs.value + 1e-12);

  CHECK(C_constant(RenyiOrder(2.0), RenyiOrder(2.0)) == 0.0);
  const double c1inf = C_constant(RenyiOrder::shannon(), RenyiOrder::infinity());
  CHECK(std::isfinite(c1inf));
  CHECK(c1inf > 0.0);
  const double c12 = C_constant(RenyiOrder::shannon(), RenyiOrder(2.0));
  CHECK(c12 >= renyi_symmetric_geometric(0.5, RenyiOrder::shannon()) -
                   renyi_symmetric_geometric(0.5, RenyiOrder(2.0)));
  CHECK_THROWS_AS(C_constant(RenyiOrder(2.0), RenyiOrder(1.0)), Error);
}

TEST_CASE("property: concentration bound shape") {
  testgen::Rng rng(61);
  for (int i = 0; i < 500; ++i) {
    const double K = rng.log_uniform(0.05, 20.0);
    double prev = 2.0;
    for (double t = 0.0; t < 30.0; t += 0.37) {
      const double up = concentration_bound(t, K, Tail::Upper).bound;
      CHECK(up > 0.0);
      CHECK(up <= 1.0);
      CHECK(up <= prev);
      prev = up;
      const double lo = concentration_bound(t, K, Tail::Lower).bound;
      CHECK(lo >= 0.0);
      CHECK(lo <= 1.0);
    }
    CHECK(concentration_bound(K, K, Tail::Lower).bound == 0.0);
  }
}

TEST_CASE("property: concentration for monotone and symmetric log-concave pmfs") {
  testgen::Rng rng(62);
  const double vs = sup_varentropy_symmetric().value;
  for (int i = 0; i < 300; ++i) {
    auto x = testgen::monotone_log_concave(rng);
    for (double t : kTGrid) {
      for (Tail side : {Tail::Upper, Tail::Lower}) {
        CHECK(empirical_tail(x, t, side) <= concentration_bound(t, 1.0, side).bound + 1e-12);
      }
    }
    auto s = testgen::symmetric_log_concave(rng, true);
    CHECK(concentration_check(s, kTGrid, vs).passed());
  }
}

TEST_CASE("property: collision identity for arbitrary pmfs") {
  testgen::Rng rng(63);
  for (int i = 0; i < 1000; ++i) CHECK(h2_hinf_identity_check(testgen::arbitrary_pmf(rng)).passed());
}

TEST_CASE("property: K constant and Renyi gaps for monotone log-concave pmfs") {
  testgen::Rng rng(64);
  const auto grid = default_alpha_grid();
  for (int i = 0; i < 300; ++i) {
    auto x = testgen::monotone_log_concave(rng);
    CHECK(K_constant(x, grid) < 1.0);
    CHECK(check_renyi_gap(x, RenyiOrder(2.0), RenyiOrder(1.0)).passed());
    CHECK(check_renyi_gap(x, RenyiOrder::infinity(), RenyiOrder(0.5)).passed());
    CHECK(mean_mode_check(x).passed());
  }
}

TEST_CASE("property: spread of symmetric log-concave pmfs is bounded") {
  testgen::Rng rng(65);
  for (int i = 0; i < 300; ++i) {
    auto s = testgen::symmetric_log_concave(rng, true);
    CHECK(check_renyi_spread(s, RenyiOrder::shannon(), RenyiOrder::infinity()).passed());
    CHECK(check_varentropy(s).passed());
  }
}
