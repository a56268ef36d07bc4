#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "generators.hpp"
#include "lclc/entropy.hpp"
#include "lclc/error.hpp"
#include "lclc/matching.hpp"
#include "near.hpp"

using namespace lclc;
using testgen::near;

namespace {

const double kInf = std::numeric_limits<double>::infinity();
const std::vector<double> kQGrid{0.5, 1.0, 1.5, 3.0, 5.0, kInf};

Errc error_code(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected lclc::Error");
  return Errc::BadInput;
}

}  // namespace

TEST_CASE("geometric matching examples") {
  auto a = match_geometric(LatticePMF::normalize({0.5, 0.5}), 2.0);
  CHECK(near(a.target, 0.5, 1e-15));
  CHECK(near(a.lambda, 1.0 / 3.0, 1e-12));

  auto b = match_geometric(LatticePMF::normalize({0.5, 0.3, 0.2}), 2.0);
  CHECK(near(b.target, 0.38, 1e-15));
  CHECK(near(b.lambda, 0.62 / 1.38, 1e-12));
  CHECK(b.residual < 1e-12);
  CHECK(b.bracket_width < 1e-14);
  CHECK(b.iterations <= kMatchMaxIterations);

  for (double l0 : {0.1, 0.5, 0.9}) {
    auto c = match_geometric(materialize(ParametricLaw::geometric(l0)), 3.0);
    CHECK(near(c.lambda, l0, 1e-10));
  }

  auto shannon = match_geometric(LatticePMF::normalize({0.5, 0.3, 0.2}), 1.0);
  CHECK(near(renyi_geometric(shannon.lambda, RenyiOrder::shannon()),
             shannon.target, 1e-12));

  CHECK(error_code([] { match_geometric(LatticePMF::dirac(0), 2.0); }) == Errc::DiracInput);
}

TEST_CASE("symmetric matching examples") {
  for (double l0 : {0.2, 0.5, 0.8}) {
    auto m = match_symmetric_geometric(materialize(ParametricLaw::symmetric_geometric(l0)), 2.0);
    CHECK(near(m.lambda, l0, 1e-10));
  }
  CHECK(power_sum(ParametricLaw::symmetric_geometric(1.0 - 1e-9), 2.0) < 1e-8);

  auto x = LatticePMF::normalize({0.2, 0.6, 0.2});
  auto lo = match_symmetric_geometric(x, 0.5);
  CHECK(lo.residual < 1e-12);
  CHECK(near(power_sum(ParametricLaw::symmetric_geometric(lo.lambda), 0.5), power_sum(x, 0.5), 1e-10));
  CHECK(error_code([] { match_symmetric_geometric(LatticePMF::dirac(1), 2.0); }) == Errc::DiracInput);
}

TEST_CASE("comparator classification") {
  CHECK(comparator_kind(LatticePMF::normalize({0.5, 0.3, 0.2})) == LawKind::Geometric);
  CHECK(comparator_kind(LatticePMF::normalize({0.2, 0.3, 0.5})) == LawKind::Geometric);
  CHECK(comparator_kind(LatticePMF::normalize({0.2, 0.6, 0.2})) == LawKind::SymmetricGeometric);
  CHECK(error_code([] { comparator_kind(LatticePMF::normalize({0.2, 0.5, 0.3})); }) == Errc::Unclassified);
}

TEST_CASE("Renyi dominance tables") {
  auto x = LatticePMF::normalize({0.5, 0.3, 0.2});
  auto r = renyi_dominance_report(x, 2.0, kQGrid);
  CHECK(r.passed());
  CHECK(r.rows.size() == 6);
  for (const auto& row : r.rows) CHECK(row.passed());

  auto self = renyi_dominance_report(materialize(ParametricLaw::geometric(0.3), 1e-40), 2.0, kQGrid);
  CHECK(self.passed());
  for (const auto& row : self.rows) CHECK(std::abs(row.margin) < 1e-9);

  auto sym = renyi_dominance_report(LatticePMF::normalize({0.2, 0.6, 0.2}), 2.0, kQGrid);
  CHECK(sym.passed());
  for (const auto& row : sym.rows) CHECK(row.passed());
}

TEST_CASE("property: matching residual and bracket") {
  testgen::Rng rng(51);
  int checked = 0;
  while (checked < 500) {
    auto x = testgen::monotone_log_concave(rng);
    if (x.is_dirac()) continue;
    const double p = rng.uniform(1.05, 8.0);
    auto m = match_geometric(x, p);
    CHECK(m.residual < 1e-12);
    CHECK(m.bracket_width < 1e-14);
    ++checked;
  }
}

TEST_CASE("property: self-matching recovers the parameter") {
  for (double l0 = 0.05; l0 < 0.96; l0 += 0.05) {
    for (double p : {1.5, 2.0, 4.0}) {
      CHECK(near(match_geometric(materialize(ParametricLaw::geometric(l0)), p).lambda, l0, 1e-9));
      CHECK(near(match_symmetric_geometric(materialize(ParametricLaw::symmetric_geometric(l0)), p).lambda,
                 l0, 1e-9));
    }
  }
}

TEST_CASE("property: power sums of matched pairs order by the exponent") {
  testgen::Rng rng(52);
  int checked = 0;
  while (checked < 500) {
    auto x = testgen::monotone_log_concave(rng);
    if (x.is_dirac() || monotonicity(x) == Direction::Both) continue;
    const double p = rng.uniform(1.2, 5.0);
    const auto z = ParametricLaw::geometric(match_geometric(x, p).lambda);
    const double inner = 1.0 + (p - 1.0) * rng.uniform(0.05, 0.95);
    CHECK(power_sum(x, inner) >= power_sum(z, inner) - 1e-10);
    const double above = p * rng.uniform(1.05, 3.0);
    CHECK(power_sum(x, above) <= power_sum(z, above) + 1e-10);
    const double below = rng.uniform(0.1, 0.95);
    CHECK(power_sum(x, below) <= power_sum(z, below) + 1e-10);
    ++checked;
  }
}

TEST_CASE("property: dominance tables for symmetric log-concave pmfs") {
  testgen::Rng rng(53);
  int checked = 0;
  while (checked < 300) {
    auto x = testgen::symmetric_log_concave(rng, true);
    if (x.is_dirac()) continue;
    const double p = std::vector<double>{1.5, 2.0, 3.0, 5.0}[static_cast<std::size_t>(checked % 4)];
    CHECK(renyi_dominance_report(x, p, kQGrid).passed());
    ++checked;
  }
}
