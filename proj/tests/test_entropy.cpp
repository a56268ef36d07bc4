#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "generators.hpp"
#include "lclc/entropy.hpp"
#include "lclc/error.hpp"
#include "near.hpp"

using namespace lclc;
using testgen::near;

namespace {

const double kLog2 = std::numbers::ln2;
const double kInf = std::numeric_limits<double>::infinity();

// Direct summation oracle for Var(log f(X)).
double direct_varentropy(const LatticePMF& x) {
  double h = 0.0;
  double m2 = 0.0;
  for (double w : x.weights()) {
    if (w <= 0.0) continue;
    h -= w * std::log(w);
    m2 += w * std::log(w) * std::log(w);
  }
  return m2 - h * h;
}

}  // namespace

TEST_CASE("power sums") {
  testgen::Rng rng(21);
  for (int i = 0; i < 50; ++i) CHECK(near(power_sum(testgen::arbitrary_pmf(rng), 1.0), 1.0, 1e-14));
  CHECK(near(power_sum(LatticePMF::normalize({0.5, 0.5}), 2.0), 0.5, 1e-15));
  CHECK(near(power_sum(ParametricLaw::geometric(0.5), 2.0), 1.0 / 3.0, 1e-15));
  auto s = ParametricLaw::symmetric_geometric(0.4);
  CHECK(near(power_sum(s, 3.0), power_sum(materialize(s), 3.0), 1e-14));
}

TEST_CASE("Renyi entropies of explicit pmfs") {
  auto u = LatticePMF::normalize(std::vector<double>(7, 1.0));
  for (double p : {0.0, 0.5, 1.0, 2.0, 5.0, kInf}) {
    CHECK(near(renyi(u, RenyiOrder(p)), std::log(7.0), 1e-14));
    CHECK(renyi(LatticePMF::dirac(2), RenyiOrder(p)) == 0.0);
  }
  CHECK(near(renyi(LatticePMF::normalize({0.5, 0.3, 0.2}), RenyiOrder::infinity()), kLog2, 1e-15));
  CHECK(near(renyi(LatticePMF::normalize({0.5, 0.0, 0.5}), RenyiOrder(0.0)), kLog2, 1e-15));
  CHECK_THROWS_AS(RenyiOrder(-1.0), Error);
  CHECK_THROWS_AS(RenyiOrder(NAN), Error);
}

TEST_CASE("Renyi entropies of geometric laws in closed form") {
  CHECK(near(renyi_geometric(0.5, RenyiOrder::infinity()), kLog2, 1e-15));
  CHECK(near(renyi_geometric(0.5, RenyiOrder(2.0)), std::log(3.0), 1e-15));
  CHECK(near(renyi_geometric(0.5, RenyiOrder::shannon()), 2.0 * kLog2, 1e-15));
  CHECK(renyi_geometric(0.5, RenyiOrder(0.0)) == kInf);
  CHECK(near(renyi_symmetric_geometric(0.5, RenyiOrder::infinity()), std::log(3.0), 1e-15));
}

TEST_CASE("varentropy") {
  CHECK(near(varentropy(LatticePMF::normalize(std::vector<double>(10, 1.0))), 0.0, 1e-15));
  CHECK(varentropy(LatticePMF::dirac(0)) == 0.0);

  // Geometric λ: V = λ log²λ / (1-λ)², which is 2 log²2 at λ = ½.
  auto g = materialize(ParametricLaw::geometric(0.5));
  CHECK(near(varentropy(g), 2.0 * kLog2 * kLog2, 1e-9));
  CHECK(near(direct_varentropy(g), 2.0 * kLog2 * kLog2, 1e-9));
  CHECK(near(varentropy_geometric(0.5), 2.0 * kLog2 * kLog2, 1e-15));

  CHECK(varentropy_symmetric_geometric(1e-8) < 1e-4);
  auto s = materialize(ParametricLaw::symmetric_geometric(0.5));
  CHECK(near(varentropy_symmetric_geometric(0.5), varentropy(s), 1e-9));
  CHECK(near(varentropy_symmetric_geometric(0.5), direct_varentropy(s), 1e-9));

  for (double lambda : {0.05, 0.2, 0.7, 0.95}) {
    CHECK(near(varentropy(ParametricLaw::geometric(lambda)),
               direct_varentropy(materialize(ParametricLaw::geometric(lambda))), 1e-9));
    CHECK(near(varentropy(ParametricLaw::symmetric_geometric(lambda)),
               direct_varentropy(materialize(ParametricLaw::symmetric_geometric(lambda))), 1e-9));
  }
}

TEST_CASE("summary") {
  auto s = summarize(LatticePMF::normalize({0.5, 0.25, 0.25}));
  CHECK(near(s.shannon, 1.5 * kLog2, 1e-15));
  CHECK(near(s.min_entropy, kLog2, 1e-15));
  CHECK(near(s.varentropy, 0.25 * kLog2 * kLog2, 1e-15));
}

TEST_CASE("tilts") {
  auto x = LatticePMF::normalize({0.5, 0.3, 0.2});
  CHECK(tilt(x, 1.0) == x);
  auto t2 = tilt(x, 2.0);
  CHECK(near(t2.mass(0), 25.0 / 38.0, 1e-15));
  CHECK(near(t2.mass(1), 9.0 / 38.0, 1e-15));
  CHECK(near(t2.mass(2), 4.0 / 38.0, 1e-15));
  auto law = tilt(ParametricLaw::geometric(0.6), 2.5);
  CHECK(near(law.lambda(), std::pow(0.6, 2.5), 1e-15));
  auto g = tilt(materialize(ParametricLaw::geometric(0.6)), 2.5);
  for (Index n = 0; n < 10; ++n) CHECK(near(g.mass(n), law.mass(n), 1e-14));
}

TEST_CASE("information content") {
  auto u = LatticePMF::normalize(std::vector<double>(8, 1.0));
  CHECK(near(info_content(u, 3), std::log(8.0), 1e-15));
  CHECK(info_content(LatticePMF::dirac(0), 0) == 0.0);
  CHECK(near(info_content(materialize(ParametricLaw::geometric(0.5)), 2), 3.0 * kLog2, 1e-14));
  CHECK_THROWS_AS(info_content(u, 8), Error);
}

TEST_CASE("property: Renyi entropy is non-increasing in the order") {
  testgen::Rng rng(22);
  const double orders[] = {0.0, 0.25, 0.5, 0.999, 1.0, 1.5, 2.0, 3.0, 7.0, kInf};
  for (int i = 0; i < 1000; ++i) {
    auto x = testgen::arbitrary_pmf(rng);
    double prev = renyi(x, RenyiOrder(orders[0]));
    for (std::size_t k = 1; k < std::size(orders); ++k) {
      const double h = renyi(x, RenyiOrder(orders[k]));
      CHECK(h <= prev + 1e-12);
      prev = h;
    }
  }
}

TEST_CASE("property: truncated geometric entropies match the closed forms") {
  for (double lambda = 0.1; lambda < 0.95; lambda += 0.1) {
    auto x = materialize(ParametricLaw::geometric(lambda), 1e-15);
    for (double p : {1.0, 2.0, 5.0, kInf}) {
      CHECK(near(renyi(x, RenyiOrder(p)), renyi_geometric(lambda, RenyiOrder(p)), 1e-9));
    }
    // Below order 1 the dropped tail enters as tail^p: about 6e-8 at 1e-15.
    const double h = renyi_geometric(lambda, RenyiOrder(0.5));
    CHECK(std::abs(renyi(x, RenyiOrder(0.5)) - h) < 1e-7);
    auto fine = materialize(ParametricLaw::geometric(lambda), 1e-30);
    CHECK(near(renyi(fine, RenyiOrder(0.5)), h, 1e-9));
  }
}

TEST_CASE("property: tilts compose multiplicatively") {
  testgen::Rng rng(23);
  for (int i = 0; i < 300; ++i) {
    auto x = testgen::arbitrary_pmf(rng);
    const double a = rng.log_uniform(0.2, 5.0);
    const double b = rng.log_uniform(0.2, 5.0);
    auto lhs = tilt(tilt(x, a), b);
    auto rhs = tilt(x, a * b);
    REQUIRE(lhs.offset() == rhs.offset());
    REQUIRE(lhs.size() == rhs.size());
    for (std::size_t k = 0; k < lhs.size(); ++k) CHECK(near(lhs.weights()[k], rhs.weights()[k], 1e-12));
  }
}

TEST_CASE("property: varentropy is the curvature of the log power sum at 1") {
  testgen::Rng rng(24);
  const double h = 1e-4;
  for (int i = 0; i < 300; ++i) {
    auto x = testgen::arbitrary_pmf(rng);
    const double fd =
        (log_power_sum(x, 1.0 + h) - 2.0 * log_power_sum(x, 1.0) + log_power_sum(x, 1.0 - h)) /
        (h * h);
    CHECK(near(fd, varentropy(x), 1e-5));
  }
}

TEST_CASE("property: varentropy of monotone log-concave pmfs is below 1") {
  testgen::Rng rng(25);
  for (int i = 0; i < 1000; ++i) CHECK(varentropy(testgen::monotone_log_concave(rng)) < 1.0);
}
