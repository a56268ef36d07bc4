#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lclc/entropy.hpp"
#include "lclc/lattice.hpp"
#include "lclc/report.hpp"

namespace lclc {

// Rényi gap constants: c(α) = α^{1/(α-1)}, c(1) = e, c(∞) = 1.
double log_c(RenyiOrder alpha);

struct GapConstant {
  RenyiOrder p;
  RenyiOrder q;
  double value;
};

/// log(c(p)/c(q)).
GapConstant gap_constant(RenyiOrder p, RenyiOrder q);

/// Monotone log-concave x (or log-concave x symmetric about a half-integer)
/// satisfies H_p > H_q + log(c(p)/c(q)) for p > q. Other inputs still get
/// the numbers, with a NotApplicable verdict. Throws Error(BadOrders) unless p > q > 0.
CheckReport check_renyi_gap(const LatticePMF& x, RenyiOrder p, RenyiOrder q);
CheckReport check_renyi_gap(const ParametricLaw& law, RenyiOrder p, RenyiOrder q);

/// Varentropy bound: 1 for monotone or half-integer-symmetric log-concave x,
/// V_S for log-concave x symmetric about an integer. Throws
/// Error(Unclassified) for anything else.
CheckReport check_varentropy(const LatticePMF& x);
CheckReport check_varentropy(const ParametricLaw& law);

/// e·max{f(⌊EX⌋), f(⌈EX⌉)} ≥ ‖f‖_∞ for log-concave f, plus the stronger
/// log-affine interpolated form as a row.
CheckReport mean_mode_check(const LatticePMF& x);

/// r(t) = t - log(1+t) for t ≥ -1, +∞ below.
double rate_r(double t);

enum class Tail { Upper, Lower };

struct TailBound {
  Tail side;
  double t;
  double K;
  double bound;
};

/// e^{-K r(t/K)} (upper) or e^{-K r(-t/K)} (lower). Throws Error(DomainError)
/// unless t ≥ 0 and K > 0.
TailBound concentration_bound(double t, double K, Tail side);

/// Exact P(I(X) ≥ H + t) (upper) or P(I(X) ≤ H - t) (lower).
double empirical_tail(const LatticePMF& x, double t, Tail side);

/// Compares exact tails against concentration_bound(t, K, side) on a t grid, both sides.
CheckReport concentration_check(const LatticePMF& x, std::span<const double> t_grid, double K);

/// Monte Carlo estimate of the same tails from `sample`; rows pass when the
/// estimate is within 4 standard errors (plus 1/n) of the bound.
CheckReport sampled_concentration_check(const LatticePMF& x, std::span<const double> t_grid,
                                        double K, std::uint64_t seed, std::size_t count);

/// 200 log-spaced tilt exponents on [1e-3, 1e3].
std::vector<double> default_alpha_grid();

/// max over the grid of V(X_α); a lower bound for sup_α V(X_α).
double K_constant(const LatticePMF& x, std::span<const double> alpha_grid);
double K_constant(const ParametricLaw& law, std::span<const double> alpha_grid);

/// H_α(X - Y) ≤ H_α(X) + log 2 for iid monotone log-concave X, Y and α ≥ 2.
/// Verdict NotApplicable when x is not monotone log-concave.
CheckReport epi_reversal_check(const LatticePMF& x, RenyiOrder alpha);
/// Geometric λ: X - Y is symmetric geometric λ, so both sides are closed forms.
CheckReport epi_reversal_check(const ParametricLaw& law, RenyiOrder alpha);

/// H₂(X) = H_∞(X - Y) and f_{X-Y}(0) = ‖f_{X-Y}‖_∞ for any pmf.
CheckReport h2_hinf_identity_check(const LatticePMF& x);

struct ExtremalVarentropy {
  double lambda_star;
  double value;
};

/// Maximizer and value of V over symmetric geometric laws.
ExtremalVarentropy sup_varentropy_symmetric();

/// sup over symmetric geometric Z of H_q(Z) - H_p(Z). Throws Error(BadOrders)
/// unless p ≥ q > 0.
double C_constant(RenyiOrder q, RenyiOrder p);

/// H_q(X) - H_p(X) ≤ C(q, p) for log-concave X symmetric about an integer;
/// NotApplicable for other inputs.
CheckReport check_renyi_spread(const LatticePMF& x, RenyiOrder q, RenyiOrder p);

}  // namespace lclc
