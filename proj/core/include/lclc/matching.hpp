#pragma once

#include <cstddef>
#include <span>

#include "lclc/entropy.hpp"
#include "lclc/lattice.hpp"
#include "lclc/report.hpp"

namespace lclc {

/// Bisection settings for comparator matching.
inline constexpr double kMatchBracketLo = 1e-12;
inline constexpr double kMatchBracketHi = 1.0 - 1e-12;
inline constexpr std::size_t kMatchMaxIterations = 200;

struct MatchResult {
  double lambda = 0.0;
  /// Matched quantity: Σ xᵢᵖ, or H(x) when matching at p = 1.
  double target = 0.0;
  /// |comparator value - target| / target.
  double residual = 0.0;
  /// Final bracket width.
  double bracket_width = 0.0;
  std::size_t iterations = 0;
};

/// λ with (1-λ)ᵖ/(1-λᵖ) = Σ xᵢᵖ. At p = 1 the Shannon entropies are matched
/// instead. Throws Error(DiracInput) for a point mass, Error(NoBracket) when
/// the target is outside the comparator's range.
MatchResult match_geometric(const LatticePMF& x, double p);

/// λ with ((1-λ)/(1+λ))ᵖ(1+λᵖ)/(1-λᵖ) = Σ xᵢᵖ; bracket direction decided at
/// runtime (decreasing for p > 1, increasing for p < 1). At p = 1 the Shannon
/// entropies are matched.
MatchResult match_symmetric_geometric(const LatticePMF& x, double p);

/// The comparator family matching the shape of x: geometric for monotone x,
/// symmetric geometric for x symmetric about an integer. Log-concavity, which
/// the dominance statements assume, is left to the caller. Throws
/// Error(Unclassified) otherwise.
LawKind comparator_kind(const LatticePMF& x);

/// Matches the applicable comparator Z at order p and checks, for every q in
/// the grid, H_q(X) ≥ H_q(Z) when q ≥ p and H_q(X) ≤ H_q(Z) when q ≤ p, each
/// with tolerance 1e-9. One row per q.
CheckReport renyi_dominance_report(const LatticePMF& x, double p, std::span<const double> q_grid);

}  // namespace lclc
