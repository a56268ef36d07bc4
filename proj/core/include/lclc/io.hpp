#pragma once

#include <filesystem>
#include <string_view>
#include <variant>

#include "lclc/lattice.hpp"

namespace lclc {

/// A distribution as read from an input document: explicit weights or a
/// parametric law kept in closed form.
using Distribution = std::variant<LatticePMF, ParametricLaw>;

/// Parses {"offset": int, "weights": [...]} or
/// {"law": "geometric"|"symmetric_geometric", "lambda": real}.
/// Throws Error(BadInput) for malformed documents.
Distribution parse_distribution(std::string_view json_text);
Distribution load_distribution(const std::filesystem::path& path);

/// Explicit pmf for either alternative (parametric laws are truncated).
LatticePMF to_pmf(const Distribution& d, double tail_tol = kDefaultTailTol);

}  // namespace lclc
