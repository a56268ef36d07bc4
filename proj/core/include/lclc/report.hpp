#pragma once

#include <string>
#include <utility>
#include <vector>

namespace lclc {

enum class Verdict { Pass, Fail, NotApplicable };

std::string to_string(Verdict v);

/// Uniform output of every verifier.
///
/// `verdict` states whether the named claim holds for the given inputs.
/// Composite checks keep one row per sub-check in `rows`; the parent verdict
/// is Fail when any row fails.
struct CheckReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  Verdict verdict = Verdict::NotApplicable;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<CheckReport> rows;

  bool passed() const noexcept { return verdict == Verdict::Pass; }
  bool failed() const noexcept { return verdict == Verdict::Fail; }

  CheckReport& with(std::string key, std::string value);
  CheckReport& with(std::string key, double value);
};

/// Pass iff `margin >= -tolerance`.
Verdict verdict_from_margin(double margin, double tolerance);

/// Fail if any row fails, Pass if at least one passes, otherwise NotApplicable.
Verdict combine(const std::vector<CheckReport>& rows);

/// Shortest round-trippable decimal text for a double ("inf", "-inf", "nan" for non-finite).
std::string format_number(double v);

}  // namespace lclc
