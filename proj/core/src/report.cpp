#include "lclc/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace lclc {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "n/a";
  }
  return "n/a";
}

CheckReport& CheckReport::with(std::string key, std::string value) {
  params.emplace_back(std::move(key), std::move(value));
  return *this;
}

CheckReport& CheckReport::with(std::string key, double value) {
  return with(std::move(key), format_number(value));
}

Verdict verdict_from_margin(double margin, double tolerance) {
  return margin >= -tolerance ? Verdict::Pass : Verdict::Fail;
}

Verdict combine(const std::vector<CheckReport>& rows) {
  if (std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.failed(); })) {
    return Verdict::Fail;
  }
  if (std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.passed(); })) {
    return Verdict::Pass;
  }
  return Verdict::NotApplicable;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

}  // namespace lclc
