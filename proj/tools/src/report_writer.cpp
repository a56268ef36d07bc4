#include <cmath>
#include <ostream>

#include "json.hpp"
#include "lclc/cli.hpp"

namespace lclc::cli {

namespace {

void flatten(const CheckReport& r, std::vector<const CheckReport*>& out) {
  out.push_back(&r);
  for (const auto& row : r.rows) flatten(row, out);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string params_text(const CheckReport& r) {
  std::string s;
  for (const auto& [k, v] : r.params) {
    if (!s.empty()) s += ';';
    s += k + "=" + v;
  }
  return s;
}

nlohmann::json json_number(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);
}

}  // namespace

void write_reports(std::ostream& out, std::span<const CheckReport> reports, OutputFormat format) {
  std::vector<const CheckReport*> rows;
  for (const auto& r : reports) flatten(r, rows);

  if (format == OutputFormat::Csv) {
    out << "check_name,lhs,rhs,margin,verdict,params\n";
    for (const auto* r : rows) {
      out << csv_field(r->name) << ',' << format_number(r->lhs) << ',' << format_number(r->rhs)
          << ',' << format_number(r->margin) << ',' << to_string(r->verdict) << ','
          << csv_field(params_text(*r)) << '\n';
    }
    return;
  }

  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto* r : rows) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r->params) params[k] = v;
    doc.push_back({{"check_name", r->name},
                   {"lhs", json_number(r->lhs)},
                   {"rhs", json_number(r->rhs)},
                   {"margin", json_number(r->margin)},
                   {"verdict", to_string(r->verdict)},
                   {"params", params}});
  }
  out << doc.dump(2) << '\n';
}

}  // namespace lclc::cli
