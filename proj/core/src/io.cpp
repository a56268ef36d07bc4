#include "lclc/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lclc/error.hpp"

namespace lclc {

Distribution parse_distribution(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::BadInput, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(Errc::BadInput, "distribution must be a JSON object");

  try {
    if (doc.contains("law")) {
      const auto law = doc.at("law").get<std::string>();
      const auto lambda = doc.at("lambda").get<double>();
      if (law == "geometric") return ParametricLaw::geometric(lambda);
      if (law == "symmetric_geometric") return ParametricLaw::symmetric_geometric(lambda);
      throw Error(Errc::BadInput, "unknown law '" + law + "'");
    }
    if (doc.contains("weights")) {
      const auto offset = doc.value("offset", Index{0});
      auto weights = doc.at("weights").get<std::vector<double>>();
      return LatticePMF::normalize(std::move(weights), offset);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::BadInput, std::string("malformed distribution: ") + e.what());
  }
  throw Error(Errc::BadInput, "expected either \"weights\" or \"law\"");
}

Distribution load_distribution(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::BadInput, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_distribution(buf.str());
}

LatticePMF to_pmf(const Distribution& d, double tail_tol) {
  if (const auto* pmf = std::get_if<LatticePMF>(&d)) return *pmf;
  return materialize(std::get<ParametricLaw>(d), tail_tol);
}

}  // namespace lclc
