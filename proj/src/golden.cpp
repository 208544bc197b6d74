#include "modsieve/golden.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "modsieve/batch.hpp"

namespace modsieve {

namespace embedded {
// Generated at configure time from data/golden/.
struct File {
  std::string_view name;
  std::string_view text;
};
extern const File kFiles[];
extern const std::size_t kFileCount;
extern const std::string_view kManifest;
}  // namespace embedded

std::string_view golden_file(std::string_view file_name) {
  for (std::size_t i = 0; i < embedded::kFileCount; ++i)
    if (embedded::kFiles[i].name == file_name) return embedded::kFiles[i].text;
  throw std::out_of_range("no embedded golden file " + std::string(file_name));
}

std::vector<GoldenDataset> load_golden(std::string_view manifest,
                                       std::string_view (*lookup)(std::string_view)) {
  auto m = nlohmann::json::parse(manifest, nullptr, false);
  if (m.is_discarded() || !m.contains("datasets"))
    throw std::runtime_error("golden manifest is malformed");

  std::vector<GoldenDataset> out;
  for (const auto& ds : m["datasets"]) {
    GoldenDataset g;
    g.name = ds.at("name").get<std::string>();
    const auto expected = ds.at("expected").get<std::vector<bool>>();
    std::istringstream text{std::string(lookup(ds.at("file").get<std::string>()))};
    std::size_t k = 0;
    for (std::string line; std::getline(text, line);) {
      if (is_skippable_line(line)) continue;
      if (k >= expected.size())
        throw std::runtime_error(g.name + ": more entries than expected outcomes");
      g.entries.push_back({line, parse_input_line(line), expected[k++]});
    }
    if (k != expected.size()) throw std::runtime_error(g.name + ": fewer entries than expected outcomes");
    out.push_back(std::move(g));
  }
  return out;
}

const std::vector<GoldenDataset>& golden_datasets() {
  static const std::vector<GoldenDataset> datasets = load_golden(embedded::kManifest, golden_file);
  return datasets;
}

}  // namespace modsieve
