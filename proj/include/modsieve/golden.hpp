#ifndef MODSIEVE_GOLDEN_HPP
#define MODSIEVE_GOLDEN_HPP

#include <string>
#include <string_view>
#include <vector>

#include "modsieve/fusion_type.hpp"

namespace modsieve {

struct GoldenEntry {
  std::string literal;  // the input line as stored
  FusionType type;
  bool expected_survives;
};

struct GoldenDataset {
  std::string name;
  std::vector<GoldenEntry> entries;
};

/// Datasets compiled into the library from data/golden/.
const std::vector<GoldenDataset>& golden_datasets();

/// Raw text of an embedded data file, e.g. "rank14_perfect.jsonl".
/// Throws std::out_of_range for an unknown name.
std::string_view golden_file(std::string_view file_name);

/// Loads datasets from a manifest and a file lookup. Throws std::runtime_error
/// when the manifest is malformed or entry counts disagree with `expected`.
std::vector<GoldenDataset> load_golden(std::string_view manifest,
                                       std::string_view (*lookup)(std::string_view));

}  // namespace modsieve

#endif  // MODSIEVE_GOLDEN_HPP
