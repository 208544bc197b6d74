#include "modsieve/report.hpp"

#include <limits>
#include <ostream>

namespace modsieve {

std::optional<Verbosity> parse_verbosity(std::string_view s) {
  if (s == "min") return Verbosity::min;
  if (s == "witness") return Verbosity::witness;
  if (s == "full") return Verbosity::full;
  return std::nullopt;
}

nlohmann::ordered_json nat_json(Nat n) {
  if (n <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(n);
  return to_string(n);
}

nlohmann::ordered_json partition_json(const GradedPartition& p) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& part : p.parts) out.push_back(part.dims);
  return out;
}

nlohmann::ordered_json record_json(const BatchRecord& r, const ReportOptions& options) {
  nlohmann::ordered_json j;
  j["index"] = r.index;
  j["line"] = r.line;
  if (r.status != RecordStatus::checked) {
    j["error"] = r.error;
    j["error_kind"] = r.status == RecordStatus::parse_error ? "parse" : "internal";
    return j;
  }
  const FusionType& t = *r.input_type;
  const CriterionVerdict& v = *r.verdict;
  j["type"] = std::vector<Dim>(t.dims().begin(), t.dims().end());
  j["survives"] = v.survives;
  j["total_partitions"] = v.total_partitions;
  j["narrowed"] = v.narrowed;
  j["vacuous"] = v.vacuous;
  if (options.verbosity >= Verbosity::witness && v.witness) {
    const ExclusionWitness& w = *v.witness;
    nlohmann::ordered_json wj;
    wj["x"] = w.x;
    wj["p"] = nat_json(w.p);
    wj["best_y"] = w.best ? nlohmann::ordered_json(w.best->y) : nlohmann::ordered_json();
    wj["lhs"] = w.best ? nat_json(w.best->lhs) : nlohmann::ordered_json();
    wj["rhs"] = nat_json(w.rhs);
    j["witness"] = std::move(wj);
  }
  if (options.verbosity >= Verbosity::full) {
    auto parts = nlohmann::ordered_json::array();
    for (const auto& p : v.surviving_partitions) parts.push_back(partition_json(p));
    j["surviving_partitions"] = std::move(parts);
  }
  if (options.timing) j["elapsed_ms"] = r.elapsed.count();
  return j;
}

nlohmann::ordered_json summary_json(const BatchSummary& s) {
  nlohmann::ordered_json j;
  j["summary"] = nlohmann::ordered_json{{"checked", s.checked},
                                        {"survived", s.survived},
                                        {"excluded", s.excluded},
                                        {"errors", s.errors}};
  return j;
}

void ReportWriter::write(const BatchRecord& r) {
  switch (r.status) {
    case RecordStatus::checked:
      ++summary_.checked;
      ++(r.verdict->survives ? summary_.survived : summary_.excluded);
      break;
    case RecordStatus::parse_error:
      ++summary_.errors;
      ++summary_.parse_errors;
      break;
    case RecordStatus::internal_error:
      ++summary_.errors;
      ++summary_.internal_errors;
      break;
  }
  out_ << record_json(r, options_).dump() << '\n';
}

void ReportWriter::finish() { out_ << summary_json(summary_).dump() << '\n' << std::flush; }

}  // namespace modsieve
