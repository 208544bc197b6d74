#ifndef MODSIEVE_REPORT_HPP
#define MODSIEVE_REPORT_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string_view>

#include <json.hpp>

#include "modsieve/batch.hpp"
#include "modsieve/partitions.hpp"

namespace modsieve {

enum class Verbosity { min, witness, full };

std::optional<Verbosity> parse_verbosity(std::string_view s);

struct ReportOptions {
  Verbosity verbosity = Verbosity::witness;
  bool timing = true;
};

struct BatchSummary {
  std::size_t checked = 0;
  std::size_t survived = 0;
  std::size_t excluded = 0;
  std::size_t errors = 0;
  std::size_t parse_errors = 0;
  std::size_t internal_errors = 0;
};

/// Numbers that fit in 64 bits stay numbers; larger ones become decimal strings.
nlohmann::ordered_json nat_json(Nat n);

nlohmann::ordered_json partition_json(const GradedPartition& p);

nlohmann::ordered_json record_json(const BatchRecord& r, const ReportOptions& options);

nlohmann::ordered_json summary_json(const BatchSummary& s);

/// Writes one JSON object per record, then a trailing summary object.
class ReportWriter {
 public:
  ReportWriter(std::ostream& out, ReportOptions options) : out_(out), options_(options) {}

  void write(const BatchRecord& r);
  void finish();

  const BatchSummary& summary() const noexcept { return summary_; }

 private:
  std::ostream& out_;
  ReportOptions options_;
  BatchSummary summary_;
};

}  // namespace modsieve

#endif  // MODSIEVE_REPORT_HPP
