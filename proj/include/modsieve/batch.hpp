#ifndef MODSIEVE_BATCH_HPP
#define MODSIEVE_BATCH_HPP

#include <chrono>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "modsieve/criterion.hpp"
#include "modsieve/fusion_type.hpp"

namespace modsieve {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses a JSON array that is either flat (`[1,1,2,3,3]`) or compact
/// (`[[1,1],[75,2]]`); the form is detected from the first element.
/// Throws ParseError for malformed text, mixed forms, or an invalid type.
FusionType parse_input_line(std::string_view line);

/// True for blank lines and `#` comments, which produce no record.
bool is_skippable_line(std::string_view line);

enum class RecordStatus { checked, parse_error, internal_error };

struct BatchRecord {
  std::size_t index = 0;  // ordinal among records
  std::size_t line = 0;   // 1-based source line
  RecordStatus status = RecordStatus::checked;
  std::optional<FusionType> input_type;
  std::optional<CriterionVerdict> verdict;
  std::string error;
  std::chrono::duration<double, std::milli> elapsed{};
};

struct BatchOptions {
  NeutralMode mode = NeutralMode::paper;
  unsigned jobs = 1;
};

/// Checks every non-skippable line and hands records to `sink` strictly in
/// input order, whatever order the workers finish in. The sink runs on the
/// calling thread.
void run_batch(std::span<const std::string> lines, const BatchOptions& options,
               const std::function<void(const BatchRecord&)>& sink);

/// Reads all lines from `in` first; throws std::runtime_error if the stream
/// goes bad before EOF.
void run_batch(std::istream& in, const BatchOptions& options,
               const std::function<void(const BatchRecord&)>& sink);

}  // namespace modsieve

#endif  // MODSIEVE_BATCH_HPP
