#ifndef MODSIEVE_CRITERION_HPP
#define MODSIEVE_CRITERION_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "modsieve/fusion_type.hpp"
#include "modsieve/int_arith.hpp"
#include "modsieve/partitions.hpp"

namespace modsieve {

/// Which parts of a modular partition are tried as the adjoint component.
enum class NeutralMode {
  paper,         // parts[0] only, the lexicographically least part
  conservative,  // any part that contains a unit entry
};

std::optional<NeutralMode> parse_mode(std::string_view s);
std::string_view to_string(NeutralMode m);

struct YCandidate {
  Dim y = 0;
  Nat lhs = 0;  // lcm(x, y)^2 + x^2 * pt
};

/// An (X, p) pair for which no admissible Y exists.
/// `best` is the p-coprime non-unit Y with the smallest left-hand side (absent
/// when every non-unit dim is divisible by p).
struct ExclusionWitness {
  Dim x = 0;
  Nat p = 0;
  std::optional<YCandidate> best;
  Nat rhs = 0;
};

struct CriterionVerdict {
  bool survives = false;
  std::vector<GradedPartition> surviving_partitions;  // sorted
  std::size_t total_partitions = 0;
  bool narrowed = false;  // 0 < |surviving| < total and pt > 1
  std::optional<ExclusionWitness> witness;
  bool vacuous = false;  // no modular partition at all
};

struct CriterionOptions {
  NeutralMode mode = NeutralMode::paper;
  /// Stop at the first surviving partition. total_partitions then counts
  /// only the partitions examined, and narrowed is always false.
  bool stop_at_first_survivor = false;
};

/// Left-hand side lcm(x, y)^2 + x^2 * pt of the inequality.
Nat criterion_lhs(Dim x, Dim y, Nat pt);

/// First (x, p) pair, x ascending then p ascending, that admits no non-unit
/// y in `all_unique` with p not dividing y and lhs <= d. Primes of x that
/// divide pt impose nothing.
///
/// Both spans must be strictly increasing and start with 1.
std::optional<ExclusionWitness> find_exclusion(std::span<const Dim> neutral_unique,
                                               std::span<const Dim> all_unique, Nat pt, Nat d);

/// True iff the neutral candidate passes, i.e. find_exclusion finds nothing.
bool criterion_inter(std::span<const Dim> neutral_unique, std::span<const Dim> all_unique, Nat pt,
                     Nat d);

/// Runs the criterion over every modular partition of `t`. The type survives
/// iff some partition's neutral candidate passes. When it is excluded, the
/// witness comes from the least failing partition in sorted order.
CriterionVerdict eno_crit(const FusionType& t, const CriterionOptions& options = {});

}  // namespace modsieve

#endif  // MODSIEVE_CRITERION_HPP
