#include "modsieve/criterion.hpp"

#include <algorithm>
#include <stdexcept>

namespace modsieve {

namespace {

void require_unit_led_increasing(std::span<const Dim> dims, const char* what) {
  if (dims.empty() || dims.front() != 1)
    throw std::invalid_argument(std::string(what) + " must start with 1");
  if (std::adjacent_find(dims.begin(), dims.end(), std::greater_equal<>()) != dims.end())
    throw std::invalid_argument(std::string(what) + " must be strictly increasing");
}

std::vector<Dim> distinct(std::span<const Dim> sorted_dims) {
  std::vector<Dim> out(sorted_dims.begin(), sorted_dims.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Unchecked variant: callers have validated both spans.
std::optional<ExclusionWitness> first_failure(std::span<const Dim> neutral,
                                              std::span<const Dim> all,
                                              std::span<const Nat> pt_primes, Nat pt, Nat d) {
  for (Dim x : neutral.subspan(1)) {
    for (Nat p : prime_factors(x)) {
      if (std::find(pt_primes.begin(), pt_primes.end(), p) != pt_primes.end()) continue;
      std::optional<YCandidate> best;
      bool found = false;
      for (Dim y : all.subspan(1)) {
        if (y % p == 0) continue;
        Nat lhs = criterion_lhs(x, y, pt);
        if (lhs <= d) {
          found = true;
          break;
        }
        if (!best || lhs < best->lhs) best = YCandidate{y, lhs};
      }
      if (!found) return ExclusionWitness{x, p, best, d};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<NeutralMode> parse_mode(std::string_view s) {
  if (s == "paper") return NeutralMode::paper;
  if (s == "conservative") return NeutralMode::conservative;
  return std::nullopt;
}

std::string_view to_string(NeutralMode m) {
  return m == NeutralMode::paper ? "paper" : "conservative";
}

Nat criterion_lhs(Dim x, Dim y, Nat pt) {
  Nat l = lcm(x, y);
  auto l2 = checked_mul(l, l);
  auto x2pt = checked_mul(Nat{x} * x, pt);
  if (!l2 || !x2pt) throw std::overflow_error("criterion lhs overflows 128 bits");
  auto sum = checked_add(*l2, *x2pt);
  if (!sum) throw std::overflow_error("criterion lhs overflows 128 bits");
  return *sum;
}

std::optional<ExclusionWitness> find_exclusion(std::span<const Dim> neutral_unique,
                                               std::span<const Dim> all_unique, Nat pt, Nat d) {
  require_unit_led_increasing(neutral_unique, "neutral dims");
  require_unit_led_increasing(all_unique, "type dims");
  if (pt == 0) throw std::invalid_argument("pt must be positive");
  std::vector<Nat> pt_primes = prime_factors(pt);
  return first_failure(neutral_unique, all_unique, pt_primes, pt, d);
}

bool criterion_inter(std::span<const Dim> neutral_unique, std::span<const Dim> all_unique, Nat pt,
                     Nat d) {
  return !find_exclusion(neutral_unique, all_unique, pt, d).has_value();
}

CriterionVerdict eno_crit(const FusionType& t, const CriterionOptions& options) {
  const Nat pt = t.pt();
  const Nat d = t.d();
  const std::vector<Nat> pt_primes = prime_factors(pt);
  std::span<const Dim> all = t.unique_dims();

  CriterionVerdict v;
  std::optional<GradedPartition> least_failing;
  bool done = false;

  for_each_modular_partition(t, [&](const GradedPartition& gp) {
    if (done) return;
    ++v.total_partitions;

    std::optional<ExclusionWitness> first_witness;
    bool passed = false;
    for (const PartCandidate& part : gp.parts) {
      if (!part.contains_unit()) continue;
      auto failure = first_failure(distinct(part.dims), all, pt_primes, pt, d);
      if (!failure) {
        passed = true;
        break;
      }
      if (!first_witness) first_witness = failure;
      if (options.mode == NeutralMode::paper) break;
    }

    if (passed) {
      v.surviving_partitions.push_back(gp);
      if (options.stop_at_first_survivor) done = true;
    } else if (!least_failing || gp < *least_failing) {
      least_failing = gp;
      v.witness = first_witness;
    }
  });

  std::sort(v.surviving_partitions.begin(), v.surviving_partitions.end());
  v.survives = !v.surviving_partitions.empty();
  v.vacuous = v.total_partitions == 0;
  v.narrowed = !options.stop_at_first_survivor && v.survives &&
               v.surviving_partitions.size() < v.total_partitions && t.pt() > 1;
  if (v.survives) v.witness.reset();
  return v;
}

}  // namespace modsieve
