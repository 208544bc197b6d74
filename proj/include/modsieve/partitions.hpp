#ifndef MODSIEVE_PARTITIONS_HPP
#define MODSIEVE_PARTITIONS_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "modsieve/fusion_type.hpp"
#include "modsieve/int_arith.hpp"

namespace modsieve {

using Multiplicities = std::vector<std::uint32_t>;

/// One component of a candidate grading: a submultiset of the type whose
/// squares sum to d / pt. Ordered by its sorted dims only.
struct PartCandidate {
  std::vector<Dim> dims;  // sorted nondecreasing
  Multiplicities mult;    // over FusionType::unique_dims()

  bool contains_unit() const noexcept { return !dims.empty() && dims.front() == 1; }

  friend bool operator==(const PartCandidate& a, const PartCandidate& b) noexcept {
    return a.dims == b.dims;
  }
  friend auto operator<=>(const PartCandidate& a, const PartCandidate& b) noexcept {
    return a.dims <=> b.dims;
  }
};

/// pt parts of equal square-sum covering the whole type; parts sorted
/// lexicographically, so parts[0] always contains a unit entry.
struct GradedPartition {
  std::vector<PartCandidate> parts;

  friend bool operator==(const GradedPartition&, const GradedPartition&) = default;
  friend auto operator<=>(const GradedPartition& a, const GradedPartition& b) noexcept {
    return a.parts <=> b.parts;
  }
};

/// Every distinct submultiset of `values` summing to exactly `target`, each
/// reported once. `values` must be sorted nonincreasing with positive
/// entries; the visitor sees the chosen elements in nonincreasing order.
///
/// At every recursion depth equal values are branched on only once, which
/// is what makes the output duplicate-free. Branches whose remaining suffix
/// cannot reach the target are cut.
void gen_mparts(std::span<const Nat> values, Nat target,
                const std::function<void(std::span<const Nat>)>& visit);

std::vector<std::vector<Nat>> gen_mparts(std::span<const Nat> values, Nat target);

/// Every multiset of `parts` (repetition allowed) whose componentwise sum is
/// `total`. The visitor receives part indices in nonincreasing order, which
/// makes each multiset appear exactly once.
///
/// All vectors must share one length; parts must be nonzero and pairwise
/// distinct (std::invalid_argument otherwise).
void vector_partitions(std::span<const std::uint32_t> total,
                       std::span<const Multiplicities> parts,
                       const std::function<void(std::span<const std::size_t>)>& visit);

std::vector<std::vector<std::size_t>> vector_partitions(std::span<const std::uint32_t> total,
                                                        std::span<const Multiplicities> parts);

/// Streams the canonical modular partitions of `t` in enumeration order
/// (each partition canonical, the stream itself not sorted). Nothing is
/// emitted when pt does not divide d.
void for_each_modular_partition(const FusionType& t,
                                const std::function<void(const GradedPartition&)>& visit);

/// All modular partitions of `t`, sorted.
std::vector<GradedPartition> modular_partitions(const FusionType& t);

/// Part count, equal square-sums, multiplicity bookkeeping and multiset union.
bool is_valid_partition(const FusionType& t, const GradedPartition& p);

}  // namespace modsieve

#endif  // MODSIEVE_PARTITIONS_HPP
