#ifndef MODSIEVE_FUSION_TYPE_HPP
#define MODSIEVE_FUSION_TYPE_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "modsieve/int_arith.hpp"

namespace modsieve {

/// Largest accepted dimension. Keeps lcm(x, y)^2 + x^2 * pt inside Nat.
inline constexpr Dim kMaxDim = (Dim{1} << 31) - 1;

/// (dim, multiplicity) pairs, e.g. [[1,1],[75,2],[91,4]].
using CompactType = std::vector<std::pair<Dim, Dim>>;

/// Canonical multiset of simple-object dimensions.
///
/// dims are sorted nondecreasing and start with the unit 1. `pt` counts the
/// entries equal to 1 (the order of the group of invertibles) and `d` is the
/// global dimension, the sum of squares. Immutable once built.
class FusionType {
 public:
  /// Throws std::invalid_argument on an empty input, a zero entry, an entry
  /// above kMaxDim, or a missing unit entry.
  static FusionType make(std::vector<Dim> raw);

  std::span<const Dim> dims() const noexcept { return dims_; }
  std::size_t rank() const noexcept { return dims_.size(); }
  Dim pt() const noexcept { return pt_; }
  Nat d() const noexcept { return d_; }

  /// Strictly increasing distinct dims; the first one is 1.
  std::span<const Dim> unique_dims() const noexcept { return unique_; }

  /// multiplicities()[k] is the number of copies of unique_dims()[k].
  std::span<const std::uint32_t> multiplicities() const noexcept { return mult_; }

  bool is_perfect() const noexcept { return pt_ == 1; }

  friend bool operator==(const FusionType& a, const FusionType& b) noexcept {
    return a.dims_ == b.dims_;
  }

 private:
  FusionType() = default;

  std::vector<Dim> dims_;
  std::vector<Dim> unique_;
  std::vector<std::uint32_t> mult_;
  Dim pt_ = 0;
  Nat d_ = 0;
};

inline FusionType make_type(std::vector<Dim> raw) { return FusionType::make(std::move(raw)); }

/// Throws std::invalid_argument on a zero multiplicity or an invalid expansion.
FusionType expand_compact(const CompactType& c);

/// Regroups a type into ascending (dim, multiplicity) pairs.
CompactType to_compact(const FusionType& t);

inline std::vector<Dim> unique_dims(const FusionType& t) {
  return {t.unique_dims().begin(), t.unique_dims().end()};
}

}  // namespace modsieve

#endif  // MODSIEVE_FUSION_TYPE_HPP
