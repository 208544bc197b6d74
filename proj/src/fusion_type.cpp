#include "modsieve/fusion_type.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace modsieve {

namespace {
constexpr std::size_t kMaxCompactRank = std::size_t{1} << 20;
}  // namespace

FusionType FusionType::make(std::vector<Dim> raw) {
  if (raw.empty()) throw std::invalid_argument("type is empty");
  std::sort(raw.begin(), raw.end());
  if (raw.front() == 0) throw std::invalid_argument("type has a zero dimension");
  if (raw.back() > kMaxDim)
    throw std::invalid_argument("dimension " + std::to_string(raw.back()) + " exceeds " +
                                std::to_string(kMaxDim));
  if (raw.front() != 1) throw std::invalid_argument("type has no unit entry (no dimension 1)");

  FusionType t;
  t.dims_ = std::move(raw);
  for (Dim x : t.dims_) {
    if (t.unique_.empty() || t.unique_.back() != x) {
      t.unique_.push_back(x);
      t.mult_.push_back(0);
    }
    ++t.mult_.back();
    t.d_ += Nat{x} * x;
  }
  t.pt_ = t.mult_.front();
  return t;
}

FusionType expand_compact(const CompactType& c) {
  std::vector<Dim> flat;
  for (auto [dim, mult] : c) {
    if (mult == 0)
      throw std::invalid_argument("zero multiplicity for dimension " + std::to_string(dim));
    if (mult > kMaxCompactRank - flat.size())
      throw std::invalid_argument("expanded type is longer than " + std::to_string(kMaxCompactRank));
    flat.insert(flat.end(), mult, dim);
  }
  return make_type(std::move(flat));
}

CompactType to_compact(const FusionType& t) {
  CompactType out;
  for (std::size_t k = 0; k < t.unique_dims().size(); ++k)
    out.emplace_back(t.unique_dims()[k], t.multiplicities()[k]);
  return out;
}

}  // namespace modsieve
