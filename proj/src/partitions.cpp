#include "modsieve/partitions.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace modsieve {

namespace {

class SubmultisetSearch {
 public:
  SubmultisetSearch(std::span<const Nat> values,
                    const std::function<void(std::span<const Nat>)>& visit)
      : values_(values), suffix_(values.size() + 1, 0), visit_(visit) {
    for (std::size_t i = values.size(); i-- > 0;) {
      auto s = checked_add(suffix_[i + 1], values[i]);
      if (!s) throw std::overflow_error("gen_mparts: sum of values overflows");
      suffix_[i] = *s;
    }
  }

  void run(std::size_t i, Nat remaining) {
    if (remaining == 0) {
      visit_(chosen_);
      return;
    }
    while (i < values_.size() && values_[i] > remaining) ++i;
    Nat prev = 0;
    for (; i < values_.size(); ++i) {
      if (suffix_[i] < remaining) break;
      if (values_[i] == prev) continue;
      prev = values_[i];
      chosen_.push_back(values_[i]);
      run(i + 1, remaining - values_[i]);
      chosen_.pop_back();
    }
  }

 private:
  std::span<const Nat> values_;
  std::vector<Nat> suffix_;
  std::vector<Nat> chosen_;
  const std::function<void(std::span<const Nat>)>& visit_;
};

class VectorPartitionSearch {
 public:
  VectorPartitionSearch(std::span<const Multiplicities> parts,
                        const std::function<void(std::span<const std::size_t>)>& visit)
      : parts_(parts), visit_(visit) {}

  // Indices are taken nonincreasing: the next part index never exceeds `limit`.
  void run(std::size_t limit, std::vector<std::uint32_t>& remaining) {
    if (std::all_of(remaining.begin(), remaining.end(), [](auto r) { return r == 0; })) {
      visit_(chosen_);
      return;
    }
    for (std::size_t k = limit + 1; k-- > 0;) {
      const Multiplicities& part = parts_[k];
      if (!fits(part, remaining)) continue;
      for (std::size_t c = 0; c < part.size(); ++c) remaining[c] -= part[c];
      chosen_.push_back(k);
      run(k, remaining);
      chosen_.pop_back();
      for (std::size_t c = 0; c < part.size(); ++c) remaining[c] += part[c];
    }
  }

 private:
  static bool fits(const Multiplicities& part, const std::vector<std::uint32_t>& remaining) {
    for (std::size_t c = 0; c < part.size(); ++c)
      if (part[c] > remaining[c]) return false;
    return true;
  }

  std::span<const Multiplicities> parts_;
  std::vector<std::size_t> chosen_;
  const std::function<void(std::span<const std::size_t>)>& visit_;
};

}  // namespace

void gen_mparts(std::span<const Nat> values, Nat target,
                const std::function<void(std::span<const Nat>)>& visit) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 0) throw std::invalid_argument("gen_mparts: values must be positive");
    if (i > 0 && values[i] > values[i - 1])
      throw std::invalid_argument("gen_mparts: values must be sorted nonincreasing");
  }
  SubmultisetSearch search(values, visit);
  search.run(0, target);
}

std::vector<std::vector<Nat>> gen_mparts(std::span<const Nat> values, Nat target) {
  std::vector<std::vector<Nat>> out;
  gen_mparts(values, target, [&](std::span<const Nat> s) { out.emplace_back(s.begin(), s.end()); });
  return out;
}

void vector_partitions(std::span<const std::uint32_t> total,
                       std::span<const Multiplicities> parts,
                       const std::function<void(std::span<const std::size_t>)>& visit) {
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k].size() != total.size())
      throw std::invalid_argument("vector_partitions: part length differs from total");
    if (std::all_of(parts[k].begin(), parts[k].end(), [](auto v) { return v == 0; }))
      throw std::invalid_argument("vector_partitions: zero part");
    for (std::size_t j = 0; j < k; ++j)
      if (parts[j] == parts[k]) throw std::invalid_argument("vector_partitions: repeated part");
  }
  std::vector<std::uint32_t> remaining(total.begin(), total.end());
  if (parts.empty()) {
    if (std::all_of(remaining.begin(), remaining.end(), [](auto r) { return r == 0; }))
      visit({});
    return;
  }
  VectorPartitionSearch search(parts, visit);
  search.run(parts.size() - 1, remaining);
}

std::vector<std::vector<std::size_t>> vector_partitions(std::span<const std::uint32_t> total,
                                                        std::span<const Multiplicities> parts) {
  std::vector<std::vector<std::size_t>> out;
  vector_partitions(total, parts,
                    [&](std::span<const std::size_t> s) { out.emplace_back(s.begin(), s.end()); });
  return out;
}

void for_each_modular_partition(const FusionType& t,
                                const std::function<void(const GradedPartition&)>& visit) {
  const Nat d = t.d();
  const Nat pt = t.pt();
  if (d % pt != 0) return;
  const Nat part_sum = d / pt;

  std::span<const Dim> unique = t.unique_dims();
  std::vector<Nat> squares;
  squares.reserve(t.rank());
  for (auto it = t.dims().rbegin(); it != t.dims().rend(); ++it) squares.push_back(Nat{*it} * *it);

  // Each submultiset of squares becomes a multiplicity vector over the unique dims.
  std::vector<PartCandidate> candidates;
  gen_mparts(squares, part_sum, [&](std::span<const Nat> chosen) {
    PartCandidate c;
    c.mult.assign(unique.size(), 0);
    std::size_t k = unique.size();
    for (Nat sq : chosen) {  // nonincreasing, so walk unique dims downward
      while (Nat{unique[k - 1]} * unique[k - 1] != sq) --k;
      ++c.mult[k - 1];
    }
    for (std::size_t u = 0; u < unique.size(); ++u) c.dims.insert(c.dims.end(), c.mult[u], unique[u]);
    candidates.push_back(std::move(c));
  });

  std::vector<Multiplicities> vectors;
  vectors.reserve(candidates.size());
  for (const auto& c : candidates) vectors.push_back(c.mult);

  GradedPartition gp;
  vector_partitions(t.multiplicities(), vectors, [&](std::span<const std::size_t> picked) {
    gp.parts.clear();
    for (std::size_t k : picked) gp.parts.push_back(candidates[k]);
    std::sort(gp.parts.begin(), gp.parts.end());
    assert(is_valid_partition(t, gp));
    visit(gp);
  });
}

std::vector<GradedPartition> modular_partitions(const FusionType& t) {
  std::vector<GradedPartition> out;
  for_each_modular_partition(t, [&](const GradedPartition& p) { out.push_back(p); });
  std::sort(out.begin(), out.end());
  return out;
}

bool is_valid_partition(const FusionType& t, const GradedPartition& p) {
  if (p.parts.size() != t.pt()) return false;
  if (t.d() % t.pt() != 0) return false;
  const Nat part_sum = t.d() / t.pt();
  std::span<const Dim> unique = t.unique_dims();
  std::vector<Dim> all;
  for (const auto& part : p.parts) {
    if (!std::is_sorted(part.dims.begin(), part.dims.end())) return false;
    if (part.mult.size() != unique.size()) return false;
    Nat sum = 0;
    for (Dim x : part.dims) sum += Nat{x} * x;
    if (sum != part_sum) return false;
    for (std::size_t u = 0; u < unique.size(); ++u) {
      auto n = std::count(part.dims.begin(), part.dims.end(), unique[u]);
      if (static_cast<std::uint32_t>(n) != part.mult[u]) return false;
      if (part.mult[u] > t.multiplicities()[u]) return false;
    }
    all.insert(all.end(), part.dims.begin(), part.dims.end());
  }
  if (!std::is_sorted(p.parts.begin(), p.parts.end())) return false;
  std::sort(all.begin(), all.end());
  return std::equal(all.begin(), all.end(), t.dims().begin(), t.dims().end());
}

}  // namespace modsieve
