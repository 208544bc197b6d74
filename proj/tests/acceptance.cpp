// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance <path-to-sieve> <golden-data-dir>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "modsieve/criterion.hpp"
#include "modsieve/golden.hpp"
#include "modsieve/partitions.hpp"
#include "oracles.hpp"

namespace {

using modsieve::Dim;
using modsieve::Multiplicities;
using modsieve::Nat;
using modsieve::NeutralMode;
using Clock = std::chrono::steady_clock;

const modsieve::GoldenDataset& dataset(const std::string& name) {
  for (const auto& d : modsieve::golden_datasets())
    if (d.name == name) return d;
  throw std::runtime_error("missing golden dataset " + name);
}

struct Outcome {
  bool pass;
  std::string detail;
};

// Runs every entry of a dataset in PAPER mode; passes when the outcomes equal
// `expected` exactly and the whole run finishes within `budget_s`.
Outcome run_suite(const std::string& name, const std::vector<bool>& expected, double budget_s) {
  const auto& ds = dataset(name);
  auto start = Clock::now();
  std::vector<bool> got;
  for (const auto& e : ds.entries) got.push_back(modsieve::eno_crit(e.type).survives);
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::ostringstream os;
  os << "outcomes [";
  for (std::size_t i = 0; i < got.size(); ++i) os << (i ? "," : "") << (got[i] ? "T" : "F");
  os << "] in " << secs << " s (budget " << budget_s << " s)";
  return {got == expected && secs < budget_s, os.str()};
}

Outcome criterion_1() {
  return run_suite("rank14_nonperfect", {true, true, false, false, false, false, false}, 10.0);
}

Outcome criterion_2() { return run_suite("rank14_perfect", std::vector<bool>(27, false), 60.0); }

Outcome criterion_3() { return run_suite("rank25_odd_perfect", std::vector<bool>(3, false), 60.0); }

Outcome criterion_4() {
  auto l1 = modsieve::make_type({1, 3, 3, 4, 5, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 15, 15, 15,
                                 15, 20, 20, 20});
  auto l2 = modsieve::make_type({1, 30, 35, 63, 90, 90, 126, 140, 252, 315, 420, 630, 630, 630});
  bool a = modsieve::eno_crit(l1).survives;
  bool b = modsieve::eno_crit(l2).survives;
  return {a && !b, std::string("l1 -> ") + (a ? "true" : "false") + ", l2 -> " + (b ? "true" : "false")};
}

Outcome criterion_5() { return run_suite("rank15_survivors", std::vector<bool>(18, true), 60.0); }

Outcome criterion_6() {
  auto t = modsieve::make_type({1, 1, 24, 24, 36, 40, 45, 45, 90, 90, 90, 180, 180, 180});
  auto v = modsieve::eno_crit(t);
  if (v.survives || !v.witness || !v.witness->best) return {false, "no witness produced"};
  const auto& w = *v.witness;
  std::ostringstream os;
  os << "x=" << w.x << " p=" << modsieve::to_string(w.p) << " best_y=" << w.best->y
     << " lhs=" << modsieve::to_string(w.best->lhs) << " rhs=" << modsieve::to_string(w.rhs);
  bool ok = w.x == 36 && w.p == 3 && w.best->y == 40 && w.best->lhs == 132192 && w.rhs == 129600;
  return {ok, os.str()};
}

// Every total with at most `dims` coordinates and component sum <= max_sum.
void for_each_total(std::size_t dims, std::uint32_t max_sum,
                    const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  std::vector<std::uint32_t> v(dims, 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t c, std::uint32_t left) {
    if (c == dims) {
      visit(v);
      return;
    }
    for (std::uint32_t x = 0; x <= left; ++x) {
      v[c] = x;
      rec(c + 1, left - x);
    }
  };
  rec(0, max_sum);
}

std::vector<Multiplicities> nonzero_below(const std::vector<std::uint32_t>& total) {
  std::vector<Multiplicities> out;
  Multiplicities v(total.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == total.size()) {
      if (std::any_of(v.begin(), v.end(), [](auto x) { return x != 0; })) out.push_back(v);
      return;
    }
    for (std::uint32_t x = 0; x <= total[c]; ++x) {
      v[c] = x;
      rec(c + 1);
    }
  };
  rec(0);
  return out;
}

Outcome criterion_7() {
  std::ostringstream os;
  bool ok = true;

  // (a) gen_mparts against the brute-force submultiset filter.
  std::mt19937 rng(20261018);
  int gen_bad = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Nat> m(std::uniform_int_distribution<int>(0, 12)(rng));
    for (auto& x : m) x = std::uniform_int_distribution<int>(1, 10)(rng);
    std::sort(m.rbegin(), m.rend());
    Nat total = 0;
    for (Nat x : m) total += x;
    Nat s = std::uniform_int_distribution<int>(0, static_cast<int>(total))(rng);
    auto got = modsieve::gen_mparts(m, s);
    std::set<std::vector<Nat>> set;
    for (auto g : got) {
      std::sort(g.begin(), g.end());
      set.insert(g);
    }
    if (set.size() != got.size() || set != oracle::submultisets_with_sum(m, s)) ++gen_bad;
  }
  os << "gen_mparts 200 cases, " << gen_bad << " mismatches; ";
  ok = ok && gen_bad == 0;

  // (b) vector_partitions: for every total with sum <= 8 in <= 4 coordinates,
  // all nonzero parts against set-partition brute force, and a random part
  // subset against the bounded count-vector brute force.
  int totals = 0, vp_bad = 0;
  for (std::size_t dims = 1; dims <= 4; ++dims) {
    for_each_total(dims, 8, [&](const std::vector<std::uint32_t>& total) {
      ++totals;
      auto parts = nonzero_below(total);
      std::set<std::vector<std::vector<std::uint32_t>>> got;
      std::size_t emitted = 0;
      modsieve::vector_partitions(total, parts, [&](std::span<const std::size_t> idx) {
        std::vector<std::vector<std::uint32_t>> blocks;
        for (auto k : idx) blocks.push_back(parts[k]);
        std::sort(blocks.begin(), blocks.end());
        got.insert(blocks);
        ++emitted;
      });
      if (emitted != got.size() || got != oracle::multiset_partitions_brute(total)) ++vp_bad;

      std::shuffle(parts.begin(), parts.end(), rng);
      parts.resize(std::min<std::size_t>(parts.size(), 5));
      std::set<std::vector<std::size_t>> sub;
      emitted = 0;
      modsieve::vector_partitions(total, parts, [&](std::span<const std::size_t> idx) {
        std::vector<std::size_t> v(idx.begin(), idx.end());
        std::sort(v.begin(), v.end());
        sub.insert(v);
        ++emitted;
      });
      if (emitted != sub.size() || sub != oracle::vector_partitions_brute(total, parts)) ++vp_bad;
    });
  }
  os << "vector_partitions " << totals << " totals, " << vp_bad << " mismatches; ";
  ok = ok && vp_bad == 0;

  // (c) modular_partitions invariants over the golden suite.
  int emitted = 0, invalid = 0;
  for (const auto& ds : modsieve::golden_datasets())
    for (const auto& e : ds.entries)
      modsieve::for_each_modular_partition(e.type, [&](const modsieve::GradedPartition& p) {
        ++emitted;
        if (!modsieve::is_valid_partition(e.type, p)) ++invalid;
      });
  os << "golden partitions " << emitted << ", " << invalid << " invalid";
  ok = ok && invalid == 0 && emitted > 0;
  return {ok, os.str()};
}

Outcome criterion_8() {
  int checked = 0, violations = 0;
  for (const auto& ds : modsieve::golden_datasets())
    for (const auto& e : ds.entries) {
      ++checked;
      bool paper = modsieve::eno_crit(e.type, {.mode = NeutralMode::paper}).survives;
      bool cons = modsieve::eno_crit(e.type, {.mode = NeutralMode::conservative}).survives;
      if (paper && !cons) ++violations;
    }
  return {violations == 0,
          std::to_string(checked) + " types, " + std::to_string(violations) + " violations"};
}

std::string capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

Outcome criterion_9(const std::string& sieve, const std::filesystem::path& golden_dir) {
  namespace fs = std::filesystem;
  fs::path input = fs::temp_directory_path() / "modsieve_acceptance_golden.jsonl";
  {
    std::ofstream out(input);
    for (const char* name : {"rank14_nonperfect.jsonl", "rank14_perfect.jsonl",
                             "rank25_odd_perfect.jsonl", "rank15_survivors.jsonl",
                             "closing_examples.jsonl"}) {
      std::ifstream in(golden_dir / name);
      out << in.rdbuf();
    }
  }
  std::string base = "\"" + sieve + "\" check \"" + input.string() + "\" --no-timing --verbosity full";
  int s1 = 0, s8 = 0;
  std::string one = capture(base + " --jobs 1 2>/dev/null", s1);
  std::string eight = capture(base + " --jobs 8 2>/dev/null", s8);
  fs::remove(input);
  std::size_t lines = std::count(one.begin(), one.end(), '\n');
  bool ok = s1 == 0 && s8 == 0 && lines == 58 && one == eight;
  return {ok, std::to_string(lines) + " report lines, byte-identical: " + (one == eight ? "yes" : "no")};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <path-to-sieve> <golden-data-dir>\n";
    return 2;
  }
  const std::string sieve = argv[1];
  const std::filesystem::path golden_dir = argv[2];

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 rank-14 non-perfect list", criterion_1},
      {"2 rank-14 perfect list", criterion_2},
      {"3 rank-25 odd perfect list", criterion_3},
      {"4 closing examples l1/l2", criterion_4},
      {"5 rank-15 survivor samples", criterion_5},
      {"6 worked exclusion witness", criterion_6},
      {"7 oracle equivalence", criterion_7},
      {"8 mode monotonicity", criterion_8},
      {"9 report determinism across jobs", [&] { return criterion_9(sieve, golden_dir); }},
  };

  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " -- " << o.detail << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
