// sieve: batch front end for the lcm-inequality exclusion criterion.
//
//   sieve check <file|-> [--mode paper|conservative] [--jobs N]
//               [--verbosity min|witness|full] [--no-timing]
//   sieve golden
//   sieve partitions <type-literal>
//
// Reports go to stdout as JSON lines; human-readable summaries go to stderr.
// Exit codes: 0 clean, 1 parse error (or golden mismatch), 2 internal failure.

#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "modsieve/batch.hpp"
#include "modsieve/criterion.hpp"
#include "modsieve/golden.hpp"
#include "modsieve/partitions.hpp"
#include "modsieve/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitInternal = 2;

int run_check(const std::string& path, modsieve::NeutralMode mode, unsigned jobs,
              modsieve::Verbosity verbosity, bool timing) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) {
      std::cerr << "sieve: cannot open " << path << "\n";
      return kExitInternal;
    }
    in = &file;
  }

  modsieve::ReportWriter writer(std::cout, {verbosity, timing});
  modsieve::run_batch(*in, {mode, jobs}, [&](const modsieve::BatchRecord& r) {
    if (r.status != modsieve::RecordStatus::checked)
      std::cerr << "sieve: line " << r.line << ": " << r.error << "\n";
    writer.write(r);
  });
  writer.finish();

  const auto& s = writer.summary();
  std::cerr << "checked " << s.checked << ", survived " << s.survived << ", excluded "
            << s.excluded << ", errors " << s.errors << "\n";
  if (s.internal_errors > 0) return kExitInternal;
  if (s.parse_errors > 0) return kExitParse;
  return kExitOk;
}

int run_golden() {
  int mismatches = 0;
  for (const auto& ds : modsieve::golden_datasets()) {
    int ok = 0;
    for (const auto& e : ds.entries) {
      bool got = modsieve::eno_crit(e.type).survives;
      if (got == e.expected_survives) {
        ++ok;
      } else {
        ++mismatches;
        std::cerr << "MISMATCH " << ds.name << " " << e.literal << ": expected "
                  << (e.expected_survives ? "survives" : "excluded") << "\n";
      }
    }
    std::cout << ds.name << ": " << ok << "/" << ds.entries.size() << " match\n";
  }
  return mismatches == 0 ? kExitOk : kExitParse;
}

int run_partitions(const std::string& literal) {
  modsieve::FusionType t = modsieve::parse_input_line(literal);
  auto parts = modsieve::modular_partitions(t);
  for (const auto& p : parts) std::cout << modsieve::partition_json(p).dump() << "\n";
  std::cerr << parts.size() << " modular partition(s)\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exclusion sieve for integral modular fusion category types"};
  app.require_subcommand(1);

  std::string path;
  std::string mode_name = "paper";
  std::string verbosity_name = "witness";
  unsigned jobs = 1;
  bool no_timing = false;
  auto* check = app.add_subcommand("check", "Check every type in a JSON-lines file");
  check->add_option("input", path, "Input file, or - for stdin")->required();
  check->add_option("--mode", mode_name, "Neutral component selection")
      ->check(CLI::IsMember({"paper", "conservative"}));
  check->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  check->add_option("--verbosity", verbosity_name, "Report detail")
      ->check(CLI::IsMember({"min", "witness", "full"}));
  check->add_flag("--no-timing", no_timing, "Omit elapsed_ms fields");

  auto* golden = app.add_subcommand("golden", "Run the embedded golden datasets");

  std::string literal;
  auto* partitions = app.add_subcommand("partitions", "Print the modular partitions of a type");
  partitions->add_option("type", literal, "Type literal, e.g. [1,1,2,3,3]")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*check)
      return run_check(path, *modsieve::parse_mode(mode_name), jobs,
                       *modsieve::parse_verbosity(verbosity_name), !no_timing);
    if (*golden) return run_golden();
    if (*partitions) return run_partitions(literal);
  } catch (const modsieve::ParseError& e) {
    std::cerr << "sieve: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "sieve: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
