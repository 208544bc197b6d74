#include "modsieve/batch.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <istream>
#include <mutex>
#include <thread>
#include <vector>

#include <json.hpp>

namespace modsieve {

namespace {

Dim read_dim(const nlohmann::json& v, const char* what) {
  if (!v.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  auto s = v.get<std::int64_t>();
  if (s < 0) throw ParseError(std::string(what) + " must be positive");
  return static_cast<Dim>(s);
}

struct WorkItem {
  std::size_t line;
  const std::string* text;
};

BatchRecord check_one(const WorkItem& item, std::size_t index, NeutralMode mode) {
  BatchRecord r;
  r.index = index;
  r.line = item.line;
  auto start = std::chrono::steady_clock::now();
  try {
    r.input_type = parse_input_line(*item.text);
  } catch (const ParseError& e) {
    r.status = RecordStatus::parse_error;
    r.error = e.what();
    return r;
  }
  try {
    r.verdict = eno_crit(*r.input_type, {.mode = mode});
  } catch (const std::exception& e) {
    r.status = RecordStatus::internal_error;
    r.error = e.what();
  }
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

}  // namespace

bool is_skippable_line(std::string_view line) {
  auto first = line.find_first_not_of(" \t\r\n");
  return first == std::string_view::npos || line[first] == '#';
}

FusionType parse_input_line(std::string_view line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("expected a JSON array");
  if (j.empty()) throw ParseError("type is empty");

  try {
    if (j.front().is_array()) {
      CompactType compact;
      for (const auto& pair : j) {
        if (!pair.is_array()) throw ParseError("mixed flat and compact elements");
        if (pair.size() != 2) throw ParseError("compact element must be a [dim, multiplicity] pair");
        compact.emplace_back(read_dim(pair[0], "dimension"), read_dim(pair[1], "multiplicity"));
      }
      return expand_compact(compact);
    }
    std::vector<Dim> flat;
    flat.reserve(j.size());
    for (const auto& v : j) {
      if (v.is_array()) throw ParseError("mixed flat and compact elements");
      flat.push_back(read_dim(v, "dimension"));
    }
    return make_type(std::move(flat));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

void run_batch(std::span<const std::string> lines, const BatchOptions& options,
               const std::function<void(const BatchRecord&)>& sink) {
  std::vector<WorkItem> items;
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (!is_skippable_line(lines[i])) items.push_back({i + 1, &lines[i]});
  if (items.empty()) return;

  const unsigned jobs = std::clamp<unsigned>(options.jobs, 1,
                                             static_cast<unsigned>(items.size()));
  if (jobs == 1) {
    for (std::size_t i = 0; i < items.size(); ++i) sink(check_one(items[i], i, options.mode));
    return;
  }

  // Reorder buffer: workers fill slots, the calling thread drains them in order.
  std::vector<std::optional<BatchRecord>> slots(items.size());
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  std::vector<std::jthread> workers;
  workers.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < items.size();) {
        BatchRecord r = check_one(items[i], i, options.mode);
        {
          std::lock_guard lock(mu);
          slots[i] = std::move(r);
        }
        ready.notify_one();
      }
    });
  }

  for (std::size_t i = 0; i < items.size(); ++i) {
    BatchRecord r;
    {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return slots[i].has_value(); });
      r = std::move(*slots[i]);
      slots[i].reset();
    }
    sink(r);
  }
}

void run_batch(std::istream& in, const BatchOptions& options,
               const std::function<void(const BatchRecord&)>& sink) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(std::move(line));
  if (in.bad()) throw std::runtime_error("failed to read batch input");
  run_batch(lines, options, sink);
}

}  // namespace modsieve
