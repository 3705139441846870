#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "szw/checks.hpp"
#include "szw/enumeration.hpp"

namespace szw {

struct Counterexample {
  std::string graph6;
  std::uint64_t ordinal = 0;
  CheckOutcome outcome;
  bool operator==(const Counterexample&) const = default;
};

// Aggregate of one check over one stream. Everything except wall_seconds
// is independent of worker count and scheduling.
struct ScanReport {
  std::string check;
  std::uint64_t stream_count = 0;  // graphs decoded from the stream
  std::uint64_t filtered_out = 0;
  std::uint64_t examined = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t not_applicable = 0;
  std::uint64_t skipped_lines = 0;
  // Headline quantity over graphs where the check applied.
  std::optional<std::int64_t> min_value;
  std::optional<std::int64_t> max_value;
  std::map<std::int64_t, std::uint64_t> histogram;
  std::vector<Counterexample> counterexamples;  // sorted by (graph6, ordinal)
  double wall_seconds = 0;

  void merge(const ScanReport& o) {
    stream_count += o.stream_count;
    filtered_out += o.filtered_out;
    examined += o.examined;
    passed += o.passed;
    failed += o.failed;
    not_applicable += o.not_applicable;
    skipped_lines += o.skipped_lines;
    if (o.min_value && (!min_value || *o.min_value < *min_value)) min_value = o.min_value;
    if (o.max_value && (!max_value || *o.max_value > *max_value)) max_value = o.max_value;
    for (auto [value, count] : o.histogram) histogram[value] += count;
    counterexamples.insert(counterexamples.end(), o.counterexamples.begin(), o.counterexamples.end());
  }

  void record(const StreamItem& item, CheckOutcome outcome) {
    ++examined;
    if (outcome.status == CheckStatus::not_applicable) {
      ++not_applicable;
      return;
    }
    if (!outcome.observed.empty()) {
      const auto v = outcome.observed.front().value;
      if (!min_value || v < *min_value) min_value = v;
      if (!max_value || v > *max_value) max_value = v;
      ++histogram[v];
    }
    if (outcome.status == CheckStatus::pass) {
      ++passed;
    } else {
      ++failed;
      counterexamples.push_back({item.graph6, item.ordinal, std::move(outcome)});
    }
  }
};

struct ScanOptions {
  GraphFilter filter;
  unsigned workers = 1;                 // 0 picks the hardware concurrency
  std::size_t chunk_size = 512;
  std::size_t counterexample_limit = 0;  // 0 keeps all; otherwise the first ones by graph6
};

class ScanError : public std::runtime_error {
 public:
  ScanError(const std::string& graph6, const std::string& what)
      : std::runtime_error("check failed on graph " + graph6 + ": " + what), graph6_(graph6) {}
  const std::string& graph6() const { return graph6_; }

 private:
  std::string graph6_;
};

// Applies `check` to every graph of `source` that passes the filter. One
// reader hands out fixed-size chunks under a lock; workers keep private
// reports that are merged afterwards.
inline ScanReport scan(GraphSource& source, CheckId check, const ScanOptions& options = {}) {
  const auto started = std::chrono::steady_clock::now();
  unsigned workers = options.workers;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t chunk_size = std::max<std::size_t>(1, options.chunk_size);

  std::mutex source_lock;
  bool exhausted = false;
  std::exception_ptr source_error;
  std::atomic<bool> stop{false};

  struct EvalFailure {
    std::uint64_t ordinal;
    std::string graph6;
    std::string what;
  };
  std::mutex failure_lock;
  std::optional<EvalFailure> failure;

  std::vector<ScanReport> locals(workers);
  auto work = [&](ScanReport& local) {
    std::vector<StreamItem> chunk;
    StreamItem item;
    while (!stop.load()) {
      chunk.clear();
      {
        std::lock_guard guard(source_lock);
        if (exhausted) break;
        try {
          while (chunk.size() < chunk_size && source.next(item)) chunk.push_back(item);
          if (chunk.size() < chunk_size) exhausted = true;
        } catch (...) {
          source_error = std::current_exception();
          exhausted = true;
          stop = true;
          break;
        }
      }
      for (const auto& it : chunk) {
        ++local.stream_count;
        if (!options.filter.accepts(it.graph)) {
          ++local.filtered_out;
          continue;
        }
        try {
          local.record(it, evaluate(check, it.graph));
        } catch (const std::exception& e) {
          std::lock_guard guard(failure_lock);
          if (!failure || it.ordinal < failure->ordinal) failure = EvalFailure{it.ordinal, it.graph6, e.what()};
          stop = true;
          break;
        }
      }
    }
  };

  std::vector<std::thread> threads;
  for (unsigned w = 1; w < workers; ++w) threads.emplace_back(work, std::ref(locals[w]));
  work(locals[0]);
  for (auto& t : threads) t.join();

  if (source_error) std::rethrow_exception(source_error);
  if (failure) throw ScanError(failure->graph6, failure->what);

  ScanReport report;
  report.check = std::string(check_name(check));
  for (const auto& local : locals) report.merge(local);
  report.skipped_lines = source.skipped();
  std::sort(report.counterexamples.begin(), report.counterexamples.end(),
            [](const Counterexample& a, const Counterexample& b) {
              return a.graph6 != b.graph6 ? a.graph6 < b.graph6 : a.ordinal < b.ordinal;
            });
  if (options.counterexample_limit && report.counterexamples.size() > options.counterexample_limit) {
    report.counterexamples.resize(options.counterexample_limit);
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

inline ScanReport scan(std::vector<Graph> graphs, CheckId check, const ScanOptions& options = {}) {
  VectorSource source(std::move(graphs));
  return scan(source, check, options);
}

}  // namespace szw
