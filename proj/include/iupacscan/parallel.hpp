#pragma once

// Multithreaded search. Window starts are split into contiguous ranges, one
// per worker; a worker reading windows [s, e] touches text [s, e + m - 1],
// so neighbouring workers share m - 1 symbols of read-only text.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "iupacscan/encoding.hpp"
#include "iupacscan/match_result.hpp"
#include "iupacscan/matcher.hpp"

namespace iupacscan {

struct WindowRange {
  std::size_t first = 0;  // 1-based, inclusive
  std::size_t last = 0;   // 1-based, inclusive

  friend bool operator==(const WindowRange&, const WindowRange&) = default;
};

struct ChunkPlan {
  std::vector<WindowRange> ranges;
};

inline ChunkPlan plan_chunks(std::size_t n, std::size_t m, std::size_t workers) {
  if (workers == 0) throw std::invalid_argument("worker count must be at least 1");
  ChunkPlan plan;
  const std::size_t windows = window_count(n, m);
  if (windows == 0) return plan;
  const std::size_t chunk = (windows + workers - 1) / workers;
  for (std::size_t first = 1; first <= windows; first += chunk)
    plan.ranges.push_back({first, std::min(first + chunk - 1, windows)});
  return plan;
}

/// Logical CPU count, at least 1.
inline std::size_t default_worker_count() noexcept {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Same results, in the same order, as search() for any worker count.
inline std::vector<MatchResult> parallel_search(const EncodedText& text,
                                                const EncodedPattern& pattern, std::size_t k,
                                                std::size_t workers,
                                                const MatchLUT& lut = kMatchLUT) {
  const ChunkPlan plan = plan_chunks(text.size(), pattern.size(), workers);
  if (plan.ranges.empty()) return {};
  if (plan.ranges.size() == 1) return search(text, pattern, k, lut);

  std::vector<std::vector<MatchResult>> partial(plan.ranges.size());
  {
    std::vector<std::jthread> threads;
    threads.reserve(plan.ranges.size() - 1);
    for (std::size_t c = 1; c < plan.ranges.size(); ++c) {
      threads.emplace_back([&, c] {
        search_windows(text, pattern, lut, k, plan.ranges[c].first, plan.ranges[c].last,
                       partial[c]);
      });
    }
    search_windows(text, pattern, lut, k, plan.ranges[0].first, plan.ranges[0].last,
                   partial[0]);
  }

  std::size_t total = 0;
  for (const auto& p : partial) total += p.size();
  std::vector<MatchResult> out;
  out.reserve(total);
  for (auto& p : partial) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace iupacscan
