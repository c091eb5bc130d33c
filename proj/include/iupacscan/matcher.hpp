#pragma once

// Sliding-window k-mismatch scan. Each window sums dictionary lookups
// left to right and aborts as soon as the running count exceeds k.

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "iupacscan/encoding.hpp"
#include "iupacscan/match_result.hpp"

namespace iupacscan {

struct SearchParams {
  std::size_t k = 0;
};

/// Number of window starts for a text of length n and pattern of length m.
inline constexpr std::size_t window_count(std::size_t n, std::size_t m) noexcept {
  return m == 0 || m > n ? 0 : n - m + 1;
}

/// Mismatch count of the window starting at 1-based `position`, or nullopt
/// once the count exceeds `k`. Requires 1 <= position <= n - m + 1.
inline std::optional<std::size_t> mismatches_at(const EncodedText& text,
                                                const EncodedPattern& pattern,
                                                const MatchLUT& lut, std::size_t position,
                                                std::size_t k) noexcept {
  assert(position >= 1 && position <= window_count(text.size(), pattern.size()));
  const std::uint8_t* codes = text.codes().data() + (position - 1);
  const std::uint8_t* bad = text.invalid_flags().data() + (position - 1);
  const std::uint8_t* shifted = pattern.shifted().data();
  const std::size_t m = pattern.size();
  std::size_t count = 0;
  for (std::size_t j = 0; j < m; ++j) {
    count += lut[shifted[j] | codes[j]] | bad[j];
    if (count > k) return std::nullopt;
  }
  return count;
}

/// Full m-term sum without early abort.
inline std::size_t full_mismatches_at(const EncodedText& text, const EncodedPattern& pattern,
                                      const MatchLUT& lut, std::size_t position) noexcept {
  assert(position >= 1 && position <= window_count(text.size(), pattern.size()));
  const auto codes = text.codes().subspan(position - 1, pattern.size());
  const auto bad = text.invalid_flags().subspan(position - 1, pattern.size());
  const auto shifted = pattern.shifted();
  std::size_t count = 0;
  for (std::size_t j = 0; j < shifted.size(); ++j) count += lut[shifted[j] | codes[j]] | bad[j];
  return count;
}

/// One dictionary probe of a window: the pair index and the looked-up bit.
struct Probe {
  std::uint8_t index = 0;
  std::uint8_t mismatch = 0;

  friend bool operator==(const Probe&, const Probe&) = default;
};

/// The probes an aborting scan performs on one window, in order.
/// Shorter than m when the scan stopped early.
inline std::vector<Probe> trace_window(const EncodedText& text, const EncodedPattern& pattern,
                                       const MatchLUT& lut, std::size_t position,
                                       std::size_t k) {
  assert(position >= 1 && position <= window_count(text.size(), pattern.size()));
  std::vector<Probe> probes;
  std::size_t count = 0;
  for (std::size_t j = 0; j < pattern.size(); ++j) {
    const std::size_t t = position - 1 + j;
    const auto index = static_cast<std::uint8_t>(pattern.shifted()[j] | text.codes()[t]);
    const auto bit = static_cast<std::uint8_t>(lut[index] | text.invalid_flags()[t]);
    probes.push_back({index, bit});
    count += bit;
    if (count > k) break;
  }
  return probes;
}

/// Scans window starts [first, last] (1-based, inclusive) and appends the
/// accepted windows to `out` in ascending order.
inline void search_windows(const EncodedText& text, const EncodedPattern& pattern,
                           const MatchLUT& lut, std::size_t k, std::size_t first,
                           std::size_t last, std::vector<MatchResult>& out) {
  for (std::size_t i = first; i <= last; ++i) {
    if (auto count = mismatches_at(text, pattern, lut, i, k)) out.push_back({i, *count});
  }
}

inline std::vector<MatchResult> search(const EncodedText& text, const EncodedPattern& pattern,
                                       std::size_t k, const MatchLUT& lut = kMatchLUT) {
  std::vector<MatchResult> out;
  const std::size_t windows = window_count(text.size(), pattern.size());
  if (windows == 0) return out;
  search_windows(text, pattern, lut, k, 1, windows, out);
  return out;
}

inline std::vector<MatchResult> search(const EncodedText& text, const EncodedPattern& pattern,
                                       SearchParams params, const MatchLUT& lut = kMatchLUT) {
  return search(text, pattern, params.k, lut);
}

}  // namespace iupacscan
