#pragma once

#include <cstddef>
#include <ostream>

namespace iupacscan {

/// A window accepted by a k-mismatch search.
struct MatchResult {
  std::size_t position = 0;    // 1-based start of the window in the text
  std::size_t mismatches = 0;  // exact count, always <= k

  friend bool operator==(const MatchResult&, const MatchResult&) = default;
  friend auto operator<=>(const MatchResult&, const MatchResult&) = default;

  friend std::ostream& operator<<(std::ostream& os, const MatchResult& r) {
    return os << '(' << r.position << ',' << r.mismatches << ')';
  }
};

}  // namespace iupacscan
