#pragma once

// Brute-force character-class matcher on raw characters. Shares no code
// with the bit-encoded path so that the two can be checked against each
// other.

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "iupacscan/match_result.hpp"

namespace iupacscan::oracle {

/// One pattern position: the uppercase bases it accepts ("" for a gap).
using CharClass = std::string;

struct ClassPattern {
  std::vector<CharClass> classes;

  std::size_t size() const noexcept { return classes.size(); }
};

inline CharClass iupac_class(char letter) {
  switch (std::toupper(static_cast<unsigned char>(letter))) {
    case 'A': return "A";
    case 'C': return "C";
    case 'G': return "G";
    case 'T': return "T";
    case 'M': return "AC";
    case 'R': return "AG";
    case 'W': return "AT";
    case 'S': return "CG";
    case 'Y': return "CT";
    case 'K': return "GT";
    case 'V': return "ACG";
    case 'H': return "ACT";
    case 'D': return "AGT";
    case 'B': return "CGT";
    case 'N': return "ACGT";
    case '-': return "";
    default:
      throw std::invalid_argument(std::string("oracle: unknown symbol '") + letter + "'");
  }
}

/// Same syntax as the main pattern parser: IUPAC letters, '-', "[ACGT...]".
inline ClassPattern parse_class_pattern(std::string_view spec) {
  ClassPattern out;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (spec[i] != '[') {
      out.classes.push_back(iupac_class(spec[i]));
      continue;
    }
    CharClass cls;
    std::size_t j = i + 1;
    for (; j < spec.size() && spec[j] != ']'; ++j) {
      const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(spec[j])));
      if (std::string_view("ACGT").find(c) == std::string_view::npos)
        throw std::invalid_argument("oracle: bad class member");
      if (cls.find(c) == std::string::npos) cls.push_back(c);
    }
    if (j == spec.size() || cls.empty()) throw std::invalid_argument("oracle: bad class");
    out.classes.push_back(cls);
    i = j;
  }
  if (out.classes.empty()) throw std::invalid_argument("oracle: empty pattern");
  return out;
}

inline bool belongs(char text_char, const CharClass& cls) {
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text_char)));
  if (c != 'A' && c != 'C' && c != 'G' && c != 'T') return false;
  return cls.find(c) != std::string::npos;
}

/// Every window with at most k positions outside their class, full sums.
inline std::vector<MatchResult> naive_search(std::string_view text, const ClassPattern& pattern,
                                             std::size_t k) {
  std::vector<MatchResult> out;
  const std::size_t n = text.size();
  const std::size_t m = pattern.size();
  if (m == 0 || m > n) return out;
  for (std::size_t i = 1; i <= n - m + 1; ++i) {
    std::size_t count = 0;
    for (std::size_t j = 1; j <= m; ++j)
      if (!belongs(text[i + j - 2], pattern.classes[j - 1])) ++count;
    if (count <= k) out.push_back({i, count});
  }
  return out;
}

}  // namespace iupacscan::oracle
