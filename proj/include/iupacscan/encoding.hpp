#pragma once

// Bit codes for DNA text and IUPAC patterns, and the 64-entry match
// dictionary indexed by (pattern_code << 2) | text_code.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace iupacscan {

/// 2-bit text symbol code.
enum class Base : std::uint8_t { A = 0, C = 1, G = 2, T = 3 };

/// 4-bit pattern symbol code, one per IUPAC character class.
enum class IupacCode : std::uint8_t {
  A = 0, C, G, T,
  M, R, W, S, Y, K,
  V, H, D, B,
  N,
  Gap = 15,
};

inline constexpr std::size_t kBaseCount = 4;
inline constexpr std::size_t kPatternCodeCount = 16;
inline constexpr std::size_t kLutSize = kPatternCodeCount * kBaseCount;

/// Subset of {A,C,G,T}: bit 0 = A, bit 1 = C, bit 2 = G, bit 3 = T.
using BaseSet = std::uint8_t;

inline constexpr BaseSet base_bit(Base b) noexcept {
  return static_cast<BaseSet>(1u << static_cast<unsigned>(b));
}

namespace detail {

inline constexpr std::array<BaseSet, kPatternCodeCount> kClassOfCode = {
    0b0001,  // A
    0b0010,  // C
    0b0100,  // G
    0b1000,  // T
    0b0011,  // M [AC]
    0b0101,  // R [AG]
    0b1001,  // W [AT]
    0b0110,  // S [CG]
    0b1010,  // Y [CT]
    0b1100,  // K [GT]
    0b0111,  // V [ACG]
    0b1011,  // H [ACT]
    0b1101,  // D [AGT]
    0b1110,  // B [CGT]
    0b1111,  // N [ACGT]
    0b0000,  // -
};

inline constexpr std::string_view kCodeLetters = "ACGTMRWSYKVHDBN-";

inline constexpr std::array<std::uint8_t, 16> make_code_of_class() {
  std::array<std::uint8_t, 16> out{};
  for (std::size_t code = 0; code < kPatternCodeCount; ++code)
    out[kClassOfCode[code]] = static_cast<std::uint8_t>(code);
  return out;
}

inline constexpr std::array<std::uint8_t, 16> kCodeOfClass = make_code_of_class();

inline constexpr int text_code_of(char c) noexcept {
  switch (c) {
    case 'A': case 'a': return 0;
    case 'C': case 'c': return 1;
    case 'G': case 'g': return 2;
    case 'T': case 't': return 3;
    default: return -1;
  }
}

inline constexpr int pattern_code_of(char c) noexcept {
  if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  auto pos = kCodeLetters.find(c);
  return pos == std::string_view::npos ? -1 : static_cast<int>(pos);
}

}  // namespace detail

/// Bases accepted by a pattern code. Empty for the gap code.
inline constexpr BaseSet class_of(IupacCode code) noexcept {
  return detail::kClassOfCode[static_cast<std::size_t>(code)];
}

/// The unique pattern code whose class is `set`. The empty set maps to Gap.
inline constexpr IupacCode code_of_class(BaseSet set) noexcept {
  return static_cast<IupacCode>(detail::kCodeOfClass[set & 0x0F]);
}

inline constexpr char letter_of(IupacCode code) noexcept {
  return detail::kCodeLetters[static_cast<std::size_t>(code)];
}

inline constexpr std::uint8_t pair_index(IupacCode p, Base t) noexcept {
  return static_cast<std::uint8_t>((static_cast<unsigned>(p) << 2) |
                                   static_cast<unsigned>(t));
}

/// Match dictionary: 0 where the text base belongs to the pattern class,
/// 1 otherwise.
struct MatchLUT {
  std::array<std::uint8_t, kLutSize> table{};

  constexpr std::uint8_t operator[](std::size_t index) const noexcept {
    return table[index];
  }
  friend constexpr bool operator==(const MatchLUT&, const MatchLUT&) = default;
};

inline constexpr MatchLUT build_match_lut() noexcept {
  MatchLUT lut;
  for (std::size_t code = 0; code < kPatternCodeCount; ++code) {
    for (std::size_t base = 0; base < kBaseCount; ++base) {
      auto p = static_cast<IupacCode>(code);
      auto t = static_cast<Base>(base);
      lut.table[pair_index(p, t)] = (class_of(p) & base_bit(t)) ? 0 : 1;
    }
  }
  return lut;
}

inline constexpr MatchLUT kMatchLUT = build_match_lut();

/// DNA text as 2-bit codes. Characters outside ACGT/acgt are stored as
/// code 0 and flagged invalid; the matcher counts them as mismatches.
class EncodedText {
 public:
  EncodedText() = default;

  std::size_t size() const noexcept { return codes_.size(); }
  bool empty() const noexcept { return codes_.empty(); }

  std::span<const std::uint8_t> codes() const noexcept { return codes_; }
  /// Per-position 0/1 flag, 1 where the source character was not a base.
  std::span<const std::uint8_t> invalid_flags() const noexcept { return invalid_; }

  /// 1-based positions of non-ACGT source characters, ascending.
  std::vector<std::size_t> invalid_positions() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < invalid_.size(); ++i)
      if (invalid_[i]) out.push_back(i + 1);
    return out;
  }

  bool has_invalid() const noexcept { return invalid_count_ != 0; }

  friend EncodedText encode_text(std::string_view raw);

 private:
  std::vector<std::uint8_t> codes_;
  std::vector<std::uint8_t> invalid_;
  std::size_t invalid_count_ = 0;
};

inline EncodedText encode_text(std::string_view raw) {
  EncodedText out;
  out.codes_.resize(raw.size());
  out.invalid_.resize(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    int code = detail::text_code_of(raw[i]);
    if (code < 0) {
      out.codes_[i] = 0;
      out.invalid_[i] = 1;
      ++out.invalid_count_;
    } else {
      out.codes_[i] = static_cast<std::uint8_t>(code);
    }
  }
  return out;
}

class PatternError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// IUPAC pattern as 4-bit codes plus the pre-shifted dictionary keys.
class EncodedPattern {
 public:
  explicit EncodedPattern(std::vector<IupacCode> codes) : codes_(std::move(codes)) {
    if (codes_.empty()) throw PatternError("pattern is empty");
    shifted_.reserve(codes_.size());
    for (auto c : codes_)
      shifted_.push_back(static_cast<std::uint8_t>(static_cast<unsigned>(c) << 2));
  }

  std::size_t size() const noexcept { return codes_.size(); }
  std::span<const IupacCode> codes() const noexcept { return codes_; }
  std::span<const std::uint8_t> shifted() const noexcept { return shifted_; }

  /// Canonical single-letter IUPAC spelling.
  std::string to_string() const {
    std::string s;
    s.reserve(codes_.size());
    for (auto c : codes_) s.push_back(letter_of(c));
    return s;
  }

 private:
  std::vector<IupacCode> codes_;
  std::vector<std::uint8_t> shifted_;
};

/// Parses single IUPAC letters (case-insensitive), '-' for the gap code,
/// and bracketed base sets such as "[CGT]" which normalize to their IUPAC
/// letter.
inline EncodedPattern encode_pattern(std::string_view spec) {
  if (spec.empty()) throw PatternError("pattern is empty");
  std::vector<IupacCode> codes;
  codes.reserve(spec.size());
  for (std::size_t i = 0; i < spec.size(); ++i) {
    char c = spec[i];
    if (c == '[') {
      auto close = spec.find(']', i + 1);
      if (close == std::string_view::npos)
        throw PatternError("unterminated '[' at offset " + std::to_string(i));
      if (close == i + 1)
        throw PatternError("empty character class at offset " + std::to_string(i));
      BaseSet set = 0;
      for (std::size_t j = i + 1; j < close; ++j) {
        int code = detail::text_code_of(spec[j]);
        if (code < 0)
          throw PatternError(std::string("invalid base '") + spec[j] +
                             "' inside character class at offset " + std::to_string(j));
        set |= base_bit(static_cast<Base>(code));
      }
      codes.push_back(code_of_class(set));
      i = close;
      continue;
    }
    int code = detail::pattern_code_of(c);
    if (code < 0)
      throw PatternError(std::string("unknown pattern symbol '") + c + "' at offset " +
                         std::to_string(i));
    codes.push_back(static_cast<IupacCode>(code));
  }
  return EncodedPattern(std::move(codes));
}

}  // namespace iupacscan
