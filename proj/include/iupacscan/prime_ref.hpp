#pragma once

// Reference exact-match search with prime-number encoding.
//
// Each base a_i gets a prime k_i > m. Text symbols are e_i = M / k_i with
// M = k_1 k_2 k_3 k_4, and a class S is the integer n_S that is 0 mod k_i
// for i in S and 1 mod k_j otherwise. A window matches iff the aligned sum
// of products p[j] * t[i + j - 1] is 0 mod M. Everything here works on the
// four residues separately, so no intermediate exceeds 64 bits; the wide
// integer is only used to reconstruct n_S and to report magnitudes.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "iupacscan/encoding.hpp"

namespace iupacscan::prime {

__extension__ typedef unsigned __int128 Wide;

inline std::string to_string(Wide v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

/// Longest pattern correlate_exact() accepts.
inline constexpr std::size_t kMaxPatternLength = 10'000;

using Residues = std::array<std::uint64_t, kBaseCount>;

struct PrimeAlphabetCode {
  std::array<std::uint64_t, kBaseCount> primes{};  // ascending, primes[i] encodes base i
  Wide modulus = 0;                                // product of the primes

  /// M / k_i for base i.
  Wide text_value(Base b) const noexcept {
    return modulus / primes[static_cast<std::size_t>(b)];
  }
};

inline constexpr bool is_prime(std::uint64_t v) noexcept {
  if (v < 2) return false;
  if (v % 2 == 0) return v == 2;
  for (std::uint64_t d = 3; d * d <= v; d += 2)
    if (v % d == 0) return false;
  return true;
}

/// The four smallest primes strictly greater than m.
inline PrimeAlphabetCode select_primes(std::size_t m) {
  if (m == 0) throw std::invalid_argument("pattern length must be at least 1");
  // Keeps each prime below 2^31, so M and CRT partial sums fit in 128 bits.
  if (m >= (std::size_t{1} << 30))
    throw std::domain_error("pattern length too large for prime encoding");
  PrimeAlphabetCode code;
  std::uint64_t candidate = m;
  Wide modulus = 1;
  for (auto& p : code.primes) {
    do {
      ++candidate;
    } while (!is_prime(candidate));
    p = candidate;
    modulus *= candidate;
  }
  code.modulus = modulus;
  return code;
}

struct PrimeEncodedText {
  std::vector<Residues> values;       // residues of e_i for the base at each position
  std::vector<std::uint8_t> invalid;  // 1 where the source character was not a base
};

struct PrimeEncodedPattern {
  std::vector<Residues> values;  // residues of n_S per pattern position
};

/// Residues of e_b = M / k_b modulo each prime.
inline Residues text_residues(Base b, const PrimeAlphabetCode& code) {
  const Wide e = code.text_value(b);
  Residues r{};
  for (std::size_t j = 0; j < kBaseCount; ++j)
    r[j] = static_cast<std::uint64_t>(e % code.primes[j]);
  return r;
}

inline PrimeEncodedText encode_text_prime(std::string_view raw, const PrimeAlphabetCode& code) {
  std::array<Residues, kBaseCount> per_base{};
  for (std::size_t b = 0; b < kBaseCount; ++b)
    per_base[b] = text_residues(static_cast<Base>(b), code);

  PrimeEncodedText out;
  out.values.resize(raw.size());
  out.invalid.resize(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    int b = detail::text_code_of(raw[i]);
    if (b < 0) {
      out.invalid[i] = 1;
    } else {
      out.values[i] = per_base[static_cast<std::size_t>(b)];
    }
  }
  return out;
}

/// Residues of n_S: 0 modulo k_i for bases in S, 1 modulo the rest.
inline Residues encode_class_crt(BaseSet set, const PrimeAlphabetCode&) noexcept {
  Residues r{};
  for (std::size_t j = 0; j < kBaseCount; ++j)
    r[j] = (set & base_bit(static_cast<Base>(j))) ? 0 : 1;
  return r;
}

/// Inverse of a modulo a prime p, with a not divisible by p.
inline std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t old_r = static_cast<std::int64_t>(a % p), r = static_cast<std::int64_t>(p);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) throw std::domain_error("value has no inverse modulo p");
  const auto sp = static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(((old_s % sp) + sp) % sp);
}

/// The unique integer in [0, M) with the given residues.
inline Wide reconstruct_crt(const Residues& residues, const PrimeAlphabetCode& code) {
  Wide n = 0;
  for (std::size_t j = 0; j < kBaseCount; ++j) {
    const std::uint64_t p = code.primes[j];
    const Wide cofactor = code.modulus / p;
    const std::uint64_t inv = inverse_mod(static_cast<std::uint64_t>(cofactor % p), p);
    const std::uint64_t coeff =
        static_cast<std::uint64_t>((static_cast<Wide>(residues[j] % p) * inv) % p);
    n = (n + cofactor * coeff) % code.modulus;
  }
  return n;
}

/// n_S as an integer in [0, M).
inline Wide class_value(BaseSet set, const PrimeAlphabetCode& code) {
  return reconstruct_crt(encode_class_crt(set, code), code);
}

inline PrimeEncodedPattern encode_pattern_prime(const EncodedPattern& pattern,
                                                const PrimeAlphabetCode& code) {
  PrimeEncodedPattern out;
  out.values.reserve(pattern.size());
  for (auto c : pattern.codes()) out.values.push_back(encode_class_crt(class_of(c), code));
  return out;
}

/// 1-based start positions whose aligned product sum vanishes modulo every
/// prime, i.e. modulo M. Windows covering invalid text are never reported.
inline std::vector<std::size_t> correlate_exact(const PrimeEncodedText& text,
                                                const PrimeEncodedPattern& pattern,
                                                const PrimeAlphabetCode& code) {
  const std::size_t m = pattern.values.size();
  const std::size_t n = text.values.size();
  if (m == 0) throw std::invalid_argument("pattern is empty");
  if (m > kMaxPatternLength)
    throw std::length_error("pattern longer than " + std::to_string(kMaxPatternLength) +
                            " symbols is not supported by the prime reference");
  for (auto p : code.primes)
    if (p <= m) throw std::invalid_argument("every prime must exceed the pattern length");

  std::vector<std::size_t> out;
  if (m > n) return out;

  // Prefix count of invalid positions for O(1) window exclusion.
  std::vector<std::size_t> bad_prefix(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) bad_prefix[i + 1] = bad_prefix[i] + text.invalid[i];

  for (std::size_t start = 0; start + m <= n; ++start) {
    if (bad_prefix[start + m] != bad_prefix[start]) continue;
    bool zero = true;
    for (std::size_t r = 0; r < kBaseCount && zero; ++r) {
      const std::uint64_t mod = code.primes[r];
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < m; ++j)
        acc = (acc + pattern.values[j][r] * text.values[start + j][r]) % mod;
      zero = acc == 0;
    }
    if (zero) out.push_back(start + 1);
  }
  return out;
}

/// Convenience wrapper: primes chosen for the pattern length.
inline std::vector<std::size_t> prime_exact_search(std::string_view text,
                                                   const EncodedPattern& pattern) {
  const auto code = select_primes(pattern.size());
  return correlate_exact(encode_text_prime(text, code), encode_pattern_prime(pattern, code),
                         code);
}

/// Largest single product e_i * n_S over all bases and all 16 classes,
/// the magnitude a direct (non-residue) correlation would have to hold.
inline Wide max_term_product(const PrimeAlphabetCode& code) {
  Wide best = 0;
  for (std::size_t b = 0; b < kBaseCount; ++b) {
    const Wide e = code.text_value(static_cast<Base>(b));
    for (unsigned set = 0; set < 16; ++set) {
      const Wide n_s = class_value(static_cast<BaseSet>(set), code);
      Wide product = 0;
      if (__builtin_mul_overflow(e, n_s, &product))
        throw std::overflow_error("term product exceeds 128 bits");
      best = std::max(best, product);
    }
  }
  return best;
}

}  // namespace iupacscan::prime
