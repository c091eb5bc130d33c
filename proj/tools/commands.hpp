#pragma once

// Subcommand implementations for the iupacscan tool. Each takes its parsed
// options plus the streams to use and returns the process exit code.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "iupacscan/encoding.hpp"
#include "iupacscan/io_fasta.hpp"
#include "iupacscan/matcher.hpp"
#include "iupacscan/oracle.hpp"
#include "iupacscan/parallel.hpp"
#include "iupacscan/prime_ref.hpp"

namespace iupacscan::cli {

inline constexpr int kExitMatch = 0;
inline constexpr int kExitNoMatch = 1;
inline constexpr int kExitError = 2;

enum class OutputFormat { Tsv, Json };

// ---------------------------------------------------------------- search

struct SearchOptions {
  std::string input = "-";
  std::optional<std::string> pattern;
  std::optional<std::string> pattern_file;
  long long k = 0;
  long long threads = static_cast<long long>(default_worker_count());
  OutputFormat format = OutputFormat::Tsv;
  bool header = false;
  bool show_match = false;
};

inline int cmd_search(const SearchOptions& opt, std::istream& stdin_stream, std::ostream& out,
                      std::ostream& err) {
  try {
    if (opt.k < 0) {
      err << "error: --k must be non-negative (got " << opt.k << ")\n";
      return kExitError;
    }
    if (opt.threads < 1) {
      err << "error: --threads must be at least 1 (got " << opt.threads << ")\n";
      return kExitError;
    }
    if (opt.pattern.has_value() == opt.pattern_file.has_value()) {
      err << "error: give exactly one of --pattern or --pattern-file\n";
      return kExitError;
    }
    const std::string spec = opt.pattern ? read_pattern_literal(*opt.pattern)
                                         : read_pattern_file(*opt.pattern_file);
    const EncodedPattern pattern = encode_pattern(spec);
    const auto k = static_cast<std::size_t>(opt.k);
    const auto workers = static_cast<std::size_t>(opt.threads);

    std::ifstream file;
    std::istream* in = &stdin_stream;
    if (opt.input != "-") {
      file.open(opt.input, std::ios::binary);
      if (!file) {
        err << "error: cannot open '" << opt.input << "'\n";
        return kExitError;
      }
      in = &file;
    }

    if (opt.header && opt.format == OutputFormat::Tsv) {
      out << "record_id\tposition\tmismatches";
      if (opt.show_match) out << "\tmatched_substring";
      out << '\n';
    }

    std::size_t total = 0;
    const std::size_t records = for_each_fasta_record(*in, [&](FastaRecord&& rec) {
      const EncodedText text = encode_text(rec.sequence);
      const auto hits = parallel_search(text, pattern, k, workers);
      total += hits.size();
      for (const auto& hit : hits) {
        if (opt.format == OutputFormat::Json) {
          nlohmann::ordered_json row;
          row["record_id"] = rec.id;
          row["position"] = hit.position;
          row["mismatches"] = hit.mismatches;
          if (opt.show_match)
            row["matched_substring"] = rec.sequence.substr(hit.position - 1, pattern.size());
          out << row.dump() << '\n';
        } else {
          out << rec.id << '\t' << hit.position << '\t' << hit.mismatches;
          if (opt.show_match)
            out << '\t' << std::string_view(rec.sequence).substr(hit.position - 1, pattern.size());
          out << '\n';
        }
      }
    });
    if (records == 0) {
      err << "error: no FASTA records in input\n";
      return kExitError;
    }
    return total > 0 ? kExitMatch : kExitNoMatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

// -------------------------------------------------------------- selftest

/// One row of the reference trace: pair indices and match bits of each
/// dictionary probe for one window, stopping early where the scan stops.
struct TraceRow {
  std::size_t position;
  std::vector<int> indices;
  std::vector<int> bits;
};

inline constexpr std::string_view kSelftestText = "ATGACCGGCAT";
inline constexpr std::string_view kSelftestPattern = "C[CGT]GG[CG]";
inline constexpr std::size_t kSelftestK = 2;

inline const std::vector<TraceRow>& selftest_expected() {
  static const std::vector<TraceRow> rows = {
      {1, {4, 55, 10, 8, 29}, {1, 0, 0, 1, 0}},
      {2, {7, 54, 8, 9}, {1, 0, 1, 1}},
      {3, {6, 52, 9}, {1, 1, 1}},
      {4, {4, 53, 9, 10, 30}, {1, 0, 1, 0, 0}},
      {5, {5, 53, 10, 10, 29}, {0, 0, 0, 0, 0}},
      {6, {5, 54, 10, 9, 28}, {0, 0, 0, 1, 1}},
      {7, {6, 54, 9, 8}, {1, 0, 1, 1}},
  };
  return rows;
}

namespace detail {

inline std::string join_cells(const std::vector<int>& cells, std::size_t width) {
  std::ostringstream os;
  for (std::size_t j = 0; j < width; ++j) {
    if (j) os << ' ';
    if (j < cells.size())
      os << cells[j];
    else
      os << '-';
  }
  return os.str();
}

}  // namespace detail

inline int cmd_selftest(std::ostream& out, const MatchLUT& lut = kMatchLUT) {
  const EncodedText text = encode_text(kSelftestText);
  const EncodedPattern pattern = encode_pattern(kSelftestPattern);
  const std::size_t m = pattern.size();
  bool all = true;
  for (const auto& row : selftest_expected()) {
    TraceRow got{row.position, {}, {}};
    for (const auto& probe : trace_window(text, pattern, lut, row.position, kSelftestK)) {
      got.indices.push_back(probe.index);
      got.bits.push_back(probe.mismatch);
    }
    const bool ok = got.indices == row.indices && got.bits == row.bits;
    all = all && ok;
    out << "i=" << row.position << "  l: " << detail::join_cells(got.indices, m)
        << "  match: " << detail::join_cells(got.bits, m) << "  " << (ok ? "PASS" : "FAIL");
    if (!ok)
      out << "  (expected l: " << detail::join_cells(row.indices, m)
          << "  match: " << detail::join_cells(row.bits, m) << ')';
    out << '\n';
  }
  out << (all ? "selftest: PASS" : "selftest: FAIL") << '\n';
  return all ? 0 : 1;
}

// ----------------------------------------------------------------- bench

struct BenchOptions {
  std::optional<std::string> input;  // FASTA; first record is used
  std::uint64_t seed = 1;
  std::size_t length = 10'000'000;
  std::vector<std::size_t> lengths = {500, 10'000, 100'000};
  std::size_t patterns = 5;
  std::size_t reps = 5;
  long long k = 0;
  long long threads = static_cast<long long>(default_worker_count());
};

struct BenchRow {
  std::size_t m = 0;
  std::size_t number = 0;  // 1-based within its m
  std::size_t start = 0;   // 1-based, inclusive
  std::string pattern;
  std::vector<double> seconds;
  std::size_t matches = 0;
  double mean = 0;
  double stddev = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<std::pair<std::size_t, double>> mean_by_length;
  double ratio = 0;  // slowest over fastest mean across lengths
};

inline std::string synthetic_text(std::size_t length, std::uint64_t seed) {
  static constexpr std::array<char, 4> kBases = {'A', 'C', 'G', 'T'};
  std::mt19937_64 rng(seed);
  std::string s(length, 'A');
  // 32 bases per 64-bit draw.
  for (std::size_t i = 0; i < length;) {
    std::uint64_t bits = rng();
    for (int b = 0; b < 32 && i < length; ++b, ++i, bits >>= 2) s[i] = kBases[bits & 3];
  }
  return s;
}

inline std::pair<double, double> mean_and_sample_stddev(const std::vector<double>& xs) {
  if (xs.empty()) return {0.0, 0.0};
  double mean = 0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  if (xs.size() < 2) return {mean, 0.0};
  double ss = 0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / static_cast<double>(xs.size() - 1))};
}

/// Patterns are cut from the text at seeded random positions. Only the
/// search is timed; encoding of text and pattern happens beforehand.
inline BenchReport run_bench(const BenchOptions& opt, const std::string& raw) {
  if (opt.k < 0) throw std::invalid_argument("--k must be non-negative");
  if (opt.threads < 1) throw std::invalid_argument("--threads must be at least 1");
  if (opt.reps == 0) throw std::invalid_argument("--reps must be at least 1");
  if (opt.patterns == 0) throw std::invalid_argument("--patterns must be at least 1");
  const EncodedText text = encode_text(raw);
  const auto k = static_cast<std::size_t>(opt.k);
  const auto workers = static_cast<std::size_t>(opt.threads);

  BenchReport report;
  std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t m : opt.lengths) {
    if (m == 0 || m > raw.size())
      throw std::invalid_argument("pattern length " + std::to_string(m) +
                                  " does not fit in a text of length " +
                                  std::to_string(raw.size()));
    std::uniform_int_distribution<std::size_t> pick(0, raw.size() - m);
    std::vector<double> all_runs;
    for (std::size_t p = 1; p <= opt.patterns; ++p) {
      BenchRow row;
      row.m = m;
      row.number = p;
      const std::size_t offset = pick(rng);
      row.start = offset + 1;
      row.pattern = raw.substr(offset, m);
      const EncodedPattern pattern = encode_pattern(row.pattern);
      for (std::size_t r = 0; r < opt.reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto hits = parallel_search(text, pattern, k, workers);
        const auto t1 = std::chrono::steady_clock::now();
        row.matches = hits.size();
        row.seconds.push_back(std::chrono::duration<double>(t1 - t0).count());
      }
      std::tie(row.mean, row.stddev) = mean_and_sample_stddev(row.seconds);
      all_runs.insert(all_runs.end(), row.seconds.begin(), row.seconds.end());
      report.rows.push_back(std::move(row));
    }
    report.mean_by_length.emplace_back(m, mean_and_sample_stddev(all_runs).first);
  }
  if (!report.mean_by_length.empty()) {
    auto [lo, hi] = std::minmax_element(
        report.mean_by_length.begin(), report.mean_by_length.end(),
        [](const auto& a, const auto& b) { return a.second < b.second; });
    report.ratio = lo->second > 0 ? hi->second / lo->second : 0.0;
  }
  return report;
}

inline void print_bench(const BenchReport& report, std::size_t reps, std::ostream& out) {
  out << std::fixed;
  out << "No\tm\tPosition in sequence\tRuntime [s]\tmatches\n";
  for (const auto& row : report.rows) {
    out << row.number << ".\t" << row.m << '\t' << row.start << " - " << row.start + row.m - 1
        << '\t' << std::setprecision(3) << row.mean << " ± " << row.stddev << '\t'
        << row.matches << '\n';
  }
  out << "\nm\tmean runtime [s] over " << reps << " runs per pattern\n";
  for (const auto& [m, mean] : report.mean_by_length)
    out << m << '\t' << std::setprecision(3) << mean << '\n';
  out << "max/min mean ratio: " << std::setprecision(4) << report.ratio << '\n';
  out.unsetf(std::ios::floatfield);
}

inline int cmd_bench(const BenchOptions& opt, std::istream& stdin_stream, std::ostream& out,
                     std::ostream& err) {
  try {
    std::string raw;
    if (opt.input) {
      std::ifstream file;
      std::istream* in = &stdin_stream;
      if (*opt.input != "-") {
        file.open(*opt.input, std::ios::binary);
        if (!file) {
          err << "error: cannot open '" << *opt.input << "'\n";
          return kExitError;
        }
        in = &file;
      }
      bool first = true;
      for_each_fasta_record(*in, [&](FastaRecord&& rec) {
        if (first) raw = std::move(rec.sequence);
        first = false;
      });
      if (first) {
        err << "error: no FASTA records in input\n";
        return kExitError;
      }
    } else {
      raw = synthetic_text(opt.length, opt.seed);
    }
    const BenchReport report = run_bench(opt, raw);
    print_bench(report, opt.reps, out);
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

// ---------------------------------------------------------- oracle-check

struct OracleCheckOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  std::size_t max_n = 2000;
  std::size_t max_m = 50;
  std::size_t prime_max_n = 500;
  std::size_t prime_max_m = 20;
  std::optional<std::size_t> corrupt_lut;  // flip this dictionary entry
};

struct Instance {
  std::string text;
  std::string pattern;
  std::size_t k = 0;
};

namespace detail {

inline std::string random_pattern(std::mt19937_64& rng, std::size_t m) {
  static constexpr std::string_view kLetters = "ACGTMRWSYKVHDBN-";
  static constexpr std::string_view kBases = "ACGT";
  std::uniform_int_distribution<std::size_t> letter(0, kLetters.size() - 1);
  std::uniform_int_distribution<int> coin(0, 7);
  std::string s;
  for (std::size_t j = 0; j < m; ++j) {
    if (coin(rng) == 0) {
      // bracketed form of a random nonempty base set
      unsigned set = std::uniform_int_distribution<unsigned>(1, 15)(rng);
      s.push_back('[');
      for (unsigned b = 0; b < 4; ++b)
        if (set & (1u << b)) s.push_back(kBases[b]);
      s.push_back(']');
    } else {
      s.push_back(kLetters[letter(rng)]);
    }
  }
  return s;
}

inline std::string random_text(std::mt19937_64& rng, std::size_t n, std::string_view alphabet) {
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string s(n, 'A');
  for (auto& c : s) c = alphabet[pick(rng)];
  return s;
}

/// Every other trial draws a short pattern (m <= 8) so that plenty of
/// windows are accepted at small k.
inline Instance matcher_instance(std::uint64_t seed, std::size_t trial, std::size_t max_n,
                                 std::size_t max_m) {
  std::seed_seq seq{seed, static_cast<std::uint64_t>(trial), std::uint64_t{1}};
  std::mt19937_64 rng(seq);
  Instance inst;
  const std::size_t m_cap = trial % 2 == 0 ? std::min<std::size_t>(max_m, 8) : max_m;
  const std::size_t m = std::uniform_int_distribution<std::size_t>(1, m_cap)(rng);
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
  inst.k = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
  inst.text = random_text(rng, n, trial % 5 == 0 ? "ACGTNacgt" : "ACGTN");
  inst.pattern = random_pattern(rng, m);
  return inst;
}

inline Instance prime_instance(std::uint64_t seed, std::size_t trial, std::size_t max_n,
                               std::size_t max_m) {
  std::seed_seq seq{seed, static_cast<std::uint64_t>(trial), std::uint64_t{2}};
  std::mt19937_64 rng(seq);
  Instance inst;
  const std::size_t m = std::uniform_int_distribution<std::size_t>(1, max_m)(rng);
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
  inst.text = random_text(rng, n, "ACGT");
  inst.pattern = random_pattern(rng, m);
  return inst;
}

inline std::vector<std::size_t> positions_of(const std::vector<MatchResult>& rs) {
  std::vector<std::size_t> out;
  out.reserve(rs.size());
  for (const auto& r : rs) out.push_back(r.position);
  return out;
}

inline void report_instance(std::ostream& err, std::string_view what, std::uint64_t seed,
                            std::size_t trial, const Instance& inst) {
  err << "DISAGREEMENT (" << what << ") seed=" << seed << " trial=" << trial
      << " k=" << inst.k << "\n  text=" << inst.text << "\n  pattern=" << inst.pattern << '\n';
}

}  // namespace detail

inline int cmd_oracle_check(const OracleCheckOptions& opt, std::ostream& out,
                            std::ostream& err) {
  if (opt.max_n == 0 || opt.max_m == 0 || opt.prime_max_n == 0 || opt.prime_max_m == 0) {
    err << "error: size bounds must be at least 1\n";
    return kExitError;
  }
  if (opt.prime_max_m > prime::kMaxPatternLength) {
    err << "error: prime reference supports patterns up to " << prime::kMaxPatternLength
        << " symbols\n";
    return kExitError;
  }
  MatchLUT lut = kMatchLUT;
  if (opt.corrupt_lut) {
    if (*opt.corrupt_lut >= kLutSize) {
      err << "error: LUT index must be below " << kLutSize << '\n';
      return kExitError;
    }
    lut.table[*opt.corrupt_lut] ^= 1;
  }

  for (std::size_t t = 0; t < opt.trials; ++t) {
    const Instance inst = detail::matcher_instance(opt.seed, t, opt.max_n, opt.max_m);
    const auto fast = search(encode_text(inst.text), encode_pattern(inst.pattern), inst.k, lut);
    const auto slow =
        oracle::naive_search(inst.text, oracle::parse_class_pattern(inst.pattern), inst.k);
    if (fast != slow) {
      detail::report_instance(err, "matcher vs oracle", opt.seed, t, inst);
      return 1;
    }

    const Instance exact = detail::prime_instance(opt.seed, t, opt.prime_max_n, opt.prime_max_m);
    const EncodedPattern pattern = encode_pattern(exact.pattern);
    const auto via_primes = prime::prime_exact_search(exact.text, pattern);
    const auto via_lut = detail::positions_of(search(encode_text(exact.text), pattern, 0, lut));
    if (via_primes != via_lut) {
      detail::report_instance(err, "matcher k=0 vs prime reference", opt.seed, t, exact);
      return 1;
    }
  }
  out << "oracle-check: " << opt.trials << " trials, all agree\n";
  return 0;
}

}  // namespace iupacscan::cli
