#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace iupacscan {

struct FastaRecord {
  std::string id;
  std::string description;
  std::string sequence;

  friend bool operator==(const FastaRecord&, const FastaRecord&) = default;
};

class FastaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline bool is_space(char c) noexcept {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

inline std::string_view trim(std::string_view s) noexcept {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

inline void append_without_space(std::string& dst, std::string_view line) {
  for (char c : line)
    if (!is_space(c)) dst.push_back(c);
}

inline void split_header(std::string_view header, FastaRecord& rec) {
  header = trim(header);
  auto cut = std::find_if(header.begin(), header.end(), is_space);
  rec.id.assign(header.begin(), cut);
  rec.description = std::string(trim(std::string_view(cut, header.end())));
}

}  // namespace detail

/// Streams records one at a time; only the current record is held in memory.
/// Sequence characters are kept verbatim apart from whitespace and line ends.
inline std::size_t for_each_fasta_record(std::istream& in,
                                         const std::function<void(FastaRecord&&)>& sink) {
  std::string line;
  FastaRecord current;
  bool open = false;
  std::size_t line_no = 0;
  std::size_t records = 0;

  auto flush = [&] {
    if (!open) return;
    if (current.sequence.empty())
      throw FastaError("record '" + current.id + "' has an empty sequence");
    sink(std::move(current));
    current = FastaRecord{};
    ++records;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.front() == '>') {
      flush();
      detail::split_header(std::string_view(line).substr(1), current);
      open = true;
      continue;
    }
    if (!open) {
      if (detail::trim(line).empty()) continue;
      throw FastaError("line " + std::to_string(line_no) +
                       ": sequence data before the first '>' header");
    }
    detail::append_without_space(current.sequence, line);
  }
  if (in.bad()) throw FastaError("I/O error while reading FASTA input");
  flush();
  return records;
}

inline std::vector<FastaRecord> read_fasta(std::istream& in) {
  std::vector<FastaRecord> out;
  for_each_fasta_record(in, [&](FastaRecord&& rec) { out.push_back(std::move(rec)); });
  return out;
}

inline std::vector<FastaRecord> read_fasta_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FastaError("cannot open '" + path.string() + "'");
  return read_fasta(in);
}

inline void write_fasta(std::ostream& out, const FastaRecord& rec, std::size_t width = 60) {
  out << '>' << rec.id;
  if (!rec.description.empty()) out << ' ' << rec.description;
  out << '\n';
  if (width == 0) width = rec.sequence.size();
  for (std::size_t i = 0; i < rec.sequence.size(); i += width)
    out << std::string_view(rec.sequence).substr(i, width) << '\n';
}

/// Pattern given on the command line; passed through unchanged.
inline std::string read_pattern_literal(std::string_view literal) {
  if (literal.empty()) throw FastaError("pattern is empty");
  return std::string(literal);
}

/// Pattern text from a stream: an optional leading '>' header line is
/// dropped, the remaining lines are joined with whitespace removed.
inline std::string read_pattern(std::istream& in) {
  std::string line, out;
  bool seen_content = false;
  bool seen_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.front() == '>') {
      if (seen_header || seen_content)
        throw FastaError("pattern file must hold a single pattern");
      seen_header = true;
      continue;
    }
    if (!detail::trim(line).empty()) seen_content = true;
    detail::append_without_space(out, line);
  }
  if (in.bad()) throw FastaError("I/O error while reading pattern");
  if (out.empty()) throw FastaError("pattern is empty");
  return out;
}

inline std::string read_pattern_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FastaError("cannot open pattern file '" + path.string() + "'");
  return read_pattern(in);
}

}  // namespace iupacscan
