#include "schreier/io.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <optional>
#include <sstream>

namespace schreier {

std::string export_graph(const PartiteGraph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n";
  const auto& parts = g.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out << "  subgraph cluster_" << i << " {\n";
    out << "    label=\"part " << i << "\";\n";
    for (VertexId v : parts[i]) out << "    " << v << ";\n";
    out << "  }\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.lo << " -- " << e.hi << ";\n";
  out << "}\n";
  return out.str();
}

BFileError::BFileError(Kind kind, std::size_t line, const std::string& what)
    : std::runtime_error("b-file line " + std::to_string(line) + ": " + what),
      kind_(kind),
      line_(line) {}

std::string write_bfile(std::span<const Count> values, Count offset) {
  std::string out;
  Count index = offset;
  for (Count v : values) {
    out += std::to_string(index);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
    index = checked_add(index, 1);
  }
  return out;
}

namespace {

constexpr std::string_view kBlank = " \t\r\f\v";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(kBlank);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kBlank);
  return s.substr(first, last - first + 1);
}

std::optional<Count> parse_integer(std::string_view token) {
  Count value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  if (!token.empty() && token.front() == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || begin == end) return std::nullopt;
  return value;
}

}  // namespace

std::vector<BFileEntry> read_bfile(std::string_view text) {
  std::vector<BFileEntry> entries;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto newline = text.find('\n');
    std::string_view line = text.substr(0, newline);
    text = newline == std::string_view::npos ? std::string_view{} : text.substr(newline + 1);
    ++line_no;

    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    const auto split = line.find_first_of(kBlank);
    if (split == std::string_view::npos) {
      throw BFileError(BFileError::Kind::kMalformed, line_no, "expected \"index value\"");
    }
    const auto index = parse_integer(line.substr(0, split));
    const auto value = parse_integer(trim(line.substr(split)));
    if (!index || !value) {
      throw BFileError(BFileError::Kind::kMalformed, line_no,
                       "expected two decimal integers, got \"" + std::string(line) + "\"");
    }
    if (!entries.empty() && (entries.back().index == std::numeric_limits<Count>::max() ||
                             *index != entries.back().index + 1)) {
      throw BFileError(BFileError::Kind::kIndexGap, line_no,
                       "index " + std::to_string(*index) + " follows " +
                           std::to_string(entries.back().index));
    }
    entries.push_back({*index, *value});
  }
  return entries;
}

std::vector<Count> bfile_values(std::span<const BFileEntry> entries) {
  std::vector<Count> values;
  values.reserve(entries.size());
  for (const auto& e : entries) values.push_back(e.value);
  return values;
}

SequenceComparison compare_sequences(std::span<const Count> a, std::span<const Count> b) {
  const std::size_t overlap = std::min(a.size(), b.size());
  const auto first_diff = std::mismatch(a.begin(), a.begin() + overlap, b.begin()).first;
  const auto agreement = static_cast<std::size_t>(first_diff - a.begin());
  return {agreement, agreement < overlap};
}

std::string write_sequence_csv(std::span<const SequenceRow> rows) {
  std::string out = "n,sr,diff\n";
  for (const auto& row : rows) {
    out += std::to_string(row.n) + ',' + std::to_string(row.sr) + ',' +
           std::to_string(row.diff) + '\n';
  }
  return out;
}

}  // namespace schreier
