#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "schreier/checked.hpp"
#include "schreier/graph.hpp"

namespace schreier {

// Graphviz DOT: one `cluster_<i>` subgraph per part in index order (vertex ids
// ascending), then one `u -- v;` line per edge in sorted (lo, hi) order.
// Equal graphs produce byte-identical text.
std::string export_graph(const PartiteGraph& g, std::string_view name = "G");

struct BFileEntry {
  Count index = 0;
  Count value = 0;

  friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

class BFileError : public std::runtime_error {
 public:
  enum class Kind {
    kMalformed,  // a line is not two decimal integers
    kIndexGap,   // indices do not increase by exactly one
  };

  BFileError(Kind kind, std::size_t line, const std::string& what);

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

// "index value\n" per term, indices offset, offset+1, ...
std::string write_bfile(std::span<const Count> values, Count offset);

// Skips '#' comment lines and blank lines; tolerates surrounding whitespace.
std::vector<BFileEntry> read_bfile(std::string_view text);

std::vector<Count> bfile_values(std::span<const BFileEntry> entries);

// Agreement length of the overlapping prefix: the index of the first mismatch,
// or the overlap length when the prefixes agree.
struct SequenceComparison {
  std::size_t agreement = 0;
  bool mismatch = false;

  friend bool operator==(const SequenceComparison&, const SequenceComparison&) = default;
};

SequenceComparison compare_sequences(std::span<const Count> a, std::span<const Count> b);

// One row of a sequence table: n, Sr(n, p, q) and Sr(n+1, p, q) - Sr(n, p, q).
struct SequenceRow {
  Count n = 0;
  Count sr = 0;
  Count diff = 0;
};

// CSV with header "n,sr,diff".
std::string write_sequence_csv(std::span<const SequenceRow> rows);

}  // namespace schreier
