#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "schreier/checked.hpp"

namespace schreier {

using VertexId = std::int64_t;  // 1-based insertion index
using PartIndex = std::size_t;

struct Edge {
  VertexId lo = 0;
  VertexId hi = 0;

  auto operator<=>(const Edge&) const = default;
};

// An n-vertex graph with an explicit partition into a fixed number of parts.
// Empty parts are kept so part indices stay stable while the graph grows.
// Edges are stored once, sorted by (lo, hi) with lo < hi.
class PartiteGraph {
 public:
  // Validates: vertex ids are exactly 1..n, each in one part, ascending within
  // a part; edges have no self-loops or duplicates. Throws std::invalid_argument.
  PartiteGraph(std::vector<std::vector<VertexId>> parts, std::vector<Edge> edges);

  const std::vector<std::vector<VertexId>>& parts() const { return parts_; }
  const std::vector<Edge>& edges() const { return edges_; }
  Count vertex_count() const { return static_cast<Count>(part_of_.size()); }
  PartIndex part_of(VertexId v) const;

  friend bool operator==(const PartiteGraph& a, const PartiteGraph& b) {
    return a.parts_ == b.parts_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::vector<VertexId>> parts_;
  std::vector<Edge> edges_;
  std::vector<PartIndex> part_of_;
};

Count edge_count(const PartiteGraph& g);

enum class Family {
  kM,   // two growth cases
  kMq,  // three growth cases
  kT,   // three growth cases, candidates numbered cyclically 1..q
};

enum class CaseTag { kFull, kMiddle, kLow };

const char* to_string(CaseTag tag);

// Growth case for adding a vertex to a graph that currently has n vertices in
// `parts` parts: n = parts * ell + k with 1 <= k <= parts. FULL when k = parts,
// MIDDLE when parts - q < k < parts, LOW when k <= parts - q.
struct GrowthCase {
  Count ell = 0;
  Count k = 0;
  CaseTag tag = CaseTag::kLow;

  friend bool operator==(const GrowthCase&, const GrowthCase&) = default;
};

GrowthCase classify_growth(Count n, Count parts, Count q);

class ConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The construction's free choices. Selectors receive the eligible part indices
// in ascending order and must return one of them; the ordering rule must
// permute the candidate list in place. Violations raise ConstructionError.
struct ChoicePolicy {
  using PartSelector = std::function<PartIndex(std::span<const PartIndex> eligible)>;
  using CandidateOrder = std::function<void(std::vector<VertexId>& candidates)>;

  PartSelector host_part_selector;
  PartSelector excluded_part_selector;
  CandidateOrder numbering_order;

  // Lowest-index host, lowest-index excluded part, ascending vertex ids.
  static ChoicePolicy canonical();
  // Uniform choices and shuffled candidate order from a seeded generator.
  // Copies of the returned policy share one generator.
  static ChoicePolicy random(std::uint64_t seed);
};

// What one growth step did. `candidates` is |V|, the set the new vertex may
// connect to; `new_edges` is how many of those it actually joined.
struct StepRecord {
  VertexId vertex = 0;
  GrowthCase growth{};
  PartIndex host_part = 0;
  std::optional<PartIndex> excluded_part;
  Count candidates = 0;
  Count new_edges = 0;
};

// Grows one graph of a family vertex by vertex. Construction starts with one
// vertex placed by the host selector; each grow() adds the next vertex.
class GraphBuilder {
 public:
  GraphBuilder(Family family, Count parts, Count q, ChoicePolicy policy);

  const StepRecord& grow();
  void grow_to(Count n);

  Count vertex_count() const { return static_cast<Count>(part_of_.size()); }
  Count edge_count() const { return static_cast<Count>(edges_.size()); }
  // steps()[i] is the step that added vertex i + 2.
  std::span<const StepRecord> steps() const { return steps_; }

  PartiteGraph graph() const;

 private:
  PartIndex choose(const ChoicePolicy::PartSelector& selector,
                   std::span<const PartIndex> eligible, const char* what) const;

  Family family_;
  Count q_;
  ChoicePolicy policy_;
  std::vector<std::vector<VertexId>> parts_;
  std::vector<PartIndex> part_of_;
  std::vector<Edge> edges_;
  std::vector<StepRecord> steps_;
};

// M(n, p): FULL steps join the host part and skip one other part; LOW steps
// join a smallest part and connect to everything outside it.
PartiteGraph build_M(Count n, Count p, const ChoicePolicy& policy = ChoicePolicy::canonical());

// M(n, p, q): adds the MIDDLE case, which joins a smallest part and skips one
// part of size ell + 1.
PartiteGraph build_Mq(Count n, Count p, Count q,
                      const ChoicePolicy& policy = ChoicePolicy::canonical());

// T(n, p, q): as M(n, p, q), but only candidates numbered 1 (cyclically
// 1..q in the policy's order) receive an edge.
PartiteGraph build_T(Count n, Count p, Count q,
                     const ChoicePolicy& policy = ChoicePolicy::canonical());

// Edge count of the balanced complete p-partite graph on n vertices.
Count turan_edge_count(Count n, Count p);

// T(n+2, pq+1, q) - T(n+1, pq+1, q) from the part-size census of
// T(n+1, pq+1, q), with n = (pq+1) ell + k, 0 <= k <= pq:
//   k = pq:                floor((pq (ell+1) - 1)/q) + 1
//   (p-1) q < k < pq:      floor((ell (pq-k) + (ell+1) k - 1)/q) + 1
//   k <= (p-1) q:          floor((ell (pq-k-1) + (ell+1)(k+1) - 1)/q) + 1
Count growth_delta(Count n, Count p, Count q);

}  // namespace schreier
