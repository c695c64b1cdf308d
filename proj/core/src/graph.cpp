#include "schreier/graph.hpp"

#include <algorithm>
#include <memory>
#include <random>
#include <string>
#include <utility>

#include "schreier/schreier.hpp"

namespace schreier {

namespace {

void require_positive(Count value, const char* name) {
  if (value < 1) {
    throw std::invalid_argument(std::string("schreier: ") + name + " must be >= 1, got " +
                                std::to_string(value));
  }
}

}  // namespace

// PartiteGraph

PartiteGraph::PartiteGraph(std::vector<std::vector<VertexId>> parts, std::vector<Edge> edges)
    : parts_(std::move(parts)), edges_(std::move(edges)) {
  std::size_t total = 0;
  for (const auto& part : parts_) total += part.size();
  part_of_.assign(total, parts_.size());

  for (PartIndex i = 0; i < parts_.size(); ++i) {
    const auto& part = parts_[i];
    if (!std::is_sorted(part.begin(), part.end())) {
      throw std::invalid_argument("schreier: part vertices must be ascending");
    }
    for (VertexId v : part) {
      if (v < 1 || static_cast<std::size_t>(v) > total) {
        throw std::invalid_argument("schreier: vertex id " + std::to_string(v) +
                                    " outside 1.." + std::to_string(total));
      }
      auto& slot = part_of_[static_cast<std::size_t>(v - 1)];
      if (slot != parts_.size()) {
        throw std::invalid_argument("schreier: vertex " + std::to_string(v) +
                                    " appears more than once");
      }
      slot = i;
    }
  }

  for (Edge& e : edges_) {
    if (e.lo > e.hi) std::swap(e.lo, e.hi);
    if (e.lo == e.hi) throw std::invalid_argument("schreier: self-loop at " + std::to_string(e.lo));
    if (e.lo < 1 || static_cast<std::size_t>(e.hi) > total) {
      throw std::invalid_argument("schreier: edge endpoint outside vertex range");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("schreier: duplicate edge");
  }
}

PartIndex PartiteGraph::part_of(VertexId v) const {
  if (v < 1 || v > vertex_count()) throw std::out_of_range("schreier: no such vertex");
  return part_of_[static_cast<std::size_t>(v - 1)];
}

Count edge_count(const PartiteGraph& g) { return static_cast<Count>(g.edges().size()); }

// Growth classification

const char* to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::kFull:
      return "full";
    case CaseTag::kMiddle:
      return "middle";
    case CaseTag::kLow:
      return "low";
  }
  return "?";
}

GrowthCase classify_growth(Count n, Count parts, Count q) {
  require_positive(n, "n");
  require_positive(parts, "parts");
  require_positive(q, "q");
  const auto [ell, k] = decompose(n, parts, RemainderRange::kOneBased);
  CaseTag tag = CaseTag::kLow;
  if (k == parts) {
    tag = CaseTag::kFull;
  } else if (parts - q < k) {
    tag = CaseTag::kMiddle;
  }
  return {ell, k, tag};
}

// Policies

ChoicePolicy ChoicePolicy::canonical() {
  ChoicePolicy policy;
  policy.host_part_selector = [](std::span<const PartIndex> eligible) { return eligible.front(); };
  policy.excluded_part_selector = [](std::span<const PartIndex> eligible) {
    return eligible.front();
  };
  policy.numbering_order = [](std::vector<VertexId>& candidates) {
    std::sort(candidates.begin(), candidates.end());
  };
  return policy;
}

ChoicePolicy ChoicePolicy::random(std::uint64_t seed) {
  auto rng = std::make_shared<std::mt19937_64>(seed);
  auto pick = [rng](std::span<const PartIndex> eligible) {
    std::uniform_int_distribution<std::size_t> dist(0, eligible.size() - 1);
    return eligible[dist(*rng)];
  };
  ChoicePolicy policy;
  policy.host_part_selector = pick;
  policy.excluded_part_selector = pick;
  policy.numbering_order = [rng](std::vector<VertexId>& candidates) {
    std::shuffle(candidates.begin(), candidates.end(), *rng);
  };
  return policy;
}

// GraphBuilder

GraphBuilder::GraphBuilder(Family family, Count parts, Count q, ChoicePolicy policy)
    : family_(family), q_(family == Family::kM ? 1 : q), policy_(std::move(policy)) {
  require_positive(parts, "p");
  require_positive(q, "q");
  if (!policy_.host_part_selector || !policy_.excluded_part_selector ||
      !policy_.numbering_order) {
    throw ConstructionError("schreier: choice policy has an empty rule");
  }
  parts_.resize(static_cast<std::size_t>(parts));

  std::vector<PartIndex> all(parts_.size());
  for (PartIndex i = 0; i < all.size(); ++i) all[i] = i;
  const PartIndex first = choose(policy_.host_part_selector, all, "host");
  parts_[first].push_back(1);
  part_of_.push_back(first);
}

PartIndex GraphBuilder::choose(const ChoicePolicy::PartSelector& selector,
                               std::span<const PartIndex> eligible, const char* what) const {
  if (eligible.empty()) {
    throw ConstructionError(std::string("schreier: no eligible ") + what + " part at n=" +
                            std::to_string(vertex_count()));
  }
  const PartIndex chosen = selector(eligible);
  if (!std::binary_search(eligible.begin(), eligible.end(), chosen)) {
    throw ConstructionError(std::string("schreier: policy chose ineligible ") + what +
                            " part " + std::to_string(chosen) + " at n=" +
                            std::to_string(vertex_count()));
  }
  return chosen;
}

const StepRecord& GraphBuilder::grow() {
  const Count n = vertex_count();
  const Count part_count = static_cast<Count>(parts_.size());
  const GrowthCase growth = classify_growth(n, part_count, q_);
  const auto ell = static_cast<std::size_t>(growth.ell);

  std::vector<PartIndex> small;
  std::vector<PartIndex> large;
  for (PartIndex i = 0; i < parts_.size(); ++i) {
    const std::size_t size = parts_[i].size();
    if (size == ell) {
      small.push_back(i);
    } else if (size == ell + 1) {
      large.push_back(i);
    } else {
      throw ConstructionError("schreier: part sizes are unbalanced at n=" + std::to_string(n));
    }
  }
  if (static_cast<Count>(large.size()) != growth.k) {
    throw ConstructionError("schreier: part-size census disagrees with n=" + std::to_string(n));
  }

  StepRecord step;
  step.vertex = n + 1;
  step.growth = growth;

  // Parts whose vertices are skipped entirely; the host part is handled separately.
  std::optional<PartIndex> excluded;
  bool join_own_part = false;
  switch (growth.tag) {
    case CaseTag::kFull: {
      std::vector<PartIndex> all(parts_.size());
      for (PartIndex i = 0; i < all.size(); ++i) all[i] = i;
      step.host_part = choose(policy_.host_part_selector, all, "host");
      std::vector<PartIndex> others;
      for (PartIndex i : all) {
        if (i != step.host_part) others.push_back(i);
      }
      // With a single part there is nothing to skip; the new vertex then skips
      // its own part so the edge count matches the one-part Turan graph.
      if (!others.empty()) {
        excluded = choose(policy_.excluded_part_selector, others, "excluded");
        join_own_part = true;
      }
      break;
    }
    case CaseTag::kMiddle:
      step.host_part = choose(policy_.host_part_selector, small, "host");
      excluded = choose(policy_.excluded_part_selector, large, "excluded");
      join_own_part = true;
      break;
    case CaseTag::kLow:
      step.host_part = choose(policy_.host_part_selector, small, "host");
      break;
  }
  step.excluded_part = excluded;

  std::vector<VertexId> candidates;
  for (PartIndex i = 0; i < parts_.size(); ++i) {
    if (excluded && i == *excluded) continue;
    if (i == step.host_part && !join_own_part) continue;
    candidates.insert(candidates.end(), parts_[i].begin(), parts_[i].end());
  }
  step.candidates = static_cast<Count>(candidates.size());

  const VertexId v = n + 1;
  const std::size_t edges_before = edges_.size();
  if (family_ == Family::kT) {
    std::vector<VertexId> expected = candidates;
    policy_.numbering_order(candidates);
    std::vector<VertexId> got = candidates;
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    if (got != expected) {
      throw ConstructionError("schreier: numbering order is not a permutation of the candidates");
    }
    // Positions 0, q, 2q, ... carry the number 1.
    for (std::size_t pos = 0; pos < candidates.size(); pos += static_cast<std::size_t>(q_)) {
      edges_.push_back({candidates[pos], v});
    }
  } else {
    for (VertexId u : candidates) edges_.push_back({u, v});
  }
  step.new_edges = static_cast<Count>(edges_.size() - edges_before);

  parts_[step.host_part].push_back(v);
  part_of_.push_back(step.host_part);
  steps_.push_back(step);
  return steps_.back();
}

void GraphBuilder::grow_to(Count n) {
  require_positive(n, "n");
  while (vertex_count() < n) grow();
}

PartiteGraph GraphBuilder::graph() const { return PartiteGraph(parts_, edges_); }

namespace {

PartiteGraph build(Family family, Count n, Count p, Count q, const ChoicePolicy& policy) {
  require_positive(n, "n");
  GraphBuilder builder(family, p, q, policy);
  builder.grow_to(n);
  return builder.graph();
}

}  // namespace

PartiteGraph build_M(Count n, Count p, const ChoicePolicy& policy) {
  return build(Family::kM, n, p, 1, policy);
}

PartiteGraph build_Mq(Count n, Count p, Count q, const ChoicePolicy& policy) {
  return build(Family::kMq, n, p, q, policy);
}

PartiteGraph build_T(Count n, Count p, Count q, const ChoicePolicy& policy) {
  return build(Family::kT, n, p, q, policy);
}

Count turan_edge_count(Count n, Count p) {
  if (n < 0) throw std::invalid_argument("schreier: turan_edge_count needs n >= 0");
  require_positive(p, "p");
  const auto [ell, k] = decompose(n, p, RemainderRange::kZeroBased);
  const Count big = checked_mul(k, checked_mul(ell + 1, ell + 1));
  const Count small = checked_mul(p - k, checked_mul(ell, ell));
  return checked_sub(checked_sub(checked_mul(n, n), big), small) / 2;
}

Count growth_delta(Count n, Count p, Count q) {
  require_positive(n, "n");
  require_positive(p, "p");
  require_positive(q, "q");
  const Count pq = checked_mul(p, q);
  const auto [ell, k] = decompose(n, pq + 1, RemainderRange::kZeroBased);
  Count census = 0;
  if (k == pq) {
    census = checked_mul(pq, ell + 1);
  } else if ((p - 1) * q < k) {
    census = checked_add(checked_mul(ell, pq - k), checked_mul(ell + 1, k));
  } else {
    census = checked_add(checked_mul(ell, pq - k - 1), checked_mul(ell + 1, k + 1));
  }
  return floor_div(census - 1, q) + 1;
}

}  // namespace schreier
