#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "schreier/checked.hpp"
#include "schreier/schreier.hpp"

namespace schreier {

// floor((n_candidates - 1)/q) + 1: how many of n_candidates vertices get the
// number 1 when numbered cyclically 1..q. Requires n_candidates, q >= 1.
Count lemma1_count(Count n_candidates, Count q);

// floor(k/q) == floor((pk + p - 1)/(pq + 1)) on 1 <= k <= (p-1) q.
// Throws std::out_of_range outside that range.
bool lemma2_holds(Count k, Count p, Count q);

// Companion range (p-1) q < k <= pq: floor((pk + p - 1)/(pq + 1)) and
// floor((k-1)/q) both equal p - 1. Throws std::out_of_range outside it.
bool lemma2_boundary_holds(Count k, Count p, Count q);

enum class Status { kPass, kFail };

struct VerificationReport {
  SchreierParams params{};
  Count sr_bf = 0;
  Count sr_sum = 0;
  Count t_edges = 0;  // edge count of T(n+1, pq+1, q) under the canonical policy
  bool deltas_ok = false;
  Status status = Status::kFail;
  std::string failure;  // first failure, empty on pass

  bool passed() const { return status == Status::kPass; }
};

// Compares the enumeration count, the partial-sum formula and the edge count of
// the constructed graph, and checks every growth step of that construction
// against growth_delta, sr_difference, partial_sum_term and lemma1_count.
// Disagreements are recorded in the report, never thrown.
VerificationReport verify_identity(const SchreierParams& params);

struct SweepBounds {
  Count n_max = 1;
  Count p_max = 1;
  Count q_max = 1;
};

// verify_identity over 1..n_max x 1..p_max x 1..q_max, ordered by (p, q, n).
// Each (p, q) cell grows one graph and reuses it for every n. Cells run on up
// to `threads` worker threads (0 picks the hardware concurrency).
std::vector<VerificationReport> sweep(const SweepBounds& bounds, unsigned threads = 1);

}  // namespace schreier
