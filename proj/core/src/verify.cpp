#include "schreier/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "schreier/graph.hpp"

namespace schreier {

Count lemma1_count(Count n_candidates, Count q) {
  if (n_candidates < 1 || q < 1) {
    throw std::invalid_argument("schreier: lemma1_count needs N >= 1 and q >= 1");
  }
  return (n_candidates - 1) / q + 1;
}

bool lemma2_holds(Count k, Count p, Count q) {
  if (p < 1 || q < 1 || k < 1 || k > checked_mul(p - 1, q)) {
    throw std::out_of_range("schreier: lemma2_holds needs 1 <= k <= (p-1) q");
  }
  const Count lhs = k / q;
  const Count rhs = checked_add(checked_mul(p, k), p - 1) / checked_add(checked_mul(p, q), 1);
  return lhs == rhs;
}

bool lemma2_boundary_holds(Count k, Count p, Count q) {
  if (p < 1 || q < 1 || k <= checked_mul(p - 1, q) || k > checked_mul(p, q)) {
    throw std::out_of_range("schreier: lemma2_boundary_holds needs (p-1) q < k <= pq");
  }
  const Count lhs = checked_add(checked_mul(p, k), p - 1) / checked_add(checked_mul(p, q), 1);
  const Count rhs = (k - 1) / q;
  return lhs == p - 1 && rhs == p - 1;
}

namespace {

// Builds the report for params.n from a T(., pq+1, q) builder that has already
// grown to at least n + 1 vertices. `edges_at[m]` is the edge count with m vertices.
VerificationReport make_report(const SchreierParams& params, const std::vector<Count>& edges_at,
                               std::span<const StepRecord> steps) {
  VerificationReport report;
  report.params = params;
  const Count n = params.n;
  const Count p = params.p;
  const Count q = params.q;

  auto fail = [&report](const std::string& what) {
    if (report.failure.empty()) report.failure = what;
  };

  try {
    report.sr_bf = sr_bruteforce(params);
    report.sr_sum = sr_partial_sum(params);
    report.t_edges = edges_at[static_cast<std::size_t>(n + 1)];

    report.deltas_ok = true;
    // steps[m] adds vertex m + 2, i.e. goes from T(m+1, .) to T(m+2, .).
    for (Count m = 1; m < n; ++m) {
      const StepRecord& step = steps[static_cast<std::size_t>(m)];
      const Count built = edges_at[static_cast<std::size_t>(m + 2)] -
                          edges_at[static_cast<std::size_t>(m + 1)];
      const Count census = growth_delta(m, p, q);
      const Count largest_progression = sr_difference(m, p, q);
      const Count floor_term = partial_sum_term(m, p, q);
      const Count numbered = lemma1_count(step.candidates, q);
      if (built != census || built != largest_progression || built != floor_term ||
          built != numbered || built != step.new_edges) {
        std::ostringstream msg;
        msg << "step n=" << m << ": built " << built << ", growth_delta " << census
            << ", sr_difference " << largest_progression << ", floor term " << floor_term
            << ", lemma1 " << numbered;
        fail(msg.str());
        report.deltas_ok = false;
        break;
      }
    }

    if (report.sr_bf != report.sr_sum) {
      fail("sr_bruteforce " + std::to_string(report.sr_bf) + " != sr_partial_sum " +
           std::to_string(report.sr_sum));
    }
    if (report.sr_bf != report.t_edges) {
      fail("sr_bruteforce " + std::to_string(report.sr_bf) + " != edges of T(n+1, pq+1, q) " +
           std::to_string(report.t_edges));
    }
  } catch (const std::exception& e) {
    report.deltas_ok = false;
    fail(std::string("exception: ") + e.what());
  }

  report.status = report.failure.empty() ? Status::kPass : Status::kFail;
  return report;
}

// One (p, q) cell: a single incremental construction serves n = 1..n_max.
std::vector<VerificationReport> verify_cell(Count p, Count q, Count n_max) {
  std::vector<VerificationReport> reports;
  reports.reserve(static_cast<std::size_t>(n_max));

  std::vector<Count> edges_at{0};
  std::vector<StepRecord> steps;
  try {
    GraphBuilder builder(Family::kT, checked_add(checked_mul(p, q), 1), q,
                         ChoicePolicy::canonical());
    edges_at.push_back(builder.edge_count());
    while (builder.vertex_count() < n_max + 1) {
      builder.grow();
      edges_at.push_back(builder.edge_count());
    }
    steps.assign(builder.steps().begin(), builder.steps().end());
  } catch (const std::exception& e) {
    for (Count n = 1; n <= n_max; ++n) {
      VerificationReport report;
      report.params = {n, p, q};
      report.failure = std::string("construction failed: ") + e.what();
      reports.push_back(std::move(report));
    }
    return reports;
  }

  for (Count n = 1; n <= n_max; ++n) {
    reports.push_back(make_report({n, p, q}, edges_at, steps));
  }
  return reports;
}

}  // namespace

VerificationReport verify_identity(const SchreierParams& params) {
  try {
    params.validate();
  } catch (const std::exception& e) {
    VerificationReport report;
    report.params = params;
    report.failure = e.what();
    return report;
  }
  return verify_cell(params.p, params.q, params.n).back();
}

std::vector<VerificationReport> sweep(const SweepBounds& bounds, unsigned threads) {
  if (bounds.n_max < 1 || bounds.p_max < 1 || bounds.q_max < 1) {
    throw std::invalid_argument("schreier: sweep bounds must be >= 1");
  }
  const auto cells = static_cast<std::size_t>(checked_mul(bounds.p_max, bounds.q_max));
  std::vector<std::vector<VerificationReport>> results(cells);

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, cells));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t cell = next++; cell < cells; cell = next++) {
      const Count p = static_cast<Count>(cell) / bounds.q_max + 1;
      const Count q = static_cast<Count>(cell) % bounds.q_max + 1;
      results[cell] = verify_cell(p, q, bounds.n_max);
    }
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  std::vector<VerificationReport> merged;
  merged.reserve(cells * static_cast<std::size_t>(bounds.n_max));
  for (auto& cell : results) {
    std::move(cell.begin(), cell.end(), std::back_inserter(merged));
  }
  return merged;
}

}  // namespace schreier
