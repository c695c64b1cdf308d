// Acceptance suite: one pass/fail line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "schreier/graph.hpp"
#include "schreier/io.hpp"
#include "schreier/schreier.hpp"
#include "schreier/verify.hpp"

using namespace schreier;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
};

struct Criterion {
  std::string id;
  std::string title;
  double budget_seconds;  // 0 = no runtime bound
  std::function<Outcome()> body;
};

std::string cell(Count n, Count p, Count q) {
  return "(n=" + std::to_string(n) + ", p=" + std::to_string(p) + ", q=" + std::to_string(q) + ")";
}

Outcome paper_sequence() {
  Outcome o;
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run({"seq", "--p", "2", "--q", "2", "--n-max", "19"}, out, err);
  const std::string expected =
      "1, 2, 4, 6, 8, 11, 14, 18, 22, 26, 31, 36, 42, 48, 54, 61, 68, 76, 84\n";
  if (code != 0) o.fail("exit code " + std::to_string(code));
  if (out.str() != expected) o.fail("output was: " + out.str());
  return o;
}

Outcome three_paths() {
  Outcome o;
  for (Count p = 1; p <= 5; ++p) {
    for (Count q = 1; q <= 5; ++q) {
      for (Count n = 1; n <= 100; ++n) {
        const Count bf = sr_bruteforce({n, p, q});
        const Count edges = edge_count(build_T(n + 1, p * q + 1, q));
        const Count sum = sr_partial_sum({n, p, q});
        if (bf != edges || bf != sum) {
          o.fail(cell(n, p, q) + ": enumeration " + std::to_string(bf) + ", edges " +
                 std::to_string(edges) + ", partial sum " + std::to_string(sum));
          return o;
        }
      }
    }
  }
  return o;
}

Outcome turan_specialization() {
  Outcome o;
  for (Count p = 1; p <= 8; ++p) {
    for (Count n = 1; n <= 100; ++n) {
      const Count bf = sr_bruteforce({n, p, 1});
      const Count t = turan_edge_count(n + 1, p + 1);
      if (bf != t) {
        o.fail(cell(n, p, 1) + ": " + std::to_string(bf) + " vs " + std::to_string(t));
        return o;
      }
    }
  }
  return o;
}

Outcome difference_law() {
  Outcome o;
  for (Count p = 1; p <= 5; ++p) {
    for (Count q = 1; q <= 5; ++q) {
      Count previous = sr_bruteforce({1, p, q});
      for (Count n = 1; n <= 100; ++n) {
        const Count next = sr_bruteforce({n + 1, p, q});
        const Count expected = (p * (n + q + 1)) / (p * q + 1);
        if (next - previous != expected) {
          o.fail(cell(n, p, q) + ": difference " + std::to_string(next - previous) +
                 ", floor term " + std::to_string(expected));
          return o;
        }
        previous = next;
      }
    }
  }
  return o;
}

Outcome lemma2_exhaustive() {
  Outcome o;
  for (Count p = 2; p <= 20; ++p) {
    for (Count q = 1; q <= 20; ++q) {
      for (Count k = 1; k <= (p - 1) * q; ++k) {
        if (!lemma2_holds(k, p, q)) {
          o.fail("k=" + std::to_string(k) + " p=" + std::to_string(p) + " q=" + std::to_string(q));
          return o;
        }
      }
    }
  }
  return o;
}

// Edge counts of each prefix of a construction. Construction is sequential, so
// the graph after n vertices equals build_X(n, ...) under the same policy.
std::vector<Count> prefix_counts(Family family, Count p, Count q, const ChoicePolicy& policy,
                                 Count n_max) {
  GraphBuilder builder(family, p, q, policy);
  std::vector<Count> counts{builder.edge_count()};
  while (builder.vertex_count() < n_max) {
    builder.grow();
    counts.push_back(builder.edge_count());
  }
  return counts;
}

Outcome policy_invariance() {
  Outcome o;
  constexpr int kPolicies = 50;
  for (Family family : {Family::kM, Family::kMq, Family::kT}) {
    for (Count p = 1; p <= 6; ++p) {
      for (Count q = 1; q <= 4; ++q) {
        const auto reference = prefix_counts(family, p, q, ChoicePolicy::canonical(), 40);
        for (int i = 0; i < kPolicies; ++i) {
          const std::uint64_t seed = 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(
                                                                  (p * 16 + q) * 64 + i + 1);
          const auto got = prefix_counts(family, p, q, ChoicePolicy::random(seed), 40);
          if (got != reference) {
            o.fail("family " + std::to_string(static_cast<int>(family)) + " p=" +
                   std::to_string(p) + " q=" + std::to_string(q) + " seed " + std::to_string(seed));
            return o;
          }
        }
      }
    }
  }
  return o;
}

Outcome per_step_deltas() {
  Outcome o;
  for (Count p = 1; p <= 5; ++p) {
    for (Count q = 1; q <= 5; ++q) {
      GraphBuilder builder(Family::kT, p * q + 1, q, ChoicePolicy::canonical());
      builder.grow_to(101);
      const auto steps = builder.steps();
      // steps[n] goes from T(n+1, pq+1, q) to T(n+2, pq+1, q).
      for (Count n = 1; n <= 99; ++n) {
        const StepRecord& step = steps[static_cast<std::size_t>(n)];
        const Count delta = growth_delta(n, p, q);
        const Count lemma = lemma1_count(step.candidates, q);
        if (step.new_edges != delta || step.new_edges != lemma) {
          o.fail(cell(n, p, q) + ": step adds " + std::to_string(step.new_edges) +
                 ", growth_delta " + std::to_string(delta) + ", lemma1 " + std::to_string(lemma));
          return o;
        }
      }
    }
  }
  return o;
}

Outcome export_determinism() {
  Outcome o;
  for (Count n = 2; n <= 7; ++n) {
    const auto first = export_graph(build_T(n, 5, 2));
    const auto second = export_graph(build_T(n, 5, 2));
    if (first != second) o.fail("T(" + std::to_string(n) + ",5,2) export differs between builds");
    if (edge_count(build_T(n, 5, 2)) != sr_bruteforce({n - 1, 2, 2})) {
      o.fail("T(" + std::to_string(n) + ",5,2) edge count differs from Sr(n-1,2,2)");
    }
  }
  return o;
}

Outcome oeis_cross_check() {
  Outcome o;
  std::ifstream in(std::string(SCHREIER_FIXTURE_DIR) + "/b002620.txt");
  if (!in) {
    o.fail("fixture missing");
    return o;
  }
  std::stringstream text;
  text << in.rdbuf();
  const auto entries = read_bfile(text.str());
  if (entries.size() < 100) o.fail("fixture has only " + std::to_string(entries.size()) + " terms");
  std::vector<Count> turan;
  for (const auto& e : entries) {
    turan.push_back(turan_edge_count(e.index, 2));
    if (e.value != e.index * e.index / 4) o.fail("fixture term " + std::to_string(e.index));
  }
  const auto cmp = compare_sequences(bfile_values(entries), turan);
  if (cmp.mismatch || cmp.agreement != entries.size()) {
    o.fail("agreement " + std::to_string(cmp.agreement) + " of " + std::to_string(entries.size()));
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "Sr(n,2,2) sequence reproduced by `seq`", 1.0, paper_sequence},
      {"AC2", "enumeration = T(n+1,pq+1,q) edges = partial sum, n<=100 p,q<=5", 60.0, three_paths},
      {"AC3", "Sr(n,p,1) = Turan T(n+1,p+1), n<=100 p<=8", 10.0, turan_specialization},
      {"AC4", "Sr(n+1)-Sr(n) = floor(p(n+q+1)/(pq+1)), n<=100 p,q<=5", 0.0, difference_law},
      {"AC5", "floor identity on 1<=k<=(p-1)q, p,q<=20", 1.0, lemma2_exhaustive},
      {"AC6", "M, M_q, T edge counts policy-independent, 50 policies/cell", 120.0,
       policy_invariance},
      {"AC7", "per-step increments = growth_delta = lemma1_count(|V|,q)", 0.0, per_step_deltas},
      {"AC7b", "T(n,5,2), 2<=n<=7: byte-identical re-export", 0.0, export_determinism},
      {"AC8", "T(n,2) edge counts agree with A002620 fixture (>=100 terms)", 0.0,
       oeis_cross_check},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds >= c.budget_seconds) {
      outcome.fail("runtime " + std::to_string(seconds) + " s exceeds " +
                   std::to_string(c.budget_seconds) + " s");
    }
    std::cout << (outcome.ok ? "[PASS] " : "[FAIL] ") << c.id << " " << c.title << " ("
              << seconds << " s)";
    if (!outcome.ok) std::cout << ": " << outcome.detail;
    std::cout << "\n";
    if (!outcome.ok) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
