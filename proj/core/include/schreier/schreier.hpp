#pragma once

#include <cstddef>
#include <iterator>
#include <vector>

#include "schreier/checked.hpp"

namespace schreier {

// The triple (n, p, q): count subsets of [n] that are singletons or arithmetic
// progressions with difference q, subject to p * min F >= |F|.
struct SchreierParams {
  Count n = 1;
  Count p = 1;
  Count q = 1;

  // Throws std::invalid_argument unless n, p, q >= 1.
  void validate() const;

  friend bool operator==(const SchreierParams&, const SchreierParams&) = default;
};

// F = {start, start + difference, ..., start + (length - 1) * difference}.
// A length-1 set is a singleton and belongs to every progression family.
struct APSet {
  Count start = 1;
  Count length = 1;
  Count difference = 1;

  Count min() const { return start; }
  Count max() const;
  std::vector<Count> elements() const;

  friend bool operator==(const APSet&, const APSet&) = default;
};

// p * min F >= |F| and max F <= n. Throws std::invalid_argument when a set of
// length > 1 carries a difference other than params.q, or is malformed.
bool is_admissible(const APSet& f, const SchreierParams& params);

// Lazily yields every admissible set exactly once, ordered by (start, length).
class AdmissibleSets {
 public:
  class iterator {
   public:
    using value_type = APSet;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;

    const APSet& operator*() const { return current_; }
    const APSet* operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }

    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return it.current_.start > it.params_.n;
    }

   private:
    friend class AdmissibleSets;
    iterator(SchreierParams params);

    SchreierParams params_{};
    APSet current_{};
  };

  explicit AdmissibleSets(SchreierParams params);

  iterator begin() const { return iterator(params_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  SchreierParams params_;
};

AdmissibleSets enumerate_admissible(const SchreierParams& params);

// Exact count by enumeration. This is the reference every other path is checked against.
Count sr_bruteforce(const SchreierParams& params);

// floor(p (n + q + 1) / (pq + 1)), the n-th increment of the counting sequence.
Count partial_sum_term(Count n, Count p, Count q);

// 1 + sum_{i=1}^{n-1} partial_sum_term(i, p, q).
Count sr_partial_sum(const SchreierParams& params);

enum class RemainderRange {
  kOneBased,   // n = m * ell + k, 1 <= k <= m
  kZeroBased,  // n = m * ell + k, 0 <= k <  m
};

struct Decomposition {
  Count ell = 0;
  Count k = 0;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Splits n by modulus m under the requested remainder convention. The one-based
// form needs n >= 1, the zero-based form n >= 0.
Decomposition decompose(Count n, Count modulus, RemainderRange range);

// Sr(n+1, p, q) - Sr(n, p, q) from the largest-progression argument: with
// n = (pq+1) ell + k, 0 <= k <= pq, this is floor((n - ell - 1)/q) + 1 when
// (p-1) q < k <= pq and floor((n - ell)/q) + 1 otherwise.
Count sr_difference(Count n, Count p, Count q);

}  // namespace schreier
