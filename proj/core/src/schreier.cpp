#include "schreier/schreier.hpp"

#include <stdexcept>
#include <string>

namespace schreier {

namespace {

// start + (length - 1) * difference <= n and p * start >= length, overflow-safe.
bool fits(Count start, Count length, const SchreierParams& params) {
  if (checked_mul(params.p, start) < length) return false;
  return checked_add(start, checked_mul(length - 1, params.q)) <= params.n;
}

}  // namespace

void SchreierParams::validate() const {
  if (n < 1 || p < 1 || q < 1) {
    throw std::invalid_argument("schreier: parameters must satisfy n, p, q >= 1 (got n=" +
                                std::to_string(n) + ", p=" + std::to_string(p) +
                                ", q=" + std::to_string(q) + ")");
  }
}

Count APSet::max() const {
  return checked_add(start, checked_mul(length - 1, difference));
}

std::vector<Count> APSet::elements() const {
  std::vector<Count> out;
  out.reserve(static_cast<std::size_t>(length));
  for (Count i = 0; i < length; ++i) out.push_back(start + i * difference);
  return out;
}

bool is_admissible(const APSet& f, const SchreierParams& params) {
  params.validate();
  if (f.start < 1 || f.length < 1 || f.difference < 1) {
    throw std::invalid_argument("schreier: malformed progression set");
  }
  if (f.length > 1 && f.difference != params.q) {
    throw std::invalid_argument("schreier: progression difference " +
                                std::to_string(f.difference) + " does not match q=" +
                                std::to_string(params.q));
  }
  return fits(f.start, f.length, params);
}

AdmissibleSets::iterator::iterator(SchreierParams params)
    : params_(params), current_{1, 1, params.q} {}

AdmissibleSets::iterator& AdmissibleSets::iterator::operator++() {
  // For a fixed start the admissible lengths form a prefix 1..L(start).
  if (fits(current_.start, current_.length + 1, params_)) {
    ++current_.length;
  } else {
    ++current_.start;
    current_.length = 1;
  }
  return *this;
}

AdmissibleSets::AdmissibleSets(SchreierParams params) : params_(params) {
  params_.validate();
}

AdmissibleSets enumerate_admissible(const SchreierParams& params) {
  return AdmissibleSets(params);
}

Count sr_bruteforce(const SchreierParams& params) {
  Count count = 0;
  for ([[maybe_unused]] const APSet& f : enumerate_admissible(params)) {
    count = checked_add(count, 1);
  }
  return count;
}

Count partial_sum_term(Count n, Count p, Count q) {
  const Count numerator = checked_mul(p, checked_add(checked_add(n, q), 1));
  const Count denominator = checked_add(checked_mul(p, q), 1);
  return floor_div(numerator, denominator);
}

Count sr_partial_sum(const SchreierParams& params) {
  params.validate();
  Count total = 1;
  for (Count i = 1; i < params.n; ++i) {
    total = checked_add(total, partial_sum_term(i, params.p, params.q));
  }
  return total;
}

Decomposition decompose(Count n, Count modulus, RemainderRange range) {
  if (modulus < 1) throw std::invalid_argument("schreier: decompose needs modulus >= 1");
  switch (range) {
    case RemainderRange::kOneBased: {
      if (n < 1) throw std::invalid_argument("schreier: one-based decomposition needs n >= 1");
      const Count ell = (n - 1) / modulus;
      return {ell, n - ell * modulus};
    }
    case RemainderRange::kZeroBased: {
      if (n < 0) throw std::invalid_argument("schreier: zero-based decomposition needs n >= 0");
      return {n / modulus, n % modulus};
    }
  }
  throw std::invalid_argument("schreier: unknown remainder range");
}

Count sr_difference(Count n, Count p, Count q) {
  SchreierParams{n, p, q}.validate();
  const Count pq = checked_mul(p, q);
  const auto [ell, k] = decompose(n, pq + 1, RemainderRange::kZeroBased);
  if ((p - 1) * q < k && k <= pq) {
    return floor_div(n - ell - 1, q) + 1;
  }
  return floor_div(n - ell, q) + 1;
}

}  // namespace schreier
