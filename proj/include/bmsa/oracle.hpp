#pragma once

#include <string>
#include <vector>

#include "bmsa/locator.hpp"
#include "bmsa/order.hpp"
#include "bmsa/poly.hpp"

namespace bmsa {

struct FootprintResult {
  DeltaSet delta;
  std::vector<BivariatePoly> basis;  // reduced; leading points = defining points
};

// Footprint and reduced basis of the relation ideal of a fully known
// period, by direct linear algebra: candidate leading points are scanned in
// increasing order and a dense solve decides whether a valid polynomial
// exists below the staircase. Deliberately slow and simple; this is the
// trust anchor for the iterative path.
FootprintResult footprint_bruteforce(const Field&, const PeriodicArray& U, OrderKind);

// f[U]_n = 0 for every n in LP(f) + one full period.
bool membership_full(const Field&, const BivariatePoly& f, const PeriodicArray& U);

struct UniquenessReport {
  long long checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Exhaustive sweep over all error polynomials of weight <= t on the r1 x r2
// grid with coefficients in the base field of size q: distinct polynomials
// must have distinct S(t) syndrome restrictions for every translation, each
// footprint must match the error weight, and completion from the S(t)
// restriction must reproduce the full table.
UniquenessReport exhaustive_uniqueness(const Field&, int r1, int r2, std::int64_t q, int t);

}  // namespace bmsa
