#pragma once

#include <optional>
#include <random>
#include <set>
#include <span>
#include <vector>

#include "bmsa/bms.hpp"
#include "bmsa/locator.hpp"
#include "bmsa/order.hpp"
#include "bmsa/poly.hpp"

namespace bmsa {

// {(a1 q^i mod r1, a2 q^i mod r2)}.
std::vector<Point> q_orbit(Point a, std::int64_t q, int r1, int r2);

// Bivariate abelian code: an ideal of F(r1,r2) cut out by a defining set
// that is a union of q-orbits. Immutable after creation.
struct AbelianCode {
  int r1 = 0;
  int r2 = 0;
  std::int64_t q = 0;
  std::set<Point, PointLess> defining_set;

  bool in_defining_set(Point n) const;  // reduces mod (r1, r2)
};

AbelianCode code_create(int r1, int r2, std::int64_t q, std::span<const Point> orbit_reps);

// First tau (row-major) with tau + S(t) inside the defining set, if any.
std::optional<Point> find_tau(const AbelianCode&, int t);

// Capability and translation point from the two-variable BCH bound:
// gamma = {k}: t <= floor((delta_k - 1)/2); gamma = {1,2}: t <= d1+d2-3;
// both capped by floor(r_i/2).
struct BchBound {
  int t = 0;
  Point tau;
};
BchBound bch_capability(const std::set<int>& gamma, int delta1, int delta2, int b1, int b2,
                        int r1, int r2);

// Coefficient grid over the base field, indexed by I (row-major).
struct Word {
  int r1 = 0;
  int r2 = 0;
  std::vector<FieldElement> coeffs;  // r1 * r2 entries, all in the base field

  FieldElement at(Point n) const;
  void set(Point n, FieldElement v);
  static Word zero(int r1, int r2);
  friend bool operator==(const Word&, const Word&) = default;
};

Word word_from_poly(const BivariatePoly&, int r1, int r2);
BivariatePoly word_to_poly(const Word&);
Word word_sub(const Field&, const Word&, const Word&);
int word_distance(const Word&, const Word&);
FieldElement evaluate_word(const Field&, const Word&, AlphaPair alpha, Point n);

struct DecodeResult {
  BivariatePoly error;
  Word corrected;
  Point tau;
  bool condition_ok = true;
  std::vector<TraceRecord> trace;
};

// Full locator decode: syndromes on tau + S(t) from the received word, the
// iteration over S(t), support recovery, coefficient solve, and a final
// check that the corrected word vanishes on the whole defining set.
DecodeResult decode(const Field&, const AbelianCode&, const Word& received, int t, OrderKind,
                    std::optional<Point> tau = std::nullopt);

// Test fabricator: a codeword drawn by inverse transform from a random
// spectrum vanishing on the defining set (conjugacy-closed so that the
// coefficients land in the base field).
Word random_codeword(const Field&, const AbelianCode&, std::mt19937_64& rng);

// Random error of exact weight w with coefficients in the base field.
BivariatePoly random_error(const Field&, const AbelianCode&, int w, std::mt19937_64& rng);

}  // namespace bmsa
