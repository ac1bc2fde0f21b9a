#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bmsa/errors.hpp"

namespace bmsa {

// Element of GF(p^m) in discrete-log form: a^log for the primitive root a,
// or zero (log == -1). Plain value; all arithmetic goes through Field.
struct FieldElement {
  std::int32_t log = -1;

  constexpr bool is_zero() const { return log < 0; }
  friend constexpr bool operator==(FieldElement, FieldElement) = default;
};

inline constexpr FieldElement fe_zero{-1};
inline constexpr FieldElement fe_one{0};

// GF(p^m) built from a primitive polynomial, with log/antilog tables.
// Immutable after create(); safe to share across threads.
class Field {
 public:
  // poly holds c0..cm with cm == 1; throws NotPrimitive / NotIrreducible /
  // FieldTooLarge / ConfigError.
  static Field create(int p, int m, const std::vector<int>& poly);

  int p() const { return p_; }
  int m() const { return m_; }
  std::int64_t order() const { return q_; }              // p^m
  std::int64_t group_order() const { return q_ - 1; }    // |GF(p^m)*|
  const std::vector<int>& primitive_poly() const { return poly_; }

  FieldElement zero() const { return fe_zero; }
  FieldElement one() const { return fe_one; }
  FieldElement generator() const;  // the root a of the primitive polynomial

  FieldElement from_log(std::int64_t k) const;     // a^k, k reduced mod p^m-1
  FieldElement from_int(std::int64_t n) const;     // n * 1 (prime-subfield element)

  FieldElement add(FieldElement, FieldElement) const;
  FieldElement neg(FieldElement) const;
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement mul(FieldElement, FieldElement) const;
  FieldElement inv(FieldElement) const;  // throws DivisionByZero
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement, std::int64_t n) const;

  // a^{(p^m-1)/r}; throws OrderNotDividing if r does not divide p^m-1.
  FieldElement root_of_unity(std::int64_t r) const;

  // True iff x lies in the subfield of size q_sub (x^q_sub == x).
  // q_sub must be p^d with d | m; throws BadSubfield otherwise.
  bool in_base_field(FieldElement x, std::int64_t q_sub) const;
  std::vector<FieldElement> subfield_elements(std::int64_t q_sub) const;

  std::string format(FieldElement) const;            // "0" or "a^k"
  FieldElement parse(std::string_view) const;        // inverse of format; also accepts "1"

  // Additive (coefficient-vector) representation packed base p.
  std::int64_t poly_rep(FieldElement) const;
  FieldElement from_poly_rep(std::int64_t) const;

 private:
  Field() = default;

  int p_ = 0;
  int m_ = 0;
  std::int64_t q_ = 0;
  std::vector<int> poly_;
  std::vector<std::int32_t> log_;    // poly-rep -> exponent (log_[0] = -1)
  std::vector<std::int64_t> alog_;   // exponent -> poly-rep
};

}  // namespace bmsa
