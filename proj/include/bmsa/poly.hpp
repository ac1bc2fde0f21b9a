#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bmsa/ff.hpp"
#include "bmsa/order.hpp"

namespace bmsa {

class PeriodicArray;

// Sparse bivariate polynomial over the extension field. Immutable value
// semantics: arithmetic returns new polynomials; zero coefficients are
// never stored.
class BivariatePoly {
 public:
  BivariatePoly() = default;  // the zero polynomial

  static BivariatePoly constant(FieldElement c);
  static BivariatePoly monomial(Point m, FieldElement c);
  static const BivariatePoly& one();

  bool is_zero() const { return terms_.empty(); }
  int weight() const { return static_cast<int>(terms_.size()); }
  const ValueMap& terms() const { return terms_; }
  FieldElement coeff(Point m) const;
  std::vector<Point> support() const;

  BivariatePoly scaled(const Field&, FieldElement c) const;
  BivariatePoly shifted(Point t) const;  // X^t * f

  void set_term(Point m, FieldElement c);  // erases the term when c == 0

  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

 private:
  ValueMap terms_;
};

BivariatePoly add(const Field&, const BivariatePoly&, const BivariatePoly&);
BivariatePoly sub(const Field&, const BivariatePoly&, const BivariatePoly&);
// X^t * f + g, with cancellation of equal terms.
BivariatePoly shift_add(const Field&, const BivariatePoly& f, Point t, const BivariatePoly& g);

// Max of supp(f) under the order; throws ZeroPolynomial.
Point leading_point(const BivariatePoly&, OrderKind);
FieldElement leading_coeff(const BivariatePoly&, OrderKind);

FieldElement evaluate(const Field&, const BivariatePoly&, FieldElement a1, FieldElement a2);

// Read-only window onto array values: either a full doubly periodic array
// (indexes reduced mod the period) or a partial map keyed by literal
// indexes. Unknown positions are reported, never fabricated.
class ArrayView {
 public:
  static ArrayView full(const PeriodicArray&);
  static ArrayView partial(const ValueMap&, Point period);

  std::optional<FieldElement> at(Point) const;
  bool partial_view() const { return partial_ != nullptr; }
  Point period() const { return period_; }

 private:
  const PeriodicArray* full_ = nullptr;
  const ValueMap* partial_ = nullptr;
  Point period_{0, 0};
};

struct NeedsIndex {
  Point index;
};

using RecurrenceValue = std::variant<FieldElement, NeedsIndex>;

// f[u]_n = sum f_m u_{m+n-s} (s = LP(f)) when s <= n componentwise, else 0.
// On a partial view, an unknown index yields NeedsIndex with the first
// missing position; the caller decides what that means.
RecurrenceValue recurrence_value(const Field&, const BivariatePoly& f, const ArrayView& u,
                                 Point n, OrderKind);

// Text form "a^k*X1^i*X2^j" summed with '+', unit parts omitted,
// terms in decreasing lex order. parse_poly inverts format_poly.
std::string format_poly(const Field&, const BivariatePoly&);
BivariatePoly parse_poly(const Field&, std::string_view);

}  // namespace bmsa
