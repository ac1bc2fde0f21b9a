#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bmsa/order.hpp"
#include "bmsa/poly.hpp"

namespace bmsa {

// r1 x r2 grid over the extension field with a known-mask; indexes reduce
// modulo the period.
class PeriodicArray {
 public:
  PeriodicArray(int r1, int r2);

  int r1() const { return r1_; }
  int r2() const { return r2_; }
  void set(Point n, FieldElement v);
  std::optional<FieldElement> at(Point n) const;  // nullopt while unknown
  FieldElement get(Point n) const;                // throws MissingInitialValue
  bool fully_known() const;

  friend bool operator==(const PeriodicArray&, const PeriodicArray&) = default;

 private:
  std::size_t slot(Point n) const;
  int r1_, r2_;
  std::vector<FieldElement> vals_;
  std::vector<char> known_;
};

using AlphaPair = std::pair<FieldElement, FieldElement>;

// u_n = e(alpha1^{tau1+n1}, alpha2^{tau2+n2}) for each requested index.
ValueMap syndromes(const Field&, const BivariatePoly& e, Point tau, AlphaPair alpha,
                   std::span<const Point> indices);

// Full r1 x r2 syndrome table afforded by e and tau.
PeriodicArray syndrome_table(const Field&, const BivariatePoly& e, Point tau, AlphaPair alpha,
                             Point period);

// Fill a full period from a normal-form basis and the known values: for an
// unknown index n, X^n is reduced modulo the basis and u_n is read off the
// remainder, whose support lies inside the delta-set (all known). Known
// entries are preserved exactly.
PeriodicArray complete_array(const Field&, std::span<const BivariatePoly> basis_nf,
                             const ValueMap& known, OrderKind, Point period);

// {n in I : f(alpha^n) = 0 for all f}; equals supp(e) on syndrome tables.
std::vector<Point> support_from_basis(const Field&, std::span<const BivariatePoly> basis,
                                      AlphaPair alpha, Point period);

// Solve e(alpha^{tau+n}) = u_n, n in S(t), for the coefficients on the given
// support; coefficients must land in the subfield of size q. For q = 2 the
// solve degenerates to a consistency check with all-ones coefficients.
BivariatePoly solve_coefficients(const Field&, std::span<const Point> support,
                                 const ValueMap& syndromes, Point tau, AlphaPair alpha,
                                 std::int64_t q);

struct TerminationCheck {
  bool ok = false;
  BivariatePoly candidate;
  std::string reason;
};

// Build e_F with supp(e_F) = D_alpha(F) and test whether it reproduces every
// S(t) value; a true verdict certifies e = e_F.
TerminationCheck termination_check(const Field&, std::span<const BivariatePoly> basis,
                                   const ValueMap& syndromes, Point tau, AlphaPair alpha,
                                   std::int64_t q);

}  // namespace bmsa
