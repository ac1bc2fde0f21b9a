#include "bmsa/locator.hpp"

#include <algorithm>
#include <numeric>

namespace bmsa {

namespace {

std::string point_str(Point p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

}  // namespace

PeriodicArray::PeriodicArray(int r1, int r2) : r1_(r1), r2_(r2) {
  if (r1 < 1 || r2 < 1) throw Error(Errc::ConfigError, "period components must be positive");
  vals_.assign(static_cast<std::size_t>(r1) * static_cast<std::size_t>(r2), fe_zero);
  known_.assign(vals_.size(), 0);
}

std::size_t PeriodicArray::slot(Point n) const {
  int x = ((n.x % r1_) + r1_) % r1_;
  int y = ((n.y % r2_) + r2_) % r2_;
  return static_cast<std::size_t>(x) * static_cast<std::size_t>(r2_) + static_cast<std::size_t>(y);
}

void PeriodicArray::set(Point n, FieldElement v) {
  std::size_t i = slot(n);
  vals_[i] = v;
  known_[i] = 1;
}

std::optional<FieldElement> PeriodicArray::at(Point n) const {
  std::size_t i = slot(n);
  if (!known_[i]) return std::nullopt;
  return vals_[i];
}

FieldElement PeriodicArray::get(Point n) const {
  std::optional<FieldElement> v = at(n);
  if (!v) throw Error(Errc::MissingInitialValue, "array value unknown at " + point_str(n));
  return *v;
}

bool PeriodicArray::fully_known() const {
  return std::all_of(known_.begin(), known_.end(), [](char k) { return k != 0; });
}

ValueMap syndromes(const Field& F, const BivariatePoly& e, Point tau, AlphaPair alpha,
                   std::span<const Point> indices) {
  ValueMap out;
  for (Point n : indices) {
    FieldElement a1 = F.pow(alpha.first, tau.x + n.x);
    FieldElement a2 = F.pow(alpha.second, tau.y + n.y);
    out[n] = evaluate(F, e, a1, a2);
  }
  return out;
}

PeriodicArray syndrome_table(const Field& F, const BivariatePoly& e, Point tau, AlphaPair alpha,
                             Point period) {
  PeriodicArray arr(period.x, period.y);
  for (int x = 0; x < period.x; ++x)
    for (int y = 0; y < period.y; ++y) {
      FieldElement a1 = F.pow(alpha.first, tau.x + x);
      FieldElement a2 = F.pow(alpha.second, tau.y + y);
      arr.set({x, y}, evaluate(F, e, a1, a2));
    }
  return arr;
}

PeriodicArray complete_array(const Field& F, std::span<const BivariatePoly> basis_nf,
                             const ValueMap& known, OrderKind order, Point period) {
  std::vector<Point> lps;
  lps.reserve(basis_nf.size());
  for (const BivariatePoly& f : basis_nf) lps.push_back(leading_point(f, order));
  DeltaSet delta = DeltaSet::from_defining_points(lps);

  PeriodicArray arr(period.x, period.y);
  for (const auto& [n, v] : known) arr.set(n, v);
  for (Point m : delta.members())
    if (!arr.at(m))
      throw Error(Errc::MissingInitialValue, "delta-set index " + point_str(m) + " unknown");

  for (int x = 0; x < period.x; ++x) {
    for (int y = 0; y < period.y; ++y) {
      Point n{x, y};
      if (arr.at(n)) continue;
      // X^n = h + R with h in the ideal and supp(R) inside delta; then
      // h[U]_n = 0 gives u_n = sum R_m u_m.
      BivariatePoly rem = BivariatePoly::monomial(n, fe_one);
      for (;;) {
        bool reduced = false;
        Point worst{0, 0};
        bool found = false;
        for (const auto& [m, c] : rem.terms()) {
          if (delta.contains(m)) continue;
          if (!found || total_less(order, worst, m)) {
            worst = m;
            found = true;
          }
        }
        if (!found) break;
        for (std::size_t i = 0; i < lps.size(); ++i) {
          if (preceq(lps[i], worst)) {
            FieldElement factor = F.div(rem.coeff(worst), leading_coeff(basis_nf[i], order));
            rem = sub(F, rem, basis_nf[i].shifted(worst - lps[i]).scaled(F, factor));
            reduced = true;
            break;
          }
        }
        if (!reduced)
          throw Error(Errc::IrreducibleTerm, "monomial " + point_str(worst) + " has no reducer");
      }
      FieldElement acc = fe_zero;
      for (const auto& [m, c] : rem.terms()) acc = F.add(acc, F.mul(c, arr.get(m)));
      arr.set(n, acc);
    }
  }
  return arr;
}

std::vector<Point> support_from_basis(const Field& F, std::span<const BivariatePoly> basis,
                                      AlphaPair alpha, Point period) {
  std::vector<Point> out;
  for (int x = 0; x < period.x; ++x) {
    for (int y = 0; y < period.y; ++y) {
      FieldElement a1 = F.pow(alpha.first, x);
      FieldElement a2 = F.pow(alpha.second, y);
      bool common_zero = true;
      for (const BivariatePoly& f : basis)
        if (!evaluate(F, f, a1, a2).is_zero()) {
          common_zero = false;
          break;
        }
      if (common_zero) out.push_back({x, y});
    }
  }
  return out;
}

BivariatePoly solve_coefficients(const Field& F, std::span<const Point> support,
                                 const ValueMap& synd, Point tau, AlphaPair alpha,
                                 std::int64_t q) {
  auto cell = [&](Point s, Point n) {
    return F.mul(F.pow(alpha.first, static_cast<std::int64_t>(s.x) * (tau.x + n.x)),
                 F.pow(alpha.second, static_cast<std::int64_t>(s.y) * (tau.y + n.y)));
  };

  if (support.empty()) {
    for (const auto& [n, v] : synd)
      if (!v.is_zero())
        throw Error(Errc::InconsistentSystem, "nonzero values with empty support");
    return {};
  }

  if (q == 2) {
    // binary case: all coefficients are 1; only consistency remains
    BivariatePoly e;
    for (Point s : support) e.set_term(s, fe_one);
    for (const auto& [n, v] : synd) {
      FieldElement acc = fe_zero;
      for (Point s : support) acc = F.add(acc, cell(s, n));
      if (!(acc == v))
        throw Error(Errc::InconsistentSystem,
                    "support does not reproduce the value at " + point_str(n));
    }
    return e;
  }

  // Gaussian elimination over the extension field (exact arithmetic).
  std::size_t cols = support.size();
  std::vector<std::vector<FieldElement>> rows;
  for (const auto& [n, v] : synd) {
    std::vector<FieldElement> row(cols + 1, fe_zero);
    for (std::size_t j = 0; j < cols; ++j) row[j] = cell(support[j], n);
    row[cols] = v;
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size())
      throw Error(Errc::InconsistentSystem, "underdetermined system (support too large)");
    std::swap(rows[rank], rows[pivot]);
    FieldElement inv = F.inv(rows[rank][col]);
    for (std::size_t j = col; j <= cols; ++j) rows[rank][j] = F.mul(rows[rank][j], inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col].is_zero()) continue;
      FieldElement f = rows[i][col];
      for (std::size_t j = col; j <= cols; ++j)
        rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[rank][j]));
    }
    ++rank;
  }
  for (std::size_t i = rank; i < rows.size(); ++i)
    if (!rows[i][cols].is_zero())
      throw Error(Errc::InconsistentSystem, "no solution over the extension field");

  BivariatePoly e;
  for (std::size_t j = 0; j < cols; ++j) {
    FieldElement c = rows[j][cols];
    if (c.is_zero())
      throw Error(Errc::InconsistentSystem,
                  "support point " + point_str(support[j]) + " solves to zero");
    if (!F.in_base_field(c, q))
      throw Error(Errc::NotInBaseField,
                  "coefficient at " + point_str(support[j]) + " lies outside the base field");
    e.set_term(support[j], c);
  }
  return e;
}

TerminationCheck termination_check(const Field& F, std::span<const BivariatePoly> basis,
                                   const ValueMap& synd, Point tau, AlphaPair alpha,
                                   std::int64_t q) {
  TerminationCheck out;
  // The period is the pair of multiplicative orders of the roots.
  auto root_order = [&](FieldElement a) {
    if (a.is_zero()) throw Error(Errc::ConfigError, "root of unity cannot be zero");
    return F.group_order() / std::gcd<std::int64_t>(a.log, F.group_order());
  };
  std::vector<Point> support =
      support_from_basis(F, basis, alpha,
                         {static_cast<int>(root_order(alpha.first)),
                          static_cast<int>(root_order(alpha.second))});
  if (support.size() > synd.size()) {
    out.reason = "candidate support larger than the value set";
    return out;
  }
  try {
    out.candidate = solve_coefficients(F, support, synd, tau, alpha, q);
  } catch (const Error& err) {
    out.reason = err.what();
    return out;
  }
  for (const auto& [n, v] : synd) {
    FieldElement lhs = evaluate(F, out.candidate, F.pow(alpha.first, tau.x + n.x),
                                F.pow(alpha.second, tau.y + n.y));
    if (!(lhs == v)) {
      out.reason = "candidate fails at " + point_str(n);
      return out;
    }
  }
  out.ok = true;
  return out;
}

}  // namespace bmsa
