#include "bmsa/oracle.hpp"

#include <algorithm>
#include <map>

#include "bmsa/bms.hpp"

namespace bmsa {

namespace {

std::string point_str(Point p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

// Try to solve for a monic valid polynomial with leading point s and lower
// support restricted to the standard monomials found so far. Returns the
// polynomial on success.
std::optional<BivariatePoly> solve_member(const Field& F, const PeriodicArray& U, Point s,
                                          const std::vector<Point>& standard, OrderKind order) {
  std::size_t cols = standard.size();
  std::vector<std::vector<FieldElement>> rows;
  for (int dx = 0; dx < U.r1(); ++dx) {
    for (int dy = 0; dy < U.r2(); ++dy) {
      Point n = s + Point{dx, dy};
      std::vector<FieldElement> row(cols + 1, fe_zero);
      for (std::size_t j = 0; j < cols; ++j) row[j] = U.get(standard[j] + n - s);
      row[cols] = F.neg(U.get(n));
      rows.push_back(std::move(row));
    }
  }
  // dense elimination
  std::vector<FieldElement> sol(cols, fe_zero);
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][col].is_zero()) ++p;
    if (p == rows.size()) continue;  // free column; leave it zero
    std::swap(rows[rank], rows[p]);
    FieldElement inv = F.inv(rows[rank][col]);
    for (std::size_t j = col; j <= cols; ++j) rows[rank][j] = F.mul(rows[rank][j], inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col].is_zero()) continue;
      FieldElement f = rows[i][col];
      for (std::size_t j = col; j <= cols; ++j)
        rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[rank][j]));
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < rows.size(); ++i)
    if (!rows[i][cols].is_zero()) return std::nullopt;
  for (std::size_t i = 0; i < rank; ++i) sol[pivot_col[i]] = rows[i][cols];

  BivariatePoly f = BivariatePoly::monomial(s, fe_one);
  for (std::size_t j = 0; j < cols; ++j) f.set_term(standard[j], sol[j]);
  (void)order;
  return f;
}

}  // namespace

FootprintResult footprint_bruteforce(const Field& F, const PeriodicArray& U, OrderKind order) {
  if (!U.fully_known())
    throw Error(Errc::MissingInitialValue, "brute-force footprint needs a fully known period");

  std::vector<Point> candidates;
  for (int x = 0; x <= U.r1(); ++x)
    for (int y = 0; y <= U.r2(); ++y) candidates.push_back({x, y});
  std::sort(candidates.begin(), candidates.end(),
            [order](Point a, Point b) { return total_less(order, a, b); });

  std::vector<Point> standard;  // delta members found so far, in <_T order
  std::vector<Point> basis_lps;
  std::vector<BivariatePoly> basis;
  for (Point s : candidates) {
    bool shadowed = false;
    for (Point lp : basis_lps)
      if (preceq(lp, s)) {
        shadowed = true;
        break;
      }
    if (shadowed) continue;
    std::optional<BivariatePoly> f = solve_member(F, U, s, standard, order);
    if (f) {
      basis.push_back(std::move(*f));
      basis_lps.push_back(s);
    } else {
      standard.push_back(s);
    }
  }

  FootprintResult out;
  out.delta = standard.empty() ? DeltaSet() : DeltaSet::down_closure(standard);
  out.basis = std::move(basis);
  // sort into defining-point order (x decreasing)
  std::sort(out.basis.begin(), out.basis.end(), [&](const BivariatePoly& a, const BivariatePoly& b) {
    return leading_point(a, order).x > leading_point(b, order).x;
  });
  return out;
}

bool membership_full(const Field& F, const BivariatePoly& f, const PeriodicArray& U) {
  Point s = leading_point(f, OrderKind::Lex);  // any order; only the support matters
  ArrayView view = ArrayView::full(U);
  for (int dx = 0; dx < U.r1(); ++dx)
    for (int dy = 0; dy < U.r2(); ++dy) {
      RecurrenceValue rv = recurrence_value(F, f, view, s + Point{dx, dy}, OrderKind::Lex);
      if (!std::get<FieldElement>(rv).is_zero()) return false;
    }
  return true;
}

UniquenessReport exhaustive_uniqueness(const Field& F, int r1, int r2, std::int64_t q, int t) {
  UniquenessReport report;
  if (t == 0) return report;  // only e = 0; nothing to distinguish
  if (t < 0 || t > r1 / 2 || t > r2 / 2)
    throw Error(Errc::CapabilityTooLarge, "capability t must satisfy t <= floor(r_i/2)");

  std::vector<FieldElement> units = F.subfield_elements(q);
  units.erase(units.begin());

  // All supports of size <= t, all unit coefficient assignments.
  std::vector<Point> grid;
  for (int x = 0; x < r1; ++x)
    for (int y = 0; y < r2; ++y) grid.push_back({x, y});

  std::vector<BivariatePoly> polys;
  polys.emplace_back();  // e = 0
  std::vector<int> idx(static_cast<std::size_t>(t), 0);
  for (int k = 1; k <= t; ++k) {
    std::vector<int> comb(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i;
    for (;;) {
      std::vector<int> assign(static_cast<std::size_t>(k), 0);
      for (;;) {
        BivariatePoly e;
        for (int i = 0; i < k; ++i)
          e.set_term(grid[static_cast<std::size_t>(comb[static_cast<std::size_t>(i)])],
                     units[static_cast<std::size_t>(assign[static_cast<std::size_t>(i)])]);
        polys.push_back(std::move(e));
        int pos = k - 1;
        while (pos >= 0 && assign[static_cast<std::size_t>(pos)] + 1 == static_cast<int>(units.size())) {
          assign[static_cast<std::size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
        ++assign[static_cast<std::size_t>(pos)];
      }
      int pos = k - 1;
      while (pos >= 0 && comb[static_cast<std::size_t>(pos)] == static_cast<int>(grid.size()) - k + pos) --pos;
      if (pos < 0) break;
      ++comb[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < k; ++i)
        comb[static_cast<std::size_t>(i)] = comb[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
  (void)idx;

  long long n = static_cast<long long>(polys.size());
  if (n * n > 20'000'000LL)
    throw Error(Errc::SpaceTooLarge, std::to_string(n) + " polynomials exceed the pair budget");

  AlphaPair alpha{F.root_of_unity(r1), F.root_of_unity(r2)};
  std::vector<Point> st = s_of_t(t);

  // (1) Distinct polynomials must give distinct S(t) restrictions, for
  // every translation point tau.
  for (int tx = 0; tx < r1; ++tx) {
    for (int ty = 0; ty < r2; ++ty) {
      Point tau{tx, ty};
      std::map<std::vector<std::int32_t>, std::size_t> seen;
      for (std::size_t i = 0; i < polys.size(); ++i) {
        std::vector<std::int32_t> sig;
        sig.reserve(st.size());
        for (Point nn : st) {
          FieldElement v = evaluate(F, polys[i], F.pow(alpha.first, tau.x + nn.x),
                                    F.pow(alpha.second, tau.y + nn.y));
          sig.push_back(v.log);
        }
        auto [it, fresh] = seen.emplace(std::move(sig), i);
        ++report.checked;
        if (!fresh)
          report.failures.push_back("tau " + point_str(tau) + ": polynomials " +
                                    std::to_string(it->second) + " and " + std::to_string(i) +
                                    " share all S(t) values");
      }
    }
  }

  // (2) Array-level: footprint size equals the weight, and completing the
  // S(t) restriction reproduces the full table.
  for (std::size_t i = 0; i < polys.size(); ++i) {
    Point tau{0, 0};
    PeriodicArray full = syndrome_table(F, polys[i], tau, alpha, {r1, r2});
    FootprintResult fp = footprint_bruteforce(F, full, OrderKind::Lex);
    ++report.checked;
    if (fp.delta.size() != polys[i].weight()) {
      report.failures.push_back("polynomial " + std::to_string(i) + ": footprint size " +
                                std::to_string(fp.delta.size()) + " != weight " +
                                std::to_string(polys[i].weight()));
      continue;
    }
    ValueMap restriction = syndromes(F, polys[i], tau, alpha, st);
    PeriodicArray rebuilt = complete_array(F, fp.basis, restriction, OrderKind::Lex, {r1, r2});
    ++report.checked;
    if (!(rebuilt == full))
      report.failures.push_back("polynomial " + std::to_string(i) +
                                ": completion from S(t) diverges from the table");
  }
  return report;
}

}  // namespace bmsa
