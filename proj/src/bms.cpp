#include "bmsa/bms.hpp"

#include <algorithm>

namespace bmsa {

namespace {

std::string point_str(Point p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

// Rewrite non-leading monomials of f lying outside delta by subtracting
// shifted multiples of basis members. Preserves the leading point, validity
// on the current subarray, and the discrepancy at the current index.
BivariatePoly reduce_outside(const Field& F, BivariatePoly f, const DeltaSet& delta,
                             std::span<const BivariatePoly> basis,
                             std::span<const Point> basis_lps, OrderKind order, Errc on_stuck) {
  Point s = leading_point(f, order);
  for (;;) {
    bool found = false;
    Point worst{0, 0};
    for (const auto& [m, c] : f.terms()) {
      if (m == s || delta.contains(m)) continue;
      if (!found || total_less(order, worst, m)) {
        worst = m;
        found = true;
      }
    }
    if (!found) return f;
    int j = -1;
    for (std::size_t i = 0; i < basis_lps.size(); ++i) {
      if (preceq(basis_lps[i], worst)) {
        j = static_cast<int>(i);
        break;
      }
    }
    if (j < 0)
      throw Error(on_stuck, "no reducer for monomial " + point_str(worst));
    FieldElement factor = F.div(f.coeff(worst), leading_coeff(basis[static_cast<std::size_t>(j)], order));
    f = sub(F, f,
            basis[static_cast<std::size_t>(j)].shifted(worst - basis_lps[static_cast<std::size_t>(j)]).scaled(F, factor));
  }
}

std::vector<BivariatePoly> aux_polys(const std::vector<AuxEntry>& G) {
  std::vector<BivariatePoly> out;
  out.reserve(G.size());
  for (const AuxEntry& e : G) out.push_back(e.g);
  return out;
}

}  // namespace

BmsState bms_init(const Field& F, OrderKind order, int t, Point period) {
  BmsState st;
  st.field = &F;
  st.order = order;
  st.t = t;
  st.period = period;
  st.F = {BivariatePoly::one()};
  st.delta = DeltaSet();  // empty; defining point (0,0)
  return st;
}

FieldElement discrepancy(const BmsState& st, const BivariatePoly& f, const ArrayView& u, Point l) {
  const Field& F = *st.field;
  Point s = leading_point(f, st.order);
  if (!preceq(s, l)) return fe_zero;
  RecurrenceValue rv = recurrence_value(F, f, u, l, st.order);
  if (const FieldElement* v = std::get_if<FieldElement>(&rv)) return *v;
  if (!u.partial_view())
    throw Error(Errc::NotNormalForm, "fully known array reported a missing index");

  // Some needed value is absent. Rewrite in normal form relative to the
  // current delta-set and retry; once every non-leading monomial sits in
  // delta, a still-missing index means l - s cannot join any staircase of
  // size <= t, so the discrepancy is forced to zero.
  std::vector<Point> lps = st.leading_points();
  BivariatePoly g = reduce_outside(F, f, st.delta, st.F, lps, st.order, Errc::NotNormalForm);
  rv = recurrence_value(F, g, u, l, st.order);
  if (const FieldElement* v = std::get_if<FieldElement>(&rv)) return *v;
  return fe_zero;
}

BivariatePoly berlekamp_combine(const Field& F, const BivariatePoly& f_a, FieldElement w_a,
                                std::span<const Point> s_list, int a, const AuxEntry& aux, int b,
                                Point l, OrderKind order) {
  (void)order;
  if (w_a.is_zero() || aux.v.is_zero())
    throw Error(Errc::ConfigError, "combine requires nonzero discrepancies");
  if (a < 0 || a >= static_cast<int>(s_list.size()) || b < 0 || b + 1 >= static_cast<int>(s_list.size()))
    throw Error(Errc::ConfigError, "combine index out of range");
  Point sa = s_list[static_cast<std::size_t>(a)];
  // s^(b) and s^(b+1) are read from F's defining points, not from G.
  Point corner{s_list[static_cast<std::size_t>(b)].x - 1, s_list[static_cast<std::size_t>(b) + 1].y - 1};
  Point r{std::max(sa.x, l.x - corner.x), std::max(sa.y, l.y - corner.y)};
  Point shift = r - l + corner;
  if (shift.x < 0 || shift.y < 0)
    throw Error(Errc::NegativeShift, "auxiliary shift " + point_str(shift) + " is negative");
  FieldElement ratio = F.div(w_a, aux.v);
  return sub(F, f_a.shifted(r - sa), aux.g.shifted(shift).scaled(F, ratio));
}

BivariatePoly lemma_combine(const Field& F, const BivariatePoly& f, FieldElement w, Point s_f,
                            const AuxEntry& aux, Point l, OrderKind) {
  if (w.is_zero() || aux.v.is_zero())
    throw Error(Errc::ConfigError, "combine requires nonzero discrepancies");
  Point r{std::max(s_f.x, l.x - aux.span.x), std::max(s_f.y, l.y - aux.span.y)};
  Point shift = r - l + aux.span;
  FieldElement ratio = F.div(w, aux.v);
  return sub(F, f.shifted(r - s_f), aux.g.shifted(shift).scaled(F, ratio));
}

std::vector<Construction> classify(const BmsState& st, Point l, const std::vector<int>& failing,
                                   DeltaSet* delta_out) {
  if (failing.empty()) throw Error(Errc::ConfigError, "classify requires at least one failure");
  const std::vector<Point>& lps = st.delta.defining_points();
  std::vector<Point> corners = st.delta.corners();

  std::vector<Point> gen = corners;  // old delta = closure of its corners
  for (int i : failing) gen.push_back(l - lps[static_cast<std::size_t>(i)]);
  DeltaSet next = DeltaSet::down_closure(gen);
  if (delta_out) *delta_out = next;

  auto is_failing = [&](int i) {
    return std::find(failing.begin(), failing.end(), i) != failing.end();
  };

  std::vector<Construction> plan;
  for (Point S : next.defining_points()) {
    Construction c;
    c.new_point = S;
    int old_i = -1;
    for (std::size_t i = 0; i < lps.size(); ++i)
      if (lps[i] == S) old_i = static_cast<int>(i);

    if (old_i >= 0 && !is_failing(old_i)) {
      c.kind = Construction::Kind::Keep;
      c.f_index = old_i;
      plan.push_back(c);
      continue;
    }

    if (old_i >= 0) {
      // The defining point survives its own failure: l - s^(i) lies in the
      // old delta, so some corner covers it (smallest such index wins).
      Point rel = l - lps[static_cast<std::size_t>(old_i)];
      int j = -1;
      for (std::size_t b = 0; b < corners.size(); ++b) {
        if (preceq(rel, corners[b])) {
          j = static_cast<int>(b);
          break;
        }
      }
      if (j < 0)
        throw Error(Errc::CapabilityExceeded,
                    "inconsistent discrepancy pattern at " + point_str(l) +
                        " (data admits no staircase within capability)");
      c.kind = Construction::Kind::Combine;
      c.type = 1;
      c.f_index = old_i;
      c.aux_index = j;
      plan.push_back(c);
      continue;
    }

    // Genuinely new defining point. Prefer a Berlekamp combine whose
    // leading point lands exactly on S.
    bool have_row = false, have_col = false;
    for (Point sp : lps) {
      have_row = have_row || sp.y == S.y;
      have_col = have_col || sp.x == S.x;
    }
    c.type = have_row ? 3 : (have_col ? 4 : 2);
    bool found = false;
    for (int a : failing) {
      for (std::size_t b = 0; b < corners.size() && !found; ++b) {
        Point sa = lps[static_cast<std::size_t>(a)];
        Point r{std::max(sa.x, l.x - corners[b].x), std::max(sa.y, l.y - corners[b].y)};
        if (r == S) {
          c.kind = Construction::Kind::Combine;
          c.f_index = a;
          c.aux_index = static_cast<int>(b);
          found = true;
        }
      }
      if (found) break;
    }
    if (!found) {
      // Axis boundary: multiply the member sharing a coordinate with S
      // (always exists for a minimal point of the complement).
      c.kind = Construction::Kind::Monomial;
      c.type = 5;
      int pick = -1;
      for (std::size_t i = 0; i < lps.size() && pick < 0; ++i)
        if (lps[i].y == S.y && lps[i].x < S.x) pick = static_cast<int>(i);
      for (std::size_t i = 0; i < lps.size() && pick < 0; ++i)
        if (lps[i].x == S.x && lps[i].y < S.y) pick = static_cast<int>(i);
      for (std::size_t i = 0; i < lps.size() && pick < 0; ++i)
        if (preceq(lps[i], S) && !(lps[i] == S)) pick = static_cast<int>(i);
      if (pick < 0)
        throw Error(Errc::CapabilityExceeded,
                    "no construction for defining point " + point_str(S) + " at " + point_str(l));
      c.f_index = pick;
      c.shift = S - lps[static_cast<std::size_t>(pick)];
    }
    plan.push_back(c);
  }
  return plan;
}

BmsState step(const BmsState& st, const ArrayView& u, Point l, TraceRecord* trace) {
  const Field& F = *st.field;
  std::vector<FieldElement> ws(st.F.size());
  std::vector<int> failing;
  for (std::size_t i = 0; i < st.F.size(); ++i) {
    ws[i] = discrepancy(st, st.F[i], u, l);
    if (!ws[i].is_zero()) failing.push_back(static_cast<int>(i));
  }

  if (failing.empty()) {
    if (trace) *trace = TraceRecord{l, st.F, aux_polys(st.G), st.delta, false};
    return st;
  }

  DeltaSet next;
  std::vector<Construction> plan = classify(st, l, failing, &next);
  if (next.size() > st.t)
    throw Error(Errc::CapabilityExceeded, "delta-set size " + std::to_string(next.size()) +
                                              " exceeds capability " + std::to_string(st.t) +
                                              " at " + point_str(l));

  const std::vector<Point>& lps = st.delta.defining_points();
  std::vector<BivariatePoly> F2;
  F2.reserve(plan.size());
  for (const Construction& c : plan) {
    switch (c.kind) {
      case Construction::Kind::Keep:
        F2.push_back(st.F[static_cast<std::size_t>(c.f_index)]);
        break;
      case Construction::Kind::Combine:
        F2.push_back(berlekamp_combine(F, st.F[static_cast<std::size_t>(c.f_index)],
                                       ws[static_cast<std::size_t>(c.f_index)], lps, c.f_index,
                                       st.G[static_cast<std::size_t>(c.aux_index)], c.aux_index, l,
                                       st.order));
        break;
      case Construction::Kind::Monomial:
        F2.push_back(st.F[static_cast<std::size_t>(c.f_index)].shifted(c.shift));
        break;
    }
  }

  // New auxiliary set: a corner that survives keeps its entry; a corner
  // created now takes the member that just failed across it.
  std::vector<AuxEntry> G2;
  std::vector<Point> old_corners = st.delta.corners();
  for (Point corner : next.corners()) {
    int keep = -1;
    for (std::size_t b = 0; b < old_corners.size(); ++b)
      if (old_corners[b] == corner) keep = static_cast<int>(b);
    if (keep >= 0) {
      G2.push_back(st.G[static_cast<std::size_t>(keep)]);
      continue;
    }
    int pick = -1;
    for (int i : failing)
      if (l - lps[static_cast<std::size_t>(i)] == corner) pick = i;
    if (pick < 0) {
      for (int i : failing)
        if (preceq(corner, l - lps[static_cast<std::size_t>(i)])) pick = i;
    }
    if (pick < 0)
      throw Error(Errc::CapabilityExceeded,
                  "no auxiliary candidate for corner " + point_str(corner) + " at " + point_str(l));
    G2.push_back(AuxEntry{st.F[static_cast<std::size_t>(pick)], l, ws[static_cast<std::size_t>(pick)],
                          l - lps[static_cast<std::size_t>(pick)]});
  }

  BmsState out = st;
  out.F = std::move(F2);
  out.G = std::move(G2);
  out.delta = next;
  if (trace) *trace = TraceRecord{l, out.F, aux_polys(out.G), out.delta, true};
  return out;
}

std::vector<BivariatePoly> normal_form(const Field& F, std::vector<BivariatePoly> basis,
                                       const DeltaSet& delta, OrderKind order) {
  std::vector<Point> lps;
  lps.reserve(basis.size());
  for (const BivariatePoly& f : basis) lps.push_back(leading_point(f, order));
  std::vector<BivariatePoly> out;
  out.reserve(basis.size());
  for (const BivariatePoly& f : basis)
    out.push_back(reduce_outside(F, f, delta, basis, lps, order, Errc::IrreducibleTerm));
  return out;
}

RunResult run_over(const Field& F, const ArrayView& u, OrderKind order, int t_cap,
                   std::span<const Point> sched, const RunOptions& opts) {
  BmsState st = bms_init(F, order, t_cap, u.period());
  RunResult res;
  std::size_t steps = std::min(sched.size(), opts.max_steps.value_or(sched.size()));
  for (std::size_t i = 0; i < steps; ++i) {
    TraceRecord rec;
    st = step(st, u, sched[i], opts.record_trace ? &rec : nullptr);
    if (opts.record_trace) res.trace.push_back(std::move(rec));
  }
  res.raw_basis = st.F;
  res.basis = normal_form(F, st.F, st.delta, order);
  res.delta = st.delta;
  return res;
}

RunResult run(const Field& F, const ValueMap& values, OrderKind order, int t, Point period,
              const RunOptions& opts) {
  if (t < 1) throw Error(Errc::ConfigError, "capability t must be >= 1");
  if (t > period.x / 2 || t > period.y / 2)
    throw Error(Errc::CapabilityTooLarge, "capability t exceeds floor(r_i/2)");
  std::vector<Point> sched = schedule(order, t);
  for (Point n : sched)
    if (!values.count(n))
      throw Error(Errc::MissingInitialValue, "value missing at " + point_str(n));
  ArrayView u = ArrayView::partial(values, period);
  RunResult res = run_over(F, u, order, t, sched, opts);
  res.condition_ok = condition_check(
      values, t, order == OrderKind::Lex ? ConditionKind::L : ConditionKind::G);
  return res;
}

}  // namespace bmsa
