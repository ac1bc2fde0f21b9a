#include "bmsa/golden.hpp"

#include "bmsa/bms.hpp"
#include "bmsa/io.hpp"
#include "bmsa/locator.hpp"

namespace bmsa::golden {

// Expected trace rows list one entry per visited index; rows the reference
// tables merge as "Same" are expanded here with the preceding state.

const Example& example_5x7() {
  static const Example ex = [] {
    Example e;
    e.name = "period 5x7, e = X1^2+X1*X2";
    e.p = 2;
    e.m = 12;
    e.modulus = {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1};  // x^12+x^7+x^6+x^5+x^3+x+1
    e.r1 = 5;
    e.r2 = 7;
    e.error_poly = "X1^2+X1*X2";
    e.tau = {0, 1};
    e.t = 2;
    // The printed matrix shows only the first summand of the evaluations at
    // (2,0) and (3,0) (alpha1^4 and alpha1); direct evaluation of e adds the
    // cross term alpha1^2*alpha2 resp. alpha1^3*alpha2, giving a^701 and
    // a^3914. The corrected value at (2,0) is what makes that row read
    // "Same", consistent with the printed trace.
    e.syndrome_values = {"a^1755", "a^3510", "a^585", "a^2925",   // (0,0)..(0,3)
                         "a^1513", "a^3733",                      // (1,0),(1,1)
                         "a^701", "a^3914"};                      // (2,0),(3,0) derived

    const std::string f2 = "X2^2+a^1755*X2+a^585";
    e.trace = {
        {{0, 0}, {"X1", "X2"}, {"1"}, {{0, 0}}, ""},
        {{0, 1}, {"X1", "X2+a^1755"}, {"1"}, {{0, 0}}, ""},
        {{0, 2}, {"X1", f2}, {"X2+a^1755"}, {{0, 0}, {0, 1}}, ""},
        {{0, 3}, {"X1", f2}, {"X2+a^1755"}, {{0, 0}, {0, 1}}, ""},
        {{1, 0}, {"X1+a^3268*X2^2+a^928*X2", f2}, {"X2+a^1755"}, {{0, 0}, {0, 1}}, ""},
        {{1, 1}, {"X1+a^3268*X2^2+a^1393*X2+a^546", f2}, {"X2+a^1755"}, {{0, 0}, {0, 1}}, ""},
        {{2, 0},
         {"X1+a^3268*X2^2+a^1393*X2+a^546", f2},
         {"X2+a^1755"},
         {{0, 0}, {0, 1}},
         "derived: past the end of the printed table; the needed value at (1,2) "
         "is out of range, forcing a zero discrepancy"},
        {{3, 0},
         {"X1+a^3268*X2^2+a^1393*X2+a^546", f2},
         {"X2+a^1755"},
         {{0, 0}, {0, 1}},
         "derived: as above via the index (2,1)"},
    };
    e.final_basis = {"X1+a^2886*X2+a^3349", f2};
    return e;
  }();
  return ex;
}

const Example& example_5x5() {
  static const Example ex = [] {
    Example e;
    e.name = "period 5x5, e = X1*X2^2+X1^2*X2^2";
    e.p = 2;
    e.m = 4;
    e.modulus = {1, 1, 0, 0, 1};  // x^4+x+1
    e.r1 = 5;
    e.r2 = 5;
    e.error_poly = "X1*X2^2+X1^2*X2^2";
    e.tau = {1, 1};
    e.t = 2;
    e.syndrome_values = {"a^8", "a^14", "a^5", "a^11", "a^10", "a^1", "a^7", "a^14"};
    e.trace = {
        {{0, 0}, {"X1", "X2"}, {"1"}, {{0, 0}}, ""},
        {{0, 1}, {"X1", "X2+a^6"}, {"1"}, {{0, 0}}, ""},
        {{0, 2}, {"X1", "X2+a^6"}, {"1"}, {{0, 0}}, ""},
        {{0, 3}, {"X1", "X2+a^6"}, {"1"}, {{0, 0}}, ""},
        {{1, 0}, {"X1+a^2", "X2+a^6"}, {"1"}, {{0, 0}}, ""},
        {{1, 1}, {"X1+a^2", "X2+a^6"}, {"1"}, {{0, 0}}, ""},
        {{2, 0},
         {"X1^2+a^2*X1+a^9", "X2+a^6"},
         {"X1+a^2"},
         {{0, 0}, {1, 0}},
         "derived: the printed delta cell {(0,0),(0,1)} contradicts the leading "
         "points {(2,0),(0,1)} of its own row; the rectangle bounded by them is "
         "{(0,0),(1,0)} (suspected typo in the table)"},
        {{3, 0}, {"X1^2+a^2*X1+a^9", "X2+a^6"}, {"X1+a^2"}, {{0, 0}, {1, 0}}, ""},
    };
    e.final_basis = {"X1^2+a^2*X1+a^9", "X2+a^6"};
    e.support = {{1, 2}, {2, 2}};
    return e;
  }();
  return ex;
}

const Example& example_15x15() {
  static const Example ex = [] {
    Example e;
    e.name = "period 15x15, e = X1^8+X1^4+X1^2+X1";
    e.p = 2;
    e.m = 4;
    e.modulus = {1, 1, 0, 0, 1};
    e.r1 = 15;
    e.r2 = 15;
    e.error_poly = "X1^8+X1^4+X1^2+X1";
    e.tau = {3, 0};
    e.t = 4;
    e.final_basis = {"X1^4+X1+1", "X2+1"};
    e.support = {{1, 0}, {2, 0}, {4, 0}, {8, 0}};
    e.checkpoints = {
        {{6, 0}, {"X1^4+X1^3+X1^2", "X2+1"}},
        {{7, 0}, {"X1^4+X1+1", "X2+1"}},
    };
    return e;
  }();
  return ex;
}

const Example& example_decode() {
  static const Example ex = [] {
    Example e;
    e.name = "abelian code in F2(5,15), e = X2^2+X1*X2^3";
    e.p = 2;
    e.m = 4;
    e.modulus = {1, 1, 0, 0, 1};
    e.r1 = 5;
    e.r2 = 15;
    e.error_poly = "X2^2+X1*X2^3";
    e.tau = {2, 1};
    e.t = 2;
    e.code_orbits = {{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {2, 3}};
    e.syndrome_values = {"a^11", "a^6", "a^13", "a^13", "a^7", "a^1", "a^8", "a^6"};
    const std::string f2a = "X2^2+a^10*X2+a^1";
    const std::string f2b = "X2^2+a^6*X2+a^5";
    const std::string raw_note =
        "derived: the printed cell shows the reduced representative; the raw "
        "update is kept here and reduces to the printed one (checked below)";
    e.trace = {
        {{0, 0}, {"X1", "X2"}, {"1"}, {{0, 0}}, ""},
        {{0, 1}, {"X1", "X2+a^10"}, {"1"}, {{0, 0}}, ""},
        {{0, 2}, {"X1", f2a}, {"X2+a^10"}, {{0, 0}, {0, 1}}, ""},
        {{0, 3}, {"X1", f2b}, {"X2+a^10"}, {{0, 0}, {0, 1}}, ""},
        {{1, 0}, {"X1+a^10*X2^2+a^5*X2", f2b}, {"X2+a^10"}, {{0, 0}, {0, 1}}, raw_note},
        {{1, 1}, {"X1+a^10*X2^2+a^10*X2+a^10", f2b}, {"X2+a^10"}, {{0, 0}, {0, 1}}, raw_note},
        {{2, 0}, {"X1+a^10*X2^2+a^10*X2+a^10", f2b}, {"X2+a^10"}, {{0, 0}, {0, 1}}, ""},
        {{3, 0}, {"X1+a^10*X2^2+a^10*X2+a^10", f2b}, {"X2+a^10"}, {{0, 0}, {0, 1}}, ""},
    };
    // printed representatives of the two raw rows above
    e.checkpoints = {
        {{1, 0}, {"X1+a^2*X2+1", f2b}},
        {{1, 1}, {"X1+a^8*X2+a^5", f2b}},
    };
    e.final_basis = {"X1+a^8*X2+a^5", f2b};
    e.support = {{0, 2}, {1, 3}};
    return e;
  }();
  return ex;
}

std::vector<const Example*> all_examples() {
  return {&example_5x7(), &example_5x5(), &example_15x15(), &example_decode()};
}

VerifyResult verify(const Example& ex) {
  VerifyResult out;
  auto fail = [&](const std::string& what) {
    out.ok = false;
    out.mismatches.push_back(what);
  };
  auto point_str = [](Point p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
  };

  Field F = Field::create(ex.p, ex.m, ex.modulus);
  AlphaPair alpha{F.root_of_unity(ex.r1), F.root_of_unity(ex.r2)};
  BivariatePoly e = parse_poly(F, ex.error_poly);
  std::vector<Point> st = s_of_t(ex.t);
  ValueMap values = syndromes(F, e, ex.tau, alpha, st);

  if (!ex.syndrome_values.empty()) {
    std::size_t i = 0;
    for (Point n : st) {
      if (!(values[n] == F.parse(ex.syndrome_values[i])))
        fail("syndrome at " + point_str(n) + ": got " + F.format(values[n]) + ", expected " +
             ex.syndrome_values[i]);
      ++i;
    }
  }

  RunResult res = run(F, values, ex.order, ex.t, {ex.r1, ex.r2});

  if (!ex.trace.empty()) {
    if (res.trace.size() != ex.trace.size()) fail("trace length mismatch");
    for (std::size_t i = 0; i < std::min(res.trace.size(), ex.trace.size()); ++i) {
      const TraceRow& want = ex.trace[i];
      const TraceRecord& got = res.trace[i];
      std::string where = "row " + point_str(want.l);
      if (!(got.l == want.l)) fail(where + ": visited " + point_str(got.l));
      auto match_set = [&](const std::vector<BivariatePoly>& gp,
                           const std::vector<std::string>& wp, const char* label) {
        if (gp.size() != wp.size()) {
          fail(where + ": " + label + " size mismatch");
          return;
        }
        for (std::size_t j = 0; j < gp.size(); ++j)
          if (!(gp[j] == parse_poly(F, wp[j])))
            fail(where + ": " + label + "[" + std::to_string(j) + "] = " + format_poly(F, gp[j]) +
                 ", expected " + wp[j]);
      };
      match_set(got.F, want.F, "F");
      match_set(got.G, want.G, "G");
      if (!(got.delta == DeltaSet::down_closure(want.delta))) fail(where + ": delta mismatch");
      if (!want.note.empty()) out.notes.push_back(ex.name + " at " + point_str(want.l) + ": " + want.note);
    }
  }

  // Checkpoints compare normal forms (the decode example pins the printed
  // reduced representatives; the 15x15 example pins intermediate states).
  for (const Example::Checkpoint& cp : ex.checkpoints) {
    std::vector<Point> sched = schedule(ex.order, ex.t);
    std::size_t count = 0;
    while (count < sched.size() && !(sched[count] == cp.l)) ++count;
    if (count == sched.size()) {
      fail("checkpoint index not in the schedule");
      continue;
    }
    RunOptions opts;
    opts.max_steps = count + 1;
    opts.record_trace = false;
    RunResult partial = run(F, values, ex.order, ex.t, {ex.r1, ex.r2}, opts);
    if (partial.basis.size() != cp.F.size()) {
      fail("checkpoint " + point_str(cp.l) + ": basis size mismatch");
      continue;
    }
    for (std::size_t j = 0; j < cp.F.size(); ++j)
      if (!(partial.basis[j] == parse_poly(F, cp.F[j])))
        fail("checkpoint " + point_str(cp.l) + ": basis[" + std::to_string(j) + "] = " +
             format_poly(F, partial.basis[j]) + ", expected " + cp.F[j]);
  }

  if (!ex.final_basis.empty()) {
    if (res.basis.size() != ex.final_basis.size()) fail("final basis size mismatch");
    for (std::size_t j = 0; j < std::min(res.basis.size(), ex.final_basis.size()); ++j)
      if (!(res.basis[j] == parse_poly(F, ex.final_basis[j])))
        fail("final basis[" + std::to_string(j) + "] = " + format_poly(F, res.basis[j]) +
             ", expected " + ex.final_basis[j]);
  }

  if (!ex.support.empty()) {
    std::vector<Point> support = support_from_basis(F, res.basis, alpha, {ex.r1, ex.r2});
    if (!(support == ex.support)) fail("support mismatch");
  }
  return out;
}

}  // namespace bmsa::golden
