#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bmsa/order.hpp"
#include "bmsa/poly.hpp"

namespace bmsa {

// Historical polynomial retained for the Berlekamp combine: g was valid up
// to k but has nonzero discrepancy v there; span = k - LP(g).
struct AuxEntry {
  BivariatePoly g;
  Point k{0, 0};
  FieldElement v;
  Point span{0, 0};
};

// State of one run. F is kept sorted so that its leading points are the
// defining points of delta (first coordinates strictly decreasing); G is
// aligned with delta's rectangle corners.
struct BmsState {
  const Field* field = nullptr;
  OrderKind order = OrderKind::Lex;
  int t = 0;  // capability bound; |delta| must stay <= t
  Point period{0, 0};
  std::vector<BivariatePoly> F;
  std::vector<AuxEntry> G;
  DeltaSet delta;

  std::vector<Point> leading_points() const { return delta.defining_points(); }
};

BmsState bms_init(const Field&, OrderKind, int t, Point period);

// Snapshot after processing one index, mirroring the worked-example table
// rows (l | F | G | delta).
struct TraceRecord {
  Point l{0, 0};
  std::vector<BivariatePoly> F;
  std::vector<BivariatePoly> G;
  DeltaSet delta;
  bool changed = false;
};

// Discrepancy f[u]_l with the out-of-range rule: when the partial view
// lacks an index, f is first rewritten in normal form relative to
// state.delta; if an index is still missing the discrepancy is forced to
// zero (l - LP(f) could not join any staircase of size <= t, so a failure
// here is impossible).
FieldElement discrepancy(const BmsState&, const BivariatePoly& f, const ArrayView& u, Point l);

// X^{r-s^(a)} f_a - (w_a/v_b) X^e g_b where r and the shift e come from the
// corner between s_list[b] and s_list[b+1]. Throws NegativeShift when the
// shift would be negative (mis-selected auxiliary).
BivariatePoly berlekamp_combine(const Field&, const BivariatePoly& f_a, FieldElement w_a,
                                std::span<const Point> s_list, int a, const AuxEntry& aux, int b,
                                Point l, OrderKind);

// General combine used by property tests: r and the shift come from the
// auxiliary's own failure data (k, LP(g)) instead of the current corners.
BivariatePoly lemma_combine(const Field&, const BivariatePoly& f, FieldElement w, Point s_f,
                            const AuxEntry& aux, Point l, OrderKind);

// One planned replacement for a defining point of the next delta-set.
struct Construction {
  enum class Kind { Keep, Combine, Monomial };
  Kind kind = Kind::Keep;
  int type = 0;        // 1..4 per the defining-point classification, 0 = keep, 5 = axis boundary
  Point new_point;     // leading point of the replacement
  int f_index = -1;    // source polynomial in F
  int aux_index = -1;  // G index for combines
  Point shift{0, 0};   // monomial multiplier exponent (Kind::Monomial)
};

// Classify the defining points of delta(u^{l+1}) and prescribe how each
// replacement polynomial is built. failing holds the indexes of F with
// nonzero discrepancy; must be nonempty.
std::vector<Construction> classify(const BmsState&, Point l, const std::vector<int>& failing,
                                   DeltaSet* delta_out = nullptr);

// One iteration at index l. Returns the updated state; appends a trace
// record when trace != nullptr. Throws CapabilityExceeded if the delta-set
// would grow past t.
BmsState step(const BmsState&, const ArrayView& u, Point l, TraceRecord* trace = nullptr);

// Rewrite every member of F so that all non-leading monomials lie inside
// delta, reducing by other members. Leading points and validity are
// preserved. Throws IrreducibleTerm if an outside term has no reducer.
std::vector<BivariatePoly> normal_form(const Field&, std::vector<BivariatePoly> F,
                                       const DeltaSet& delta, OrderKind);

struct RunOptions {
  std::optional<std::size_t> max_steps;  // process only the first k schedule points
  bool record_trace = true;
};

struct RunResult {
  std::vector<BivariatePoly> basis;      // final minimal set in normal form
  std::vector<BivariatePoly> raw_basis;  // final minimal set as constructed
  DeltaSet delta;
  std::vector<TraceRecord> trace;
  bool condition_ok = true;  // l-/g-condition for the chosen order
};

// Full run over the values {u_n : n in S(t)}, visiting S(t) in the order's
// schedule. The result basis is a Groebner basis for the ideal of linear
// recurring relations when the hypotheses hold.
RunResult run(const Field&, const ValueMap& values, OrderKind, int t, Point period,
              const RunOptions& = {});

// Same iteration driven over an explicit schedule against a fully known
// array (no out-of-range rule); used by the cross-checking tests.
RunResult run_over(const Field&, const ArrayView& u, OrderKind, int t_cap,
                   std::span<const Point> sched, const RunOptions& = {});

}  // namespace bmsa
