#include <doctest.h>

#include <random>

#include "bmsa/locator.hpp"
#include "bmsa/oracle.hpp"
#include "bmsa/poly.hpp"

using namespace bmsa;

namespace {

Field gf16() { return Field::create(2, 4, {1, 1, 0, 0, 1}); }

PeriodicArray table_5x5(const Field& F) {
  // syndrome table of e = X1*X2^2+X1^2*X2^2, tau = (1,1)
  BivariatePoly e = parse_poly(F, "X1*X2^2+X1^2*X2^2");
  AlphaPair alpha{F.root_of_unity(5), F.root_of_unity(5)};
  return syndrome_table(F, e, {1, 1}, alpha, {5, 5});
}

BivariatePoly random_poly(const Field& F, std::mt19937_64& rng, int max_exp, int max_terms) {
  BivariatePoly f;
  int terms = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_terms));
  for (int i = 0; i < terms; ++i) {
    Point m{static_cast<int>(rng() % static_cast<std::uint64_t>(max_exp)),
            static_cast<int>(rng() % static_cast<std::uint64_t>(max_exp))};
    f.set_term(m, F.from_log(static_cast<std::int64_t>(rng() % 15)));
  }
  return f;
}

}  // namespace

TEST_CASE("leading points") {
  Field F = gf16();
  BivariatePoly f = parse_poly(F, "X1+a^3*X2^2+a^9*X2");
  CHECK(leading_point(f, OrderKind::Lex) == Point{1, 0});
  CHECK(leading_point(f, OrderKind::Graded) == Point{0, 2});
  BivariatePoly g = parse_poly(F, "X1*X2^2+X1^2*X2^2");
  CHECK(leading_point(g, OrderKind::Graded) == Point{2, 2});
  CHECK(leading_point(BivariatePoly::one(), OrderKind::Lex) == Point{0, 0});
  CHECK_THROWS_AS(leading_point({}, OrderKind::Lex), Error);
}

TEST_CASE("evaluation matches the worked examples") {
  Field F = gf16();
  FieldElement a3 = F.from_log(3);
  BivariatePoly e = parse_poly(F, "X1*X2^2+X1^2*X2^2");
  CHECK(evaluate(F, e, F.pow(a3, 1), F.pow(a3, 1)) == F.from_log(8));

  CHECK(evaluate(F, parse_poly(F, "X1+1"), F.one(), F.one()).is_zero());

  // code example in F2(5,15): u_(3,0) = e(alpha^0, beta^1) = a^6
  BivariatePoly e2 = parse_poly(F, "X2^2+X1*X2^3");
  CHECK(evaluate(F, e2, F.pow(F.root_of_unity(5), 0), F.pow(F.root_of_unity(15), 1)) ==
        F.from_log(6));
}

TEST_CASE("recurrence values") {
  Field F = gf16();
  PeriodicArray U = table_5x5(F);
  ArrayView view = ArrayView::full(U);

  // single-term polynomial reads the array directly
  RecurrenceValue v = recurrence_value(F, BivariatePoly::one(), view, {0, 0}, OrderKind::Lex);
  CHECK(std::get<FieldElement>(v) == F.from_log(8));

  // (X2 + a^6)[u]_(0,1) = a^14 + a^6 a^8 = 0
  BivariatePoly f = parse_poly(F, "X2+a^6");
  v = recurrence_value(F, f, view, {0, 1}, OrderKind::Lex);
  CHECK(std::get<FieldElement>(v).is_zero());

  // outside Sigma_s the value is zero by definition
  v = recurrence_value(F, f, view, {3, 0}, OrderKind::Lex);
  CHECK(std::get<FieldElement>(v).is_zero());

  // partial views report missing indexes instead of fabricating them
  ValueMap partial;
  partial[{0, 1}] = F.from_log(14);
  ArrayView pview = ArrayView::partial(partial, {5, 5});
  v = recurrence_value(F, f, pview, {0, 1}, OrderKind::Lex);
  REQUIRE(std::holds_alternative<NeedsIndex>(v));
  CHECK(std::get<NeedsIndex>(v).index == Point{0, 0});
}

TEST_CASE("periodicity of recurrence values on full views") {
  Field F = gf16();
  PeriodicArray U = table_5x5(F);
  ArrayView view = ArrayView::full(U);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    BivariatePoly f = random_poly(F, rng, 3, 4);
    if (f.is_zero()) continue;
    Point n{static_cast<int>(rng() % 5) + 2, static_cast<int>(rng() % 5) + 2};
    auto val = [&](Point at) {
      return std::get<FieldElement>(recurrence_value(F, f, view, at, OrderKind::Lex));
    };
    if (!preceq(leading_point(f, OrderKind::Lex), n)) continue;
    CHECK(val(n) == val(n + Point{5, 0}));
    CHECK(val(n) == val(n + Point{0, 5}));
  }
}

TEST_CASE("shift_add") {
  Field F = gf16();
  CHECK(shift_add(F, BivariatePoly::one(), {1, 0}, {}) == parse_poly(F, "X1"));
  BivariatePoly f = parse_poly(F, "X2+a^6");
  CHECK(shift_add(F, f, {0, 0}, f).is_zero());  // characteristic 2
  // X1*(X2+a^6) + a^6*X1 = X1*X2
  CHECK(shift_add(F, f, {1, 0}, parse_poly(F, "a^6*X1")) == parse_poly(F, "X1*X2"));
}

TEST_CASE("valid polynomials stay valid under shifts and combinations") {
  Field F = gf16();
  PeriodicArray U = table_5x5(F);
  // members of the relation ideal: the known basis and the circulant relations
  std::vector<BivariatePoly> valid = {
      parse_poly(F, "X1^2+a^2*X1+a^9"),
      parse_poly(F, "X2+a^6"),
      parse_poly(F, "X1^5+1"),
      parse_poly(F, "X2^5+1"),
  };
  for (const BivariatePoly& f : valid) REQUIRE(membership_full(F, f, U));

  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const BivariatePoly& f = valid[rng() % valid.size()];
    const BivariatePoly& g = valid[rng() % valid.size()];
    Point t{static_cast<int>(rng() % 4), static_cast<int>(rng() % 4)};
    // X^t f stays valid
    CHECK(membership_full(F, f.shifted(t), U));
    // X^t f + g stays valid when the leading points do not collide
    for (OrderKind kind : {OrderKind::Lex, OrderKind::Graded}) {
      if (leading_point(f, kind) + t == leading_point(g, kind)) continue;
      BivariatePoly h = shift_add(F, f, t, g);
      if (h.is_zero()) continue;
      CHECK(membership_full(F, h, U));
    }
  }
}

TEST_CASE("shifted-sum identity") {
  // (f+g)[u]_n = f[u]_{n-s_g+s_f} + g[u]_n whenever LP(f) <_T LP(g),
  // for arbitrary array values
  Field F = gf16();
  std::mt19937_64 rng(23);
  PeriodicArray U(5, 5);
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y)
      U.set({x, y}, rng() % 4 ? F.from_log(static_cast<std::int64_t>(rng() % 15)) : F.zero());
  ArrayView view = ArrayView::full(U);

  for (OrderKind kind : {OrderKind::Lex, OrderKind::Graded}) {
    int checked = 0;
    for (int i = 0; checked < 150 && i < 3000; ++i) {
      BivariatePoly f = random_poly(F, rng, 3, 3);
      BivariatePoly g = random_poly(F, rng, 3, 3);
      if (f.is_zero() || g.is_zero()) continue;
      Point sf = leading_point(f, kind), sg = leading_point(g, kind);
      if (!total_less(kind, sf, sg)) continue;
      BivariatePoly sum = add(F, f, g);
      Point n{sg.x + static_cast<int>(rng() % 3), sg.y + static_cast<int>(rng() % 3)};
      FieldElement lhs = std::get<FieldElement>(recurrence_value(F, sum, view, n, kind));
      FieldElement rhs_f =
          std::get<FieldElement>(recurrence_value(F, f, view, n - sg + sf, kind));
      FieldElement rhs_g = std::get<FieldElement>(recurrence_value(F, g, view, n, kind));
      CHECK(lhs == F.add(rhs_f, rhs_g));
      ++checked;
    }
    CHECK(checked == 150);
  }
}

TEST_CASE("text form") {
  Field F = gf16();
  CHECK(format_poly(F, parse_poly(F, "X1^2+a^2*X1+a^9")) == "X1^2+a^2*X1+a^9");
  CHECK(format_poly(F, parse_poly(F, "X2+1")) == "X2+1");
  CHECK(format_poly(F, {}) == "0");
  CHECK(format_poly(F, BivariatePoly::one()) == "1");
  CHECK(parse_poly(F, " X1 * X2 ^ 2 + a^3 ") == parse_poly(F, "X1*X2^2+a^3"));
  CHECK_THROWS_AS(parse_poly(F, "X3+1"), Error);
  CHECK_THROWS_AS(parse_poly(F, "X1+X1"), Error);
  CHECK_THROWS_AS(parse_poly(F, ""), Error);

  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    BivariatePoly f = random_poly(F, rng, 5, 5);
    CHECK(parse_poly(F, format_poly(F, f)) == f);
  }
}
