#include <doctest.h>

#include <random>

#include "bmsa/ff.hpp"

using namespace bmsa;

namespace {

Field gf16() { return Field::create(2, 4, {1, 1, 0, 0, 1}); }
Field gf4096() { return Field::create(2, 12, {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1}); }

}  // namespace

TEST_CASE("field construction") {
  Field F = gf16();
  CHECK(F.order() == 16);
  CHECK(F.group_order() == 15);

  Field L = gf4096();
  CHECK(L.order() == 4096);

  Field F2 = Field::create(2, 1, {1, 1});  // GF(2), a = 1
  CHECK(F2.order() == 2);
  CHECK(F2.generator() == F2.one());

  // x^4+x^3+x^2+x+1 is irreducible but its root has order 5
  CHECK_THROWS_WITH_AS(Field::create(2, 4, {1, 1, 1, 1, 1}), doctest::Contains("order 5"), Error);
  // x^2 degenerates immediately
  CHECK_THROWS_AS(Field::create(2, 2, {0, 0, 1}), Error);
  // x^4+1 = (x+1)^4 cycles early
  CHECK_THROWS_AS(Field::create(2, 4, {1, 0, 0, 0, 1}), Error);
  // reducible x^2+1 = (x+1)^2 over GF(2)
  CHECK_THROWS_AS(Field::create(2, 2, {1, 0, 1}), Error);
  // table cap
  CHECK_THROWS_AS(Field::create(2, 21, std::vector<int>(22, 1)), Error);
  // non-monic / bad shapes
  CHECK_THROWS_AS(Field::create(2, 2, {1, 1, 0}), Error);
  CHECK_THROWS_AS(Field::create(4, 2, {1, 1, 1}), Error);
}

TEST_CASE("log and antilog tables are inverse") {
  Field F = gf16();
  for (std::int64_t k = 0; k < F.group_order(); ++k) {
    FieldElement x = F.from_log(k);
    CHECK(F.from_poly_rep(F.poly_rep(x)) == x);
  }
}

TEST_CASE("basic arithmetic identities") {
  Field F = gf16();
  FieldElement a = F.generator();
  // x^4 = x + 1 under x^4+x+1
  CHECK(F.pow(a, 4) == F.add(a, F.one()));
  CHECK(F.pow(a, 15) == F.one());
  CHECK(F.mul(F.from_log(7), F.inv(F.from_log(7))) == F.one());
  CHECK(F.add(F.from_log(9), F.from_log(9)).is_zero());
  CHECK_THROWS_AS(F.inv(F.zero()), Error);
  CHECK(F.pow(F.zero(), 0) == F.one());
  CHECK(F.pow(F.zero(), 3).is_zero());
}

TEST_CASE("group law and distributivity on random triples") {
  Field F = gf16();
  std::mt19937_64 rng(7);
  auto rand_el = [&](bool nonzero) {
    if (!nonzero && rng() % 5 == 0) return F.zero();
    return F.from_log(static_cast<std::int64_t>(rng() % 15));
  };
  for (int i = 0; i < 1000; ++i) {
    FieldElement x = rand_el(true), y = rand_el(true), z = rand_el(false);
    CHECK(F.mul(x, y).log == (x.log + y.log) % F.group_order());
    CHECK(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
    CHECK(F.add(x, F.neg(x)).is_zero());
  }
}

TEST_CASE("odd characteristic arithmetic") {
  Field F9 = Field::create(3, 2, {2, 2, 1});  // x^2+2x+2, primitive over GF(3)
  CHECK(F9.order() == 9);
  FieldElement a = F9.generator();
  CHECK(F9.pow(a, 8) == F9.one());
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    FieldElement x = F9.from_log(static_cast<std::int64_t>(rng() % 8));
    FieldElement y = F9.from_log(static_cast<std::int64_t>(rng() % 8));
    FieldElement z = rng() % 4 ? F9.from_log(static_cast<std::int64_t>(rng() % 8)) : F9.zero();
    CHECK(F9.mul(x, F9.add(y, z)) == F9.add(F9.mul(x, y), F9.mul(x, z)));
    CHECK(F9.add(x, F9.neg(x)).is_zero());
    CHECK(F9.sub(F9.add(x, y), y) == x);
  }
}

TEST_CASE("roots of unity") {
  Field L = gf4096();
  CHECK(L.root_of_unity(5) == L.from_log(819));
  CHECK(L.root_of_unity(7) == L.from_log(585));
  Field F = gf16();
  CHECK(F.root_of_unity(5) == F.from_log(3));
  CHECK_THROWS_AS(F.root_of_unity(6), Error);

  for (std::int64_t r : {1, 3, 5, 15}) {
    FieldElement w = F.root_of_unity(r);
    CHECK(F.pow(w, r) == F.one());
    for (std::int64_t k = 1; k < r; ++k) CHECK_FALSE(F.pow(w, k) == F.one());
  }
}

TEST_CASE("subfield membership") {
  Field F = gf16();
  CHECK(F.in_base_field(F.zero(), 2));
  CHECK(F.in_base_field(F.one(), 2));
  CHECK_FALSE(F.in_base_field(F.generator(), 2));
  CHECK_THROWS_AS(F.in_base_field(F.one(), 8), Error);  // 8 = 2^3, 3 does not divide 4

  // agreement with the exhaustive x^q == x check on GF(16), GF(4), GF(2)
  for (std::int64_t q : {2, 4, 16}) {
    for (std::int64_t k = -1; k < F.group_order(); ++k) {
      FieldElement x = k < 0 ? F.zero() : F.from_log(k);
      bool direct = F.pow(x, q) == x;
      CHECK(F.in_base_field(x, q) == direct);
    }
    CHECK(static_cast<std::int64_t>(F.subfield_elements(q).size()) == q);
    for (FieldElement x : F.subfield_elements(q)) CHECK(F.pow(x, q) == x);
  }
}

TEST_CASE("format and parse") {
  Field F = gf16();
  CHECK(F.format(F.zero()) == "0");
  CHECK(F.format(F.one()) == "a^0");
  CHECK(F.format(F.from_log(8)) == "a^8");
  CHECK(F.parse("1") == F.one());
  for (std::int64_t k = -1; k < 15; ++k) {
    FieldElement x = k < 0 ? F.zero() : F.from_log(k);
    CHECK(F.parse(F.format(x)) == x);
  }
  CHECK_THROWS_AS(F.parse("b^3"), Error);
  CHECK_THROWS_AS(F.parse("a^"), Error);
}
