#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bmsa/order.hpp"

namespace bmsa {

// Reference runs used by the self test and the acceptance suite. Inputs and
// expected outputs are transcribed from the published worked examples; the
// few cells that deviate from the printed tables carry a note explaining
// the derivation.
namespace golden {

struct TraceRow {
  Point l;
  std::vector<std::string> F;
  std::vector<std::string> G;
  std::vector<Point> delta;   // member list
  std::string note;           // nonempty for derived cells
};

struct Example {
  std::string name;
  // field
  int p = 2;
  int m = 0;
  std::vector<int> modulus;
  // run parameters
  int r1 = 0, r2 = 0;
  std::int64_t q = 2;
  std::string error_poly;
  Point tau;
  int t = 0;
  OrderKind order = OrderKind::Lex;
  // expected data
  std::vector<std::string> syndrome_values;  // over S(t) in row-major order; empty = unchecked
  std::vector<TraceRow> trace;               // full rows (merged rows expanded); empty = unchecked
  std::vector<std::string> final_basis;      // normal form
  std::vector<Point> support;                // supp(e); empty = unchecked
  // optional extra checkpoints (index in the lex schedule -> expected F)
  struct Checkpoint {
    Point l;
    std::vector<std::string> F;
  };
  std::vector<Checkpoint> checkpoints;
  // abelian-code context (decode example only)
  std::vector<Point> code_orbits;
};

const Example& example_5x7();     // period 5x7 over GF(2^12)
const Example& example_5x5();     // period 5x5 over GF(16)
const Example& example_15x15();   // period 15x15 over GF(16), t = 4
const Example& example_decode();  // abelian code in F2(5,15)

std::vector<const Example*> all_examples();

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> mismatches;
  std::vector<std::string> notes;
};

// Replay one example and compare syndromes, trace rows, checkpoints, final
// basis and support against the expected data.
VerifyResult verify(const Example&);

}  // namespace golden
}  // namespace bmsa
