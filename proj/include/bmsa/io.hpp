#pragma once

#include <string>
#include <vector>

#include "bmsa/bms.hpp"
#include "bmsa/codes.hpp"
#include "bmsa/ff.hpp"
#include "bmsa/locator.hpp"

namespace bmsa {

// Field config: {"p":2,"m":4,"poly":[c0,...,cm]} with cm = 1.
Field field_from_json(const std::string& text);
std::string field_to_json(const Field&);

// Syndrome file: {"tau":[t1,t2],"entries":[{"n":[i,j],"v":"a^k"},...]}.
struct SyndromeFile {
  Point tau;
  ValueMap entries;
};
SyndromeFile syndromes_from_json(const Field&, const std::string& text);
std::string syndromes_to_json(const Field&, const SyndromeFile&);

// Code config: {"r1":..,"r2":..,"q":..,"field":{...},"orbits":[[a1,a2],...]}.
struct CodeFile {
  Field field;
  AbelianCode code;
};
CodeFile code_from_json(const std::string& text);
std::string code_to_json(const Field&, const AbelianCode&);

// Word grid: {"grid":[["0","a^3",...],...]} (r1 rows of r2 entries).
Word word_from_json(const Field&, const std::string& text);
std::string word_to_json(const Field&, const Word&);

enum class TraceFormat { Table, Structured };

// Table form mirrors the worked-example layout, merging consecutive
// unchanged rows into one "Same" row. Structured form is JSON with one
// record per visited index and round-trips through parse_trace.
std::string emit_trace(const Field&, const std::vector<TraceRecord>&, TraceFormat);
std::vector<TraceRecord> parse_trace(const Field&, const std::string& json);

std::string basis_to_json(const Field&, const RunResult&);

}  // namespace bmsa
