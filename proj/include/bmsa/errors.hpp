#pragma once

#include <stdexcept>
#include <string>

namespace bmsa {

enum class Errc {
  // ff
  NotPrimitive,
  NotIrreducible,
  FieldTooLarge,
  DivisionByZero,
  OrderNotDividing,
  BadSubfield,
  // order
  BadDefiningPoints,
  // poly
  ZeroPolynomial,
  // bms
  NotNormalForm,
  NegativeShift,
  CapabilityExceeded,
  IrreducibleTerm,
  // locator
  MissingInitialValue,
  InconsistentSystem,
  NotInBaseField,
  // codes
  NotCoprime,
  CapabilityTooLarge,
  DegenerateBound,
  NoTau,
  NotCodewordAfterCorrection,
  // oracle
  SpaceTooLarge,
  // io / cli
  ParseError,
  ConfigError,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

const char* errc_name(Errc code);

}  // namespace bmsa
