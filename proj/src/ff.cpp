#include "bmsa/ff.hpp"

#include <algorithm>
#include <charconv>

namespace bmsa {

namespace {

constexpr std::int64_t kMaxGroupOrder = 1 << 20;

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<std::int64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::OrderNotDividing: return "OrderNotDividing";
    case Errc::BadSubfield: return "BadSubfield";
    case Errc::BadDefiningPoints: return "BadDefiningPoints";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::NotNormalForm: return "NotNormalForm";
    case Errc::NegativeShift: return "NegativeShift";
    case Errc::CapabilityExceeded: return "CapabilityExceeded";
    case Errc::IrreducibleTerm: return "IrreducibleTerm";
    case Errc::MissingInitialValue: return "MissingInitialValue";
    case Errc::InconsistentSystem: return "InconsistentSystem";
    case Errc::NotInBaseField: return "NotInBaseField";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::CapabilityTooLarge: return "CapabilityTooLarge";
    case Errc::DegenerateBound: return "DegenerateBound";
    case Errc::NoTau: return "NoTau";
    case Errc::NotCodewordAfterCorrection: return "NotCodewordAfterCorrection";
    case Errc::SpaceTooLarge: return "SpaceTooLarge";
    case Errc::ParseError: return "ParseError";
    case Errc::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

Field Field::create(int p, int m, const std::vector<int>& poly) {
  if (!is_prime(p)) throw Error(Errc::ConfigError, "field characteristic must be prime");
  if (m < 1) throw Error(Errc::ConfigError, "extension degree must be >= 1");
  if (static_cast<int>(poly.size()) != m + 1)
    throw Error(Errc::ConfigError, "modulus polynomial must have degree m");
  if (poly[m] != 1) throw Error(Errc::ConfigError, "modulus polynomial must be monic");
  for (int c : poly)
    if (c < 0 || c >= p) throw Error(Errc::ConfigError, "modulus coefficients must lie in Z_p");

  std::int64_t q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q - 1 > kMaxGroupOrder)
      throw Error(Errc::FieldTooLarge, "p^m - 1 exceeds the table size cap (2^20)");
  }

  Field f;
  f.p_ = p;
  f.m_ = m;
  f.q_ = q;
  f.poly_ = poly;
  f.log_.assign(static_cast<std::size_t>(q), -1);
  f.alog_.assign(static_cast<std::size_t>(q - 1), 0);

  // Walk the powers of a (= the class of x). digits holds the coefficient
  // vector of the current power.
  std::vector<int> digits(static_cast<std::size_t>(m), 0);
  digits[0] = 1;  // a^0 = 1
  auto pack = [&]() {
    std::int64_t rep = 0;
    for (int i = m - 1; i >= 0; --i) rep = rep * p + digits[static_cast<std::size_t>(i)];
    return rep;
  };

  for (std::int64_t k = 0; k < q - 1; ++k) {
    std::int64_t rep = pack();
    if (rep == 0) throw Error(Errc::NotIrreducible, "power of a degenerated to zero");
    if (rep == 1 && k > 0)
      throw Error(Errc::NotPrimitive, "root has multiplicative order " + std::to_string(k));
    if (f.log_[static_cast<std::size_t>(rep)] != -1)
      throw Error(Errc::NotIrreducible, "powers of a cycled without reaching 1");
    f.log_[static_cast<std::size_t>(rep)] = static_cast<std::int32_t>(k);
    f.alog_[static_cast<std::size_t>(k)] = rep;

    // multiply by x and reduce modulo the modulus polynomial
    int carry = digits[static_cast<std::size_t>(m - 1)];
    for (int i = m - 1; i > 0; --i) digits[static_cast<std::size_t>(i)] = digits[static_cast<std::size_t>(i - 1)];
    digits[0] = 0;
    if (carry != 0) {
      for (int i = 0; i < m; ++i) {
        int v = digits[static_cast<std::size_t>(i)] - carry * poly[static_cast<std::size_t>(i)];
        digits[static_cast<std::size_t>(i)] = ((v % p) + p) % p;
      }
    }
  }
  if (pack() != 1) throw Error(Errc::NotPrimitive, "a^(p^m-1) != 1");
  return f;
}

FieldElement Field::generator() const {
  // In GF(p) the group may be trivial; a = 1 then.
  return group_order() == 1 ? one() : FieldElement{1};
}

FieldElement Field::from_log(std::int64_t k) const {
  std::int64_t n = group_order();
  k %= n;
  if (k < 0) k += n;
  return FieldElement{static_cast<std::int32_t>(k)};
}

FieldElement Field::from_int(std::int64_t n) const {
  n %= p_;
  if (n < 0) n += p_;
  return from_poly_rep(n);
}

std::int64_t Field::poly_rep(FieldElement x) const {
  return x.is_zero() ? 0 : alog_[static_cast<std::size_t>(x.log)];
}

FieldElement Field::from_poly_rep(std::int64_t rep) const {
  if (rep == 0) return fe_zero;
  if (rep < 0 || rep >= q_) throw Error(Errc::ConfigError, "poly representation out of range");
  return FieldElement{log_[static_cast<std::size_t>(rep)]};
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::int64_t ra = poly_rep(a), rb = poly_rep(b);
  if (p_ == 2) return from_poly_rep(ra ^ rb);
  std::int64_t rep = 0, mult = 1;
  for (int i = 0; i < m_; ++i) {
    rep += ((ra % p_ + rb % p_) % p_) * mult;
    ra /= p_;
    rb /= p_;
    mult *= p_;
  }
  return from_poly_rep(rep);
}

FieldElement Field::neg(FieldElement a) const {
  if (a.is_zero() || p_ == 2) return a;
  std::int64_t ra = poly_rep(a);
  std::int64_t rep = 0, mult = 1;
  for (int i = 0; i < m_; ++i) {
    rep += ((p_ - ra % p_) % p_) * mult;
    ra /= p_;
    mult *= p_;
  }
  return from_poly_rep(rep);
}

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  if (a.is_zero() || b.is_zero()) return fe_zero;
  return from_log(static_cast<std::int64_t>(a.log) + b.log);
}

FieldElement Field::inv(FieldElement a) const {
  if (a.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  return from_log(-static_cast<std::int64_t>(a.log));
}

FieldElement Field::pow(FieldElement a, std::int64_t n) const {
  if (a.is_zero()) {
    if (n < 0) throw Error(Errc::DivisionByZero, "negative power of zero");
    return n == 0 ? one() : fe_zero;
  }
  return from_log(static_cast<std::int64_t>(a.log) * n);
}

FieldElement Field::root_of_unity(std::int64_t r) const {
  if (r <= 0 || group_order() % r != 0)
    throw Error(Errc::OrderNotDividing,
                std::to_string(r) + " does not divide p^m - 1 = " + std::to_string(group_order()));
  return from_log(group_order() / r);
}

bool Field::in_base_field(FieldElement x, std::int64_t q_sub) const {
  if (q_sub < 2) throw Error(Errc::BadSubfield, "subfield size must be >= 2");
  std::int64_t s = q_sub;
  int d = 0;
  while (s > 1) {
    if (s % p_ != 0) throw Error(Errc::BadSubfield, "subfield size is not a power of p");
    s /= p_;
    ++d;
  }
  if (m_ % d != 0) throw Error(Errc::BadSubfield, "subfield degree does not divide m");
  if (x.is_zero()) return true;
  return (static_cast<std::int64_t>(x.log) * (q_sub - 1)) % group_order() == 0;
}

std::vector<FieldElement> Field::subfield_elements(std::int64_t q_sub) const {
  std::vector<FieldElement> out;
  out.push_back(fe_zero);
  if (in_base_field(fe_one, q_sub)) {}  // validates q_sub
  std::int64_t step = group_order() / (q_sub - 1);
  for (std::int64_t k = 0; k < q_sub - 1; ++k) out.push_back(from_log(k * step));
  return out;
}

std::string Field::format(FieldElement x) const {
  if (x.is_zero()) return "0";
  return "a^" + std::to_string(x.log);
}

FieldElement Field::parse(std::string_view s) const {
  if (s == "0") return fe_zero;
  if (s == "1") return fe_one;
  if (s.size() > 2 && s[0] == 'a' && s[1] == '^') {
    std::int64_t k = 0;
    auto [ptr, ec] = std::from_chars(s.data() + 2, s.data() + s.size(), k);
    if (ec == std::errc() && ptr == s.data() + s.size()) return from_log(k);
  }
  throw Error(Errc::ParseError, "not a field element: '" + std::string(s) + "'");
}

}  // namespace bmsa
