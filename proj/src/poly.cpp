#include "bmsa/poly.hpp"

#include <algorithm>
#include <charconv>

#include "bmsa/locator.hpp"

namespace bmsa {

BivariatePoly BivariatePoly::constant(FieldElement c) { return monomial({0, 0}, c); }

BivariatePoly BivariatePoly::monomial(Point m, FieldElement c) {
  BivariatePoly f;
  f.set_term(m, c);
  return f;
}

const BivariatePoly& BivariatePoly::one() {
  static const BivariatePoly kOne = constant(fe_one);
  return kOne;
}

FieldElement BivariatePoly::coeff(Point m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? fe_zero : it->second;
}

std::vector<Point> BivariatePoly::support() const {
  std::vector<Point> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.push_back(m);
  return out;
}

BivariatePoly BivariatePoly::scaled(const Field& F, FieldElement c) const {
  BivariatePoly out;
  if (c.is_zero()) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, F.mul(v, c));
  return out;
}

BivariatePoly BivariatePoly::shifted(Point t) const {
  BivariatePoly out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m + t, v);
  return out;
}

void BivariatePoly::set_term(Point m, FieldElement c) {
  if (c.is_zero())
    terms_.erase(m);
  else
    terms_[m] = c;
}

BivariatePoly add(const Field& F, const BivariatePoly& f, const BivariatePoly& g) {
  BivariatePoly out = f;
  for (const auto& [m, c] : g.terms()) out.set_term(m, F.add(out.coeff(m), c));
  return out;
}

BivariatePoly sub(const Field& F, const BivariatePoly& f, const BivariatePoly& g) {
  BivariatePoly out = f;
  for (const auto& [m, c] : g.terms()) out.set_term(m, F.sub(out.coeff(m), c));
  return out;
}

BivariatePoly shift_add(const Field& F, const BivariatePoly& f, Point t, const BivariatePoly& g) {
  return add(F, f.shifted(t), g);
}

Point leading_point(const BivariatePoly& f, OrderKind kind) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "leading point of the zero polynomial");
  Point best = f.terms().begin()->first;
  for (const auto& [m, c] : f.terms())
    if (total_less(kind, best, m)) best = m;
  return best;
}

FieldElement leading_coeff(const BivariatePoly& f, OrderKind kind) {
  return f.coeff(leading_point(f, kind));
}

FieldElement evaluate(const Field& F, const BivariatePoly& f, FieldElement a1, FieldElement a2) {
  FieldElement acc = fe_zero;
  for (const auto& [m, c] : f.terms())
    acc = F.add(acc, F.mul(c, F.mul(F.pow(a1, m.x), F.pow(a2, m.y))));
  return acc;
}

ArrayView ArrayView::full(const PeriodicArray& arr) {
  ArrayView v;
  v.full_ = &arr;
  v.period_ = {arr.r1(), arr.r2()};
  return v;
}

ArrayView ArrayView::partial(const ValueMap& values, Point period) {
  ArrayView v;
  v.partial_ = &values;
  v.period_ = period;
  return v;
}

std::optional<FieldElement> ArrayView::at(Point n) const {
  if (full_) return full_->at(n);
  auto it = partial_->find(n);
  if (it == partial_->end()) return std::nullopt;
  return it->second;
}

RecurrenceValue recurrence_value(const Field& F, const BivariatePoly& f, const ArrayView& u,
                                 Point n, OrderKind kind) {
  Point s = leading_point(f, kind);
  if (!preceq(s, n)) return FieldElement{fe_zero};
  FieldElement acc = fe_zero;
  for (const auto& [m, c] : f.terms()) {
    Point idx = m + n - s;
    std::optional<FieldElement> v = u.at(idx);
    if (!v) return NeedsIndex{idx};
    acc = F.add(acc, F.mul(c, *v));
  }
  return acc;
}

std::string format_poly(const Field& F, const BivariatePoly& f) {
  if (f.is_zero()) return "0";
  std::vector<Point> supp = f.support();
  // display in decreasing lex order, matching the worked examples
  std::sort(supp.begin(), supp.end(),
            [](Point a, Point b) { return total_less(OrderKind::Lex, b, a); });
  std::string out;
  for (Point m : supp) {
    if (!out.empty()) out += '+';
    FieldElement c = f.coeff(m);
    std::string part;
    if (m == Point{0, 0})
      part = c == fe_one ? "1" : F.format(c);
    else if (!(c == fe_one))
      part = F.format(c);
    auto var = [&](const char* name, int e) {
      if (e == 0) return;
      if (!part.empty()) part += '*';
      part += name;
      if (e > 1) part += "^" + std::to_string(e);
    };
    var("X1", m.x);
    var("X2", m.y);
    out += part;
  }
  return out;
}

namespace {

// One "a^k*X1^i*X2^j" product with any unit part omitted.
std::pair<Point, FieldElement> parse_term(const Field& F, std::string_view term) {
  Point m{0, 0};
  FieldElement c = fe_one;
  bool saw_coeff = false, saw_x1 = false, saw_x2 = false;
  std::size_t pos = 0;
  while (pos < term.size()) {
    std::size_t end = term.find('*', pos);
    if (end == std::string_view::npos) end = term.size();
    std::string_view factor = term.substr(pos, end - pos);
    if (factor.empty()) throw Error(Errc::ParseError, "empty factor in term");
    if (factor[0] == 'X') {
      if (factor.size() < 2 || (factor[1] != '1' && factor[1] != '2'))
        throw Error(Errc::ParseError, "unknown variable in '" + std::string(factor) + "'");
      int e = 1;
      if (factor.size() > 2) {
        if (factor[2] != '^') throw Error(Errc::ParseError, "malformed power");
        auto [p, ec] = std::from_chars(factor.data() + 3, factor.data() + factor.size(), e);
        if (ec != std::errc() || p != factor.data() + factor.size() || e < 0)
          throw Error(Errc::ParseError, "malformed exponent in '" + std::string(factor) + "'");
      }
      bool& seen = factor[1] == '1' ? saw_x1 : saw_x2;
      if (seen) throw Error(Errc::ParseError, "repeated variable in term");
      seen = true;
      (factor[1] == '1' ? m.x : m.y) = e;
    } else {
      if (saw_coeff || saw_x1 || saw_x2)
        throw Error(Errc::ParseError, "coefficient must come first in a term");
      c = F.parse(factor);
      saw_coeff = true;
    }
    pos = end + 1;
  }
  if (!saw_coeff && !saw_x1 && !saw_x2) throw Error(Errc::ParseError, "empty term");
  return {m, c};
}

}  // namespace

BivariatePoly parse_poly(const Field& F, std::string_view text) {
  std::string compact;
  for (char ch : text)
    if (ch != ' ' && ch != '\t' && ch != '\n' && ch != '\r') compact += ch;
  if (compact.empty()) throw Error(Errc::ParseError, "empty polynomial text");
  if (compact == "0") return {};
  BivariatePoly f;
  std::size_t pos = 0;
  while (pos <= compact.size()) {
    std::size_t end = compact.find('+', pos);
    if (end == std::string_view::npos) end = compact.size();
    auto [m, c] = parse_term(F, std::string_view(compact).substr(pos, end - pos));
    if (!f.coeff(m).is_zero()) throw Error(Errc::ParseError, "repeated monomial in polynomial");
    f.set_term(m, c);
    pos = end + 1;
    if (end == compact.size()) break;
  }
  return f;
}

}  // namespace bmsa
