#include "bmsa/codes.hpp"

#include <algorithm>
#include <numeric>

namespace bmsa {

namespace {

std::string point_str(Point p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

}  // namespace

std::vector<Point> q_orbit(Point a, std::int64_t q, int r1, int r2) {
  std::vector<Point> orbit;
  Point cur{((a.x % r1) + r1) % r1, ((a.y % r2) + r2) % r2};
  do {
    orbit.push_back(cur);
    cur = {static_cast<int>((cur.x * q) % r1), static_cast<int>((cur.y * q) % r2)};
  } while (!(cur == orbit.front()));
  return orbit;
}

bool AbelianCode::in_defining_set(Point n) const {
  Point red{((n.x % r1) + r1) % r1, ((n.y % r2) + r2) % r2};
  return defining_set.count(red) != 0;
}

AbelianCode code_create(int r1, int r2, std::int64_t q, std::span<const Point> orbit_reps) {
  if (r1 < 1 || r2 < 1) throw Error(Errc::ConfigError, "period components must be positive");
  if (std::gcd<std::int64_t>(static_cast<std::int64_t>(r1) * r2, q) != 1)
    throw Error(Errc::NotCoprime, "gcd(r1*r2, q) must be 1");
  AbelianCode code{r1, r2, q, {}};
  for (Point rep : orbit_reps)
    for (Point p : q_orbit(rep, q, r1, r2)) code.defining_set.insert(p);
  return code;
}

std::optional<Point> find_tau(const AbelianCode& code, int t) {
  if (t < 1 || t > code.r1 / 2 || t > code.r2 / 2)
    throw Error(Errc::CapabilityTooLarge, "capability t must satisfy 1 <= t <= floor(r_i/2)");
  std::vector<Point> st = s_of_t(t);
  for (int x = 0; x < code.r1; ++x)
    for (int y = 0; y < code.r2; ++y) {
      Point tau{x, y};
      bool ok = true;
      for (Point n : st)
        if (!code.in_defining_set(tau + n)) {
          ok = false;
          break;
        }
      if (ok) return tau;
    }
  return std::nullopt;
}

BchBound bch_capability(const std::set<int>& gamma, int delta1, int delta2, int b1, int b2,
                        int r1, int r2) {
  if (gamma.empty() || !std::all_of(gamma.begin(), gamma.end(), [](int k) { return k == 1 || k == 2; }))
    throw Error(Errc::ConfigError, "gamma must be a nonempty subset of {1,2}");
  auto check_delta = [&](int dk, int rk) {
    if (dk < 2 || dk > rk) throw Error(Errc::ConfigError, "designed distance out of range");
  };
  int cap = std::min(r1 / 2, r2 / 2);
  BchBound out;
  if (gamma.size() == 2) {
    check_delta(delta1, r1);
    check_delta(delta2, r2);
    out.t = std::min(delta1 + delta2 - 3, cap);
    out.tau = {b1, b2};
  } else if (gamma.count(1)) {
    check_delta(delta1, r1);
    out.t = std::min((delta1 - 1) / 2, cap);
    out.tau = {b1, 0};
  } else {
    check_delta(delta2, r2);
    out.t = std::min((delta2 - 1) / 2, cap);
    out.tau = {0, b2};
  }
  if (out.t < 1) throw Error(Errc::DegenerateBound, "bound yields capability < 1");
  return out;
}

FieldElement Word::at(Point n) const {
  int x = ((n.x % r1) + r1) % r1;
  int y = ((n.y % r2) + r2) % r2;
  return coeffs[static_cast<std::size_t>(x) * static_cast<std::size_t>(r2) + static_cast<std::size_t>(y)];
}

void Word::set(Point n, FieldElement v) {
  int x = ((n.x % r1) + r1) % r1;
  int y = ((n.y % r2) + r2) % r2;
  coeffs[static_cast<std::size_t>(x) * static_cast<std::size_t>(r2) + static_cast<std::size_t>(y)] = v;
}

Word Word::zero(int r1, int r2) {
  Word w{r1, r2, {}};
  w.coeffs.assign(static_cast<std::size_t>(r1) * static_cast<std::size_t>(r2), fe_zero);
  return w;
}

Word word_from_poly(const BivariatePoly& f, int r1, int r2) {
  Word w = Word::zero(r1, r2);
  for (const auto& [m, c] : f.terms()) w.set(m, c);
  return w;
}

BivariatePoly word_to_poly(const Word& w) {
  BivariatePoly f;
  for (int x = 0; x < w.r1; ++x)
    for (int y = 0; y < w.r2; ++y) f.set_term({x, y}, w.at({x, y}));
  return f;
}

Word word_sub(const Field& F, const Word& a, const Word& b) {
  Word out = a;
  for (int x = 0; x < a.r1; ++x)
    for (int y = 0; y < a.r2; ++y) out.set({x, y}, F.sub(a.at({x, y}), b.at({x, y})));
  return out;
}

int word_distance(const Word& a, const Word& b) {
  int d = 0;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    if (!(a.coeffs[i] == b.coeffs[i])) ++d;
  return d;
}

FieldElement evaluate_word(const Field& F, const Word& w, AlphaPair alpha, Point n) {
  FieldElement acc = fe_zero;
  for (int x = 0; x < w.r1; ++x)
    for (int y = 0; y < w.r2; ++y) {
      FieldElement c = w.at({x, y});
      if (c.is_zero()) continue;
      acc = F.add(acc, F.mul(c, F.mul(F.pow(alpha.first, static_cast<std::int64_t>(x) * n.x),
                                      F.pow(alpha.second, static_cast<std::int64_t>(y) * n.y))));
    }
  return acc;
}

DecodeResult decode(const Field& F, const AbelianCode& code, const Word& received, int t,
                    OrderKind order, std::optional<Point> tau_opt) {
  if (t < 1 || t > code.r1 / 2 || t > code.r2 / 2)
    throw Error(Errc::CapabilityTooLarge, "capability t must satisfy 1 <= t <= floor(r_i/2)");
  Point tau{0, 0};
  if (tau_opt) {
    tau = *tau_opt;
  } else {
    std::optional<Point> found = find_tau(code, t);
    if (!found) throw Error(Errc::NoTau, "defining set contains no translate of S(t)");
    tau = *found;
  }
  AlphaPair alpha{F.root_of_unity(code.r1), F.root_of_unity(code.r2)};

  // On the defining set the received word evaluates to the error alone.
  ValueMap synd;
  for (Point n : s_of_t(t)) synd[n] = evaluate_word(F, received, alpha, tau + n);

  RunResult res = run(F, synd, order, t, {code.r1, code.r2});
  std::vector<Point> support = support_from_basis(F, res.basis, alpha, {code.r1, code.r2});
  if (static_cast<int>(support.size()) > t)
    throw Error(Errc::CapabilityExceeded,
                "recovered support has weight " + std::to_string(support.size()));
  BivariatePoly error = solve_coefficients(F, support, synd, tau, alpha, code.q);

  DecodeResult out;
  out.error = error;
  out.tau = tau;
  out.condition_ok = res.condition_ok;
  out.trace = std::move(res.trace);
  out.corrected = word_sub(F, received, word_from_poly(error, code.r1, code.r2));
  for (Point n : code.defining_set)
    if (!evaluate_word(F, out.corrected, alpha, n).is_zero())
      throw Error(Errc::NotCodewordAfterCorrection,
                  "corrected word does not vanish at " + point_str(n));
  return out;
}

Word random_codeword(const Field& F, const AbelianCode& code, std::mt19937_64& rng) {
  // Spectrum values: zero on the defining set; on each remaining q-orbit a
  // free value v for the representative with v_{q n} = v^q, where v ranges
  // over the subfield fixed by x -> x^{q^len}.
  PeriodicArray spectrum(code.r1, code.r2);
  for (int x = 0; x < code.r1; ++x)
    for (int y = 0; y < code.r2; ++y) {
      Point n{x, y};
      if (spectrum.at(n)) continue;
      std::vector<Point> orbit = q_orbit(n, code.q, code.r1, code.r2);
      if (code.defining_set.count(n)) {
        for (Point p : orbit) spectrum.set(p, fe_zero);
        continue;
      }
      int d = 0;
      for (std::int64_t s = code.q; s > 1; s /= F.p()) ++d;
      int g = std::gcd(d * static_cast<int>(orbit.size()), F.m());
      std::int64_t sub = 1;
      for (int i = 0; i < g; ++i) sub *= F.p();
      std::vector<FieldElement> pool = F.subfield_elements(sub);
      FieldElement v = pool[rng() % pool.size()];
      for (Point p : orbit) {
        spectrum.set(p, v);
        v = F.pow(v, code.q);
      }
    }

  // Inverse transform: c_m = (1/r) sum_n v_n alpha^{-n m}.
  AlphaPair alpha{F.root_of_unity(code.r1), F.root_of_unity(code.r2)};
  std::int64_t r = static_cast<std::int64_t>(code.r1) * code.r2;
  FieldElement rinv = F.inv(F.from_int(r % F.p()));
  Word w = Word::zero(code.r1, code.r2);
  for (int mx = 0; mx < code.r1; ++mx)
    for (int my = 0; my < code.r2; ++my) {
      FieldElement acc = fe_zero;
      for (int nx = 0; nx < code.r1; ++nx)
        for (int ny = 0; ny < code.r2; ++ny) {
          FieldElement v = spectrum.get({nx, ny});
          if (v.is_zero()) continue;
          acc = F.add(acc, F.mul(v, F.mul(F.pow(alpha.first, -static_cast<std::int64_t>(nx) * mx),
                                          F.pow(alpha.second, -static_cast<std::int64_t>(ny) * my))));
        }
      w.set({mx, my}, F.mul(rinv, acc));
    }
  return w;
}

BivariatePoly random_error(const Field& F, const AbelianCode& code, int w, std::mt19937_64& rng) {
  std::vector<Point> positions;
  for (int x = 0; x < code.r1; ++x)
    for (int y = 0; y < code.r2; ++y) positions.push_back({x, y});
  std::shuffle(positions.begin(), positions.end(), rng);
  std::vector<FieldElement> units = F.subfield_elements(code.q);
  units.erase(units.begin());  // drop zero
  BivariatePoly e;
  for (int i = 0; i < w; ++i)
    e.set_term(positions[static_cast<std::size_t>(i)], units[rng() % units.size()]);
  return e;
}

}  // namespace bmsa
