#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "deltatab/poly.hpp"
#include "deltatab/promotion.hpp"
#include "deltatab/repthy.hpp"

namespace deltatab {

/// Phi_l, by dividing q^l - 1 by Phi_d for every proper divisor d of l.
inline IntPoly cyclotomic_poly(int l) {
  if (l < 1) throw std::invalid_argument("cyclotomic index must be positive");
  static std::map<int, IntPoly> cache;
  auto it = cache.find(l);
  if (it != cache.end()) return it->second;
  IntPoly p = IntPoly::monomial(l) - IntPoly::constant(1);
  for (int d = 1; d < l; ++d)
    if (l % d == 0) {
      auto [q, r] = p.divmod(cyclotomic_poly(d));
      if (!r.is_zero()) throw std::logic_error("cyclotomic division left a remainder");
      p = q;
    }
  cache.emplace(l, p);
  return p;
}

/// f(zeta^d) for zeta a primitive l-th root of unity: the remainder of
/// f(q^d) mod Phi_l.  A nonconstant remainder means the value is not an
/// integer; it is returned in `remainder`.
struct RootValue {
  std::optional<long long> value;
  IntPoly remainder;

  bool is_integer() const { return value.has_value(); }
};

inline RootValue eval_at_root(const IntPoly& f, int l, int d) {
  if (l < 1 || d < 0) throw std::invalid_argument("eval_at_root needs l >= 1 and d >= 0");
  // zeta^d has order l / gcd(l, d); reduce the exponent first to keep degrees small
  const int dd = d % l;
  const IntPoly g = f.substitute_power(dd);
  RootValue out;
  out.remainder = g.divmod(cyclotomic_poly(l)).second;
  if (out.remainder.degree() <= 0) out.value = out.remainder.is_zero() ? 0 : out.remainder[0];
  return out;
}

/// q^{<|lambda|, rho>} K_{mu, lambda}(q).
inline IntPoly csp_polynomial(int m, const OrientationString& delta, const ContentVector& gamma,
                              const FusionOptions& opts = {}) {
  if (m < 1 || total(gamma) % m != 0) throw std::invalid_argument("m must divide |gamma|");
  if (delta.empty()) return IntPoly::constant(1);
  const long long shift = rho_pairing(sym_alt_weights(delta, gamma, m), m);
  const IntPoly k = fusion_kostka(delta, gamma, m, opts);
  if (shift < 0) throw std::logic_error("negative rho pairing");
  return k.shifted(static_cast<int>(shift));
}

struct CspRow {
  int d = 0;
  RootValue poly_value;
  long long fixed_points = 0;
  bool pass = false;
};

struct CspReport {
  int r = 1;
  int l = 1;
  IntPoly f;
  std::vector<CspRow> rows;

  bool pass() const {
    for (const auto& row : rows)
      if (!row.pass) return false;
    return !rows.empty();
  }
  std::vector<long long> fixed_points() const {
    std::vector<long long> out;
    for (const auto& row : rows) out.push_back(row.fixed_points);
    return out;
  }

  /// Table of d, f(zeta^d), |X^{c^d}|, status.
  std::string table() const {
    std::ostringstream os;
    os << "r=" << r << " l=" << l << " f=" << to_string(f) << "\n";
    os << "d\tf(zeta^d)\t|X^{c^d}|\tstatus\n";
    for (const auto& row : rows) {
      os << row.d << '\t';
      if (row.poly_value.is_integer())
        os << *row.poly_value.value;
      else
        os << "non-integer (" << to_string(row.poly_value.remainder) << ")";
      os << '\t' << row.fixed_points << '\t' << (row.pass ? "pass" : "FAIL") << '\n';
    }
    return os.str();
  }
};

/// Compares f(zeta^d) with the fixed points of c^d for d = 0..l-1.  f is
/// computed from the fusion product unless supplied.
inline CspReport csp_verify(int m, const OrientationString& delta, const ContentVector& gamma,
                            const std::optional<IntPoly>& f = std::nullopt, const FusionOptions& opts = {}) {
  if (m < 1 || total(gamma) % m != 0) throw std::invalid_argument("m must divide |gamma|");
  const OrbitDecomposition orbits = promotion_orbits(m, delta, gamma);
  CspReport rep;
  rep.r = orbits.r;
  rep.l = orbits.l;
  rep.f = f ? *f : csp_polynomial(m, delta, gamma, opts);
  for (int d = 0; d < rep.l; ++d) {
    CspRow row;
    row.d = d;
    row.poly_value = eval_at_root(rep.f, rep.l, d);
    row.fixed_points = orbits.fixed_points[static_cast<std::size_t>(d)];
    row.pass = row.poly_value.is_integer() && *row.poly_value.value == row.fixed_points;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace deltatab
