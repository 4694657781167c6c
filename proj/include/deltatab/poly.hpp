#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace deltatab {

/// Integer polynomial in q; coeffs[d] is the coefficient of q^d.  Kept
/// normalized: no zero leading coefficient, the zero polynomial is empty.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static IntPoly monomial(int degree, long long coeff = 1) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    std::vector<long long> c(static_cast<std::size_t>(degree) + 1, 0);
    c.back() = coeff;
    return IntPoly(std::move(c));
  }
  static IntPoly constant(long long c) { return IntPoly({c}); }

  /// From sparse degree -> coefficient pairs.
  static IntPoly from_terms(const std::map<int, long long>& terms) {
    IntPoly p;
    for (const auto& [d, c] : terms) p += monomial(d, c);
    return p;
  }

  const std::vector<long long>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  long long operator[](std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : 0; }

  long long at_one() const {
    long long s = 0;
    for (long long c : coeffs_) s += c;
    return s;
  }

  IntPoly& operator+=(const IntPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  IntPoly& operator-=(const IntPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<long long> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(c));
  }

  /// q^k * this
  IntPoly shifted(int k) const {
    if (is_zero()) return {};
    std::vector<long long> c(static_cast<std::size_t>(k), 0);
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return IntPoly(std::move(c));
  }

  /// p(q^d)
  IntPoly substitute_power(int d) const {
    if (d < 0) throw std::invalid_argument("negative power");
    if (d == 0) return constant(at_one());
    if (is_zero()) return {};
    std::vector<long long> c(static_cast<std::size_t>(degree()) * static_cast<std::size_t>(d) + 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * static_cast<std::size_t>(d)] = coeffs_[i];
    return IntPoly(std::move(c));
  }

  /// Quotient and remainder by a monic divisor (or any divisor whose leading
  /// coefficient divides every step exactly).
  std::pair<IntPoly, IntPoly> divmod(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
    std::vector<long long> rem(coeffs_);
    const int dd = divisor.degree();
    const long long lead = divisor.coeffs_.back();
    std::vector<long long> quot(rem.size() > static_cast<std::size_t>(dd) ? rem.size() - static_cast<std::size_t>(dd) : 0, 0);
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
      const long long c = rem[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      if (c % lead != 0) throw std::domain_error("inexact integer polynomial division");
      const long long f = c / lead;
      quot[static_cast<std::size_t>(i - dd)] = f;
      for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= f * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
  }

  /// Sorted "degree:coeff" lines for nonzero coefficients.
  std::string to_terms() const {
    std::string s;
    for (std::size_t d = 0; d < coeffs_.size(); ++d)
      if (coeffs_[d] != 0) s += std::to_string(d) + ":" + std::to_string(coeffs_[d]) + "\n";
    return s;
  }

  /// Parses "degree:coeff" lines; blank lines and lines starting with '#'
  /// are ignored, repeated degrees accumulate.
  static IntPoly parse_terms(std::istream& in) {
    std::map<int, long long> terms;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      const auto colon = line.find(':');
      if (colon == std::string::npos) throw std::invalid_argument("line " + std::to_string(lineno) + ": expected degree:coeff");
      try {
        std::size_t used = 0;
        const std::string ds = line.substr(0, colon), cs = line.substr(colon + 1);
        const int d = std::stoi(ds, &used);
        if (ds.find_first_not_of(" \t", used) != std::string::npos || d < 0) throw std::invalid_argument("degree");
        const long long c = std::stoll(cs, &used);
        if (cs.find_first_not_of(" \t\r", used) != std::string::npos) throw std::invalid_argument("coeff");
        terms[d] += c;
      } catch (const std::exception&) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": malformed degree:coeff pair");
      }
    }
    return from_terms(terms);
  }

  static IntPoly parse_terms(const std::string& text) {
    std::istringstream in(text);
    return parse_terms(in);
  }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<long long> coeffs_;
};

/// Graded multiplicities: an IntPoly whose coefficients are nonnegative.
using GradedPoly = IntPoly;

/// Human-readable sum, highest degree first, e.g. "q^12 + 2q^9 + 1".
inline std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int d = p.degree(); d >= 0; --d) {
    long long c = p[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    const long long a = c < 0 ? -c : c;
    if (d == 0)
      s += std::to_string(a);
    else {
      if (a != 1) s += std::to_string(a);
      s += d == 1 ? "q" : "q^" + std::to_string(d);
    }
  }
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << to_string(p); }

}  // namespace deltatab
