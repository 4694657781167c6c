#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "deltatab/partition.hpp"

namespace deltatab {

/// Raised for fillings that are not even a Young diagram over 1..n.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation requires a rectangular tableau.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Grid = std::vector<std::vector<int>>;

/// A filling of a Young diagram (English notation) together with the
/// orientation string of its alphabet 1..n.  Two tableaux with the same grid
/// and different orientation strings are different values.
class Tableau {
 public:
  Tableau() = default;
  Tableau(Grid rows, OrientationString delta) : rows_(std::move(rows)), delta_(std::move(delta)) {}

  const Grid& rows() const { return rows_; }
  const OrientationString& delta() const { return delta_; }
  int n() const { return static_cast<int>(delta_.size()); }

  std::size_t num_rows() const { return rows_.size(); }
  int at(std::size_t r, std::size_t c) const { return rows_[r][c]; }

  /// Row lengths; throws StructuralError if they are not weakly decreasing.
  Partition shape() const {
    std::vector<int> lens;
    lens.reserve(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r > 0 && rows_[r].size() > rows_[r - 1].size())
        throw StructuralError("row " + std::to_string(r + 1) + " is longer than the row above");
      lens.push_back(static_cast<int>(rows_[r].size()));
    }
    return Partition(std::move(lens));
  }

  /// Number of cells carrying each letter 1..n.
  ContentVector content() const {
    ContentVector gamma(static_cast<std::size_t>(n()), 0);
    for (const auto& row : rows_)
      for (int v : row) {
        if (v < 1 || v > n()) throw StructuralError("entry " + std::to_string(v) + " outside 1.." + std::to_string(n()));
        ++gamma[static_cast<std::size_t>(v - 1)];
      }
    return gamma;
  }

  /// chain[k] = shape of the cells with entries <= k, for k = 0..n.
  std::vector<Partition> chain() const {
    std::vector<Partition> out;
    out.reserve(static_cast<std::size_t>(n()) + 1);
    for (int k = 0; k <= n(); ++k) {
      std::vector<int> parts;
      for (const auto& row : rows_) {
        int len = 0;
        while (len < static_cast<int>(row.size()) && row[static_cast<std::size_t>(len)] <= k) ++len;
        if (len == 0) break;
        parts.push_back(len);
      }
      out.emplace_back(std::move(parts));
    }
    return out;
  }

  bool is_rectangular() const {
    if (rows_.empty()) return true;
    for (const auto& row : rows_)
      if (row.size() != rows_.front().size()) return false;
    return true;
  }

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau&, const Tableau&) = default;

 private:
  Grid rows_;
  OrientationString delta_;
};

/// Builds the tableau whose cells in chain[k]/chain[k-1] carry k.
inline Tableau tableau_from_chain(const std::vector<Partition>& chain, OrientationString delta) {
  if (chain.size() != delta.size() + 1) throw std::invalid_argument("chain length must be n + 1");
  const Partition& outer = chain.back();
  Grid rows(outer.length());
  for (std::size_t r = 0; r < outer.length(); ++r) rows[r].assign(static_cast<std::size_t>(outer[r]), 0);
  for (std::size_t k = 1; k < chain.size(); ++k) {
    if (!chain[k].contains(chain[k - 1])) throw std::invalid_argument("chain is not nested");
    for (std::size_t r = 0; r < chain[k].length(); ++r)
      for (int c = chain[k - 1][r]; c < chain[k][r]; ++c) rows[r][static_cast<std::size_t>(c)] = static_cast<int>(k);
  }
  if (!chain.front().empty()) throw std::invalid_argument("chain must start at the empty partition");
  return Tableau(std::move(rows), std::move(delta));
}

struct Violation {
  std::string what;
  int row = -1;  // 0-based cell coordinates, -1 when not cell specific
  int col = -1;
};

struct ValidationReport {
  enum class Status { ok, structural, not_semistandard };
  Status status = Status::ok;
  std::vector<Violation> violations;

  bool ok() const { return status == Status::ok; }
  std::string summary() const {
    if (ok()) return "ok";
    std::ostringstream os;
    os << (status == Status::structural ? "structural error" : "not delta-semistandard");
    for (const auto& v : violations) {
      os << "; " << v.what;
      if (v.row >= 0) os << " at (" << v.row + 1 << "," << v.col + 1 << ")";
    }
    return os.str();
  }
};

/// Checks that the filling is delta-semistandard for its own delta.  The
/// report lists the first failing row, column and strip condition.
inline ValidationReport validate(const Tableau& t) {
  ValidationReport rep;
  const Grid& g = t.rows();
  for (std::size_t r = 1; r < g.size(); ++r)
    if (g[r].size() > g[r - 1].size()) {
      rep.status = ValidationReport::Status::structural;
      rep.violations.push_back({"ragged rows: row longer than the row above", static_cast<int>(r), 0});
      return rep;
    }
  for (std::size_t r = 0; r < g.size(); ++r)
    for (std::size_t c = 0; c < g[r].size(); ++c)
      if (g[r][c] < 1 || g[r][c] > t.n()) {
        rep.status = ValidationReport::Status::structural;
        rep.violations.push_back({"entry " + std::to_string(g[r][c]) + " outside 1.." + std::to_string(t.n()),
                                  static_cast<int>(r), static_cast<int>(c)});
        return rep;
      }

  auto fail = [&](std::string what, std::size_t r, std::size_t c) {
    rep.status = ValidationReport::Status::not_semistandard;
    rep.violations.push_back({std::move(what), static_cast<int>(r), static_cast<int>(c)});
  };

  for (std::size_t r = 0; r < g.size() && rep.ok(); ++r)
    for (std::size_t c = 1; c < g[r].size(); ++c)
      if (g[r][c] < g[r][c - 1]) {
        fail("row " + std::to_string(r + 1) + " decreases", r, c);
        break;
      }
  for (std::size_t r = 1; r < g.size() && rep.ok(); ++r)
    for (std::size_t c = 0; c < g[r].size(); ++c)
      if (g[r][c] < g[r - 1][c]) {
        fail("column " + std::to_string(c + 1) + " decreases", r, c);
        break;
      }
  if (!rep.ok()) return rep;

  // equal entries must not share a column (h) or a row (v)
  for (std::size_t r = 0; r < g.size(); ++r)
    for (std::size_t c = 0; c < g[r].size(); ++c) {
      const int i = g[r][c];
      const Orient o = t.delta().at(i);
      const bool clash = o == Orient::H ? (r + 1 < g.size() && c < g[r + 1].size() && g[r + 1][c] == i)
                                        : (c + 1 < g[r].size() && g[r][c + 1] == i);
      if (clash) {
        fail("entries " + std::to_string(i) + " do not form a " + (o == Orient::H ? "horizontal" : "vertical") +
                 " strip",
             r, c);
        return rep;
      }
    }
  return rep;
}

/// Conjugate shape, entries transposed, every orientation letter flipped.
inline Tableau transpose(const Tableau& t) {
  const Partition sh = t.shape();
  const Partition conj = sh.conjugate();
  Grid out(conj.length());
  for (std::size_t r = 0; r < conj.length(); ++r) {
    out[r].resize(static_cast<std::size_t>(conj[r]));
    for (std::size_t c = 0; c < out[r].size(); ++c) out[r][c] = t.rows()[c][r];
  }
  return Tableau(std::move(out), t.delta().flipped());
}

namespace detail {

inline void enumerate_chains(int m, const OrientationString& delta, const ContentVector& gamma,
                             const Partition& target, std::vector<Partition>& chain,
                             const std::function<void(const std::vector<Partition>&)>& visit) {
  const std::size_t k = chain.size() - 1;
  if (k == gamma.size()) {
    if (chain.back() == target) visit(chain);
    return;
  }
  const Orient o = delta[k];
  for (auto& next : add_strip(chain.back(), gamma[k], o, m)) {
    if (!target.contains(next)) continue;
    chain.push_back(std::move(next));
    enumerate_chains(m, delta, gamma, target, chain, visit);
    chain.pop_back();
  }
}

}  // namespace detail

/// Calls `visit` on every chain of RT_m(delta, gamma), depth first with
/// lexicographically ordered branches.
inline void for_each_rectangular_chain(int m, const OrientationString& delta, const ContentVector& gamma,
                                       const std::function<void(const std::vector<Partition>&)>& visit) {
  if (delta.size() != gamma.size()) throw std::invalid_argument("delta and gamma lengths differ");
  if (m <= 0) throw std::invalid_argument("m must be positive");
  const int sz = total(gamma);
  if (sz % m != 0) return;
  const Partition target = rectangle(m, sz / m);
  std::vector<Partition> chain{Partition{}};
  detail::enumerate_chains(m, delta, gamma, target, chain, visit);
}

/// RT_m(delta, gamma): delta-semistandard tableaux of shape m x (|gamma|/m)
/// with content gamma; empty when m does not divide |gamma|.
inline std::vector<Tableau> enumerate_tableaux(int m, const OrientationString& delta, const ContentVector& gamma) {
  std::vector<Tableau> out;
  for_each_rectangular_chain(m, delta, gamma,
                             [&](const std::vector<Partition>& ch) { out.push_back(tableau_from_chain(ch, delta)); });
  return out;
}

/// Number of strip chains from the empty partition to `target`, by dynamic
/// programming over the intermediate shapes.
inline long long count_chains(int m, const OrientationString& delta, const ContentVector& gamma,
                              const Partition& target) {
  if (delta.size() != gamma.size()) throw std::invalid_argument("delta and gamma lengths differ");
  std::map<Partition, long long> layer{{Partition{}, 1}};
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    std::map<Partition, long long> next;
    for (const auto& [lam, cnt] : layer)
      for (auto& mu : add_strip(lam, gamma[k], delta[k], m))
        if (target.contains(mu)) next[mu] += cnt;
    layer = std::move(next);
  }
  auto it = layer.find(target);
  return it == layer.end() ? 0 : it->second;
}

/// |RT_m(delta, gamma)| without materialising the tableaux.
inline long long count_rectangular(int m, const OrientationString& delta, const ContentVector& gamma) {
  const int sz = total(gamma);
  if (m <= 0 || sz % m != 0) return 0;
  return count_chains(m, delta, gamma, rectangle(m, sz / m));
}

}  // namespace deltatab
