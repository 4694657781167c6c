#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "deltatab/partition.hpp"
#include "deltatab/tableau.hpp"

namespace deltatab {

/// Grid value of a dotted cell while sliding.  Never appears in a Tableau.
inline constexpr int kDot = 0;

namespace detail {

struct Cell {
  int row;
  int col;
};

inline bool has_cell(const Grid& g, int r, int c) {
  return r >= 0 && c >= 0 && r < static_cast<int>(g.size()) && c < static_cast<int>(g[static_cast<std::size_t>(r)].size());
}

inline int& cell(Grid& g, int r, int c) { return g[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
inline int cell(const Grid& g, int r, int c) { return g[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }

/// Slides one dot outward past undotted entries <= limit.  Ties a == b go
/// down when the tied letter is h and right when it is v.
inline void slide_dot(Grid& g, Cell dot, int limit, const OrientationString& delta, std::vector<Grid>* frames) {
  for (;;) {
    const int r = dot.row, c = dot.col;
    const bool has_below = has_cell(g, r + 1, c) && cell(g, r + 1, c) != kDot && cell(g, r + 1, c) <= limit;
    const bool has_right = has_cell(g, r, c + 1) && cell(g, r, c + 1) != kDot && cell(g, r, c + 1) <= limit;
    if (!has_below && !has_right) return;
    bool go_down;
    if (has_below && has_right) {
      const int a = cell(g, r + 1, c), b = cell(g, r, c + 1);
      go_down = a < b || (a == b && delta.at(a) == Orient::H);
    } else {
      go_down = has_below;
    }
    const Cell next = go_down ? Cell{r + 1, c} : Cell{r, c + 1};
    cell(g, r, c) = cell(g, next.row, next.col);
    cell(g, next.row, next.col) = kDot;
    dot = next;
    if (frames) frames->push_back(g);
  }
}

}  // namespace detail

/// Promotion restricted to the letters 1..k: the 1s are dotted and slid past
/// entries <= k only, those entries drop by one and the dots become k.
/// With k = n this is the full delta-promotion.  `frames`, when given,
/// receives the dotted grid before sliding and after every single slide.
inline Tableau partial_promote(const Tableau& t, int k, std::vector<Grid>* frames = nullptr) {
  const int n = t.n();
  if (k < 1 || k > n) throw std::invalid_argument("promotion prefix must lie in 1..n");
  Grid g = t.rows();
  std::vector<detail::Cell> dots;
  for (int r = 0; r < static_cast<int>(g.size()); ++r)
    for (int c = 0; c < static_cast<int>(g[static_cast<std::size_t>(r)].size()); ++c)
      if (detail::cell(g, r, c) == 1) {
        detail::cell(g, r, c) = kDot;
        dots.push_back({r, c});
      }
  if (frames) frames->push_back(g);

  const OrientationString& delta = t.delta();
  if (delta.at(1) == Orient::H)
    std::sort(dots.begin(), dots.end(), [](auto x, auto y) { return x.col > y.col; });
  else
    std::sort(dots.begin(), dots.end(), [](auto x, auto y) { return x.row > y.row; });
  for (auto d : dots) {
    // the dot may have been displaced only by its own slides; others stay put
    detail::slide_dot(g, d, k, delta, frames);
  }

  for (auto& row : g)
    for (int& v : row) {
      if (v == kDot)
        v = k;
      else if (v <= k)
        v -= 1;
    }
  std::vector<Orient> letters(delta.letters());
  std::rotate(letters.begin(), letters.begin() + 1, letters.begin() + k);
  return Tableau(std::move(g), OrientationString(std::move(letters)));
}

/// delta-promotion by jeu-de-taquin: output has orientation R(delta) and
/// content R(gamma).
inline Tableau jdt_promote(const Tableau& t, std::vector<Grid>* frames = nullptr) {
  if (auto rep = validate(t); !rep.ok()) throw std::invalid_argument("jdt_promote: " + rep.summary());
  if (t.n() == 0) return t;
  return partial_promote(t, t.n(), frames);
}

namespace detail {

/// Cells of outer/inner as a grid: 1 for cells of mid/inner, 2 for outer/mid,
/// kDot (0) for cells of inner; rows beyond the shape are omitted.
inline Grid skew_filling(const Partition& inner, const Partition& mid, const Partition& outer) {
  Grid g(outer.length());
  for (std::size_t r = 0; r < outer.length(); ++r) {
    g[r].assign(static_cast<std::size_t>(outer[r]), kDot);
    for (int c = inner[r]; c < outer[r]; ++c) g[r][static_cast<std::size_t>(c)] = c < mid[r] ? 1 : 2;
  }
  return g;
}

/// Reads the middle shape back: inner plus every cell labelled 1.
inline Partition middle_from_filling(const Partition& inner, const Grid& g) {
  std::vector<int> parts(g.size(), 0);
  for (std::size_t r = 0; r < g.size(); ++r) {
    int ones = 0;
    for (int v : g[r]) ones += v == 1;
    parts[r] = inner[r] + ones;
  }
  return Partition(std::move(parts));
}

inline Partition classical_bk_move(const Partition& inner, const Partition& mid, const Partition& outer) {
  Grid g = skew_filling(inner, mid, outer);
  Grid out = g;
  const int rows = static_cast<int>(g.size());
  for (int r = 0; r < rows; ++r) {
    std::vector<int> free_cols;
    int free_ones = 0, free_twos = 0;
    for (int c = inner[static_cast<std::size_t>(r)]; c < static_cast<int>(g[static_cast<std::size_t>(r)].size()); ++c) {
      const int v = cell(g, r, c);
      if (v == 1 && !(has_cell(g, r + 1, c) && cell(g, r + 1, c) == 2)) {
        free_cols.push_back(c);
        ++free_ones;
      } else if (v == 2 && !(has_cell(g, r - 1, c) && cell(g, r - 1, c) == 1)) {
        free_cols.push_back(c);
        ++free_twos;
      }
    }
    assert(free_cols.empty() || free_cols.back() - free_cols.front() + 1 == static_cast<int>(free_cols.size()));
    for (std::size_t j = 0; j < free_cols.size(); ++j)
      cell(out, r, free_cols[j]) = static_cast<int>(j) < free_twos ? 1 : 2;
    (void)free_ones;
  }
  return middle_from_filling(inner, out);
}

inline std::vector<std::vector<Cell>> ribbon_components(const Grid& g) {
  const int rows = static_cast<int>(g.size());
  std::vector<std::vector<int>> seen(g.size());
  for (std::size_t r = 0; r < g.size(); ++r) seen[r].assign(g[r].size(), 0);
  std::vector<std::vector<Cell>> comps;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < static_cast<int>(g[static_cast<std::size_t>(r)].size()); ++c) {
      if (cell(g, r, c) == kDot || seen[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) continue;
      std::vector<Cell> comp;
      std::vector<Cell> stack{{r, c}};
      seen[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 1;
      while (!stack.empty()) {
        Cell x = stack.back();
        stack.pop_back();
        comp.push_back(x);
        const Cell nbrs[4] = {{x.row - 1, x.col}, {x.row + 1, x.col}, {x.row, x.col - 1}, {x.row, x.col + 1}};
        for (auto y : nbrs) {
          if (!has_cell(g, y.row, y.col) || cell(g, y.row, y.col) == kDot) continue;
          auto& s = seen[static_cast<std::size_t>(y.row)][static_cast<std::size_t>(y.col)];
          if (!s) {
            s = 1;
            stack.push_back(y);
          }
        }
      }
      comps.push_back(std::move(comp));
    }
  return comps;
}

/// Mixed move on each connected ribbon component.  For (h, v) the 1s move
/// right, the 2s move up and the entry of the top-right cell goes to the
/// bottom-left cell; (v, h) is the mirror.  Labels are then interchanged.
inline Partition mixed_bk_move(const Partition& inner, const Partition& mid, const Partition& outer, Orient lo) {
  const Grid g = skew_filling(inner, mid, outer);
  Grid out = g;
  for (const auto& comp : ribbon_components(g)) {
    Cell top_right = comp.front(), bottom_left = comp.front();
    for (auto x : comp) {
      if (x.row < top_right.row || (x.row == top_right.row && x.col > top_right.col)) top_right = x;
      if (x.row > bottom_left.row || (x.row == bottom_left.row && x.col < bottom_left.col)) bottom_left = x;
    }
    std::map<std::pair<int, int>, int> moved;
    for (auto x : comp) {
      const int v = cell(g, x.row, x.col);
      Cell dest;
      if (lo == Orient::H) {
        if (x.row == top_right.row && x.col == top_right.col)
          dest = bottom_left;
        else
          dest = v == 1 ? Cell{x.row, x.col + 1} : Cell{x.row - 1, x.col};
      } else {
        if (x.row == bottom_left.row && x.col == bottom_left.col)
          dest = top_right;
        else
          dest = v == 1 ? Cell{x.row + 1, x.col} : Cell{x.row, x.col - 1};
      }
      if (!moved.emplace(std::make_pair(dest.row, dest.col), 3 - v).second)
        throw std::logic_error("mixed BK move collided on a ribbon component");
    }
    for (auto x : comp) {
      auto it = moved.find({x.row, x.col});
      if (it == moved.end()) throw std::logic_error("mixed BK move left a ribbon cell empty");
      cell(out, x.row, x.col) = it->second;
    }
  }
  return middle_from_filling(inner, out);
}

}  // namespace detail

/// The delta-BK involution on one step of a chain inner ⊂ mid ⊂ outer, where
/// mid/inner is a `lo` strip and outer/mid a `hi` strip.  Returns the new
/// middle shape, so outer/result is a `lo` strip and result/inner a `hi` strip.
inline Partition bk_move(const Partition& inner, const Partition& mid, const Partition& outer, Orient lo, Orient hi) {
  if (!mid.contains(inner) || !outer.contains(mid)) throw std::invalid_argument("bk_move: chain is not nested");
  if (lo == Orient::H && hi == Orient::H) return detail::classical_bk_move(inner, mid, outer);
  if (lo == Orient::V && hi == Orient::V)
    return detail::classical_bk_move(inner.conjugate(), mid.conjugate(), outer.conjugate()).conjugate();
  return detail::mixed_bk_move(inner, mid, outer, lo);
}

/// The i-th delta-BK involution t_i (1 <= i <= n-1).  The result has
/// orientation tau_i(delta) and content tau_i(gamma).
inline Tableau bk(const Tableau& t, int i) {
  if (i < 1 || i >= t.n()) throw std::out_of_range("bk index must satisfy 1 <= i <= n-1");
  if (auto rep = validate(t); !rep.ok()) throw std::invalid_argument("bk: " + rep.summary());
  auto chain = t.chain();
  const auto idx = static_cast<std::size_t>(i);
  chain[idx] = bk_move(chain[idx - 1], chain[idx], chain[idx + 1], t.delta().at(i), t.delta().at(i + 1));
  return tableau_from_chain(chain, t.delta().swapped(i));
}

/// Mixed t_i computed by sliding instead of the ribbon move: the i entries
/// become dots and slide past the i+1 entries, rightmost dot first for
/// (h, v) and lowest dot first for (v, h); then the dots become i and the
/// two labels are interchanged.
inline Tableau bk_by_sliding(const Tableau& t, int i) {
  if (i < 1 || i >= t.n()) throw std::out_of_range("bk index must satisfy 1 <= i <= n-1");
  const OrientationString& delta = t.delta();
  if (delta.at(i) == delta.at(i + 1)) throw std::invalid_argument("sliding BK needs delta_i != delta_{i+1}");
  if (auto rep = validate(t); !rep.ok()) throw std::invalid_argument("bk_by_sliding: " + rep.summary());
  Grid g = t.rows();
  std::vector<detail::Cell> dots;
  for (int r = 0; r < static_cast<int>(g.size()); ++r)
    for (int c = 0; c < static_cast<int>(g[static_cast<std::size_t>(r)].size()); ++c)
      if (detail::cell(g, r, c) == i) {
        detail::cell(g, r, c) = kDot;
        dots.push_back({r, c});
      }
  if (delta.at(i) == Orient::H)
    std::sort(dots.begin(), dots.end(), [](auto x, auto y) { return x.col > y.col; });
  else
    std::sort(dots.begin(), dots.end(), [](auto x, auto y) { return x.row > y.row; });
  for (auto d : dots) detail::slide_dot(g, d, i + 1, delta, nullptr);
  for (auto& row : g)
    for (int& v : row) {
      if (v == kDot)
        v = i + 1;
      else if (v == i + 1)
        v = i;
    }
  return Tableau(std::move(g), delta.swapped(i));
}

/// t_{n-1} ∘ ... ∘ t_1.  `partials`, when given, receives every
/// intermediate t_k ∘ ... ∘ t_1(T).
inline Tableau promote_via_bk(const Tableau& t, std::vector<Tableau>* partials = nullptr) {
  Tableau cur = t;
  for (int i = 1; i < t.n(); ++i) {
    cur = bk(cur, i);
    if (partials) partials->push_back(cur);
  }
  return cur;
}

/// True iff n successive promotions return T, orientation included.
inline bool verify_periodicity(const Tableau& t) {
  if (!t.is_rectangular()) throw ShapeError("periodicity holds only for rectangular tableaux");
  if (auto rep = validate(t); !rep.ok()) throw std::invalid_argument("verify_periodicity: " + rep.summary());
  Tableau cur = t;
  for (int k = 0; k < t.n(); ++k) cur = jdt_promote(cur);
  return cur == t;
}

/// Smallest r >= 1 with R^r(delta) = delta and R^r(gamma) = gamma.
inline int rotation_period(const OrientationString& delta, const ContentVector& gamma) {
  const std::size_t n = delta.size();
  for (std::size_t r = 1; r <= n; ++r) {
    if (n % r != 0) continue;
    if (delta.rotated(r) == delta && rotated(gamma, r) == gamma) return static_cast<int>(r);
  }
  return static_cast<int>(std::max<std::size_t>(n, 1));
}

struct OrbitDecomposition {
  int r = 1;  // rotation period of (delta, gamma)
  int l = 1;  // order of the cyclic group, n / r
  std::vector<Tableau> tableaux;
  std::vector<std::vector<int>> orbits;  // indices into tableaux
  std::vector<long long> fixed_points;   // |X^{c^d}| for d = 0..l-1

  std::vector<int> orbit_sizes() const {
    std::vector<int> s;
    for (const auto& o : orbits) s.push_back(static_cast<int>(o.size()));
    std::sort(s.rbegin(), s.rend());
    return s;
  }
};

/// Generator c = ∂_{R^{r-1}δ} ∘ ... ∘ ∂_δ, i.e. r successive promotions.
inline Tableau cyclic_generator(const Tableau& t, int r) {
  Tableau cur = t;
  for (int k = 0; k < r; ++k) cur = jdt_promote(cur);
  return cur;
}

/// Orbits of c on RT_m(delta, gamma) and the fixed-point counts of its powers.
inline OrbitDecomposition promotion_orbits(int m, const OrientationString& delta, const ContentVector& gamma) {
  OrbitDecomposition out;
  const int n = static_cast<int>(delta.size());
  out.r = rotation_period(delta, gamma);
  out.l = n == 0 ? 1 : n / out.r;
  out.tableaux = enumerate_tableaux(m, delta, gamma);

  std::map<Grid, int> index;
  for (int i = 0; i < static_cast<int>(out.tableaux.size()); ++i) index.emplace(out.tableaux[static_cast<std::size_t>(i)].rows(), i);
  std::vector<int> image(out.tableaux.size());
  for (std::size_t i = 0; i < out.tableaux.size(); ++i) {
    Tableau c = cyclic_generator(out.tableaux[i], out.r);
    auto it = index.find(c.rows());
    if (it == index.end() || c.delta() != delta) throw std::logic_error("promotion left RT_m(delta, gamma)");
    image[i] = it->second;
  }
  std::vector<char> seen(out.tableaux.size(), 0);
  for (std::size_t i = 0; i < out.tableaux.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> orbit;
    for (int j = static_cast<int>(i); !seen[static_cast<std::size_t>(j)]; j = image[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = 1;
      orbit.push_back(j);
    }
    out.orbits.push_back(std::move(orbit));
  }
  out.fixed_points.assign(static_cast<std::size_t>(out.l), 0);
  for (int d = 0; d < out.l; ++d)
    for (const auto& o : out.orbits)
      if (d % static_cast<int>(o.size()) == 0) out.fixed_points[static_cast<std::size_t>(d)] += static_cast<long long>(o.size());
  return out;
}

}  // namespace deltatab
