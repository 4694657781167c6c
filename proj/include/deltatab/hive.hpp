#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "deltatab/partition.hpp"
#include "deltatab/promotion.hpp"
#include "deltatab/tableau.hpp"

namespace deltatab {

/// A gl_m weight; entries may be negative.
using GlWeight = std::vector<int>;

inline bool is_dominant(const GlWeight& w) { return std::is_sorted(w.rbegin(), w.rend()); }

/// lambda* = (-lambda_m, ..., -lambda_1).
inline GlWeight dual(const GlWeight& w) {
  GlWeight out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

/// omega_k = (1^k, 0^{m-k}).
inline GlWeight omega(int k, int m) {
  GlWeight w(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < k && i < m; ++i) w[static_cast<std::size_t>(i)] = 1;
  return w;
}

/// sigma_k = (k, 0^{m-1}).
inline GlWeight sigma(int k, int m) {
  GlWeight w(static_cast<std::size_t>(m), 0);
  if (m > 0) w[0] = k;
  return w;
}

inline GlWeight to_weight(const Partition& p, int m) { return p.padded(static_cast<std::size_t>(m)); }

/// The partition with the same parts; throws on negative entries.
inline Partition to_partition(const GlWeight& w) { return Partition(std::vector<int>(w.begin(), w.end())); }

class HiveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Lattice points of Delta_m^N in lexicographic order, with the unit rhombi
/// of every two-dimensional face and every unit octahedron.
class Simplex {
 public:
  /// f(short1) + f(short2) >= f(long1) + f(long2)
  struct Rhombus {
    int short1, short2, long1, long2;
  };
  /// f(c) + f(d) = max(f(a) + f(b), f(e) + f(f)), from j + e_p + e_q for
  /// p < q < r < s: a = pq, b = rs, c = pr, d = qs, e = ps, f = qr.
  struct Octahedron {
    int a, b, c, d, e, f;
  };

  Simplex(int corners, int m) : corners_(corners), m_(m) {
    if (corners < 1 || m < 0) throw std::invalid_argument("simplex needs corners >= 1 and m >= 0");
    std::vector<int> cur(static_cast<std::size_t>(corners), 0);
    build_points(0, m, cur);
    for (int i = 0; i < static_cast<int>(points_.size()); ++i) index_.emplace(key(points_[static_cast<std::size_t>(i)]), i);
    build_rhombi();
    build_octahedra();
  }

  int corners() const { return corners_; }
  int m() const { return m_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<int>& point(int idx) const { return points_[static_cast<std::size_t>(idx)]; }
  const std::vector<std::vector<int>>& points() const { return points_; }
  const std::vector<Rhombus>& rhombi() const { return rhombi_; }
  const std::vector<Octahedron>& octahedra() const { return octahedra_; }

  /// Index of a lattice point, or -1 if coords are not in Delta_m^N.
  int index(const std::vector<int>& coords) const {
    if (static_cast<int>(coords.size()) != corners_) return -1;
    int s = 0;
    for (int c : coords) {
      if (c < 0) return -1;
      s += c;
    }
    if (s != m_) return -1;
    auto it = index_.find(key(coords));
    return it == index_.end() ? -1 : it->second;
  }

  /// The point (m-t) e_i + t e_j (corners 1-based).
  int edge_point(int i, int j, int t) const {
    std::vector<int> p(static_cast<std::size_t>(corners_), 0);
    p[static_cast<std::size_t>(i - 1)] += m_ - t;
    p[static_cast<std::size_t>(j - 1)] += t;
    return index(p);
  }

  /// Cached instance shared by all hives of this size.
  static const Simplex& get(int corners, int m) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<Simplex>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{corners, m}];
    if (!slot) slot = std::make_unique<Simplex>(corners, m);
    return *slot;
  }

 private:
  std::uint64_t key(const std::vector<int>& coords) const {
    std::uint64_t k = 0;
    for (int c : coords) k = k * static_cast<std::uint64_t>(m_ + 1) + static_cast<std::uint64_t>(c);
    return k;
  }

  void build_points(std::size_t pos, int remaining, std::vector<int>& cur) {
    if (pos + 1 == cur.size()) {
      cur[pos] = remaining;
      points_.push_back(cur);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[pos] = v;
      build_points(pos + 1, remaining - v, cur);
    }
  }

  // For points y of the (m-1)-simplex and corners a, b, c: the up triangle
  // y+e_a, y+e_b, y+e_c and, for each apex x with y_x >= 1, the rhombus
  // through the opposite down triangle.  Only y supported on {a, b, c}.
  void build_rhombi() {
    if (m_ < 1 || corners_ < 3) return;
    std::vector<int> y(static_cast<std::size_t>(corners_), 0);
    auto shifted = [&](std::initializer_list<std::pair<int, int>> d) {
      std::vector<int> p(y);
      for (auto [c, s] : d) p[static_cast<std::size_t>(c)] += s;
      return index(p);
    };
    for (int a = 0; a < corners_; ++a)
      for (int b = a + 1; b < corners_; ++b)
        for (int c = b + 1; c < corners_; ++c)
          for (int ya = 0; ya <= m_ - 1; ++ya)
            for (int yb = 0; ya + yb <= m_ - 1; ++yb) {
              std::fill(y.begin(), y.end(), 0);
              y[static_cast<std::size_t>(a)] = ya;
              y[static_cast<std::size_t>(b)] = yb;
              y[static_cast<std::size_t>(c)] = m_ - 1 - ya - yb;
              const int tri[3] = {a, b, c};
              for (int xi = 0; xi < 3; ++xi) {
                const int x = tri[xi], u = tri[(xi + 1) % 3], v = tri[(xi + 2) % 3];
                if (y[static_cast<std::size_t>(x)] < 1) continue;
                rhombi_.push_back({shifted({{u, 1}}), shifted({{v, 1}}), shifted({{x, 1}}), shifted({{u, 1}, {v, 1}, {x, -1}})});
              }
            }
  }

  void build_octahedra() {
    if (m_ < 2 || corners_ < 4) return;
    const Simplex base(corners_, m_ - 2, /*bare=*/true);
    for (const auto& j : base.points_)
      for (int p = 0; p < corners_; ++p)
        for (int q = p + 1; q < corners_; ++q)
          for (int r = q + 1; r < corners_; ++r)
            for (int s = r + 1; s < corners_; ++s) {
              auto at = [&](int x, int y) {
                std::vector<int> pt(j);
                ++pt[static_cast<std::size_t>(x)];
                ++pt[static_cast<std::size_t>(y)];
                return index(pt);
              };
              octahedra_.push_back({at(p, q), at(r, s), at(p, r), at(q, s), at(p, s), at(q, r)});
            }
  }

  Simplex(int corners, int m, bool /*bare*/) : corners_(corners), m_(m) {
    std::vector<int> cur(static_cast<std::size_t>(corners), 0);
    build_points(0, m, cur);
  }

  int corners_;
  int m_;
  std::vector<std::vector<int>> points_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<Rhombus> rhombi_;
  std::vector<Octahedron> octahedra_;
};

/// Integer labels on (a subset of) Delta_m^N.  Unlabelled points are allowed
/// only in partial hives passed to excavation.
class Hive {
 public:
  Hive(int corners, int m)
      : lattice_(&Simplex::get(corners, m)),
        values_(lattice_->size(), 0),
        known_(lattice_->size(), 0) {}

  static Hive zero(int corners, int m) {
    Hive h(corners, m);
    std::fill(h.known_.begin(), h.known_.end(), 1);
    return h;
  }

  int corners() const { return lattice_->corners(); }
  int m() const { return lattice_->m(); }
  const Simplex& lattice() const { return *lattice_; }

  bool known(int idx) const { return known_[static_cast<std::size_t>(idx)] != 0; }
  long long value(int idx) const { return values_[static_cast<std::size_t>(idx)]; }
  void set(int idx, long long v) {
    values_[static_cast<std::size_t>(idx)] = v;
    known_[static_cast<std::size_t>(idx)] = 1;
  }
  void unset(int idx) { known_[static_cast<std::size_t>(idx)] = 0; }

  int require_index(const std::vector<int>& coords) const {
    const int idx = lattice_->index(coords);
    if (idx < 0) throw std::out_of_range("point is not in the hive lattice");
    return idx;
  }
  long long at(const std::vector<int>& coords) const {
    const int idx = require_index(coords);
    if (!known(idx)) throw HiveError("hive value missing at a lattice point");
    return value(idx);
  }
  void set(const std::vector<int>& coords, long long v) { set(require_index(coords), v); }

  bool complete() const { return std::all_of(known_.begin(), known_.end(), [](char c) { return c != 0; }); }
  const std::vector<char>& known_mask() const { return known_; }

  /// Shifts all labels so the value at m e_1 is 0.
  void normalize() {
    const int origin = lattice_->edge_point(1, 1, 0);
    if (!known(origin)) throw HiveError("cannot normalize: value at m e_1 unknown");
    const long long c = value(origin);
    for (auto& v : values_) v -= c;
  }

  friend bool operator==(const Hive& a, const Hive& b) {
    return a.lattice_ == b.lattice_ && a.values_ == b.values_ && a.known_ == b.known_;
  }

 private:
  const Simplex* lattice_;
  std::vector<long long> values_;
  std::vector<char> known_;
};

inline std::string format_point(const std::vector<int>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

struct HiveReport {
  enum class Status { ok, structural, rhombus, octahedron };
  Status status = Status::ok;
  std::string message;
  std::vector<std::vector<int>> points;  // lattice points of the first violation

  bool ok() const { return status == Status::ok; }
};

/// Rhombus inequalities on every two-dimensional face and, for N >= 4, the
/// octahedron recurrence at every unit octahedron.
inline HiveReport check_hive(const Hive& h) {
  HiveReport rep;
  const Simplex& s = h.lattice();
  for (int i = 0; i < static_cast<int>(s.size()); ++i)
    if (!h.known(i)) {
      rep.status = HiveReport::Status::structural;
      rep.message = "missing value at " + format_point(s.point(i));
      rep.points = {s.point(i)};
      return rep;
    }
  for (const auto& r : s.rhombi()) {
    if (h.value(r.short1) + h.value(r.short2) < h.value(r.long1) + h.value(r.long2)) {
      rep.status = HiveReport::Status::rhombus;
      rep.points = {s.point(r.short1), s.point(r.short2), s.point(r.long1), s.point(r.long2)};
      rep.message = "rhombus violated: short diagonal " + format_point(rep.points[0]) + " " + format_point(rep.points[1]) +
                    " below long diagonal " + format_point(rep.points[2]) + " " + format_point(rep.points[3]);
      return rep;
    }
  }
  for (const auto& o : s.octahedra()) {
    const long long lhs = h.value(o.c) + h.value(o.d);
    const long long rhs = std::max(h.value(o.a) + h.value(o.b), h.value(o.e) + h.value(o.f));
    if (lhs != rhs) {
      rep.status = HiveReport::Status::octahedron;
      rep.points = {s.point(o.a), s.point(o.b), s.point(o.c), s.point(o.d), s.point(o.e), s.point(o.f)};
      rep.message = "octahedron recurrence violated at " + format_point(rep.points[2]) + " + " + format_point(rep.points[3]) +
                    " = " + std::to_string(lhs) + ", expected " + std::to_string(rhs);
      return rep;
    }
  }
  return rep;
}

/// Successive differences of the labels along the edge from m e_i to m e_j.
inline GlWeight edge_weight(const Hive& h, int i, int j) {
  if (i < 1 || j < 1 || i > h.corners() || j > h.corners()) throw std::out_of_range("edge corner out of range");
  GlWeight w(static_cast<std::size_t>(h.m()), 0);
  if (i == j) return w;
  const Simplex& s = h.lattice();
  for (int t = 1; t <= h.m(); ++t) {
    const int p = s.edge_point(i, j, t), q = s.edge_point(i, j, t - 1);
    if (!h.known(p) || !h.known(q)) throw HiveError("edge values missing");
    w[static_cast<std::size_t>(t - 1)] = static_cast<int>(h.value(p) - h.value(q));
  }
  return w;
}

/// (lambda^1, ..., lambda^{N-1}; mu) with lambda^i on edge i -> i+1 and mu on 1 -> N.
struct HiveType {
  std::vector<GlWeight> lambdas;
  GlWeight mu;
  friend bool operator==(const HiveType&, const HiveType&) = default;
};

inline HiveType hive_type(const Hive& h) {
  HiveType t;
  for (int i = 1; i < h.corners(); ++i) t.lambdas.push_back(edge_weight(h, i, i + 1));
  t.mu = edge_weight(h, 1, h.corners());
  return t;
}

/// One excavation step: value[target] = max(value[a]+value[b], value[e]+value[f]) - value[partner].
struct ExcavationStep {
  int target, partner, a, b, e, f;
};

namespace detail {

inline std::vector<ExcavationStep> plan_excavation(const Simplex& s, std::vector<char> known) {
  std::vector<ExcavationStep> plan;
  const auto& octs = s.octahedra();
  std::vector<std::vector<int>> incident(s.size());
  for (int k = 0; k < static_cast<int>(octs.size()); ++k) {
    const auto& o = octs[static_cast<std::size_t>(k)];
    for (int p : {o.a, o.b, o.c, o.d, o.e, o.f}) incident[static_cast<std::size_t>(p)].push_back(k);
  }
  auto unknown_count = [&](const Simplex::Octahedron& o) {
    int c = 0;
    for (int p : {o.a, o.b, o.c, o.d, o.e, o.f}) c += !known[static_cast<std::size_t>(p)];
    return c;
  };
  std::vector<int> work(octs.size());
  for (int k = 0; k < static_cast<int>(octs.size()); ++k) work[static_cast<std::size_t>(k)] = k;
  while (!work.empty()) {
    std::vector<int> next;
    for (int k : work) {
      const auto& o = octs[static_cast<std::size_t>(k)];
      if (unknown_count(o) != 1) continue;
      int target, partner;
      if (!known[static_cast<std::size_t>(o.c)]) {
        target = o.c;
        partner = o.d;
      } else if (!known[static_cast<std::size_t>(o.d)]) {
        target = o.d;
        partner = o.c;
      } else {
        continue;  // an outer vertex is not determined by the max relation
      }
      plan.push_back({target, partner, o.a, o.b, o.e, o.f});
      known[static_cast<std::size_t>(target)] = 1;
      for (int k2 : incident[static_cast<std::size_t>(target)]) next.push_back(k2);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    work = std::move(next);
  }
  return plan;
}

inline const std::vector<ExcavationStep>& cached_plan(const Simplex& s, const std::vector<char>& known) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, std::vector<char>>, std::vector<ExcavationStep>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(s.corners(), s.m(), known);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(std::move(key), plan_excavation(s, known)).first;
  return it->second;
}

}  // namespace detail

/// Fills every unknown label by the octahedron recurrence, solving only for a
/// vertex on the "crossing" pair of an octahedron whose other five labels are
/// known.  Throws HiveError if some label stays undetermined or if the
/// supplied labels contradict the recurrence.
inline Hive octahedron_excavate(const Hive& partial) {
  Hive h = partial;
  const auto& plan = detail::cached_plan(h.lattice(), h.known_mask());
  for (const auto& st : plan)
    h.set(st.target, std::max(h.value(st.a) + h.value(st.b), h.value(st.e) + h.value(st.f)) - h.value(st.partner));
  if (!h.complete()) {
    for (int i = 0; i < static_cast<int>(h.lattice().size()); ++i)
      if (!h.known(i)) throw HiveError("excavation cannot determine the value at " + format_point(h.lattice().point(i)));
  }
  for (const auto& o : h.lattice().octahedra())
    if (h.value(o.c) + h.value(o.d) != std::max(h.value(o.a) + h.value(o.b), h.value(o.e) + h.value(o.f)))
      throw HiveError("supplied values are inconsistent with the octahedron recurrence at " +
                      format_point(h.lattice().point(o.c)));
  return h;
}

/// Face (x, y, z) of an N-hive: the point with coordinate p at corner x,
/// q at corner y and s at corner z (corners 1-based).
inline std::vector<int> face_point(int corners, int x, int y, int z, int p, int q, int s) {
  std::vector<int> pt(static_cast<std::size_t>(corners), 0);
  pt[static_cast<std::size_t>(x - 1)] += p;
  pt[static_cast<std::size_t>(y - 1)] += q;
  pt[static_cast<std::size_t>(z - 1)] += s;
  return pt;
}

/// Labels of the unique 3-hive of type (alpha, omega_k or sigma_k; beta) on
/// the face (x, y, z), where beta/alpha is a vertical (V) or horizontal (H)
/// strip.  Along each line parallel to the y -> z edge the labels grow by
/// one per step up to the strip count (V) or all at once (H).
inline void fill_pieri_face(Hive& h, int x, int y, int z, const Partition& alpha, const Partition& beta, Orient o) {
  const int m = h.m();
  std::vector<long long> A(static_cast<std::size_t>(m) + 1, 0), B(static_cast<std::size_t>(m) + 1, 0);
  for (int r = 1; r <= m; ++r) {
    A[static_cast<std::size_t>(r)] = A[static_cast<std::size_t>(r - 1)] + alpha[static_cast<std::size_t>(r - 1)];
    B[static_cast<std::size_t>(r)] = B[static_cast<std::size_t>(r - 1)] + beta[static_cast<std::size_t>(r - 1)];
  }
  for (int p = 0; p <= m; ++p) {
    const long long base = A[static_cast<std::size_t>(m - p)];
    const long long k = B[static_cast<std::size_t>(m - p)] - base;
    for (int s = 0; s <= m - p; ++s) {
      const long long g = o == Orient::V ? std::min<long long>(s, k) : (s >= 1 ? k : 0);
      h.set(face_point(h.corners(), x, y, z, p, m - p - s, s), base + g);
    }
  }
}

namespace detail {

/// Chain and orientation padded to at least two letters with an empty strip.
inline std::pair<std::vector<Partition>, OrientationString> padded_chain(const Tableau& t) {
  auto chain = t.chain();
  std::vector<Orient> letters = t.delta().letters();
  if (letters.size() == 1) {
    chain.push_back(chain.back());
    letters.push_back(Orient::H);
  }
  return {std::move(chain), OrientationString(std::move(letters))};
}

}  // namespace detail

/// The hive whose fan edges 1 -> k+1 carry the partition chain of T.  A
/// one-letter tableau is padded with an empty strip, giving a 3-hive.
inline Hive tableau_to_hive(const Tableau& t, int m) {
  if (t.n() < 1) throw std::invalid_argument("tableau_to_hive needs n >= 1");
  if (!t.is_rectangular()) throw ShapeError("tableau_to_hive requires a rectangular tableau");
  if (auto rep = validate(t); !rep.ok()) throw std::invalid_argument("tableau_to_hive: " + rep.summary());
  if (static_cast<int>(t.num_rows()) > m) throw ShapeError("tableau has more than m rows");
  if (t.num_rows() != 0 && static_cast<int>(t.num_rows()) != m) throw ShapeError("tableau shape is not an m-row rectangle");
  auto [chain, delta] = detail::padded_chain(t);
  const int corners = static_cast<int>(chain.size());
  Hive h(corners, m);
  for (int i = 2; i < corners; ++i)
    fill_pieri_face(h, 1, i, i + 1, chain[static_cast<std::size_t>(i - 1)], chain[static_cast<std::size_t>(i)],
                    delta.at(i));
  return corners >= 4 ? octahedron_excavate(h) : h;
}

/// Which strip a sym-alt edge weight is: {orientation, size}, orientation
/// nullopt when the weight is sigma_k and omega_k at once (k <= 1).
inline std::optional<std::pair<std::optional<Orient>, int>> classify_sym_alt(const GlWeight& w) {
  const int m = static_cast<int>(w.size());
  int ones = 0;
  while (ones < m && w[static_cast<std::size_t>(ones)] == 1) ++ones;
  bool rest_zero = true;
  for (int i = ones; i < m; ++i) rest_zero = rest_zero && w[static_cast<std::size_t>(i)] == 0;
  if (rest_zero) return std::make_pair(ones <= 1 ? std::nullopt : std::optional<Orient>(Orient::V), ones);
  bool tail_zero = true;
  for (int i = 1; i < m; ++i) tail_zero = tail_zero && w[static_cast<std::size_t>(i)] == 0;
  if (tail_zero && w[0] >= 2) return std::make_pair(std::optional<Orient>(Orient::H), w[0]);
  return std::nullopt;
}

/// Reads the tableau off the fan edges 1 -> k.  Letters whose strip has at
/// most one cell are both h and v; `hint` (full orientation string) resolves
/// them, otherwise h is used.  A hint one letter shorter than the hive drops
/// a trailing empty padding strip.
inline Tableau hive_to_tableau(const Hive& h, const std::optional<OrientationString>& hint = std::nullopt) {
  const int corners = h.corners();
  int letters = corners - 1;
  if (hint && static_cast<int>(hint->size()) == letters - 1) {
    const GlWeight last = edge_weight(h, corners - 1, corners);
    if (std::any_of(last.begin(), last.end(), [](int x) { return x != 0; }))
      throw HiveError("hint omits a nonempty final strip");
    letters -= 1;
  } else if (hint && static_cast<int>(hint->size()) != letters) {
    throw std::invalid_argument("orientation hint has the wrong length");
  }
  std::vector<Partition> chain;
  std::vector<Orient> delta;
  for (int k = 0; k <= letters; ++k) {
    const GlWeight w = edge_weight(h, 1, k + 1);
    if (!is_dominant(w) || (!w.empty() && w.back() < 0)) throw HiveError("fan edge weight is not a partition");
    chain.push_back(to_partition(w));
  }
  for (int i = 1; i <= letters; ++i) {
    auto cls = classify_sym_alt(edge_weight(h, i, i + 1));
    if (!cls) throw HiveError("edge " + std::to_string(i) + " -> " + std::to_string(i + 1) + " is not sym-alt");
    Orient o = cls->first ? *cls->first : (hint ? hint->at(i) : Orient::H);
    if (cls->first && hint && hint->at(i) != *cls->first) throw HiveError("orientation hint contradicts the hive");
    delta.push_back(o);
  }
  Tableau t = tableau_from_chain(chain, OrientationString(std::move(delta)));
  if (auto rep = validate(t); !rep.ok()) throw HiveError("fan edges do not give a semistandard tableau: " + rep.summary());
  return t;
}

/// For a 3-hive with a sym-alt weight on edge 1 -> 2 (first) or 2 -> 3
/// (second): the total increase along each of the m+1 lines parallel to it,
/// starting from the corner-1 side.
inline std::vector<long long> strip_increments(const Hive& h, bool first_edge) {
  if (h.corners() != 3) throw std::invalid_argument("strip increments need a 3-hive");
  const int m = h.m();
  std::vector<long long> out;
  for (int k = 0; k <= m; ++k) {
    if (first_edge)
      out.push_back(h.at({0, m - k, k}) - h.at({m - k, 0, k}));
    else
      out.push_back(h.at({m - k, 0, k}) - h.at({m - k, k, 0}));
  }
  return out;
}

namespace detail {

inline bool edge_is_omega(const Hive& h, int i, int j) {
  auto c = classify_sym_alt(edge_weight(h, i, j));
  return c && (!c->first || *c->first == Orient::V);
}
inline bool edge_is_sigma(const Hive& h, int i, int j) {
  auto c = classify_sym_alt(edge_weight(h, i, j));
  return c && (!c->first || *c->first == Orient::H);
}

}  // namespace detail

/// Break path of a 3-hive whose edge 1 -> 2 (or else 2 -> 3) carries some
/// omega_i.  For edge 1 -> 2 the vertices are (m-k-i_{k+1}, i_{k+1}, k),
/// k = 0..m; for edge 2 -> 3 they are (p, m-p-k_p, k_p), p = m..0.  Labels
/// rise by one per step before the path and stay constant after it.
inline std::vector<std::vector<int>> break_path(const Hive& h) {
  if (h.corners() != 3) throw std::invalid_argument("break path needs a 3-hive");
  if (auto rep = check_hive(h); !rep.ok()) throw HiveError("break path: " + rep.message);
  const int m = h.m();
  const bool first = detail::edge_is_omega(h, 1, 2);
  if (!first && !detail::edge_is_omega(h, 2, 3)) throw HiveError("hive has no omega edge next to corner 2");
  std::vector<std::vector<int>> path;
  if (first) {
    auto inc = strip_increments(h, true);
    for (int k = 0; k <= m; ++k) {
      const int i = static_cast<int>(inc[static_cast<std::size_t>(k)]);
      for (int t = 1; t <= m - k; ++t) {
        const long long step = h.at({m - k - t, t, k}) - h.at({m - k - t + 1, t - 1, k});
        if (step != (t <= i ? 1 : 0)) throw HiveError("labels do not follow an omega strip profile");
      }
      path.push_back({m - k - i, i, k});
    }
  } else {
    for (int p = m; p >= 0; --p) {
      const int k = static_cast<int>(h.at({p, 0, m - p}) - h.at({p, m - p, 0}));
      for (int s = 1; s <= m - p; ++s) {
        const long long step = h.at({p, m - p - s, s}) - h.at({p, m - p - s + 1, s - 1});
        if (step != (s <= k ? 1 : 0)) throw HiveError("labels do not follow an omega strip profile");
      }
      path.push_back({p, m - p - k, k});
    }
  }
  return path;
}

/// The profile i_1 >= ... >= i_{m+1} of a 3-hive with some sigma_i on edge
/// 1 -> 2 (or else 2 -> 3): the increase along each parallel line, which
/// happens entirely in its first step.
inline std::vector<int> sym_strip_profile(const Hive& h) {
  if (h.corners() != 3) throw std::invalid_argument("strip profile needs a 3-hive");
  if (auto rep = check_hive(h); !rep.ok()) throw HiveError("strip profile: " + rep.message);
  const int m = h.m();
  const bool first = detail::edge_is_sigma(h, 1, 2);
  if (!first && !detail::edge_is_sigma(h, 2, 3)) throw HiveError("hive has no sigma edge next to corner 2");
  auto inc = strip_increments(h, first);
  std::vector<int> out;
  for (int k = 0; k <= m; ++k) {
    const long long total = inc[static_cast<std::size_t>(k)];
    const int len = m - k;
    for (int t = 1; t <= len; ++t) {
      const long long step = first ? h.at({m - k - t, t, k}) - h.at({m - k - t + 1, t - 1, k})
                                   : h.at({m - k, len - t, t}) - h.at({m - k, len - t + 1, t - 1});
      if (step != (t == 1 ? total : 0)) throw HiveError("labels do not follow a sigma strip profile");
    }
    out.push_back(static_cast<int>(total));
  }
  if (!first) std::reverse(out.begin(), out.end());
  return out;
}

struct StaircaseReport {
  bool ok = true;
  std::vector<std::vector<Partition>> rows;  // rows[r-1] = chain read along row r
  std::vector<std::string> failures;
};

/// Builds the staircase of edge weights of the (n+1)-hive of T: row r reads
/// the edges r -> j for j = r..n+1, then the duals of j -> r shifted by the
/// rectangle for j = 2..r.  Checks the merge of the two column blocks, every
/// unit square as a BK move, that row r+1 is the chain of the r-th
/// promotion, and that row n+1 returns to row 1.
inline StaircaseReport staircase_check(const Tableau& t, int m) {
  StaircaseReport rep;
  const int n = t.n();
  if (!t.is_rectangular()) throw ShapeError("staircase check requires a rectangular tableau");
  if (auto v = validate(t); !v.ok()) throw std::invalid_argument("staircase_check: " + v.summary());
  if (n <= 1) return rep;
  const Hive h = tableau_to_hive(t, m);
  const int corners = n + 1;
  const GlWeight mu = edge_weight(h, 1, corners);
  auto shifted_dual = [&](int r, int j) {
    GlWeight w = edge_weight(h, r, j);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += mu[i];
    return w;
  };
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.failures.push_back(std::move(msg));
  };
  auto as_partition = [&](const GlWeight& w, const std::string& where) -> Partition {
    if (!is_dominant(w) || (!w.empty() && w.back() < 0)) {
      fail("weight at " + where + " is not a partition");
      return Partition{};
    }
    return to_partition(w);
  };

  for (int r = 1; r <= corners; ++r) {
    std::vector<Partition> row;
    for (int j = r; j <= corners; ++j) row.push_back(as_partition(edge_weight(h, r, j), "row " + std::to_string(r)));
    if (r >= 2 && shifted_dual(r, 1) != edge_weight(h, r, corners))
      fail("row " + std::to_string(r) + ": columns n+1 and n+2 do not merge");
    for (int j = 2; j <= r; ++j) row.push_back(as_partition(shifted_dual(r, j), "row " + std::to_string(r)));
    rep.rows.push_back(std::move(row));
  }
  if (!rep.ok) return rep;

  const OrientationString& delta = t.delta();
  auto letter = [&](int c) { return delta.at(((c - 1) % n + n) % n + 1); };
  for (int r = 1; r <= n; ++r) {
    const auto& up = rep.rows[static_cast<std::size_t>(r - 1)];
    const auto& down = rep.rows[static_cast<std::size_t>(r)];
    for (int c = r + 1; c <= r + n - 1; ++c) {
      const auto& lam = down[static_cast<std::size_t>(c - r - 1)];
      const auto& mid = up[static_cast<std::size_t>(c - r)];
      const auto& nu = up[static_cast<std::size_t>(c - r + 1)];
      const auto& rho = down[static_cast<std::size_t>(c - r)];
      Partition got;
      try {
        got = bk_move(lam, mid, nu, letter(r), letter(c));
      } catch (const std::exception& e) {
        fail("square (" + std::to_string(r) + "," + std::to_string(c) + "): " + e.what());
        continue;
      }
      if (got != rho) fail("square (" + std::to_string(r) + "," + std::to_string(c) + ") is not a BK move");
    }
  }

  Tableau cur = t;
  for (int r = 2; r <= corners; ++r) {
    cur = jdt_promote(cur);
    if (cur.chain() != rep.rows[static_cast<std::size_t>(r - 1)])
      fail("row " + std::to_string(r) + " is not the chain of promotion " + std::to_string(r - 1));
  }
  if (rep.rows.back() != rep.rows.front()) fail("row n+1 differs from row 1");
  return rep;
}

/// Number of 3-hives (normalized) with the given boundary, by bounded search
/// over the interior labels.  Edge 1->2 carries alpha, 2->3 lambda, 1->3 beta.
inline long long count_three_hives(const GlWeight& alpha, const GlWeight& lambda, const GlWeight& beta,
                                   const std::function<void(const Hive&)>& visit = nullptr) {
  const int m = static_cast<int>(alpha.size());
  if (lambda.size() != alpha.size() || beta.size() != alpha.size()) throw std::invalid_argument("weight lengths differ");
  long long sa = 0, sl = 0, sb = 0;
  for (int i = 0; i < m; ++i) {
    sa += alpha[static_cast<std::size_t>(i)];
    sl += lambda[static_cast<std::size_t>(i)];
    sb += beta[static_cast<std::size_t>(i)];
  }
  if (sa + sl != sb) return 0;
  Hive h(3, m);
  long long acc = 0;
  h.set({m, 0, 0}, 0);
  for (int t = 1; t <= m; ++t) {
    acc += alpha[static_cast<std::size_t>(t - 1)];
    h.set({m - t, t, 0}, acc);
  }
  acc = 0;
  for (int t = 1; t <= m; ++t) {
    acc += beta[static_cast<std::size_t>(t - 1)];
    h.set({m - t, 0, t}, acc);
  }
  acc = sa;
  for (int t = 1; t <= m; ++t) {
    acc += lambda[static_cast<std::size_t>(t - 1)];
    h.set({0, m - t, t}, acc);
  }
  const Simplex& s = h.lattice();
  // interior points in (j, k) lexicographic order
  std::vector<std::vector<int>> interior;
  for (int j = 1; j <= m; ++j)
    for (int k = 1; j + k <= m - 1; ++k) interior.push_back({m - j - k, j, k});
  std::vector<int> order;
  for (auto& p : interior) order.push_back(s.index(p));
  std::vector<int> position(s.size(), -1);  // -1 for boundary points
  for (int i = 0; i < static_cast<int>(order.size()); ++i) position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  // rhombi checked once their last vertex in the order is assigned
  std::vector<std::vector<Simplex::Rhombus>> due(order.size() + 1);
  for (const auto& r : s.rhombi()) {
    int last = -1;
    for (int p : {r.short1, r.short2, r.long1, r.long2}) last = std::max(last, position[static_cast<std::size_t>(p)]);
    due[static_cast<std::size_t>(last + 1)].push_back(r);
  }
  auto holds = [&](const Simplex::Rhombus& r) {
    return h.value(r.short1) + h.value(r.short2) >= h.value(r.long1) + h.value(r.long2);
  };
  for (const auto& r : due[0])
    if (!holds(r)) return 0;

  long long count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == order.size()) {
      ++count;
      if (visit) visit(h);
      return;
    }
    const auto& p = interior[pos];
    const int i = p[0], j = p[1], k = p[2];
    const long long hi = h.at({i + 1, j, k - 1}) + h.at({i + 1, j - 1, k}) - h.at({i + 2, j - 1, k - 1});
    const long long lo = h.at({i, j - 1, k + 1}) + h.at({i + 1, j, k - 1}) - h.at({i + 1, j - 1, k});
    const int idx = order[pos];
    for (long long v = lo; v <= hi; ++v) {
      h.set(idx, v);
      bool good = true;
      for (const auto& r : due[pos + 1])
        if (!holds(r)) {
          good = false;
          break;
        }
      if (good) rec(pos + 1);
    }
    h.unset(idx);
  };
  rec(0);
  return count;
}

/// Number of N-hives of type (lambdas; mu) for partition weights, by
/// enumerating fan-face 3-hives, excavating the rest and checking the result.
/// Guarded to |Delta_m^N| <= 500.
inline long long count_hives(const std::vector<GlWeight>& lambdas, const GlWeight& mu) {
  if (lambdas.empty()) throw std::invalid_argument("count_hives needs at least one weight");
  const int m = static_cast<int>(mu.size());
  const int corners = static_cast<int>(lambdas.size()) + 1;
  for (const auto& w : lambdas)
    if (static_cast<int>(w.size()) != m || !is_dominant(w) || (m && w.back() < 0))
      throw std::invalid_argument("count_hives weights must be partitions with m parts");
  if (!is_dominant(mu) || (m && mu.back() < 0)) return 0;
  if (corners == 2) return lambdas[0] == mu ? 1 : 0;
  const Simplex& s = Simplex::get(corners, m);
  if (s.size() > 500) throw std::length_error("count_hives: lattice exceeds 500 points");

  // 3-hive enumerations are shared between fan chains with equal boundaries
  std::map<std::tuple<GlWeight, GlWeight, GlWeight>, std::vector<Hive>> cache;
  auto faces = [&](const GlWeight& a, const GlWeight& l, const GlWeight& b) -> const std::vector<Hive>& {
    auto key = std::make_tuple(a, l, b);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<Hive> out;
    count_three_hives(a, l, b, [&](const Hive& x) { out.push_back(x); });
    return cache.emplace(std::move(key), std::move(out)).first->second;
  };
  // candidate fan edges 1 -> i+1: partitions beta with beta ⊇ alpha,
  // |beta| = |alpha| + |lambda|, beta_1 <= alpha_1 + lambda_1
  auto candidates = [&](const GlWeight& a, const GlWeight& l) {
    std::vector<GlWeight> out;
    int target = 0;
    for (int i = 0; i < m; ++i) target += a[static_cast<std::size_t>(i)] + l[static_cast<std::size_t>(i)];
    GlWeight cur(static_cast<std::size_t>(m), 0);
    std::function<void(int, int)> rec = [&](int row, int remaining) {
      if (row == m) {
        if (remaining == 0) out.push_back(cur);
        return;
      }
      const int lo = a[static_cast<std::size_t>(row)];
      int hi = row == 0 ? a[0] + l[0] : cur[static_cast<std::size_t>(row - 1)];
      hi = std::min(hi, lo + remaining);
      for (int v = lo; v <= hi; ++v) {
        cur[static_cast<std::size_t>(row)] = v;
        rec(row + 1, remaining - (v - lo));
      }
    };
    rec(0, target - [&] {
      int t = 0;
      for (int x : a) t += x;
      return t;
    }());
    return out;
  };

  long long count = 0;
  std::vector<const Hive*> chosen;
  std::function<void(int, const GlWeight&)> rec = [&](int i, const GlWeight& alpha) {
    // alpha is the weight on edge 1 -> i; choose face (1, i, i+1)
    const GlWeight& lam = lambdas[static_cast<std::size_t>(i - 1)];
    std::vector<GlWeight> betas;
    if (i + 1 == corners)
      betas = {mu};
    else
      betas = candidates(alpha, lam);
    for (const auto& beta : betas) {
      for (const Hive& face : faces(alpha, lam, beta)) {
        chosen.push_back(&face);
        if (i + 1 == corners) {
          Hive h(corners, m);
          for (int f = 0; f < static_cast<int>(chosen.size()); ++f) {
            const int x = 1, y = f + 2, z = f + 3;
            for (int p = 0; p <= m; ++p)
              for (int q = 0; p + q <= m; ++q)
                h.set(face_point(corners, x, y, z, p, q, m - p - q), chosen[static_cast<std::size_t>(f)]->at({p, q, m - p - q}));
          }
          try {
            Hive full = corners >= 4 ? octahedron_excavate(h) : h;
            if (check_hive(full).ok()) ++count;
          } catch (const HiveError&) {
          }
        } else {
          rec(i + 1, beta);
        }
        chosen.pop_back();
      }
    }
  };
  rec(2, lambdas[0]);
  return count;
}

}  // namespace deltatab
