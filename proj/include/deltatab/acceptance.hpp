#pragma once

#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "deltatab/hive.hpp"
#include "deltatab/poly.hpp"
#include "deltatab/promotion.hpp"
#include "deltatab/repthy.hpp"
#include "deltatab/sieving.hpp"
#include "deltatab/sweep.hpp"
#include "deltatab/tableau.hpp"

namespace deltatab::acceptance {

// ---------------------------------------------------------------- goldens

inline Tableau grid(Grid rows, const char* delta) { return Tableau(std::move(rows), OrientationString::parse(delta)); }

inline const OrientationString& example1_delta() {
  static const auto d = OrientationString::parse("hvhvhv");
  return d;
}
inline ContentVector example1_gamma() { return {2, 2, 2, 2, 2, 2}; }

/// The six printed tableaux; the first three form the displayed 3-orbit in order.
inline std::vector<Tableau> example1_tableaux() {
  return {
      grid({{1, 1, 2, 5}, {2, 3, 4, 6}, {3, 4, 5, 6}}, "hvhvhv"),
      grid({{1, 1, 2, 3}, {2, 3, 4, 6}, {4, 5, 5, 6}}, "hvhvhv"),
      grid({{1, 1, 3, 4}, {2, 3, 4, 6}, {2, 5, 5, 6}}, "hvhvhv"),
      grid({{1, 1, 3, 5}, {2, 3, 4, 6}, {2, 4, 5, 6}}, "hvhvhv"),
      grid({{1, 1, 2, 4}, {2, 3, 4, 6}, {3, 5, 5, 6}}, "hvhvhv"),
      grid({{1, 1, 2, 4}, {2, 3, 3, 6}, {4, 5, 5, 6}}, "hvhvhv"),
  };
}

/// The printed slide frames of one promotion of the first Example 1 tableau,
/// followed by the printed result.
inline std::vector<Grid> example1_promotion_frames() {
  const int o = kDot;
  return {
      {{o, o, 2, 5}, {2, 3, 4, 6}, {3, 4, 5, 6}}, {{o, 2, o, 5}, {2, 3, 4, 6}, {3, 4, 5, 6}},
      {{o, 2, 4, 5}, {2, 3, o, 6}, {3, 4, 5, 6}}, {{o, 2, 4, 5}, {2, 3, 5, 6}, {3, 4, o, 6}},
      {{o, 2, 4, 5}, {2, 3, 5, 6}, {3, 4, 6, o}}, {{2, o, 4, 5}, {2, 3, 5, 6}, {3, 4, 6, o}},
      {{2, 3, 4, 5}, {2, o, 5, 6}, {3, 4, 6, o}}, {{2, 3, 4, 5}, {2, 4, 5, 6}, {3, o, 6, o}},
      {{2, 3, 4, 5}, {2, 4, 5, 6}, {3, 6, o, o}},
  };
}
inline Tableau example1_promoted() { return grid({{1, 2, 3, 4}, {1, 3, 4, 5}, {2, 5, 6, 6}}, "vhvhvh"); }

inline IntPoly example1_kostka() { return IntPoly::from_terms({{6, 1}, {8, 1}, {9, 2}, {10, 1}, {12, 1}}); }

inline const OrientationString& example2_delta() {
  static const auto d = OrientationString::parse("hvhvhvhv");
  return d;
}
inline ContentVector example2_gamma() { return {2, 3, 2, 3, 2, 3, 2, 3}; }
inline IntPoly example2_kostka() {
  return IntPoly::from_terms(
      {{10, 1}, {12, 1}, {13, 2}, {14, 4}, {15, 2}, {16, 4}, {17, 2}, {18, 4}, {19, 2}, {20, 1}, {22, 1}});
}
inline constexpr int kExample2Shift = 18;

/// BK chain figure: T, t_1 T, t_2 t_1 T, t_3 t_2 t_1 T, t_4 t_3 t_2 t_1 T.
inline std::vector<Tableau> bk_figure_chain() {
  return {
      grid({{1, 1, 1, 2, 2}, {2, 2, 3, 3, 4}, {3, 4, 4, 5, 5}}, "hhhhh"),
      grid({{1, 1, 1, 1, 2}, {2, 2, 3, 3, 4}, {3, 4, 4, 5, 5}}, "hhhhh"),
      grid({{1, 1, 1, 1, 3}, {2, 2, 2, 3, 4}, {3, 4, 4, 5, 5}}, "hhhhh"),
      grid({{1, 1, 1, 1, 3}, {2, 2, 2, 4, 4}, {3, 3, 4, 5, 5}}, "hhhhh"),
      grid({{1, 1, 1, 1, 3}, {2, 2, 2, 4, 4}, {3, 3, 5, 5, 5}}, "hhhhh"),
  };
}

/// Second row of the BK figure: the k-th grid is the prefix promotion on
/// letters 1..k with the new k entries shown as dots.
inline std::vector<Grid> bk_figure_dotted() {
  const int o = kDot;
  return {
      {{o, o, o, 2, 2}, {2, 2, 3, 3, 4}, {3, 4, 4, 5, 5}},
      {{1, 1, 1, 1, o}, {o, o, 3, 3, 4}, {3, 4, 4, 5, 5}},
      {{1, 1, 1, 1, o}, {2, 2, 2, o, 4}, {o, 4, 4, 5, 5}},
      {{1, 1, 1, 1, 3}, {2, 2, 2, o, o}, {3, 3, o, 5, 5}},
      {{1, 1, 1, 1, 3}, {2, 2, 2, 4, 4}, {3, 3, o, o, o}},
  };
}

/// A printed 3-hive with m = 4, given row by row from the corner-1 edge:
/// rows[k][j] is the label at (4 - j - k, j, k).
inline Hive hive_from_rows(const std::vector<std::vector<long long>>& rows) {
  const int m = static_cast<int>(rows.size()) - 1;
  Hive h(3, m);
  for (int k = 0; k <= m; ++k)
    for (int j = 0; j + k <= m; ++j) h.set({m - j - k, j, k}, rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
  return h;
}

/// Left hive of the hive figure: edge 1 -> 2 carries sigma_3.
inline Hive hive_figure_left() {
  return hive_from_rows({{0, 3, 3, 3, 3}, {4, 5, 5, 5}, {6, 6, 6}, {6, 6}, {6}});
}
/// Right hive of the hive figure: edge 1 -> 2 carries omega_2.
inline Hive hive_figure_right() {
  return hive_from_rows({{0, 1, 2, 2, 2}, {3, 4, 4, 4}, {4, 5, 5}, {5, 5}, {5}});
}
/// The drawn break path of the right hive.
inline std::vector<std::vector<int>> hive_figure_right_path() { return {{2, 2, 0}, {2, 1, 1}, {1, 1, 2}, {1, 0, 3}, {0, 0, 4}}; }

// ------------------------------------------------------------ sweep checks

/// Failure counters for the exhaustive sweep; `samples` keeps the first few
/// failure descriptions.
struct SweepTally {
  long long instances = 0;
  long long tableaux = 0;
  long long periodicity_failures = 0;
  long long bk_failures = 0;
  long long ribbons = 0;
  long long ribbon_mismatches = 0;
  long long hives = 0;
  long long hive_failures = 0;
  long long count_checks = 0;
  long long count_mismatches = 0;
  std::vector<std::string> samples;

  void note(const std::string& what) {
    if (samples.size() < 5) samples.push_back(what);
  }
};

inline std::string describe(int m, const OrientationString& delta, const ContentVector& gamma) {
  std::ostringstream os;
  os << "m=" << m << " delta=" << delta.str() << " gamma=";
  for (std::size_t i = 0; i < gamma.size(); ++i) os << (i ? "," : "") << gamma[i];
  return os.str();
}

/// Mixed BK by ribbon move against sliding on every mixed index of t.
inline void check_ribbons(const Tableau& t, SweepTally& tally, const std::string& where) {
  for (int i = 1; i < t.n(); ++i) {
    if (t.delta().at(i) == t.delta().at(i + 1)) continue;
    ++tally.ribbons;
    if (bk(t, i) != bk_by_sliding(t, i)) {
      ++tally.ribbon_mismatches;
      tally.note("ribbon mismatch at i=" + std::to_string(i) + " for " + where);
    }
  }
}

/// Periodicity, BK decomposition, ribbon moves and the hive bijection on
/// every tableau of one instance.
inline void check_sweep_instance(const SweepInstance& inst, SweepTally& tally) {
  ++tally.instances;
  const std::string where = describe(inst.m, inst.delta, inst.gamma);
  const auto tabs = enumerate_tableaux(inst.m, inst.delta, inst.gamma);
  if (static_cast<long long>(tabs.size()) != inst.count) {
    ++tally.periodicity_failures;
    tally.note("enumeration size differs from chain count for " + where);
  }
  for (const auto& t : tabs) {
    ++tally.tableaux;
    Tableau cur = t;
    for (int k = 0; k < t.n(); ++k) cur = jdt_promote(cur);
    if (cur != t) {
      ++tally.periodicity_failures;
      tally.note("n-fold promotion is not the identity for " + where);
    }
    std::vector<Tableau> partials;
    if (promote_via_bk(t, &partials) != jdt_promote(t)) {
      ++tally.bk_failures;
      tally.note("BK composite differs from jeu de taquin for " + where);
    }
    check_ribbons(t, tally, where);
    for (const auto& p : partials) check_ribbons(p, tally, where);

    ++tally.hives;
    try {
      const Hive h = tableau_to_hive(t, inst.m);
      const HiveReport rep = check_hive(h);
      if (!rep.ok()) {
        ++tally.hive_failures;
        tally.note("hive check failed for " + where + ": " + rep.message);
      } else if (hive_to_tableau(h, inst.delta) != t) {
        ++tally.hive_failures;
        tally.note("hive round trip failed for " + where);
      }
    } catch (const std::exception& e) {
      ++tally.hive_failures;
      tally.note("hive construction threw for " + where + ": " + e.what());
    }
  }
}

/// count_hives, the weight-multiplicity formula, the Pieri chain and the
/// enumeration count must agree.
inline void check_counts(const SweepInstance& inst, SweepTally& tally) {
  const auto lambdas = sym_alt_weights(inst.delta, inst.gamma, inst.m);
  const GlWeight mu(static_cast<std::size_t>(inst.m), total(inst.gamma) / inst.m);
  ++tally.count_checks;
  const long long hives = count_hives(lambdas, mu);
  const long long weyl = weyl_invariant_dimension(inst.delta, inst.gamma, inst.m);
  const long long inv = invariant_dimension(inst.delta, inst.gamma, inst.m);
  const long long pieri = pieri_tensor_chain(lambdas, mu, inst.m);
  if (hives != weyl || weyl != pieri || pieri != inv || inv != inst.count) {
    ++tally.count_mismatches;
    tally.note("counts differ for " + describe(inst.m, inst.delta, inst.gamma) + ": hives " + std::to_string(hives) +
               ", weights " + std::to_string(weyl) + ", pieri " + std::to_string(pieri) + ", invariants " +
               std::to_string(inv) + ", tableaux " +
               std::to_string(inst.count));
  }
}

// --------------------------------------------------------------- criteria

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  SweepLimits sweep;
  long long fusion_max_count = 30;          // |RT| bound for the fusion comparison
  std::size_t fusion_max_weight_dim = 16;  // feasibility cap on the target weight space
  std::size_t hive_max_points = 500;        // |Delta_m^N| bound for hive counting
  std::set<int> only;                       // criteria to run; empty runs all
};

namespace detail {

class Stopwatch {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

inline std::string sizes_text(const std::vector<int>& sizes) {
  std::vector<std::string> parts;
  for (int x : sizes) parts.push_back(std::to_string(x));
  return join(parts, "+");
}

inline std::string values_text(const std::vector<long long>& v) {
  std::vector<std::string> parts;
  for (long long x : v) parts.push_back(std::to_string(x));
  return "(" + join(parts, ",") + ")";
}

inline std::string samples_text(const SweepTally& t) { return t.samples.empty() ? "" : "; first: " + t.samples.front(); }

inline Grid dotted(const Tableau& t, int k) {
  Grid g = t.rows();
  for (auto& row : g)
    for (int& v : row)
      if (v == k) v = kDot;
  return g;
}

}  // namespace detail

/// Example 1 end to end.
inline CriterionResult criterion_example1() {
  detail::Stopwatch sw;
  CriterionResult r{1, "Example 1 end-to-end", true, "", 0};
  std::vector<std::string> bad;
  const auto& delta = example1_delta();
  const auto gamma = example1_gamma();
  const auto tabs = enumerate_tableaux(3, delta, gamma);
  const auto printed = example1_tableaux();
  if (tabs.size() != 6) bad.push_back(std::to_string(tabs.size()) + " tableaux");
  if (std::set<Tableau>(tabs.begin(), tabs.end()) != std::set<Tableau>(printed.begin(), printed.end()))
    bad.push_back("tableaux differ from the printed set");
  const auto orbits = promotion_orbits(3, delta, gamma);
  if (orbits.orbit_sizes() != std::vector<int>{3, 1, 1, 1}) bad.push_back("orbit sizes " + detail::sizes_text(orbits.orbit_sizes()));
  if (cyclic_generator(printed[0], 2) != printed[1] || cyclic_generator(printed[1], 2) != printed[2])
    bad.push_back("the printed 3-orbit is not traversed in order");
  std::vector<Grid> frames;
  const Tableau promoted = jdt_promote(printed[0], &frames);
  if (frames != example1_promotion_frames() || promoted != example1_promoted()) bad.push_back("promotion frames differ");
  const IntPoly k = fusion_kostka(delta, gamma, 3);
  if (k != example1_kostka()) bad.push_back("K = " + to_string(k));
  const long long rho = rho_pairing(sym_alt_weights(delta, gamma, 3), 3);
  if (rho != 9) bad.push_back("rho pairing " + std::to_string(rho));
  const CspReport csp = csp_verify(3, delta, gamma);
  if (!csp.pass() || csp.fixed_points() != std::vector<long long>{6, 3, 3}) bad.push_back("CSP " + detail::values_text(csp.fixed_points()));
  r.seconds = sw.seconds();
  if (r.seconds >= 60) bad.push_back("took " + std::to_string(r.seconds) + " s");
  r.pass = bad.empty();
  r.detail = r.pass ? "6 tableaux, orbits 3+1+1+1, K = " + to_string(k) + ", rho 9, CSP (6,3,3)" : detail::join(bad, "; ");
  return r;
}

/// Example 2, combinatorial side with the printed polynomial.
inline CriterionResult criterion_example2() {
  detail::Stopwatch sw;
  CriterionResult r{2, "Example 2 end-to-end", true, "", 0};
  std::vector<std::string> bad;
  const auto& delta = example2_delta();
  const auto gamma = example2_gamma();
  const auto orbits = promotion_orbits(4, delta, gamma);
  if (orbits.tableaux.size() != 24) bad.push_back(std::to_string(orbits.tableaux.size()) + " tableaux");
  if (orbits.orbit_sizes() != std::vector<int>{4, 4, 4, 4, 2, 2, 1, 1, 1, 1})
    bad.push_back("orbit sizes " + detail::sizes_text(orbits.orbit_sizes()));
  const long long rho = rho_pairing(sym_alt_weights(delta, gamma, 4), 4);
  if (rho != kExample2Shift) bad.push_back("rho pairing " + std::to_string(rho));
  const CspReport csp = csp_verify(4, delta, gamma, example2_kostka().shifted(kExample2Shift));
  if (!csp.pass() || csp.fixed_points() != std::vector<long long>{24, 4, 8, 4})
    bad.push_back("CSP " + detail::values_text(csp.fixed_points()));
  r.seconds = sw.seconds();
  if (r.seconds >= 60) bad.push_back("took " + std::to_string(r.seconds) + " s");
  r.pass = bad.empty();
  r.detail = r.pass ? "24 tableaux, orbits 4x4+2x2+4x1, CSP (24,4,8,4)" : detail::join(bad, "; ");
  return r;
}

/// The sl_2 fusion computation with four copies of omega_1.
inline CriterionResult criterion_sl2_fusion() {
  detail::Stopwatch sw;
  CriterionResult r{3, "sl_2 fusion with four omega_1", true, "", 0};
  std::vector<std::string> bad;
  const FusionResult f = fusion_kostka_detailed(OrientationString::parse("vvvv"), {1, 1, 1, 1}, 2);
  if (f.kostka != IntPoly::from_terms({{2, 1}, {4, 1}})) bad.push_back("K = " + to_string(f.kostka));
  const std::vector<long long> expected{0, 0, 1, 1, 2};
  if (f.invariant_dims != expected) bad.push_back("invariants by degree " + detail::values_text(f.invariant_dims));
  r.seconds = sw.seconds();
  if (r.seconds >= 5) bad.push_back("took " + std::to_string(r.seconds) + " s");
  r.pass = bad.empty();
  r.detail = r.pass ? "K = q^4 + q^2; invariants by degree (0,0,1,1,2)" : detail::join(bad, "; ");
  return r;
}

/// Criteria 4, 5 and 6 from one pass over the sweep.
inline std::vector<CriterionResult> criteria_sweep(const SweepLimits& lim) {
  detail::Stopwatch sw;
  SweepTally t;
  for_each_sweep_instance(lim, [&](const SweepInstance& inst) { check_sweep_instance(inst, t); });
  const double secs = sw.seconds();
  std::vector<CriterionResult> out;

  CriterionResult c4{4, "periodicity sweep", t.periodicity_failures == 0 && t.bk_failures == 0 && t.tableaux > 0, "", secs};
  c4.detail = std::to_string(t.instances) + " instances, " + std::to_string(t.tableaux) + " tableaux, " +
              std::to_string(t.periodicity_failures) + " periodicity failures, " + std::to_string(t.bk_failures) +
              " BK failures" + (c4.pass ? "" : detail::samples_text(t));
  out.push_back(c4);

  CriterionResult c5{5, "ribbon move vs sliding", t.ribbon_mismatches == 0 && t.ribbons > 0, "", secs};
  c5.detail = std::to_string(t.ribbons) + " mixed BK applications, " + std::to_string(t.ribbon_mismatches) + " mismatches" +
              (c5.pass ? "" : detail::samples_text(t));
  out.push_back(c5);

  detail::Stopwatch sw6;
  std::vector<std::string> stair;
  for (const auto& [m, delta, gamma] : {std::make_tuple(3, example1_delta(), example1_gamma()),
                                        std::make_tuple(4, example2_delta(), example2_gamma())})
    for (const auto& tab : enumerate_tableaux(m, delta, gamma)) {
      const StaircaseReport rep = staircase_check(tab, m);
      if (!rep.ok) stair.push_back(describe(m, delta, gamma) + ": " + rep.failures.front());
    }
  CriterionResult c6{6, "hive bijection", t.hive_failures == 0 && stair.empty() && t.hives > 0, "", secs + sw6.seconds()};
  c6.detail = std::to_string(t.hives) + " hives, " + std::to_string(t.hive_failures) + " failures; staircase on 30 example tableaux, " +
              std::to_string(stair.size()) + " failures";
  if (!c6.pass) c6.detail += t.hive_failures ? detail::samples_text(t) : "; first: " + stair.front();
  out.push_back(c6);
  return out;
}

/// Hive counts against the weight-multiplicity formula and the Pieri chain.
inline CriterionResult criterion_hive_counting(const SweepLimits& lim, std::size_t max_points) {
  detail::Stopwatch sw;
  SweepTally t;
  for_each_sweep_instance(lim, [&](const SweepInstance& inst) {
    if (Simplex::get(static_cast<int>(inst.delta.size()) + 1, inst.m).size() <= max_points) check_counts(inst, t);
  });
  CriterionResult r{7, "hive counting oracle", t.count_mismatches == 0 && t.count_checks > 0, "", sw.seconds()};
  r.detail = std::to_string(t.count_checks) + " instances, " + std::to_string(t.count_mismatches) + " mismatches" +
             (r.pass ? "" : detail::samples_text(t));
  return r;
}

/// Distinct rationals (3j + 1) / (j + 2), j = 0..n-1.
inline std::vector<Rational> alternative_points(std::size_t n) {
  std::vector<Rational> z;
  for (std::size_t j = 0; j < n; ++j) {
    Rational q(static_cast<long>(3 * j + 1), static_cast<long>(j + 2));
    q.canonicalize();
    z.push_back(q);
  }
  return z;
}

/// Fusion results must not depend on the evaluation points.
inline CriterionResult criterion_fusion_invariance(const SweepLimits& lim, long long max_count, std::size_t max_dim) {
  detail::Stopwatch sw;
  long long compared = 0, skipped = 0, mismatches = 0;
  std::string first;
  SweepLimits l = lim;
  l.max_count = std::min(lim.max_count, max_count);
  for_each_sweep_instance(l, [&](const SweepInstance& inst) {
    const auto lambdas = sym_alt_weights(inst.delta, inst.gamma, inst.m);
    const GlWeight mu(static_cast<std::size_t>(inst.m), total(inst.gamma) / inst.m);
    const auto dist = tensor_weight_multiplicities(lambdas, inst.m);
    if (static_cast<std::size_t>(dist.at(mu)) > max_dim) {
      ++skipped;
      return;
    }
    FusionOptions a, b;
    a.max_weight_space_dim = b.max_weight_space_dim = 8 * max_dim;
    b.points = alternative_points(inst.delta.size());
    IntPoly ka, kb;
    try {
      ka = fusion_kostka(inst.delta, inst.gamma, inst.m, a);
      kb = fusion_kostka(inst.delta, inst.gamma, inst.m, b);
    } catch (const FusionTooLarge&) {
      ++skipped;
      return;
    }
    ++compared;
    if (ka != kb || ka.at_one() != inst.count) {
      ++mismatches;
      if (first.empty())
        first = describe(inst.m, inst.delta, inst.gamma) + ": " + to_string(ka) + " vs " + to_string(kb);
    }
  });
  CriterionResult r{8, "fusion point invariance", mismatches == 0 && compared > 0, "", sw.seconds()};
  r.detail = std::to_string(compared) + " instances compared, " + std::to_string(skipped) + " over the feasibility cap, " +
             std::to_string(mismatches) + " mismatches" + (first.empty() ? "" : "; first: " + first);
  return r;
}

/// Printed figure data: the two 3-hives with their break path and the BK chain.
inline CriterionResult criterion_figures() {
  detail::Stopwatch sw;
  CriterionResult r{9, "figure goldens", true, "", 0};
  std::vector<std::string> bad;
  const Hive left = hive_figure_left(), right = hive_figure_right();
  if (!check_hive(left).ok()) bad.push_back("left hive: " + check_hive(left).message);
  if (!check_hive(right).ok()) bad.push_back("right hive: " + check_hive(right).message);
  if (hive_type(left) != HiveType{{sigma(3, 4), {2, 1, 0, 0}}, {4, 2, 0, 0}}) bad.push_back("left hive edge weights");
  if (hive_type(right) != HiveType{{omega(2, 4), {2, 1, 0, 0}}, {3, 1, 1, 0}}) bad.push_back("right hive edge weights");
  try {
    if (break_path(right) != hive_figure_right_path()) bad.push_back("break path differs");
  } catch (const std::exception& e) {
    bad.push_back(std::string("break path: ") + e.what());
  }
  const auto chain = bk_figure_chain();
  const auto dots = bk_figure_dotted();
  std::vector<Tableau> partials;
  promote_via_bk(chain[0], &partials);
  for (std::size_t k = 1; k < chain.size(); ++k)
    if (partials[k - 1] != chain[k]) bad.push_back("BK row entry " + std::to_string(k + 1));
  for (int k = 1; k <= 5; ++k)
    if (detail::dotted(partial_promote(chain[0], k), k) != dots[static_cast<std::size_t>(k - 1)])
      bad.push_back("partial promotion row entry " + std::to_string(k));
  r.seconds = sw.seconds();
  r.pass = bad.empty();
  r.detail = r.pass ? "hives ok with sigma_3 and omega_2 edges, break path matches, both BK rows match" : detail::join(bad, "; ");
  return r;
}

/// Runs criteria 1-9 in order, reporting each result as it completes.
inline std::vector<CriterionResult> run_all(const AcceptanceOptions& opts = {},
                                            const std::function<void(const CriterionResult&)>& report = nullptr) {
  std::vector<CriterionResult> out;
  auto add = [&](CriterionResult r) {
    if (report) report(r);
    out.push_back(std::move(r));
  };
  auto guarded = [&](int id, const std::string& name, const std::function<std::vector<CriterionResult>()>& f) {
    const bool sweep = id == 4 && (opts.only.count(5) || opts.only.count(6));
    if (!opts.only.empty() && !opts.only.count(id) && !sweep) return;
    try {
      for (auto& r : f()) add(std::move(r));
    } catch (const std::exception& e) {
      add({id, name, false, std::string("threw: ") + e.what(), 0});
    }
  };
  guarded(1, "Example 1 end-to-end", [] { return std::vector{criterion_example1()}; });
  guarded(2, "Example 2 end-to-end", [] { return std::vector{criterion_example2()}; });
  guarded(3, "sl_2 fusion with four omega_1", [] { return std::vector{criterion_sl2_fusion()}; });
  guarded(4, "periodicity sweep", [&] { return criteria_sweep(opts.sweep); });
  guarded(7, "hive counting oracle", [&] { return std::vector{criterion_hive_counting(opts.sweep, opts.hive_max_points)}; });
  guarded(8, "fusion point invariance", [&] {
    return std::vector{criterion_fusion_invariance(opts.sweep, opts.fusion_max_count, opts.fusion_max_weight_dim)};
  });
  guarded(9, "figure goldens", [] { return std::vector{criterion_figures()}; });
  return out;
}

inline std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << "[" << (r.pass ? "PASS" : "FAIL") << "] criterion " << r.id << ": " << r.name << " -- " << r.detail << " ("
     << std::fixed;
  os.precision(2);
  os << r.seconds << " s)";
  return os.str();
}

}  // namespace deltatab::acceptance
