#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "deltatab/hive.hpp"
#include "deltatab/linalg.hpp"
#include "deltatab/partition.hpp"
#include "deltatab/poly.hpp"
#include "deltatab/tableau.hpp"

namespace deltatab {

using Matrix = std::vector<std::vector<long long>>;  // M[row][col]

enum class RepKind { sym, alt };

/// Sparse column of a generator: images (row, coeff) of one basis vector.
using SparseColumn = std::vector<std::pair<int, long>>;

/// sym^k or alt^k of the vector representation of sl_m with explicit
/// Chevalley generator matrices.  Basis 0 is the highest weight vector.
struct Representation {
  RepKind kind = RepKind::sym;
  int k = 0;
  int m = 0;
  int dim = 0;
  std::vector<GlWeight> weight_of_basis;  // gl_m weight: multiplicity of each index
  std::vector<Matrix> e, f, h;            // indices 0..m-2 for e_1..e_{m-1}
  std::vector<std::vector<SparseColumn>> e_cols, f_cols;

  GlWeight highest_weight() const { return kind == RepKind::sym ? sigma(k, m) : omega(k, m); }
};

namespace detail {

inline void sym_bases(int m, int pos, int remaining, GlWeight& cur, std::vector<GlWeight>& out) {
  if (pos == m - 1) {
    cur[static_cast<std::size_t>(pos)] = remaining;
    out.push_back(cur);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur[static_cast<std::size_t>(pos)] = v;
    sym_bases(m, pos + 1, remaining - v, cur, out);
  }
}

inline void alt_bases(int m, int pos, int remaining, GlWeight& cur, std::vector<GlWeight>& out) {
  if (pos == m) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (int v = 1; v >= 0; --v) {
    if (v > remaining) continue;
    cur[static_cast<std::size_t>(pos)] = v;
    alt_bases(m, pos + 1, remaining - v, cur, out);
  }
}

inline std::vector<SparseColumn> columns_of(const Matrix& M) {
  std::vector<SparseColumn> cols(M.empty() ? 0 : M.front().size());
  for (std::size_t r = 0; r < M.size(); ++r)
    for (std::size_t c = 0; c < M[r].size(); ++c)
      if (M[r][c] != 0) cols[c].emplace_back(static_cast<int>(r), static_cast<long>(M[r][c]));
  return cols;
}

}  // namespace detail

/// E_pq (1-based) on the basis: x_p d/dx_q on monomials, or replacing q by p
/// in a wedge with sign (-1)^{#indices strictly between p and q}.
inline Matrix elementary_matrix(const Representation& rep, int p, int q) {
  Matrix M(static_cast<std::size_t>(rep.dim), std::vector<long long>(static_cast<std::size_t>(rep.dim), 0));
  std::map<GlWeight, int> index;
  for (int b = 0; b < rep.dim; ++b) index[rep.weight_of_basis[static_cast<std::size_t>(b)]] = b;
  const auto P = static_cast<std::size_t>(p - 1), Q = static_cast<std::size_t>(q - 1);
  for (int b = 0; b < rep.dim; ++b) {
    GlWeight w = rep.weight_of_basis[static_cast<std::size_t>(b)];
    if (p == q) {
      M[static_cast<std::size_t>(b)][static_cast<std::size_t>(b)] = w[P];
      continue;
    }
    if (w[Q] == 0) continue;
    long long coeff;
    if (rep.kind == RepKind::sym) {
      coeff = w[Q];
    } else {
      if (w[P] == 1) continue;
      int between = 0;
      for (std::size_t t = std::min(P, Q) + 1; t < std::max(P, Q); ++t) between += w[t];
      coeff = between % 2 ? -1 : 1;
    }
    w[Q] -= 1;
    w[P] += 1;
    M[static_cast<std::size_t>(index.at(w))][static_cast<std::size_t>(b)] = coeff;
  }
  return M;
}

/// sym^k (any k >= 0) or alt^k (0 <= k <= m) of C^m.
inline Representation build_rep(RepKind kind, int k, int m) {
  if (m < 1) throw std::invalid_argument("build_rep: m must be positive");
  if (k < 0 || (kind == RepKind::alt && k > m)) throw std::out_of_range("build_rep: power out of range");
  Representation rep;
  rep.kind = kind;
  rep.k = k;
  rep.m = m;
  GlWeight cur(static_cast<std::size_t>(m), 0);
  if (kind == RepKind::sym)
    detail::sym_bases(m, 0, k, cur, rep.weight_of_basis);
  else
    detail::alt_bases(m, 0, k, cur, rep.weight_of_basis);
  rep.dim = static_cast<int>(rep.weight_of_basis.size());
  for (int i = 1; i < m; ++i) {
    rep.e.push_back(elementary_matrix(rep, i, i + 1));
    rep.f.push_back(elementary_matrix(rep, i + 1, i));
    Matrix h = elementary_matrix(rep, i, i);
    const Matrix h2 = elementary_matrix(rep, i + 1, i + 1);
    for (std::size_t r = 0; r < h.size(); ++r) h[r][r] -= h2[r][r];
    rep.h.push_back(std::move(h));
  }
  for (const auto& M : rep.e) rep.e_cols.push_back(detail::columns_of(M));
  for (const auto& M : rep.f) rep.f_cols.push_back(detail::columns_of(M));
  return rep;
}

inline Matrix matmul(const Matrix& A, const Matrix& B) {
  const std::size_t n = A.size(), k = B.size(), p = B.empty() ? 0 : B.front().size();
  Matrix C(n, std::vector<long long>(p, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t)
      if (A[i][t] != 0)
        for (std::size_t j = 0; j < p; ++j) C[i][j] += A[i][t] * B[t][j];
  return C;
}

inline Matrix commutator(const Matrix& A, const Matrix& B) {
  Matrix C = matmul(A, B);
  const Matrix D = matmul(B, A);
  for (std::size_t i = 0; i < C.size(); ++i)
    for (std::size_t j = 0; j < C[i].size(); ++j) C[i][j] -= D[i][j];
  return C;
}

/// The representation V_lambda for a sym-alt letter of strip size k.
inline Representation letter_rep(Orient o, int k, int m) {
  return build_rep(o == Orient::H ? RepKind::sym : RepKind::alt, k, m);
}

/// The weights lambda^i attached to (delta, gamma): sigma_k for h, omega_k for v.
inline std::vector<GlWeight> sym_alt_weights(const OrientationString& delta, const ContentVector& gamma, int m) {
  if (delta.size() != gamma.size()) throw std::invalid_argument("delta and gamma lengths differ");
  std::vector<GlWeight> out;
  for (std::size_t i = 0; i < delta.size(); ++i)
    out.push_back(delta[i] == Orient::H ? sigma(gamma[i], m) : omega(gamma[i], m));
  return out;
}

/// <sum lambda^i, rho> with rho = ((m-1)/2, ..., -(m-1)/2).
inline long long rho_pairing(const std::vector<GlWeight>& lambdas, int m) {
  long long twice = 0;
  for (const auto& w : lambdas) {
    if (static_cast<int>(w.size()) != m) throw std::invalid_argument("rho_pairing: weight does not have m parts");
    for (int j = 1; j <= m; ++j) twice += static_cast<long long>(w[static_cast<std::size_t>(j - 1)]) * (m + 1 - 2 * j);
  }
  if (twice % 2 != 0) throw std::domain_error("rho_pairing is not an integer for these weights");
  return twice / 2;
}

/// Weight multiplicities of V_{lambda^1} ⊗ ... ⊗ V_{lambda^n} for sym-alt
/// weights: a sigma_k factor has every composition of k into m parts as a
/// weight, an omega_k factor every 0/1 vector with k ones, each once.
inline std::map<GlWeight, long long> tensor_weight_multiplicities(const std::vector<GlWeight>& lambdas, int m) {
  std::map<GlWeight, long long> dist{{GlWeight(static_cast<std::size_t>(m), 0), 1}};
  for (const auto& w : lambdas) {
    auto cls = classify_sym_alt(w);
    if (!cls) throw std::invalid_argument("tensor_weight_multiplicities: weight is not sym-alt");
    std::vector<GlWeight> basis;
    GlWeight cur(static_cast<std::size_t>(m), 0);
    if (cls->first.value_or(Orient::H) == Orient::H)
      detail::sym_bases(m, 0, cls->second, cur, basis);
    else
      detail::alt_bases(m, 0, cls->second, cur, basis);
    std::map<GlWeight, long long> next;
    for (const auto& [x, c] : dist)
      for (const auto& b : basis) {
        GlWeight y(x);
        for (std::size_t t = 0; t < y.size(); ++t) y[t] += b[t];
        next[y] += c;
      }
    dist = std::move(next);
  }
  return dist;
}

/// Multiplicity of V_mu in the tensor product from weight multiplicities:
/// sum over w in S_m of sgn(w) dim V[mu + rho - w(rho)].
inline long long weyl_tensor_multiplicity(const std::vector<GlWeight>& lambdas, const GlWeight& mu, int m) {
  if (static_cast<int>(mu.size()) != m) throw std::invalid_argument("weyl_tensor_multiplicity: mu does not have m parts");
  if (!is_dominant(mu)) return 0;
  const auto dist = tensor_weight_multiplicities(lambdas, m);
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  long long total = 0;
  do {
    int inversions = 0;
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) inversions += perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)];
    GlWeight nu(mu);
    // rho = (m-1, ..., 0); (w rho)_t = rho_{w^{-1}(t)}, summed over all w anyway
    for (int t = 0; t < m; ++t) nu[static_cast<std::size_t>(t)] += (m - 1 - t) - (m - 1 - perm[static_cast<std::size_t>(t)]);
    auto it = dist.find(nu);
    if (it != dist.end()) total += (inversions % 2 ? -1 : 1) * it->second;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// dim Inv(V_{lambda^1} ⊗ ... ⊗ V_{lambda^n}) for sl_m, i.e. |RT_m(delta, gamma)|,
/// by the chain-counting dynamic program.
inline long long invariant_dimension(const OrientationString& delta, const ContentVector& gamma, int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  return count_rectangular(m, delta, gamma);
}

/// The same dimension from weight multiplicities alone (no strips involved).
inline long long weyl_invariant_dimension(const OrientationString& delta, const ContentVector& gamma, int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  const int size = total(gamma);
  if (size % m != 0) return 0;
  return weyl_tensor_multiplicity(sym_alt_weights(delta, gamma, m), GlWeight(static_cast<std::size_t>(m), size / m), m);
}

/// Multiplicity of V_mu in the ordered tensor product of sym-alt weights,
/// by the iterated Pieri rule.
inline long long pieri_tensor_chain(const std::vector<GlWeight>& lambdas, const GlWeight& mu, int m) {
  std::vector<Orient> letters;
  ContentVector gamma;
  for (const auto& w : lambdas) {
    if (static_cast<int>(w.size()) != m) throw std::invalid_argument("pieri_tensor_chain: weight does not have m parts");
    auto cls = classify_sym_alt(w);
    if (!cls) throw std::invalid_argument("pieri_tensor_chain: weight is not sym-alt");
    letters.push_back(cls->first.value_or(Orient::H));
    gamma.push_back(cls->second);
  }
  if (!is_dominant(mu) || (!mu.empty() && mu.back() < 0)) return 0;
  return count_chains(m, OrientationString(std::move(letters)), gamma, to_partition(mu));
}

/// Basis of one weight space of a tensor product: tuples of factor basis
/// indices, with a mixed-radix key for lookup.
struct WeightSpace {
  GlWeight weight;
  std::vector<std::vector<int>> tuples;
  std::vector<std::uint64_t> keys;
  std::unordered_map<std::uint64_t, int> index;

  std::size_t dim() const { return tuples.size(); }
  int find(std::uint64_t key) const {
    auto it = index.find(key);
    return it == index.end() ? -1 : it->second;
  }
};

class FusionTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// V_{lambda^1}^{z_1} ⊗ ... ⊗ V_{lambda^n}^{z_n} for sl_m[t].  Rational
/// points are scaled by a common denominator D; f ⊗ p(t) for p of degree a
/// then acts as D^a times the true operator, which leaves every span
/// unchanged.
class EvaluationModule {
 public:
  EvaluationModule(std::vector<Representation> factors, const std::vector<Rational>& points)
      : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("evaluation module needs at least one factor");
    if (points.size() != factors_.size()) throw std::invalid_argument("need one evaluation point per factor");
    for (std::size_t i = 0; i < points.size(); ++i)
      for (std::size_t j = i + 1; j < points.size(); ++j)
        if (points[i] == points[j]) throw std::invalid_argument("evaluation points must be pairwise distinct");
    m_ = factors_.front().m;
    BigInt denom = 1;
    for (const auto& z : points) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), z.get_den_mpz_t());
    for (const auto& z : points) {
      Rational s = z * denom;
      points_.push_back(s.get_num());
    }
    radix_.assign(factors_.size(), 1);
    unsigned __int128 r = 1;
    for (std::size_t j = factors_.size(); j-- > 0;) {
      radix_[j] = static_cast<std::uint64_t>(r);
      r *= static_cast<unsigned>(std::max(factors_[j].dim, 1));
      if (r > (static_cast<unsigned __int128>(1) << 63)) throw FusionTooLarge("tensor product too large to index");
    }
    // reach[j] = weights of factors j..n-1
    reach_.resize(factors_.size() + 1);
    reach_.back().insert(GlWeight(static_cast<std::size_t>(m_), 0));
    for (std::size_t j = factors_.size(); j-- > 0;)
      for (const auto& w : factors_[j].weight_of_basis)
        for (const auto& x : reach_[j + 1]) {
          GlWeight y(x);
          for (std::size_t t = 0; t < y.size(); ++t) y[t] += w[t];
          reach_[j].insert(std::move(y));
        }
  }

  int m() const { return m_; }
  std::size_t size() const { return factors_.size(); }
  const std::vector<Representation>& factors() const { return factors_; }
  const std::vector<BigInt>& scaled_points() const { return points_; }

  GlWeight highest_weight() const {
    GlWeight w(static_cast<std::size_t>(m_), 0);
    for (const auto& f : factors_) {
      const GlWeight h = f.highest_weight();
      for (std::size_t t = 0; t < w.size(); ++t) w[t] += h[t];
    }
    return w;
  }

  /// All weights of the tensor product.
  const std::set<GlWeight>& weights() const { return reach_.front(); }
  bool has_weight(const GlWeight& w) const { return reach_.front().count(w) != 0; }

  /// The weight space, built on first use; nullptr if nu is not a weight.
  const WeightSpace* weight_space(const GlWeight& nu) {
    auto it = spaces_.find(nu);
    if (it != spaces_.end()) return it->second.get();
    if (!has_weight(nu)) return nullptr;
    auto ws = std::make_unique<WeightSpace>();
    ws->weight = nu;
    std::vector<int> cur(factors_.size(), 0);
    GlWeight rem(nu);
    fill_space(*ws, 0, rem, cur, 0);
    if (max_dim_ && ws->dim() > max_dim_) throw FusionTooLarge("weight space dimension exceeds the configured cap");
    return spaces_.emplace(nu, std::move(ws)).first->second.get();
  }

  void set_max_weight_space_dim(std::size_t cap) { max_dim_ = cap; }

  /// v_1 ⊗ ... ⊗ v_n as a vector of the highest weight space.
  SparseVector cyclic_vector() {
    const WeightSpace* ws = weight_space(highest_weight());
    return {{static_cast<std::size_t>(ws->find(0)), BigInt(1)}};
  }

  /// (f_i ⊗ p_a(t)) v with p_a the a-th Newton polynomial of the points
  /// (monic of degree a, zero at z_0..z_{a-1}); i 1-based, v in `from`,
  /// result in `to` (weight from - alpha_i).  p_a acts as zero for a >= n.
  SparseVector lower(int i, int a, const WeightSpace& from, const SparseVector& v, const WeightSpace& to) const {
    return apply(i, a, from, v, to, /*raising=*/false);
  }
  /// e_i v (degree zero), result in `to` (weight from + alpha_i).
  SparseVector raise(int i, const WeightSpace& from, const SparseVector& v, const WeightSpace& to) const {
    return apply(i, 0, from, v, to, /*raising=*/true);
  }

 private:
  void fill_space(WeightSpace& ws, std::size_t j, GlWeight& rem, std::vector<int>& cur, std::uint64_t key) {
    if (j == factors_.size()) {
      ws.index.emplace(key, static_cast<int>(ws.tuples.size()));
      ws.tuples.push_back(cur);
      ws.keys.push_back(key);
      return;
    }
    const auto& fac = factors_[j];
    for (int b = 0; b < fac.dim; ++b) {
      const GlWeight& w = fac.weight_of_basis[static_cast<std::size_t>(b)];
      for (std::size_t t = 0; t < rem.size(); ++t) rem[t] -= w[t];
      if (reach_[j + 1].count(rem)) {
        cur[j] = b;
        fill_space(ws, j + 1, rem, cur, key + static_cast<std::uint64_t>(b) * radix_[j]);
      }
      for (std::size_t t = 0; t < rem.size(); ++t) rem[t] += w[t];
    }
  }

  /// p_a(z_j) for the Newton polynomial p_a(t) = (t - z_0) ... (t - z_{a-1}).
  const BigInt& newton_value(std::size_t j, int a) const {
    auto& pw = powers_[j];
    if (pw.empty()) pw.push_back(BigInt(1));
    while (static_cast<int>(pw.size()) <= a) pw.push_back(pw.back() * (points_[j] - points_[pw.size() - 1]));
    return pw[static_cast<std::size_t>(a)];
  }

  SparseVector apply(int i, int a, const WeightSpace& from, const SparseVector& v, const WeightSpace& to,
                     bool raising) const {
    if (i < 1 || i >= m_) throw std::out_of_range("generator index out of range");
    if (powers_.size() != factors_.size()) powers_.resize(factors_.size());
    std::map<std::size_t, BigInt> acc;
    for (const auto& [idx, coeff] : v) {
      const auto& tuple = from.tuples[idx];
      const std::uint64_t key = from.keys[idx];
      for (std::size_t j = static_cast<std::size_t>(a); j < factors_.size(); ++j) {
        const auto& cols = raising ? factors_[j].e_cols : factors_[j].f_cols;
        const int b = tuple[j];
        for (const auto& [b2, c] : cols[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(b)]) {
          const std::uint64_t key2 = key - static_cast<std::uint64_t>(b) * radix_[j] + static_cast<std::uint64_t>(b2) * radix_[j];
          const int target = to.find(key2);
          if (target < 0) throw std::logic_error("operator image left the target weight space");
          BigInt term = coeff * c;
          if (a > 0) term *= newton_value(j, a);
          acc[static_cast<std::size_t>(target)] += term;
        }
      }
    }
    SparseVector out;
    for (auto& [idx, x] : acc)
      if (sgn(x) != 0) out.emplace_back(idx, std::move(x));
    return out;
  }

  std::vector<Representation> factors_;
  int m_ = 0;
  std::vector<BigInt> points_;
  std::vector<std::uint64_t> radix_;
  std::vector<std::set<GlWeight>> reach_;
  std::map<GlWeight, std::unique_ptr<WeightSpace>> spaces_;
  std::size_t max_dim_ = 0;
  mutable std::vector<std::vector<BigInt>> powers_;
};

struct FusionOptions {
  std::optional<std::vector<Rational>> points;  // default 0, 1, ..., n-1
  std::size_t max_weight_space_dim = 0;        // 0 = no cap
  // Ranks are computed over F_prime unless exact is set; exact rational
  // elimination is much slower on large instances.
  bool exact = false;
  std::uint64_t prime = ModEchelon::kDefaultPrime;
};

struct FusionResult {
  GradedPoly kostka;
  std::vector<long long> invariant_dims;  // dim(F^{<=k} ∩ Inv) for k = 0..last level
  std::vector<long long> filtration_dims;  // dim F^{<=k} in the target weight space
  std::size_t largest_weight_space = 0;
};

inline std::vector<Rational> default_points(std::size_t n) {
  std::vector<Rational> z;
  for (std::size_t i = 0; i < n; ++i) z.emplace_back(static_cast<long>(i));
  return z;
}

/// Graded multiplicity of the trivial representation in the fusion product
/// of the sym-alt representations of (delta, gamma), target the m-row
/// rectangle.  F^{<=k} in each weight space is generated level by level
/// from lowering operators f_i ⊗ p_a(t) applied to the new vectors of level
/// k - a one weight higher; invariants are the kernel of all e_i on the
/// target weight space.  The Newton polynomials p_a are monic of degree a,
/// so they span the same filtration as the monomials t^a, and they vanish
/// on the module for a >= n.
namespace detail {

template <class Span>
FusionResult fusion_kostka_impl(const OrientationString& delta, const ContentVector& gamma, int m,
                                const FusionOptions& opts, const std::function<Span(std::size_t)>& make_span) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (delta.size() != gamma.size()) throw std::invalid_argument("delta and gamma lengths differ");
  const int total_size = total(gamma);
  if (total_size % m != 0) throw std::invalid_argument("m does not divide |gamma|");
  FusionResult res;
  const long long target = invariant_dimension(delta, gamma, m);
  if (target == 0 || delta.empty()) {
    if (target > 0) res.kostka = IntPoly::constant(1);
    res.invariant_dims = {target};
    return res;
  }
  std::vector<Representation> factors;
  for (std::size_t j = 0; j < delta.size(); ++j) factors.push_back(letter_rep(delta[j], gamma[j], m));
  const auto points = opts.points ? *opts.points : default_points(delta.size());
  EvaluationModule mod(std::move(factors), points);
  mod.set_max_weight_space_dim(opts.max_weight_space_dim);

  const GlWeight top = mod.highest_weight();
  const GlWeight mu(static_cast<std::size_t>(m), total_size / m);
  auto dominates_mu = [&](const GlWeight& w) {
    long long s = 0;
    for (int t = 0; t < m; ++t) {
      s += w[static_cast<std::size_t>(t)] - mu[static_cast<std::size_t>(t)];
      if (s < 0) return false;
    }
    return s == 0;
  };
  auto height = [&](const GlWeight& w) {
    long long h = 0;
    for (int t = 0; t < m; ++t) h += static_cast<long long>(m - t) * w[static_cast<std::size_t>(t)];
    return h;
  };
  std::vector<GlWeight> order;
  for (const auto& w : mod.weights())
    if (dominates_mu(w)) order.push_back(w);
  std::stable_sort(order.begin(), order.end(), [&](const GlWeight& x, const GlWeight& y) { return height(x) > height(y); });
  std::map<GlWeight, int> pos;
  for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[static_cast<std::size_t>(i)]] = i;

  std::vector<const WeightSpace*> spaces;
  std::vector<Span> span;
  for (const auto& w : order) {
    spaces.push_back(mod.weight_space(w));
    span.push_back(make_span(spaces.back()->dim()));
    res.largest_weight_space = std::max(res.largest_weight_space, spaces.back()->dim());
  }
  auto shifted = [&](const GlWeight& w, int i, int sgn_) {
    GlWeight x(w);
    x[static_cast<std::size_t>(i - 1)] += sgn_;
    x[static_cast<std::size_t>(i)] -= sgn_;
    return x;
  };
  // sources[w][i-1] = position of w + alpha_i, or -1
  std::vector<std::vector<int>> sources(order.size(), std::vector<int>(static_cast<std::size_t>(m - 1), -1));
  for (std::size_t p = 0; p < order.size(); ++p)
    for (int i = 1; i < m; ++i) {
      auto it = pos.find(shifted(order[p], i, +1));
      if (it != pos.end()) sources[p][static_cast<std::size_t>(i - 1)] = it->second;
    }

  // invariants: kernel of (e_1, ..., e_{m-1}) on F^{<=k}_mu
  const int mu_pos = pos.at(mu);
  std::vector<std::size_t> offsets;
  std::size_t image_dim = 0;
  for (int i = 1; i < m; ++i) {
    offsets.push_back(image_dim);
    const int s = sources[static_cast<std::size_t>(mu_pos)][static_cast<std::size_t>(i - 1)];
    if (s >= 0) image_dim += spaces[static_cast<std::size_t>(s)]->dim();
  }
  Span image_span = make_span(image_dim);

  std::vector<std::vector<std::vector<SparseVector>>> fresh(order.size());  // fresh[w][k]
  const int top_pos = pos.at(top);
  const int max_power = static_cast<int>(delta.size()) - 1;
  std::vector<long long> kostka_terms;
  long long prev_inv = 0;
  const int level_cap = 64 * (total_size + 1) * static_cast<int>(delta.size());
  for (int k = 0;; ++k) {
    if (k > level_cap) throw std::logic_error("fusion filtration did not reach the invariant dimension");
    for (std::size_t p = 0; p < order.size(); ++p) {
      fresh[p].emplace_back();
      auto& out = fresh[p][static_cast<std::size_t>(k)];
      if (static_cast<int>(p) == top_pos) {
        if (k == 0) {
          SparseVector v = mod.cyclic_vector();
          span[p].insert(v);
          out.push_back(std::move(v));
        }
        continue;
      }
      for (int i = 1; i < m && !span[p].full(); ++i) {
        const int s = sources[p][static_cast<std::size_t>(i - 1)];
        if (s < 0) continue;
        for (int a = 0; a <= std::min(k, max_power) && !span[p].full(); ++a) {
          for (const auto& u : fresh[static_cast<std::size_t>(s)][static_cast<std::size_t>(k - a)]) {
            SparseVector x = mod.lower(i, a, *spaces[static_cast<std::size_t>(s)], u, *spaces[p]);
            if (span[p].insert(x)) out.push_back(std::move(x));
            if (span[p].full()) break;
          }
        }
      }
    }
    for (const auto& u : fresh[static_cast<std::size_t>(mu_pos)][static_cast<std::size_t>(k)]) {
      SparseVector img;
      for (int i = 1; i < m; ++i) {
        const int s = sources[static_cast<std::size_t>(mu_pos)][static_cast<std::size_t>(i - 1)];
        if (s < 0) continue;
        for (auto& [idx, x] : mod.raise(i, *spaces[static_cast<std::size_t>(mu_pos)], u, *spaces[static_cast<std::size_t>(s)]))
          img.emplace_back(idx + offsets[static_cast<std::size_t>(i - 1)], std::move(x));
      }
      image_span.insert(img);
    }
    const long long dim_f = static_cast<long long>(span[static_cast<std::size_t>(mu_pos)].rank());
    const long long inv = dim_f - static_cast<long long>(image_span.rank());
    res.filtration_dims.push_back(dim_f);
    res.invariant_dims.push_back(inv);
    kostka_terms.push_back(inv - prev_inv);
    prev_inv = inv;
    if (inv == target) break;
    if (inv > target) throw std::logic_error("fusion invariants exceed the tableau count");
  }
  res.kostka = IntPoly(std::move(kostka_terms));
  return res;
}

}  // namespace detail

inline FusionResult fusion_kostka_detailed(const OrientationString& delta, const ContentVector& gamma, int m,
                                           const FusionOptions& opts = {}) {
  if (opts.exact)
    return detail::fusion_kostka_impl<ExactEchelon>(delta, gamma, m, opts,
                                                    [](std::size_t d) { return ExactEchelon(d); });
  return detail::fusion_kostka_impl<ModEchelon>(delta, gamma, m, opts,
                                                [&](std::size_t d) { return ModEchelon(d, opts.prime); });
}

inline GradedPoly fusion_kostka(const OrientationString& delta, const ContentVector& gamma, int m,
                                const FusionOptions& opts = {}) {
  return fusion_kostka_detailed(delta, gamma, m, opts).kostka;
}

}  // namespace deltatab
