#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace deltatab {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Sparse integer vector: (index, value) pairs with distinct indices and
/// nonzero values.
using SparseVector = std::vector<std::pair<std::size_t, BigInt>>;

/// Subspace of Q^dim in fraction-free reduced row echelon form: integer rows
/// R_i with pivot columns q_i and one common denominator D such that
/// R_i[q_j] = D if i = j and 0 otherwise.  D is a minor of the inserted
/// vectors, so every update divides exactly and no rationals are formed.
class ExactEchelon {
 public:
  explicit ExactEchelon(std::size_t dim) : dim_(dim), is_pivot_(dim, 0), row_of_pivot_(dim, -1), free_columns_(dim) {
    for (std::size_t c = 0; c < dim; ++c) free_columns_[c] = c;
  }

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == dim_; }

  /// Adds v to the span; returns true iff v was not already in it.
  bool insert(const SparseVector& v) {
    if (full() || v.empty()) return false;
    std::vector<BigInt> residual;
    if (!reduce(v, residual)) return false;
    add_row(std::move(residual));
    return true;
  }

  bool insert(const std::vector<BigInt>& v) { return insert(to_sparse(v)); }

  /// True iff v lies in the span.
  bool contains(const SparseVector& v) const {
    if (v.empty() || full()) return true;
    std::vector<BigInt> residual;
    return !reduce(v, residual);
  }

 private:
  static SparseVector to_sparse(const std::vector<BigInt>& v) {
    SparseVector out;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (sgn(v[i]) != 0) out.emplace_back(i, v[i]);
    return out;
  }

  // residual = D v - sum_i v[q_i] R_i; it vanishes iff v is in the span.
  bool reduce(const SparseVector& v, std::vector<BigInt>& residual) const {
    residual.assign(dim_, 0);
    for (const auto& [i, x] : v) {
      if (i >= dim_) throw std::out_of_range("vector index beyond echelon dimension");
      if (is_pivot_[i]) continue;  // cancels exactly against its row
      mpz_addmul(residual[i].get_mpz_t(), denom_.get_mpz_t(), x.get_mpz_t());
    }
    for (const auto& [i, x] : v) {
      if (!is_pivot_[i]) continue;
      const auto& row = rows_[static_cast<std::size_t>(row_of_pivot_[i])];
      for (std::size_t c : free_columns_)
        if (sgn(row[c]) != 0) mpz_submul(residual[c].get_mpz_t(), x.get_mpz_t(), row[c].get_mpz_t());
    }
    for (std::size_t c : free_columns_)
      if (sgn(residual[c]) != 0) return true;
    return false;
  }

  void add_row(std::vector<BigInt> residual) {
    std::size_t q = dim_;
    for (std::size_t c : free_columns_)
      if (sgn(residual[c]) != 0) {
        q = c;
        break;
      }
    const BigInt g = residual[q];
    // old rows: (g R_i - R_i[q] residual) / D, new common denominator g
    BigInt t;
    for (auto& row : rows_) {
      const BigInt rq = row[q];
      for (std::size_t c : free_columns_) {
        t = g * row[c];
        if (sgn(rq) != 0 && sgn(residual[c]) != 0) t -= rq * residual[c];
        if (!mpz_divisible_p(t.get_mpz_t(), denom_.get_mpz_t()))
          throw std::logic_error("fraction-free update did not divide exactly");
        mpz_divexact(row[c].get_mpz_t(), t.get_mpz_t(), denom_.get_mpz_t());
      }
    }
    for (auto& row : rows_)
      for (std::size_t j = 0; j < pivots_.size(); ++j) row[pivots_[j]] = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i][pivots_[i]] = g;
    is_pivot_[q] = 1;
    free_columns_.erase(std::find(free_columns_.begin(), free_columns_.end(), q));
    row_of_pivot_[q] = static_cast<long>(rows_.size());
    pivots_.push_back(q);
    rows_.push_back(std::move(residual));
    denom_ = g;
  }

  std::size_t dim_;
  BigInt denom_ = 1;
  std::vector<char> is_pivot_;
  std::vector<long> row_of_pivot_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> free_columns_;  // non-pivot columns, increasing
  std::vector<std::vector<BigInt>> rows_;
};

/// Subspace of F_p^dim in reduced row echelon form with monic pivots.
/// Ranks over F_p never exceed ranks over Q and agree with them unless p
/// divides one of finitely many minors.
class ModEchelon {
 public:
  static constexpr std::uint64_t kDefaultPrime = 2305843009213693951ULL;  // 2^61 - 1

  explicit ModEchelon(std::size_t dim, std::uint64_t prime = kDefaultPrime)
      : dim_(dim), p_(prime), row_of_pivot_(dim, -1) {
    if (prime < 2) throw std::invalid_argument("modulus must be a prime");
  }

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == dim_; }
  std::uint64_t prime() const { return p_; }

  bool insert(const SparseVector& v) {
    if (full() || v.empty()) return false;
    std::vector<std::uint64_t> r = reduce(v);
    std::size_t q = dim_;
    for (std::size_t c = 0; c < dim_; ++c)
      if (r[c] != 0) {
        q = c;
        break;
      }
    if (q == dim_) return false;
    const std::uint64_t inv = pow(r[q], p_ - 2);
    for (auto& x : r) x = mul(x, inv);
    for (auto& row : rows_) {
      const std::uint64_t f = row[q];
      if (f == 0) continue;
      for (std::size_t c = q; c < dim_; ++c)
        if (r[c] != 0) row[c] = sub(row[c], mul(f, r[c]));
    }
    row_of_pivot_[q] = static_cast<long>(rows_.size());
    rows_.push_back(std::move(r));
    return true;
  }

  bool insert(const std::vector<BigInt>& v) {
    SparseVector s;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (sgn(v[i]) != 0) s.emplace_back(i, v[i]);
    return insert(s);
  }

  bool contains(const SparseVector& v) const {
    if (v.empty() || full()) return true;
    for (std::uint64_t x : reduce(v))
      if (x != 0) return false;
    return true;
  }

 private:
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + (p_ - b); }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mul(a, a))
      if (e & 1) r = mul(r, a);
    return r;
  }
  std::uint64_t residue(const BigInt& x) const {
    static_assert(sizeof(unsigned long) == 8, "needs 64-bit unsigned long");
    return mpz_fdiv_ui(x.get_mpz_t(), p_);
  }

  // v minus its pivot components times the pivot rows
  std::vector<std::uint64_t> reduce(const SparseVector& v) const {
    std::vector<std::uint64_t> r(dim_, 0);
    for (const auto& [i, x] : v) {
      if (i >= dim_) throw std::out_of_range("vector index beyond echelon dimension");
      r[i] = residue(x);
    }
    for (const auto& [i, x] : v) {
      const long ri = row_of_pivot_[i];
      if (ri < 0) continue;
      const std::uint64_t f = residue(x);
      if (f == 0) continue;
      const auto& row = rows_[static_cast<std::size_t>(ri)];
      for (std::size_t c = 0; c < dim_; ++c)
        if (row[c] != 0 && row_of_pivot_[c] < 0) r[c] = sub(r[c], mul(f, row[c]));
      r[i] = 0;
    }
    return r;
  }

  std::size_t dim_;
  std::uint64_t p_;
  std::vector<long> row_of_pivot_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

/// Exact rank of a list of integer rows.
inline std::size_t exact_rank(const std::vector<std::vector<BigInt>>& rows) {
  if (rows.empty()) return 0;
  ExactEchelon e(rows.front().size());
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

}  // namespace deltatab
