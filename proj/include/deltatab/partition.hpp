#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace deltatab {

/// Orientation of the strip formed by one letter of a tableau.
enum class Orient : char { H = 'h', V = 'v' };

inline Orient flip(Orient o) { return o == Orient::H ? Orient::V : Orient::H; }

inline char to_char(Orient o) { return static_cast<char>(o); }

/// A weakly decreasing sequence of nonnegative integers.  Trailing zeros are
/// dropped on construction, so equality ignores them.
class Partition {
 public:
  Partition() = default;

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts are not weakly decreasing");
    }
    trim();
  }

  /// Part i (0-based); zero past the last nonzero part.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// Number of nonzero parts.
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  const std::vector<int>& parts() const { return parts_; }

  /// Parts padded with zeros to exactly `len` entries (len must cover length()).
  std::vector<int> padded(std::size_t len) const {
    if (len < parts_.size()) throw std::invalid_argument("partition longer than requested padding");
    std::vector<int> out(parts_);
    out.resize(len, 0);
    return out;
  }

  bool contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (std::size_t i = 0; i < inner.length(); ++i)
      if (inner[i] > parts_[i]) return false;
    return true;
  }

  Partition conjugate() const {
    std::vector<int> out(parts_.empty() ? 0 : parts_.front(), 0);
    for (int p : parts_)
      for (int c = 0; c < p; ++c) ++out[c];
    return Partition(std::move(out));
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  void trim() {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
  os << '(';
  for (std::size_t i = 0; i < p.length(); ++i) os << (i ? "," : "") << p[i];
  return os << ')';
}

/// The orientation letters h/v of a tableau alphabet; rotation moves the
/// first letter to the back.
class OrientationString {
 public:
  OrientationString() = default;
  OrientationString(std::initializer_list<Orient> letters) : letters_(letters) {}
  explicit OrientationString(std::vector<Orient> letters) : letters_(std::move(letters)) {}

  /// Parses a case-insensitive string over {h, v}.
  static OrientationString parse(std::string_view text) {
    std::vector<Orient> out;
    for (char c : text) {
      if (c == 'h' || c == 'H')
        out.push_back(Orient::H);
      else if (c == 'v' || c == 'V')
        out.push_back(Orient::V);
      else
        throw std::invalid_argument(std::string("orientation letter must be h or v, got '") + c + "'");
    }
    return OrientationString(std::move(out));
  }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Letter for alphabet value i (1-based, as in tableau entries).
  Orient at(int letter) const { return letters_.at(static_cast<std::size_t>(letter - 1)); }
  Orient operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Orient>& letters() const { return letters_; }

  OrientationString rotated(std::size_t times = 1) const {
    if (letters_.empty()) return *this;
    std::vector<Orient> out(letters_);
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(times % out.size()), out.end());
    return OrientationString(std::move(out));
  }

  /// Swaps letters i and i+1 (1-based).
  OrientationString swapped(int i) const {
    std::vector<Orient> out(letters_);
    std::swap(out.at(static_cast<std::size_t>(i - 1)), out.at(static_cast<std::size_t>(i)));
    return OrientationString(std::move(out));
  }

  OrientationString flipped() const {
    std::vector<Orient> out(letters_);
    for (auto& o : out) o = flip(o);
    return OrientationString(std::move(out));
  }

  std::string str() const {
    std::string s;
    for (auto o : letters_) s.push_back(to_char(o));
    return s;
  }

  friend bool operator==(const OrientationString&, const OrientationString&) = default;
  friend auto operator<=>(const OrientationString&, const OrientationString&) = default;

 private:
  std::vector<Orient> letters_;
};

/// gamma: number of cells carrying each letter.
using ContentVector = std::vector<int>;

inline int total(const ContentVector& gamma) { return std::accumulate(gamma.begin(), gamma.end(), 0); }

inline ContentVector rotated(const ContentVector& gamma, std::size_t times = 1) {
  ContentVector out(gamma);
  if (!out.empty())
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(times % out.size()), out.end());
  return out;
}

/// True iff outer/inner has at most one cell in every column (H) or row (V).
inline bool is_strip(const Partition& inner, const Partition& outer, Orient orient) {
  if (!outer.contains(inner)) return false;
  if (orient == Orient::H) {
    // at most one cell per column <=> outer_{i+1} <= inner_i
    for (std::size_t i = 0; i + 1 < outer.length(); ++i)
      if (outer[i + 1] > inner[i]) return false;
    return true;
  }
  for (std::size_t i = 0; i < outer.length(); ++i)
    if (outer[i] - inner[i] > 1) return false;
  return true;
}

namespace detail {

inline void horizontal_extensions(const Partition& lambda, int rows, std::size_t row, int remaining,
                                  std::vector<int>& cur, std::vector<Partition>& out) {
  if (row == static_cast<std::size_t>(rows)) {
    if (remaining == 0) out.emplace_back(cur);
    return;
  }
  const int lo = lambda[row];
  const int hi = row == 0 ? lo + remaining : std::min(lo + remaining, lambda[row - 1]);
  for (int v = lo; v <= hi; ++v) {
    cur[row] = v;
    horizontal_extensions(lambda, rows, row + 1, remaining - (v - lo), cur, out);
  }
}

inline void vertical_extensions(const Partition& lambda, int rows, std::size_t row, int remaining,
                                std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    for (std::size_t r = row; r < static_cast<std::size_t>(rows); ++r) cur[r] = lambda[r];
    out.emplace_back(cur);
    return;
  }
  if (row == static_cast<std::size_t>(rows)) return;
  for (int add = 0; add <= 1; ++add) {
    const int v = lambda[row] + add;
    if (row > 0 && v > cur[row - 1]) continue;
    cur[row] = v;
    vertical_extensions(lambda, rows, row + 1, remaining - add, cur, out);
  }
}

}  // namespace detail

/// All partitions mu containing lambda with |mu| - |lambda| = size such that
/// mu/lambda is a horizontal (H) or vertical (V) strip and mu has at most
/// max_rows rows, in lexicographic order.
inline std::vector<Partition> add_strip(const Partition& lambda, int size, Orient orient, int max_rows) {
  if (size < 0) throw std::invalid_argument("strip size must be nonnegative");
  if (static_cast<int>(lambda.length()) > max_rows)
    throw std::invalid_argument("partition has more rows than allowed");
  std::vector<Partition> out;
  std::vector<int> cur(static_cast<std::size_t>(max_rows), 0);
  if (orient == Orient::H)
    detail::horizontal_extensions(lambda, max_rows, 0, size, cur, out);
  else
    detail::vertical_extensions(lambda, max_rows, 0, size, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

/// m x w rectangle.
inline Partition rectangle(int rows, int width) {
  return Partition(std::vector<int>(static_cast<std::size_t>(std::max(rows, 0)), std::max(width, 0)));
}

}  // namespace deltatab
