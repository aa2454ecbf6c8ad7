#pragma once

/**
 * @file matrix.hpp
 * @brief (0,1)-matrices with bit-packed rows and the pure kernels on them.
 *
 * Cell (i, j) of a BinaryMatrix lives in bit (j % 64) of word (j / 64) of
 * row i. All indices are 0-based. Every function in this header is pure: it
 * takes matrices by const reference and returns new values.
 */

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bruhat/errors.hpp"

namespace bruhat {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

class BinaryMatrix {
 public:
  static constexpr std::size_t kMaxDimension = 1024;

  /// All-zero m x n matrix.
  BinaryMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_((cols + kWordBits - 1) / kWordBits) {
    if (rows == 0 || cols == 0 || rows > kMaxDimension || cols > kMaxDimension) {
      throw SizeMismatch("matrix dimensions must lie in [1, " + std::to_string(kMaxDimension) +
                         "], got " + std::to_string(rows) + "x" + std::to_string(cols));
    }
    bits_.assign(rows_ * words_, 0);
  }

  /// Builds a matrix from rows written as '0'/'1' strings of equal length.
  static BinaryMatrix from_rows(std::span<const std::string_view> rows) {
    if (rows.empty()) throw SizeMismatch("matrix needs at least one row");
    BinaryMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) {
        throw SizeMismatch("row " + std::to_string(i) + " has length " +
                           std::to_string(rows[i].size()) + ", expected " +
                           std::to_string(m.cols_));
      }
      for (std::size_t j = 0; j < m.cols_; ++j) {
        const char c = rows[i][j];
        if (c != '0' && c != '1') {
          throw ParseError(std::string("invalid matrix cell '") + c + "'");
        }
        m.set(i, j, c == '1');
      }
    }
    return m;
  }

  static BinaryMatrix from_rows(std::initializer_list<std::string_view> rows) {
    return from_rows(std::span<const std::string_view>(rows.begin(), rows.size()));
  }

  static BinaryMatrix from_rows(const std::vector<std::string>& rows) {
    std::vector<std::string_view> views(rows.begin(), rows.end());
    return from_rows(std::span<const std::string_view>(views));
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] std::size_t words_per_row() const noexcept { return words_; }

  [[nodiscard]] bool get(std::size_t i, std::size_t j) const noexcept {
    return (bits_[i * words_ + j / kWordBits] >> (j % kWordBits)) & 1U;
  }

  void set(std::size_t i, std::size_t j, bool value) noexcept {
    Word& w = bits_[i * words_ + j / kWordBits];
    const Word mask = Word{1} << (j % kWordBits);
    w = value ? (w | mask) : (w & ~mask);
  }

  void flip(std::size_t i, std::size_t j) noexcept {
    bits_[i * words_ + j / kWordBits] ^= Word{1} << (j % kWordBits);
  }

  [[nodiscard]] std::span<const Word> row(std::size_t i) const noexcept {
    return {bits_.data() + i * words_, words_};
  }

  [[nodiscard]] std::size_t row_ones(std::size_t i) const noexcept {
    std::size_t total = 0;
    for (Word w : row(i)) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  [[nodiscard]] std::size_t col_ones(std::size_t j) const noexcept {
    std::size_t total = 0;
    for (std::size_t i = 0; i < rows_; ++i) total += get(i, j) ? 1 : 0;
    return total;
  }

  [[nodiscard]] std::size_t ones() const noexcept {
    std::size_t total = 0;
    for (Word w : bits_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  [[nodiscard]] std::string row_string(std::size_t i) const {
    std::string s(cols_, '0');
    for (std::size_t j = 0; j < cols_; ++j) {
      if (get(i, j)) s[j] = '1';
    }
    return s;
  }

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t words_;
  std::vector<Word> bits_;
};

/// Row and column sum vectors of a class A(R,S).
struct MarginPair {
  std::vector<std::size_t> row_sums;
  std::vector<std::size_t> col_sums;

  [[nodiscard]] bool totals_agree() const {
    return std::accumulate(row_sums.begin(), row_sums.end(), std::size_t{0}) ==
           std::accumulate(col_sums.begin(), col_sums.end(), std::size_t{0});
  }

  /// A(n,k): every row and column sums to k.
  static MarginPair uniform(std::size_t n, std::size_t k) {
    return {std::vector<std::size_t>(n, k), std::vector<std::size_t>(n, k)};
  }

  friend bool operator==(const MarginPair&, const MarginPair&) = default;
};

[[nodiscard]] inline MarginPair margins_of(const BinaryMatrix& a) {
  MarginPair mp;
  mp.row_sums.resize(a.rows());
  mp.col_sums.assign(a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    mp.row_sums[i] = a.row_ones(i);
    for (std::size_t j = 0; j < a.cols(); ++j) mp.col_sums[j] += a.get(i, j) ? 1 : 0;
  }
  return mp;
}

/// The table of leading-submatrix sums: entry (k, l) counts the ones in
/// rows 0..k and columns 0..l.
struct CumulativeTable {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint32_t> values;

  [[nodiscard]] std::uint32_t at(std::size_t k, std::size_t l) const noexcept {
    return values[k * cols + l];
  }

  friend bool operator==(const CumulativeTable&, const CumulativeTable&) = default;
};

[[nodiscard]] inline CumulativeTable cumulative_sums(const BinaryMatrix& a) {
  CumulativeTable t{a.rows(), a.cols(), std::vector<std::uint32_t>(a.rows() * a.cols())};
  for (std::size_t k = 0; k < a.rows(); ++k) {
    std::uint32_t running = 0;
    for (std::size_t l = 0; l < a.cols(); ++l) {
      running += a.get(k, l) ? 1U : 0U;
      t.values[k * t.cols + l] = running + (k > 0 ? t.values[(k - 1) * t.cols + l] : 0U);
    }
  }
  return t;
}

/// True when every entry of `lhs` is >= the matching entry of `rhs`.
[[nodiscard]] inline bool dominates(const CumulativeTable& lhs, const CumulativeTable& rhs) noexcept {
  for (std::size_t p = 0; p < lhs.values.size(); ++p) {
    if (lhs.values[p] < rhs.values[p]) return false;
  }
  return true;
}

/// Number of inversions: unordered pairs of ones at (i, j), (k, l) with
/// (i - k)(j - l) < 0. One sweep keeps, per column, the count of ones in the
/// rows above; a one at (i, j) pairs with every earlier one strictly right of j.
[[nodiscard]] inline std::uint64_t inversion_count(const BinaryMatrix& a) {
  std::vector<std::uint64_t> above(a.cols(), 0);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::uint64_t right = 0;
    for (std::size_t j = a.cols(); j-- > 0;) {
      if (a.get(i, j)) total += right;
      right += above[j];
    }
    for (std::size_t j = 0; j < a.cols(); ++j) above[j] += a.get(i, j) ? 1 : 0;
  }
  return total;
}

enum class Direction { ItoL, LtoI };

/// A 2x2 position quadruple with i < i2, j < j2. ItoL replaces I2 = [1 0; 0 1]
/// by L2 = [0 1; 1 0]; LtoI does the reverse.
struct Interchange {
  std::size_t i = 0;
  std::size_t i2 = 0;
  std::size_t j = 0;
  std::size_t j2 = 0;
  Direction direction = Direction::ItoL;

  friend bool operator==(const Interchange&, const Interchange&) = default;
  friend auto operator<=>(const Interchange&, const Interchange&) = default;
};

[[nodiscard]] inline bool well_formed(const BinaryMatrix& a, const Interchange& t) noexcept {
  return t.i < t.i2 && t.j < t.j2 && t.i2 < a.rows() && t.j2 < a.cols();
}

/// True when the addressed submatrix is the source pattern of t's direction.
[[nodiscard]] inline bool matches_source(const BinaryMatrix& a, const Interchange& t) noexcept {
  if (!well_formed(a, t)) return false;
  const bool diag = t.direction == Direction::ItoL;
  return a.get(t.i, t.j) == diag && a.get(t.i2, t.j2) == diag && a.get(t.i, t.j2) == !diag &&
         a.get(t.i2, t.j) == !diag;
}

namespace detail {

template <class F>
void for_each_bit(Word w, std::size_t base, F&& f) {
  while (w != 0) {
    f(base + static_cast<std::size_t>(std::countr_zero(w)));
    w &= w - 1;
  }
}

}  // namespace detail

/// Every interchange of the requested direction, sorted by (i, i2, j, j2).
[[nodiscard]] inline std::vector<Interchange> find_interchanges(const BinaryMatrix& a,
                                                                Direction direction) {
  std::vector<Interchange> out;
  std::vector<std::size_t> top_only;
  std::vector<std::size_t> bottom_only;
  for (std::size_t i = 0; i + 1 < a.rows(); ++i) {
    const auto ri = a.row(i);
    for (std::size_t i2 = i + 1; i2 < a.rows(); ++i2) {
      const auto r2 = a.row(i2);
      top_only.clear();
      bottom_only.clear();
      for (std::size_t w = 0; w < a.words_per_row(); ++w) {
        detail::for_each_bit(ri[w] & ~r2[w], w * kWordBits,
                             [&](std::size_t j) { top_only.push_back(j); });
        detail::for_each_bit(r2[w] & ~ri[w], w * kWordBits,
                             [&](std::size_t j) { bottom_only.push_back(j); });
      }
      // ItoL: (i,j) top-only and (i2,j2) bottom-only. LtoI swaps the roles.
      const auto& left = direction == Direction::ItoL ? top_only : bottom_only;
      const auto& right = direction == Direction::ItoL ? bottom_only : top_only;
      for (std::size_t j : left) {
        for (auto it = std::upper_bound(right.begin(), right.end(), j); it != right.end(); ++it) {
          out.push_back({i, i2, j, *it, direction});
        }
      }
    }
  }
  return out;
}

[[nodiscard]] inline BinaryMatrix apply_interchange(const BinaryMatrix& a, const Interchange& t) {
  if (!matches_source(a, t)) {
    throw PatternMismatch("interchange (" + std::to_string(t.i) + "," + std::to_string(t.i2) +
                          "," + std::to_string(t.j) + "," + std::to_string(t.j2) +
                          ") does not address its source pattern");
  }
  BinaryMatrix out = a;
  out.flip(t.i, t.j);
  out.flip(t.i, t.j2);
  out.flip(t.i2, t.j);
  out.flip(t.i2, t.j2);
  return out;
}

namespace detail {

/// Ones of row `r` in the open column interval (lo, hi).
inline std::size_t ones_between(const BinaryMatrix& a, std::size_t r, std::size_t lo,
                                std::size_t hi) {
  std::size_t total = 0;
  for (std::size_t c = lo + 1; c < hi; ++c) total += a.get(r, c) ? 1 : 0;
  return total;
}

}  // namespace detail

/// Change in inversion count caused by an ItoL interchange:
/// 1 + 2a + b + c + d + e, where a counts ones strictly inside the rectangle,
/// b and e the ones strictly between the corners on rows i and i2, and c and d
/// the ones strictly between the corners on columns j and j2.
[[nodiscard]] inline std::uint64_t interchange_increment(const BinaryMatrix& a,
                                                         const Interchange& t) {
  if (t.direction != Direction::ItoL || !matches_source(a, t)) {
    throw PatternMismatch("interchange_increment needs a valid ItoL interchange");
  }
  std::uint64_t inner = 0;
  std::uint64_t col_j = 0;
  std::uint64_t col_j2 = 0;
  for (std::size_t r = t.i + 1; r < t.i2; ++r) {
    inner += detail::ones_between(a, r, t.j, t.j2);
    col_j += a.get(r, t.j) ? 1 : 0;
    col_j2 += a.get(r, t.j2) ? 1 : 0;
  }
  const std::uint64_t row_i = detail::ones_between(a, t.i, t.j, t.j2);
  const std::uint64_t row_i2 = detail::ones_between(a, t.i2, t.j, t.j2);
  return 1 + 2 * inner + row_i + col_j + col_j2 + row_i2;
}

/// The ItoL interchange turning `from` into `to`, if they differ by exactly one.
[[nodiscard]] inline std::optional<Interchange> interchange_between(const BinaryMatrix& from,
                                                                    const BinaryMatrix& to) {
  if (from.rows() != to.rows() || from.cols() != to.cols()) return std::nullopt;
  std::vector<std::pair<std::size_t, std::size_t>> diff;
  for (std::size_t i = 0; i < from.rows(); ++i) {
    for (std::size_t j = 0; j < from.cols(); ++j) {
      if (from.get(i, j) != to.get(i, j)) {
        if (diff.size() == 4) return std::nullopt;
        diff.emplace_back(i, j);
      }
    }
  }
  if (diff.size() != 4) return std::nullopt;
  // Corners arrive row-major: (i,j), (i,j2), (i2,j), (i2,j2).
  const Interchange t{diff[0].first, diff[3].first, diff[0].second, diff[3].second,
                      Direction::ItoL};
  if (diff[1] != std::pair{t.i, t.j2} || diff[2] != std::pair{t.i2, t.j}) return std::nullopt;
  if (!matches_source(from, t)) return std::nullopt;
  return t;
}

/// Block-diagonal assembly.
[[nodiscard]] inline BinaryMatrix direct_sum(std::span<const BinaryMatrix> blocks) {
  if (blocks.empty()) throw SizeMismatch("direct_sum needs at least one block");
  std::size_t rows = 0;
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  BinaryMatrix out(rows, cols);
  std::size_t r0 = 0;
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b.get(i, j)) out.set(r0 + i, c0 + j, true);
      }
    }
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

[[nodiscard]] inline BinaryMatrix direct_sum(std::initializer_list<BinaryMatrix> blocks) {
  return direct_sum(std::span<const BinaryMatrix>(blocks.begin(), blocks.size()));
}

/// Column j goes to column n-1-j.
[[nodiscard]] inline BinaryMatrix reverse_columns(const BinaryMatrix& a) {
  BinaryMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.get(i, j)) out.set(i, a.cols() - 1 - j, true);
    }
  }
  return out;
}

namespace detail {

inline void check_window(std::size_t extent, std::span<const std::size_t> idx, const char* what) {
  for (std::size_t p = 0; p < idx.size(); ++p) {
    if (idx[p] >= extent) {
      throw IndexOutOfRange(std::string(what) + " index " + std::to_string(idx[p]) +
                            " out of range " + std::to_string(extent));
    }
    if (p > 0 && idx[p] <= idx[p - 1]) {
      throw IndexOutOfRange(std::string(what) + " indices must be strictly increasing");
    }
  }
}

}  // namespace detail

/// Submatrix at the given (strictly increasing) rows and columns.
[[nodiscard]] inline BinaryMatrix extract(const BinaryMatrix& host, std::span<const std::size_t> rows,
                                          std::span<const std::size_t> cols) {
  detail::check_window(host.rows(), rows, "row");
  detail::check_window(host.cols(), cols, "column");
  BinaryMatrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out.set(r, c, host.get(rows[r], cols[c]));
  }
  return out;
}

/// `host` with the submatrix at (rows, cols) overwritten by `sub`.
[[nodiscard]] inline BinaryMatrix embed(const BinaryMatrix& host, std::span<const std::size_t> rows,
                                        std::span<const std::size_t> cols, const BinaryMatrix& sub) {
  if (rows.size() != sub.rows() || cols.size() != sub.cols()) {
    throw SizeMismatch("embed window is " + std::to_string(rows.size()) + "x" +
                       std::to_string(cols.size()) + " but submatrix is " +
                       std::to_string(sub.rows()) + "x" + std::to_string(sub.cols()));
  }
  detail::check_window(host.rows(), rows, "row");
  detail::check_window(host.cols(), cols, "column");
  BinaryMatrix out = host;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out.set(rows[r], cols[c], sub.get(r, c));
  }
  return out;
}

/// Injective byte encoding: 16-bit big-endian rows and cols, then the cells in
/// row-major order packed most-significant-bit first. Within one shape, byte
/// order of keys equals lexicographic order of the row strings.
[[nodiscard]] inline std::string canonical_key(const BinaryMatrix& a) {
  const std::size_t cells = a.rows() * a.cols();
  std::string key(4 + (cells + 7) / 8, '\0');
  key[0] = static_cast<char>((a.rows() >> 8) & 0xFF);
  key[1] = static_cast<char>(a.rows() & 0xFF);
  key[2] = static_cast<char>((a.cols() >> 8) & 0xFF);
  key[3] = static_cast<char>(a.cols() & 0xFF);
  std::size_t bit = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j, ++bit) {
      if (a.get(i, j)) {
        auto& byte = reinterpret_cast<unsigned char&>(key[4 + bit / 8]);
        byte = static_cast<unsigned char>(byte | (0x80U >> (bit % 8)));
      }
    }
  }
  return key;
}

/// Named small matrices.
namespace named {

inline BinaryMatrix identity(std::size_t n) {
  BinaryMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}
inline BinaryMatrix I2() { return BinaryMatrix::from_rows({"10", "01"}); }
inline BinaryMatrix L2() { return BinaryMatrix::from_rows({"01", "10"}); }
inline BinaryMatrix J2() { return BinaryMatrix::from_rows({"11", "11"}); }
inline BinaryMatrix F3() { return BinaryMatrix::from_rows({"110", "101", "011"}); }
/// F3 with its columns reversed.
inline BinaryMatrix F3_reversed() { return BinaryMatrix::from_rows({"011", "101", "110"}); }

}  // namespace named

}  // namespace bruhat
