#pragma once

#include <cstddef>
#include <cstdint>
#include <queue>
#include <string>
#include <tuple>
#include <unordered_set>
#include <vector>

#include "bruhat/errors.hpp"
#include "bruhat/matrix.hpp"

namespace bruhat {

/// Result of comparing two matrices of one class in the Bruhat order.
struct OrderVerdict {
  bool leq = false;
  bool geq = false;

  [[nodiscard]] bool comparable() const noexcept { return leq || geq; }
  [[nodiscard]] bool equal() const noexcept { return leq && geq; }
};

namespace detail {

inline void require_same_class(const BinaryMatrix& a, const BinaryMatrix& c) {
  if (a.rows() != c.rows() || a.cols() != c.cols()) {
    throw MarginMismatch("matrices have different shapes");
  }
  if (margins_of(a) != margins_of(c)) throw MarginMismatch("matrices have different margins");
}

}  // namespace detail

/// A precedes C in the Bruhat order: the cumulative table of A dominates
/// that of C entrywise.
[[nodiscard]] inline bool bruhat_leq(const BinaryMatrix& a, const BinaryMatrix& c) {
  detail::require_same_class(a, c);
  return dominates(cumulative_sums(a), cumulative_sums(c));
}

[[nodiscard]] inline bool bruhat_less(const BinaryMatrix& a, const BinaryMatrix& c) {
  return bruhat_leq(a, c) && a != c;
}

[[nodiscard]] inline OrderVerdict bruhat_compare(const BinaryMatrix& a, const BinaryMatrix& c) {
  detail::require_same_class(a, c);
  const auto sa = cumulative_sums(a);
  const auto sc = cumulative_sums(c);
  return {dominates(sa, sc), dominates(sc, sa)};
}

struct SearchLimits {
  std::size_t max_nodes = 1'000'000;
};

/// C is reachable from A by ItoL interchanges alone.
///
/// Best-first search from A; states with more inversions are expanded first.
/// A state X is dropped when nu(X) > nu(C) or X does not precede C in the
/// Bruhat order, since every ItoL move strictly raises nu and moves down in
/// cumulative sums. Throws SearchBudgetExceeded when more than
/// limits.max_nodes states are expanded before the question is settled.
[[nodiscard]] inline bool secondary_bruhat_leq(const BinaryMatrix& a, const BinaryMatrix& c,
                                               SearchLimits limits = {}) {
  detail::require_same_class(a, c);
  if (a == c) return true;
  const auto target_sigma = cumulative_sums(c);
  if (!dominates(cumulative_sums(a), target_sigma)) return false;
  const std::uint64_t target_nu = inversion_count(c);

  using Entry = std::tuple<std::uint64_t, std::size_t, BinaryMatrix>;
  struct ByNu {
    bool operator()(const Entry& x, const Entry& y) const {
      // Larger nu first; among equals, earlier insertion first.
      if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) < std::get<0>(y);
      return std::get<1>(x) > std::get<1>(y);
    }
  };
  std::priority_queue<Entry, std::vector<Entry>, ByNu> open;
  std::unordered_set<std::string> seen;
  std::size_t order = 0;
  open.emplace(inversion_count(a), order++, a);
  seen.insert(canonical_key(a));

  std::size_t expanded = 0;
  while (!open.empty()) {
    const auto [nu, tick, x] = open.top();
    open.pop();
    if (++expanded > limits.max_nodes) {
      throw SearchBudgetExceeded("secondary_bruhat_leq expanded more than " +
                                 std::to_string(limits.max_nodes) + " states");
    }
    for (const auto& t : find_interchanges(x, Direction::ItoL)) {
      const std::uint64_t next_nu = nu + interchange_increment(x, t);
      if (next_nu > target_nu) continue;
      BinaryMatrix y = apply_interchange(x, t);
      if (y == c) return true;
      if (next_nu == target_nu) continue;
      if (!dominates(cumulative_sums(y), target_sigma)) continue;
      if (!seen.insert(canonical_key(y)).second) continue;
      open.emplace(next_nu, order++, std::move(y));
    }
  }
  return false;
}

namespace detail {

inline void require_An2(const BinaryMatrix& a) {
  if (a.rows() != a.cols()) throw NotInClass("matrix is not square");
  const auto mp = margins_of(a);
  for (auto s : mp.row_sums) {
    if (s != 2) throw NotInClass("row sums are not all 2");
  }
  for (auto s : mp.col_sums) {
    if (s != 2) throw NotInClass("column sums are not all 2");
  }
}

inline bool diagonal_block_is(const BinaryMatrix& a, std::size_t at, const BinaryMatrix& block) {
  if (at + block.rows() > a.rows()) return false;
  for (std::size_t r = 0; r < block.rows(); ++r) {
    for (std::size_t c = 0; c < block.cols(); ++c) {
      if (a.get(at + r, at + c) != block.get(r, c)) return false;
    }
  }
  return true;
}

}  // namespace detail

/// A in A(n,2) is minimal in the Bruhat order iff it is a block-diagonal
/// direct sum of J2 and F3 blocks. With all line sums equal to 2 a diagonal
/// J2 or F3 block already holds every one of its rows, so the greedy scan
/// down the diagonal decides it; J2 and F3 differ in their leading 2x2 so the
/// scan never has to choose.
[[nodiscard]] inline bool is_minimal_An2(const BinaryMatrix& a) {
  detail::require_An2(a);
  static const BinaryMatrix j2 = named::J2();
  static const BinaryMatrix f3 = named::F3();
  std::size_t at = 0;
  while (at < a.rows()) {
    if (detail::diagonal_block_is(a, at, j2)) {
      at += 2;
    } else if (detail::diagonal_block_is(a, at, f3)) {
      at += 3;
    } else {
      return false;
    }
  }
  return true;
}

[[nodiscard]] inline bool is_maximal_An2(const BinaryMatrix& a) {
  detail::require_An2(a);
  return is_minimal_An2(reverse_columns(a));
}

/// Column reversal turns A <= C into C' <= A'. Always true; exists so the
/// duality can be checked on concrete pairs.
[[nodiscard]] inline bool duality_check(const BinaryMatrix& a, const BinaryMatrix& c) {
  return bruhat_leq(a, c) == bruhat_leq(reverse_columns(c), reverse_columns(a));
}

}  // namespace bruhat
