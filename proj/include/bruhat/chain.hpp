#pragma once

/**
 * @file chain.hpp
 * @brief Chains in the Bruhat order of A(n,2) and the maximum-chain builders.
 *
 * A Chain is a start matrix plus a list of steps. A step is either an ItoL
 * interchange or a Splice that jumps straight to a given matrix. Interchange
 * mode chains contain interchanges only; bruhat mode chains may contain
 * splices, and each of their steps is checked as a strict Bruhat relation.
 */

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bruhat/errors.hpp"
#include "bruhat/matrix.hpp"
#include "bruhat/order.hpp"

namespace bruhat {

enum class ChainMode { Interchange, Bruhat };

/// A bruhat-mode step to an explicitly given matrix.
struct Splice {
  BinaryMatrix matrix;
  friend bool operator==(const Splice&, const Splice&) = default;
};

using ChainStep = std::variant<Interchange, Splice>;

struct Chain {
  BinaryMatrix start;
  std::vector<ChainStep> steps;
  ChainMode mode = ChainMode::Interchange;

  [[nodiscard]] std::size_t length() const noexcept { return steps.size(); }
  friend bool operator==(const Chain&, const Chain&) = default;
};

namespace detail {

inline void require_step_shape(const BinaryMatrix& current, const ChainStep& step, ChainMode mode,
                               std::size_t index) {
  if (const auto* s = std::get_if<Splice>(&step)) {
    if (mode == ChainMode::Interchange) {
      throw MalformedChain("splice at step " + std::to_string(index) + " in an interchange-mode chain");
    }
    if (s->matrix.rows() != current.rows() || s->matrix.cols() != current.cols()) {
      throw MalformedChain("splice at step " + std::to_string(index) + " has the wrong shape");
    }
  }
}

inline BinaryMatrix advance(const BinaryMatrix& current, const ChainStep& step) {
  if (const auto* t = std::get_if<Interchange>(&step)) {
    if (t->direction != Direction::ItoL) throw PatternMismatch("chain steps must be ItoL interchanges");
    return apply_interchange(current, *t);
  }
  return std::get<Splice>(step).matrix;
}

}  // namespace detail

/// Every matrix of the chain, start first. Throws PatternMismatch when an
/// interchange does not apply and MalformedChain on structural errors.
[[nodiscard]] inline std::vector<BinaryMatrix> replay(const Chain& c) {
  std::vector<BinaryMatrix> out{c.start};
  out.reserve(c.steps.size() + 1);
  for (std::size_t k = 0; k < c.steps.size(); ++k) {
    detail::require_step_shape(out.back(), c.steps[k], c.mode, k);
    out.push_back(detail::advance(out.back(), c.steps[k]));
  }
  return out;
}

[[nodiscard]] inline BinaryMatrix chain_end(const Chain& c) {
  BinaryMatrix current = c.start;
  for (std::size_t k = 0; k < c.steps.size(); ++k) {
    detail::require_step_shape(current, c.steps[k], c.mode, k);
    current = detail::advance(current, c.steps[k]);
  }
  return current;
}

struct ChainReport {
  std::size_t length = 0;
  bool valid = true;
  std::optional<std::size_t> failing_step;
  std::string failure;
  /// nu increases by exactly one at every step.
  bool tight = false;
  bool endpoints_ok = true;
  std::vector<std::uint64_t> nu_profile;
};

/// Replays the chain and checks every step by its mode. Invalid steps are
/// reported, not thrown; only structurally malformed chains throw.
[[nodiscard]] inline ChainReport verify_chain(
    const Chain& c, const std::optional<std::pair<BinaryMatrix, BinaryMatrix>>& endpoints = std::nullopt) {
  ChainReport report;
  report.length = c.length();
  BinaryMatrix current = c.start;
  report.nu_profile.push_back(inversion_count(current));

  for (std::size_t k = 0; k < c.steps.size(); ++k) {
    detail::require_step_shape(current, c.steps[k], c.mode, k);
    const auto fail = [&](std::string why) {
      report.valid = false;
      report.failing_step = k;
      report.failure = std::move(why);
    };
    std::optional<BinaryMatrix> next;
    if (const auto* t = std::get_if<Interchange>(&c.steps[k])) {
      if (t->direction != Direction::ItoL || !matches_source(current, *t)) {
        fail("interchange does not address an I2 submatrix");
        break;
      }
      next = apply_interchange(current, *t);
    } else {
      next = std::get<Splice>(c.steps[k]).matrix;
      if (margins_of(*next) != margins_of(current)) {
        fail("splice changes the margins");
        break;
      }
    }
    if (c.mode == ChainMode::Bruhat && !bruhat_less(current, *next)) {
      fail("step is not a strict Bruhat relation");
      break;
    }
    current = std::move(*next);
    report.nu_profile.push_back(inversion_count(current));
  }

  report.tight = report.valid;
  for (std::size_t k = 1; report.tight && k < report.nu_profile.size(); ++k) {
    report.tight = report.nu_profile[k] == report.nu_profile[k - 1] + 1;
  }
  if (endpoints) {
    report.endpoints_ok = report.valid && c.start == endpoints->first && current == endpoints->second;
  } else {
    report.endpoints_ok = report.valid;
  }
  return report;
}

/// Appends `tail` to `head`; tail must start where head ends.
[[nodiscard]] inline Chain concatenate(Chain head, const Chain& tail) {
  if (chain_end(head) != tail.start) throw MalformedChain("concatenated chains do not meet");
  head.steps.insert(head.steps.end(), tail.steps.begin(), tail.steps.end());
  if (tail.mode == ChainMode::Bruhat) head.mode = ChainMode::Bruhat;
  return head;
}

/// Runs `sub` inside the window (rows, cols) of `host`, keeping every entry
/// outside the window fixed. The window of the result's start holds sub.start.
[[nodiscard]] inline Chain embed_chain(const BinaryMatrix& host, std::span<const std::size_t> rows,
                                       std::span<const std::size_t> cols, const Chain& sub) {
  Chain out{embed(host, rows, cols, sub.start), {}, sub.mode};
  out.steps.reserve(sub.steps.size());
  for (const auto& step : sub.steps) {
    if (const auto* t = std::get_if<Interchange>(&step)) {
      if (t->i2 >= rows.size() || t->j2 >= cols.size()) throw IndexOutOfRange("sub-chain step outside window");
      out.steps.emplace_back(Interchange{rows[t->i], rows[t->i2], cols[t->j], cols[t->j2], t->direction});
    } else {
      out.steps.emplace_back(Splice{embed(host, rows, cols, std::get<Splice>(step).matrix)});
    }
  }
  return out;
}

/// Chain built from an explicit matrix sequence: consecutive matrices that
/// differ by one ItoL interchange become interchange steps, anything else a
/// splice (which forces bruhat mode).
[[nodiscard]] inline Chain chain_from_sequence(const std::vector<BinaryMatrix>& seq) {
  if (seq.empty()) throw MalformedChain("empty matrix sequence");
  Chain c{seq.front(), {}, ChainMode::Interchange};
  for (std::size_t k = 1; k < seq.size(); ++k) {
    if (auto t = interchange_between(seq[k - 1], seq[k])) {
      c.steps.emplace_back(*t);
    } else {
      c.steps.emplace_back(Splice{seq[k]});
      c.mode = ChainMode::Bruhat;
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Extremal matrices of A(n,2)
// ---------------------------------------------------------------------------

struct ExtremePair {
  BinaryMatrix minimal;  // P_n
  BinaryMatrix maximal;  // Q_n
};

/// P_n is n/2 copies of J2 on the diagonal (n even) or (n-3)/2 copies of J2
/// followed by F3 (n odd). Q_n places the same blocks on the anti-diagonal,
/// with F3 replaced by its column reversal in the bottom-left corner.
[[nodiscard]] inline ExtremePair build_extremes(std::size_t n) {
  if (n < 4) throw UnsupportedOrder("P_n and Q_n need n >= 4, got " + std::to_string(n));
  const std::size_t pairs = n % 2 == 0 ? n / 2 : (n - 3) / 2;
  BinaryMatrix p(n, n);
  BinaryMatrix q(n, n);
  for (std::size_t b = 0; b < pairs; ++b) {
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 2; ++c) {
        p.set(2 * b + r, 2 * b + c, true);
        q.set(2 * b + r, n - 2 - 2 * b + c, true);
      }
    }
  }
  if (n % 2 == 1) {
    const auto f3 = named::F3();
    const auto f3r = named::F3_reversed();
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) {
        p.set(n - 3 + r, n - 3 + c, f3.get(r, c));
        q.set(n - 3 + r, c, f3r.get(r, c));
      }
    }
  }
  return {std::move(p), std::move(q)};
}

// ---------------------------------------------------------------------------
// Base chains
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<BinaryMatrix> parse_sequence(std::initializer_list<std::initializer_list<std::string_view>> data) {
  std::vector<BinaryMatrix> out;
  for (const auto& rows : data) out.push_back(BinaryMatrix::from_rows(rows));
  return out;
}

}  // namespace detail

/// The matrix Z joining the two figure chains on A(5,2).
[[nodiscard]] inline BinaryMatrix figure_joint() {
  return BinaryMatrix::from_rows({"11000", "10010", "01001", "00101", "00110"});
}

/// Length-6 chain from P5 to Z, as drawn.
[[nodiscard]] inline std::vector<BinaryMatrix> figure_sequence_p5_z() {
  return detail::parse_sequence({
      {"11000", "11000", "00110", "00101", "00011"},
      {"11000", "11000", "00110", "00011", "00101"},
      {"11000", "10100", "01010", "00011", "00101"},
      {"11000", "10010", "01100", "00011", "00101"},
      {"11000", "10010", "01010", "00101", "00101"},
      {"11000", "10010", "01001", "00110", "00101"},
      {"11000", "10010", "01001", "00101", "00110"},
  });
}

/// Length-23 chain from Z to Q5, as drawn.
[[nodiscard]] inline std::vector<BinaryMatrix> figure_sequence_z_q5() {
  return detail::parse_sequence({
      {"11000", "10010", "01001", "00101", "00110"},
      {"11000", "10001", "01010", "00101", "00110"},
      {"11000", "10001", "00110", "01001", "00110"},
      {"11000", "10001", "00110", "00101", "01010"},
      {"11000", "10001", "00110", "00011", "01100"},
      {"10100", "10001", "01010", "00011", "01100"},
      {"10010", "10001", "01100", "00011", "01100"},
      {"10010", "10001", "01010", "00101", "01100"},
      {"10010", "10001", "01001", "00110", "01100"},
      {"10001", "10010", "01001", "00110", "01100"},
      {"10001", "10010", "00101", "01010", "01100"},
      {"10001", "01010", "00101", "10010", "01100"},
      {"10001", "01010", "00101", "01010", "10100"},
      {"10001", "01010", "00101", "00110", "11000"},
      {"10001", "00110", "01001", "00110", "11000"},
      {"10001", "00110", "00101", "01010", "11000"},
      {"10001", "00110", "00011", "01100", "11000"},
      {"00101", "10010", "00011", "01100", "11000"},
      {"00011", "10100", "00011", "01100", "11000"},
      {"00011", "10010", "00101", "01100", "11000"},
      {"00011", "10001", "00110", "01100", "11000"},
      {"00011", "00101", "10010", "01100", "11000"},
      {"00011", "00011", "10100", "01100", "11000"},
      {"00011", "00011", "01100", "10100", "11000"},
  });
}

struct FigureChains {
  Chain p5_to_z;
  Chain z_to_q5;
};

[[nodiscard]] inline FigureChains figure_chains() {
  return {chain_from_sequence(figure_sequence_p5_z()), chain_from_sequence(figure_sequence_z_q5())};
}

/// Tight interchange chain of length 16 from P4 to Q4. Found once by
/// tight_chain_search(P4, Q4) and frozen here.
[[nodiscard]] inline Chain base_chain_4() {
  static constexpr std::size_t kSteps[16][4] = {
      {1, 2, 1, 2}, {0, 1, 1, 2}, {2, 3, 1, 2}, {1, 2, 1, 2}, {1, 2, 0, 1}, {0, 1, 0, 1},
      {1, 2, 2, 3}, {0, 1, 2, 3}, {0, 1, 1, 2}, {2, 3, 0, 1}, {2, 3, 2, 3}, {2, 3, 1, 2},
      {1, 2, 1, 2}, {1, 2, 0, 1}, {1, 2, 2, 3}, {1, 2, 1, 2},
  };
  Chain c{build_extremes(4).minimal, {}, ChainMode::Interchange};
  for (const auto& s : kSteps) c.steps.emplace_back(Interchange{s[0], s[1], s[2], s[3], Direction::ItoL});
  return c;
}

/// Y = J2 (+) F3' followed by the chain from Z to Q5; Y -> Z is a single
/// Bruhat step, so the result is a bruhat-mode chain of length 24.
[[nodiscard]] inline Chain chain_Y_to_Q5() {
  Chain c{direct_sum({named::J2(), named::F3_reversed()}), {Splice{figure_joint()}}, ChainMode::Bruhat};
  return concatenate(std::move(c), figure_chains().z_to_q5);
}

namespace detail {

inline std::vector<std::size_t> index_range(std::size_t first, std::size_t count) {
  std::vector<std::size_t> v(count);
  std::iota(v.begin(), v.end(), first);
  return v;
}

inline void require_window(const BinaryMatrix& host, const std::vector<std::size_t>& rows,
                           const std::vector<std::size_t>& cols, const BinaryMatrix& expected) {
  if (extract(host, rows, cols) != expected) {
    throw std::logic_error("chain construction: window does not hold the expected block");
  }
}

}  // namespace detail

/// Maximum chain P_n -> Q_n for even n >= 4, of length 2n(n-2).
///
/// The (n-2)-chain runs on the leading block of P_n = P_{n-2} (+) J2, ending
/// at Q_{n-2} (+) J2. Then, for round r = 1..n/2-1, the 16-chain is applied to
/// the P4 found at rows {2r-2, 2r-1, n-2, n-1} and columns n-2-2r .. n+1-2r,
/// which walks the trailing J2 block to the bottom-left corner.
[[nodiscard]] inline Chain chain_even(std::size_t n) {
  if (n < 4 || n % 2 != 0) throw UnsupportedOrder("chain_even needs even n >= 4, got " + std::to_string(n));
  const Chain base = base_chain_4();
  if (n == 4) return base;

  const auto lead = detail::index_range(0, n - 2);
  Chain c = embed_chain(build_extremes(n).minimal, lead, lead, chain_even(n - 2));
  const auto p4 = build_extremes(4).minimal;
  for (std::size_t r = 1; r <= n / 2 - 1; ++r) {
    const std::vector<std::size_t> rows{2 * r - 2, 2 * r - 1, n - 2, n - 1};
    const auto cols = detail::index_range(n - 2 - 2 * r, 4);
    const auto end = chain_end(c);
    detail::require_window(end, rows, cols, p4);
    c = concatenate(std::move(c), embed_chain(end, rows, cols, base));
  }
  return c;
}

/// Maximum chain P_n -> Q_n for odd n = 2k+5, of length 2n(n-2)-1.
///
/// The 29-chain turns the trailing P5 into Q5. Then for t = 1..k the 24-chain
/// runs on the Y block at rows {2(k-t), 2(k-t)+1, n-3, n-2, n-1} and columns
/// 2(k-t) .. 2(k-t)+4, pushing F3' to the bottom-left corner and leaving
/// P_{n-3} in the top-right. chain_even(n-3) finishes the job there.
[[nodiscard]] inline Chain chain_odd(std::size_t n) {
  if (n < 5 || n % 2 != 1) throw UnsupportedOrder("chain_odd needs odd n >= 5, got " + std::to_string(n));
  const auto figures = figure_chains();
  const Chain base29 = concatenate(figures.p5_to_z, figures.z_to_q5);
  if (n == 5) return base29;

  const std::size_t k = (n - 5) / 2;
  const auto tail = detail::index_range(n - 5, 5);
  Chain c = embed_chain(build_extremes(n).minimal, tail, tail, base29);

  const Chain base24 = chain_Y_to_Q5();
  for (std::size_t t = 1; t <= k; ++t) {
    const std::size_t top = 2 * (k - t);
    const std::vector<std::size_t> rows{top, top + 1, n - 3, n - 2, n - 1};
    const auto cols = detail::index_range(top, 5);
    const auto end = chain_end(c);
    detail::require_window(end, rows, cols, base24.start);
    c = concatenate(std::move(c), embed_chain(end, rows, cols, base24));
  }

  const auto rows = detail::index_range(0, n - 3);
  const auto cols = detail::index_range(3, n - 3);
  const auto end = chain_end(c);
  const Chain even = chain_even(n - 3);
  detail::require_window(end, rows, cols, even.start);
  return concatenate(std::move(c), embed_chain(end, rows, cols, even));
}

/// chain_even or chain_odd by parity.
[[nodiscard]] inline Chain max_chain(std::size_t n) {
  if (n < 4) throw UnsupportedOrder("maximum chains are built for n >= 4, got " + std::to_string(n));
  return n % 2 == 0 ? chain_even(n) : chain_odd(n);
}

/// Largest chain length in the Bruhat order of A(n,2).
[[nodiscard]] inline std::size_t delta(std::size_t n) {
  if (n < 2) throw UnsupportedOrder("delta needs n >= 2, got " + std::to_string(n));
  if (n == 2) return 0;
  if (n == 3) return 3;
  return n % 2 == 0 ? 2 * n * (n - 2) : 2 * n * (n - 2) - 1;
}

struct ExtremalInversions {
  std::uint64_t minimal;  // nu(P_n) = ceil(n/2)
  std::uint64_t maximal;  // nu(Q_n) = floor((4n^2 - 7n)/2)
};

[[nodiscard]] inline ExtremalInversions extremal_inversions(std::size_t n) {
  if (n < 4) throw UnsupportedOrder("extremal_inversions needs n >= 4, got " + std::to_string(n));
  const std::uint64_t m = n;
  return {(m + 1) / 2, (4 * m * m - 7 * m) / 2};
}

}  // namespace bruhat
