#pragma once

/**
 * @file class_enum.hpp
 * @brief Exhaustive enumeration of a class A(R,S) and its Bruhat poset.
 *
 * Members are kept in canonical-key order, which for one shape is the
 * lexicographic order of the row strings. The poset stores the cover relation
 * as adjacency lists and, when built from all pairs, the full strict
 * comparability relation as one bitset row per member.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <nlohmann/json.hpp>

#include "bruhat/errors.hpp"
#include "bruhat/io.hpp"
#include "bruhat/matrix.hpp"
#include "bruhat/parallel.hpp"

namespace bruhat {

namespace detail {

inline void require_consistent(const MarginPair& mp) {
  const std::size_t m = mp.row_sums.size();
  const std::size_t n = mp.col_sums.size();
  if (m == 0 || n == 0) throw InfeasibleMargins("margin vectors must be nonempty");
  if (!mp.totals_agree()) throw InfeasibleMargins("row and column totals differ: " + format_margins(mp));
  for (auto r : mp.row_sums) {
    if (r > n) throw InfeasibleMargins("row sum " + std::to_string(r) + " exceeds column count");
  }
  for (auto s : mp.col_sums) {
    if (s > m) throw InfeasibleMargins("column sum " + std::to_string(s) + " exceeds row count");
  }
}

class ClassEnumerator {
 public:
  ClassEnumerator(const MarginPair& mp, std::function<void(const BinaryMatrix&)> visit)
      : mp_(mp),
        m_(mp.row_sums.size()),
        n_(mp.col_sums.size()),
        work_(m_, n_),
        capacity_(mp.col_sums),
        visit_(std::move(visit)) {}

  std::size_t run() {
    row(0);
    return found_;
  }

 private:
  void row(std::size_t i) {
    if (i == m_) {
      ++found_;
      visit_(work_);
      return;
    }
    cell(i, 0, mp_.row_sums[i]);
  }

  // Chooses cell (i, j) with `need` ones still to place in row i; '0' is tried
  // before '1' so members come out in lexicographic order.
  void cell(std::size_t i, std::size_t j, std::size_t need) {
    const std::size_t rows_after = m_ - i - 1;
    if (j == n_) {
      if (need == 0) row(i + 1);
      return;
    }
    if (n_ - j < need) return;
    // Column j receives nothing more from row i, so rows below must absorb it.
    if (n_ - j > need && capacity_[j] <= rows_after) cell(i, j + 1, need);
    if (need > 0 && capacity_[j] > 0 && capacity_[j] - 1 <= rows_after) {
      --capacity_[j];
      work_.set(i, j, true);
      cell(i, j + 1, need - 1);
      work_.set(i, j, false);
      ++capacity_[j];
    }
  }

  const MarginPair& mp_;
  std::size_t m_;
  std::size_t n_;
  BinaryMatrix work_;
  std::vector<std::size_t> capacity_;
  std::function<void(const BinaryMatrix&)> visit_;
  std::size_t found_ = 0;
};

}  // namespace detail

/// Streams every member of A(R,S) exactly once in canonical-key order and
/// returns the member count. Throws InfeasibleMargins when the class is empty.
inline std::size_t for_each_member(const MarginPair& margins,
                                   const std::function<void(const BinaryMatrix&)>& visit) {
  detail::require_consistent(margins);
  const std::size_t count = detail::ClassEnumerator(margins, visit).run();
  if (count == 0) throw InfeasibleMargins("class " + format_margins(margins) + " is empty");
  return count;
}

[[nodiscard]] inline std::vector<BinaryMatrix> enumerate_class(const MarginPair& margins) {
  std::vector<BinaryMatrix> out;
  for_each_member(margins, [&](const BinaryMatrix& a) { out.push_back(a); });
  return out;
}

enum class CoverStrategy {
  /// Full strict comparability by all-pairs dominance, then transitive
  /// reduction. Works for any class.
  AllPairs,
  /// Covers taken among single ItoL interchange edges. Only valid where the
  /// Bruhat and secondary Bruhat orders agree, so restricted to A(n,2).
  InterchangeGraph,
};

struct PosetOptions {
  std::size_t max_members = 100'000;
  /// AllPairs keeps an n x n bit relation; above this size it is refused.
  std::size_t all_pairs_limit = 30'000;
  CoverStrategy strategy = CoverStrategy::AllPairs;
  unsigned threads = 1;
  std::function<void(std::string_view)> progress;
};

class ClassPoset {
 public:
  MarginPair margins;
  std::vector<BinaryMatrix> members;
  std::vector<std::string> keys;
  std::vector<std::uint64_t> nu;
  std::vector<CumulativeTable> sigma;
  /// covers[p]: members covering members[p], ascending indices.
  std::vector<std::vector<std::size_t>> covers;
  /// above[p][q] set iff members[p] strictly precedes members[q]. Empty when
  /// the poset was built from the interchange graph.
  std::vector<boost::dynamic_bitset<>> above;

  [[nodiscard]] std::size_t size() const noexcept { return members.size(); }
  [[nodiscard]] bool has_comparability() const noexcept { return !above.empty(); }

  [[nodiscard]] std::optional<std::size_t> find(const BinaryMatrix& a) const {
    const auto key = canonical_key(a);
    const auto it = std::lower_bound(keys.begin(), keys.end(), key);
    if (it == keys.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - keys.begin());
  }

  /// Strict Bruhat precedence between two members.
  [[nodiscard]] bool less(std::size_t p, std::size_t q) const {
    if (has_comparability()) return above[p].test(q);
    return p != q && dominates(sigma[p], sigma[q]);
  }

  [[nodiscard]] std::size_t cover_count() const {
    std::size_t total = 0;
    for (const auto& c : covers) total += c.size();
    return total;
  }

  /// Number of strict comparability arcs; needs the full relation.
  [[nodiscard]] std::size_t arc_count() const {
    std::size_t total = 0;
    for (const auto& row : above) total += row.count();
    return total;
  }

  /// Members ordered so every arc points forward: by decreasing sum of the
  /// cumulative table (strictly decreasing along any strict relation), ties by
  /// index.
  [[nodiscard]] std::vector<std::size_t> topological_order() const {
    std::vector<std::uint64_t> weight(size());
    for (std::size_t p = 0; p < size(); ++p) {
      weight[p] = std::accumulate(sigma[p].values.begin(), sigma[p].values.end(), std::uint64_t{0});
    }
    std::vector<std::size_t> order(size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return weight[x] > weight[y]; });
    return order;
  }

  /// In-degree of every member in the cover graph.
  [[nodiscard]] std::vector<std::size_t> in_degrees() const {
    std::vector<std::size_t> deg(size(), 0);
    for (const auto& c : covers) {
      for (auto q : c) ++deg[q];
    }
    return deg;
  }
};

namespace detail {

inline void report(const PosetOptions& opt, const std::string& message) {
  if (opt.progress) opt.progress(message);
}

inline void build_all_pairs(ClassPoset& poset, const PosetOptions& opt) {
  const std::size_t count = poset.size();
  poset.above.assign(count, boost::dynamic_bitset<>(count));
  parallel_for(count, opt.threads, [&](std::size_t p) {
    auto& row = poset.above[p];
    for (std::size_t q = 0; q < count; ++q) {
      if (q != p && dominates(poset.sigma[p], poset.sigma[q])) row.set(q);
    }
  });
  report(opt, "comparability: " + std::to_string(poset.arc_count()) + " strict arcs");

  // q covers p iff no strict successor of p lies below q. Walking successors
  // in topological order, q is a cover exactly when no earlier cover reaches it.
  const auto order = poset.topological_order();
  std::vector<std::size_t> rank(count);
  for (std::size_t r = 0; r < count; ++r) rank[order[r]] = r;
  parallel_for(count, opt.threads, [&](std::size_t p) {
    std::vector<std::size_t> succ;
    for (auto q = poset.above[p].find_first(); q != boost::dynamic_bitset<>::npos;
         q = poset.above[p].find_next(q)) {
      succ.push_back(q);
    }
    std::sort(succ.begin(), succ.end(), [&](std::size_t x, std::size_t y) { return rank[x] < rank[y]; });
    boost::dynamic_bitset<> reached(count);
    auto& out = poset.covers[p];
    for (auto q : succ) {
      if (reached.test(q)) continue;
      out.push_back(q);
      reached |= poset.above[q];
    }
    std::sort(out.begin(), out.end());
  });
}

inline void build_interchange_graph(ClassPoset& poset, const PosetOptions& opt) {
  const auto& rs = poset.margins.row_sums;
  const auto& cs = poset.margins.col_sums;
  const bool an2 = rs.size() == cs.size() && std::all_of(rs.begin(), rs.end(), [](auto s) { return s == 2; }) &&
                   std::all_of(cs.begin(), cs.end(), [](auto s) { return s == 2; });
  if (!an2) throw NotInClass("interchange-graph covers are only valid on A(n,2)");

  // Every cover is one ItoL edge (orders coincide on A(n,2)). Edge p -> b is
  // not a cover iff another ItoL successor x of p already lies below b.
  const std::size_t count = poset.size();
  parallel_for(count, opt.threads, [&](std::size_t p) {
    std::vector<std::size_t> succ;
    for (const auto& t : find_interchanges(poset.members[p], Direction::ItoL)) {
      const auto idx = poset.find(apply_interchange(poset.members[p], t));
      if (!idx) throw NotInClass("interchange left the class");
      succ.push_back(*idx);
    }
    auto& out = poset.covers[p];
    for (auto b : succ) {
      const bool shortcut = std::any_of(succ.begin(), succ.end(), [&](std::size_t x) {
        return x != b && dominates(poset.sigma[x], poset.sigma[b]);
      });
      if (!shortcut) out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  });
  report(opt, "covers: " + std::to_string(poset.cover_count()) + " arcs");
}

}  // namespace detail

/// Enumerates A(R,S) and builds its Bruhat poset. Throws ClassTooLarge when
/// the class exceeds options.max_members (or all_pairs_limit for AllPairs).
[[nodiscard]] inline ClassPoset build_poset(const MarginPair& margins, const PosetOptions& options = {}) {
  ClassPoset poset;
  poset.margins = margins;
  for_each_member(margins, [&](const BinaryMatrix& a) {
    if (poset.members.size() >= options.max_members) {
      throw ClassTooLarge("class " + format_margins(margins) + " has more than " +
                          std::to_string(options.max_members) + " members");
    }
    poset.members.push_back(a);
  });
  const std::size_t count = poset.size();
  if (options.strategy == CoverStrategy::AllPairs && count > options.all_pairs_limit) {
    throw ClassTooLarge("class has " + std::to_string(count) +
                        " members; all-pairs comparability is capped at " +
                        std::to_string(options.all_pairs_limit));
  }
  detail::report(options, "members: " + std::to_string(count));

  poset.keys.resize(count);
  poset.nu.resize(count);
  poset.sigma.resize(count);
  detail::parallel_for(count, options.threads, [&](std::size_t p) {
    poset.keys[p] = canonical_key(poset.members[p]);
    poset.nu[p] = inversion_count(poset.members[p]);
    poset.sigma[p] = cumulative_sums(poset.members[p]);
  });
  poset.covers.assign(count, {});

  if (options.strategy == CoverStrategy::AllPairs) {
    detail::build_all_pairs(poset, options);
  } else {
    detail::build_interchange_graph(poset, options);
  }
  return poset;
}

struct Extremes {
  std::vector<std::size_t> minimal;
  std::vector<std::size_t> maximal;
};

/// Minimal members have no incoming arc, maximal ones no outgoing arc.
[[nodiscard]] inline Extremes extremes(const ClassPoset& poset) {
  Extremes out;
  const auto indeg = poset.in_degrees();
  for (std::size_t p = 0; p < poset.size(); ++p) {
    if (indeg[p] == 0) out.minimal.push_back(p);
    if (poset.covers[p].empty()) out.maximal.push_back(p);
  }
  return out;
}

inline std::string hex_key(const std::string& key) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(key.size() * 2);
  for (unsigned char c : key) {
    out += digits[c >> 4];
    out += digits[c & 0xF];
  }
  return out;
}

/// Hasse diagram: one node per member labeled by key and nu, cover arcs only.
inline void write_dot(std::ostream& out, const ClassPoset& poset) {
  out << "digraph bruhat {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t p = 0; p < poset.size(); ++p) {
    out << "  n" << p << " [label=\"" << hex_key(poset.keys[p]) << "\\nnu=" << poset.nu[p] << "\"];\n";
  }
  for (std::size_t p = 0; p < poset.size(); ++p) {
    for (auto q : poset.covers[p]) out << "  n" << p << " -> n" << q << ";\n";
  }
  out << "}\n";
}

/// One JSON object per line: key, rows, nu and the keys of cover successors.
inline void write_json_lines(std::ostream& out, const ClassPoset& poset) {
  for (std::size_t p = 0; p < poset.size(); ++p) {
    nlohmann::json succ = nlohmann::json::array();
    for (auto q : poset.covers[p]) succ.push_back(hex_key(poset.keys[q]));
    nlohmann::json line = {{"key", hex_key(poset.keys[p])},
                           {"rows", to_json(poset.members[p])["rows"]},
                           {"nu", poset.nu[p]},
                           {"covers", succ}};
    out << line.dump() << '\n';
  }
}

}  // namespace bruhat
