#pragma once

/**
 * @file search.hpp
 * @brief Exhaustive and bounded searches over a class poset: longest chains,
 * tight chains, inversion monotonicity, and the spectrum of maximum chain
 * lengths between extreme members.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>

#include "bruhat/chain.hpp"
#include "bruhat/class_enum.hpp"
#include "bruhat/errors.hpp"
#include "bruhat/io.hpp"
#include "bruhat/matrix.hpp"
#include "bruhat/order.hpp"
#include "bruhat/parallel.hpp"

namespace bruhat {

// ---------------------------------------------------------------------------
// Longest chains
// ---------------------------------------------------------------------------

struct LongestChain {
  std::size_t length = 0;
  Chain witness;
};

namespace detail {

inline constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

/// Longest cover-path lengths from `source` (or from every member when
/// source is empty), with the predecessor used on one longest path.
struct PathTable {
  std::vector<std::size_t> dist;
  std::vector<std::size_t> pred;
};

inline PathTable longest_paths(const ClassPoset& poset, const std::vector<std::size_t>& order,
                               std::optional<std::size_t> source) {
  PathTable t{std::vector<std::size_t>(poset.size(), source ? kUnreached : 0),
              std::vector<std::size_t>(poset.size(), kUnreached)};
  if (source) t.dist[*source] = 0;
  for (auto p : order) {
    if (t.dist[p] == kUnreached) continue;
    for (auto q : poset.covers[p]) {
      if (t.dist[q] == kUnreached || t.dist[p] + 1 > t.dist[q]) {
        t.dist[q] = t.dist[p] + 1;
        t.pred[q] = p;
      }
    }
  }
  return t;
}

inline Chain witness_from(const ClassPoset& poset, const PathTable& t, std::size_t end) {
  std::vector<std::size_t> path{end};
  while (t.pred[path.back()] != kUnreached) path.push_back(t.pred[path.back()]);
  std::reverse(path.begin(), path.end());
  std::vector<BinaryMatrix> seq;
  seq.reserve(path.size());
  for (auto p : path) seq.push_back(poset.members[p]);
  Chain c = chain_from_sequence(seq);
  c.mode = ChainMode::Bruhat;
  return c;
}

}  // namespace detail

/// Longest chain in the poset, by dynamic programming over the cover DAG in
/// topological order. Ties resolve to the lowest member index.
[[nodiscard]] inline LongestChain longest_chain(const ClassPoset& poset) {
  const auto table = detail::longest_paths(poset, poset.topological_order(), std::nullopt);
  std::size_t best = 0;
  for (std::size_t p = 1; p < poset.size(); ++p) {
    if (table.dist[p] > table.dist[best]) best = p;
  }
  return {table.dist[best], detail::witness_from(poset, table, best)};
}

/// Longest chain from members[from] to members[to]; nullopt when from does
/// not precede to.
[[nodiscard]] inline std::optional<LongestChain> longest_chain_between(const ClassPoset& poset, std::size_t from,
                                                                       std::size_t to) {
  const auto table = detail::longest_paths(poset, poset.topological_order(), from);
  if (table.dist[to] == detail::kUnreached) return std::nullopt;
  return LongestChain{table.dist[to], detail::witness_from(poset, table, to)};
}

// ---------------------------------------------------------------------------
// Tight chains
// ---------------------------------------------------------------------------

struct SearchOutcome {
  bool found = false;
  std::optional<Chain> witness;
  std::size_t explored = 0;
  bool budget_hit = false;
};

namespace detail {

class TightSearch {
 public:
  TightSearch(const BinaryMatrix& target, std::size_t budget)
      : target_(target), target_sigma_(cumulative_sums(target)), target_nu_(inversion_count(target)), budget_(budget) {}

  bool run(const BinaryMatrix& x, std::uint64_t nu) {
    if (x == target_) return true;
    if (nu >= target_nu_) return false;
    const auto key = canonical_key(x);
    if (dead_.contains(key)) return false;
    if (++explored_ > budget_) {
      aborted_ = true;
      return false;
    }
    for (const auto& t : find_interchanges(x, Direction::ItoL)) {
      if (interchange_increment(x, t) != 1) continue;
      const BinaryMatrix y = apply_interchange(x, t);
      if (!dominates(cumulative_sums(y), target_sigma_)) continue;
      path_.push_back(t);
      if (run(y, nu + 1)) return true;
      path_.pop_back();
      if (aborted_) return false;
    }
    dead_.insert(key);
    return false;
  }

  [[nodiscard]] const std::vector<Interchange>& path() const noexcept { return path_; }
  [[nodiscard]] std::size_t explored() const noexcept { return explored_; }
  [[nodiscard]] bool aborted() const noexcept { return aborted_; }

 private:
  const BinaryMatrix& target_;
  CumulativeTable target_sigma_;
  std::uint64_t target_nu_;
  std::size_t budget_;
  std::size_t explored_ = 0;
  bool aborted_ = false;
  std::unordered_set<std::string> dead_;
  std::vector<Interchange> path_;
};

}  // namespace detail

/// Depth-first search for a tight chain from A to C: only ItoL moves that
/// raise nu by exactly one and stay Bruhat-below C are followed, in
/// lexicographic move order, with dead states memoized by canonical key.
/// Every step of a tight chain has increment one, so nothing is lost.
[[nodiscard]] inline SearchOutcome tight_chain_search(const BinaryMatrix& a, const BinaryMatrix& c,
                                                      std::size_t budget = 1'000'000) {
  detail::require_same_class(a, c);
  SearchOutcome out;
  if (a == c) {
    out.found = true;
    out.witness = Chain{a, {}, ChainMode::Interchange};
    return out;
  }
  if (inversion_count(a) > inversion_count(c) || !dominates(cumulative_sums(a), cumulative_sums(c))) {
    return out;
  }
  detail::TightSearch search(c, budget);
  out.found = search.run(a, inversion_count(a));
  out.explored = search.explored();
  out.budget_hit = search.aborted();
  if (out.found) {
    Chain w{a, {}, ChainMode::Interchange};
    for (const auto& t : search.path()) w.steps.emplace_back(t);
    out.witness = std::move(w);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Inversion monotonicity
// ---------------------------------------------------------------------------

/// A pair with A strictly below C in the Bruhat order but nu(A) >= nu(C).
struct MonotonicityCertificate {
  BinaryMatrix lower;
  BinaryMatrix upper;
  std::uint64_t nu_lower = 0;
  std::uint64_t nu_upper = 0;
};

struct MonotonicityReport {
  std::size_t pairs_checked = 0;
  std::vector<MonotonicityCertificate> violations;
};

/// Recomputes a certificate from its two matrices alone.
[[nodiscard]] inline bool certificate_holds(const MonotonicityCertificate& cert) {
  return bruhat_less(cert.lower, cert.upper) && inversion_count(cert.lower) == cert.nu_lower &&
         inversion_count(cert.upper) == cert.nu_upper && cert.nu_lower >= cert.nu_upper;
}

inline nlohmann::json to_json(const MonotonicityCertificate& cert) {
  return {{"lower", to_json(cert.lower)},
          {"upper", to_json(cert.upper)},
          {"sigma_lower", to_json(cumulative_sums(cert.lower))},
          {"sigma_upper", to_json(cumulative_sums(cert.upper))},
          {"nu_lower", cert.nu_lower},
          {"nu_upper", cert.nu_upper},
          {"violated", "sigma_lower >= sigma_upper entrywise and lower != upper, yet nu_lower >= nu_upper"}};
}

/// Checks every strict comparability arc for nu(source) < nu(target). Uses
/// the stored relation when present and all-pairs dominance otherwise.
[[nodiscard]] inline MonotonicityReport monotonicity_check(const ClassPoset& poset) {
  MonotonicityReport report;
  for (std::size_t p = 0; p < poset.size(); ++p) {
    const auto visit = [&](std::size_t q) {
      ++report.pairs_checked;
      if (poset.nu[p] >= poset.nu[q]) {
        report.violations.push_back({poset.members[p], poset.members[q], poset.nu[p], poset.nu[q]});
      }
    };
    if (poset.has_comparability()) {
      const auto& row = poset.above[p];
      for (auto q = row.find_first(); q != boost::dynamic_bitset<>::npos; q = row.find_next(q)) visit(q);
    } else {
      for (std::size_t q = 0; q < poset.size(); ++q) {
        if (poset.less(p, q)) visit(q);
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Spectrum of maximum chain lengths
// ---------------------------------------------------------------------------

struct ExtremePairLength {
  std::size_t minimal;
  std::size_t maximal;
  std::size_t length;
};

/// Longest chain length for every comparable (minimal, maximal) pair.
[[nodiscard]] inline std::vector<ExtremePairLength> extreme_pair_lengths(const ClassPoset& poset,
                                                                        unsigned threads = 1) {
  const auto ext = extremes(poset);
  const auto order = poset.topological_order();
  std::vector<std::vector<ExtremePairLength>> per_source(ext.minimal.size());
  detail::parallel_for(ext.minimal.size(), threads, [&](std::size_t s) {
    const auto table = detail::longest_paths(poset, order, ext.minimal[s]);
    for (auto q : ext.maximal) {
      if (table.dist[q] != detail::kUnreached) per_source[s].push_back({ext.minimal[s], q, table.dist[q]});
    }
  });
  std::vector<ExtremePairLength> out;
  for (auto& v : per_source) out.insert(out.end(), v.begin(), v.end());
  return out;
}

[[nodiscard]] inline std::set<std::size_t> maximal_chain_spectrum(const ClassPoset& poset, unsigned threads = 1) {
  std::set<std::size_t> out;
  for (const auto& e : extreme_pair_lengths(poset, threads)) out.insert(e.length);
  return out;
}

}  // namespace bruhat
