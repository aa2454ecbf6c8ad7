#pragma once

// Brute-force reference implementations used only by the tests. They work on
// plain nested vectors and share no code path with the library kernels.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "bruhat/matrix.hpp"

namespace oracle {

using Grid = std::vector<std::vector<int>>;

inline Grid to_grid(const bruhat::BinaryMatrix& a) {
  Grid g(a.rows(), std::vector<int>(a.cols(), 0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) g[i][j] = a.get(i, j) ? 1 : 0;
  }
  return g;
}

/// Inversions by checking every pair of ones against the definition.
inline std::uint64_t inversions(const Grid& g) {
  std::vector<std::pair<long, long>> ones;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g[i].size(); ++j) {
      if (g[i][j]) ones.emplace_back(static_cast<long>(i), static_cast<long>(j));
    }
  }
  std::uint64_t total = 0;
  for (std::size_t p = 0; p < ones.size(); ++p) {
    for (std::size_t q = p + 1; q < ones.size(); ++q) {
      if ((ones[p].first - ones[q].first) * (ones[p].second - ones[q].second) < 0) ++total;
    }
  }
  return total;
}

inline std::uint64_t inversions(const bruhat::BinaryMatrix& a) { return inversions(to_grid(a)); }

/// sigma_kl by summing the leading (k+1) x (l+1) block from scratch.
inline std::vector<std::vector<int>> sigma(const Grid& g) {
  std::vector<std::vector<int>> s(g.size(), std::vector<int>(g[0].size(), 0));
  for (std::size_t k = 0; k < g.size(); ++k) {
    for (std::size_t l = 0; l < g[0].size(); ++l) {
      for (std::size_t i = 0; i <= k; ++i) {
        for (std::size_t j = 0; j <= l; ++j) s[k][l] += g[i][j];
      }
    }
  }
  return s;
}

inline bool bruhat_leq(const bruhat::BinaryMatrix& a, const bruhat::BinaryMatrix& c) {
  const auto sa = sigma(to_grid(a));
  const auto sc = sigma(to_grid(c));
  for (std::size_t k = 0; k < sa.size(); ++k) {
    for (std::size_t l = 0; l < sa[k].size(); ++l) {
      if (sa[k][l] < sc[k][l]) return false;
    }
  }
  return true;
}

struct Quad {
  std::size_t i, i2, j, j2;
};

/// Every 2x2 submatrix equal to I2 (or L2 when want_l2).
inline std::vector<Quad> interchanges(const Grid& g, bool want_l2) {
  std::vector<Quad> out;
  const int d = want_l2 ? 0 : 1;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t i2 = i + 1; i2 < g.size(); ++i2) {
      for (std::size_t j = 0; j < g[0].size(); ++j) {
        for (std::size_t j2 = j + 1; j2 < g[0].size(); ++j2) {
          if (g[i][j] == d && g[i2][j2] == d && g[i][j2] == 1 - d && g[i2][j] == 1 - d) out.push_back({i, i2, j, j2});
        }
      }
    }
  }
  return out;
}

/// Every m x n (0,1)-matrix with the given margins, by filtering all 2^(mn).
inline std::vector<bruhat::BinaryMatrix> brute_class(const std::vector<std::size_t>& rows,
                                                     const std::vector<std::size_t>& cols) {
  const std::size_t m = rows.size();
  const std::size_t n = cols.size();
  std::vector<bruhat::BinaryMatrix> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (m * n)); ++bits) {
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      std::size_t s = 0;
      for (std::size_t j = 0; j < n; ++j) s += (bits >> (i * n + j)) & 1U;
      ok = s == rows[i];
    }
    for (std::size_t j = 0; j < n && ok; ++j) {
      std::size_t s = 0;
      for (std::size_t i = 0; i < m; ++i) s += (bits >> (i * n + j)) & 1U;
      ok = s == cols[j];
    }
    if (!ok) continue;
    bruhat::BinaryMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) a.set(i, j, (bits >> (i * n + j)) & 1U);
    }
    out.push_back(a);
  }
  return out;
}

/// Strict relation matrix by the oracle order.
inline std::vector<std::vector<bool>> strict_relation(const std::vector<bruhat::BinaryMatrix>& members) {
  const std::size_t count = members.size();
  std::vector<std::vector<bool>> rel(count, std::vector<bool>(count, false));
  for (std::size_t p = 0; p < count; ++p) {
    for (std::size_t q = 0; q < count; ++q) rel[p][q] = p != q && oracle::bruhat_leq(members[p], members[q]);
  }
  return rel;
}

/// Longest chain over the full strict relation (no covers), memoized DFS.
inline std::size_t longest_chain(const std::vector<std::vector<bool>>& rel) {
  const std::size_t count = rel.size();
  std::vector<long> memo(count, -1);
  std::function<long(std::size_t)> up = [&](std::size_t p) -> long {
    if (memo[p] >= 0) return memo[p];
    long best = 0;
    for (std::size_t q = 0; q < count; ++q) {
      if (rel[p][q]) best = std::max(best, 1 + up(q));
    }
    return memo[p] = best;
  };
  long best = 0;
  for (std::size_t p = 0; p < count; ++p) best = std::max(best, up(p));
  return static_cast<std::size_t>(best);
}

/// Cover relation by definition: p < q with nothing strictly between.
inline std::vector<std::vector<bool>> covers(const std::vector<std::vector<bool>>& rel) {
  const std::size_t count = rel.size();
  std::vector<std::vector<bool>> cov(count, std::vector<bool>(count, false));
  for (std::size_t p = 0; p < count; ++p) {
    for (std::size_t q = 0; q < count; ++q) {
      if (!rel[p][q]) continue;
      bool between = false;
      for (std::size_t r = 0; r < count && !between; ++r) between = rel[p][r] && rel[r][q];
      cov[p][q] = !between;
    }
  }
  return cov;
}

/// Pairs of ones not in the same row or column: C(ones,2) minus same-line pairs.
inline std::uint64_t cross_pairs(const Grid& g) {
  std::uint64_t ones = 0;
  std::uint64_t same = 0;
  for (const auto& row : g) {
    std::uint64_t r = 0;
    for (int v : row) r += static_cast<std::uint64_t>(v);
    ones += r;
    same += r * (r - (r ? 1 : 0)) / 2;
  }
  for (std::size_t j = 0; j < g[0].size(); ++j) {
    std::uint64_t c = 0;
    for (const auto& row : g) c += static_cast<std::uint64_t>(row[j]);
    same += c * (c - (c ? 1 : 0)) / 2;
  }
  return ones * (ones - (ones ? 1 : 0)) / 2 - same;
}

}  // namespace oracle
