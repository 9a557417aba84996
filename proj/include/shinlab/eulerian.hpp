#pragma once

#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "shinlab/numerics.hpp"

namespace shinlab {

inline Integer binom(long n, long k) {
  if (n < 0 || k < 0 || k > n) {
    throw DomainError("binom requires 0 <= k <= n, got (" + std::to_string(n) + ", " + std::to_string(k) + ")");
  }
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

namespace detail {

// Lazily grown triangular table of exact integers, safe to share across threads.
class TriangleCache {
 public:
  using Rule = Integer (*)(const std::vector<std::vector<Integer>>&, long, long);

  explicit TriangleCache(Rule rule) : rule_(rule) {}

  Integer at(long n, long k) {
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<long>(rows_.size()) <= n) {
      long row = static_cast<long>(rows_.size());
      std::vector<Integer> next(static_cast<std::size_t>(row + 1));
      rows_.push_back({});
      for (long j = 0; j <= row; ++j) next[static_cast<std::size_t>(j)] = rule_(rows_, row, j);
      rows_.back() = std::move(next);
    }
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

 private:
  Rule rule_;
  std::mutex mu_;
  std::vector<std::vector<Integer>> rows_;
};

inline Integer entry(const std::vector<std::vector<Integer>>& rows, long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

// {n, k} = k {n-1, k} + {n-1, k-1}
inline Integer stirling2_rule(const std::vector<std::vector<Integer>>& rows, long n, long k) {
  if (n == 0) return k == 0 ? 1 : 0;
  return k * entry(rows, n - 1, k) + entry(rows, n - 1, k - 1);
}

// <<n, k>> = (k+1) <<n-1, k>> + (2n-1-k) <<n-1, k-1>>
inline Integer eulerian2_rule(const std::vector<std::vector<Integer>>& rows, long n, long k) {
  if (n == 0) return k == 0 ? 1 : 0;
  return (k + 1) * entry(rows, n - 1, k) + (2 * n - 1 - k) * entry(rows, n - 1, k - 1);
}

inline TriangleCache& stirling2_cache() {
  static TriangleCache cache(stirling2_rule);
  return cache;
}

inline TriangleCache& eulerian2_cache() {
  static TriangleCache cache(eulerian2_rule);
  return cache;
}

inline void require_row(long n, long k, const char* what) {
  if (n < 0 || k < 0 || k > n) {
    throw DomainError(std::string(what) + " requires 0 <= k <= n, got (" + std::to_string(n) + ", " +
                      std::to_string(k) + ")");
  }
}

}  // namespace detail

// Stirling numbers of the second kind.
inline Integer stirling2(long n, long k) {
  detail::require_row(n, k, "stirling2");
  return detail::stirling2_cache().at(n, k);
}

// Second-order Eulerian numbers <<n, k>>; <<n, n>> = 0 for n != 0 and <<0, 0>> = 1.
inline Integer eulerian2(long n, long k) {
  detail::require_row(n, k, "eulerian2");
  return detail::eulerian2_cache().at(n, k);
}

// Closed form: sum_{k=0..m} (-1)^k C(2n+1, k) {n+m+1-k, m+1-k}.
inline Integer eulerian2_explicit(long n, long m) {
  if (m < 0 || m >= n) throw DomainError("eulerian2_explicit requires n > m >= 0");
  Integer sum = 0;
  for (long k = 0; k <= m; ++k) {
    Integer term = binom(2 * n + 1, k) * stirling2(n + m + 1 - k, m + 1 - k);
    if (k % 2 == 0) sum += term; else sum -= term;
  }
  return sum;
}

// Row n (n >= 1) holds <<n, m>> for m = 0..n-1.
struct EulerianTriangle {
  std::vector<std::vector<Integer>> rows;

  const std::vector<Integer>& row(long n) const { return rows.at(static_cast<std::size_t>(n - 1)); }
  long n_max() const { return static_cast<long>(rows.size()); }
};

inline EulerianTriangle triangle(long n_max) {
  if (n_max < 1 || n_max > 64) throw DomainError("triangle supports 1 <= n_max <= 64");
  EulerianTriangle t;
  for (long n = 1; n <= n_max; ++n) {
    std::vector<Integer> row;
    for (long m = 0; m < n; ++m) row.push_back(eulerian2(n, m));
    t.rows.push_back(std::move(row));
  }
  return t;
}

// One row per line, entries separated by commas.
inline std::string triangle_csv(const EulerianTriangle& t) {
  std::ostringstream out;
  for (const auto& row : t.rows) {
    for (std::size_t m = 0; m < row.size(); ++m) out << (m ? "," : "") << row[m].get_str();
    out << '\n';
  }
  return out.str();
}

}  // namespace shinlab
