#pragma once
// Independent reference computations used by the tests. Nothing here calls
// into the elimination code.

#include "artifact/abelian.hpp"

#include <functional>
#include <random>
#include <vector>

namespace oracle {

using artifact::Int;
using Dense = std::vector<std::vector<long long>>;

inline long long det(Dense a) {
  // fraction-free Bareiss on small matrices
  const int n = static_cast<int>(a.size());
  long long sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int s = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) s = i;
      if (s < 0) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return n == 0 ? 1 : sign * a[n - 1][n - 1];
}

inline long long gcdll(long long a, long long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline void subsets(int n, int k, std::vector<int> &cur, int start, const std::function<void(const std::vector<int> &)> &f) {
  if (static_cast<int>(cur.size()) == k) {
    f(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, cur, i + 1, f);
    cur.pop_back();
  }
}

// Smith invariants via determinantal divisors: s_k = d_k / d_{k-1}, d_k = gcd of k-minors.
inline std::vector<long long> smith_invariants(const Dense &m) {
  const int r = static_cast<int>(m.size());
  const int c = r ? static_cast<int>(m[0].size()) : 0;
  std::vector<long long> out;
  long long prev = 1;
  for (int k = 1; k <= std::min(r, c); ++k) {
    long long g = 0;
    std::vector<int> rs, cs;
    subsets(r, k, rs, 0, [&](const std::vector<int> &ri) {
      subsets(c, k, cs, 0, [&](const std::vector<int> &ci) {
        Dense sub(k, std::vector<long long>(k));
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b) sub[a][b] = m[ri[a]][ci[b]];
        g = gcdll(g, det(sub));
      });
    });
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// For a finite group given by explicit elements, count solutions of k*x = 0.
// A finite abelian group is determined up to isomorphism by these counts.
inline long long predicted_k_torsion(const artifact::FgAbGroup &g, long long k) {
  long long n = 1;
  for (const auto &d : g.invariant_factors()) n *= gcdll(k, d.small());
  return n;
}

// Enumerate all elements of a finite group in canonical coordinates.
inline void for_each_element(const std::vector<long long> &orders, const std::function<void(const std::vector<Int> &)> &f) {
  std::vector<Int> x(orders.size());
  std::vector<long long> c(orders.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < c.size(); ++i) x[i] = Int(c[i]);
    f(x);
    std::size_t i = 0;
    while (i < c.size() && ++c[i] == orders[i]) c[i++] = 0;
    if (i == c.size()) break;
  }
}

inline Dense random_dense(std::mt19937_64 &rng, int r, int c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  Dense m(r, std::vector<long long>(c));
  for (auto &row : m)
    for (auto &x : row) x = d(rng);
  return m;
}

// rank over Z/p by plain Gaussian elimination
inline int rank_mod_p(Dense a, long long p = 1000000007LL) {
  int rows = static_cast<int>(a.size()), cols = rows ? static_cast<int>(a[0].size()) : 0, r = 0;
  auto md = [p](long long x) { return ((x % p) + p) % p; };
  auto pw = [p](long long b, long long e) {
    long long res = 1;
    for (b %= p; e; e >>= 1, b = static_cast<long long>(static_cast<__int128>(b) * b % p))
      if (e & 1) res = static_cast<long long>(static_cast<__int128>(res) * b % p);
    return res;
  };
  for (auto &row : a)
    for (auto &x : row) x = md(x);
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c]) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    long long inv = pw(a[r][c], p - 2);
    for (int i = 0; i < rows; ++i) {
      if (i == r || !a[i][c]) continue;
      long long f = static_cast<long long>(static_cast<__int128>(a[i][c]) * inv % p);
      for (int j = c; j < cols; ++j) a[i][j] = md(a[i][j] - static_cast<long long>(static_cast<__int128>(f) * a[r][j] % p));
    }
    ++r;
  }
  return r;
}

} // namespace oracle
