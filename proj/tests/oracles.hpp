#pragma once

// Reference implementations for tests. Deliberately naive and independent of
// the library algorithms: integer arithmetic on Z_n, subset search, the
// "1 - rx is a unit" description of J, and direct convolution.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <vector>

#include "ringlab/ring.hpp"

namespace oracle {

using ringlab::Index;
using ringlab::Ring;

inline std::size_t euler_phi(std::size_t n) {
  std::size_t count = 0;
  for (std::size_t k = 1; k <= n; ++k) count += std::gcd(k, n) == 1 ? 1 : 0;
  return n == 1 ? 1 : count;
}

inline std::set<Index> zmod_nilpotents(std::size_t n) {
  std::set<Index> out;
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t acc = 1 % n;
    for (std::size_t k = 0; k < n; ++k) acc = acc * x % n;
    if (acc == 0) out.insert(static_cast<Index>(x));
  }
  return out;
}

inline std::set<Index> zmod_idempotents(std::size_t n) {
  std::set<Index> out;
  for (std::size_t x = 0; x < n; ++x) {
    if (x * x % n == x) out.insert(static_cast<Index>(x));
  }
  return out;
}

inline bool is_unit(const Ring& r, Index x) {
  for (std::size_t y = 0; y < r.order(); ++y) {
    if (r.mul(x, static_cast<Index>(y)) == r.one()) return true;
  }
  return false;
}

inline std::set<Index> nilpotents(const Ring& r) {
  std::set<Index> out;
  for (std::size_t x = 0; x < r.order(); ++x) {
    Index acc = static_cast<Index>(x);
    for (std::size_t k = 0; k < r.order(); ++k) acc = r.mul(acc, static_cast<Index>(x));
    if (acc == r.zero()) out.insert(static_cast<Index>(x));
  }
  return out;
}

inline std::set<Index> idempotents(const Ring& r) {
  std::set<Index> out;
  for (std::size_t x = 0; x < r.order(); ++x) {
    if (r.mul(static_cast<Index>(x), static_cast<Index>(x)) == x) out.insert(static_cast<Index>(x));
  }
  return out;
}

/// J(R) = { x : 1 - r x is a unit for every r }.
inline std::set<Index> jacobson(const Ring& r) {
  std::set<Index> out;
  for (std::size_t x = 0; x < r.order(); ++x) {
    bool in = true;
    for (std::size_t s = 0; s < r.order() && in; ++s) {
      in = is_unit(r, r.sub(r.one(), r.mul(static_cast<Index>(s), static_cast<Index>(x))));
    }
    if (in) out.insert(static_cast<Index>(x));
  }
  return out;
}

inline bool closed_ideal(const Ring& r, const std::vector<Index>& s) {
  std::vector<char> in(r.order(), 0);
  for (Index x : s) in[x] = 1;
  if (!in[r.zero()]) return false;
  for (Index a : s) {
    for (Index b : s) {
      if (!in[r.add(a, b)]) return false;
    }
    for (std::size_t t = 0; t < r.order(); ++t) {
      if (!in[r.mul(a, static_cast<Index>(t))]) return false;
    }
  }
  return true;
}

/// Every ideal, by testing all subsets containing zero. Only for |R| <= 16.
inline std::set<std::vector<Index>> all_ideals(const Ring& r) {
  std::set<std::vector<Index>> out;
  const std::size_t n = r.order();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    if (!(mask & (std::size_t{1} << r.zero()))) continue;
    std::vector<Index> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) s.push_back(static_cast<Index>(i));
    }
    if (closed_ideal(r, s)) out.insert(s);
  }
  return out;
}

/// Proper ideals not strictly contained in another proper ideal.
inline std::set<std::vector<Index>> maximal_by_filter(const std::set<std::vector<Index>>& ideals,
                                                      std::size_t order) {
  std::set<std::vector<Index>> out;
  for (const auto& a : ideals) {
    if (a.size() == order) continue;
    bool maximal = true;
    for (const auto& b : ideals) {
      if (b.size() == order || b.size() <= a.size()) continue;
      if (std::includes(b.begin(), b.end(), a.begin(), a.end())) maximal = false;
    }
    if (maximal) out.insert(a);
  }
  return out;
}

/// Z_n elementwise: x = nil + idem or x = nil - idem.
inline bool zmod_weakly_nil_clean(std::size_t n, bool allow_difference) {
  const auto nil = zmod_nilpotents(n);
  const auto idem = zmod_idempotents(n);
  for (std::size_t x = 0; x < n; ++x) {
    bool ok = false;
    for (Index a : nil) {
      for (Index e : idem) {
        if ((a + e) % n == x) ok = true;
        if (allow_difference && (a + n - e) % n == x) ok = true;
      }
    }
    if (!ok) return false;
  }
  return true;
}

/// Convolution product in R[G] on coefficient vectors, G given by its multiplication table.
inline std::vector<Index> convolve(const Ring& r, const std::vector<std::vector<std::size_t>>& g_mul,
                                   const std::vector<Index>& a, const std::vector<Index>& b) {
  std::vector<Index> c(a.size(), r.zero());
  for (std::size_t g = 0; g < a.size(); ++g) {
    for (std::size_t h = 0; h < b.size(); ++h) {
      const std::size_t k = g_mul[g][h];
      c[k] = r.add(c[k], r.mul(a[g], b[h]));
    }
  }
  return c;
}

}  // namespace oracle
