#pragma once

// Independent reference implementations used only by the tests. None of them
// share code paths with the library algorithms they check.

#include <gmpxx.h>

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using Exp = std::vector<long>;
using Poly = std::map<Exp, mpz_class>;  // commutative Laurent polynomial

inline void add_term(Poly& p, const Exp& e, const mpz_class& c) {
  auto [it, fresh] = p.emplace(e, c);
  if (!fresh) it->second += c;
  if (it->second == 0) p.erase(it);
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [e, c] : a)
    for (const auto& [f, d] : b) {
      Exp s(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) s[i] = e[i] + f[i];
      add_term(out, s, c * d);
    }
  return out;
}

inline Poly add(Poly a, const Poly& b) {
  for (const auto& [e, c] : b) add_term(a, e, c);
  return a;
}

inline Poly monomial(const Exp& e) { return Poly{{e, 1}}; }

// Exact quotient n / d by lexicographic long division (std::map order, largest key last).
inline Poly divide(Poly n, const Poly& d) {
  const auto& [ld, lc] = *d.rbegin();
  Poly q;
  while (!n.empty()) {
    const auto [ln, c] = *n.rbegin();
    if (c % lc != 0) throw std::runtime_error("oracle: not divisible");
    Exp e(ln.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = ln[i] - ld[i];
    const mpz_class t = c / lc;
    add_term(q, e, t);
    for (const auto& [f, x] : d) {
      Exp s(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) s[i] = e[i] + f[i];
      add_term(n, s, -t * x);
    }
    if (q.size() > 100000) throw std::runtime_error("oracle: runaway division");
  }
  return q;
}

// Classical cluster variables after mutating along ks (1-based), written in the initial variables.
// B is m×n, row-major.
inline std::vector<Poly> commutative_cluster(std::vector<std::vector<long>> b, const std::vector<int>& ks) {
  const std::size_t m = b.size(), n = b.empty() ? 0 : b[0].size();
  std::vector<Poly> x;
  for (std::size_t i = 0; i < m; ++i) {
    Exp e(m, 0);
    e[i] = 1;
    x.push_back(monomial(e));
  }
  for (int k1 : ks) {
    const std::size_t k = static_cast<std::size_t>(k1 - 1);
    Poly p1{{Exp(m, 0), 1}}, p2{{Exp(m, 0), 1}};
    for (std::size_t i = 0; i < m; ++i) {
      for (long t = 0; t < b[i][k]; ++t) p1 = mul(p1, x[i]);
      for (long t = 0; t < -b[i][k]; ++t) p2 = mul(p2, x[i]);
    }
    x[k] = divide(add(p1, p2), x[k]);
    auto nb = b;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == k || j == k)
          nb[i][j] = -b[i][j];
        else
          nb[i][j] = b[i][j] + (std::abs(b[i][k]) * b[k][j] + b[i][k] * std::abs(b[k][j])) / 2;
      }
    b = nb;
  }
  return x;
}

// All subspaces of F_p^d (p prime) as sets of vectors encoded base p, by closure under
// addition and scaling; enumerated by breadth-first extension from {0}.
inline std::vector<std::set<long>> all_subspaces(int p, int d) {
  long total = 1;
  for (int i = 0; i < d; ++i) total *= p;
  auto decode = [&](long x) {
    std::vector<int> v(d);
    for (int i = 0; i < d; ++i) {
      v[i] = static_cast<int>(x % p);
      x /= p;
    }
    return v;
  };
  auto encode = [&](const std::vector<int>& v) {
    long x = 0;
    for (int i = d - 1; i >= 0; --i) x = x * p + v[i];
    return x;
  };
  auto close = [&](std::set<long> s) {
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<long> cur(s.begin(), s.end());
      for (long a : cur)
        for (long b : cur) {
          auto va = decode(a), vb = decode(b);
          for (int c = 1; c < p; ++c) {
            std::vector<int> w(d);
            for (int i = 0; i < d; ++i) w[i] = (va[i] + c * vb[i]) % p;
            if (s.insert(encode(w)).second) grew = true;
          }
        }
    }
    return s;
  };
  std::set<std::set<long>> seen{{0}};
  std::vector<std::set<long>> frontier{{0}};
  while (!frontier.empty()) {
    std::vector<std::set<long>> next;
    for (const auto& s : frontier)
      for (long v = 0; v < total; ++v) {
        if (s.count(v)) continue;
        auto t = s;
        t.insert(v);
        t = close(t);
        if (seen.insert(t).second) next.push_back(t);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

inline int subspace_dim(const std::set<long>& s, int p) {
  int d = 0;
  for (std::size_t n = s.size(); n > 1; n /= static_cast<std::size_t>(p)) ++d;
  return d;
}

// Power series coefficients of Π_j 1/(1−T^j)^{e_j} up to T^max_deg, by repeated geometric-series multiplication.
inline std::vector<mpz_class> inverse_product_series(const std::vector<int>& parts, int max_deg) {
  std::vector<mpz_class> c(max_deg + 1, 0);
  c[0] = 1;
  for (int j : parts) {
    std::vector<mpz_class> g(max_deg + 1, 0);
    for (int k = 0; k <= max_deg; k += j) g[k] = 1;
    std::vector<mpz_class> out(max_deg + 1, 0);
    for (int a = 0; a <= max_deg; ++a)
      for (int b = 0; a + b <= max_deg; ++b) out[a + b] += c[a] * g[b];
    c = out;
  }
  return c;
}

}  // namespace oracle
