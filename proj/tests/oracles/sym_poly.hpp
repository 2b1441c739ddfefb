#pragma once

// Test-side oracles in explicit variables x_1..x_N. Nothing here calls into
// the library: Schur polynomials come from semistandard tableaux, Todd
// classes from the root expansion, and elementary-basis rewriting from a
// greedy leading-term sweep.

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Exponent = std::vector<int>;

template <typename Coeff>
struct Poly {
  int nvars = 0;
  std::map<Exponent, Coeff> terms;

  explicit Poly(int n) : nvars(n) {}

  static Poly constant(int n, const Coeff& c) {
    Poly p(n);
    if (c != 0) p.terms[Exponent(n, 0)] = c;
    return p;
  }

  void add(const Exponent& e, const Coeff& c) {
    auto& slot = terms[e];
    slot += c;
    if (slot == 0) terms.erase(e);
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms) add(e, c);
    return *this;
  }

  Poly times(const Poly& o, int max_degree = 1 << 20) const {
    Poly r(nvars);
    for (const auto& [e1, c1] : terms) {
      for (const auto& [e2, c2] : o.terms) {
        Exponent e(nvars);
        int deg = 0;
        for (int i = 0; i < nvars; ++i) {
          e[i] = e1[i] + e2[i];
          deg += e[i];
        }
        if (deg <= max_degree) r.add(e, c1 * c2);
      }
    }
    return r;
  }

  Poly scaled(const Coeff& k) const {
    Poly r(nvars);
    for (const auto& [e, c] : terms) r.add(e, c * k);
    return r;
  }

  Poly homogeneous_part(int d) const {
    Poly r(nvars);
    for (const auto& [e, c] : terms) {
      int deg = 0;
      for (int v : e) deg += v;
      if (deg == d) r.add(e, c);
    }
    return r;
  }
};

// Schur polynomial s_shape(x_1..x_n): sum of x^T over semistandard fillings.
inline Poly<mpz_class> schur(const std::vector<int>& shape, int n) {
  Poly<mpz_class> out(n);
  std::vector<std::vector<int>> t;
  for (int len : shape) t.emplace_back(len, 0);
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < shape.size(); ++r)
    for (int c = 0; c < shape[r]; ++c) cells.emplace_back(static_cast<int>(r), c);

  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k == cells.size()) {
      Exponent e(n, 0);
      for (const auto& row : t)
        for (int v : row) ++e[v];
      out.add(e, 1);
      return;
    }
    const auto [r, c] = cells[k];
    int lo = 0;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v < n; ++v) {
      t[r][c] = v;
      fill(k + 1);
    }
  };
  if (static_cast<int>(shape.size()) <= n) fill(0);
  return out;
}

// Rewrites a symmetric polynomial in the Schur basis by peeling off the
// lexicographically largest monomial each time.
inline std::map<std::vector<int>, mpz_class> schur_decompose(Poly<mpz_class> p) {
  std::map<std::vector<int>, mpz_class> out;
  while (!p.terms.empty()) {
    const auto [lead, c] = *p.terms.rbegin();
    std::vector<int> shape;
    for (int v : lead)
      if (v > 0) shape.push_back(v);
    out[shape] = c;
    p += schur(shape, p.nvars).scaled(-c);
  }
  return out;
}

inline Poly<mpq_class> elementary(int k, int n) {
  Poly<mpq_class> out(n);
  std::function<void(int, int, Exponent&)> rec = [&](int start, int left, Exponent& e) {
    if (left == 0) {
      out.add(e, 1);
      return;
    }
    for (int i = start; i < n; ++i) {
      e[i] = 1;
      rec(i + 1, left - 1, e);
      e[i] = 0;
    }
  };
  Exponent e(n, 0);
  rec(0, k, e);
  return out;
}

// Symmetric polynomial -> {multiset of elementary indices (descending) -> coeff}.
inline std::map<std::vector<int>, mpq_class> elementary_decompose(Poly<mpq_class> p) {
  std::map<std::vector<int>, mpq_class> out;
  while (!p.terms.empty()) {
    const auto [lead, c] = *p.terms.rbegin();
    // leading monomial of e_{λ'} is x^λ
    std::vector<int> conj;
    for (int k = 1; k <= lead[0]; ++k) {
      int cnt = 0;
      for (int v : lead)
        if (v >= k) ++cnt;
      conj.push_back(cnt);
    }
    Poly<mpq_class> prod = Poly<mpq_class>::constant(p.nvars, 1);
    for (int k : conj) prod = prod.times(elementary(k, p.nvars));
    out[conj] += c;
    p += prod.scaled(-c);
  }
  return out;
}

// Degree-d Todd class as a polynomial in c_i = e_i(roots), from the
// product over d roots of x/(1 - e^{-x}).
inline std::map<std::vector<int>, mpq_class> todd_by_roots(int d) {
  // (1 - e^{-x})/x = sum_k (-1)^k x^k/(k+1)!; invert the series.
  std::vector<mpq_class> g(d + 1), f(d + 1);
  mpz_class fact = 1;
  for (int k = 0; k <= d; ++k) {
    fact *= (k + 1);
    g[k] = mpq_class((k % 2 == 0) ? 1 : -1, 1) / mpq_class(fact);
  }
  f[0] = 1;
  for (int k = 1; k <= d; ++k) {
    mpq_class s = 0;
    for (int j = 1; j <= k; ++j) s += g[j] * f[k - j];
    f[k] = -s;
  }
  const int n = std::max(d, 1);
  Poly<mpq_class> prod = Poly<mpq_class>::constant(n, 1);
  for (int i = 0; i < n; ++i) {
    Poly<mpq_class> factor(n);
    for (int k = 0; k <= d; ++k) {
      Exponent e(n, 0);
      e[i] = k;
      factor.add(e, f[k]);
    }
    prod = prod.times(factor, d);
  }
  return elementary_decompose(prod.homogeneous_part(d));
}

// σ_w in c_iS via compositions: each composition (i_1..i_k) of w contributes
// (-1)^k c_{i_1}...c_{i_k}. Keys are descending multisets.
inline std::map<std::vector<int>, mpz_class> sigma_by_compositions(int w) {
  std::map<std::vector<int>, mpz_class> out;
  std::vector<int> comp;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      std::vector<int> key = comp;
      std::sort(key.rbegin(), key.rend());
      out[key] += (comp.size() % 2 == 0) ? 1 : -1;
      return;
    }
    for (int i = 1; i <= left; ++i) {
      comp.push_back(i);
      rec(left - i);
      comp.pop_back();
    }
  };
  rec(w);
  return out;
}

}  // namespace oracle
