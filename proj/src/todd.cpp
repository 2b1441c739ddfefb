#include "chernratio/todd.hpp"

#include <stdexcept>
#include <vector>

namespace chernratio {

namespace {

constexpr auto kVars = ChernVariables::Tangent;

// l_k with log(x/(1-e^{-x})) = sum_{k>=1} l_k x^k, k = 1..d
std::vector<mpq_class> log_todd_series(int d) {
  // 1 - e^{-x} = x g(x), g_k = (-1)^k/(k+1)!
  std::vector<mpq_class> g(static_cast<std::size_t>(d) + 1);
  mpz_class fact = 1;
  for (int k = 0; k <= d; ++k) {
    fact *= k + 1;
    g[static_cast<std::size_t>(k)] = mpq_class(k % 2 == 0 ? 1 : -1, fact);
    g[static_cast<std::size_t>(k)].canonicalize();
  }
  // h = log g via k g_k = sum_{j=1}^k j h_j g_{k-j}
  std::vector<mpq_class> h(static_cast<std::size_t>(d) + 1);
  for (int k = 1; k <= d; ++k) {
    mpq_class acc = k * g[static_cast<std::size_t>(k)];
    for (int j = 1; j < k; ++j) acc -= j * h[static_cast<std::size_t>(j)] * g[static_cast<std::size_t>(k - j)];
    h[static_cast<std::size_t>(k)] = acc / k;
  }
  for (auto& v : h) v = -v;
  return h;
}

// power sums of the Chern roots in terms of c_i (Newton)
std::vector<ChernPoly> power_sums(int d) {
  std::vector<ChernPoly> p;
  p.push_back(ChernPoly::one(kVars));
  for (int k = 1; k <= d; ++k) {
    ChernPoly pk = ChernPoly::variable(kVars, k).scaled(MPoly(k % 2 == 1 ? k : -k));
    for (int i = 1; i < k; ++i) {
      ChernPoly term = ChernPoly::variable(kVars, i) * p[static_cast<std::size_t>(k - i)];
      pk += (i % 2 == 1) ? term : -term;
    }
    p.push_back(pk);
  }
  return p;
}

}  // namespace

ChernPoly todd_polynomial(int d) {
  if (d < 0) throw std::invalid_argument("todd_polynomial: negative degree");
  const auto l = log_todd_series(d);
  const auto p = power_sums(d);
  // T = exp(L), L_k = l_k p_k:  T_j = (1/j) sum_{k=1}^j k L_k T_{j-k}
  std::vector<ChernPoly> t;
  t.push_back(ChernPoly::one(kVars));
  for (int j = 1; j <= d; ++j) {
    ChernPoly acc(kVars, j);
    for (int k = 1; k <= j; ++k) {
      const mpq_class w = k * l[static_cast<std::size_t>(k)];
      if (w == 0) continue;
      acc += (p[static_cast<std::size_t>(k)] * t[static_cast<std::size_t>(j - k)]).scaled(MPoly(w));
    }
    t.push_back(acc.scaled(MPoly(mpq_class(1, j))));
  }
  return t[static_cast<std::size_t>(d)];
}

ChernPoly chi_structure_sheaf_functional(int n) {
  if (n < 1) throw std::invalid_argument("chi_structure_sheaf_functional: n must be >= 1");
  return todd_polynomial(n);
}

mpz_class todd_denominator_bound(int d) {
  if (d < 0) throw std::invalid_argument("todd_denominator_bound: negative degree");
  mpz_class out = 1;
  for (int p = 2; p <= d + 1; ++p) {
    bool prime = true;
    for (int q = 2; q * q <= p; ++q) prime = prime && (p % q != 0);
    if (!prime) continue;
    for (int e = 0; e < d / (p - 1); ++e) out *= p;
  }
  return out;
}

}  // namespace chernratio
