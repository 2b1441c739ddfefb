#pragma once

#include <vector>

#include <gmpxx.h>

#include "chernratio/chern_poly.hpp"
#include "chernratio/partition.hpp"
#include "chernratio/schubert.hpp"

namespace chernratio {

/// c_p(E ⊗ L) for a rank-r bundle E and a line bundle L, kept symbolic:
/// sum over terms coeff * c_{bundle_index}(E) * c_1(L)^{line_power}.
struct TwistedChernClass {
  struct Term {
    int bundle_index;
    int line_power;
    mpz_class coeff;
  };
  int rank = 0;
  int degree = 0;
  std::vector<Term> terms;
};

/// sum_{i=0}^p C(r-i, p-i) c_i(E) c_1(L)^{p-i}. Throws unless 0 <= p <= r.
TwistedChernClass twist_chern(int r, int p);

/// Substitutes c_i(E) = bundle[i] (bundle[0] is ignored, c_0 = 1) and
/// c_1(L) = line.
ChernPoly evaluate_twist(const TwistedChernClass& t, const std::vector<ChernPoly>& bundle,
                         const ChernPoly& line);

/// c_p(T_X(-mK_X)) = sum_{i=0}^p C(n-i, p-i) m^{p-i} c_i c_1^{p-i}.
ChernPoly chern_tangent_twisted(int n, int p);

/// c_p(γ*S) = c_p(T_X(-mK_X)) + m c_1 c_{p-1}(T_X(-mK_X)), 0 <= p <= n.
ChernPoly chern_gauss(int n, int p);

/// [unused, c_1(γ*S), ..., c_n(γ*S)], the images used to pull back
/// polynomials in c_i(S).
std::vector<ChernPoly> gauss_images(int n);

/// Replaces each c_i(S) by c_i(γ*S).
ChernPoly pullback(const ChernPoly& subbundle_poly, int n);

/// σ_w in the variables c_i(S): sum over partitions λ of w of
/// (-1)^{l(λ)} l(λ)!/prod(mult!) c_λ(S). Requires w >= 1.
ChernPoly sigma_to_chernS(int w);

/// (-1)^{|a|} c_a(S) = σ_{1^{a_1}} ··· σ_{1^{a_r}} in the Schubert basis.
SchubertExpr chernS_to_sigma(const Partition& a);

/// σ_a written in c_i(S): Giambelli in special classes, then each σ_k
/// replaced by sigma_to_chernS(k).
ChernPoly sigma_class_in_subbundle(const Partition& a);

/// The banded determinant D_n in formal symbols a_1..a_n: entry (i,j) is
/// a_{j-i+1}, with a_0 = 1 and zero below the subdiagonal.
ChernPoly dn_determinant(int n);

/// Checks sum_{i=0}^n (-1)^i D_i a_{n-i} = 0 and the first-row recursion
/// D_n = sum (-1)^{1+i} a_i D_{n-i} for the expanded determinants.
bool dn_recursion_check(int n);

}  // namespace chernratio
