#pragma once

#include <vector>

#include "alexlab/modtools.hpp"
#include "alexlab/presentation.hpp"

namespace alexlab {

/// Dual cup product data of a commutator-relators presentation: one column
/// per relator in the basis e_i^e_j (i < j, lexicographic) of Lambda^2 H_1.
struct CupData {
  int b1 = 0;
  std::vector<std::vector<Rational>> nabla;  // columns, each of length C(b1,2)

  int h2() const { return static_cast<int>(nabla.size()); }
  /// Rank of the comultiplication map Lambda^2 H_1 <- H_2.
  int nabla_rank() const;
};

/// Degree-2 Magnus coefficients c_ij (x_i -> 1 + X_i, 0-based i) of a word, as a dense
/// b x b matrix; also returns the linear part.
void magnus_degree2(const FreeWord& w, int b, std::vector<Rational>& linear, std::vector<std::vector<Rational>>& quadratic);

/// The coefficient of e_i^e_j (i < j) is the Magnus coefficient c_ij. For words
/// with zero exponent sums c_ij = -c_ji, so this is half of c_ij - c_ji;
/// [x_i, x_j] maps to e_i^e_j.
CupData cup_data(const GroupPresentation& pres);

/// Graded presentation of the infinitesimal Alexander invariant over
/// Q[x_1..x_b]: generators e_i^e_j in degree 0, relations the Koszul columns
/// x_i e_jk - x_j e_ik + x_k e_ij (degree 1) followed by the nabla columns (degree 0).
ModulePresentation inf_alexander_invariant(const CupData& cd);

/// The module coker(d_2^H): b generators; the column of an H_2 class c has
/// entry sum_j <c, e_i^e_j> x_j at generator i, with <c, e_j^e_i> = -<c, e_i^e_j>.
/// For Z^2 the single column is (x_2, -x_1).
ModulePresentation inf_alexander_module(const CupData& cd, int h2_dim);
ModulePresentation inf_alexander_module(const CupData& cd);

/// Largest max-n accepted by holonomy_chen_ranks.
inline constexpr int kMaxHolonomyN = 20;

/// theta-bar_1 = b1 and theta-bar_n = dim of the degree n-2 part of the
/// infinitesimal Alexander invariant, n = 2..N. GradedDims start at 1.
GradedDims holonomy_chen_ranks(const CupData& cd, int max_n);

/// Whether dim H^1(H^*, a) >= k for the complex Q -> Q^b -> Q^h2 with
/// differentials multiplication by a and cup product with a.
bool resonance_membership(const CupData& cd, const std::vector<Rational>& a, int k);

/// Fitt_{k+1} of the infinitesimal Alexander module; cuts out R_k away from 0.
Ideal resonance_ideal(const CupData& cd, int k);

}  // namespace alexlab
