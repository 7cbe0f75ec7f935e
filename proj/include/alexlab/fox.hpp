#pragma once

#include <cstdint>
#include <vector>

#include "alexlab/abelian.hpp"
#include "alexlab/module.hpp"
#include "alexlab/presentation.hpp"

namespace alexlab {

/// Coefficient flavor of the Alexander matrix: Z[G_ab], Z[G_abf] or
/// F_p[H_1(G;Z_p)].
struct FoxFlavor {
  enum Kind { Ab, Abf, ModP } kind = Ab;
  std::uint64_t p = 0;
  static FoxFlavor ab() { return {Ab, 0}; }
  static FoxFlavor abf() { return {Abf, 0}; }
  static FoxFlavor mod_p(std::uint64_t p) { return {ModP, p}; }
};

/// The ring of the flavor together with the image of every generator.
struct AbelianImages {
  Ring ring;
  std::vector<Exponents> generator_images;  // one per generator
};

AbelianImages abelian_images(const GroupPresentation& pres, FoxFlavor flavor);

/// Image of the Fox derivative dw/dx_j (j 0-based) under the given images.
/// Conventions: dx_i/dx_j = delta_ij, dx_i^-1/dx_j = -delta_ij x_i^-1,
/// d(uv) = du + u dv.
RingElem fox_derivative(const FreeWord& w, int j, const AbelianImages& images);

/// m x l matrix with (j, i) entry the image of dr_i/dx_j. The fundamental
/// identity sum_j (dr/dx_j)(x_j - 1) = 0 is verified on every call.
GroupAlgebraMatrix fox_matrix(const GroupPresentation& pres, FoxFlavor flavor);
GroupAlgebraMatrix fox_matrix(const GroupPresentation& pres, const AbelianImages& images);

/// Index of the Koszul basis element e_ij (0-based i < j) among C(m,2).
int pair_index(int i, int j, int m);

/// d2(e_ij) = (t_i - 1) e_j - (t_j - 1) e_i.
std::vector<RingElem> koszul_d2(const Ring& ring, int i, int j);
/// d3(e_ijk) = (1 - t_k) e_ij + (t_j - 1) e_ik + (1 - t_i) e_jk, in the e_ij basis.
std::vector<RingElem> koszul_d3(const Ring& ring, int i, int j, int k);

/// Lifts v in ker(d1) through d2 by peeling variables from the top down.
std::vector<RingElem> koszul_lift(const std::vector<RingElem>& v);

/// B(G) over Z[Z^m] for commutator-relators presentations: generators e_ij,
/// relations d3 columns followed by lifts of the Fox columns.
ModulePresentation b_presentation_koszul(const GroupPresentation& pres);

/// Smith normal form of B(G) (x) Q over Q[t^+-1] for groups with G_ab = Z.
struct UnivariateModule {
  int free_rank = 0;
  std::vector<UPoly> invariant_factors;  // non-units, d_1 | d_2 | ..., Laurent-normalized
  ModulePresentation presentation() const;
  std::string to_string() const;
};

UnivariateModule b_univariate(const GroupPresentation& pres);

/// A finite-dimensional F_p-module with commuting actions of the generators
/// of Lambda_p = F_p[Z_p^b].
struct FiniteModule {
  std::uint64_t p = 0;
  int b = 0;                 // number of group-ring generators
  int ambient_dimension = 0; // dim of the space B_p was cut out of
  int dimension = 0;
  /// actions[i][r][c]: coefficient of basis vector r in s_i * (basis vector c).
  std::vector<std::vector<std::vector<std::uint64_t>>> actions;
};

/// Largest p^b * m accepted by b_mod_p.
inline constexpr std::uint64_t kModPAmbientLimit = 20000;

/// B_p(G) = ker(A_p(G) -> I_p) as an F_p space with the Lambda_p action.
FiniteModule b_mod_p(const GroupPresentation& pres, std::uint64_t p);

/// Dimensions of I^n X for n = 0, 1, ... until zero (trailing zero included).
std::vector<int> augmentation_filtration(const FiniteModule& m);

}  // namespace alexlab
