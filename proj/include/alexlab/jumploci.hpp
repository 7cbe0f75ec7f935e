#pragma once

#include <string>

#include "alexlab/fox.hpp"
#include "alexlab/modtools.hpp"

namespace alexlab {

/// V: Fitting ideals of the Alexander module over Q[G_ab]; W: of the rational
/// Alexander module over Q[G_abf]; Y: of the Alexander invariant B(G).
enum class JumpFlavor { V, W, Y };

std::string to_string(JumpFlavor f);

/// coker of the Fox matrix with rational coefficients (flavor Ab or Abf).
ModulePresentation alexander_module(const GroupPresentation& pres, FoxFlavor flavor);

/// B(G) (x) Q: the Koszul presentation for commutator-relators inputs, the
/// univariate normal form when G_ab = Z.
ModulePresentation alexander_invariant(const GroupPresentation& pres);

/// V: Fitt_{k+1}(A), W: Fitt_{k+1}(A_rat), Y: Fitt_k(B); all over Q. For
/// k beyond the generator count the ideal is the unit ideal.
Ideal jump_ideal(const GroupPresentation& pres, int k, JumpFlavor flavor);

/// dim H_1(G; C_rho) >= k, decided by rank d_2(rho) + rank d_1(rho) <= m - k.
/// The W flavor reads only the free coordinates of rho.
bool cv_membership(const GroupPresentation& pres, const CharacterPoint& rho, int k, JumpFlavor flavor);

/// dim H_1(G; C_rho) for a character of G_ab.
int twisted_betti(const GroupPresentation& pres, const CharacterPoint& rho);

/// Whether Lambda^k(B(G) (x) C) is finite dimensional, i.e. whether the
/// depth-k Alexander variety is finite.
bool finiteness_test(const GroupPresentation& pres, int k);

}  // namespace alexlab
