#include "alexlab/jumploci.hpp"

#include "alexlab/errors.hpp"

namespace alexlab {

std::string to_string(JumpFlavor f) {
  switch (f) {
    case JumpFlavor::V:
      return "V";
    case JumpFlavor::W:
      return "W";
    case JumpFlavor::Y:
      return "Y";
  }
  return "?";
}

ModulePresentation alexander_module(const GroupPresentation& pres, FoxFlavor flavor) {
  require(flavor.kind != FoxFlavor::ModP, "rational Alexander modules use the ab or abf flavor");
  GroupAlgebraMatrix fox = fox_matrix(pres, flavor);
  return ModulePresentation::cokernel(change_coefficients(fox, with_flavor(fox.ring, Coeff::Rat)));
}

ModulePresentation alexander_invariant(const GroupPresentation& pres) {
  if (pres.is_commutator_relators()) {
    ModulePresentation b = b_presentation_koszul(pres);
    return change_coefficients(b, with_flavor(b.ring, Coeff::Rat));
  }
  AbelianizationData ab = abelianization(pres);
  require(ab.free_rank == 1 && ab.torsion_divisors.empty(),
          "a presentation of B(G) needs commutator relators or G_ab = Z");
  return b_univariate(pres).presentation();
}

Ideal jump_ideal(const GroupPresentation& pres, int k, JumpFlavor flavor) {
  require(k >= 1, "depth must be positive");
  switch (flavor) {
    case JumpFlavor::V:
      return fitting_ideal(alexander_module(pres, FoxFlavor::ab()), k + 1);
    case JumpFlavor::W:
      return fitting_ideal(alexander_module(pres, FoxFlavor::abf()), k + 1);
    case JumpFlavor::Y:
      return fitting_ideal(alexander_invariant(pres), k);
  }
  throw InternalError("unknown jump flavor");
}

namespace {

int boundary_rank_sum(const GroupPresentation& pres, const CharacterPoint& rho, FoxFlavor flavor) {
  AbelianImages images = abelian_images(pres, flavor);
  CharacterPoint chi = rho;
  if (flavor.kind == FoxFlavor::Abf) chi.torsion.clear();
  const int m = pres.num_generators();
  GroupAlgebraMatrix d1(images.ring, m, 1);
  for (int j = 0; j < m; ++j)
    d1(j, 0) = RingElem::monomial(images.ring, images.generator_images[j]) - RingElem(images.ring, 1);
  int r1 = rank_at_character(d1, chi);
  int r2 = pres.relators().empty() ? 0 : rank_at_character(fox_matrix(pres, images), chi);
  return r1 + r2;
}

}  // namespace

int twisted_betti(const GroupPresentation& pres, const CharacterPoint& rho) {
  return pres.num_generators() - boundary_rank_sum(pres, rho, FoxFlavor::ab());
}

bool cv_membership(const GroupPresentation& pres, const CharacterPoint& rho, int k, JumpFlavor flavor) {
  require(k >= 1, "depth must be positive");
  require(flavor != JumpFlavor::Y, "membership is decided for the V and W flavors");
  FoxFlavor f = flavor == JumpFlavor::V ? FoxFlavor::ab() : FoxFlavor::abf();
  return boundary_rank_sum(pres, rho, f) <= pres.num_generators() - k;
}

bool finiteness_test(const GroupPresentation& pres, int k) {
  require(k >= 1, "depth must be positive");
  ModulePresentation b = alexander_invariant(pres);
  if (k > b.num_generators) return true;
  return module_finite_dimensional(exterior_power_presentation(b, k));
}

}  // namespace alexlab
