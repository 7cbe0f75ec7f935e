#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "alexlab/module.hpp"
#include "alexlab/ring.hpp"

namespace alexlab {

/// Ideal given by generators; canonical form: no zero generators, each
/// generator cleared of monomial units and sign-normalized, deduplicated
/// and sorted by its canonical text.
struct Ideal {
  Ring ring;
  std::vector<RingElem> generators;

  static Ideal make(Ring ring, std::vector<RingElem> gens);
  static Ideal unit(Ring ring);
  static Ideal zero(Ring ring) { return {std::move(ring), {}}; }
  bool is_zero() const { return generators.empty(); }
  bool is_unit_generated() const;  // a nonzero constant among the generators
  std::string to_string() const;
};

/// Fitting ideals indexed by codimension: Fitt_k(M) is generated by the
/// minors of size g - k + 1 of the relation matrix (g = number of
/// generators). It is the unit ideal when g - k + 1 <= 0 and the zero ideal
/// when g - k + 1 exceeds the number of relation columns.
///
/// Worked example, g = 2 generators and relation matrix [[a, b, c], [d, e, f]]:
/// Fitt_1 = (ae - bd, af - cd, bf - ce), Fitt_2 = (a, b, c, d, e, f), Fitt_3 = (1).
Ideal fitting_ideal(const ModulePresentation& m, int k);

/// Largest number of minors fitting_ideal will enumerate.
inline constexpr std::uint64_t kMinorLimit = 250000;

/// Determinant by cofactor expansion over column subsets.
RingElem determinant(const std::vector<std::vector<RingElem>>& square);

/// Lambda^k coker(phi) = coker(F (x) Lambda^{k-1} G -> Lambda^k G). Generators
/// e_S for k-subsets S in lexicographic order. Requires k <= 4 and C(g,k) <= 5000.
ModulePresentation exterior_power_presentation(const ModulePresentation& m, int k);

/// Index of a sorted k-subset of {0..g-1} in lexicographic order.
int subset_index(const std::vector<int>& subset, int g);
std::vector<std::vector<int>> subsets(int g, int k);

/// Groebner basis of an ideal over Q or F_p. Laurent variables get inverse
/// variables u_i with t_i u_i - 1; torsion variables get s^d - 1.
class GroebnerIdeal {
 public:
  explicit GroebnerIdeal(const Ideal& ideal);
  ~GroebnerIdeal();
  GroebnerIdeal(GroebnerIdeal&&) noexcept;
  bool contains(const RingElem& f) const;
  /// Finitely many points in the variety (over the algebraic closure).
  bool zero_dimensional() const;
  int basis_size() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

bool ideal_membership(const Ideal& ideal, const RingElem& f);

/// Finite dimensionality of a module over Q or F_p group algebras or
/// polynomial rings, via a module Groebner basis of the relations.
bool module_finite_dimensional(const ModulePresentation& m);

struct GradedDims {
  int start = 0;
  std::vector<long> values;
};

/// Largest truncation order accepted by graded_dims_truncated.
inline constexpr int kMaxTruncationOrder = 24;

/// dim gr_n(M (x) Q) for n = 0..N-2 with respect to the augmentation ideal, via
/// M / m^N M over Q[x_1..x_r]/m^N (t_i -> 1 + x_i, torsion -> 1).
GradedDims graded_dims_truncated(const ModulePresentation& m, int order);

/// dim M/I^n M for n = 0..order (same construction, exposed for the Crowell path).
std::vector<long> truncated_quotient_dims(const ModulePresentation& m, int order);

/// Graded modules over Q[x_1..x_b]: dim M_d for d in [from, to] by linear
/// algebra in each degree, and by counting standard monomials of a Groebner basis.
GradedDims graded_dims_linear(const ModulePresentation& m, int from, int to);
GradedDims graded_dims_groebner(const ModulePresentation& m, int from, int to);

/// A character of Z^r + Z_{d_1} + ... with values in Q(zeta_m): free
/// coordinates take the given nonzero values, torsion coordinate j takes
/// zeta_{d_j}^{torsion[j]}. The conductor must be a multiple of every d_j
/// (and of whatever roots of unity the free values use).
struct CharacterPoint {
  int conductor = 1;
  std::vector<CyclotomicField::Elem> free;
  std::vector<std::int64_t> torsion;

  static CharacterPoint rational(const std::vector<Rational>& free, const std::vector<std::int64_t>& torsion = {},
                                 const std::vector<std::int64_t>& divisors = {});
  /// Lifts to the conductor lcm(conductor, d_j) so torsion values are representable.
  CharacterPoint with_conductor(int m) const;
  bool is_identity() const;
  std::string to_string() const;
};

/// lcm of the torsion divisors, suitable as a minimal conductor.
int minimal_conductor(const std::vector<std::int64_t>& divisors);

/// Evaluates a group algebra (or polynomial ring) element at the character.
CyclotomicField::Elem evaluate(const RingElem& f, const CharacterPoint& chi);

/// Exact rank of the matrix evaluated at chi over Q(zeta_m).
int rank_at_character(const GroupAlgebraMatrix& mat, const CharacterPoint& chi);

/// The same rank computed in F_q for a prime q = 1 mod m (zeta_m -> a
/// primitive m-th root of unity in F_q). Can only drop below the exact rank.
int rank_at_character_modq(const GroupAlgebraMatrix& mat, const CharacterPoint& chi, std::uint64_t* q_used = nullptr);

/// Whether every generator of the ideal vanishes at chi.
bool ideal_vanishes_at(const Ideal& ideal, const CharacterPoint& chi);

}  // namespace alexlab
