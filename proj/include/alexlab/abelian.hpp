#pragma once

#include <cstdint>
#include <vector>

#include "alexlab/arith.hpp"
#include "alexlab/presentation.hpp"

namespace alexlab {

using IntMatrix = std::vector<std::vector<Integer>>;

/// U * A * V = diag(d_1, ..., d_s, 0, ...) with d_1 | d_2 | ... and d_i > 0.
/// Only the column transform V and its inverse are recorded.
struct SmithForm {
  std::vector<Integer> diagonal;  // length min(rows, cols); zeros trail
  IntMatrix V;                    // cols x cols, unimodular
  IntMatrix V_inverse;
  int rank() const;
};

SmithForm smith_form(const IntMatrix& a, std::size_t cols);

/// Rows = relators, columns = generators; entry = exponent sum.
IntMatrix exponent_matrix(const GroupPresentation& pres);

/// G_ab = Z^r + Z_{d_1} + ... in SNF coordinates (free coordinates first,
/// then torsion coordinates in divisibility order).
struct AbelianizationData {
  int num_generators = 0;
  int free_rank = 0;
  std::vector<Integer> torsion_divisors;
  /// num_generators rows; row i is the image of x_i in SNF coordinates, torsion
  /// entries reduced into [0, d).
  IntMatrix basis_change;
  /// One row per SNF coordinate: an integer combination of generators mapping
  /// to that coordinate's unit vector.
  IntMatrix coordinate_preimages;

  int num_coordinates() const { return free_rank + static_cast<int>(torsion_divisors.size()); }
  /// Divisor of coordinate c, 0 for free coordinates.
  Integer divisor(int c) const;
  /// Image of an integer exponent vector (indexed by generator) in SNF coordinates.
  std::vector<Integer> project(const std::vector<Integer>& exponents) const;
};

AbelianizationData abelianization(const GroupPresentation& pres);

/// H_1(G; Z_p) together with the projection of each generator.
struct ModPHomology {
  std::uint64_t p = 0;
  int dimension = 0;
  /// num_generators rows of length `dimension`, entries in [0, p).
  std::vector<std::vector<std::uint64_t>> generator_images;
};

ModPHomology mod_p_homology(const GroupPresentation& pres, std::uint64_t p);

/// b_1^p(G) = dim H_1(G; Z_p).
int mod_p_h1(const GroupPresentation& pres, std::uint64_t p);

}  // namespace alexlab
