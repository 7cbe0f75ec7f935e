#pragma once

#include <string>
#include <vector>

#include "alexlab/ring.hpp"

namespace alexlab {

/// Dense matrix over a RingDescriptor.
struct GroupAlgebraMatrix {
  Ring ring;
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<RingElem>> entries;  // rows x cols

  GroupAlgebraMatrix() = default;
  GroupAlgebraMatrix(Ring r, int rows, int cols);
  RingElem& operator()(int r, int c) { return entries[r][c]; }
  const RingElem& operator()(int r, int c) const { return entries[r][c]; }
  std::string to_string() const;
};

/// coker(relations): one generator per row, one relation per column.
struct ModulePresentation {
  Ring ring;
  int num_generators = 0;
  std::vector<std::vector<RingElem>> relations;  // each of length num_generators
  std::vector<int> degrees;                      // generator degrees when graded

  int num_relations() const { return static_cast<int>(relations.size()); }
  GroupAlgebraMatrix matrix() const;
  static ModulePresentation cokernel(const GroupAlgebraMatrix& m);
  std::string to_string() const;
};

/// Re-reads an element in a ring with the same variables but other coefficients.
RingElem change_coefficients(const RingElem& f, const Ring& target);
GroupAlgebraMatrix change_coefficients(const GroupAlgebraMatrix& m, const Ring& target);
ModulePresentation change_coefficients(const ModulePresentation& m, const Ring& target);

}  // namespace alexlab
