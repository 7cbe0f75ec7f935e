#include "alexlab/module.hpp"

#include "alexlab/errors.hpp"

namespace alexlab {

GroupAlgebraMatrix::GroupAlgebraMatrix(Ring r, int rows_, int cols_)
    : ring(std::move(r)), rows(rows_), cols(cols_), entries(rows_, std::vector<RingElem>(cols_, RingElem(ring))) {}

std::string GroupAlgebraMatrix::to_string() const {
  std::string out = "[";
  for (int i = 0; i < rows; ++i) {
    out += i ? "; " : "";
    for (int j = 0; j < cols; ++j) out += (j ? ", " : "") + entries[i][j].to_string();
  }
  return out + "]";
}

GroupAlgebraMatrix ModulePresentation::matrix() const {
  GroupAlgebraMatrix m(ring, num_generators, num_relations());
  for (int c = 0; c < num_relations(); ++c)
    for (int r = 0; r < num_generators; ++r) m(r, c) = relations[c][r];
  return m;
}

ModulePresentation ModulePresentation::cokernel(const GroupAlgebraMatrix& m) {
  ModulePresentation p;
  p.ring = m.ring;
  p.num_generators = m.rows;
  for (int c = 0; c < m.cols; ++c) {
    std::vector<RingElem> col;
    for (int r = 0; r < m.rows; ++r) col.push_back(m(r, c));
    p.relations.push_back(std::move(col));
  }
  return p;
}

std::string ModulePresentation::to_string() const {
  std::string out = "coker over " + ring->describe() + " with " + std::to_string(num_generators) + " generator(s): [";
  for (int c = 0; c < num_relations(); ++c) {
    out += c ? "; " : "";
    for (int r = 0; r < num_generators; ++r) out += (r ? ", " : "") + relations[c][r].to_string();
  }
  return out + "]";
}

RingElem change_coefficients(const RingElem& f, const Ring& target) {
  require(f.ring()->num_vars() == target->num_vars() && f.ring()->kind == target->kind &&
              f.ring()->torsion == target->torsion,
          "coefficient change between incompatible rings");
  RingElem out(target);
  for (const auto& [e, c] : f.terms()) out.add_term(e, c);
  return out;
}

GroupAlgebraMatrix change_coefficients(const GroupAlgebraMatrix& m, const Ring& target) {
  GroupAlgebraMatrix out(target, m.rows, m.cols);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) out(r, c) = change_coefficients(m(r, c), target);
  return out;
}

ModulePresentation change_coefficients(const ModulePresentation& m, const Ring& target) {
  ModulePresentation out = m;
  out.ring = target;
  for (auto& col : out.relations)
    for (auto& x : col) x = change_coefficients(x, target);
  return out;
}

}  // namespace alexlab
