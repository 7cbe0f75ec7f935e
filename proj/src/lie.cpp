#include "alexlab/lie.hpp"

#include "alexlab/errors.hpp"
#include "alexlab/fox.hpp"
#include "alexlab/linalg.hpp"

namespace alexlab {

void magnus_degree2(const FreeWord& w, int b, std::vector<Rational>& linear,
                    std::vector<std::vector<Rational>>& quadratic) {
  linear.assign(b, 0);
  quadratic.assign(b, std::vector<Rational>(b, 0));
  for (const Letter& l : w.letters()) {
    require(l.generator >= 1 && l.generator <= b, "word uses a generator outside the cup data");
    // (1 + L + Q)(1 + k X + C(k,2) X^2)
    const int g = l.generator - 1;
    const std::int64_t k = l.exponent;
    for (int i = 0; i < b; ++i) quadratic[i][g] += linear[i] * Rational(static_cast<long>(k));
    quadratic[g][g] += Rational(static_cast<long>(k * (k - 1) / 2));
    linear[g] += Rational(static_cast<long>(k));
  }
}

int CupData::nabla_rank() const {
  if (nabla.empty()) return 0;
  const std::size_t rows = nabla[0].size();
  return dense_rank(RationalField{}, nabla, rows);
}

CupData cup_data(const GroupPresentation& pres) {
  require(pres.is_commutator_relators(), "cup data needs relators with zero exponent sums");
  CupData cd;
  cd.b1 = pres.num_generators();
  const int b = cd.b1;
  for (const FreeWord& r : pres.relators()) {
    std::vector<Rational> lin;
    std::vector<std::vector<Rational>> q;
    magnus_degree2(r, b, lin, q);
    std::vector<Rational> col(binomial(b, 2), 0);
    for (int i = 0; i < b; ++i)
      for (int j = i + 1; j < b; ++j) {
        ensure(q[i][j] + q[j][i] == 0, "Magnus coefficients of a commutator word are not antisymmetric");
        col[pair_index(i, j, b)] = q[i][j];
      }
    cd.nabla.push_back(std::move(col));
  }
  return cd;
}

ModulePresentation inf_alexander_invariant(const CupData& cd) {
  const int b = cd.b1;
  Ring ring = polynomial_ring(b, Coeff::Rat);
  ModulePresentation m;
  m.ring = ring;
  m.num_generators = static_cast<int>(binomial(b, 2));
  m.degrees.assign(m.num_generators, 0);
  auto x = [&](int i) { return RingElem::variable(ring, i); };
  for (int i = 0; i < b; ++i)
    for (int j = i + 1; j < b; ++j)
      for (int k = j + 1; k < b; ++k) {
        std::vector<RingElem> col(m.num_generators, RingElem(ring));
        col[pair_index(j, k, b)] = x(i);
        col[pair_index(i, k, b)] = -x(j);
        col[pair_index(i, j, b)] = x(k);
        m.relations.push_back(std::move(col));
      }
  for (const auto& c : cd.nabla) {
    std::vector<RingElem> col;
    bool nonzero = false;
    for (const auto& v : c) {
      col.emplace_back(ring, v);
      nonzero = nonzero || v != 0;
    }
    if (nonzero) m.relations.push_back(std::move(col));
  }
  return m;
}

ModulePresentation inf_alexander_module(const CupData& cd, int h2_dim) {
  require(h2_dim >= 0 && h2_dim <= cd.h2(), "h2_dim exceeds the number of nabla columns");
  const int b = cd.b1;
  Ring ring = polynomial_ring(b, Coeff::Rat);
  ModulePresentation m;
  m.ring = ring;
  m.num_generators = b;
  m.degrees.assign(b, 0);
  for (int c = 0; c < h2_dim; ++c) {
    std::vector<RingElem> col(b, RingElem(ring));
    for (int i = 0; i < b; ++i)
      for (int j = i + 1; j < b; ++j) {
        const Rational& v = cd.nabla[c][pair_index(i, j, b)];
        if (v == 0) continue;
        col[i] += RingElem::variable(ring, j).scaled(v);
        col[j] -= RingElem::variable(ring, i).scaled(v);
      }
    m.relations.push_back(std::move(col));
  }
  return m;
}

ModulePresentation inf_alexander_module(const CupData& cd) { return inf_alexander_module(cd, cd.h2()); }

GradedDims holonomy_chen_ranks(const CupData& cd, int max_n) {
  require(max_n >= 1 && max_n <= kMaxHolonomyN, "max-n must be in 1.." + std::to_string(kMaxHolonomyN));
  GradedDims out{1, {cd.b1}};
  if (max_n >= 2) {
    auto dims = graded_dims_linear(inf_alexander_invariant(cd), 0, max_n - 2);
    out.values.insert(out.values.end(), dims.values.begin(), dims.values.end());
  }
  return out;
}

bool resonance_membership(const CupData& cd, const std::vector<Rational>& a, int k) {
  require(static_cast<int>(a.size()) == cd.b1, "point has the wrong number of coordinates");
  require(k >= 1, "depth must be positive");
  const int b = cd.b1;
  bool zero = true;
  for (const auto& v : a) zero = zero && v == 0;
  // delta^1_a(u)(c) = <c, a ^ u>
  std::vector<std::vector<Rational>> d1;
  for (const auto& c : cd.nabla) {
    std::vector<Rational> row(b, 0);
    for (int i = 0; i < b; ++i)
      for (int j = i + 1; j < b; ++j) {
        const Rational& v = c[pair_index(i, j, b)];
        if (v == 0) continue;
        row[j] += v * a[i];
        row[i] -= v * a[j];
      }
    d1.push_back(std::move(row));
  }
  int rank1 = d1.empty() ? 0 : dense_rank(RationalField{}, d1, b);
  int rank0 = zero ? 0 : 1;
  return (b - rank1) - rank0 >= k;
}

Ideal resonance_ideal(const CupData& cd, int k) {
  require(k >= 1, "depth must be positive");
  return fitting_ideal(inf_alexander_module(cd), k + 1);
}

}  // namespace alexlab
