#include "doctest.h"

#include <random>

#include "alexlab/arith.hpp"
#include "alexlab/groebner.hpp"
#include "alexlab/linalg.hpp"

using namespace alexlab;

using GB = Groebner<RationalField>;

namespace {

GB::Poly poly(std::initializer_list<std::pair<std::vector<int>, long>> terms, int pos = 0) {
  GB::Poly p;
  for (auto& [e, c] : terms) p.push_back({e, pos, Rational(c)});
  return p;
}

// All monomials of degree d in n variables.
std::vector<std::vector<int>> monomials(int n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[i] = a;
      rec(i + 1, left - a);
    }
  };
  rec(0, d);
  return out;
}

// Oracle for homogeneous ideals: the degree-d part of I is spanned by all
// monomial multiples of generators landing in degree d.
SparseEchelon<RationalField> degree_part(const std::vector<GB::Poly>& gens, int n, int d,
                                         const std::vector<std::vector<int>>& monos) {
  auto idx = [&](const std::vector<int>& e) {
    return static_cast<int>(std::find(monos.begin(), monos.end(), e) - monos.begin());
  };
  SparseEchelon<RationalField> ech{RationalField{}};
  for (const auto& g : gens) {
    int dg = GB::degree(g[0].e);
    if (dg > d) continue;
    for (const auto& m : monomials(n, d - dg)) {
      std::map<int, Rational> row;
      for (const auto& t : g) {
        std::vector<int> e(n);
        for (int v = 0; v < n; ++v) e[v] = t.e[v] + m[v];
        row[idx(e)] += t.c;
      }
      SparseEchelon<RationalField>::Row r;
      for (auto& [c, v] : row)
        if (sgn(v)) r.emplace_back(c, v);
      ech.insert(r);
    }
  }
  return ech;
}

bool homogeneous_membership(const std::vector<GB::Poly>& gens, const GB::Poly& f, int n, int d) {
  auto monos = monomials(n, d);
  auto ech = degree_part(gens, n, d, monos);
  std::map<int, Rational> row;
  for (const auto& t : f) row[static_cast<int>(std::find(monos.begin(), monos.end(), t.e) - monos.begin())] += t.c;
  SparseEchelon<RationalField>::Row r;
  for (auto& [c, v] : row)
    if (sgn(v)) r.emplace_back(c, v);
  return ech.contains(r);
}

}  // namespace

TEST_CASE("x^3 lies in (x^2 + y^2, xy)") {
  GB g(RationalField{}, 2);
  g.compute({poly({{{2, 0}, 1}, {{0, 2}, 1}}), poly({{{1, 1}, 1}})});
  CHECK(g.reduces_to_zero(poly({{{3, 0}, 1}})));
  CHECK(g.reduces_to_zero(poly({{{0, 3}, 1}})));
  CHECK_FALSE(g.reduces_to_zero(poly({{{2, 0}, 1}})));
  CHECK(g.zero_dimensional(1));
}

TEST_CASE("1 is not in (x)") {
  GB g(RationalField{}, 2);
  g.compute({poly({{{1, 0}, 1}})});
  CHECK_FALSE(g.reduces_to_zero(poly({{{0, 0}, 1}})));
  CHECK_FALSE(g.zero_dimensional(1));
}

TEST_CASE("Laurent trick: t^2 - t + 1 generates with tu - 1") {
  // variables t, u; the ideal (t^2 - t + 1, tu - 1) contains u^2 - u + 1
  GB g(RationalField{}, 2);
  g.compute({poly({{{2, 0}, 1}, {{1, 0}, -1}, {{0, 0}, 1}}), poly({{{1, 1}, 1}, {{0, 0}, -1}})});
  CHECK(g.reduces_to_zero(poly({{{0, 2}, 1}, {{0, 1}, -1}, {{0, 0}, 1}})));
  CHECK(g.zero_dimensional(1));
}

TEST_CASE("random homogeneous ideals agree with degree-wise linear algebra") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coef(-2, 2), ngens(1, 3), deg(1, 3);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 3;
    std::vector<GB::Poly> gens;
    for (int k = ngens(rng); k > 0; --k) {
      int d = deg(rng);
      GB::Poly p;
      for (auto& m : monomials(n, d))
        if (int c = coef(rng); c && rng() % 3 == 0) p.push_back({m, 0, Rational(c)});
      if (p.empty()) p.push_back({monomials(n, d)[0], 0, Rational(1)});
      gens.push_back(p);
    }
    GB g(RationalField{}, n);
    std::vector<GB::Poly> normalized;
    for (auto& p : gens) normalized.push_back(g.normalize(p));
    g.compute(normalized);
    for (int d = 1; d <= 5; ++d) {
      auto monos = monomials(n, d);
      long expected = static_cast<long>(monos.size()) - degree_part(normalized, n, d, monos).rank();
      CHECK(g.hilbert(d, {0}) == expected);
      GB::Poly f;
      for (auto& m : monos)
        if (int c = coef(rng)) f.push_back({m, 0, Rational(c)});
      f = g.normalize(f);
      if (!f.empty()) CHECK(g.reduces_to_zero(f) == homogeneous_membership(normalized, f, n, d));
      CHECK(g.reduces_to_zero(normalized[0]));
    }
  }
}

TEST_CASE("module hilbert function: coker of the Koszul map on two generators") {
  // S^2 / (x2 e1 - x1 e2): Hilbert function 2(d+1) - d
  GB g(RationalField{}, 2);
  GB::Poly rel{{{0, 1}, 0, Rational(1)}, {{1, 0}, 1, Rational(-1)}};
  g.compute({g.normalize(rel)});
  for (int d = 0; d <= 6; ++d) CHECK(g.hilbert(d, {0, 0}) == 2 * (d + 1) - d);
  CHECK_FALSE(g.zero_dimensional(2));
}

TEST_CASE("F_p coefficients") {
  Groebner<PrimeField> g(PrimeField{5}, 1);
  using P = Groebner<PrimeField>::Poly;
  g.compute({P{{{5}, 0, 1}, {{0}, 0, 4}}});  // x^5 - 1
  CHECK(g.reduces_to_zero(P{{{10}, 0, 1}, {{0}, 0, 4}}));
}
