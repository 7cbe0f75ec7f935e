#include "doctest.h"

#include <random>

#include "alexlab/errors.hpp"
#include "alexlab/fox.hpp"
#include "alexlab/linalg.hpp"

using namespace alexlab;

namespace {

// Oracle: H_1 of the regular Z_p^b cover of the presentation 2-complex with
// F_p coefficients, from cells enumerated by path lifting.
int cover_h1_dimension(const GroupPresentation& pres, std::uint64_t p) {
  ModPHomology h = mod_p_homology(pres, p);
  const int b = h.dimension, m = pres.num_generators();
  std::size_t N = 1;
  for (int i = 0; i < b; ++i) N *= p;
  auto add = [&](std::size_t v, const std::vector<std::uint64_t>& g, int sign) {
    std::vector<std::uint64_t> d(b);
    std::size_t x = v;
    for (int i = 0; i < b; ++i) {
      d[i] = x % p;
      x /= p;
    }
    std::size_t out = 0;
    for (int i = b - 1; i >= 0; --i) out = out * p + (d[i] + (sign > 0 ? g[i] : p - g[i] % p)) % p;
    return out;
  };
  PrimeField F{p};
  const std::size_t edges = m * N;
  std::vector<std::vector<std::uint64_t>> d1(N, std::vector<std::uint64_t>(edges, 0));
  for (int j = 0; j < m; ++j)
    for (std::size_t v = 0; v < N; ++v) {
      d1[add(v, h.generator_images[j], 1)][j * N + v] = F.add(d1[add(v, h.generator_images[j], 1)][j * N + v], 1);
      d1[v][j * N + v] = F.sub(d1[v][j * N + v], 1);
    }
  std::vector<std::vector<std::uint64_t>> d2;
  for (const FreeWord& r : pres.relators())
    for (std::size_t start = 0; start < N; ++start) {
      std::vector<std::uint64_t> cell(edges, 0);
      std::size_t cur = start;
      for (const Letter& l : r.letters()) {
        const auto& g = h.generator_images[l.generator - 1];
        for (std::int64_t k = 0; k < std::abs(l.exponent); ++k) {
          if (l.exponent > 0) {
            std::size_t e = (l.generator - 1) * N + cur;
            cell[e] = F.add(cell[e], 1);
            cur = add(cur, g, 1);
          } else {
            cur = add(cur, g, -1);
            std::size_t e = (l.generator - 1) * N + cur;
            cell[e] = F.sub(cell[e], 1);
          }
        }
      }
      REQUIRE(cur == start);
      d2.push_back(cell);
    }
  int rank1 = dense_rank(F, d1, edges);
  int rank2 = dense_rank(F, d2, edges);
  return static_cast<int>(edges) - rank1 - rank2;
}

UPoly torus_alexander(int p, int q) {
  UPoly num = (UPoly::monomial(p * q) - UPoly({1})) * UPoly({-1, 1});
  UPoly den = (UPoly::monomial(p) - UPoly({1})) * (UPoly::monomial(q) - UPoly({1}));
  UPoly quo, rem;
  UPoly::divmod(num, den, quo, rem);
  REQUIRE(rem.is_zero());
  return quo.laurent_normalized();
}

}  // namespace

TEST_CASE("Fox derivatives of the trefoil") {
  GroupAlgebraMatrix f = fox_matrix(builtin_group("trefoil"), FoxFlavor::ab());
  REQUIRE(f.rows == 2);
  REQUIRE(f.cols == 1);
  CHECK(f(0, 0).to_string() == "t^2 - t + 1");
  CHECK(f(1, 0).to_string() == "-t^2 + t - 1");
}

TEST_CASE("Fox matrix of the free group has no columns") {
  GroupAlgebraMatrix f = fox_matrix(builtin_group("free(3)"), FoxFlavor::abf());
  CHECK(f.rows == 3);
  CHECK(f.cols == 0);
}

TEST_CASE("Klein bottle Fox matrix over Z[t^+-1, s]/(s^2 - 1)") {
  GroupAlgebraMatrix f = fox_matrix(builtin_group("klein_bottle"), FoxFlavor::ab());
  REQUIRE(f.rows == 2);
  // r = t a t^-1 a: d/dt = 1 - t a t^-1 = 1 - s; d/da = t + t a t^-1 = t + s
  CHECK(f(0, 0).to_string() == "-s + 1");
  CHECK(f(1, 0).to_string() == "t + s");
  CHECK(f.ring->describe() == "Z[t,s,t^-1]/(s^2-1)");
}

TEST_CASE("Fox product rule: d(w w^-1) = 0 and d(uv) = du + u dv") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> g(1, 3), e(-3, 3);
  AbelianImages im;
  im.ring = group_algebra(2, {3}, Coeff::Int);
  im.generator_images = {{1, 0, 1}, {0, 1, 0}, {1, 1, 2}};
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Letter> a, b;
    for (int k = 0; k < 6; ++k) a.push_back({g(rng), e(rng)}), b.push_back({g(rng), e(rng)});
    FreeWord u(a), v(b);
    for (int j = 0; j < 3; ++j) {
      CHECK(fox_derivative(u * u.inverse(), j, im).is_zero());
      RingElem ub(im.ring, 1);
      for (const Letter& l : u.letters())
        ub = ub * RingElem::monomial(im.ring, [&] {
               Exponents x = im.generator_images[l.generator - 1];
               for (auto& c : x) c *= l.exponent;
               return x;
             }());
      CHECK(fox_derivative(u * v, j, im) == fox_derivative(u, j, im) + ub * fox_derivative(v, j, im));
    }
  }
}

TEST_CASE("fundamental identity violations are internal errors") {
  AbelianImages im;
  im.ring = group_algebra(1, {}, Coeff::Int);
  im.generator_images = {{1}};
  GroupPresentation bogus(1, {FreeWord::generator(1)});
  CHECK_THROWS_AS(fox_matrix(bogus, im), InternalError);
}

TEST_CASE("Koszul presentations of B(G)") {
  ModulePresentation f2 = b_presentation_koszul(builtin_group("free(2)"));
  CHECK(f2.num_generators == 1);
  CHECK(f2.num_relations() == 0);

  ModulePresentation f3 = b_presentation_koszul(builtin_group("free(3)"));
  CHECK(f3.num_generators == 3);
  REQUIRE(f3.num_relations() == 1);
  CHECK(f3.relations[0][0].to_string() == "-t3 + 1");
  CHECK(f3.relations[0][1].to_string() == "t2 - 1");
  CHECK(f3.relations[0][2].to_string() == "-t1 + 1");

  for (int n : {2, 3, 5}) {
    ModulePresentation c = b_presentation_koszul(builtin_group("commutator_power(" + std::to_string(n) + ")"));
    CHECK(c.num_generators == 1);
    REQUIRE(c.num_relations() == 1);
    CHECK(c.relations[0][0].to_string() == std::to_string(n));
  }
  ModulePresentation z2 = b_presentation_koszul(builtin_group("raag(complete:2)"));
  REQUIRE(z2.num_relations() == 1);
  CHECK(z2.relations[0][0].to_string() == "1");
  CHECK_THROWS_AS(b_presentation_koszul(builtin_group("trefoil")), PreconditionError);
}

TEST_CASE("Koszul lifts of random cycles") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> e(-2, 2), c(-3, 3);
  Ring R = group_algebra(4, {}, Coeff::Int);
  for (int trial = 0; trial < 20; ++trial) {
    // random element of im d2, lifted back
    std::vector<RingElem> v(4, RingElem(R));
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        RingElem coef = RingElem::monomial(R, {e(rng), e(rng), e(rng), e(rng)}, c(rng));
        auto d = koszul_d2(R, i, j);
        for (int a = 0; a < 4; ++a) v[a] += coef * d[a];
      }
    CHECK_NOTHROW(koszul_lift(v));
  }
  // d2 d3 = 0
  auto d3 = koszul_d3(R, 0, 1, 2);
  std::vector<RingElem> acc(4, RingElem(R));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      auto d = koszul_d2(R, i, j);
      for (int a = 0; a < 4; ++a) acc[a] += d3[pair_index(i, j, 4)] * d[a];
    }
  for (auto& x : acc) CHECK(x.is_zero());
}

TEST_CASE("univariate Alexander invariants") {
  UnivariateModule t = b_univariate(builtin_group("trefoil"));
  CHECK(t.free_rank == 0);
  REQUIRE(t.invariant_factors.size() == 1);
  CHECK(t.invariant_factors[0] == UPoly({1, -1, 1}));
  CHECK(t.to_string() == "Q[t^+-1]/(t^2 - t + 1)");
  UnivariateModule z = b_univariate(builtin_group("free(1)"));
  CHECK(z.to_string() == "0");
  UnivariateModule t25 = b_univariate(builtin_group("torus_knot(2,5)"));
  REQUIRE(t25.invariant_factors.size() == 1);
  CHECK(t25.invariant_factors[0] == UPoly({1, -1, 1, -1, 1}));
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {2, 7}, {3, 4}, {3, 5}, {4, 5}}) {
    UnivariateModule k = b_univariate(builtin_group("torus_knot(" + std::to_string(p) + "," + std::to_string(q) + ")"));
    REQUIRE(k.invariant_factors.size() == 1);
    CHECK(k.invariant_factors[0] == torus_alexander(p, q));
  }
  CHECK_THROWS_AS(b_univariate(builtin_group("free(2)")), PreconditionError);
  // Klein bottle has torsion in G_ab
  CHECK_THROWS_AS(b_univariate(builtin_group("klein_bottle")), PreconditionError);
}

TEST_CASE("mod-p Alexander invariants") {
  CHECK(b_mod_p(builtin_group("free(2)"), 2).dimension == 5);
  for (int n = 1; n <= 3; ++n)
    for (int p : {2, 3}) {
      FiniteModule z = b_mod_p(builtin_group("raag(complete:" + std::to_string(n) + ")"), p);
      CHECK(z.dimension == n);
      for (const auto& A : z.actions)
        for (int r = 0; r < z.dimension; ++r)
          for (int c = 0; c < z.dimension; ++c) CHECK(A[r][c] == (r == c ? 1u : 0u));
    }
}

TEST_CASE("mod-p invariants agree with the covering-space oracle") {
  for (const char* name : {"free(1)", "free(2)", "free(3)", "raag(complete:2)", "heisenberg", "heisenberg_quotient",
                           "klein_bottle", "trefoil", "dihedral_inf", "raag(path:3)", "baumslag_solitar(3)"})
    for (int p : {2, 3, 5}) {
      GroupPresentation g = builtin_group(name);
      if (mod_p_h1(g, p) > 3) continue;
      INFO(std::string(name) << " p=" << p);
      CHECK(b_mod_p(g, p).dimension == cover_h1_dimension(g, p));
    }
}

TEST_CASE("Heisenberg B_p is three-dimensional") {
  // G'_p = <x^p, y^p, z> with [x^p, y^p] = z^(p^2): abelianization Z^2 + Z_{p^2}
  for (int p : {2, 3, 5}) CHECK(b_mod_p(builtin_group("heisenberg"), p).dimension == 3);
}

TEST_CASE("mod-p actions commute and have order p") {
  for (const char* name : {"free(2)", "heisenberg", "klein_bottle"}) {
    FiniteModule m = b_mod_p(builtin_group(name), 3);
    PrimeField F{3};
    auto mul = [&](const auto& A, const auto& B) {
      std::vector<std::vector<std::uint64_t>> C(m.dimension, std::vector<std::uint64_t>(m.dimension, 0));
      for (int i = 0; i < m.dimension; ++i)
        for (int k = 0; k < m.dimension; ++k)
          for (int j = 0; j < m.dimension; ++j) C[i][j] = F.add(C[i][j], F.mul(A[i][k], B[k][j]));
      return C;
    };
    for (std::size_t a = 0; a < m.actions.size(); ++a) {
      for (std::size_t b = 0; b < m.actions.size(); ++b)
        CHECK(mul(m.actions[a], m.actions[b]) == mul(m.actions[b], m.actions[a]));
      auto cube = mul(m.actions[a], mul(m.actions[a], m.actions[a]));
      for (int i = 0; i < m.dimension; ++i)
        for (int j = 0; j < m.dimension; ++j) CHECK(cube[i][j] == (i == j ? 1u : 0u));
    }
  }
}

TEST_CASE("Shalen-Wagreich style lower bound on dim B_p") {
  // free groups: b_2^p = 0; Z^2: b_2^p = 1
  for (int p : {2, 3})
    for (int n : {1, 2, 3}) {
      FiniteModule b = b_mod_p(builtin_group("free(" + std::to_string(n) + ")"), p);
      CHECK(b.dimension >= n * (n - 1) / 2 + n);
    }
  for (int p : {2, 3, 5}) CHECK(b_mod_p(builtin_group("raag(complete:2)"), p).dimension >= 1 + 2 - 1);
  CHECK_THROWS_AS(b_mod_p(builtin_group("free(12)"), 2), PreconditionError);
}
