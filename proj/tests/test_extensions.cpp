#include "doctest.h"

#include "alexlab/chen.hpp"
#include "alexlab/errors.hpp"
#include "alexlab/extensions.hpp"

using namespace alexlab;

namespace {

using Q = std::vector<std::vector<Rational>>;

std::vector<long> theta_tail(const GradedDims& d) { return {d.values.begin() + 1, d.values.end()}; }

}  // namespace

TEST_CASE("Klein bottle data") {
  auto ext = builtin_extension("klein");
  CHECK(semidirect_presentation(ext).to_string() == "<a,t | t a t^-1 a>");
  CHECK(action_on_h1(ext, ActionCoeff::Int)[0].entries == Q{{-1}});
  CHECK(action_on_h1(ext, ActionCoeff::ModP, 2)[0].is_identity());
  CHECK(action_on_h1(ext, ActionCoeff::ModP, 3)[0].entries == Q{{2}});
  CHECK_FALSE(exactness_check(ext, ExactnessFlavor::Ab));
  CHECK_FALSE(exactness_check(ext, ExactnessFlavor::Abf));
  CHECK(exactness_check(ext, ExactnessFlavor::P, 2));
  CHECK_FALSE(exactness_check(ext, ExactnessFlavor::P, 3));
  auto rep = verify_transfer(ext, 4);
  CHECK(rep.tables[0].verdict == TransferVerdict::Leq);
  CHECK(rep.tables[0].leq_holds);
  CHECK(rep.consistent);
}

TEST_CASE("free-by-cyclic examples") {
  auto inner = builtin_extension("inner_f2");
  for (auto c : {ActionCoeff::Int, ActionCoeff::Rat})
    for (const auto& a : action_on_h1(inner, c)) CHECK(a.is_identity());
  for (std::uint64_t p : {2, 3, 5}) CHECK(exactness_check(inner, ExactnessFlavor::P, p));
  auto rep = verify_transfer(inner, 6);
  CHECK(rep.tables[0].verdict == TransferVerdict::EqualFrom2);
  CHECK(rep.tables[0].mismatches.empty());
  CHECK(rep.consistent);

  auto tri = builtin_extension("triangular_f2");
  CHECK(action_on_h1(tri, ActionCoeff::Int)[0].entries == Q{{1, 1}, {0, 1}});
  CHECK_FALSE(exactness_check(tri, ExactnessFlavor::Ab));
  CHECK_FALSE(exactness_check(tri, ExactnessFlavor::Abf));
  CHECK(verify_transfer(tri, 4).tables[0].verdict == TransferVerdict::Leq);
}

TEST_CASE("torsion in the kernel") {
  // K = Z + Z_4, q acting by (1,0) -> (1,1), (0,1) -> (0,3)
  GroupPresentation k(2, {commutator(FreeWord::generator(1), FreeWord::generator(2)), FreeWord::generator(2, 4)}, "K",
                      {"a", "b"});
  SplitExtensionData ext{k, GroupPresentation(1, {}, "Z", {"t"}),
                         {{FreeWord::generator(1) * FreeWord::generator(2), FreeWord::generator(2, 3)}}};
  auto m = action_on_h1(ext, ActionCoeff::Int)[0];
  CHECK(m.entries == Q{{1, 0}, {1, 3}});
  CHECK(action_on_h1(ext, ActionCoeff::Rat)[0].is_identity());
  CHECK(exactness_check(ext, ExactnessFlavor::Abf));
  CHECK_FALSE(exactness_check(ext, ExactnessFlavor::Ab));
  CHECK_FALSE(exactness_check(ext, ExactnessFlavor::P, 2));
  // a -> a^2 is not invertible on Z
  SplitExtensionData bad{builtin_group("free(1)"), GroupPresentation(1, {}, "Z", {"t"}), {{FreeWord::generator(1, 2)}}};
  CHECK_THROWS_AS(action_on_h1(bad, ActionCoeff::Int), PreconditionError);
  CHECK_THROWS_AS(action_on_h1(bad, ActionCoeff::ModP, 2), PreconditionError);
  CHECK(action_on_h1(bad, ActionCoeff::ModP, 3)[0].entries == Q{{2}});
}

TEST_CASE("Bestvina-Brady trees") {
  SUBCASE("one edge") {
    auto ext = bestvina_brady_tree(Graph::path(2));
    CHECK(ext.kernel.num_generators() == 1);
    CHECK(exactness_check(ext, ExactnessFlavor::Ab));
    auto ab = abelianization(semidirect_presentation(ext));
    CHECK(ab.free_rank == 2);
    CHECK(ab.torsion_divisors.empty());
  }
  SUBCASE("path and star") {
    for (const char* spec : {"path:3", "star:3", "path:5", "5;1-2,1-3,3-4,3-5"}) {
      Graph t = Graph::parse(spec);
      auto ext = bestvina_brady_tree(t);
      INFO(std::string(spec));
      CHECK(ext.kernel.num_generators() == static_cast<int>(t.edges.size()));
      CHECK(exactness_check(ext, ExactnessFlavor::Ab));
      GroupPresentation g = semidirect_presentation(ext);
      auto ab = abelianization(g);
      CHECK(ab.free_rank == t.vertices);
      CHECK(ab.torsion_divisors.empty());
      // the semidirect product has the Chen ranks of the RAAG it came from
      CHECK(chen_ranks(g, 5).values == chen_ranks(raag(t), 5).values);
    }
  }
  SUBCASE("transfer on the path with three vertices") {
    auto rep = verify_transfer(bestvina_brady_tree(Graph::path(3)), 6);
    const auto& t = rep.tables[0];
    CHECK(t.verdict == TransferVerdict::EqualFrom2);
    CHECK(t.mismatches.empty());
    for (int n = 2; n <= 6; ++n) {
      CHECK(t.kernel.values[n - 1] == n - 1);
      CHECK(t.total.values[n - 1] == n - 1);
    }
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(bestvina_brady_tree(Graph::cycle(4)), PreconditionError);
    CHECK_THROWS_AS(bestvina_brady_tree(Graph::path(1)), PreconditionError);
  }
}

TEST_CASE("random inner-automorphism extensions") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    int m = 2 + static_cast<int>(seed % 2), s = 1 + static_cast<int>(seed % 2);
    auto ext = random_inner_extension(m, s, seed);
    INFO(seed);
    CHECK(exactness_check(ext, ExactnessFlavor::Ab));
    CHECK(exactness_check(ext, ExactnessFlavor::Abf));
    CHECK(exactness_check(ext, ExactnessFlavor::P, 2));
    auto ab = abelianization(semidirect_presentation(ext));
    CHECK(ab.free_rank == m + s);
    auto rep = verify_transfer(ext, 5);
    CHECK(rep.tables[0].verdict == TransferVerdict::EqualFrom2);
    CHECK(rep.tables[0].mismatches.empty());
    CHECK(rep.consistent);
  }
  // same seed, same data
  CHECK(semidirect_presentation(random_inner_extension(3, 2, 9)).to_string() ==
        semidirect_presentation(random_inner_extension(3, 2, 9)).to_string());
}

TEST_CASE("mod-p transfer for an elementary abelian quotient") {
  GroupPresentation zp(1, {FreeWord::generator(1, 2)}, "Z2", {"q"});
  SplitExtensionData ext{builtin_group("free(2)"), zp, {{FreeWord::generator(1), FreeWord::generator(2)}}};
  auto rep = verify_transfer(ext, 5, {2});
  REQUIRE(rep.tables.size() == 2);
  CHECK(rep.p_exact_split.at(2));
  CHECK(rep.tables[1].verdict == TransferVerdict::EqualFrom2);
  CHECK(rep.tables[1].mismatches.empty());
  CHECK(rep.consistent);
}

TEST_CASE("exactness implications") {
  for (const char* spec : {"klein", "inner_f2", "triangular_f2", "bestvina_brady(star:3)", "random_inner(2,1,5)"}) {
    auto ext = builtin_extension(spec);
    INFO(std::string(spec));
    bool ab = exactness_check(ext, ExactnessFlavor::Ab);
    if (ab) {
      CHECK(exactness_check(ext, ExactnessFlavor::Abf));
      for (std::uint64_t p : {2, 3, 5, 7}) CHECK(exactness_check(ext, ExactnessFlavor::P, p));
      auto ga = abelianization(semidirect_presentation(ext));
      auto ka = abelianization(ext.kernel);
      auto qa = abelianization(ext.quotient);
      CHECK(ga.free_rank == ka.free_rank + qa.free_rank);
    }
  }
  CHECK_THROWS_AS(builtin_extension("nope"), PreconditionError);
}
