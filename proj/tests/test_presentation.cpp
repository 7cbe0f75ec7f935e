#include "doctest.h"

#include <random>

#include "alexlab/abelian.hpp"
#include "alexlab/errors.hpp"
#include "alexlab/presentation.hpp"

using namespace alexlab;

namespace {

FreeWord random_word(std::mt19937& rng, int gens, int len) {
  std::uniform_int_distribution<int> g(1, gens), e(-2, 2);
  std::vector<Letter> ls;
  for (int i = 0; i < len; ++i) ls.push_back({g(rng), e(rng)});
  return FreeWord(ls);
}

}  // namespace

TEST_CASE("words are freely reduced on construction") {
  FreeWord w({{1, 2}, {1, -2}, {2, 1}, {2, 3}, {3, 0}});
  REQUIRE(w.letters().size() == 1);
  CHECK(w.letters()[0] == Letter{2, 4});
  FreeWord a = FreeWord::generator(1), b = FreeWord::generator(2);
  CHECK((a * b * b.inverse() * a.inverse()).empty());
  CHECK(commutator(a, b).letters().size() == 4);
  CHECK(a.pow(-3) == FreeWord::generator(1, -3));
}

TEST_CASE("random words: inverse and power laws") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    FreeWord w = random_word(rng, 3, 8);
    CHECK((w * w.inverse()).empty());
    CHECK(w.pow(3) == w * w * w);
    CHECK(w.pow(-2) == w.inverse() * w.inverse());
    for (const auto& [g, e] : w.letters()) CHECK(e != 0);
    for (std::size_t i = 1; i < w.letters().size(); ++i)
      CHECK(w.letters()[i].generator != w.letters()[i - 1].generator);
  }
}

TEST_CASE("parse the trefoil") {
  GroupPresentation p = parse_presentation("<x1,x2 | x1 x2 x1 = x2 x1 x2>");
  CHECK(p.num_generators() == 2);
  REQUIRE(p.relators().size() == 1);
  CHECK(p.to_string() == "<x1,x2 | x1 x2 x1 x2^-1 x1^-1 x2^-1>");
  CHECK(p.relators() == builtin_group("trefoil").relators());
}

TEST_CASE("parse edge cases") {
  GroupPresentation z = parse_presentation("<x1 | >");
  CHECK(z.num_generators() == 1);
  CHECK(z.relators().empty());
  GroupPresentation c = parse_presentation("<x1,x2 | [x1,x2]^3>");
  REQUIRE(c.relators().size() == 1);
  FreeWord k = commutator(FreeWord::generator(1), FreeWord::generator(2));
  CHECK(c.relators()[0] == k * k * k);
  CHECK(c.relators()[0].letters().size() == 12);
  GroupPresentation named = parse_presentation("# Klein\n<t, a | t a t^-1 = a^-1>");
  CHECK(named.to_string() == "<t,a | t a t^-1 a>");
  GroupPresentation chain = parse_presentation("<a,b,c | a b c = b c a = c a b>");
  CHECK(chain.relators().size() == 2);
  GroupPresentation ident = parse_presentation("<x1 | 1, (x1 x1^-1)^5>");
  CHECK(ident.relators().size() == 2);
  CHECK(ident.relators()[0].empty());
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_presentation("<x1,x2 | x1 x3>"), ParseError);
  try {
    parse_presentation("<x1,x2 |\n  x1 x3>");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 6);
    CHECK(std::string(e.what()).find("out of range") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_presentation("< | x1>"), ParseError);
  CHECK_THROWS_AS(parse_presentation("<x1 | x1 $>"), ParseError);
  CHECK_THROWS_AS(parse_presentation("<x1 | x1^>"), ParseError);
  CHECK_THROWS_AS(parse_presentation("<x1 | [x1, x1>"), ParseError);
  CHECK_THROWS_AS(parse_presentation("<x1,x1 | >"), ParseError);
  CHECK_THROWS_AS(parse_presentation("<a | b>"), ParseError);
  CHECK_THROWS_AS(parse_presentation("<x1 | x1> extra"), ParseError);
}

TEST_CASE("print then parse is the identity") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    int m = 1 + trial % 4;
    std::vector<FreeWord> rels;
    for (int r = 0; r < trial % 4; ++r) rels.push_back(random_word(rng, m, 6));
    GroupPresentation p(m, rels);
    GroupPresentation q = parse_presentation(p.to_string());
    CHECK(q.num_generators() == p.num_generators());
    CHECK(q.relators() == p.relators());
    CHECK(q.to_string() == p.to_string());
  }
  for (const char* name : {"heisenberg", "klein_bottle", "pure_braid(4)", "torus_knot(2,5)", "raag(path:3)"}) {
    GroupPresentation p = builtin_group(name);
    GroupPresentation q = parse_presentation(p.to_string());
    CHECK(q.relators() == p.relators());
    CHECK(q.generator_names() == p.generator_names());
  }
}

TEST_CASE("builtin catalog") {
  CHECK(builtin_group("dihedral_inf").to_string() == "<x1,x2 | x1^2, x2^2>");
  CHECK(builtin_group("free(3)").num_generators() == 3);
  CHECK(builtin_group("free(3)").relators().empty());
  CHECK(builtin_group("klein_bottle").to_string() == "<t,a | t a t^-1 a>");
  CHECK(builtin_group("heisenberg").to_string() == "<x,y,z | x y x^-1 y^-1 z^-1, x z x^-1 z^-1, y z y^-1 z^-1>");
  CHECK(builtin_group("baumslag_solitar(2)").to_string() == "<a,t | t a t^-1 a^-2>");
  CHECK(builtin_group("raag(4;1-2,2-3)").relators().size() == 2);
  CHECK(builtin_group("raag(complete:4)").relators().size() == 6);
  CHECK(builtin_group("pure_braid(3)").relators().size() == 2);
  CHECK(builtin_group("pure_braid(3)").is_commutator_relators());
  CHECK(builtin_group("pure_braid(4)").is_commutator_relators());
  CHECK_THROWS_AS(builtin_group("pure_braid(5)"), PreconditionError);
  CHECK_THROWS_AS(builtin_group("nonsense"), PreconditionError);
  CHECK_THROWS_AS(builtin_group("raag(3;1-4)"), PreconditionError);
  CHECK_THROWS_AS(builtin_group("raag(3;1-1)"), PreconditionError);
  CHECK_THROWS_AS(builtin_group("torus_knot(2,4)"), PreconditionError);
}

TEST_CASE("pure braid groups have free abelianization") {
  for (int n : {3, 4}) {
    AbelianizationData ab = abelianization(builtin_group("pure_braid(" + std::to_string(n) + ")"));
    CHECK(ab.free_rank == n * (n - 1) / 2);
    CHECK(ab.torsion_divisors.empty());
  }
}

TEST_CASE("graphs") {
  CHECK(Graph::path(3).is_tree());
  CHECK(Graph::star(3).is_tree());
  CHECK_FALSE(Graph::cycle(4).is_tree());
  CHECK_FALSE(Graph::parse("4;1-2,3-4").is_tree());
  CHECK(Graph::parse("3; 2-1 , 2-3").to_string() == "3;1-2,2-3");
}

TEST_CASE("semidirect products") {
  GroupPresentation z = builtin_group("free(1)");
  GroupPresentation zt(1, {}, "Z", {"t"});
  GroupPresentation za(1, {}, "Z", {"a"});
  SplitExtensionData klein{za, zt, {{FreeWord::generator(1, -1)}}};
  GroupPresentation g = semidirect_presentation(klein);
  CHECK(g.to_string() == "<a,t | t a t^-1 a>");
  AbelianizationData ab = abelianization(g);
  CHECK(ab.free_rank == 1);
  CHECK(ab.torsion_divisors == std::vector<Integer>{2});

  GroupPresentation f2 = builtin_group("free(2)");
  SplitExtensionData triv{f2, z, {{FreeWord::generator(1), FreeWord::generator(2)}}};
  GroupPresentation prod = semidirect_presentation(triv);
  CHECK(prod.to_string() == "<x1,x2,x1_q | x1_q x1 x1_q^-1 x1^-1, x1_q x2 x1_q^-1 x2^-1>");
  CHECK(abelianization(prod).free_rank == 3);

  FreeWord a = FreeWord::generator(1), b = FreeWord::generator(2);
  SplitExtensionData inner{f2, z, {{a, conjugate(a, b)}}};
  GroupPresentation gi = semidirect_presentation(inner);
  CHECK(gi.num_generators() == 3);
  CHECK(gi.relators().size() == 2);

  SplitExtensionData bad{f2, z, {{a}}};
  CHECK_THROWS_AS(semidirect_presentation(bad), PreconditionError);
}
