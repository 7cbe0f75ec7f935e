// Acceptance program: one PASS/FAIL line per criterion. Exits 0 once every
// criterion has been evaluated; with --strict the exit code is the number of
// failing criteria.

#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "alexlab/abelian.hpp"
#include "alexlab/chen.hpp"
#include "alexlab/errors.hpp"
#include "alexlab/extensions.hpp"
#include "alexlab/fox.hpp"
#include "alexlab/jumploci.hpp"
#include "alexlab/lie.hpp"

using namespace alexlab;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail << "failed: ";
    else detail << "; ";
    detail << what;
    pass = false;
  }
};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<void(Outcome&)> body;
};

std::vector<std::int64_t> divisors_of(const GroupPresentation& g) {
  std::vector<std::int64_t> d;
  for (const auto& x : abelianization(g).torsion_divisors) d.push_back(to_int64(x));
  return d;
}

// Character with free coordinates drawn from 1, -1, small rationals and
// roots of unity of order 3, 4, 6; torsion exponents uniform.
CharacterPoint sample_character(const GroupPresentation& g, std::mt19937& rng) {
  AbelianizationData ab = abelianization(g);
  auto div = divisors_of(g);
  const int conductor = std::lcm(minimal_conductor(div), 12);
  CyclotomicField k(conductor);
  std::uniform_int_distribution<int> kind(0, 5), num(-6, 6), den(1, 5), root(1, 11);
  while (true) {
    CharacterPoint chi;
    chi.conductor = conductor;
    for (int i = 0; i < ab.free_rank; ++i) {
      switch (kind(rng)) {
        case 0:
          chi.free.push_back(k.one());
          break;
        case 1:
          chi.free.push_back(k.from(-1));
          break;
        case 2:
        case 3: {
          int a = num(rng);
          if (a == 0) a = 3;
          chi.free.push_back(k.from(Rational(a, den(rng))));
          break;
        }
        default:
          chi.free.push_back(k.zeta_power(root(rng) * (conductor / 12)));
      }
    }
    for (auto d : div) chi.torsion.push_back(std::uniform_int_distribution<std::int64_t>(0, d - 1)(rng));
    if (!chi.is_identity()) return chi;
  }
}

CharacterPoint rational_point(const GroupPresentation& g, const std::vector<Rational>& free,
                              const std::vector<std::int64_t>& torsion) {
  return CharacterPoint::rational(free, torsion, divisors_of(g));
}

CharacterPoint root_point(int order, int power) {
  CharacterPoint chi;
  chi.conductor = order;
  chi.free = {CyclotomicField(order).zeta_power(power)};
  return chi;
}

bool has_b_presentation(const GroupPresentation& g) {
  if (g.is_commutator_relators()) return true;
  AbelianizationData ab = abelianization(g);
  return ab.free_rank == 1 && ab.torsion_divisors.empty();
}

const std::vector<std::string> kBuiltins = {
    "free(2)",      "free(3)",       "trefoil",       "torus_knot(2,5)",     "torus_knot(3,4)",
    "dihedral_inf", "heisenberg",    "klein_bottle",  "baumslag_solitar(2)", "raag(path:3)",
    "raag(cycle:4)", "raag(complete:3)", "pure_braid(3)", "commutator_power(2)", "heisenberg_quotient"};

std::vector<std::string> commutator_builtins() {
  std::vector<std::string> out;
  for (const auto& name : kBuiltins)
    if (builtin_group(name).is_commutator_relators()) out.push_back(name);
  for (const char* extra : {"free(4)", "raag(star:3)", "raag(path:4)", "raag(complete:2)", "pure_braid(4)"})
    out.push_back(extra);
  return out;
}

std::string join(const std::vector<long>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Hilbert function of the rank-one free module Q[x1,x2] by counting monomials.
long free_module_hilbert(int degree) {
  long count = 0;
  for (int a = 0; a <= degree; ++a)
    for (int b = 0; b <= degree; ++b)
      if (a + b == degree) ++count;
  return count;
}

// Mod-p lower central series of Z/Z''_p = Z_{p^2} as explicit subgroups.
std::vector<long> cyclic_modp_chen(std::uint64_t p, int max_n) {
  const std::uint64_t order = p * p;
  std::set<std::uint64_t> gamma;
  for (std::uint64_t x = 0; x < order; ++x) gamma.insert(x);
  std::vector<long> out;
  for (int n = 1; n <= max_n; ++n) {
    std::set<std::uint64_t> next;
    for (auto x : gamma) next.insert(x * p % order);
    long ratio = static_cast<long>(gamma.size() / next.size());
    long dim = 0;
    for (; ratio > 1; ratio /= static_cast<long>(p)) ++dim;
    out.push_back(dim);
    gamma = next;
  }
  return out;
}

void golden_alexander(Outcome& o) {
  using clock = std::chrono::steady_clock;
  auto timed = [&](const std::string& name, const std::function<bool()>& f) {
    auto t0 = clock::now();
    bool ok = f();
    double s = std::chrono::duration<double>(clock::now() - t0).count();
    o.check(ok, name);
    o.check(s < 1.0, name + " took longer than 1 s");
  };
  timed("B(F_2) free of rank one", [] {
    ModulePresentation b = alexander_invariant(builtin_group("free(2)"));
    return b.num_generators == 1 && b.num_relations() == 0;
  });
  timed("B(F_3) = coker(1 - t3, t2 - 1, 1 - t1)", [] {
    ModulePresentation b = b_presentation_koszul(builtin_group("free(3)"));
    return b.num_generators == 3 && b.num_relations() == 1 && b.relations[0][0].to_string() == "-t3 + 1" &&
           b.relations[0][1].to_string() == "t2 - 1" && b.relations[0][2].to_string() == "-t1 + 1";
  });
  timed("B(trefoil) (x) Q = Q[t^+-1]/(t^2 - t + 1)",
        [] { return b_univariate(builtin_group("trefoil")).to_string() == "Q[t^+-1]/(t^2 - t + 1)"; });
  for (int n : {2, 3, 5, 7})
    timed("B(<x1,x2 | [x1,x2]^" + std::to_string(n) + ">) cyclic of order " + std::to_string(n), [n] {
      ModulePresentation b = b_presentation_koszul(builtin_group("commutator_power(" + std::to_string(n) + ")"));
      return b.num_generators == 1 && b.num_relations() == 1 && b.relations[0][0].to_string() == std::to_string(n);
    });
}

void golden_modp(Outcome& o) {
  using clock = std::chrono::steady_clock;
  auto dim = [&](const std::string& name, std::uint64_t p, int expected) {
    auto t0 = clock::now();
    int got = b_mod_p(builtin_group(name), p).dimension;
    double s = std::chrono::duration<double>(clock::now() - t0).count();
    o.check(got == expected, "dim B_" + std::to_string(p) + "(" + name + ") = " + std::to_string(got) +
                                 ", expected " + std::to_string(expected));
    o.check(s < 5.0, "dim B_p(" + name + ") took longer than 5 s");
  };
  dim("free(2)", 2, 5);
  // p^n (n - 1) + 1 for F_n
  dim("free(2)", 3, 10);
  dim("free(3)", 2, 17);
  for (int n = 1; n <= 4; ++n)
    for (std::uint64_t p : {2, 3}) dim("raag(complete:" + std::to_string(n) + ")", p, n);
  dim("heisenberg", 3, 2);
}

void cv_membership_suite(Outcome& o) {
  {
    auto g = builtin_group("klein_bottle");
    std::vector<Rational> torus = {1, -1, 2, -2, Rational(1, 3), Rational(-5, 2), 7};
    for (const auto& a : torus)
      for (std::int64_t s : {0, 1}) {
        bool expected = (a == 1 || a == -1) && s == 0;
        o.check(cv_membership(g, rational_point(g, {a}, {s}), 1, JumpFlavor::V) == expected,
                "klein bottle at (" + to_string(a) + ", " + (s ? "-1" : "1") + ")");
      }
    for (int order : {3, 4, 6})
      for (std::int64_t s : {0, 1}) {
        CharacterPoint chi;
        chi.conductor = std::lcm(order, 2);
        chi.free = {CyclotomicField(chi.conductor).zeta_power(chi.conductor / order)};
        chi.torsion = {s};
        o.check(!cv_membership(g, chi, 1, JumpFlavor::V), "klein bottle at a primitive root of order " +
                                                                std::to_string(order));
      }
  }
  {
    auto g = builtin_group("dihedral_inf");
    for (std::int64_t a : {0, 1})
      for (std::int64_t b : {0, 1})
        o.check(cv_membership(g, rational_point(g, {}, {a, b}), 1, JumpFlavor::V) == (a == 1 && b == 1),
                "dihedral_inf at torsion (" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
  {
    auto g = builtin_group("trefoil");
    o.check(cv_membership(g, root_point(6, 1), 1, JumpFlavor::V), "trefoil at zeta_6");
    o.check(cv_membership(g, root_point(6, 5), 1, JumpFlavor::V), "trefoil at zeta_6^5");
    for (Rational a : {Rational(2), Rational(-3), Rational(5, 7)})
      o.check(!cv_membership(g, rational_point(g, {a}, {}), 1, JumpFlavor::V), "trefoil at " + to_string(a));
    o.check(cv_membership(g, rational_point(g, {1}, {}), 1, JumpFlavor::V), "trefoil at the identity");
  }
  {
    auto g = builtin_group("free(3)");
    std::mt19937 rng(2024);
    for (int s = 0; s < 20; ++s) {
      CharacterPoint chi = sample_character(g, rng);
      o.check(cv_membership(g, chi, 1, JumpFlavor::V) && cv_membership(g, chi, 2, JumpFlavor::V),
              "F_3 V_1/V_2 at " + chi.to_string());
      o.check(!cv_membership(g, chi, 3, JumpFlavor::V), "F_3 V_3 at " + chi.to_string());
    }
    o.check(cv_membership(g, rational_point(g, {1, 1, 1}, {}), 3, JumpFlavor::V), "F_3 V_3 at the identity");
  }
}

void chen_suite(Outcome& o) {
  GradedDims f2 = chen_ranks(builtin_group("free(2)"), 8);
  for (int n = 2; n <= 8; ++n)
    o.check(f2.values[n - 1] == free_module_hilbert(n - 2),
            "theta_" + std::to_string(n) + "(F_2) = " + std::to_string(f2.values[n - 1]));
  GradedDims tref = chen_ranks(builtin_group("trefoil"), 8);
  for (int n = 2; n <= 8; ++n) o.check(tref.values[n - 1] == 0, "theta_" + std::to_string(n) + "(trefoil)");
  for (int r = 1; r <= 4; ++r) {
    GradedDims z = chen_ranks(builtin_group("raag(complete:" + std::to_string(r) + ")"), 8);
    o.check(z.values[0] == r, "theta_1(Z^" + std::to_string(r) + ")");
    for (int n = 2; n <= 8; ++n) o.check(z.values[n - 1] == 0, "theta_" + std::to_string(n) + "(Z^" + std::to_string(r) + ")");
  }
}

void two_pipelines(Outcome& o) {
  for (const char* name : {"free(2)", "free(3)", "free(4)", "raag(path:3)", "raag(cycle:4)", "raag(star:3)",
                           "raag(path:4)", "raag(complete:3)", "raag(complete:4)"}) {
    o.check(builtin_formality(name).one_formal, std::string(name) + " not flagged 1-formal");
    auto g = builtin_group(name);
    GradedDims theta = chen_ranks(g, 8);
    GradedDims bar = holonomy_chen_ranks(cup_data(g), 8);
    for (int n = 2; n <= 8; ++n)
      o.check(theta.values[n - 1] == bar.values[n - 1],
              std::string(name) + " theta = " + join(theta.values) + " vs " + join(bar.values));
  }
}

void transfer_suite(Outcome& o) {
  std::vector<std::pair<std::string, SplitExtensionData>> cases;
  cases.emplace_back("bestvina_brady(path:3)", bestvina_brady_tree(Graph::path(3)));
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> ms(2, 3), ss(1, 2);
  for (int i = 0; i < 25; ++i) {
    int m = ms(rng), s = ss(rng);
    std::uint64_t seed = 1000 + i;
    cases.emplace_back("random_inner(" + std::to_string(m) + "," + std::to_string(s) + "," + std::to_string(seed) + ")",
                       random_inner_extension(m, s, seed));
  }
  int failures = 0;
  for (const auto& [name, ext] : cases) {
    ExtensionReport r = verify_transfer(ext, 5);
    const TransferTable& t = r.tables.at(0);
    bool ok = t.verdict == TransferVerdict::EqualFrom2 && t.mismatches.empty() && r.consistent;
    for (int n = 2; n <= 5; ++n) ok = ok && t.kernel.values[n - 1] == t.total.values[n - 1];
    if (!ok) ++failures;
    o.check(ok, name + " kernel " + join(t.kernel.values) + " vs " + join(t.total.values));
  }
  o.detail << (o.pass ? "" : "; ") << cases.size() << " extensions, " << failures << " failures";
}

void modp_transfer(Outcome& o) {
  auto z = builtin_group("free(1)");
  for (std::uint64_t p : {2, 3, 5}) {
    GradedDims d = modp_chen_ranks(z, p, 6);
    std::vector<long> oracle = cyclic_modp_chen(p, 6);
    o.check(d.values == oracle, "theta^" + std::to_string(p) + "(Z) = " + join(d.values) + ", oracle " + join(oracle));
    o.check(oracle == std::vector<long>{1, 1, 0, 0, 0, 0}, "oracle shape at p=" + std::to_string(p));
  }
  SplitExtensionData klein = builtin_extension("klein");
  o.check(exactness_check(klein, ExactnessFlavor::P, 2), "klein p-exact split at p=2");
  o.check(!exactness_check(klein, ExactnessFlavor::Ab, 0), "klein ab-exact split should fail");
}

void fitting_support(Outcome& o) {
  std::mt19937 rng(4242);
  int discrepancies = 0, samples = 0;
  std::vector<std::string> skipped;
  for (const auto& name : kBuiltins) {
    auto g = builtin_group(name);
    bool y = has_b_presentation(g);
    if (!y) skipped.push_back(name);
    for (int k = 1; k <= 2; ++k) {
      Ideal v = jump_ideal(g, k, JumpFlavor::V);
      Ideal yk = y ? jump_ideal(g, k, JumpFlavor::Y) : Ideal{};
      for (int s = 0; s < 20; ++s) {
        CharacterPoint chi = sample_character(g, rng);
        ++samples;
        bool member = cv_membership(g, chi, k, JumpFlavor::V);
        bool bad = member != ideal_vanishes_at(v, chi);
        if (y) bad = bad || member != ideal_vanishes_at(yk, chi);
        if (bad) {
          ++discrepancies;
          o.check(false, name + " k=" + std::to_string(k) + " at " + chi.to_string());
        }
      }
    }
  }
  o.detail << (o.pass ? "" : "; ") << samples << " samples, " << discrepancies << " discrepancies";
  if (!skipped.empty()) {
    o.detail << "; B-side skipped (no presentation of B) for";
    for (const auto& s : skipped) o.detail << ' ' << s;
  }
}

std::vector<Rational> random_vector(std::mt19937& rng, int b, bool sparse) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4), coin(0, 2);
  while (true) {
    std::vector<Rational> a(b);
    bool nonzero = false;
    for (auto& x : a) {
      x = (sparse && coin(rng) == 0) ? Rational(0) : Rational(num(rng), den(rng));
      if (x != 0) nonzero = true;
    }
    if (nonzero) return a;
  }
}

CharacterPoint as_point(const std::vector<Rational>& a) {
  CharacterPoint chi;
  CyclotomicField q(1);
  for (const auto& x : a) chi.free.push_back(q.from(x));
  return chi;
}

void resonance_suite(Outcome& o) {
  std::mt19937 rng(99);
  CupData hq = cup_data(builtin_group("heisenberg_quotient"));
  for (int s = 0; s < 10; ++s) {
    auto a = random_vector(rng, 2, false);
    o.check(resonance_membership(hq, a, 1), "heisenberg_quotient R_1 at a sampled point");
  }
  CupData z2 = cup_data(builtin_group("raag(complete:2)"));
  for (int s = 0; s < 10; ++s) {
    auto a = random_vector(rng, 2, false);
    o.check(!resonance_membership(z2, a, 1), "Z^2 R_1 at a sampled nonzero point");
  }
  for (const auto& name : commutator_builtins()) {
    CupData cd = cup_data(builtin_group(name));
    for (int k = 1; k <= std::min(cd.b1, 2); ++k) {
      Ideal ideal = resonance_ideal(cd, k);
      for (int s = 0; s < 8; ++s) {
        auto a = random_vector(rng, cd.b1, s % 2 == 1);
        bool member = resonance_membership(cd, a, k);
        o.check(member == ideal_vanishes_at(ideal, as_point(a)), name + " Fitting agreement");
        std::vector<Rational> scaled = a;
        for (auto& x : scaled) x *= Rational(-5, 3);
        o.check(member == resonance_membership(cd, scaled, k), name + " homogeneity");
      }
    }
  }
}

void inequalities(Outcome& o) {
  for (const auto& name : commutator_builtins()) {
    auto g = builtin_group(name);
    const int N = g.num_generators() > 3 ? 6 : 8;
    GradedDims theta = chen_ranks(g, N);
    GradedDims bar = holonomy_chen_ranks(cup_data(g), N);
    for (int n = 2; n <= N; ++n)
      o.check(theta.values[n - 1] <= bar.values[n - 1], name + " theta_" + std::to_string(n) + " > theta_bar");
  }
  struct Case {
    std::string name;
    long b2;
  };
  for (const Case& c : std::vector<Case>{{"free(1)", 0}, {"free(2)", 0}, {"free(3)", 0}, {"raag(complete:2)", 1}})
    for (std::uint64_t p : {2, 3, 5}) {
      auto g = builtin_group(c.name);
      long b1 = mod_p_h1(g, p);
      if (std::uint64_t(std::pow(p, b1)) * g.num_generators() > kModPAmbientLimit) continue;
      long dim = b_mod_p(g, p).dimension;
      o.check(dim >= binomial(b1, 2) + b1 - c.b2, "dim B_" + std::to_string(p) + "(" + c.name + ") bound");
    }
}

}  // namespace

int main(int argc, char** argv) {
  bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
  const std::vector<Criterion> criteria = {
      {1, "golden Alexander invariants", 4.0, golden_alexander},
      {2, "golden mod-p invariants", 60.0, golden_modp},
      {3, "characteristic-variety membership", 10.0, cv_membership_suite},
      {4, "Chen ranks", 10.0, chen_suite},
      {5, "two-pipeline agreement on 1-formal builtins", 60.0, two_pipelines},
      {6, "transfer of Chen ranks to split extensions", 120.0, transfer_suite},
      {7, "mod-p Chen ranks of Z and p-exactness", 5.0, modp_transfer},
      {8, "Fitting ideals versus rank conditions", 120.0, fitting_support},
      {9, "resonance", 30.0, resonance_suite},
      {10, "inequalities", 60.0, inequalities},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > c.budget_seconds) o.check(false, "over the time budget");
    if (!o.pass) ++failed;
    std::cout << "criterion " << std::setw(2) << c.id << ' ' << (o.pass ? "PASS" : "FAIL") << "  " << c.title << "  ("
              << std::fixed << std::setprecision(2) << s << " s)";
    std::string d = o.detail.str();
    if (!d.empty()) std::cout << "  " << d;
    std::cout << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass" << std::endl;
  return strict ? failed : 0;
}
