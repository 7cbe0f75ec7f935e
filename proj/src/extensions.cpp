#include "alexlab/extensions.hpp"

#include <queue>
#include <random>
#include <regex>

#include "alexlab/chen.hpp"
#include "alexlab/errors.hpp"
#include "alexlab/linalg.hpp"

namespace alexlab {

bool ActionMatrix::is_identity() const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = 0; j < entries[i].size(); ++j)
      if (entries[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

std::string ActionMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < entries[i].size(); ++j) s += (j ? ", " : "") + alexlab::to_string(entries[i][j]);
    s += "]";
  }
  return s + "]";
}

namespace {

// Phi[i'][i] = exponent sum of generator i' in phi(a_i).
std::vector<std::vector<Integer>> abelianized_images(const SplitExtensionData& ext, int j) {
  const int k = ext.kernel.num_generators();
  require(j < static_cast<int>(ext.action.size()) && static_cast<int>(ext.action[j].size()) == k,
          "action list does not match the kernel generators");
  std::vector<std::vector<Integer>> phi(k, std::vector<Integer>(k));
  for (int i = 0; i < k; ++i) {
    require(ext.action[j][i].max_generator() <= k, "action image uses a generator outside the kernel");
    for (int g = 0; g < k; ++g) phi[g][i] = Integer(static_cast<long>(ext.action[j][i].exponent_sum(g + 1)));
  }
  return phi;
}

std::vector<ActionMatrix> integral_actions(const SplitExtensionData& ext) {
  AbelianizationData ab = abelianization(ext.kernel);
  const int k = ext.kernel.num_generators(), c = ab.num_coordinates();
  const int t = static_cast<int>(ab.torsion_divisors.size());
  std::vector<ActionMatrix> out;
  for (int j = 0; j < ext.quotient.num_generators(); ++j) {
    auto phi = abelianized_images(ext, j);
    ActionMatrix a{ActionCoeff::Int, 0, std::vector<std::vector<Rational>>(c, std::vector<Rational>(c))};
    IntMatrix surj(c, std::vector<Integer>(c + t, 0));
    for (int col = 0; col < c; ++col) {
      std::vector<Integer> exps(k, 0);
      for (int i = 0; i < k; ++i)
        for (int g = 0; g < k; ++g) exps[g] += ab.coordinate_preimages[col][i] * phi[g][i];
      std::vector<Integer> img = ab.project(exps);
      for (int row = 0; row < c; ++row) {
        a.entries[row][col] = Rational(img[row]);
        surj[row][col] = img[row];
      }
    }
    for (int i = 0; i < t; ++i) surj[ab.free_rank + i][c + i] = ab.torsion_divisors[i];
    // an endomorphism of a finitely generated abelian group is invertible iff onto
    SmithForm s = smith_form(surj, c + t);
    bool onto = s.rank() == c;
    for (int i = 0; i < c && onto; ++i) onto = s.diagonal[i] == 1;
    require(onto, "abelianized action of q" + std::to_string(j + 1) + " is not invertible on K_ab");
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<ActionMatrix> modp_actions(const SplitExtensionData& ext, std::uint64_t p) {
  require(is_prime(p), "mod-p action needs a prime p");
  ModPHomology h = mod_p_homology(ext.kernel, p);
  const int k = ext.kernel.num_generators(), d = h.dimension;
  PrimeField F{p};
  // solve G^T w = u_c for every basis vector u_c
  std::vector<std::vector<std::uint64_t>> aug(d, std::vector<std::uint64_t>(k + d, 0));
  for (int r = 0; r < d; ++r) {
    for (int i = 0; i < k; ++i) aug[r][i] = h.generator_images[i][r];
    aug[r][k + r] = 1;
  }
  std::vector<int> piv = rref(F, aug, k);
  ensure(static_cast<int>(piv.size()) == d, "mod-p homology projection is not onto");
  std::vector<std::vector<std::uint64_t>> pre(d, std::vector<std::uint64_t>(k, 0));
  for (int c = 0; c < d; ++c)
    for (int r = 0; r < d; ++r) pre[c][piv[r]] = aug[r][k + c];
  std::vector<ActionMatrix> out;
  for (int j = 0; j < ext.quotient.num_generators(); ++j) {
    auto phi = abelianized_images(ext, j);
    ActionMatrix a{ActionCoeff::ModP, p, std::vector<std::vector<Rational>>(d, std::vector<Rational>(d))};
    std::vector<std::vector<std::uint64_t>> m(d, std::vector<std::uint64_t>(d, 0));
    for (int c = 0; c < d; ++c) {
      std::vector<std::uint64_t> v(k, 0);
      for (int g = 0; g < k; ++g)
        for (int i = 0; i < k; ++i) v[g] = F.add(v[g], F.mul(F.from(Rational(phi[g][i])), pre[c][i]));
      for (int r = 0; r < d; ++r) {
        std::uint64_t x = 0;
        for (int g = 0; g < k; ++g) x = F.add(x, F.mul(h.generator_images[g][r], v[g]));
        m[r][c] = x;
        a.entries[r][c] = Rational(static_cast<unsigned long>(x));
      }
    }
    require(dense_rank(F, m, d) == d, "mod-p action of q" + std::to_string(j + 1) + " is not invertible");
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace

std::vector<ActionMatrix> action_on_h1(const SplitExtensionData& ext, ActionCoeff coeff, std::uint64_t p) {
  require(static_cast<int>(ext.action.size()) == ext.quotient.num_generators(),
          "action list length differs from the quotient generator count");
  if (coeff == ActionCoeff::ModP) return modp_actions(ext, p);
  std::vector<ActionMatrix> ints = integral_actions(ext);
  if (coeff == ActionCoeff::Int) return ints;
  const int r = abelianization(ext.kernel).free_rank;
  std::vector<ActionMatrix> out;
  for (const auto& a : ints) {
    ActionMatrix q{ActionCoeff::Rat, 0, std::vector<std::vector<Rational>>(r, std::vector<Rational>(r))};
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) q.entries[i][j] = a.entries[i][j];
    require(r == 0 || dense_rank(RationalField{}, q.entries, r) == r, "rational action is not invertible");
    out.push_back(std::move(q));
  }
  return out;
}

bool exactness_check(const SplitExtensionData& ext, ExactnessFlavor flavor, std::uint64_t p) {
  std::vector<ActionMatrix> acts;
  switch (flavor) {
    case ExactnessFlavor::Ab:
      acts = action_on_h1(ext, ActionCoeff::Int);
      break;
    case ExactnessFlavor::Abf:
      acts = action_on_h1(ext, ActionCoeff::Rat);
      break;
    case ExactnessFlavor::P:
      acts = action_on_h1(ext, ActionCoeff::ModP, p);
      break;
  }
  for (const auto& a : acts)
    if (!a.is_identity()) return false;
  return true;
}

SplitExtensionData bestvina_brady_tree(const Graph& tree) {
  require(tree.vertices >= 2, "Bestvina-Brady input needs at least two vertices");
  require(tree.is_tree(), "Bestvina-Brady input is not a tree");
  const int n = tree.vertices;
  const int e = static_cast<int>(tree.edges.size());
  std::vector<std::vector<std::pair<int, int>>> adj(n + 1);  // (neighbor, edge index)
  std::vector<std::string> names;
  for (int i = 0; i < e; ++i) {
    auto [u, v] = tree.edges[i];
    adj[u].push_back({v, i});
    adj[v].push_back({u, i});
    names.push_back("g" + std::to_string(u) + "_" + std::to_string(v));
  }
  // y_w = w v0^-1 written in edge generators, v0 = vertex 1
  std::vector<FreeWord> y(n + 1);
  std::vector<bool> seen(n + 1, false);
  std::queue<int> bfs;
  bfs.push(1);
  seen[1] = true;
  while (!bfs.empty()) {
    int p = bfs.front();
    bfs.pop();
    for (auto [w, i] : adj[p]) {
      if (seen[w]) continue;
      seen[w] = true;
      // w p^-1 is g_i when the edge is stored as (w, p)
      FreeWord step = FreeWord::generator(i + 1, tree.edges[i].first == w ? 1 : -1);
      y[w] = step * y[p];
      bfs.push(w);
    }
  }
  std::vector<FreeWord> act;
  for (int i = 0; i < e; ++i) {
    const FreeWord& yu = y[tree.edges[i].first];
    act.push_back(yu.inverse() * FreeWord::generator(i + 1) * yu);
  }
  SplitExtensionData d{GroupPresentation(e, {}, "N(" + tree.to_string() + ")", names),
                       GroupPresentation(1, {}, "Z", {"t"}),
                       {act}};
  return d;
}

namespace {

GroupPresentation free_abelian(int s) {
  std::vector<FreeWord> rels;
  std::vector<std::string> names;
  for (int i = 1; i <= s; ++i) {
    names.push_back("q" + std::to_string(i));
    for (int j = i + 1; j <= s; ++j) rels.push_back(commutator(FreeWord::generator(i), FreeWord::generator(j)));
  }
  return GroupPresentation(s, std::move(rels), "Z^" + std::to_string(s), names);
}

GroupPresentation free_named(int m, const std::vector<std::string>& names) {
  return GroupPresentation(m, {}, "F" + std::to_string(m), names);
}

}  // namespace

SplitExtensionData random_inner_extension(int m, int s, std::uint64_t seed) {
  require(m >= 1 && s >= 1, "random extension needs m, s >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> gen(1, m), len(1, 3), ex(-2, 2), power(-2, 2);
  FreeWord w;
  while (w.empty()) {
    int l = len(rng);
    for (int i = 0; i < l; ++i) {
      int e = ex(rng);
      if (e != 0) w = w * FreeWord::generator(gen(rng), e);
    }
  }
  SplitExtensionData d{builtin_group("free(" + std::to_string(m) + ")"), free_abelian(s), {}};
  for (int j = 0; j < s; ++j) {
    FreeWord c = w.pow(power(rng));
    std::vector<FreeWord> act;
    for (int i = 1; i <= m; ++i) act.push_back(conjugate(c, FreeWord::generator(i)));
    d.action.push_back(std::move(act));
  }
  return d;
}

SplitExtensionData builtin_extension(const std::string& spec) {
  std::smatch mt;
  FreeWord a = FreeWord::generator(1), b = FreeWord::generator(2);
  if (spec == "klein")
    return {free_named(1, {"a"}), GroupPresentation(1, {}, "Z", {"t"}), {{a.inverse()}}};
  if (spec == "inner_f2")
    return {free_named(2, {"a", "b"}), GroupPresentation(1, {}, "Z", {"t"}), {{conjugate(b, a), b}}};
  if (spec == "triangular_f2")
    return {free_named(2, {"a", "b"}), GroupPresentation(1, {}, "Z", {"t"}), {{a, a * b}}};
  static const std::regex bb(R"(bestvina_brady\((.+)\))"), rnd(R"(random_inner\((\d+),(\d+),(\d+)\))");
  if (std::regex_match(spec, mt, bb)) return bestvina_brady_tree(Graph::parse(mt[1]));
  if (std::regex_match(spec, mt, rnd))
    return random_inner_extension(std::stoi(mt[1]), std::stoi(mt[2]), std::stoull(mt[3]));
  throw PreconditionError("unknown extension: " + spec +
                          " (known: klein, inner_f2, triangular_f2, bestvina_brady(graph), random_inner(m,s,seed))");
}

bool visibly_abelian(const GroupPresentation& q) {
  const int s = q.num_generators();
  for (int i = 1; i <= s; ++i)
    for (int j = i + 1; j <= s; ++j) {
      FreeWord c = commutator(FreeWord::generator(i), FreeWord::generator(j));
      bool found = false;
      for (const auto& r : q.relators()) found = found || r == c || r == c.inverse();
      if (!found) return false;
    }
  return true;
}

namespace {

bool visibly_elementary(const GroupPresentation& q, std::uint64_t p) {
  if (!visibly_abelian(q)) return false;
  for (int i = 1; i <= q.num_generators(); ++i) {
    FreeWord w = FreeWord::generator(i, static_cast<std::int64_t>(p));
    bool found = false;
    for (const auto& r : q.relators()) found = found || r == w || r == w.inverse();
    if (!found) return false;
  }
  return true;
}

TransferTable compare(GradedDims k, GradedDims g, std::uint64_t p, TransferVerdict verdict) {
  TransferTable t{p, std::move(k), std::move(g), verdict, {}, true};
  for (std::size_t i = 0; i < t.kernel.values.size(); ++i) {
    int n = static_cast<int>(i) + 1;
    if (t.kernel.values[i] > t.total.values[i]) t.leq_holds = false;
    if (n >= 2 && t.kernel.values[i] != t.total.values[i]) t.mismatches.push_back(n);
  }
  return t;
}

}  // namespace

std::string to_string(TransferVerdict v) {
  switch (v) {
    case TransferVerdict::EqualFrom2:
      return "EQUAL_FROM_2";
    case TransferVerdict::Leq:
      return "LEQ";
    case TransferVerdict::Unchecked:
      return "UNCHECKED";
  }
  return "?";
}

ExtensionReport verify_transfer(const SplitExtensionData& ext, int max_n, const std::vector<std::uint64_t>& primes) {
  ExtensionReport rep;
  rep.int_actions = action_on_h1(ext, ActionCoeff::Int);
  rep.rat_actions = action_on_h1(ext, ActionCoeff::Rat);
  auto all_identity = [](const std::vector<ActionMatrix>& v) {
    for (const auto& a : v)
      if (!a.is_identity()) return false;
    return true;
  };
  rep.ab_exact_split = all_identity(rep.int_actions);
  rep.abf_exact_split = all_identity(rep.rat_actions);
  GroupPresentation g = semidirect_presentation(ext);

  TransferVerdict rv =
      rep.ab_exact_split && visibly_abelian(ext.quotient) ? TransferVerdict::EqualFrom2 : TransferVerdict::Leq;
  rep.tables.push_back(compare(chen_ranks(ext.kernel, max_n), chen_ranks(g, max_n), 0, rv));
  for (std::uint64_t p : primes) {
    rep.modp_actions[p] = action_on_h1(ext, ActionCoeff::ModP, p);
    bool pe = all_identity(rep.modp_actions[p]);
    rep.p_exact_split[p] = pe;
    TransferVerdict v =
        pe && visibly_elementary(ext.quotient, p) ? TransferVerdict::EqualFrom2 : TransferVerdict::Unchecked;
    rep.tables.push_back(compare(modp_chen_ranks(ext.kernel, p, max_n), modp_chen_ranks(g, p, max_n), p, v));
  }
  for (const auto& t : rep.tables)
    if (t.verdict == TransferVerdict::EqualFrom2 && !t.mismatches.empty()) rep.consistent = false;
  return rep;
}

}  // namespace alexlab
