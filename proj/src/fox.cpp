#include "alexlab/fox.hpp"

#include <algorithm>

#include "alexlab/errors.hpp"
#include "alexlab/linalg.hpp"

namespace alexlab {

AbelianImages abelian_images(const GroupPresentation& pres, FoxFlavor flavor) {
  AbelianImages out;
  const int m = pres.num_generators();
  if (flavor.kind == FoxFlavor::ModP) {
    require(is_prime(flavor.p), "mod-p flavor needs a prime p");
    ModPHomology h = mod_p_homology(pres, flavor.p);
    out.ring = group_algebra(0, std::vector<std::int64_t>(h.dimension, static_cast<std::int64_t>(flavor.p)),
                             Coeff::ModP, flavor.p);
    for (int j = 0; j < m; ++j)
      out.generator_images.emplace_back(h.generator_images[j].begin(), h.generator_images[j].end());
    return out;
  }
  AbelianizationData ab = abelianization(pres);
  std::vector<std::int64_t> torsion;
  if (flavor.kind == FoxFlavor::Ab)
    for (const Integer& d : ab.torsion_divisors) torsion.push_back(to_int64(d));
  out.ring = group_algebra(ab.free_rank, torsion, Coeff::Int);
  const int width = out.ring->num_vars();
  for (int j = 0; j < m; ++j) {
    Exponents e(width);
    for (int c = 0; c < width; ++c) e[c] = to_int64(ab.basis_change[j][c]);
    out.generator_images.push_back(std::move(e));
  }
  return out;
}

RingElem fox_derivative(const FreeWord& w, int j, const AbelianImages& images) {
  const int width = images.ring->num_vars();
  RingElem out(images.ring);
  Exponents prefix(width, 0);
  for (const Letter& l : w.letters()) {
    const Exponents& img = images.generator_images[l.generator - 1];
    if (l.generator - 1 == j) {
      Exponents e = prefix;
      if (l.exponent > 0) {
        for (std::int64_t k = 0; k < l.exponent; ++k) {
          out.add_term(e, 1);
          for (int c = 0; c < width; ++c) e[c] += img[c];
        }
      } else {
        for (std::int64_t k = 0; k < -l.exponent; ++k) {
          for (int c = 0; c < width; ++c) e[c] -= img[c];
          out.add_term(e, -1);
        }
      }
    }
    for (int c = 0; c < width; ++c) prefix[c] += l.exponent * img[c];
    for (std::size_t t = 0; t < images.ring->torsion.size(); ++t) {
      auto& x = prefix[images.ring->free_rank + t];
      x = mod_floor(x, images.ring->torsion[t]);
    }
  }
  return out;
}

GroupAlgebraMatrix fox_matrix(const GroupPresentation& pres, const AbelianImages& images) {
  const int m = pres.num_generators();
  const int l = static_cast<int>(pres.relators().size());
  require(static_cast<int>(images.generator_images.size()) == m, "one image per generator is needed");
  GroupAlgebraMatrix mat(images.ring, m, l);
  std::vector<RingElem> g_minus_1;
  for (int j = 0; j < m; ++j)
    g_minus_1.push_back(RingElem::monomial(images.ring, images.generator_images[j]) - RingElem(images.ring, 1));
  for (int i = 0; i < l; ++i) {
    RingElem identity(images.ring);
    for (int j = 0; j < m; ++j) {
      mat(j, i) = fox_derivative(pres.relators()[i], j, images);
      identity += mat(j, i) * g_minus_1[j];
    }
    ensure(identity.is_zero(), "fundamental Fox identity fails for relator " + std::to_string(i + 1) +
                                   " (generator images do not kill the relator)");
  }
  return mat;
}

GroupAlgebraMatrix fox_matrix(const GroupPresentation& pres, FoxFlavor flavor) {
  return fox_matrix(pres, abelian_images(pres, flavor));
}

// ---------------------------------------------------------------------------
// Koszul complex

int pair_index(int i, int j, int m) {
  require(0 <= i && i < j && j < m, "pair index out of range");
  return i * (2 * m - i - 1) / 2 + (j - i - 1);
}

namespace {

RingElem t_minus_1(const Ring& r, int i) { return RingElem::variable(r, i) - RingElem(r, 1); }

// (f - f|_{t_var=1}) / (t_var - 1), exact by construction.
RingElem divide_by_t_minus_1(const RingElem& f, int var) {
  RingElem q(f.ring());
  for (const auto& [e, c] : f.terms()) {
    Exponents k = e;
    const std::int64_t a = e[var];
    if (a > 0) {
      for (std::int64_t s = 0; s < a; ++s) {
        k[var] = s;
        q.add_term(k, c);
      }
    } else if (a < 0) {
      for (std::int64_t s = a; s < 0; ++s) {
        k[var] = s;
        q.add_term(k, -c);
      }
    }
  }
  return q;
}

}  // namespace

std::vector<RingElem> koszul_d2(const Ring& ring, int i, int j) {
  const int m = ring->free_rank;
  std::vector<RingElem> v(m, RingElem(ring));
  v[j] = t_minus_1(ring, i);
  v[i] = -t_minus_1(ring, j);
  return v;
}

std::vector<RingElem> koszul_d3(const Ring& ring, int i, int j, int k) {
  const int m = ring->free_rank;
  std::vector<RingElem> v(m * (m - 1) / 2, RingElem(ring));
  v[pair_index(i, j, m)] = -t_minus_1(ring, k);
  v[pair_index(i, k, m)] = t_minus_1(ring, j);
  v[pair_index(j, k, m)] = -t_minus_1(ring, i);
  return v;
}

std::vector<RingElem> koszul_lift(const std::vector<RingElem>& v) {
  const int m = static_cast<int>(v.size());
  require(m >= 1, "empty vector");
  const Ring ring = v[0].ring();
  require(ring->free_rank == m && ring->torsion.empty(), "Koszul lift needs Z[Z^m] with m = vector length");
  std::vector<RingElem> w(m * (m - 1) / 2, RingElem(ring));
  std::vector<RingElem> cur = v;
  for (int k = m - 1; k >= 0; --k) {
    RingElem top = cur[k];
    for (int j = 0; j < k; ++j) {
      RingElem r = cur[j].at_one(k);
      RingElem q = divide_by_t_minus_1(cur[j] - r, k);
      w[pair_index(j, k, m)] -= q;
      top += q * t_minus_1(ring, j);
      cur[j] = r;
    }
    ensure(top.is_zero(), "Koszul lift: vector is not a cycle");
  }
  // d2(w) must reproduce v
  std::vector<RingElem> check(m, RingElem(ring));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const RingElem& c = w[pair_index(i, j, m)];
      if (c.is_zero()) continue;
      auto d = koszul_d2(ring, i, j);
      for (int a = 0; a < m; ++a) check[a] += c * d[a];
    }
  for (int a = 0; a < m; ++a) ensure(check[a] == v[a], "Koszul lift does not map back to the input");
  return w;
}

ModulePresentation b_presentation_koszul(const GroupPresentation& pres) {
  require(pres.is_commutator_relators(),
          "the Koszul presentation of B(G) needs every relator to have zero exponent sum in every generator");
  const int m = pres.num_generators();
  AbelianImages images;
  images.ring = group_algebra(m, {}, Coeff::Int);
  for (int j = 0; j < m; ++j) {
    Exponents e(m, 0);
    e[j] = 1;
    images.generator_images.push_back(e);
  }
  GroupAlgebraMatrix fox = fox_matrix(pres, images);
  ModulePresentation b;
  b.ring = images.ring;
  b.num_generators = m * (m - 1) / 2;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) b.relations.push_back(koszul_d3(b.ring, i, j, k));
  for (int c = 0; c < fox.cols; ++c) {
    std::vector<RingElem> col;
    for (int r = 0; r < m; ++r) col.push_back(fox(r, c));
    std::vector<RingElem> lift = koszul_lift(col);
    if (std::all_of(lift.begin(), lift.end(), [](const RingElem& x) { return x.is_zero(); })) continue;
    b.relations.push_back(std::move(lift));
  }
  return b;
}

// ---------------------------------------------------------------------------
// Univariate (PID) path over Q[t^+-1]

namespace {

std::int64_t low_exponent(const RingElem& f) {
  std::int64_t lo = 0;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    if (first || e[0] < lo) lo = e[0];
    first = false;
  }
  return lo;
}

UPoly to_upoly(const RingElem& f) {
  if (f.is_zero()) return {};
  std::int64_t lo = low_exponent(f), hi = lo;
  for (const auto& [e, c] : f.terms()) hi = std::max(hi, e[0]);
  std::vector<Rational> v(hi - lo + 1, 0);
  for (const auto& [e, c] : f.terms()) v[e[0] - lo] = c;
  return UPoly(std::move(v));
}

RingElem from_upoly(const Ring& r, const UPoly& p, std::int64_t shift) {
  RingElem f(r);
  for (int i = 0; i <= p.degree(); ++i) f.add_term({shift + i}, p[i]);
  return f;
}

int width(const RingElem& f) { return to_upoly(f).degree(); }

// Euclidean division in Q[t^+-1] with the width as norm.
void laurent_divmod(const RingElem& a, const RingElem& b, RingElem& q, RingElem& r) {
  UPoly pq, pr;
  UPoly::divmod(to_upoly(a), to_upoly(b), pq, pr);
  std::int64_t sa = low_exponent(a), sb = low_exponent(b);
  q = from_upoly(a.ring(), pq, sa - sb);
  r = from_upoly(a.ring(), pr, sa);
}

using LMatrix = std::vector<std::vector<RingElem>>;

// Diagonal of the Smith form over Q[t^+-1]; zero entries are omitted.
std::vector<RingElem> laurent_smith_diagonal(LMatrix a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<RingElem> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    auto find_min = [&](std::size_t& pi, std::size_t& pj) {
      int best = -1;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (!a[i][j].is_zero() && (best < 0 || width(a[i][j]) < best)) {
            best = width(a[i][j]);
            pi = i;
            pj = j;
          }
      return best >= 0;
    };
    std::size_t pi = t, pj = t;
    if (!find_min(pi, pj)) break;
    while (true) {
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t].is_zero()) continue;
        RingElem q, r;
        laurent_divmod(a[i][t], a[t][t], q, r);
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (!a[i][t].is_zero()) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j].is_zero()) continue;
        RingElem q, r;
        laurent_divmod(a[t][j], a[t][t], q, r);
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (!a[t][j].is_zero()) dirty = true;
      }
      if (!dirty) {
        // divisibility of the remaining block by the pivot
        bool ok = true;
        for (std::size_t i = t + 1; i < rows && ok; ++i)
          for (std::size_t j = t + 1; j < cols && ok; ++j) {
            if (a[i][j].is_zero()) continue;
            RingElem q, r;
            laurent_divmod(a[i][j], a[t][t], q, r);
            if (!r.is_zero()) {
              for (std::size_t c = t; c < cols; ++c) a[t][c] += a[i][c];
              ok = false;
            }
          }
        if (ok) break;
      }
      pi = t;
      pj = t;
      int best = width(a[t][t]);
      for (std::size_t i = t; i < rows; ++i)
        if (!a[i][t].is_zero() && width(a[i][t]) < best) best = width(a[i][t]), pi = i, pj = t;
      for (std::size_t j = t; j < cols; ++j)
        if (!a[t][j].is_zero() && width(a[t][j]) < best) best = width(a[t][j]), pi = t, pj = j;
    }
    diag.push_back(a[t][t]);
  }
  return diag;
}

}  // namespace

ModulePresentation UnivariateModule::presentation() const {
  ModulePresentation p;
  p.ring = group_algebra(1, {}, Coeff::Rat);
  p.num_generators = free_rank + static_cast<int>(invariant_factors.size());
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    std::vector<RingElem> col(p.num_generators, RingElem(p.ring));
    col[free_rank + i] = from_upoly(p.ring, invariant_factors[i], 0);
    p.relations.push_back(std::move(col));
  }
  return p;
}

std::string UnivariateModule::to_string() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Q[t^+-1]");
  if (free_rank > 1) parts.push_back("Q[t^+-1]^" + std::to_string(free_rank));
  for (const UPoly& d : invariant_factors) parts.push_back("Q[t^+-1]/(" + d.to_string() + ")");
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out;
}

UnivariateModule b_univariate(const GroupPresentation& pres) {
  AbelianizationData ab = abelianization(pres);
  require(ab.free_rank == 1 && ab.torsion_divisors.empty(), "b_univariate needs G_ab = Z");
  AbelianImages images = abelian_images(pres, FoxFlavor::ab());
  const Ring Q = group_algebra(1, {}, Coeff::Rat);
  GroupAlgebraMatrix fox = change_coefficients(fox_matrix(pres, images), Q);
  const int m = pres.num_generators();
  LMatrix F = fox.entries;
  std::vector<RingElem> d1;
  for (int j = 0; j < m; ++j) d1.push_back(RingElem::monomial(Q, images.generator_images[j]) - RingElem(Q, 1));
  // column-reduce the row d1 to (g, 0, ..., 0); the inverse operations act on the rows of F
  while (true) {
    int p = -1;
    for (int j = 0; j < m; ++j)
      if (!d1[j].is_zero() && (p < 0 || width(d1[j]) < width(d1[p]))) p = j;
    ensure(p >= 0, "augmentation row vanished");
    bool others = false;
    for (int j = 0; j < m; ++j) {
      if (j == p || d1[j].is_zero()) continue;
      RingElem q, r;
      laurent_divmod(d1[j], d1[p], q, r);
      d1[j] = r;
      for (int c = 0; c < fox.cols; ++c) F[p][c] += q * F[j][c];
      if (!r.is_zero()) others = true;
    }
    if (!others) {
      std::swap(d1[0], d1[p]);
      std::swap(F[0], F[p]);
      break;
    }
  }
  ensure(width(d1[0]) == 1, "augmentation ideal is not generated by t - 1");
  for (int c = 0; c < fox.cols; ++c) ensure(F[0][c].is_zero(), "Crowell sequence: Fox image leaves the kernel");
  LMatrix rest(F.begin() + 1, F.end());
  UnivariateModule out;
  std::vector<RingElem> diag = rest.empty() || fox.cols == 0 ? std::vector<RingElem>{} : laurent_smith_diagonal(rest);
  out.free_rank = (m - 1) - static_cast<int>(diag.size());
  for (const RingElem& d : diag) {
    UPoly n = to_upoly(d).laurent_normalized();
    if (n.degree() > 0) out.invariant_factors.push_back(n);
  }
  return out;
}

// ---------------------------------------------------------------------------
// mod-p Alexander invariant

namespace {

struct GroupIndex {
  std::uint64_t p;
  int b;
  std::size_t size;
  std::size_t index(const Exponents& e) const {
    std::size_t idx = 0;
    for (int i = b - 1; i >= 0; --i) idx = idx * p + static_cast<std::size_t>(mod_floor(e[i], p));
    return idx;
  }
  Exponents digits(std::size_t idx) const {
    Exponents e(b);
    for (int i = 0; i < b; ++i) {
      e[i] = static_cast<std::int64_t>(idx % p);
      idx /= p;
    }
    return e;
  }
  std::size_t mul(std::size_t a, std::size_t c) const {
    Exponents x = digits(a), y = digits(c);
    for (int i = 0; i < b; ++i) x[i] += y[i];
    return index(x);
  }
};

}  // namespace

FiniteModule b_mod_p(const GroupPresentation& pres, std::uint64_t p) {
  AbelianImages images = abelian_images(pres, FoxFlavor::mod_p(p));
  const int b = images.ring->num_vars();
  require(b < 12, "b_mod_p: mod-p Betti number must be below 12");
  const int m = pres.num_generators();
  std::size_t N = 1;
  for (int i = 0; i < b; ++i) {
    N *= p;
    require(N * m <= kModPAmbientLimit, "b_mod_p: dim Lambda_p times generator count exceeds the size guard");
  }
  GroupIndex G{p, b, N};
  const std::size_t n = static_cast<std::size_t>(m) * N;
  const PrimeField F{p};
  GroupAlgebraMatrix fox = fox_matrix(pres, images);
  std::vector<std::size_t> gen_index;
  for (int j = 0; j < m; ++j) gen_index.push_back(G.index(images.generator_images[j]));

  // kernel of Psi: (j, h) -> h g_j - h
  std::vector<std::vector<std::uint64_t>> psi(N, std::vector<std::uint64_t>(n, 0));
  for (int j = 0; j < m; ++j)
    for (std::size_t h = 0; h < N; ++h) {
      std::size_t col = j * N + h;
      psi[G.mul(h, gen_index[j])][col] = F.add(psi[G.mul(h, gen_index[j])][col], 1);
      psi[h][col] = F.sub(psi[h][col], 1);
    }
  auto kernel = kernel_basis(F, psi, n);

  // echelon of the Lambda-span of the Fox columns; tag columns follow the real ones
  using Ech = SparseEchelon<PrimeField>;
  Ech ech(F);
  for (int c = 0; c < fox.cols; ++c) {
    std::vector<std::pair<std::size_t, std::uint64_t>> col;
    for (int j = 0; j < m; ++j)
      for (const auto& [e, v] : fox(j, c).terms())
        col.emplace_back(j * N + G.index(e), static_cast<std::uint64_t>(v.get_num().get_ui()));
    for (std::size_t g = 0; g < N; ++g) {
      std::map<int, std::uint64_t> row;
      for (const auto& [idx, v] : col) {
        std::size_t j = idx / N, h = idx % N;
        row[static_cast<int>(j * N + G.mul(h, g))] = v;
      }
      Ech::Row r(row.begin(), row.end());
      ech.insert(std::move(r));
    }
  }
  const int image_rank = ech.rank();
  std::vector<std::vector<std::uint64_t>> basis;
  for (auto& v : kernel) {
    Ech::Row r;
    for (std::size_t i = 0; i < n; ++i)
      if (v[i]) r.emplace_back(static_cast<int>(i), v[i]);
    r.emplace_back(static_cast<int>(n + basis.size()), 1);
    Ech::Row reduced = ech.reduce(std::move(r));
    if (reduced.front().first >= static_cast<int>(n)) continue;  // already in the span
    ech.insert(std::move(reduced));
    basis.push_back(v);
  }
  FiniteModule out;
  out.p = p;
  out.b = b;
  out.ambient_dimension = static_cast<int>(n);
  out.dimension = static_cast<int>(basis.size());
  ensure(static_cast<int>(kernel.size()) - image_rank == out.dimension, "B_p dimension count mismatch");
  const int d = out.dimension;
  for (int i = 0; i < b; ++i) {
    Exponents unit(b, 0);
    unit[i] = 1;
    std::size_t s = G.index(unit);
    std::vector<std::vector<std::uint64_t>> act(d, std::vector<std::uint64_t>(d, 0));
    for (int k = 0; k < d; ++k) {
      std::map<int, std::uint64_t> row;
      for (std::size_t idx = 0; idx < n; ++idx) {
        if (!basis[k][idx]) continue;
        std::size_t j = idx / N, h = idx % N;
        row[static_cast<int>(j * N + G.mul(h, s))] = basis[k][idx];
      }
      Ech::Row res = ech.reduce(Ech::Row(row.begin(), row.end()));
      for (const auto& [c, v] : res) {
        ensure(c >= static_cast<int>(n), "action leaves the kernel of the augmentation map");
        act[c - n][k] = F.neg(v);
      }
    }
    out.actions.push_back(std::move(act));
  }
  return out;
}

std::vector<int> augmentation_filtration(const FiniteModule& mod) {
  const PrimeField F{mod.p};
  const int d = mod.dimension;
  std::vector<std::vector<std::uint64_t>> X;
  for (int k = 0; k < d; ++k) {
    std::vector<std::uint64_t> v(d, 0);
    v[k] = 1;
    X.push_back(v);
  }
  std::vector<int> dims;
  while (true) {
    dims.push_back(static_cast<int>(X.size()));
    if (X.empty()) break;
    std::vector<std::vector<std::uint64_t>> Y;
    for (const auto& A : mod.actions)
      for (const auto& x : X) {
        std::vector<std::uint64_t> y(d, 0);
        for (int r = 0; r < d; ++r) {
          std::uint64_t acc = 0;
          for (int c = 0; c < d; ++c)
            if (x[c]) acc = F.add(acc, F.mul(A[r][c], x[c]));
          y[r] = F.sub(acc, x[r]);
        }
        Y.push_back(std::move(y));
      }
    rref(F, Y, d);
    ensure(Y.size() < X.size() || X.empty(), "augmentation filtration is not decreasing");
    X = std::move(Y);
  }
  return dims;
}

}  // namespace alexlab
