#include "alexlab/modtools.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <variant>

#include "alexlab/errors.hpp"
#include "alexlab/groebner.hpp"
#include "alexlab/linalg.hpp"
#include "alexlab/parallel.hpp"

namespace alexlab {

namespace {

bool is_field_flavor(const Ring& r) { return r->flavor == Coeff::Rat || r->flavor == Coeff::ModP; }

RingElem canonical_generator(const RingElem& f) {
  const Ring& ring = f.ring();
  RingElem g = f;
  if (ring->kind == RingDescriptor::Kind::GroupAlgebra && ring->free_rank > 0) {
    Exponents shift(ring->num_vars(), 0);
    for (int i = 0; i < ring->free_rank; ++i) {
      std::int64_t lo = 0;
      bool first = true;
      for (const auto& [e, c] : g.terms()) {
        if (first || e[i] < lo) lo = e[i];
        first = false;
      }
      shift[i] = -lo;
    }
    g = g.shifted(shift);
  }
  Rational lead = g.terms().begin()->second;
  switch (ring->flavor) {
    case Coeff::Int:
      if (lead < 0) g = -g;
      break;
    case Coeff::Rat: {
      Integer den = 1, num = 0;
      for (const auto& [e, c] : g.terms()) {
        den = lcm(den, Integer(c.get_den()));
        num = gcd(num, Integer(c.get_num()));
      }
      Rational scale = Rational(den) / Rational(num);
      if (lead < 0) scale = -scale;
      g = g.scaled(scale);
      break;
    }
    case Coeff::ModP:
      g = g.scaled(Rational(static_cast<long>(inv_mod(rational_mod(lead, ring->p), ring->p))));
      break;
  }
  return g;
}

bool is_unit_constant(const RingElem& f) {
  if (!f.is_constant() || f.is_zero()) return false;
  if (f.ring()->flavor != Coeff::Int) return true;
  Rational c = f.constant_term();
  return c == 1 || c == -1;
}

// Field-generic conversion of ring elements to polynomials for the Groebner
// engine: t_i^{-a} becomes u_i^a, torsion exponents stay reduced.
struct PolyLayout {
  int free = 0;
  std::vector<std::int64_t> torsion;
  bool laurent = false;
  int nvars() const { return laurent ? 2 * free + static_cast<int>(torsion.size()) : free; }
};

PolyLayout layout_for(const Ring& r) {
  PolyLayout l;
  if (r->kind == RingDescriptor::Kind::GroupAlgebra) {
    l.laurent = true;
    l.free = r->free_rank;
    l.torsion = r->torsion;
  } else {
    l.free = r->num_vars();
  }
  return l;
}

template <class Field>
typename Groebner<Field>::Poly to_poly(const Groebner<Field>& gb, const PolyLayout& l, const RingElem& f,
                                       int pos) {
  typename Groebner<Field>::Poly p;
  for (const auto& [e, c] : f.terms()) {
    typename Groebner<Field>::Term t;
    t.e.assign(l.nvars(), 0);
    t.pos = pos;
    t.c = gb.field().from(c);
    if (l.laurent) {
      for (int i = 0; i < l.free; ++i) {
        if (e[i] >= 0)
          t.e[i] = static_cast<int>(e[i]);
        else
          t.e[l.free + i] = static_cast<int>(-e[i]);
      }
      for (std::size_t j = 0; j < l.torsion.size(); ++j) t.e[2 * l.free + j] = static_cast<int>(e[l.free + j]);
    } else {
      for (int i = 0; i < l.free; ++i) t.e[i] = static_cast<int>(e[i]);
    }
    p.push_back(std::move(t));
  }
  return gb.normalize(std::move(p));
}

template <class Field>
std::vector<typename Groebner<Field>::Poly> auxiliary_relations(const Groebner<Field>& gb, const PolyLayout& l,
                                                                int pos) {
  using Poly = typename Groebner<Field>::Poly;
  std::vector<Poly> out;
  if (!l.laurent) return out;
  const auto& f = gb.field();
  for (int i = 0; i < l.free; ++i) {
    std::vector<int> tu(l.nvars(), 0), one(l.nvars(), 0);
    tu[i] = 1;
    tu[l.free + i] = 1;
    out.push_back(gb.normalize(Poly{{tu, pos, f.one()}, {one, pos, f.neg(f.one())}}));
  }
  for (std::size_t j = 0; j < l.torsion.size(); ++j) {
    std::vector<int> s(l.nvars(), 0), one(l.nvars(), 0);
    s[2 * l.free + j] = static_cast<int>(l.torsion[j]);
    out.push_back(gb.normalize(Poly{{s, pos, f.one()}, {one, pos, f.neg(f.one())}}));
  }
  return out;
}

template <class Field>
Groebner<Field> module_basis(Field field, const ModulePresentation& m) {
  PolyLayout l = layout_for(m.ring);
  Groebner<Field> gb(std::move(field), l.nvars());
  std::vector<typename Groebner<Field>::Poly> gens;
  for (const auto& col : m.relations) {
    typename Groebner<Field>::Poly p;
    for (int i = 0; i < m.num_generators; ++i) {
      auto part = to_poly(gb, l, col[i], i);
      p.insert(p.end(), part.begin(), part.end());
    }
    p = gb.normalize(std::move(p));
    if (!p.empty()) gens.push_back(std::move(p));
  }
  for (int i = 0; i < m.num_generators; ++i)
    for (auto& a : auxiliary_relations(gb, l, i)) gens.push_back(std::move(a));
  gb.compute(std::move(gens));
  return gb;
}

Ring rational_if_integral(const Ring& r) { return r->flavor == Coeff::Int ? with_flavor(r, Coeff::Rat) : r; }

}  // namespace

// ---------------------------------------------------------------------------

Ideal Ideal::make(Ring ring, std::vector<RingElem> gens) {
  std::vector<RingElem> out;
  std::map<std::string, bool> seen;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    require(*g.ring() == *ring, "ideal generator lives in a different ring");
    RingElem c = canonical_generator(g);
    if (is_unit_constant(c)) return unit(ring);
    std::string key = c.to_string();
    if (seen.emplace(key, true).second) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const RingElem& a, const RingElem& b) {
    std::string sa = a.to_string(), sb = b.to_string();
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    return sa < sb;
  });
  return {std::move(ring), std::move(out)};
}

Ideal Ideal::unit(Ring ring) {
  RingElem one(ring, 1);
  return {std::move(ring), {one}};
}

bool Ideal::is_unit_generated() const {
  return std::any_of(generators.begin(), generators.end(), is_unit_constant);
}

std::string Ideal::to_string() const {
  if (generators.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) s += ", ";
    s += generators[i].to_string();
  }
  return s + ")";
}

// ---------------------------------------------------------------------------

RingElem determinant(const std::vector<std::vector<RingElem>>& a) {
  const int n = static_cast<int>(a.size());
  require(n > 0 && n <= 20, "determinant size out of range");
  const Ring& ring = a[0][0].ring();
  // dp[mask]: determinant of the leading |mask| rows restricted to the columns in mask
  std::vector<RingElem> dp(std::size_t(1) << n, RingElem(ring));
  dp[0] = RingElem(ring, 1);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int row = __builtin_popcount(mask) - 1;
    RingElem acc(ring);
    for (int j = 0; j < n; ++j) {
      if (!(mask >> j & 1)) continue;
      const RingElem& prev = dp[mask & ~(1u << j)];
      if (prev.is_zero() || a[row][j].is_zero()) continue;
      int above = __builtin_popcount(mask >> (j + 1));
      RingElem term = a[row][j] * prev;
      if (above & 1)
        acc -= term;
      else
        acc += term;
    }
    dp[mask] = std::move(acc);
  }
  return dp.back();
}

std::vector<std::vector<int>> subsets(int g, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > g) return out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= g - (k - static_cast<int>(cur.size())); ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

int subset_index(const std::vector<int>& s, int g) {
  const int k = static_cast<int>(s.size());
  std::uint64_t idx = 0;
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    for (int v = prev + 1; v < s[i]; ++v) idx += binomial(g - v - 1, k - i - 1);
    prev = s[i];
  }
  return static_cast<int>(idx);
}

Ideal fitting_ideal(const ModulePresentation& m, int k) {
  require(k >= 0, "Fitting index must be nonnegative");
  const int g = m.num_generators;
  const int size = g - k + 1;
  if (size <= 0) return Ideal::unit(m.ring);
  if (size > m.num_relations()) return Ideal::zero(m.ring);
  std::uint64_t count = binomial(g, size) * binomial(m.num_relations(), size);
  require(count <= kMinorLimit, "too many minors for a Fitting ideal: " + std::to_string(count));
  auto rows = subsets(g, size);
  auto cols = subsets(m.num_relations(), size);
  std::vector<RingElem> minors(rows.size() * cols.size());
  parallel_for(minors.size(), [&](std::size_t idx) {
    const auto& rs = rows[idx / cols.size()];
    const auto& cs = cols[idx % cols.size()];
    std::vector<std::vector<RingElem>> sq(size, std::vector<RingElem>(size));
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) sq[i][j] = m.relations[cs[j]][rs[i]];
    minors[idx] = determinant(sq);
  });
  return Ideal::make(m.ring, std::move(minors));
}

ModulePresentation exterior_power_presentation(const ModulePresentation& m, int k) {
  const int g = m.num_generators;
  require(k >= 1 && k <= 4, "exterior power degree must be in 1..4");
  require(k <= g, "exterior power degree exceeds the number of generators");
  require(binomial(g, k) <= 5000, "exterior power has too many generators");
  ModulePresentation out;
  out.ring = m.ring;
  out.num_generators = static_cast<int>(binomial(g, k));
  auto lower = subsets(g, k - 1);
  for (const auto& rel : m.relations) {
    for (const auto& t : lower) {
      std::vector<RingElem> col(out.num_generators, RingElem(m.ring));
      bool nonzero = false;
      for (int i = 0; i < g; ++i) {
        if (rel[i].is_zero() || std::binary_search(t.begin(), t.end(), i)) continue;
        std::vector<int> s = t;
        auto at = std::lower_bound(s.begin(), s.end(), i);
        int before = static_cast<int>(at - s.begin());
        s.insert(at, i);
        RingElem v = before % 2 ? -rel[i] : rel[i];
        col[subset_index(s, g)] += v;
        nonzero = true;
      }
      if (nonzero) out.relations.push_back(std::move(col));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

struct GroebnerIdeal::Impl {
  PolyLayout layout;
  std::variant<Groebner<RationalField>, Groebner<PrimeField>> gb;
};

GroebnerIdeal::GroebnerIdeal(const Ideal& ideal) {
  require(is_field_flavor(ideal.ring), "ideal membership needs field coefficients (Q or F_p)");
  PolyLayout l = layout_for(ideal.ring);
  auto build = [&](auto field) {
    using F = decltype(field);
    Groebner<F> gb(field, l.nvars());
    std::vector<typename Groebner<F>::Poly> gens;
    for (const auto& g : ideal.generators) gens.push_back(to_poly(gb, l, g, 0));
    for (auto& a : auxiliary_relations(gb, l, 0)) gens.push_back(std::move(a));
    gb.compute(std::move(gens));
    return gb;
  };
  if (ideal.ring->flavor == Coeff::Rat)
    impl_ = std::make_unique<Impl>(Impl{l, build(RationalField{})});
  else
    impl_ = std::make_unique<Impl>(Impl{l, build(PrimeField{ideal.ring->p})});
}

GroebnerIdeal::~GroebnerIdeal() = default;
GroebnerIdeal::GroebnerIdeal(GroebnerIdeal&&) noexcept = default;

bool GroebnerIdeal::contains(const RingElem& f) const {
  return std::visit([&](const auto& gb) { return gb.reduces_to_zero(to_poly(gb, impl_->layout, f, 0)); }, impl_->gb);
}

bool GroebnerIdeal::zero_dimensional() const {
  return std::visit([](const auto& gb) { return gb.zero_dimensional(1); }, impl_->gb);
}

int GroebnerIdeal::basis_size() const {
  return std::visit([](const auto& gb) { return static_cast<int>(gb.basis().size()); }, impl_->gb);
}

bool ideal_membership(const Ideal& ideal, const RingElem& f) {
  require(*f.ring() == *ideal.ring, "element and ideal live in different rings");
  return GroebnerIdeal(ideal).contains(f);
}

bool module_finite_dimensional(const ModulePresentation& m) {
  ModulePresentation mq = change_coefficients(m, rational_if_integral(m.ring));
  if (mq.num_generators == 0) return true;
  if (mq.ring->flavor == Coeff::Rat) return module_basis(RationalField{}, mq).zero_dimensional(mq.num_generators);
  return module_basis(PrimeField{mq.ring->p}, mq).zero_dimensional(mq.num_generators);
}

// ---------------------------------------------------------------------------

std::vector<long> truncated_quotient_dims(const ModulePresentation& m, int order) {
  require(m.ring->kind == RingDescriptor::Kind::GroupAlgebra && m.ring->flavor != Coeff::ModP,
          "truncated dimensions need a group algebra over Z or Q");
  require(order >= 1 && order <= kMaxTruncationOrder,
          "truncation order must be in 1.." + std::to_string(kMaxTruncationOrder));
  const int g = m.num_generators;
  auto table = std::make_shared<const MonomialTable>(m.ring->free_rank, order);
  const int nm = table->size();
  require(static_cast<std::int64_t>(nm) * g <= 400000, "truncated module is too large");
  SparseEchelon<RationalField> ech{RationalField{}};

  for (const auto& rel : m.relations) {
    std::vector<TruncatedLocalElem> tr;
    tr.reserve(g);
    for (int i = 0; i < g; ++i) tr.push_back(laurent_to_truncated(rel[i], table));
    // high-degree multiples first keeps the early pivots short
    for (int a = nm; a-- > 0;) {
      std::vector<std::pair<int, Rational>> row;
      const auto& alpha = table->monomial(a);
      for (int i = 0; i < g; ++i)
        for (int b = 0; b + 0 < nm; ++b) {
          if (tr[i][b] == 0) continue;
          if (table->degree(a) + table->degree(b) >= order) break;
          std::vector<int> e = table->monomial(b);
          for (std::size_t v = 0; v < e.size(); ++v) e[v] += alpha[v];
          row.emplace_back(table->index_of(e) * g + i, tr[i][b]);
        }
      if (row.empty()) continue;
      std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      ech.insert(std::move(row));
    }
  }
  std::vector<long> dims(order + 1);
  for (int n = 0; n <= order; ++n) {
    int bound = table->count_below(n) * g;
    dims[n] = bound - ech.pivots_below(bound);
  }
  return dims;
}

GradedDims graded_dims_truncated(const ModulePresentation& m, int order) {
  require(order >= 2, "truncation order must be at least 2");
  auto dims = truncated_quotient_dims(m, order);
  GradedDims out;
  for (int n = 0; n + 2 <= order; ++n) out.values.push_back(dims[n + 1] - dims[n]);
  return out;
}

namespace {

std::vector<std::vector<int>> monomials_of_degree(int vars, int d) {
  std::vector<std::vector<int>> out;
  if (d < 0) return out;
  if (vars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<int> e(vars, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == vars - 1) {
      e[i] = left;
      out.push_back(e);
      e[i] = 0;
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[i] = a;
      rec(i + 1, left - a);
    }
    e[i] = 0;
  };
  rec(0, d);
  return out;
}

// Checks homogeneity and returns the degree of each relation column (-1 for zero columns).
std::vector<int> column_degrees(const ModulePresentation& m) {
  require(m.ring->kind == RingDescriptor::Kind::Polynomial, "graded dimensions need a polynomial ring");
  std::vector<int> deg(m.num_relations(), -1);
  for (int c = 0; c < m.num_relations(); ++c)
    for (int i = 0; i < m.num_generators; ++i) {
      int shift = m.degrees.empty() ? 0 : m.degrees[i];
      for (const auto& [e, coef] : m.relations[c][i].terms()) {
        int d = static_cast<int>(std::accumulate(e.begin(), e.end(), std::int64_t{0})) + shift;
        require(deg[c] < 0 || deg[c] == d, "relation column is not homogeneous");
        deg[c] = d;
      }
    }
  return deg;
}

}  // namespace

GradedDims graded_dims_linear(const ModulePresentation& m0, int from, int to) {
  ModulePresentation m = change_coefficients(m0, rational_if_integral(m0.ring));
  require(m.ring->flavor == Coeff::Rat, "graded dimensions are computed over Q");
  auto cdeg = column_degrees(m);
  const int n = m.ring->num_vars();
  GradedDims out{from, std::vector<long>(std::max(0, to - from + 1))};
  parallel_for(out.values.size(), [&](std::size_t slot) {
    const int d = from + static_cast<int>(slot);
    std::map<std::pair<int, std::vector<int>>, int> index;
    for (int i = 0; i < m.num_generators; ++i) {
      int shift = m.degrees.empty() ? 0 : m.degrees[i];
      for (auto& e : monomials_of_degree(n, d - shift)) index.emplace(std::make_pair(i, e), 0);
    }
    int next = 0;
    for (auto& [key, v] : index) v = next++;
    SparseEchelon<RationalField> ech{RationalField{}};
    for (int c = 0; c < m.num_relations(); ++c) {
      if (cdeg[c] < 0 || cdeg[c] > d) continue;
      for (const auto& alpha : monomials_of_degree(n, d - cdeg[c])) {
        std::map<int, Rational> acc;
        for (int i = 0; i < m.num_generators; ++i)
          for (const auto& [e, coef] : m.relations[c][i].terms()) {
            std::vector<int> x(n);
            for (int v = 0; v < n; ++v) x[v] = static_cast<int>(e[v]) + alpha[v];
            acc[index.at({i, x})] += coef;
          }
        std::vector<std::pair<int, Rational>> row;
        for (auto& [col, v] : acc)
          if (v != 0) row.emplace_back(col, v);
        if (!row.empty()) ech.insert(std::move(row));
      }
    }
    out.values[slot] = static_cast<long>(index.size()) - ech.rank();
  });
  return out;
}

GradedDims graded_dims_groebner(const ModulePresentation& m0, int from, int to) {
  ModulePresentation m = change_coefficients(m0, rational_if_integral(m0.ring));
  require(m.ring->flavor == Coeff::Rat, "graded dimensions are computed over Q");
  column_degrees(m);
  auto gb = module_basis(RationalField{}, m);
  std::vector<int> pos_deg = m.degrees.empty() ? std::vector<int>(m.num_generators, 0) : m.degrees;
  GradedDims out{from, {}};
  for (int d = from; d <= to; ++d) out.values.push_back(gb.hilbert(d, pos_deg));
  return out;
}

// ---------------------------------------------------------------------------

int minimal_conductor(const std::vector<std::int64_t>& divisors) {
  std::int64_t m = 1;
  for (auto d : divisors) m = std::lcm(m, d);
  require(m <= 100000, "conductor too large");
  return static_cast<int>(m);
}

CharacterPoint CharacterPoint::rational(const std::vector<Rational>& free, const std::vector<std::int64_t>& torsion,
                                        const std::vector<std::int64_t>& divisors) {
  CharacterPoint chi;
  chi.conductor = minimal_conductor(divisors);
  CyclotomicField k(chi.conductor);
  for (const auto& q : free) chi.free.push_back(k.from(q));
  chi.torsion = torsion;
  return chi;
}

CharacterPoint CharacterPoint::with_conductor(int m) const {
  require(m >= 1 && m % conductor == 0, "new conductor must be a multiple of the old one");
  if (m == conductor) return *this;
  CharacterPoint out = *this;
  out.conductor = m;
  CyclotomicField big(m);
  const int step = m / conductor;
  out.free.clear();
  for (const auto& v : free) {
    std::vector<Rational> c(static_cast<std::size_t>(v.size()) * step, Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i) c[i * step] = v[i];
    out.free.push_back(big.reduce(UPoly(c)));
  }
  return out;
}

bool CharacterPoint::is_identity() const {
  CyclotomicField k(conductor);
  for (const auto& v : free)
    if (!k.is_zero(k.sub(v, k.one()))) return false;
  for (auto e : torsion)
    if (e != 0) return false;
  return true;
}

std::string CharacterPoint::to_string() const {
  CyclotomicField k(conductor);
  std::string s = "(";
  for (std::size_t i = 0; i < free.size(); ++i) {
    if (i) s += ", ";
    s += k.str(free[i]);
  }
  if (!torsion.empty()) {
    s += "; torsion exponents";
    for (auto e : torsion) s += " " + std::to_string(e);
  }
  return s + ")";
}

namespace {

void check_character(const Ring& ring, const CharacterPoint& chi) {
  if (ring->kind == RingDescriptor::Kind::Polynomial) {
    require(static_cast<int>(chi.free.size()) == ring->num_vars() && chi.torsion.empty(),
            "point has the wrong number of coordinates");
    return;
  }
  require(static_cast<int>(chi.free.size()) == ring->free_rank, "character has the wrong number of free coordinates");
  require(chi.torsion.size() == ring->torsion.size(), "character has the wrong number of torsion coordinates");
  for (auto d : ring->torsion) require(chi.conductor % d == 0, "conductor is not a multiple of a torsion divisor");
}

// Evaluates through a generic field once each variable value is known.
template <class F>
typename F::Elem evaluate_with(const F& field, const RingElem& f, const std::vector<typename F::Elem>& free_vals,
                               const std::vector<typename F::Elem>& torsion_vals) {
  using E = typename F::Elem;
  const int r = static_cast<int>(free_vals.size());
  std::vector<std::map<std::int64_t, E>> cache(r + torsion_vals.size());
  auto power = [&](int v, std::int64_t k) -> E {
    auto it = cache[v].find(k);
    if (it != cache[v].end()) return it->second;
    E base = v < r ? free_vals[v] : torsion_vals[v - r];
    E x = field.one();
    E b = k < 0 ? field.inv(base) : base;
    for (std::int64_t kk = k < 0 ? -k : k; kk; kk >>= 1) {
      if (kk & 1) x = field.mul(x, b);
      b = field.mul(b, b);
    }
    cache[v].emplace(k, x);
    return x;
  };
  E acc = field.zero();
  for (const auto& [e, c] : f.terms()) {
    E t = field.from(c);
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] != 0) t = field.mul(t, power(static_cast<int>(v), e[v]));
    acc = field.add(acc, t);
  }
  return acc;
}

struct CycloAdapter {
  const CyclotomicField* k;
  using Elem = CyclotomicField::Elem;
  Elem zero() const { return k->zero(); }
  Elem one() const { return k->one(); }
  Elem from(const Rational& q) const { return k->from(q); }
  bool is_zero(const Elem& a) const { return k->is_zero(a); }
  Elem add(const Elem& a, const Elem& b) const { return k->add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return k->sub(a, b); }
  Elem mul(const Elem& a, const Elem& b) const { return k->mul(a, b); }
  Elem neg(const Elem& a) const { return k->neg(a); }
  Elem inv(const Elem& a) const { return k->inv(a); }
};

std::vector<CyclotomicField::Elem> torsion_values(const CyclotomicField& k, const Ring& ring,
                                                  const CharacterPoint& chi) {
  std::vector<CyclotomicField::Elem> out;
  for (std::size_t j = 0; j < chi.torsion.size(); ++j) {
    std::int64_t d = ring->torsion[j];
    out.push_back(k.zeta_power(mod_floor(chi.torsion[j], d) * (chi.conductor / d)));
  }
  return out;
}

}  // namespace

CyclotomicField::Elem evaluate(const RingElem& f, const CharacterPoint& chi) {
  check_character(f.ring(), chi);
  CyclotomicField k(chi.conductor);
  CycloAdapter a{&k};
  if (f.ring()->kind == RingDescriptor::Kind::GroupAlgebra)
    for (const auto& v : chi.free) require(!k.is_zero(v), "character values must be nonzero");
  return evaluate_with(a, f, chi.free, torsion_values(k, f.ring(), chi));
}

int rank_at_character(const GroupAlgebraMatrix& mat, const CharacterPoint& chi) {
  check_character(mat.ring, chi);
  CyclotomicField k(chi.conductor);
  CycloAdapter a{&k};
  if (mat.ring->kind == RingDescriptor::Kind::GroupAlgebra)
    for (const auto& v : chi.free) require(!k.is_zero(v), "character values must be nonzero");
  auto tv = torsion_values(k, mat.ring, chi);
  std::vector<std::vector<CyclotomicField::Elem>> m(mat.rows, std::vector<CyclotomicField::Elem>(mat.cols));
  for (int i = 0; i < mat.rows; ++i)
    for (int j = 0; j < mat.cols; ++j) m[i][j] = evaluate_with(a, mat(i, j), chi.free, tv);
  return dense_rank(a, std::move(m), mat.cols);
}

namespace {

bool probable_prime(std::uint64_t n) {
  Integer z = static_cast<unsigned long>(n);
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

int rank_at_character_modq(const GroupAlgebraMatrix& mat, const CharacterPoint& chi, std::uint64_t* q_used) {
  check_character(mat.ring, chi);
  const std::uint64_t m = static_cast<std::uint64_t>(chi.conductor);
  std::uint64_t kq = ((std::uint64_t{1} << 61) - 1) / m;
  while (!probable_prime(kq * m + 1)) --kq;
  const std::uint64_t q = kq * m + 1;
  PrimeField f{q};
  std::uint64_t omega = 1;
  auto pf = prime_factors(m);
  for (std::uint64_t a = 2;; ++a) {
    std::uint64_t w = pow_mod(a, (q - 1) / m, q);
    bool primitive = w != 1 || m == 1;
    for (auto l : pf)
      if (pow_mod(w, m / l, q) == 1) primitive = false;
    if (primitive || m == 1) {
      omega = w;
      break;
    }
  }
  auto embed = [&](const CyclotomicField::Elem& v) {
    std::uint64_t acc = 0, pw = 1;
    for (const auto& c : v) {
      acc = f.add(acc, f.mul(rational_mod(c, q), pw));
      pw = f.mul(pw, omega);
    }
    return acc;
  };
  std::vector<std::uint64_t> fv, tv;
  for (const auto& v : chi.free) fv.push_back(embed(v));
  for (std::size_t j = 0; j < chi.torsion.size(); ++j) {
    std::int64_t d = mat.ring->torsion[j];
    tv.push_back(pow_mod(omega, static_cast<std::uint64_t>(mod_floor(chi.torsion[j], d) * (chi.conductor / d)), q));
  }
  if (mat.ring->kind == RingDescriptor::Kind::GroupAlgebra)
    for (auto v : fv) require(v != 0, "character value vanishes modulo q");
  std::vector<std::vector<std::uint64_t>> a(mat.rows, std::vector<std::uint64_t>(mat.cols));
  for (int i = 0; i < mat.rows; ++i)
    for (int j = 0; j < mat.cols; ++j) a[i][j] = evaluate_with(f, mat(i, j), fv, tv);
  if (q_used) *q_used = q;
  return dense_rank(f, std::move(a), mat.cols);
}

bool ideal_vanishes_at(const Ideal& ideal, const CharacterPoint& chi) {
  CyclotomicField k(chi.conductor);
  for (const auto& g : ideal.generators)
    if (!k.is_zero(evaluate(g, chi))) return false;
  return true;
}

}  // namespace alexlab
