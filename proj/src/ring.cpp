#include "alexlab/ring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "alexlab/errors.hpp"

namespace alexlab {

bool RingDescriptor::operator==(const RingDescriptor& o) const {
  return kind == o.kind && free_rank == o.free_rank && torsion == o.torsion && flavor == o.flavor && p == o.p;
}

std::string RingDescriptor::describe() const {
  std::string coeff = flavor == Coeff::Int ? "Z" : flavor == Coeff::Rat ? "Q" : "F" + std::to_string(p);
  std::string vars;
  for (std::size_t i = 0; i < var_names.size(); ++i) vars += (i ? "," : "") + var_names[i];
  if (kind == Kind::Polynomial) return coeff + "[" + vars + "]";
  std::string out = coeff + "[" + vars + "]";
  std::string rels;
  for (int i = 0; i < free_rank; ++i) rels += (rels.empty() ? "" : ",") + var_names[i] + "^-1";
  if (!rels.empty()) out = coeff + "[" + vars + "," + rels + "]";
  std::string tors;
  for (std::size_t j = 0; j < torsion.size(); ++j)
    tors += (tors.empty() ? "" : ",") + var_names[free_rank + j] + "^" + std::to_string(torsion[j]) + "-1";
  if (!tors.empty()) out += "/(" + tors + ")";
  return out;
}

namespace {

void check_flavor(Coeff flavor, std::uint64_t p) {
  if (flavor == Coeff::ModP) require(is_prime(p), "F_p coefficients need a prime p");
}

}  // namespace

Ring group_algebra(int free_rank, std::vector<std::int64_t> torsion, Coeff flavor, std::uint64_t p) {
  require(free_rank >= 0, "negative free rank");
  for (auto d : torsion) require(d >= 2, "torsion divisors must be at least 2");
  check_flavor(flavor, p);
  auto r = std::make_shared<RingDescriptor>();
  r->kind = RingDescriptor::Kind::GroupAlgebra;
  r->free_rank = free_rank;
  r->flavor = flavor;
  r->p = flavor == Coeff::ModP ? p : 0;
  if (free_rank == 1)
    r->var_names.push_back("t");
  else
    for (int i = 1; i <= free_rank; ++i) r->var_names.push_back("t" + std::to_string(i));
  if (torsion.size() == 1)
    r->var_names.push_back("s");
  else
    for (std::size_t j = 1; j <= torsion.size(); ++j) r->var_names.push_back("s" + std::to_string(j));
  r->torsion = std::move(torsion);
  return r;
}

Ring polynomial_ring(int num_vars, Coeff flavor, std::uint64_t p, std::vector<std::string> names) {
  require(num_vars >= 0, "negative variable count");
  check_flavor(flavor, p);
  auto r = std::make_shared<RingDescriptor>();
  r->kind = RingDescriptor::Kind::Polynomial;
  r->free_rank = num_vars;
  r->flavor = flavor;
  r->p = flavor == Coeff::ModP ? p : 0;
  if (names.empty()) {
    if (num_vars == 1)
      names.push_back("x");
    else
      for (int i = 1; i <= num_vars; ++i) names.push_back("x" + std::to_string(i));
  }
  require(static_cast<int>(names.size()) == num_vars, "variable name count mismatch");
  r->var_names = std::move(names);
  return r;
}

Ring with_flavor(const Ring& r, Coeff flavor, std::uint64_t p) {
  check_flavor(flavor, p);
  auto out = std::make_shared<RingDescriptor>(*r);
  out->flavor = flavor;
  out->p = flavor == Coeff::ModP ? p : 0;
  return out;
}

bool degrevlex_greater(const Exponents& a, const Exponents& b) {
  std::int64_t da = std::accumulate(a.begin(), a.end(), std::int64_t{0});
  std::int64_t db = std::accumulate(b.begin(), b.end(), std::int64_t{0});
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

// ---------------------------------------------------------------------------

RingElem::RingElem(Ring ring) : ring_(std::move(ring)) {}

RingElem::RingElem(Ring ring, const Rational& c) : ring_(std::move(ring)) {
  add_term(Exponents(ring_->num_vars(), 0), c);
}

RingElem RingElem::monomial(Ring ring, Exponents e, const Rational& c) {
  RingElem f(std::move(ring));
  f.add_term(e, c);
  return f;
}

RingElem RingElem::variable(Ring ring, int i, std::int64_t power) {
  require(i >= 0 && i < ring->num_vars(), "variable index out of range");
  Exponents e(ring->num_vars(), 0);
  e[i] = power;
  return monomial(std::move(ring), e);
}

Exponents RingElem::normalize(Exponents e) const {
  require(static_cast<int>(e.size()) == ring_->num_vars(), "exponent vector length mismatch");
  if (ring_->kind == RingDescriptor::Kind::Polynomial) {
    for (auto x : e) require(x >= 0, "negative exponent in a polynomial ring");
  }
  for (std::size_t j = 0; j < ring_->torsion.size(); ++j) {
    auto& x = e[ring_->free_rank + j];
    x = mod_floor(x, ring_->torsion[j]);
  }
  return e;
}

Rational RingElem::normalize(const Rational& c) const {
  switch (ring_->flavor) {
    case Coeff::ModP:
      return Rational(static_cast<unsigned long>(rational_mod(c, ring_->p)));
    case Coeff::Int:
      require(c.get_den() == 1, "non-integral coefficient in an integral group ring");
      return c;
    default:
      return c;
  }
}

void RingElem::add_term(const Exponents& e, const Rational& c) {
  require(ring_ != nullptr, "ring element without a ring");
  Rational v = normalize(c);
  if (sgn(v) == 0) return;
  Exponents k = normalize(e);
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(std::move(k), v);
    return;
  }
  it->second = normalize(it->second + v);
  if (sgn(it->second) == 0) terms_.erase(it);
}

bool RingElem::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 0; });
}

Rational RingElem::constant_term() const {
  if (!ring_) return 0;
  auto it = terms_.find(Exponents(ring_->num_vars(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational RingElem::augmentation() const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return ring_ ? normalize(s) : s;
}

std::int64_t RingElem::total_degree() const {
  std::int64_t d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), std::int64_t{0}));
  return d;
}

RingElem RingElem::operator-() const {
  RingElem out(ring_);
  for (const auto& [e, c] : terms_) out.add_term(e, -c);
  return out;
}

RingElem& RingElem::operator+=(const RingElem& o) {
  if (!ring_) ring_ = o.ring_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) {
  if (!ring_) ring_ = o.ring_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

RingElem operator*(const RingElem& a, const RingElem& b) {
  Ring r = a.ring_ ? a.ring_ : b.ring_;
  RingElem out(r);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

RingElem RingElem::scaled(const Rational& c) const {
  RingElem out(ring_);
  for (const auto& [e, x] : terms_) out.add_term(e, x * c);
  return out;
}

RingElem RingElem::shifted(const Exponents& s) const {
  RingElem out(ring_);
  for (const auto& [e, x] : terms_) {
    Exponents k(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) k[i] = e[i] + s[i];
    out.add_term(k, x);
  }
  return out;
}

RingElem RingElem::at_one(int var) const {
  RingElem out(ring_);
  for (const auto& [e, c] : terms_) {
    Exponents k = e;
    k[var] = 0;
    out.add_term(k, c);
  }
  return out;
}

std::string RingElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += ring_->var_names[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    Rational mag = abs(c);
    bool neg = sgn(c) < 0;
    std::string term;
    if (mono.empty())
      term = alexlab::to_string(mag);
    else if (mag == 1)
      term = mono;
    else
      term = alexlab::to_string(mag) + "*" + mono;
    if (first)
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(int degree, const Rational& c) {
  std::vector<Rational> v(degree + 1, 0);
  v[degree] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UPoly UPoly::operator-() const { return scaled(-1); }

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(v));
}

UPoly UPoly::scaled(const Rational& c) const {
  std::vector<Rational> v = c_;
  for (auto& x : v) x *= c;
  return UPoly(std::move(v));
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  require(!b.is_zero(), "polynomial division by zero");
  std::vector<Rational> rem = a.c_;
  int db = b.degree();
  std::vector<Rational> quo(std::max(0, a.degree() - db + 1), 0);
  Rational lead_inv = 1 / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    if (sgn(rem[i]) == 0) continue;
    Rational f = rem[i] * lead_inv;
    quo[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c_[j];
  }
  q = UPoly(std::move(quo));
  r = UPoly(std::move(rem));
}

UPoly UPoly::monic() const { return is_zero() ? *this : scaled(1 / leading()); }

UPoly UPoly::laurent_normalized() const {
  if (is_zero()) return *this;
  std::size_t k = 0;
  while (sgn(c_[k]) == 0) ++k;
  return UPoly(std::vector<Rational>(c_.begin() + k, c_.end())).monic();
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[i];
    if (sgn(c) == 0) continue;
    std::string mono = i == 0 ? "" : i == 1 ? var : var + "^" + std::to_string(i);
    Rational mag = abs(c);
    std::string term = mono.empty() ? alexlab::to_string(mag)
                       : mag == 1   ? mono
                                    : alexlab::to_string(mag) + "*" + mono;
    if (out.empty())
      out = (sgn(c) < 0 ? "-" : "") + term;
    else
      out += (sgn(c) < 0 ? " - " : " + ") + term;
  }
  return out;
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    UPoly::divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

void ext_gcd(const UPoly& a, const UPoly& b, UPoly& g, UPoly& s, UPoly& t) {
  UPoly r0 = a, r1 = b, s0({1}), s1, t0, t1({1});
  while (!r1.is_zero()) {
    UPoly q, r;
    UPoly::divmod(r0, r1, q, r);
    UPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Rational inv = r0.is_zero() ? Rational(1) : 1 / r0.leading();
  g = r0.scaled(inv);
  s = s0.scaled(inv);
  t = t0.scaled(inv);
}

UPoly cyclotomic_polynomial(int m) {
  require(m >= 1, "cyclotomic conductor must be positive");
  UPoly f = UPoly::monomial(m) - UPoly({1});
  for (int d = 1; d < m; ++d) {
    if (m % d) continue;
    UPoly q, r;
    UPoly::divmod(f, cyclotomic_polynomial(d), q, r);
    ensure(r.is_zero(), "cyclotomic division not exact");
    f = q;
  }
  return f;
}

int euler_phi(int m) {
  int r = m, n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

CyclotomicField::CyclotomicField(int conductor) : m(conductor), phi(cyclotomic_polynomial(conductor)) {}

CyclotomicField::Elem CyclotomicField::zero() const { return Elem(phi.degree(), 0); }
CyclotomicField::Elem CyclotomicField::one() const { return from(1); }
CyclotomicField::Elem CyclotomicField::from(const Rational& q) const {
  Elem e = zero();
  e[0] = q;
  return e;
}

CyclotomicField::Elem CyclotomicField::reduce(const UPoly& f) const {
  UPoly q, r;
  UPoly::divmod(f, phi, q, r);
  Elem e = zero();
  for (int i = 0; i <= r.degree(); ++i) e[i] = r[i];
  return e;
}

CyclotomicField::Elem CyclotomicField::zeta_power(std::int64_t k) const {
  return reduce(UPoly::monomial(static_cast<int>(mod_floor(k, m))));
}

bool CyclotomicField::is_zero(const Elem& a) const {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return sgn(x) == 0; });
}

CyclotomicField::Elem CyclotomicField::add(const Elem& a, const Elem& b) const {
  Elem e = a;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b[i];
  return e;
}

CyclotomicField::Elem CyclotomicField::sub(const Elem& a, const Elem& b) const {
  Elem e = a;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= b[i];
  return e;
}

CyclotomicField::Elem CyclotomicField::mul(const Elem& a, const Elem& b) const { return reduce(UPoly(a) * UPoly(b)); }

CyclotomicField::Elem CyclotomicField::neg(const Elem& a) const {
  Elem e = a;
  for (auto& x : e) x = -x;
  return e;
}

CyclotomicField::Elem CyclotomicField::inv(const Elem& a) const {
  require(!is_zero(a), "inverse of zero in a cyclotomic field");
  UPoly g, s, t;
  ext_gcd(UPoly(a), phi, g, s, t);
  ensure(g.degree() == 0, "cyclotomic polynomial is not irreducible?");
  return reduce(s);
}

CyclotomicField::Elem CyclotomicField::pow(const Elem& a, std::int64_t k) const {
  if (k < 0) return pow(inv(a), -k);
  Elem r = one(), b = a;
  while (k) {
    if (k & 1) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

std::string CyclotomicField::str(const Elem& a) const {
  std::string var = "z" + std::to_string(m);
  return UPoly(a).to_string(var);
}

// ---------------------------------------------------------------------------

MonomialTable::MonomialTable(int vars, int order) : vars_(vars), order_(order) {
  require(vars >= 0 && order >= 1, "truncation order must be positive");
  start_.assign(order + 1, 0);
  for (int d = 0; d < order; ++d) {
    start_[d] = static_cast<int>(monos_.size());
    std::vector<int> e(vars, 0);
    // descending lex: fill leftmost variables first
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == vars - 1 || vars == 0) {
        if (vars == 0) {
          if (left == 0) monos_.push_back(e);
          return;
        }
        e[i] = left;
        monos_.push_back(e);
        e[i] = 0;
        return;
      }
      for (int k = left; k >= 0; --k) {
        e[i] = k;
        rec(i + 1, left - k);
      }
      e[i] = 0;
    };
    rec(0, d);
    for (std::size_t k = start_[d]; k < monos_.size(); ++k) degree_.push_back(d);
  }
  start_[order] = static_cast<int>(monos_.size());
  for (int i = 0; i < size(); ++i) index_[monos_[i]] = i;
  shift_.assign(vars, std::vector<int>(size(), -1));
  for (int v = 0; v < vars; ++v)
    for (int i = 0; i < size(); ++i) {
      std::vector<int> e = monos_[i];
      ++e[v];
      shift_[v][i] = index_of(e);
    }
}

int MonomialTable::index_of(const std::vector<int>& e) const {
  auto it = index_.find(e);
  return it == index_.end() ? -1 : it->second;
}

TruncatedLocalElem::TruncatedLocalElem(TableRef table) : table_(std::move(table)), c_(table_->size(), 0) {}

TruncatedLocalElem::TruncatedLocalElem(TableRef table, const Rational& c) : TruncatedLocalElem(std::move(table)) {
  c_[0] = c;
}

bool TruncatedLocalElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

TruncatedLocalElem& TruncatedLocalElem::operator+=(const TruncatedLocalElem& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

TruncatedLocalElem& TruncatedLocalElem::operator-=(const TruncatedLocalElem& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

TruncatedLocalElem operator*(const TruncatedLocalElem& a, const TruncatedLocalElem& b) {
  const MonomialTable& t = *a.table_;
  TruncatedLocalElem out(a.table_);
  std::vector<int> e(t.vars());
  for (int i = 0; i < t.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (int j = 0; j < t.size() && t.degree(i) + t.degree(j) < t.order(); ++j) {
      if (sgn(b.c_[j]) == 0) continue;
      for (int v = 0; v < t.vars(); ++v) e[v] = t.monomial(i)[v] + t.monomial(j)[v];
      out.c_[t.index_of(e)] += a.c_[i] * b.c_[j];
    }
  }
  return out;
}

TruncatedLocalElem TruncatedLocalElem::times_var(int var) const {
  TruncatedLocalElem out(table_);
  for (int i = 0; i < table_->size(); ++i) {
    int j = table_->times_var(var, i);
    if (j >= 0) out.c_[j] = c_[i];
  }
  return out;
}

TruncatedLocalElem TruncatedLocalElem::inverse() const {
  require(is_unit(), "element of the maximal ideal is not invertible");
  Rational c0 = c_[0];
  TruncatedLocalElem n = *this;
  n.c_[0] = 0;
  for (auto& x : n.c_) x /= -c0;  // this = c0 (1 - n)
  TruncatedLocalElem sum(table_, 1), power(table_, 1);
  for (int k = 1; k < table_->order(); ++k) {
    power = power * n;
    sum += power;
  }
  for (auto& x : sum.c_) x /= c0;
  return sum;
}

std::string TruncatedLocalElem::to_string() const {
  std::string out;
  for (int i = 0; i < table_->size(); ++i) {
    const Rational& c = c_[i];
    if (sgn(c) == 0) continue;
    std::string mono;
    for (int v = 0; v < table_->vars(); ++v) {
      int e = table_->monomial(i)[v];
      if (!e) continue;
      if (!mono.empty()) mono += '*';
      mono += "x" + std::to_string(v + 1);
      if (e != 1) mono += "^" + std::to_string(e);
    }
    Rational mag = abs(c);
    std::string term = mono.empty() ? alexlab::to_string(mag)
                       : mag == 1   ? mono
                                    : alexlab::to_string(mag) + "*" + mono;
    if (out.empty())
      out = (sgn(c) < 0 ? "-" : "") + term;
    else
      out += (sgn(c) < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

namespace {

// C(e, a) for any integer e and a >= 0.
Rational gen_binomial(std::int64_t e, int a) {
  Rational r = 1;
  for (int i = 0; i < a; ++i) r = r * Rational(e - i) / Rational(i + 1);
  return r;
}

}  // namespace

TruncatedLocalElem laurent_to_truncated(const RingElem& f, const TableRef& table) {
  require(f.ring() != nullptr, "ring element without a ring");
  const RingDescriptor& R = *f.ring();
  require(R.kind == RingDescriptor::Kind::GroupAlgebra, "truncation applies to group algebras");
  require(R.flavor != Coeff::ModP, "truncation needs characteristic zero");
  require(table->vars() == R.free_rank, "truncation table has the wrong number of variables");
  TruncatedLocalElem out(table);
  const int order = table->order();
  for (const auto& [e, c] : f.terms()) {
    std::vector<std::vector<Rational>> series(R.free_rank);
    for (int v = 0; v < R.free_rank; ++v)
      for (int a = 0; a < order; ++a) series[v].push_back(gen_binomial(e[v], a));
    for (int i = 0; i < table->size(); ++i) {
      Rational prod = c;
      for (int v = 0; v < R.free_rank && sgn(prod) != 0; ++v) prod *= series[v][table->monomial(i)[v]];
      out[i] += prod;
    }
  }
  return out;
}

TruncatedLocalElem laurent_to_truncated(const RingElem& f, int order) {
  require(order >= 1, "truncation order must be positive");
  return laurent_to_truncated(f, std::make_shared<MonomialTable>(f.ring()->free_rank, order));
}

}  // namespace alexlab
