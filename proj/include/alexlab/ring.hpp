#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "alexlab/arith.hpp"

namespace alexlab {

enum class Coeff { Int, Rat, ModP };

/// Z[Z^r + Z_{d_1} + ...] (group algebra) or k[x_1..x_n] (polynomial ring),
/// with integral, rational or F_p coefficients.
struct RingDescriptor {
  enum class Kind { GroupAlgebra, Polynomial };
  Kind kind = Kind::GroupAlgebra;
  int free_rank = 0;
  std::vector<std::int64_t> torsion;  // divisors, each >= 2
  Coeff flavor = Coeff::Rat;
  std::uint64_t p = 0;  // modulus for ModP
  std::vector<std::string> var_names;

  int num_vars() const { return free_rank + static_cast<int>(torsion.size()); }
  bool operator==(const RingDescriptor& o) const;
  std::string describe() const;
};

using Ring = std::shared_ptr<const RingDescriptor>;

Ring group_algebra(int free_rank, std::vector<std::int64_t> torsion, Coeff flavor, std::uint64_t p = 0);
Ring polynomial_ring(int num_vars, Coeff flavor, std::uint64_t p = 0, std::vector<std::string> names = {});
/// The same group or polynomial ring with different coefficients.
Ring with_flavor(const Ring& r, Coeff flavor, std::uint64_t p = 0);

using Exponents = std::vector<std::int64_t>;

/// Degree-reverse-lexicographic comparison (x_1 > x_2 > ...); true if a > b.
bool degrevlex_greater(const Exponents& a, const Exponents& b);

/// Sparse element of a RingDescriptor. Torsion exponents are kept reduced;
/// F_p coefficients are kept in [0,p).
class RingElem {
 public:
  struct DegrevlexDesc {
    bool operator()(const Exponents& a, const Exponents& b) const { return degrevlex_greater(a, b); }
  };
  using Terms = std::map<Exponents, Rational, DegrevlexDesc>;

  RingElem() = default;
  explicit RingElem(Ring ring);
  RingElem(Ring ring, const Rational& c);

  static RingElem monomial(Ring ring, Exponents e, const Rational& c = 1);
  /// The i-th ring variable (0-based), i.e. t_i or s_i or x_i.
  static RingElem variable(Ring ring, int i, std::int64_t power = 1);

  const Ring& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant coefficient (coefficient of the identity monomial).
  Rational constant_term() const;
  /// Sum of coefficients, the image under t_i, s_j -> 1.
  Rational augmentation() const;
  /// Largest total degree of a term (polynomial rings); -1 for zero.
  std::int64_t total_degree() const;

  void add_term(const Exponents& e, const Rational& c);

  RingElem operator-() const;
  RingElem& operator+=(const RingElem& o);
  RingElem& operator-=(const RingElem& o);
  friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
  friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
  friend RingElem operator*(const RingElem& a, const RingElem& b);
  RingElem scaled(const Rational& c) const;
  RingElem shifted(const Exponents& e) const;  // multiply by the monomial t^e
  bool operator==(const RingElem& o) const { return terms_ == o.terms_; }

  /// Substitutes the variable with index `var` by 1.
  RingElem at_one(int var) const;

  std::string to_string() const;

 private:
  Exponents normalize(Exponents e) const;
  Rational normalize(const Rational& c) const;
  Ring ring_;
  Terms terms_;
};

/// Dense univariate polynomial over Q, coefficients low to high.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly monomial(int degree, const Rational& c = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational operator[](int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly scaled(const Rational& c) const;
  bool operator==(const UPoly&) const = default;

  /// Quotient and remainder; divisor must be nonzero.
  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  UPoly monic() const;
  /// Removes factors of t and makes the polynomial monic.
  UPoly laurent_normalized() const;
  Rational eval(const Rational& x) const;
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

UPoly gcd(UPoly a, UPoly b);
/// g = s a + t b with g monic gcd.
void ext_gcd(const UPoly& a, const UPoly& b, UPoly& g, UPoly& s, UPoly& t);
/// The m-th cyclotomic polynomial.
UPoly cyclotomic_polynomial(int m);
int euler_phi(int m);

/// Q(zeta_m) in the power basis 1, z, ..., z^{phi(m)-1}.
struct CyclotomicField {
  int m = 1;
  UPoly phi;
  explicit CyclotomicField(int conductor);

  using Elem = std::vector<Rational>;  // length phi(m)
  Elem zero() const;
  Elem one() const;
  Elem from(const Rational& q) const;
  Elem zeta_power(std::int64_t k) const;
  bool is_zero(const Elem& a) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem inv(const Elem& a) const;
  Elem pow(const Elem& a, std::int64_t k) const;
  Elem reduce(const UPoly& f) const;
  std::string str(const Elem& a) const;
};

/// Monomials in r variables of total degree < N, ordered by ascending degree
/// and then descending lex within a degree.
class MonomialTable {
 public:
  MonomialTable(int vars, int order);
  int vars() const { return vars_; }
  int order() const { return order_; }
  int size() const { return static_cast<int>(monos_.size()); }
  const std::vector<int>& monomial(int i) const { return monos_[i]; }
  int degree(int i) const { return degree_[i]; }
  /// Index of x_var * monomial(i), or -1 when the degree reaches the order.
  int times_var(int var, int i) const { return shift_[var][i]; }
  int index_of(const std::vector<int>& e) const;  // -1 if absent
  /// Number of monomials of degree < d.
  int count_below(int d) const { return d <= 0 ? 0 : d >= order_ ? size() : start_[d]; }

 private:
  int vars_, order_;
  std::vector<std::vector<int>> monos_;
  std::vector<int> degree_;
  std::vector<int> start_;
  std::map<std::vector<int>, int> index_;
  std::vector<std::vector<int>> shift_;
};

using TableRef = std::shared_ptr<const MonomialTable>;

/// Element of Q[x_1..x_r]/m^N, stored densely against a MonomialTable.
class TruncatedLocalElem {
 public:
  explicit TruncatedLocalElem(TableRef table);
  TruncatedLocalElem(TableRef table, const Rational& c);

  const TableRef& table() const { return table_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational& operator[](int i) { return c_[i]; }
  const Rational& operator[](int i) const { return c_[i]; }
  bool is_zero() const;
  bool is_unit() const { return c_[0] != 0; }

  TruncatedLocalElem& operator+=(const TruncatedLocalElem& o);
  TruncatedLocalElem& operator-=(const TruncatedLocalElem& o);
  friend TruncatedLocalElem operator+(TruncatedLocalElem a, const TruncatedLocalElem& b) { return a += b; }
  friend TruncatedLocalElem operator-(TruncatedLocalElem a, const TruncatedLocalElem& b) { return a -= b; }
  friend TruncatedLocalElem operator*(const TruncatedLocalElem& a, const TruncatedLocalElem& b);
  TruncatedLocalElem times_var(int var) const;
  bool operator==(const TruncatedLocalElem& o) const { return c_ == o.c_; }

  /// Inverse via the geometric series; requires a nonzero constant term.
  TruncatedLocalElem inverse() const;
  std::string to_string() const;

 private:
  TableRef table_;
  std::vector<Rational> c_;
};

/// t_i -> 1 + x_i on free coordinates, torsion generators -> 1, reduced mod m^N.
TruncatedLocalElem laurent_to_truncated(const RingElem& f, int order);
TruncatedLocalElem laurent_to_truncated(const RingElem& f, const TableRef& table);

}  // namespace alexlab
