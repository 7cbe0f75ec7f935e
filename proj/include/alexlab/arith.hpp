#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace alexlab {

using Integer = mpz_class;
using Rational = mpq_class;

bool is_prime(std::uint64_t n);

/// Binomial coefficient for small arguments; 0 when k < 0 or k > n.
std::uint64_t binomial(std::int64_t n, std::int64_t k);

/// Non-negative residue of a mod m (m > 0).
std::int64_t mod_floor(std::int64_t a, std::int64_t m);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

/// Residue of a rational number modulo p; the denominator must be prime to p.
std::uint64_t rational_mod(const Rational& q, std::uint64_t p);

/// "p/q" or "p" in lowest terms.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p", "-p", "p/q". Throws PreconditionError on malformed input.
Rational parse_rational(const std::string& text);

std::int64_t to_int64(const Integer& z);

/// Fields used by the generic linear algebra and Groebner code. Each carries
/// whatever context it needs (the modulus for F_p, the conductor for Q(zeta)).
struct RationalField {
  using Elem = Rational;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from(const Rational& q) const { return q; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return 1 / a; }
  std::string str(const Elem& a) const { return to_string(a); }
};

struct PrimeField {
  std::uint64_t p;
  using Elem = std::uint64_t;
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from(const Rational& q) const { return rational_mod(q, p); }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const { return inv_mod(a, p); }
  std::string str(Elem a) const { return std::to_string(a); }
};

}  // namespace alexlab
