#include "alexlab/arith.hpp"

#include <cctype>

#include "alexlab/errors.hpp"

namespace alexlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  PrimeField f{p};
  std::uint64_t r = f.one();
  base %= p;
  while (exp) {
    if (exp & 1) r = f.mul(r, base);
    base = f.mul(base, base);
    exp >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  ensure(a % p != 0, "inverse of zero modulo p");
  return pow_mod(a, p - 2, p);
}

std::uint64_t rational_mod(const Rational& q, std::uint64_t p) {
  Integer pz = static_cast<unsigned long>(p);
  Integer num = q.get_num() % pz;
  if (num < 0) num += pz;
  Integer den = q.get_den() % pz;
  require(den != 0, "denominator divisible by p = " + std::to_string(p));
  std::uint64_t n = num.get_ui();
  std::uint64_t d = den.get_ui();
  return PrimeField{p}.mul(n, inv_mod(d, p));
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw PreconditionError("empty rational literal");
  auto valid_int = [](const std::string& t) {
    std::size_t i = (t.size() > 0 && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num = num.substr(1);
  if (!valid_int(num) || !valid_int(den)) throw PreconditionError("malformed rational '" + text + "'");
  Integer d(den);
  if (d == 0) throw PreconditionError("zero denominator in '" + text + "'");
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

std::int64_t to_int64(const Integer& z) {
  ensure(z.fits_slong_p(), "integer does not fit in 64 bits: " + z.get_str());
  return z.get_si();
}

}  // namespace alexlab
