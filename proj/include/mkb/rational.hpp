#ifndef MKB_RATIONAL_HPP
#define MKB_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mkb {

// Exact arbitrary-precision rational, always in lowest terms.
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Rational rational_from_string(const std::string& s) {
  // accepts "p", "-p", "p/q"
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  if (sgn(q.get_den()) <= 0 && sgn(q) != 0 && q.get_den() == 0)
    throw std::invalid_argument("bad rational: " + s);
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Reduce a rational mod a word-size prime; the denominator must be invertible.
inline std::uint64_t mod_prime(const Rational& q, std::uint64_t p) {
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class n = q.get_num() % pz;
  if (n < 0) n += pz;
  mpz_class d = q.get_den() % pz;
  if (d == 0) throw std::domain_error("denominator vanishes mod p");
  mpz_class dinv;
  if (mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), pz.get_mpz_t()) == 0)
    throw std::domain_error("denominator not invertible mod p");
  mpz_class r = (n * dinv) % pz;
  return r.get_ui();
}

}  // namespace mkb

#endif
