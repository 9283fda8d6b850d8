#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace carlitz {

// Exact arbitrary-precision rational, always canonical (lowest terms,
// positive denominator). GMP's mpq_class maintains both invariants as long
// as values are built through canonicalizing paths, which the helpers below
// enforce.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rational_from_decimal(const std::string& num, const std::string& den) {
    Integer n(num, 10), d(den, 10);
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

inline std::string decimal(const Integer& z) { return z.get_str(10); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Exact square root of a rational square; throws if the value is not one.
inline Rational rational_sqrt(const Rational& r) {
    if (sgn(r) < 0) throw std::domain_error("sqrt of negative rational");
    Integer n = r.get_num(), d = r.get_den();
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    if (sn * sn != n || sd * sd != d)
        throw std::domain_error("constant term is not a rational square");
    return Rational(sn, sd);
}

}  // namespace carlitz
