#ifndef BRAIDCRYST_INT_HPP
#define BRAIDCRYST_INT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace braidcryst {

// All group-theoretic and matrix arithmetic runs on arbitrary-precision
// integers. Machine ints are only used for sizes and indices.
using Int = mpz_class;

inline Int int_pow(const Int &base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int int_gcd(const Int &a, const Int &b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int int_lcm(const Int &a, const Int &b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// a x + b y = g, g >= 0
inline Int int_gcdext(const Int &a, const Int &b, Int &x, Int &y) {
    Int g;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(),
               b.get_mpz_t());
    return g;
}

// Exact quotient; throws if b does not divide a.
inline Int int_divexact(const Int &a, const Int &b) {
    if (b == 0) throw std::domain_error("division by zero");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::domain_error("inexact integer division");
    return q;
}

// Floor division pair, used by normal-form reductions.
inline void int_fdiv_qr(const Int &a, const Int &b, Int &q, Int &r) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

inline long int_to_long(const Int &a) {
    if (!a.fits_slong_p()) throw std::overflow_error("integer too large for long");
    return a.get_si();
}

inline std::string int_str(const Int &a) { return a.get_str(); }

}  // namespace braidcryst

#endif
