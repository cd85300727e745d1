#ifndef BRAIDCRYST_POLY_HPP
#define BRAIDCRYST_POLY_HPP

#include <string>
#include <vector>

#include "braidcryst/int.hpp"

namespace braidcryst {

// Dense univariate polynomial over Z, coefficient of x^k at index k.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    static IntPoly one();
    static IntPoly x_pow_minus_one(long z);  // x^z - 1

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero poly
    const std::vector<Int> &coeffs() const { return coeffs_; }
    const Int &coeff(int k) const;
    bool is_zero() const { return coeffs_.empty(); }

    friend IntPoly operator*(const IntPoly &a, const IntPoly &b);
    friend IntPoly operator+(const IntPoly &a, const IntPoly &b);
    friend IntPoly operator-(const IntPoly &a, const IntPoly &b);
    bool operator==(const IntPoly &) const = default;

    std::string str() const;  // human-readable, highest degree first

  private:
    void normalize();
    std::vector<Int> coeffs_;
};

// Quotient and remainder by a monic divisor (exact in Z).
struct PolyDivMod {
    IntPoly quot;
    IntPoly rem;
};
PolyDivMod divmod_monic(const IntPoly &dividend, const IntPoly &divisor);

// d-th cyclotomic polynomial (memoized).
const IntPoly &cyclotomic(long d);

long euler_phi(long d);

std::vector<long> divisors(long z);

}  // namespace braidcryst

#endif
