#include "braidcryst/poly.hpp"

#include "braidcryst/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace braidcryst {

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::one() { return IntPoly({Int(1)}); }

IntPoly IntPoly::x_pow_minus_one(long z) {
    if (z < 1) throw std::invalid_argument("exponent must be >= 1");
    std::vector<Int> c(static_cast<size_t>(z) + 1);
    c[0] = -1;
    c[static_cast<size_t>(z)] = 1;
    return IntPoly(std::move(c));
}

const Int &IntPoly::coeff(int k) const {
    static const Int zero = 0;
    if (k < 0 || k > degree()) return zero;
    return coeffs_[static_cast<size_t>(k)];
}

IntPoly operator*(const IntPoly &a, const IntPoly &b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            if (b.coeffs_[j] != 0) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPoly(std::move(c));
}

IntPoly operator+(const IntPoly &a, const IntPoly &b) {
    std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.coeffs_.size()) c[i] += a.coeffs_[i];
        if (i < b.coeffs_.size()) c[i] += b.coeffs_[i];
    }
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly &a, const IntPoly &b) {
    std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.coeffs_.size()) c[i] += a.coeffs_[i];
        if (i < b.coeffs_.size()) c[i] -= b.coeffs_[i];
    }
    return IntPoly(std::move(c));
}

PolyDivMod divmod_monic(const IntPoly &dividend, const IntPoly &divisor) {
    if (divisor.is_zero() || divisor.coeffs().back() != 1)
        throw std::invalid_argument("divisor must be monic");
    std::vector<Int> rem = dividend.coeffs();
    const int dd = divisor.degree();
    if (dividend.degree() < dd) return {IntPoly(), dividend};
    std::vector<Int> quot(static_cast<size_t>(dividend.degree() - dd) + 1);
    for (int k = dividend.degree(); k >= dd; --k) {
        Int lead = rem[static_cast<size_t>(k)];
        if (lead == 0) continue;
        quot[static_cast<size_t>(k - dd)] = lead;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<size_t>(k - dd + j)] -= lead * divisor.coeffs()[static_cast<size_t>(j)];
    }
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
        const Int &c = coeff(k);
        if (c == 0) continue;
        if (!s.empty()) s += c > 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        Int a = abs(c);
        if (a != 1 || k == 0) s += a.get_str();
        if (k > 0) {
            if (a != 1) s += "*";
            s += "x";
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

const IntPoly &cyclotomic(long d) {
    static std::map<long, IntPoly> cache;
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    if (d < 1) throw std::invalid_argument("cyclotomic index must be >= 1");
    IntPoly num = IntPoly::x_pow_minus_one(d);
    for (long e : divisors(d)) {
        if (e == d) continue;
        auto dm = divmod_monic(num, cyclotomic(e));
        if (!dm.rem.is_zero()) throw verification_error("cyclotomic division not exact");
        num = std::move(dm.quot);
    }
    return cache.emplace(d, std::move(num)).first->second;
}

long euler_phi(long d) {
    long result = d;
    for (long p = 2; p * p <= d; ++p) {
        if (d % p == 0) {
            while (d % p == 0) d /= p;
            result -= result / p;
        }
    }
    if (d > 1) result -= result / d;
    return result;
}

std::vector<long> divisors(long z) {
    std::vector<long> out;
    for (long a = 1; a * a <= z; ++a) {
        if (z % a) continue;
        out.push_back(a);
        if (a != z / a) out.push_back(z / a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace braidcryst
