#include "braidcryst/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace braidcryst {

Perm::Perm(int n) {
    if (n < 1) throw std::invalid_argument("permutation degree must be >= 1");
    images_.resize(static_cast<size_t>(n));
    std::iota(images_.begin(), images_.end(), 1);
}

Perm Perm::from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : images) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v) - 1])
            throw std::invalid_argument("not a permutation of 1..n");
        seen[static_cast<size_t>(v) - 1] = 1;
    }
    Perm p(n);
    p.images_ = std::move(images);
    return p;
}

Perm Perm::transposition(int n, int k) {
    if (k < 1 || k >= n) throw std::out_of_range("transposition index out of range");
    Perm p(n);
    std::swap(p.images_[static_cast<size_t>(k) - 1], p.images_[static_cast<size_t>(k)]);
    return p;
}

Perm Perm::then(const Perm &rhs) const {
    if (n() != rhs.n()) throw std::invalid_argument("degree mismatch");
    Perm r(n());
    for (int i = 1; i <= n(); ++i) r.images_[static_cast<size_t>(i) - 1] = rhs((*this)(i));
    return r;
}

Perm Perm::inverse() const {
    Perm r(n());
    for (int i = 1; i <= n(); ++i) r.images_[static_cast<size_t>((*this)(i)) - 1] = i;
    return r;
}

Perm Perm::power(long k) const {
    Perm base = k >= 0 ? *this : inverse();
    unsigned long e = k >= 0 ? static_cast<unsigned long>(k) : static_cast<unsigned long>(-k);
    Perm acc(n());
    while (e) {
        if (e & 1) acc = acc.then(base);
        base = base.then(base);
        e >>= 1;
    }
    return acc;
}

bool Perm::is_identity() const {
    for (int i = 1; i <= n(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

long Perm::order() const {
    std::vector<char> seen(static_cast<size_t>(n()), 0);
    long ord = 1;
    for (int i = 1; i <= n(); ++i) {
        if (seen[static_cast<size_t>(i) - 1]) continue;
        long len = 0;
        int j = i;
        do {
            seen[static_cast<size_t>(j) - 1] = 1;
            j = (*this)(j);
            ++len;
        } while (j != i);
        ord = std::lcm(ord, len);
    }
    return ord;
}

}  // namespace braidcryst
