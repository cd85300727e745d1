#include "braidcryst/pure_vector.hpp"

#include <algorithm>
#include <stdexcept>

namespace braidcryst {

PairIndex::PairIndex(int a, int b) {
    if (a == b || a < 1 || b < 1) throw std::invalid_argument("invalid strand pair");
    i = std::min(a, b);
    j = std::max(a, b);
}

std::string PairIndex::str() const {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

int pair_count(int n) { return n * (n - 1) / 2; }

int pair_rank(int n, PairIndex p) {
    if (p.j > n) throw std::out_of_range("pair exceeds strand count");
    // pairs with first coordinate < i come first, then (i,i+1)..(i,j)
    return (p.i - 1) * n - p.i * (p.i - 1) / 2 + (p.j - p.i - 1);
}

PairIndex pair_at(int n, int rank) {
    for (int i = 1; i < n; ++i) {
        int row = n - i;
        if (rank < row) return PairIndex(i, i + 1 + rank);
        rank -= row;
    }
    throw std::out_of_range("pair rank out of range");
}

PureVector::PureVector(int n) : n_(n) {
    if (n < 3) throw std::invalid_argument("strand count must be >= 3");
    coords_.resize(static_cast<size_t>(pair_count(n)));
}

PureVector PureVector::unit(int n, PairIndex p) {
    PureVector v(n);
    v.at(p) = 1;
    return v;
}

PureVector &PureVector::operator+=(const PureVector &rhs) {
    if (n_ != rhs.n_) throw std::invalid_argument("strand count mismatch");
    for (size_t k = 0; k < coords_.size(); ++k) coords_[k] += rhs.coords_[k];
    return *this;
}

PureVector &PureVector::operator-=(const PureVector &rhs) {
    if (n_ != rhs.n_) throw std::invalid_argument("strand count mismatch");
    for (size_t k = 0; k < coords_.size(); ++k) coords_[k] -= rhs.coords_[k];
    return *this;
}

PureVector operator*(const Int &c, PureVector v) {
    for (auto &x : v.coords_) x *= c;
    return v;
}

PureVector PureVector::operator-() const {
    PureVector r(n_);
    for (size_t k = 0; k < coords_.size(); ++k) r.coords_[k] = -coords_[k];
    return r;
}

bool PureVector::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Int &x) { return x == 0; });
}

PureVector PureVector::shifted(int m, int offset) const {
    if (offset < 0 || n_ + offset > m) throw std::out_of_range("shift exceeds strand budget");
    PureVector r(m);
    for (int rank = 0; rank < dim(); ++rank) {
        const Int &c = coords_[static_cast<size_t>(rank)];
        if (c == 0) continue;
        PairIndex p = pair_at(n_, rank);
        r.at(PairIndex(p.i + offset, p.j + offset)) = c;
    }
    return r;
}

PureVector act(const Perm &pi, const PureVector &v) {
    if (pi.n() != v.n()) throw std::invalid_argument("strand count mismatch");
    PureVector r(v.n());
    for (int rank = 0; rank < v.dim(); ++rank) {
        const Int &c = v.coords()[static_cast<size_t>(rank)];
        if (c == 0) continue;
        PairIndex p = pair_at(v.n(), rank);
        r.at(PairIndex(pi(p.i), pi(p.j))) = c;
    }
    return r;
}

}  // namespace braidcryst
