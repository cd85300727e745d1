#include "braidcryst/intmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace braidcryst {

IntMat::IntMat(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    data_.resize(static_cast<size_t>(rows) * static_cast<size_t>(cols));
}

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<Int>> &rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    IntMat m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
            throw std::invalid_argument("ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return m;
}

IntMat IntMat::transpose() const {
    IntMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Int IntMat::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
    Int t = 0;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool IntMat::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

IntMat operator*(const IntMat &a, const IntMat &b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    IntMat c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Int &aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const Int &bkj = b.at(k, j);
                if (bkj != 0) c.at(i, j) += aik * bkj;
            }
        }
    return c;
}

IntMat operator-(const IntMat &a, const IntMat &b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix shape mismatch");
    IntMat c(a.rows_, a.cols_);
    for (size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = a.data_[k] - b.data_[k];
    return c;
}

IntMat operator+(const IntMat &a, const IntMat &b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix shape mismatch");
    IntMat c(a.rows_, a.cols_);
    for (size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = a.data_[k] + b.data_[k];
    return c;
}

IntMat IntMat::pow(long k) const {
    if (rows_ != cols_) throw std::invalid_argument("power of non-square matrix");
    if (k < 0) throw std::invalid_argument("negative matrix power");
    IntMat acc = identity(rows_);
    IntMat base = *this;
    while (k) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return acc;
}

void IntMat::swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMat::swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

IntMat hnf_rows(IntMat a) {
    const int m = a.rows(), n = a.cols();
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        // gcd out column c below row r
        int piv = -1;
        for (int i = r; i < m; ++i)
            if (a.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        a.swap_rows(r, piv);
        for (int i = r + 1; i < m; ++i) {
            while (a.at(i, c) != 0) {
                Int q = a.at(r, c) / a.at(i, c);  // truncated; loop is a Euclid chain
                for (int j = c; j < n; ++j) a.at(r, j) -= q * a.at(i, j);
                a.swap_rows(r, i);
            }
        }
        if (a.at(r, c) < 0)
            for (int j = c; j < n; ++j) a.at(r, j) = -a.at(r, j);
        for (int i = 0; i < r; ++i) {
            Int q, rem;
            int_fdiv_qr(a.at(i, c), a.at(r, c), q, rem);
            if (q != 0)
                for (int j = c; j < n; ++j) a.at(i, j) -= q * a.at(r, j);
        }
        ++r;
    }
    IntMat out(r, n);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = a.at(i, j);
    return out;
}

ColEchelon col_echelon_transform(IntMat a) {
    const int m = a.rows(), n = a.cols();
    IntMat u = IntMat::identity(n);
    int c = 0;
    for (int r = 0; r < m && c < n; ++r) {
        int piv = -1;
        for (int j = c; j < n; ++j)
            if (a.at(r, j) != 0) {
                piv = j;
                break;
            }
        if (piv < 0) continue;
        a.swap_cols(c, piv);
        u.swap_cols(c, piv);
        for (int j = c + 1; j < n; ++j) {
            while (a.at(r, j) != 0) {
                Int q = a.at(r, c) / a.at(r, j);
                for (int i = 0; i < m; ++i) a.at(i, c) -= q * a.at(i, j);
                for (int i = 0; i < n; ++i) u.at(i, c) -= q * u.at(i, j);
                a.swap_cols(c, j);
                u.swap_cols(c, j);
            }
        }
        if (a.at(r, c) < 0) {
            for (int i = 0; i < m; ++i) a.at(i, c) = -a.at(i, c);
            for (int i = 0; i < n; ++i) u.at(i, c) = -u.at(i, c);
        }
        ++c;
    }
    return {std::move(a), std::move(u)};
}

std::vector<Int> Smith::diag() const {
    std::vector<Int> out;
    int k = std::min(d.rows(), d.cols());
    out.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) out.push_back(d.at(i, i));
    return out;
}

Smith smith_normal_form(IntMat a) {
    const int m = a.rows(), n = a.cols();
    IntMat u = IntMat::identity(m);
    IntMat v = IntMat::identity(n);

    auto row_op = [&](int dst, int src, const Int &q) {  // row dst -= q*row src
        for (int j = 0; j < n; ++j) a.at(dst, j) -= q * a.at(src, j);
        for (int j = 0; j < m; ++j) u.at(dst, j) -= q * u.at(src, j);
    };
    auto col_op = [&](int dst, int src, const Int &q) {
        for (int i = 0; i < m; ++i) a.at(i, dst) -= q * a.at(i, src);
        for (int i = 0; i < n; ++i) v.at(i, dst) -= q * v.at(i, src);
    };

    const int k = std::min(m, n);
    for (int t = 0; t < k; ++t) {
        // find a pivot of smallest absolute value in the trailing block
        int pi = -1, pj = -1;
        Int best;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j) {
                const Int &x = a.at(i, j);
                if (x == 0) continue;
                Int ax = abs(x);
                if (pi < 0 || ax < best) {
                    best = ax;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = t + 1; i < m; ++i) {
                if (a.at(i, t) == 0) continue;
                Int q, rem;
                int_fdiv_qr(a.at(i, t), a.at(t, t), q, rem);
                row_op(i, t, q);
                if (a.at(i, t) != 0) {  // remainder smaller than pivot: swap up
                    a.swap_rows(t, i);
                    u.swap_rows(t, i);
                    dirty = true;
                }
            }
            for (int j = t + 1; j < n; ++j) {
                if (a.at(t, j) == 0) continue;
                Int q, rem;
                int_fdiv_qr(a.at(t, j), a.at(t, t), q, rem);
                col_op(j, t, q);
                if (a.at(t, j) != 0) {
                    a.swap_cols(t, j);
                    v.swap_cols(t, j);
                    dirty = true;
                }
            }
        }
        if (a.at(t, t) < 0) {
            for (int j = 0; j < n; ++j) a.at(t, j) = -a.at(t, j);
            for (int j = 0; j < m; ++j) u.at(t, j) = -u.at(t, j);
        }
        // enforce divisibility of the rest of the block by the pivot
        for (int i = t + 1; i < m && a.at(t, t) != 0; ++i)
            for (int j = t + 1; j < n; ++j) {
                if (a.at(i, j) % a.at(t, t) != 0) {
                    // fold row i into row t and redo this pivot
                    row_op(t, i, Int(-1));
                    --t;
                    i = m;
                    break;
                }
            }
    }
    return {std::move(a), std::move(u), std::move(v)};
}

std::optional<std::vector<Int>> solve_integer(const IntMat &a, const std::vector<Int> &b) {
    if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("rhs size mismatch");
    Smith s = smith_normal_form(a);
    const int m = a.rows(), n = a.cols();
    // U A V = D, so with c = U b the system becomes D y = c, x = V y.
    std::vector<Int> c(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        Int acc = 0;
        for (int j = 0; j < m; ++j)
            if (s.u.at(i, j) != 0) acc += s.u.at(i, j) * b[static_cast<size_t>(j)];
        c[static_cast<size_t>(i)] = acc;
    }
    std::vector<Int> y(static_cast<size_t>(n));
    const int k = std::min(m, n);
    for (int i = 0; i < m; ++i) {
        const Int &d = i < k ? s.d.at(i, i) : Int(0);
        if (d == 0) {
            if (c[static_cast<size_t>(i)] != 0) return std::nullopt;
        } else {
            if (c[static_cast<size_t>(i)] % d != 0) return std::nullopt;
            y[static_cast<size_t>(i)] = c[static_cast<size_t>(i)] / d;
        }
    }
    std::vector<Int> x(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        Int acc = 0;
        for (int j = 0; j < n; ++j)
            if (s.v.at(i, j) != 0 && y[static_cast<size_t>(j)] != 0)
                acc += s.v.at(i, j) * y[static_cast<size_t>(j)];
        x[static_cast<size_t>(i)] = acc;
    }
    return x;
}

std::vector<std::vector<Int>> integer_kernel(const IntMat &a) {
    Smith s = smith_normal_form(a);
    const int n = a.cols();
    const int k = std::min(a.rows(), n);
    std::vector<std::vector<Int>> basis;
    for (int j = 0; j < n; ++j) {
        if (j < k && s.d.at(j, j) != 0) continue;
        std::vector<Int> col(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) col[static_cast<size_t>(i)] = s.v.at(i, j);
        basis.push_back(std::move(col));
    }
    return basis;
}

namespace {

// Bareiss elimination; returns (rank, det) where det is valid for square
// full-rank input (0 when rank-deficient square).
std::pair<int, Int> bareiss(IntMat a) {
    const int m = a.rows(), n = a.cols();
    Int prev = 1;
    int sign = 1;
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        int piv = -1;
        for (int i = r; i < m; ++i)
            if (a.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r) {
            a.swap_rows(r, piv);
            sign = -sign;
        }
        for (int i = r + 1; i < m; ++i) {
            for (int j = c + 1; j < n; ++j)
                a.at(i, j) = int_divexact(a.at(r, c) * a.at(i, j) - a.at(i, c) * a.at(r, j), prev);
            a.at(i, c) = 0;
        }
        prev = a.at(r, c);
        ++r;
    }
    Int det = 0;
    if (m == n && r == n) det = sign > 0 ? prev : Int(-prev);
    return {r, det};
}

}  // namespace

int rank_bareiss(IntMat a) { return bareiss(std::move(a)).first; }

Int det_bareiss(IntMat a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
    return bareiss(std::move(a)).second;
}

std::vector<Int> charpoly(const IntMat &a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("charpoly of non-square matrix");
    const int n = a.rows();
    std::vector<Int> c(static_cast<size_t>(n) + 1);
    c[static_cast<size_t>(n)] = 1;
    IntMat nmat = IntMat::identity(n);
    for (int k = 1; k <= n; ++k) {
        IntMat mk = a * nmat;
        Int ck = int_divexact(-mk.trace(), Int(k));
        c[static_cast<size_t>(n - k)] = ck;
        nmat = mk;
        for (int i = 0; i < n; ++i) nmat.at(i, i) += ck;
    }
    return c;
}

}  // namespace braidcryst
