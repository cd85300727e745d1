#ifndef BRAIDCRYST_INTMAT_HPP
#define BRAIDCRYST_INTMAT_HPP

#include <optional>
#include <vector>

#include "braidcryst/int.hpp"

namespace braidcryst {

// Dense matrix over Z. Row-major.
class IntMat {
  public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols);
    static IntMat identity(int n);
    static IntMat from_rows(const std::vector<std::vector<Int>> &rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Int &at(int i, int j) const { return data_[idx(i, j)]; }
    Int &at(int i, int j) { return data_[idx(i, j)]; }

    IntMat transpose() const;
    Int trace() const;
    bool is_identity() const;
    bool operator==(const IntMat &) const = default;

    friend IntMat operator*(const IntMat &a, const IntMat &b);
    friend IntMat operator-(const IntMat &a, const IntMat &b);
    friend IntMat operator+(const IntMat &a, const IntMat &b);
    IntMat pow(long k) const;  // k >= 0, square

    void swap_rows(int a, int b);
    void swap_cols(int a, int b);

  private:
    size_t idx(int i, int j) const { return static_cast<size_t>(i) * cols_ + j; }
    int rows_, cols_;
    std::vector<Int> data_;
};

// Canonical row-style Hermite normal form of the row lattice: row echelon,
// positive pivots, entries above each pivot reduced into [0, pivot). Zero rows
// are dropped, so two generating sets span the same lattice iff their forms
// are equal.
IntMat hnf_rows(IntMat a);

// Column echelon form with transform: returns (H, U) with A*U = H, U
// unimodular, H lower column-echelon.
struct ColEchelon {
    IntMat h;
    IntMat u;
};
ColEchelon col_echelon_transform(IntMat a);

// Smith normal form with transforms: U*A*V = D, diagonal d_1 | d_2 | ...
struct Smith {
    IntMat d;
    IntMat u;
    IntMat v;
    std::vector<Int> diag() const;
};
Smith smith_normal_form(IntMat a);

// One integer solution of A x = b, if any, via Smith form.
std::optional<std::vector<Int>> solve_integer(const IntMat &a, const std::vector<Int> &b);

// Basis of the integer kernel {x : A x = 0}; the returned lattice is
// saturated (any integer vector in the rational kernel is a Z-combination).
std::vector<std::vector<Int>> integer_kernel(const IntMat &a);

// Fraction-free Gaussian elimination.
int rank_bareiss(IntMat a);
Int det_bareiss(IntMat a);

// Characteristic polynomial det(xI - A) by the Faddeev-LeVerrier recurrence;
// coefficient of x^k at index k, monic of degree n.
std::vector<Int> charpoly(const IntMat &a);

}  // namespace braidcryst

#endif
