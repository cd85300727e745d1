#ifndef BRAIDCRYST_PURE_VECTOR_HPP
#define BRAIDCRYST_PURE_VECTOR_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "braidcryst/int.hpp"
#include "braidcryst/perm.hpp"

namespace braidcryst {

// Unordered strand pair {i,j}, stored with i < j. A_{j,i} = A_{i,j}.
struct PairIndex {
    int i;
    int j;

    PairIndex(int a, int b);
    bool operator==(const PairIndex &) const = default;
    auto operator<=>(const PairIndex &) const = default;  // lexicographic
    std::string str() const;
};

int pair_count(int n);
// Lexicographic rank of (i,j) among all pairs 1 <= i < j <= n.
int pair_rank(int n, PairIndex p);
PairIndex pair_at(int n, int rank);

// Element of P_n/[P_n,P_n] ~ Z^{n(n-1)/2} in the A_{i,j} coordinate basis,
// pairs ordered lexicographically.
class PureVector {
  public:
    explicit PureVector(int n);
    static PureVector unit(int n, PairIndex p);

    int n() const { return n_; }
    int dim() const { return static_cast<int>(coords_.size()); }
    const Int &at(PairIndex p) const { return coords_[static_cast<size_t>(pair_rank(n_, p))]; }
    Int &at(PairIndex p) { return coords_[static_cast<size_t>(pair_rank(n_, p))]; }
    const std::vector<Int> &coords() const { return coords_; }

    PureVector &operator+=(const PureVector &rhs);
    PureVector &operator-=(const PureVector &rhs);
    friend PureVector operator+(PureVector a, const PureVector &b) { return a += b; }
    friend PureVector operator-(PureVector a, const PureVector &b) { return a -= b; }
    friend PureVector operator*(const Int &c, PureVector v);
    PureVector operator-() const;

    bool is_zero() const;
    bool operator==(const PureVector &) const = default;

    // Re-embeds into m >= n strands at the given strand offset.
    PureVector shifted(int m, int offset) const;

  private:
    int n_;
    std::vector<Int> coords_;
};

// Conjugation action on A-coordinates: the output coordinate at
// (pi(i), pi(j)) equals the input coordinate at (i, j). The caller passes the
// permutation of the *inverse* of the conjugating element.
PureVector act(const Perm &pi, const PureVector &v);

}  // namespace braidcryst

#endif
