#ifndef BRAIDCRYST_HOLONOMY_HPP
#define BRAIDCRYST_HOLONOMY_HPP

#include <string>
#include <vector>

#include "braidcryst/gamma_builder.hpp"
#include "braidcryst/group_spec.hpp"
#include "braidcryst/intmat.hpp"
#include "braidcryst/poly.hpp"
#include "braidcryst/quotient_element.hpp"

namespace braidcryst {

// Ordered lattice basis for cyclic odd holonomy: entries e_{j,h,k} sorted
// lexicographically by (j, h, k). Per odd block j of size p = p_j^{r_j}:
//   e_{j,0,1}   pure part of (A delta_j)^p, fixed by the action;
//   e_{j,0,k+1} delta^{k-1}-conjugates of q*A_{adjacent pair}, k = 1..p-1;
//   e_{j,h,k}   delta^{k-1}-conjugates of q*A_{distance h+1 pair}, one orbit
//               of size p per h = 1..(p-3)/2.
// Mixed entries e_{j,h,k} for t+1 <= j < h <= 2t are the delta-conjugates of
// q*A_{first strands of the two blocks}, one orbit of size p_j p_h per pair.
struct BasisEntry {
    int j;
    int h;
    long k;
    std::string label;
    PureVector vec;
};

struct OrderedBasis {
    GroupSpec spec;
    QuotientElement delta;  // product of the block deltas, order q
    std::vector<BasisEntry> entries;

    long q() const { return spec.order(); }
    int dim() const { return static_cast<int>(entries.size()); }
    IntMat matrix_cols() const;  // dim x dim, column i = entries[i].vec
    int index_of(int j, int h, long k) const;
};

OrderedBasis ordered_basis(long q);

// Square blocks from the structure theorem for the conjugation action.
struct HolonomyBlock {
    enum class Kind { N, M };  // N_z[q] or the cyclic companion M_z
    Kind kind;
    long z;
    long q;  // used by N blocks
    IntMat matrix() const;
    std::string str() const;
};

std::vector<HolonomyBlock> block_structure(long q);
IntMat assemble_blocks(const std::vector<HolonomyBlock> &blocks);

// Matrix of conjugation by delta in the ordered basis, computed from the
// action and re-expressed by exact integer solving. Throws if the action
// does not preserve the lattice (cannot happen for the construction).
IntMat holonomy_matrix_from_action(const OrderedBasis &basis);
IntMat holonomy_matrix_from_blocks(long q);
// Action-derived matrix, checked entry-for-entry against the block assembly.
IntMat holonomy_matrix(long q);

// Matrix of conjugation by g on the lattice spanned by `basis` (columns in
// A-coordinates). Throws std::domain_error if the lattice is not preserved.
IntMat matrix_of(const QuotientElement &g, const std::vector<PureVector> &basis);
std::vector<PureVector> basis_vectors(const OrderedBasis &basis);
std::vector<PureVector> basis_vectors(const std::vector<LabeledVector> &basis);

struct FactoredCharPoly {
    std::vector<std::pair<long, long>> factors;  // (z, multiplicity), product of (x^z - 1)^mult
    long degree() const;
    IntPoly expand() const;
    std::string str() const;
};

FactoredCharPoly char_poly_factored(long q);
std::vector<Int> char_poly_direct(const IntMat &m);  // = charpoly(m)

long betti_first(long q);             // sum (p_i^{r_i}-1)/2 + t(t-1)/2
long betti_rank(const IntMat &m);     // dim - rank(M - I)

struct CenterGenerator {
    std::string label;
    std::vector<int> basis_indices;  // orbit: sum of these ordered-basis entries
    PureVector vec;                  // in A-coordinates
};

std::vector<CenterGenerator> center_basis(long q);
long center_rank(long q);

// Trace vector (tr M^0, ..., tr M^{q-1}) of the holonomy matrix, computed
// blockwise.
std::vector<Int> trace_vector(long q);

}  // namespace braidcryst

#endif
