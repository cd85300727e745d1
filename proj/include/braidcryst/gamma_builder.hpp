#ifndef BRAIDCRYST_GAMMA_BUILDER_HPP
#define BRAIDCRYST_GAMMA_BUILDER_HPP

#include <optional>
#include <string>
#include <vector>

#include "braidcryst/group_spec.hpp"
#include "braidcryst/intmat.hpp"
#include "braidcryst/quotient_element.hpp"

namespace braidcryst {

struct LabeledGenerator {
    std::string label;
    BraidWord word;
    QuotientElement element;
};

struct LabeledVector {
    std::string label;
    PureVector vec;
};

// Generators and claimed lattice basis of Gamma_G. X2 and X3 always lie in
// the translation lattice; the holonomy is generated by the images of X1 and
// X4. For odd-order specs the construction's generator list is X1 together
// with the lattice elements X2 (X3 and X4 are empty).
struct GammaData {
    GroupSpec spec;
    std::vector<LabeledGenerator> x1;
    std::vector<LabeledGenerator> x2;
    std::vector<LabeledGenerator> x3;
    std::vector<LabeledGenerator> x4;
    std::vector<LabeledVector> lattice_basis;  // C1 u C2 u C3 in that order

    std::vector<const LabeledGenerator *> all_generators() const;
};

GammaData build_generators(const GroupSpec &spec);
std::vector<LabeledVector> build_lattice_basis(const GroupSpec &spec);

// Coset representative Lambda_odd(s_1..s_t) * Lambda_2(s_{t+1}..s_{t+v});
// exponents 0 <= s_alpha < block order.
struct CosetRep {
    std::vector<long> exponents;
    QuotientElement element;
    std::string label() const;
};

// All |G| coset representatives, odometer order with the last exponent
// varying fastest.
std::vector<CosetRep> coset_reps(const GroupSpec &spec, long max_order = 64);

// Reidemeister-Schreier generators y_{j,k} = M_k x_j (coset rep of M_k x_j)^{-1}
// for the lattice L; every y is pure.
std::vector<PureVector> schreier_generators(const GroupSpec &spec, long max_order = 64);

// Rows = vectors in A-coordinates.
IntMat lattice_matrix(const std::vector<LabeledVector> &basis);
IntMat lattice_matrix(const std::vector<PureVector> &vecs, int n);

// A torsion scan instance: a lattice (columns of `basis` in A-coordinates)
// and the canonical section of each nontrivial coset.
struct TorsionProblem {
    int n;
    std::vector<LabeledVector> basis;
    std::vector<CosetRep> cosets;  // nontrivial ones to scan
};

TorsionProblem gamma_torsion_problem(const GroupSpec &spec, long max_order = 64);
// Control group sigma^{-1}(G)/[P_n,P_n]: full lattice, bare delta/eta sections.
TorsionProblem sigma_tilde_torsion_problem(const GroupSpec &spec, long max_order = 64);

struct CosetTorsionResult {
    std::vector<long> exponents;
    std::string label;
    long image_order;            // order m of the holonomy image
    bool solvable;               // true = torsion witness exists in this coset
    std::vector<Int> snf_diag;   // elementary divisors of the linear system
    std::optional<QuotientElement> witness;  // theta*A, has finite order m
};

CosetTorsionResult coset_has_torsion(const TorsionProblem &problem, size_t coset_index);
CosetTorsionResult coset_has_torsion(const GroupSpec &spec, const std::vector<long> &exponents,
                                     long max_order = 64);

struct TorsionCertificate {
    bool torsion_free;
    std::vector<CosetTorsionResult> cosets;
};

TorsionCertificate run_torsion_scan(const TorsionProblem &problem);
TorsionCertificate verify_torsion_free(const GroupSpec &spec, long max_order = 64);

// Checks that the permutation images of X1 u X4 generate a subgroup of S_n
// isomorphic to the spec's group (closure size q, generator orders = block
// orders).
bool check_projection(const GroupSpec &spec, long max_order = 64);

// Product embedding of per-block constructions into B_m/[P_m,P_m]
// at consecutive strand offsets.
struct ProductEmbedding {
    int m;
    std::vector<GroupSpec> blocks;
    std::vector<long> offsets;
    std::vector<LabeledGenerator> generators;   // all blocks, shifted
    std::vector<LabeledVector> lattice_basis;   // rank = sum C(n_i,2)
    std::vector<CosetRep> coset_reps;           // |H| products across blocks
};

ProductEmbedding embed_product(const std::vector<GroupSpec> &blocks, int m, long max_order = 64);
TorsionProblem embedding_torsion_problem(const ProductEmbedding &emb);

// Re-embeds an element of B_n/[P_n,P_n] into B_m/[P_m,P_m] shifting strands.
QuotientElement shift_element(const QuotientElement &e, int m, int offset);
BraidWord shift_word(const BraidWord &w, int m, int offset);

}  // namespace braidcryst

#endif
