#ifndef BRAIDCRYST_ANALYSIS_HPP
#define BRAIDCRYST_ANALYSIS_HPP

#include <map>
#include <string>
#include <vector>

#include "braidcryst/holonomy.hpp"

namespace braidcryst {

// Multiplicity of the d-th cyclotomic polynomial in a product of (x^z - 1)
// factors: mult(d) = sum of multiplicities of factors with d | z.
std::map<long, long> cyclotomic_multiplicities(const FactoredCharPoly &f);

struct AnosovVerdict {
    bool decided;  // false outside the proved scope (non-cyclic or even order)
    bool anosov;
    std::string reason;
};

// Existence of an Anosov diffeomorphism for odd cyclic holonomy: every
// eigenvalue that is a root of unity of order in {1,2,3,4,6} must have
// multiplicity 0 or >= 2 (cyclotomic multiplicities of Phi_1..Phi_6).
AnosovVerdict anosov_verdict(long q);

// Multiplicities of the real irreducible representations of Z_q in the
// holonomy representation, computed from the trace vector of matrix powers:
// index 0 = trivial representation, index j = the 2-dimensional real irrep
// pairing the characters j and q-j, 1 <= j <= (q-1)/2.
std::vector<Int> real_irrep_multiplicities(long q);

enum class TriState { Yes, No, NotDecided };

struct KahlerVerdict {
    TriState value;
    std::string reason;
};

// Kahler criterion for odd prime power p^r: yes iff p^r = 4u + 1. Cross
// checked internally against the parity of the real irrep multiplicities.
KahlerVerdict kahler_verdict(long p, int r);

struct CalabiYau {
    bool is_calabi_yau;
    long dimension;  // p^r (p^r - 1)/2 = 2u(4u+1) when it applies
};
CalabiYau calabi_yau(long p, int r);

long inn_dimension(long q);  // dim - rank of the center

// Finitely presented model of Gamma_q: lattice generators e_{j,h,k} plus the
// block generators a_j = A delta_j; relations are lattice commutators, the
// power relations a_j^{p_j} = e_{j,0,1}, cross-block commutators, and the
// conjugation table of each a_j on each e.
struct GenPower {
    int gen;  // index into Presentation::names
    Int exp;
};
using GenWord = std::vector<GenPower>;

struct Relation {
    std::string kind;  // "lattice-commutator", "power", "conjugation", "block-commutator"
    GenWord lhs;
    GenWord rhs;
};

struct Presentation {
    long q;
    std::vector<std::string> names;             // e-generators first, then a_1..a_t
    std::vector<QuotientElement> values;        // evaluation of each generator
    int e_count;                                // generators 0..e_count-1 are lattice ones
    std::vector<Relation> relations;

    std::string name_of(const GenWord &w) const;
};

Presentation presentation(long q);

// Evaluates every relation in braid_core; true iff all reduce to equal
// normal forms.
bool audit_presentation(const Presentation &p);
QuotientElement evaluate_word(const Presentation &p, const GenWord &w);

std::string render_presentation_text(const Presentation &p);
std::string render_presentation_gap(const Presentation &p);

}  // namespace braidcryst

#endif
