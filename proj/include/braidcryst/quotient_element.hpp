#ifndef BRAIDCRYST_QUOTIENT_ELEMENT_HPP
#define BRAIDCRYST_QUOTIENT_ELEMENT_HPP

#include <optional>
#include <string>

#include "braidcryst/braid_word.hpp"
#include "braidcryst/int.hpp"
#include "braidcryst/perm.hpp"
#include "braidcryst/pure_vector.hpp"
#include <json.hpp>

namespace braidcryst {

// Element of B_n/[P_n,P_n] in normal form: the product pure * s(perm), where
// s is the canonical positive section (section_word). The extension
//   1 -> P_n/[P_n,P_n] -> B_n/[P_n,P_n] -> S_n -> 1
// does not split, so the group law carries an explicit cocycle term.
class QuotientElement {
  public:
    QuotientElement(PureVector pure, Perm perm);
    static QuotientElement identity(int n);
    static QuotientElement from_pure(PureVector v);

    int n() const { return perm_.n(); }
    const PureVector &pure() const { return pure_; }
    const Perm &perm() const { return perm_; }
    bool is_identity() const { return perm_.is_identity() && pure_.is_zero(); }
    bool is_pure() const { return perm_.is_identity(); }
    bool operator==(const QuotientElement &) const = default;

    nlohmann::json to_json() const;
    static QuotientElement from_json(const nlohmann::json &j);

  private:
    PureVector pure_;
    Perm perm_;
};

// Signed crossing counts of a word: for each unordered pair of strands,
// labeled by their starting positions, the net number of signed crossings.
// The abelianized class of a pure word is crossing_counts/2.
PureVector crossing_counts(const BraidWord &w);

QuotientElement normal_form(const BraidWord &w);

// Cocycle of the canonical section: class of s(a) s(b) s(ab)^{-1}.
PureVector section_cocycle(const Perm &a, const Perm &b);

QuotientElement multiply(const QuotientElement &a, const QuotientElement &b);
QuotientElement inverse(const QuotientElement &a);
QuotientElement power(const QuotientElement &a, const Int &k);
QuotientElement conjugate(const QuotientElement &g, const QuotientElement &x);  // g x g^{-1}

struct FiniteOrder {
    bool finite;
    long order;  // valid when finite
};
FiniteOrder is_finite_order(const QuotientElement &a);

// Named elements from the construction.
QuotientElement delta_element(int n, int n_l, int p);
QuotientElement eta_element(int n, int before, int size);
QuotientElement generator_A(int n, int i, int j);
QuotientElement generator_sigma(int n, int i);

}  // namespace braidcryst

#endif
