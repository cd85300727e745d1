#include "braidcryst/quotient_element.hpp"

#include "braidcryst/errors.hpp"

#include <numeric>
#include <stdexcept>

namespace braidcryst {

QuotientElement::QuotientElement(PureVector pure, Perm perm)
    : pure_(std::move(pure)), perm_(std::move(perm)) {
    if (pure_.n() != perm_.n()) throw std::invalid_argument("strand count mismatch");
}

QuotientElement QuotientElement::identity(int n) {
    return QuotientElement(PureVector(n), Perm(n));
}

QuotientElement QuotientElement::from_pure(PureVector v) {
    Perm id(v.n());
    return QuotientElement(std::move(v), id);
}

PureVector crossing_counts(const BraidWord &w) {
    const int n = w.n();
    std::vector<int> strand_at(static_cast<size_t>(n));
    std::iota(strand_at.begin(), strand_at.end(), 1);
    PureVector counts(n);
    for (const auto &l : w.letters()) {
        int a = strand_at[static_cast<size_t>(l.index) - 1];
        int b = strand_at[static_cast<size_t>(l.index)];
        counts.at(PairIndex(a, b)) += l.sign;
        std::swap(strand_at[static_cast<size_t>(l.index) - 1],
                  strand_at[static_cast<size_t>(l.index)]);
    }
    return counts;
}

namespace {

// Halve the crossing counts of a pure word. Odd entries cannot arise from a
// pure word, so they signal a bug in the caller.
PureVector halve_counts(PureVector counts) {
    PureVector v(counts.n());
    for (int r = 0; r < counts.dim(); ++r) {
        const Int &c = counts.coords()[static_cast<size_t>(r)];
        if (c == 0) continue;
        if (mpz_odd_p(c.get_mpz_t()))
            throw verification_error("odd crossing count for a pure word");
        v.at(pair_at(counts.n(), r)) = c / 2;
    }
    return v;
}

}  // namespace

QuotientElement normal_form(const BraidWord &w) {
    Perm pi = w.permutation();
    BraidWord pure_part = w;
    pure_part.append(section_word(pi).inverse());
    return QuotientElement(halve_counts(crossing_counts(pure_part)), pi);
}

PureVector section_cocycle(const Perm &a, const Perm &b) {
    BraidWord w = section_word(a);
    w.append(section_word(b));
    w.append(section_word(a.then(b)).inverse());
    return halve_counts(crossing_counts(w));
}

QuotientElement multiply(const QuotientElement &a, const QuotientElement &b) {
    if (a.n() != b.n()) throw std::invalid_argument("strand count mismatch");
    // a*b = v_a s(pa) v_b s(pb)
    //     = [v_a + s(pa) v_b s(pa)^{-1} + cocycle(pa,pb)] s(pa pb);
    // conjugation by s(pa) permutes A-coordinates by pa^{-1}.
    PureVector v = a.pure();
    v += act(a.perm().inverse(), b.pure());
    v += section_cocycle(a.perm(), b.perm());
    return QuotientElement(std::move(v), a.perm().then(b.perm()));
}

QuotientElement inverse(const QuotientElement &a) {
    // Solve (v,pi)(u,pi^{-1}) = identity for u.
    PureVector u = -(a.pure() + section_cocycle(a.perm(), a.perm().inverse()));
    return QuotientElement(act(a.perm(), u), a.perm().inverse());
}

QuotientElement power(const QuotientElement &a, const Int &k) {
    QuotientElement base = k >= 0 ? a : inverse(a);
    Int e = k >= 0 ? k : Int(-k);
    QuotientElement acc = QuotientElement::identity(a.n());
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = multiply(acc, base);
        e >>= 1;
        if (e > 0) base = multiply(base, base);
    }
    return acc;
}

QuotientElement conjugate(const QuotientElement &g, const QuotientElement &x) {
    return multiply(multiply(g, x), inverse(g));
}

FiniteOrder is_finite_order(const QuotientElement &a) {
    long m = a.perm().order();
    if (m == 1) return {a.pure().is_zero(), 1};
    // a^m lies in the torsion-free lattice, so a has finite order iff a^m = 1,
    // in which case the order is exactly m.
    QuotientElement p = power(a, m);
    return {p.pure().is_zero(), m};
}

QuotientElement delta_element(int n, int n_l, int p) {
    return normal_form(delta_word(n, n_l, p));
}

QuotientElement eta_element(int n, int before, int size) {
    return normal_form(eta_word(n, before, size));
}

QuotientElement generator_A(int n, int i, int j) {
    return QuotientElement::from_pure(PureVector::unit(n, PairIndex(i, j)));
}

QuotientElement generator_sigma(int n, int i) {
    return normal_form(sigma_word(n, i));
}

nlohmann::json QuotientElement::to_json() const {
    nlohmann::json pure = nlohmann::json::array();
    for (int r = 0; r < pure_.dim(); ++r) {
        const Int &c = pure_.coords()[static_cast<size_t>(r)];
        if (c == 0) continue;
        PairIndex p = pair_at(n(), r);
        if (c.fits_slong_p())
            pure.push_back({p.i, p.j, c.get_si()});
        else
            pure.push_back({p.i, p.j, c.get_str()});
    }
    return {{"n", n()}, {"perm", perm_.images()}, {"pure", pure}};
}

QuotientElement QuotientElement::from_json(const nlohmann::json &j) {
    int n = j.at("n").get<int>();
    Perm perm = Perm::from_images(j.at("perm").get<std::vector<int>>());
    PureVector v(n);
    for (const auto &entry : j.at("pure")) {
        PairIndex p(entry.at(0).get<int>(), entry.at(1).get<int>());
        const auto &c = entry.at(2);
        v.at(p) = c.is_string() ? Int(c.get<std::string>()) : Int(c.get<long>());
    }
    return QuotientElement(std::move(v), std::move(perm));
}

}  // namespace braidcryst
