#include "braidcryst/analysis.hpp"

#include "braidcryst/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace braidcryst {

std::map<long, long> cyclotomic_multiplicities(const FactoredCharPoly &f) {
    std::map<long, long> mult;
    for (auto [z, m] : f.factors)
        for (long d : divisors(z)) mult[d] += m;
    return mult;
}

AnosovVerdict anosov_verdict(long q) {
    if (q < 3 || q % 2 == 0)
        return {false, false, "only odd cyclic holonomy is decided"};
    auto mult = cyclotomic_multiplicities(char_poly_factored(q));
    // Eigenvalues 1, -1, +-i, +-omega, +-omega^2 are the roots of unity of
    // order 1,2,3,4,6. For odd q the even orders never occur; they are kept
    // in the critical set to match the criterion literally.
    for (long d : {1L, 2L, 3L, 4L, 6L}) {
        auto it = mult.find(d);
        long m = it == mult.end() ? 0 : it->second;
        if (m == 1)
            return {true, false,
                    "cyclotomic factor Phi_" + std::to_string(d) + " has multiplicity 1"};
    }
    return {true, true, "all critical cyclotomic multiplicities are 0 or >= 2"};
}

std::vector<Int> real_irrep_multiplicities(long q) {
    if (q < 3 || q % 2 == 0) throw std::invalid_argument("odd q >= 3 required");
    std::vector<Int> traces = trace_vector(q);
    const IntPoly &phi = cyclotomic(q);
    std::vector<Int> mult;
    for (long j = 0; j <= (q - 1) / 2; ++j) {
        // m_j = (1/q) sum_k tr(M^k) zeta^{-jk}, extracted exactly by reducing
        // the sum as a polynomial in zeta modulo Phi_q.
        std::vector<Int> coeffs(static_cast<size_t>(q));
        for (long k = 0; k < q; ++k) {
            long e = ((-j * k) % q + q) % q;
            coeffs[static_cast<size_t>(e)] += traces[static_cast<size_t>(k)];
        }
        IntPoly sum{std::move(coeffs)};
        IntPoly rem = divmod_monic(sum, phi).rem;
        if (rem.degree() > 0)
            throw verification_error("character sum is not rational");
        Int value = rem.degree() == 0 ? rem.coeff(0) : Int(0);
        mult.push_back(int_divexact(value, Int(q)));
    }
    return mult;
}

namespace {

bool is_odd_prime_power(long q, long &p, int &r) {
    if (q < 3 || q % 2 == 0) return false;
    for (long cand = 3; cand * cand <= q; cand += 2) {
        if (q % cand) continue;
        p = cand;
        r = 0;
        long x = q;
        while (x % cand == 0) {
            x /= cand;
            ++r;
        }
        return x == 1;
    }
    p = q;
    r = 1;
    return true;
}

}  // namespace

KahlerVerdict kahler_verdict(long p, int r) {
    long q = 1;
    for (int i = 0; i < r; ++i) q *= p;
    long pp;
    int rr;
    if (r < 1 || !is_odd_prime_power(q, pp, rr) || pp != p)
        return {TriState::NotDecided, "criterion proved only for odd prime powers"};
    bool formula = q % 4 == 1;
    bool even_mults = true;
    for (const Int &m : real_irrep_multiplicities(q))
        if (mpz_odd_p(m.get_mpz_t())) even_mults = false;
    if (formula != even_mults)
        throw verification_error("Kahler criterion disagrees with multiplicity parity");
    if (formula)
        return {TriState::Yes,
                std::to_string(q) + " = 4*" + std::to_string((q - 1) / 4) +
                    "+1; all real irrep multiplicities even"};
    return {TriState::No, std::to_string(q) + " != 1 mod 4; multiplicities are odd"};
}

CalabiYau calabi_yau(long p, int r) {
    KahlerVerdict k = kahler_verdict(p, r);
    long q = 1;
    for (int i = 0; i < r; ++i) q *= p;
    if (k.value != TriState::Yes) return {false, 0};
    // orientable (det = +1) and Kahler; dimension 2u(4u+1) with q = 4u+1
    return {true, q * (q - 1) / 2};
}

long inn_dimension(long q) {
    GroupSpec spec = cyclic_spec(q);
    return spec.dim() - center_rank(q);
}

namespace {

GenWord gw(std::initializer_list<GenPower> items) { return GenWord(items); }

}  // namespace

std::string Presentation::name_of(const GenWord &w) const {
    if (w.empty()) return "1";
    std::string s;
    for (const auto &gp : w) {
        if (!s.empty()) s += " ";
        s += names[static_cast<size_t>(gp.gen)];
        if (gp.exp != 1) s += "^" + gp.exp.get_str();
    }
    return s;
}

Presentation presentation(long q) {
    OrderedBasis basis = ordered_basis(q);
    const GroupSpec &spec = basis.spec;
    const int t = spec.t();
    const int dim = basis.dim();

    Presentation pres{q, {}, {}, dim, {}};
    for (const auto &e : basis.entries) {
        pres.names.push_back("g" + std::to_string(e.j) + "_" + std::to_string(e.h) + "_" +
                             std::to_string(e.k));
        pres.values.push_back(QuotientElement::from_pure(e.vec));
    }
    std::vector<int> a_index(static_cast<size_t>(t));
    for (int j = 1; j <= t; ++j) {
        int base = static_cast<int>(spec.n_l(j - 1));
        QuotientElement a = multiply(generator_A(spec.n(), base + 1, base + 2),
                                     delta_element(spec.n(), base,
                                                   static_cast<int>(spec.odd_block(j))));
        a_index[static_cast<size_t>(j - 1)] = static_cast<int>(pres.names.size());
        pres.names.push_back("a" + std::to_string(j));
        pres.values.push_back(a);
    }

    // (a) lattice commutators
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            pres.relations.push_back(
                {"lattice-commutator",
                 gw({{i, 1}, {j, 1}, {i, -1}, {j, -1}}),
                 {}});

    // (b) power relations a_j^{p_j} = e_{j,0,1}
    for (int j = 1; j <= t; ++j)
        pres.relations.push_back({"power",
                                  gw({{a_index[static_cast<size_t>(j - 1)], spec.odd_block(j)}}),
                                  gw({{basis.index_of(j, 0, 1), 1}})});

    // (c) conjugation of every lattice generator by every a_j
    for (int j = 1; j <= t; ++j) {
        const long pj = spec.odd_block(j);
        const int aj = a_index[static_cast<size_t>(j - 1)];
        for (int idx = 0; idx < dim; ++idx) {
            const BasisEntry &e = basis.entries[static_cast<size_t>(idx)];
            GenWord rhs;
            if (e.j <= t) {
                if (e.j != j) {
                    rhs = gw({{idx, 1}});  // disjoint blocks commute
                } else if (e.h == 0 && e.k == 1) {
                    rhs = gw({{idx, 1}});
                } else if (e.h == 0 && e.k == pj) {
                    rhs.push_back({basis.index_of(j, 0, 1), q});
                    for (long k = 1; k <= pj - 1; ++k)
                        rhs.push_back({basis.index_of(j, 0, k + 1), -1});
                } else if (e.h == 0) {
                    rhs = gw({{basis.index_of(j, 0, e.k + 1), 1}});
                } else {
                    long next = e.k % pj + 1;
                    rhs = gw({{basis.index_of(e.j, e.h, next), 1}});
                }
            } else {
                // mixed orbit of blocks (alpha, beta): a_j shifts only its own
                // block's congruence class of the position index
                int alpha = e.j - t, beta = e.h - t;
                if (j != alpha && j != beta) {
                    rhs = gw({{idx, 1}});
                } else {
                    long pa = spec.odd_block(alpha), pb = spec.odd_block(beta);
                    long ka = (e.k + (j == alpha ? 1 : 0)) % pa;
                    long kb = (e.k + (j == beta ? 1 : 0)) % pb;
                    long next = 0;
                    for (long k = 1; k <= pa * pb; ++k)
                        if (k % pa == ka && k % pb == kb) {
                            next = k;
                            break;
                        }
                    rhs = gw({{basis.index_of(e.j, e.h, next), 1}});
                }
            }
            pres.relations.push_back(
                {"conjugation", gw({{aj, 1}, {idx, 1}, {aj, -1}}), std::move(rhs)});
        }
    }

    // (d) cross-block commutators of the a_j
    for (int j = 1; j <= t; ++j)
        for (int l = j + 1; l <= t; ++l)
            pres.relations.push_back({"block-commutator",
                                      gw({{a_index[static_cast<size_t>(j - 1)], 1},
                                          {a_index[static_cast<size_t>(l - 1)], 1},
                                          {a_index[static_cast<size_t>(j - 1)], -1},
                                          {a_index[static_cast<size_t>(l - 1)], -1}}),
                                      {}});
    return pres;
}

QuotientElement evaluate_word(const Presentation &p, const GenWord &w) {
    QuotientElement acc = QuotientElement::identity(p.values[0].n());
    for (const auto &gp : w)
        acc = multiply(acc, power(p.values[static_cast<size_t>(gp.gen)], gp.exp));
    return acc;
}

bool audit_presentation(const Presentation &p) {
    for (const auto &rel : p.relations)
        if (!(evaluate_word(p, rel.lhs) == evaluate_word(p, rel.rhs))) return false;
    return true;
}

std::string render_presentation_text(const Presentation &p) {
    std::string s = "generators (" + std::to_string(p.names.size()) + "):\n";
    for (size_t i = 0; i < p.names.size(); ++i) {
        s += "  " + p.names[i];
        if (static_cast<int>(i) >= p.e_count) s += "  [section generator]";
        s += "\n";
    }
    s += "relations (" + std::to_string(p.relations.size()) + "):\n";
    for (const auto &rel : p.relations)
        s += "  [" + rel.kind + "] " + p.name_of(rel.lhs) + " = " + p.name_of(rel.rhs) + "\n";
    return s;
}

namespace {

std::string gap_word(const Presentation &p, const GenWord &w) {
    if (w.empty()) return "One(F)";
    std::string s;
    for (const auto &gp : w) {
        if (!s.empty()) s += "*";
        s += p.names[static_cast<size_t>(gp.gen)];
        if (gp.exp != 1) s += "^(" + gp.exp.get_str() + ")";
    }
    return s;
}

}  // namespace

std::string render_presentation_gap(const Presentation &p) {
    std::string s = "F := FreeGroup(";
    for (size_t i = 0; i < p.names.size(); ++i) {
        if (i) s += ", ";
        s += "\"" + p.names[i] + "\"";
    }
    s += ");\n";
    s += "AssignGeneratorVariables(F);\n";
    s += "rels := [\n";
    for (size_t i = 0; i < p.relations.size(); ++i) {
        const auto &rel = p.relations[i];
        s += "  " + gap_word(p, rel.lhs) + " / (" + gap_word(p, rel.rhs) + ")";
        if (i + 1 < p.relations.size()) s += ",";
        s += "\n";
    }
    s += "];\n";
    s += "G := F / rels;\n";
    return s;
}

}  // namespace braidcryst
