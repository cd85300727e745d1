#include "braidcryst/gamma_builder.hpp"

#include "braidcryst/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace braidcryst {

namespace {

std::string subscript(long a, long b) {
    return "_{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

// X1_l = A_{n_{l-1}+1, n_{l-1}+2} * delta_{n_{l-1}, p_l^{r_l}}
LabeledGenerator x1_generator(const GroupSpec &spec, int l) {
    long nl = spec.n_l(l - 1);
    long p = spec.odd_block(l);
    BraidWord w = pure_generator_word(spec.n(), static_cast<int>(nl) + 1, static_cast<int>(nl) + 2);
    w.append(delta_word(spec.n(), static_cast<int>(nl), static_cast<int>(p)));
    return {"A" + subscript(nl + 1, nl + 2) + "d" + subscript(nl, p), w, normal_form(w)};
}

LabeledGenerator x4_generator(const GroupSpec &spec, int f) {
    long before = spec.n_l(spec.t()) + spec.m_f(f - 1);
    long size = spec.two_block(f);
    BraidWord w = eta_word(spec.n(), static_cast<int>(before), static_cast<int>(size));
    return {"eta_" + std::to_string(f), w, normal_form(w)};
}

void ensure_order_bound(const GroupSpec &spec, long max_order) {
    if (spec.order() > max_order)
        throw std::domain_error("group order " + std::to_string(spec.order()) +
                                " exceeds the enumeration bound " + std::to_string(max_order) +
                                " (raise --max-order)");
}

}  // namespace

std::vector<const LabeledGenerator *> GammaData::all_generators() const {
    std::vector<const LabeledGenerator *> out;
    for (const auto *set : {&x1, &x2, &x3, &x4})
        for (const auto &g : *set) out.push_back(&g);
    return out;
}

GammaData build_generators(const GroupSpec &spec) {
    const int n = spec.n();
    const long nt = spec.n_l(spec.t());
    GammaData data{spec, {}, {}, {}, {}, {}};

    for (int l = 1; l <= spec.t(); ++l) data.x1.push_back(x1_generator(spec, l));

    const long d = spec.d();
    for (long r = 1; r <= nt; ++r)
        for (long s = r + 1; s <= nt; ++s) {
            BraidWord w = pure_generator_word(n, static_cast<int>(r), static_cast<int>(s)).power(d);
            QuotientElement e = QuotientElement::from_pure(
                Int(d) * PureVector::unit(n, PairIndex(static_cast<int>(r), static_cast<int>(s))));
            data.x2.push_back({"A" + subscript(r, s) + "^" + std::to_string(d), w, e});
        }

    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (j <= nt) continue;  // inside the odd range -> covered by X2
            data.x3.push_back({"A" + subscript(i, j), pure_generator_word(n, i, j),
                               generator_A(n, i, j)});
        }

    for (int f = 1; f <= spec.v(); ++f) data.x4.push_back(x4_generator(spec, f));

    data.lattice_basis = build_lattice_basis(spec);
    return data;
}

std::vector<LabeledVector> build_lattice_basis(const GroupSpec &spec) {
    const int n = spec.n();
    const long nt = spec.n_l(spec.t());
    std::vector<LabeledVector> basis;

    // C1: pure parts of (A delta)^{p_l^{r_l}}
    for (int l = 1; l <= spec.t(); ++l) {
        LabeledGenerator g = x1_generator(spec, l);
        QuotientElement pw = power(g.element, spec.odd_block(l));
        if (!pw.is_pure()) throw verification_error("(A delta)^p is not pure");
        basis.push_back({"C1:(" + g.label + ")^" + std::to_string(spec.odd_block(l)),
                         pw.pure()});
    }
    // C2: d * A_{r,s} over the index set I (odd-range pairs minus the t
    // excluded adjacent pairs (n_l + 1, n_l + 2))
    std::set<std::pair<long, long>> excluded;
    for (int l = 0; l < spec.t(); ++l) excluded.insert({spec.n_l(l) + 1, spec.n_l(l) + 2});
    for (long r = 1; r <= nt; ++r)
        for (long s = r + 1; s <= nt; ++s) {
            if (excluded.count({r, s})) continue;
            basis.push_back({"C2:" + std::to_string(spec.d()) + "A" + subscript(r, s),
                             Int(spec.d()) * PureVector::unit(n, PairIndex(static_cast<int>(r),
                                                                           static_cast<int>(s)))});
        }
    // C3: unit vectors outside the odd range
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (j <= nt) continue;
            basis.push_back({"C3:A" + subscript(i, j), PureVector::unit(n, PairIndex(i, j))});
        }

    if (static_cast<int>(basis.size()) != spec.dim())
        throw verification_error("lattice basis has wrong cardinality");
    return basis;
}

std::string CosetRep::label() const {
    std::string s = "(";
    for (size_t i = 0; i < exponents.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(exponents[i]);
    }
    return s + ")";
}

namespace {

std::vector<long> block_orders(const GroupSpec &spec) {
    std::vector<long> orders;
    for (int l = 1; l <= spec.t(); ++l) orders.push_back(spec.odd_block(l));
    for (int f = 1; f <= spec.v(); ++f) orders.push_back(spec.two_block(f));
    return orders;
}

std::vector<QuotientElement> coset_section_generators(const GroupSpec &spec, bool bare) {
    // bare = true gives the sigma-tilde control sections delta_l / eta_f
    // (no A_{.,.} decoration on the odd blocks).
    std::vector<QuotientElement> gens;
    for (int l = 1; l <= spec.t(); ++l) {
        if (bare) {
            gens.push_back(delta_element(spec.n(), static_cast<int>(spec.n_l(l - 1)),
                                         static_cast<int>(spec.odd_block(l))));
        } else {
            gens.push_back(x1_generator(spec, l).element);
        }
    }
    for (int f = 1; f <= spec.v(); ++f) gens.push_back(x4_generator(spec, f).element);
    return gens;
}

std::vector<CosetRep> enumerate_reps(const GroupSpec &spec,
                                     const std::vector<QuotientElement> &gens) {
    std::vector<long> orders = block_orders(spec);
    const size_t k = orders.size();
    std::vector<long> exps(k, 0);
    std::vector<CosetRep> reps;
    for (;;) {
        QuotientElement e = QuotientElement::identity(spec.n());
        for (size_t a = 0; a < k; ++a)
            if (exps[a]) e = multiply(e, power(gens[a], exps[a]));
        reps.push_back({exps, std::move(e)});
        size_t a = k;
        while (a > 0) {
            --a;
            if (++exps[a] < orders[a]) break;
            exps[a] = 0;
            if (a == 0) {
                // projection must be a bijection onto G
                std::set<Perm> images;
                for (const auto &r : reps) images.insert(r.element.perm());
                if (static_cast<long>(images.size()) != spec.order())
                    throw verification_error("coset representatives do not project bijectively");
                return reps;
            }
        }
    }
}

}  // namespace

std::vector<CosetRep> coset_reps(const GroupSpec &spec, long max_order) {
    ensure_order_bound(spec, max_order);
    return enumerate_reps(spec, coset_section_generators(spec, false));
}

std::vector<PureVector> schreier_generators(const GroupSpec &spec, long max_order) {
    ensure_order_bound(spec, max_order);
    GammaData data = build_generators(spec);
    std::vector<CosetRep> reps = coset_reps(spec, max_order);
    std::vector<long> orders = block_orders(spec);

    // coordinates of each generator's image in G (exponent vector)
    struct Gen {
        const QuotientElement *el;
        std::vector<long> image;
    };
    std::vector<Gen> gens;
    std::vector<long> zero(orders.size(), 0);
    for (int l = 0; l < spec.t(); ++l) {
        auto img = zero;
        img[static_cast<size_t>(l)] = 1;
        gens.push_back({&data.x1[static_cast<size_t>(l)].element, img});
    }
    for (const auto &g : data.x2) gens.push_back({&g.element, zero});
    for (const auto &g : data.x3) gens.push_back({&g.element, zero});
    for (int f = 0; f < spec.v(); ++f) {
        auto img = zero;
        img[static_cast<size_t>(spec.t() + f)] = 1;
        gens.push_back({&data.x4[static_cast<size_t>(f)].element, img});
    }

    // index reps by exponent tuple: odometer order, last fastest
    auto rep_index = [&](const std::vector<long> &exps) {
        size_t idx = 0;
        for (size_t a = 0; a < exps.size(); ++a)
            idx = idx * static_cast<size_t>(orders[a]) + static_cast<size_t>(exps[a]);
        return idx;
    };

    std::vector<PureVector> out;
    for (const auto &rep : reps) {
        for (const auto &g : gens) {
            std::vector<long> target = rep.exponents;
            for (size_t a = 0; a < target.size(); ++a)
                target[a] = (target[a] + g.image[a]) % orders[a];
            const CosetRep &bar = reps[rep_index(target)];
            QuotientElement y = multiply(multiply(rep.element, *g.el), inverse(bar.element));
            if (!y.is_pure())
                throw verification_error("Schreier element is not pure: coset " + rep.label());
            out.push_back(y.pure());
        }
    }
    return out;
}

IntMat lattice_matrix(const std::vector<LabeledVector> &basis) {
    if (basis.empty()) return IntMat(0, 0);
    IntMat m(static_cast<int>(basis.size()), basis[0].vec.dim());
    for (size_t i = 0; i < basis.size(); ++i)
        for (int j = 0; j < basis[i].vec.dim(); ++j)
            m.at(static_cast<int>(i), j) = basis[i].vec.coords()[static_cast<size_t>(j)];
    return m;
}

IntMat lattice_matrix(const std::vector<PureVector> &vecs, int n) {
    IntMat m(static_cast<int>(vecs.size()), pair_count(n));
    for (size_t i = 0; i < vecs.size(); ++i)
        for (int j = 0; j < vecs[i].dim(); ++j)
            m.at(static_cast<int>(i), j) = vecs[i].coords()[static_cast<size_t>(j)];
    return m;
}

TorsionProblem gamma_torsion_problem(const GroupSpec &spec, long max_order) {
    ensure_order_bound(spec, max_order);
    TorsionProblem p{spec.n(), build_lattice_basis(spec), {}};
    for (auto &rep : coset_reps(spec, max_order)) {
        bool trivial = std::all_of(rep.exponents.begin(), rep.exponents.end(),
                                   [](long e) { return e == 0; });
        if (!trivial) p.cosets.push_back(std::move(rep));
    }
    return p;
}

TorsionProblem sigma_tilde_torsion_problem(const GroupSpec &spec, long max_order) {
    ensure_order_bound(spec, max_order);
    TorsionProblem p{spec.n(), {}, {}};
    for (int i = 1; i <= spec.n(); ++i)
        for (int j = i + 1; j <= spec.n(); ++j)
            p.basis.push_back({"A" + subscript(i, j), PureVector::unit(spec.n(), PairIndex(i, j))});
    auto reps = enumerate_reps(spec, coset_section_generators(spec, true));
    for (auto &rep : reps) {
        bool trivial = std::all_of(rep.exponents.begin(), rep.exponents.end(),
                                   [](long e) { return e == 0; });
        if (!trivial) p.cosets.push_back(std::move(rep));
    }
    return p;
}

namespace {

// Permutation matrix of act(pi, .) on A-coordinates.
IntMat act_matrix(const Perm &pi) {
    const int n = pi.n();
    IntMat m(pair_count(n), pair_count(n));
    for (int r = 0; r < pair_count(n); ++r) {
        PairIndex p = pair_at(n, r);
        m.at(pair_rank(n, PairIndex(pi(p.i), pi(p.j))), r) = 1;
    }
    return m;
}

}  // namespace

CosetTorsionResult coset_has_torsion(const TorsionProblem &problem, size_t coset_index) {
    const CosetRep &rep = problem.cosets.at(coset_index);
    const QuotientElement &a = rep.element;
    const long m = a.perm().order();
    if (m == 1) throw std::invalid_argument("trivial coset rejected");

    // pure((theta a)^m) = sum_k act(pi^{-k}, theta) + pure(a^m), linear in
    // theta = B lambda over the lattice basis.
    const int dim = pair_count(problem.n);
    IntMat s(dim, dim);
    for (long k = 0; k < m; ++k) s = s + act_matrix(a.perm().power(-k));
    IntMat b_cols = lattice_matrix(problem.basis).transpose();  // dim x nb
    IntMat sys = s * b_cols;

    QuotientElement am = power(a, m);
    if (!am.is_pure()) throw verification_error("a^m is not pure");
    std::vector<Int> rhs(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) rhs[static_cast<size_t>(i)] = -am.pure().coords()[static_cast<size_t>(i)];

    Smith snf = smith_normal_form(sys);
    CosetTorsionResult result{rep.exponents, rep.label(), m, false, snf.diag(), std::nullopt};

    // solve D y = U rhs, lambda = V y
    const int rows = sys.rows(), cols = sys.cols();
    std::vector<Int> c(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i) {
        Int acc = 0;
        for (int j = 0; j < rows; ++j)
            if (snf.u.at(i, j) != 0) acc += snf.u.at(i, j) * rhs[static_cast<size_t>(j)];
        c[static_cast<size_t>(i)] = acc;
    }
    std::vector<Int> y(static_cast<size_t>(cols));
    const int k = std::min(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const Int &d = i < k ? snf.d.at(i, i) : Int(0);
        if (d == 0) {
            if (c[static_cast<size_t>(i)] != 0) return result;  // unsolvable
        } else {
            if (c[static_cast<size_t>(i)] % d != 0) return result;
            y[static_cast<size_t>(i)] = c[static_cast<size_t>(i)] / d;
        }
    }
    std::vector<Int> lambda(static_cast<size_t>(cols));
    for (int i = 0; i < cols; ++i) {
        Int acc = 0;
        for (int j = 0; j < cols; ++j)
            if (snf.v.at(i, j) != 0 && y[static_cast<size_t>(j)] != 0)
                acc += snf.v.at(i, j) * y[static_cast<size_t>(j)];
        lambda[static_cast<size_t>(i)] = acc;
    }

    PureVector theta(problem.n);
    for (int j = 0; j < cols; ++j)
        if (lambda[static_cast<size_t>(j)] != 0) {
            theta += lambda[static_cast<size_t>(j)] * problem.basis[static_cast<size_t>(j)].vec;
        }
    QuotientElement witness = multiply(QuotientElement::from_pure(theta), a);
    auto fo = is_finite_order(witness);
    if (!fo.finite || fo.order != m)
        throw verification_error("torsion witness fails its order check");
    result.solvable = true;
    result.witness = witness;
    return result;
}

CosetTorsionResult coset_has_torsion(const GroupSpec &spec, const std::vector<long> &exponents,
                                     long max_order) {
    TorsionProblem p = gamma_torsion_problem(spec, max_order);
    for (size_t i = 0; i < p.cosets.size(); ++i)
        if (p.cosets[i].exponents == exponents) return coset_has_torsion(p, i);
    throw std::invalid_argument("no such nontrivial coset");
}

TorsionCertificate run_torsion_scan(const TorsionProblem &problem) {
    TorsionCertificate cert{true, {}};
    for (size_t i = 0; i < problem.cosets.size(); ++i) {
        cert.cosets.push_back(coset_has_torsion(problem, i));
        if (cert.cosets.back().solvable) cert.torsion_free = false;
    }
    return cert;
}

TorsionCertificate verify_torsion_free(const GroupSpec &spec, long max_order) {
    return run_torsion_scan(gamma_torsion_problem(spec, max_order));
}

bool check_projection(const GroupSpec &spec, long max_order) {
    ensure_order_bound(spec, max_order);
    GammaData data = build_generators(spec);
    std::vector<Perm> gens;
    std::vector<long> orders = block_orders(spec);
    for (const auto &g : data.x1) gens.push_back(g.element.perm());
    for (const auto &g : data.x4) gens.push_back(g.element.perm());
    if (gens.size() != orders.size()) return false;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].order() != orders[i]) return false;
        for (size_t j = i + 1; j < gens.size(); ++j)
            if (gens[i].then(gens[j]) != gens[j].then(gens[i])) return false;
    }
    // closure size must equal |G| = product of the generator orders
    std::set<Perm> closure{Perm(spec.n())};
    std::vector<Perm> frontier{Perm(spec.n())};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto &p : frontier)
            for (const auto &g : gens) {
                Perm q = p.then(g);
                if (closure.insert(q).second) next.push_back(q);
            }
        frontier = std::move(next);
    }
    return static_cast<long>(closure.size()) == spec.order();
}

BraidWord shift_word(const BraidWord &w, int m, int offset) {
    BraidWord out(m);
    for (const auto &l : w.letters()) out.append(l.index + offset, l.sign);
    return out;
}

QuotientElement shift_element(const QuotientElement &e, int m, int offset) {
    std::vector<int> images(static_cast<size_t>(m));
    for (int i = 1; i <= m; ++i) images[static_cast<size_t>(i) - 1] = i;
    for (int i = 1; i <= e.n(); ++i) images[static_cast<size_t>(i + offset) - 1] = e.perm()(i) + offset;
    return QuotientElement(e.pure().shifted(m, offset), Perm::from_images(std::move(images)));
}

ProductEmbedding embed_product(const std::vector<GroupSpec> &blocks, int m, long max_order) {
    if (blocks.empty()) throw std::invalid_argument("no blocks to embed");
    ProductEmbedding emb{m, blocks, {}, {}, {}, {}};
    long offset = 0;
    long total_order = 1;
    for (const auto &b : blocks) {
        if (b.n() < 3) throw std::invalid_argument("each block needs n >= 3");
        emb.offsets.push_back(offset);
        offset += b.n();
        total_order *= b.order();
        if (total_order > max_order)
            throw std::domain_error("product order exceeds the enumeration bound");
    }
    if (offset > m) throw std::domain_error("strand budget exceeded: sum n_i > m");

    std::vector<std::vector<CosetRep>> block_reps;
    for (size_t bi = 0; bi < blocks.size(); ++bi) {
        const GroupSpec &b = blocks[bi];
        int off = static_cast<int>(emb.offsets[bi]);
        GammaData data = build_generators(b);
        for (const auto *g : data.all_generators())
            emb.generators.push_back({"b" + std::to_string(bi + 1) + ":" + g->label,
                                      shift_word(g->word, m, off),
                                      shift_element(g->element, m, off)});
        for (const auto &lv : data.lattice_basis)
            emb.lattice_basis.push_back(
                {"b" + std::to_string(bi + 1) + ":" + lv.label, lv.vec.shifted(m, off)});
        std::vector<CosetRep> shifted;
        for (const auto &r : coset_reps(b, max_order))
            shifted.push_back({r.exponents, shift_element(r.element, m, off)});
        block_reps.push_back(std::move(shifted));
    }

    // product coset representatives, odometer over blocks
    std::vector<size_t> idx(blocks.size(), 0);
    for (;;) {
        QuotientElement e = QuotientElement::identity(m);
        std::vector<long> exps;
        for (size_t bi = 0; bi < blocks.size(); ++bi) {
            const CosetRep &r = block_reps[bi][idx[bi]];
            e = multiply(e, r.element);
            exps.insert(exps.end(), r.exponents.begin(), r.exponents.end());
        }
        emb.coset_reps.push_back({std::move(exps), std::move(e)});
        size_t a = blocks.size();
        bool done = true;
        while (a > 0) {
            --a;
            if (++idx[a] < block_reps[a].size()) {
                done = false;
                break;
            }
            idx[a] = 0;
        }
        if (done) break;
    }
    return emb;
}

TorsionProblem embedding_torsion_problem(const ProductEmbedding &emb) {
    TorsionProblem p{emb.m, emb.lattice_basis, {}};
    for (const auto &rep : emb.coset_reps) {
        bool trivial = std::all_of(rep.exponents.begin(), rep.exponents.end(),
                                   [](long e) { return e == 0; });
        if (!trivial) p.cosets.push_back(rep);
    }
    return p;
}

}  // namespace braidcryst
