#include "braidcryst/holonomy.hpp"

#include "braidcryst/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace braidcryst {

namespace {

std::string e_label(int j, int h, long k) {
    return "e_{" + std::to_string(j) + "," + std::to_string(h) + "," + std::to_string(k) + "}";
}

QuotientElement full_delta(const GroupSpec &spec) {
    QuotientElement d = QuotientElement::identity(spec.n());
    for (int l = 1; l <= spec.t(); ++l)
        d = multiply(d, delta_element(spec.n(), static_cast<int>(spec.n_l(l - 1)),
                                      static_cast<int>(spec.odd_block(l))));
    return d;
}

}  // namespace

IntMat OrderedBasis::matrix_cols() const {
    IntMat m(dim(), dim());
    for (int c = 0; c < dim(); ++c)
        for (int r = 0; r < dim(); ++r)
            m.at(r, c) = entries[static_cast<size_t>(c)].vec.coords()[static_cast<size_t>(r)];
    return m;
}

int OrderedBasis::index_of(int j, int h, long k) const {
    for (size_t i = 0; i < entries.size(); ++i) {
        const BasisEntry &e = entries[i];
        if (e.j == j && e.h == h && e.k == k) return static_cast<int>(i);
    }
    throw std::out_of_range("no such basis entry");
}

OrderedBasis ordered_basis(long q) {
    GroupSpec spec = cyclic_spec(q);
    const int n = spec.n();
    const int t = spec.t();
    QuotientElement delta = full_delta(spec);
    auto fo = is_finite_order(delta);
    if (!fo.finite || fo.order != q) throw verification_error("delta does not have order q");
    const Perm rho = delta.perm().inverse();  // conjugation by delta acts via rho

    OrderedBasis basis{spec, delta, {}};
    auto push_orbit = [&](int j, int h, PureVector seed, long orbit) {
        for (long k = 1; k <= orbit; ++k) {
            basis.entries.push_back({j, h, k, e_label(j, h, k), seed});
            if (k < orbit) seed = act(rho, seed);
        }
    };

    for (int j = 1; j <= t; ++j) {
        const long p = spec.odd_block(j);
        const int base = static_cast<int>(spec.n_l(j - 1));
        // h = 0: the fixed vector, then the q*A_{base+2,base+3} orbit block
        QuotientElement a = multiply(generator_A(n, base + 1, base + 2),
                                     delta_element(n, base, static_cast<int>(p)));
        QuotientElement ap = power(a, p);
        if (!ap.is_pure()) throw verification_error("(A delta)^p is not pure");
        basis.entries.push_back({j, 0, 1, e_label(j, 0, 1), ap.pure()});
        PureVector seed = Int(q) * PureVector::unit(n, PairIndex(base + 2, base + 3));
        for (long k = 1; k <= p - 1; ++k) {
            basis.entries.push_back({j, 0, k + 1, e_label(j, 0, k + 1), seed});
            if (k < p - 1) seed = act(rho, seed);
        }
        // h = 1..(p-3)/2: orbits of the distance h+1 pairs
        for (int h = 1; h <= (p - 3) / 2; ++h)
            push_orbit(j, h,
                       Int(q) * PureVector::unit(n, PairIndex(base + 1, base + h + 2)),
                       p);
    }
    // mixed orbits, labels offset by t
    for (int j = 1; j <= t; ++j)
        for (int h = j + 1; h <= t; ++h)
            push_orbit(t + j, t + h,
                       Int(q) * PureVector::unit(n, PairIndex(static_cast<int>(spec.n_l(j - 1)) + 1,
                                                              static_cast<int>(spec.n_l(h - 1)) + 1)),
                       spec.odd_block(j) * spec.odd_block(h));

    if (basis.dim() != spec.dim()) throw verification_error("ordered basis has wrong cardinality");
    return basis;
}

IntMat HolonomyBlock::matrix() const {
    IntMat m(static_cast<int>(z), static_cast<int>(z));
    if (kind == Kind::M) {
        m.at(0, static_cast<int>(z) - 1) = 1;
        for (int i = 1; i < z; ++i) m.at(i, i - 1) = 1;
    } else {
        m.at(0, 0) = 1;
        m.at(0, static_cast<int>(z) - 1) = q;
        for (int i = 1; i < z; ++i) m.at(i, static_cast<int>(z) - 1) = -1;
        for (int i = 2; i < z; ++i) m.at(i, i - 1) = 1;
    }
    return m;
}

std::string HolonomyBlock::str() const {
    if (kind == Kind::M) return "M_" + std::to_string(z);
    return "N_" + std::to_string(z) + "[" + std::to_string(q) + "]";
}

std::vector<HolonomyBlock> block_structure(long q) {
    GroupSpec spec = cyclic_spec(q);
    std::vector<HolonomyBlock> blocks;
    for (int j = 1; j <= spec.t(); ++j) {
        const long p = spec.odd_block(j);
        blocks.push_back({HolonomyBlock::Kind::N, p, q});
        for (int h = 1; h <= (p - 3) / 2; ++h)
            blocks.push_back({HolonomyBlock::Kind::M, p, q});
    }
    for (int j = 1; j <= spec.t(); ++j)
        for (int h = j + 1; h <= spec.t(); ++h)
            blocks.push_back({HolonomyBlock::Kind::M, spec.odd_block(j) * spec.odd_block(h), q});
    return blocks;
}

IntMat assemble_blocks(const std::vector<HolonomyBlock> &blocks) {
    long dim = 0;
    for (const auto &b : blocks) dim += b.z;
    IntMat m(static_cast<int>(dim), static_cast<int>(dim));
    int off = 0;
    for (const auto &b : blocks) {
        IntMat bm = b.matrix();
        for (int i = 0; i < bm.rows(); ++i)
            for (int j = 0; j < bm.cols(); ++j) m.at(off + i, off + j) = bm.at(i, j);
        off += bm.rows();
    }
    return m;
}

namespace {

// Column-echelon based solver for repeated "express in this basis" queries.
class BasisSolver {
  public:
    explicit BasisSolver(IntMat basis_cols) {
        rows_ = basis_cols.rows();
        cols_ = basis_cols.cols();
        auto ech = col_echelon_transform(std::move(basis_cols));
        h_ = std::move(ech.h);
        u_ = std::move(ech.u);
        pivot_row_.assign(static_cast<size_t>(cols_), -1);
        for (int c = 0; c < cols_; ++c)
            for (int r = 0; r < rows_; ++r)
                if (h_.at(r, c) != 0) {
                    pivot_row_[static_cast<size_t>(c)] = r;
                    break;
                }
    }

    // Solves basis * x = target over Z; nullopt if target is outside.
    std::optional<std::vector<Int>> solve(const std::vector<Int> &target) const {
        std::vector<Int> t = target;
        std::vector<Int> y(static_cast<size_t>(cols_));
        for (int c = 0; c < cols_; ++c) {
            int p = pivot_row_[static_cast<size_t>(c)];
            if (p < 0) continue;
            const Int &piv = h_.at(p, c);
            if (t[static_cast<size_t>(p)] % piv != 0) return std::nullopt;
            Int yc = t[static_cast<size_t>(p)] / piv;
            y[static_cast<size_t>(c)] = yc;
            if (yc != 0)
                for (int r = p; r < rows_; ++r) {
                    const Int &hv = h_.at(r, c);
                    if (hv != 0) t[static_cast<size_t>(r)] -= yc * hv;
                }
        }
        for (const Int &v : t)
            if (v != 0) return std::nullopt;
        std::vector<Int> x(static_cast<size_t>(cols_));
        for (int i = 0; i < cols_; ++i) {
            Int acc = 0;
            for (int j = 0; j < cols_; ++j)
                if (u_.at(i, j) != 0 && y[static_cast<size_t>(j)] != 0)
                    acc += u_.at(i, j) * y[static_cast<size_t>(j)];
            x[static_cast<size_t>(i)] = acc;
        }
        return x;
    }

  private:
    int rows_, cols_;
    IntMat h_, u_;
    std::vector<int> pivot_row_;
};

IntMat conjugation_matrix(const Perm &rho, const std::vector<PureVector> &basis) {
    if (basis.empty()) throw std::invalid_argument("empty basis");
    const int dim = basis[0].dim();
    IntMat cols(dim, static_cast<int>(basis.size()));
    for (size_t c = 0; c < basis.size(); ++c)
        for (int r = 0; r < dim; ++r)
            cols.at(r, static_cast<int>(c)) = basis[c].coords()[static_cast<size_t>(r)];
    BasisSolver solver(cols);
    IntMat out(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
    for (size_t c = 0; c < basis.size(); ++c) {
        PureVector img = act(rho, basis[c]);
        auto x = solver.solve(img.coords());
        if (!x)
            throw std::domain_error("conjugation does not preserve the given lattice");
        for (size_t r = 0; r < basis.size(); ++r)
            out.at(static_cast<int>(r), static_cast<int>(c)) = (*x)[r];
    }
    return out;
}

}  // namespace

std::vector<PureVector> basis_vectors(const OrderedBasis &basis) {
    std::vector<PureVector> v;
    v.reserve(basis.entries.size());
    for (const auto &e : basis.entries) v.push_back(e.vec);
    return v;
}

std::vector<PureVector> basis_vectors(const std::vector<LabeledVector> &basis) {
    std::vector<PureVector> v;
    v.reserve(basis.size());
    for (const auto &e : basis) v.push_back(e.vec);
    return v;
}

IntMat holonomy_matrix_from_action(const OrderedBasis &basis) {
    return conjugation_matrix(basis.delta.perm().inverse(), basis_vectors(basis));
}

IntMat holonomy_matrix_from_blocks(long q) { return assemble_blocks(block_structure(q)); }

IntMat holonomy_matrix(long q) {
    IntMat action = holonomy_matrix_from_action(ordered_basis(q));
    if (action != holonomy_matrix_from_blocks(q))
        throw verification_error("action-derived holonomy matrix disagrees with block assembly");
    return action;
}

IntMat matrix_of(const QuotientElement &g, const std::vector<PureVector> &basis) {
    return conjugation_matrix(g.perm().inverse(), basis);
}

long FactoredCharPoly::degree() const {
    long d = 0;
    for (auto [z, m] : factors) d += z * m;
    return d;
}

IntPoly FactoredCharPoly::expand() const {
    IntPoly p = IntPoly::one();
    for (auto [z, m] : factors)
        for (long i = 0; i < m; ++i) p = p * IntPoly::x_pow_minus_one(z);
    return p;
}

std::string FactoredCharPoly::str() const {
    std::string s;
    for (auto [z, m] : factors) {
        if (!s.empty()) s += " ";
        s += "(x^" + std::to_string(z) + "-1)";
        if (m > 1) s += "^" + std::to_string(m);
    }
    return s.empty() ? "1" : s;
}

FactoredCharPoly char_poly_factored(long q) {
    std::vector<std::pair<long, long>> factors;
    for (const auto &b : block_structure(q)) {
        auto it = std::find_if(factors.begin(), factors.end(),
                               [&](const auto &f) { return f.first == b.z; });
        if (it == factors.end())
            factors.push_back({b.z, 1});
        else
            ++it->second;
    }
    std::sort(factors.begin(), factors.end());
    return {std::move(factors)};
}

std::vector<Int> char_poly_direct(const IntMat &m) { return charpoly(m); }

long betti_first(long q) {
    GroupSpec spec = cyclic_spec(q);
    long b = spec.t() * (spec.t() - 1) / 2;
    for (int j = 1; j <= spec.t(); ++j) b += (spec.odd_block(j) - 1) / 2;
    return b;
}

long betti_rank(const IntMat &m) {
    return m.rows() - rank_bareiss(m - IntMat::identity(m.rows()));
}

std::vector<CenterGenerator> center_basis(long q) {
    OrderedBasis basis = ordered_basis(q);
    const GroupSpec &spec = basis.spec;
    std::vector<CenterGenerator> out;
    auto orbit_sum = [&](int j, int h, long orbit, const std::string &label) {
        CenterGenerator g{label, {}, PureVector(spec.n())};
        for (long k = 1; k <= orbit; ++k) {
            int idx = basis.index_of(j, h, k);
            g.basis_indices.push_back(idx);
            g.vec += basis.entries[static_cast<size_t>(idx)].vec;
        }
        out.push_back(std::move(g));
    };
    for (int j = 1; j <= spec.t(); ++j) {
        int idx = basis.index_of(j, 0, 1);
        out.push_back({e_label(j, 0, 1), {idx}, basis.entries[static_cast<size_t>(idx)].vec});
        for (int h = 1; h <= (spec.odd_block(j) - 3) / 2; ++h)
            orbit_sum(j, h, spec.odd_block(j),
                      e_label(j, h, 1) + ".." + e_label(j, h, spec.odd_block(j)));
    }
    for (int j = 1; j <= spec.t(); ++j)
        for (int h = j + 1; h <= spec.t(); ++h)
            orbit_sum(spec.t() + j, spec.t() + h, spec.odd_block(j) * spec.odd_block(h),
                      e_label(spec.t() + j, spec.t() + h, 1) + ".." +
                          e_label(spec.t() + j, spec.t() + h, spec.odd_block(j) * spec.odd_block(h)));
    return out;
}

long center_rank(long q) { return static_cast<long>(center_basis(q).size()); }

std::vector<Int> trace_vector(long q) {
    auto blocks = block_structure(q);
    std::vector<Int> traces(static_cast<size_t>(q));
    for (const auto &b : blocks) {
        IntMat bm = b.matrix();
        IntMat p = IntMat::identity(bm.rows());
        for (long k = 0; k < q; ++k) {
            traces[static_cast<size_t>(k)] += p.trace();
            if (k + 1 < q) p = p * bm;
        }
    }
    return traces;
}

}  // namespace braidcryst
