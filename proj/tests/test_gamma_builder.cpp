#include <catch2/catch_amalgamated.hpp>

#include "braidcryst/gamma_builder.hpp"

using namespace braidcryst;

namespace {

GroupSpec spec_of(const std::string &text) { return parse_group_spec(text).spec; }

}  // namespace

TEST_CASE("group spec parsing and derived layout") {
    GroupSpec z3 = spec_of("Z3");
    CHECK(z3.t() == 1);
    CHECK(z3.v() == 0);
    CHECK(z3.n() == 3);
    CHECK(z3.order() == 3);
    CHECK(z3.d() == 3);
    CHECK(z3.is_cyclic());
    CHECK(z3.is_odd());

    GroupSpec mixed = spec_of("Z9xZ4");
    CHECK(mixed.t() == 1);
    CHECK(mixed.v() == 1);
    CHECK(mixed.n() == 13);
    CHECK(mixed.order() == 36);
    CHECK(mixed.d() == 9);
    CHECK(mixed.dim() == 78);
    CHECK(mixed.is_cyclic());  // 9 and 4 are coprime
    CHECK_FALSE(mixed.is_odd());

    GroupSpec z3z5 = spec_of("Z3xZ5");
    CHECK(z3z5.n() == 8);
    CHECK(z3z5.d() == 15);
    CHECK(z3z5.n_l(0) == 0);
    CHECK(z3z5.n_l(1) == 3);
    CHECK(z3z5.n_l(2) == 8);

    auto parsed = parse_group_spec("Z6");
    CHECK(parsed.spec.t() == 1);
    CHECK(parsed.spec.v() == 1);
    CHECK(parsed.notices.size() == 1);  // Z6 = Z2 x Z3

    CHECK_THROWS(parse_group_spec("Z1"));
    CHECK_THROWS(parse_group_spec("Z3x"));
    CHECK_THROWS(parse_group_spec("A5"));
    CHECK_THROWS(parse_group_spec(""));
}

TEST_CASE("Z2 is routed through the 2-group sigma-preimage case on 3 strands") {
    GroupSpec z2 = spec_of("Z2");
    CHECK(z2.is_two_group());
    CHECK(z2.n() == 3);  // padded to the minimum strand count
    GammaData data = build_generators(z2);
    CHECK(data.x1.empty());
    CHECK(data.x2.empty());
    CHECK(data.x3.size() == 3);  // full lattice
    CHECK(data.x4.size() == 1);
    CHECK(data.x4[0].word.str() == "s1");
    CHECK(data.lattice_basis.size() == 3);
    // lattice is all of Z^3
    IntMat h = hnf_rows(lattice_matrix(data.lattice_basis));
    CHECK(h == IntMat::identity(3));
}

TEST_CASE("X sets for Z3") {
    GammaData data = build_generators(spec_of("Z3"));
    REQUIRE(data.x1.size() == 1);
    CHECK(data.x1[0].word.str() == "s1 s1 s2 S1");  // A_{1,2} delta_{0,3}
    CHECK(data.x1[0].element.perm().order() == 3);
    REQUIRE(data.x2.size() == 3);  // A_{r,s}^3 for all pairs in 1..3
    for (const auto &g : data.x2) {
        CHECK(g.element.is_pure());
        CHECK_FALSE(g.element.pure().is_zero());
    }
    CHECK(data.x3.empty());
    CHECK(data.x4.empty());
}

TEST_CASE("X sets for Z3xZ2 on 5 strands") {
    GroupSpec spec = spec_of("Z3xZ2");
    CHECK(spec.n() == 5);
    GammaData data = build_generators(spec);
    CHECK(data.x1.size() == 1);
    REQUIRE(data.x4.size() == 1);
    CHECK(data.x4[0].word.str() == "s4");  // eta_1 = sigma_4
    // X3 = pairs touching strands 4 or 5
    CHECK(data.x3.size() == 7);
    for (const auto &g : data.x3) {
        bool touches = false;
        for (int r = 0; r < g.element.pure().dim(); ++r)
            if (g.element.pure().coords()[static_cast<size_t>(r)] != 0) {
                PairIndex p = pair_at(5, r);
                touches = p.j >= 4;
            }
        CHECK(touches);
    }
    CHECK(data.x2.size() == 3);
    // projection onto S_5 generates Z_3 x Z_2
    CHECK(check_projection(spec));
}

TEST_CASE("lattice basis for Z3 matches the expansion of the cube") {
    auto basis = build_lattice_basis(spec_of("Z3"));
    REQUIRE(basis.size() == 3);
    PureVector c1(3);
    c1.at(PairIndex(1, 2)) = 1;
    c1.at(PairIndex(1, 3)) = 1;
    c1.at(PairIndex(2, 3)) = 1;
    CHECK(basis[0].vec == c1);
    CHECK(basis[1].vec == Int(3) * PureVector::unit(3, PairIndex(1, 3)));
    CHECK(basis[2].vec == Int(3) * PureVector::unit(3, PairIndex(2, 3)));
}

TEST_CASE("index set I excludes exactly the adjacent pairs (n_l+1, n_l+2)") {
    auto basis = build_lattice_basis(spec_of("Z3xZ5"));
    // excluded pairs: (1,2) and (4,5)
    for (const auto &lv : basis) {
        if (lv.label.rfind("C2:", 0) != 0) continue;
        CHECK(lv.label.find("{1,2}") == std::string::npos);
        CHECK(lv.label.find("{4,5}") == std::string::npos);
    }
    long c1 = 0, c2 = 0, c3 = 0;
    for (const auto &lv : basis) {
        if (lv.label.rfind("C1:", 0) == 0) ++c1;
        if (lv.label.rfind("C2:", 0) == 0) ++c2;
        if (lv.label.rfind("C3:", 0) == 0) ++c3;
    }
    CHECK(c1 == 2);
    CHECK(c2 == 26);
    CHECK(c3 == 0);
    CHECK(c1 + c2 + c3 == 28);
    CHECK(rank_bareiss(lattice_matrix(basis)) == 28);
}

TEST_CASE("coset representatives of Z3 are the powers of A delta") {
    auto reps = coset_reps(spec_of("Z3"));
    REQUIRE(reps.size() == 3);
    GammaData data = build_generators(spec_of("Z3"));
    for (long s = 0; s < 3; ++s) {
        CHECK(reps[static_cast<size_t>(s)].exponents == std::vector<long>{s});
        CHECK(reps[static_cast<size_t>(s)].element == power(data.x1[0].element, s));
    }
}

TEST_CASE("Schreier case 1: lattice generators return themselves") {
    GroupSpec spec = spec_of("Z3");
    auto ys = schreier_generators(spec);
    GammaData data = build_generators(spec);
    // for every x in X2 and every coset, y = x (as pure vectors) must occur
    // |M| = 3 times
    for (const auto &g : data.x2) {
        long hits = 0;
        for (const auto &y : ys)
            if (y == g.element.pure()) ++hits;
        CHECK(hits >= 3);
    }
}

TEST_CASE("Reidemeister-Schreier lattice equals the claimed basis lattice") {
    for (const char *name : {"Z3", "Z5", "Z9", "Z3xZ5", "Z3xZ2"}) {
        GroupSpec spec = spec_of(name);
        auto ys = schreier_generators(spec);
        IntMat h_rs = hnf_rows(lattice_matrix(ys, spec.n()));
        IntMat h_claimed = hnf_rows(lattice_matrix(build_lattice_basis(spec)));
        INFO(name);
        CHECK(h_rs == h_claimed);
        CHECK(h_claimed.rows() == spec.dim());  // full rank
    }
}

TEST_CASE("coset torsion: the +-1/p obstruction for Z3") {
    auto res = coset_has_torsion(spec_of("Z3"), {1});
    CHECK_FALSE(res.solvable);
    CHECK(res.image_order == 3);
    CHECK_FALSE(res.snf_diag.empty());
    CHECK_THROWS(coset_has_torsion(spec_of("Z3"), {0}));  // trivial coset rejected
}

TEST_CASE("control group sigma^{-1}(Z3) has torsion with witness of order 3") {
    TorsionProblem control = sigma_tilde_torsion_problem(spec_of("Z3"));
    REQUIRE(control.cosets.size() == 2);
    TorsionCertificate cert = run_torsion_scan(control);
    CHECK_FALSE(cert.torsion_free);
    bool witnessed = false;
    for (const auto &c : cert.cosets)
        if (c.solvable) {
            witnessed = true;
            REQUIRE(c.witness.has_value());
            auto fo = is_finite_order(*c.witness);
            CHECK(fo.finite);
            CHECK(fo.order == 3);
        }
    CHECK(witnessed);
}

TEST_CASE("even-order cosets of Z3xZ2 are torsion-free") {
    TorsionProblem p = gamma_torsion_problem(spec_of("Z3xZ2"));
    for (size_t i = 0; i < p.cosets.size(); ++i) {
        auto res = coset_has_torsion(p, i);
        CHECK_FALSE(res.solvable);
        if (res.exponents[1] != 0) CHECK(res.image_order % 2 == 0);
    }
}

TEST_CASE("torsion certificates match the theorem at desk scale") {
    for (const char *name : {"Z3", "Z5", "Z9", "Z3xZ5", "Z3xZ3"}) {
        INFO(name);
        CHECK(verify_torsion_free(spec_of(name)).torsion_free);
    }
    // control with odd holonomy always yields a witness
    for (const char *name : {"Z3", "Z5", "Z3xZ2"}) {
        INFO(name);
        CHECK_FALSE(run_torsion_scan(sigma_tilde_torsion_problem(spec_of(name))).torsion_free);
    }
    // pure 2-groups: the sigma-preimage is itself Bieberbach
    CHECK(run_torsion_scan(sigma_tilde_torsion_problem(spec_of("Z4"))).torsion_free);
    CHECK(verify_torsion_free(spec_of("Z2xZ2")).torsion_free);
}

TEST_CASE("enumeration bound is enforced") {
    CHECK_THROWS_AS(verify_torsion_free(spec_of("Z7"), 5), std::domain_error);
    CHECK_THROWS_AS(coset_reps(spec_of("Z81"), 64), std::domain_error);
    CHECK_NOTHROW(verify_torsion_free(spec_of("Z7"), 7));
}

TEST_CASE("projection correctness for small specs") {
    for (const char *name : {"Z3", "Z5", "Z9", "Z3xZ5", "Z3xZ2", "Z9xZ4", "Z2xZ2", "Z3xZ3"})
        CHECK(check_projection(spec_of(name)));
}

TEST_CASE("embed_product of (Z3, Z5) into B_8") {
    ProductEmbedding emb = embed_product({spec_of("Z3"), spec_of("Z5")}, 8);
    CHECK(emb.offsets == std::vector<long>{0, 3});
    CHECK(emb.lattice_basis.size() == 13);  // C(3,2) + C(5,2)
    CHECK(rank_bareiss(lattice_matrix(emb.lattice_basis)) == 13);
    CHECK(emb.coset_reps.size() == 15);

    // cross-block commutators vanish
    for (size_t a = 0; a < emb.generators.size(); ++a)
        for (size_t b = a + 1; b < emb.generators.size(); ++b) {
            const auto &ga = emb.generators[a].element;
            const auto &gb = emb.generators[b].element;
            if (emb.generators[a].label[1] == emb.generators[b].label[1]) continue;
            CHECK(multiply(ga, gb) == multiply(gb, ga));
        }

    // the embedded product is torsion free
    CHECK(run_torsion_scan(embedding_torsion_problem(emb)).torsion_free);

    // strand budget enforcement
    CHECK_THROWS_AS(embed_product({spec_of("Z3"), spec_of("Z5")}, 7), std::domain_error);
}

TEST_CASE("single-block embedding recovers build_generators at offset 0") {
    GroupSpec z5 = spec_of("Z5");
    ProductEmbedding emb = embed_product({z5}, 5);
    GammaData data = build_generators(z5);
    auto all = data.all_generators();
    REQUIRE(emb.generators.size() == all.size());
    for (size_t i = 0; i < all.size(); ++i)
        CHECK(emb.generators[i].element == all[i]->element);
    REQUIRE(emb.lattice_basis.size() == data.lattice_basis.size());
    for (size_t i = 0; i < data.lattice_basis.size(); ++i)
        CHECK(emb.lattice_basis[i].vec == data.lattice_basis[i].vec);
}

TEST_CASE("shift_element is a homomorphism into the larger group") {
    GroupSpec z3 = spec_of("Z3");
    GammaData data = build_generators(z3);
    const auto &a = data.x1[0].element;
    QuotientElement sa = shift_element(a, 8, 3);
    CHECK(shift_element(multiply(a, a), 8, 3) == multiply(sa, sa));
    CHECK(shift_element(inverse(a), 8, 3) == inverse(sa));
    CHECK(power(sa, 3).is_pure());
}
