#include <catch2/catch_amalgamated.hpp>
#include <numeric>

#include "braidcryst/analysis.hpp"

using namespace braidcryst;

TEST_CASE("cyclotomic multiplicities of the factored charpolys") {
    auto m3 = cyclotomic_multiplicities(char_poly_factored(3));
    CHECK(m3 == std::map<long, long>{{1, 1}, {3, 1}});
    auto m5 = cyclotomic_multiplicities(char_poly_factored(5));
    CHECK(m5 == std::map<long, long>{{1, 2}, {5, 2}});
    auto m15 = cyclotomic_multiplicities(char_poly_factored(15));
    CHECK(m15 == std::map<long, long>{{1, 4}, {3, 2}, {5, 3}, {15, 1}});
    // degree check: 4 + 2*2 + 3*4 + 1*8 = 28
    long deg = 0;
    for (auto [d, m] : m15) deg += m * euler_phi(d);
    CHECK(deg == 28);
}

TEST_CASE("degree conservation for every computed charpoly") {
    for (long q = 3; q <= 45; q += 2) {
        auto fac = char_poly_factored(q);
        auto mult = cyclotomic_multiplicities(fac);
        long deg = 0;
        for (auto [d, m] : mult) deg += m * euler_phi(d);
        INFO("q = " << q);
        CHECK(deg == fac.degree());
        CHECK(deg == cyclic_spec(q).dim());
        // mult(Phi_1) is the first Betti number
        CHECK(mult.at(1) == betti_first(q));
    }
}

TEST_CASE("anosov: q = 3 is the unique exception") {
    auto a3 = anosov_verdict(3);
    CHECK(a3.decided);
    CHECK_FALSE(a3.anosov);
    CHECK(a3.reason.find("Phi_1") != std::string::npos);
    auto a5 = anosov_verdict(5);
    CHECK(a5.decided);
    CHECK(a5.anosov);
    auto a15 = anosov_verdict(15);
    CHECK(a15.decided);
    CHECK(a15.anosov);
    // critical multiplicities for q = 15: Phi_1 = 4, Phi_3 = 2, Phi_15 = 1 is
    // not critical
    auto m15 = cyclotomic_multiplicities(char_poly_factored(15));
    CHECK(m15.at(1) == 4);
    CHECK(m15.at(3) == 2);
    CHECK(m15.at(15) == 1);
    // outside the proved scope
    CHECK_FALSE(anosov_verdict(4).decided);
    CHECK_FALSE(anosov_verdict(2).decided);
}

TEST_CASE("anosov scan: verdict is exactly (q != 3) for odd q <= 45") {
    for (long q = 3; q <= 45; q += 2) {
        auto v = anosov_verdict(q);
        INFO("q = " << q);
        CHECK(v.decided);
        CHECK(v.anosov == (q != 3));
    }
}

TEST_CASE("real irrep multiplicities from the trace route") {
    CHECK(real_irrep_multiplicities(3) == std::vector<Int>{1, 1});
    CHECK(real_irrep_multiplicities(5) == std::vector<Int>{2, 2, 2});
    auto m9 = real_irrep_multiplicities(9);
    REQUIRE(m9.size() == 5);
    for (const Int &m : m9) CHECK(m == 4);  // (9-1)/2
    auto m27 = real_irrep_multiplicities(27);
    REQUIRE(m27.size() == 14);
    for (const Int &m : m27) CHECK(m == 13);  // (27-1)/2
}

TEST_CASE("trace-route multiplicities agree with the cyclotomic divisor route") {
    for (long q : {9L, 15L, 21L, 45L}) {
        auto mults = real_irrep_multiplicities(q);
        auto cyc = cyclotomic_multiplicities(char_poly_factored(q));
        INFO("q = " << q);
        for (long j = 0; j <= (q - 1) / 2; ++j) {
            long d = j == 0 ? 1 : q / std::gcd(j, q);
            CHECK(mults[static_cast<size_t>(j)] == (cyc.count(d) ? cyc.at(d) : 0));
        }
    }
}

TEST_CASE("kahler verdicts across the prime-power range") {
    struct Case {
        long p;
        int r;
        bool yes;
    };
    const Case cases[] = {{3, 1, false}, {5, 1, true},  {7, 1, false}, {3, 2, true},
                          {11, 1, false}, {13, 1, true}, {5, 2, true},  {3, 3, false}};
    for (const auto &c : cases) {
        KahlerVerdict v = kahler_verdict(c.p, c.r);
        long q = 1;
        for (int i = 0; i < c.r; ++i) q *= c.p;
        INFO("p^r = " << q);
        CHECK(v.value == (c.yes ? TriState::Yes : TriState::No));
        // independent parity check
        bool all_even = true;
        for (const Int &m : real_irrep_multiplicities(q))
            if (mpz_odd_p(m.get_mpz_t())) all_even = false;
        CHECK((v.value == TriState::Yes) == all_even);
        CHECK((v.value == TriState::Yes) == (q % 4 == 1));
    }
    CHECK(kahler_verdict(15, 1).value == TriState::NotDecided);
    CHECK(kahler_verdict(2, 2).value == TriState::NotDecided);
    CHECK(kahler_verdict(9, 1).value == TriState::NotDecided);  // 9 is not prime
}

TEST_CASE("calabi-yau exactly when kahler, with dimension 2u(4u+1)") {
    auto c5 = calabi_yau(5, 1);
    CHECK(c5.is_calabi_yau);
    CHECK(c5.dimension == 10);  // u = 1
    auto c9 = calabi_yau(3, 2);
    CHECK(c9.is_calabi_yau);
    CHECK(c9.dimension == 36);  // u = 2, 2*2*9
    auto c7 = calabi_yau(7, 1);
    CHECK_FALSE(c7.is_calabi_yau);
    auto c25 = calabi_yau(5, 2);
    CHECK(c25.is_calabi_yau);
    CHECK(c25.dimension == 300);
}

TEST_CASE("inner automorphism group dimension") {
    CHECK(inn_dimension(3) == 2);    // 3 - 1
    CHECK(inn_dimension(5) == 8);    // 10 - 2
    CHECK(inn_dimension(15) == 24);  // 28 - 4
    // the displayed formula: sum p(p-1)/2 + sum p_l p_s - sum (p-1)/2 - t(t-1)/2
    for (long q : {3L, 5L, 15L, 45L}) {
        GroupSpec spec = cyclic_spec(q);
        long formula = 0;
        for (int i = 1; i <= spec.t(); ++i)
            formula += spec.odd_block(i) * (spec.odd_block(i) - 1) / 2 -
                       (spec.odd_block(i) - 1) / 2;
        for (int i = 1; i <= spec.t(); ++i)
            for (int j = i + 1; j <= spec.t(); ++j)
                formula += spec.odd_block(i) * spec.odd_block(j);
        formula -= spec.t() * (spec.t() - 1) / 2;
        INFO("q = " << q);
        CHECK(inn_dimension(q) == formula);
    }
}

TEST_CASE("presentation of Gamma_3 contains the paper's relations") {
    Presentation p = presentation(3);
    REQUIRE(p.names.size() == 4);
    CHECK(p.names[0] == "g1_0_1");
    CHECK(p.names[3] == "a1");
    // a1^3 = g1_0_1
    bool found_power = false, found_wrap = false;
    for (const auto &rel : p.relations) {
        if (rel.kind == "power") {
            CHECK(p.name_of(rel.lhs) == "a1^3");
            CHECK(p.name_of(rel.rhs) == "g1_0_1");
            found_power = true;
        }
        if (rel.kind == "conjugation" && p.name_of(rel.lhs) == "a1 g1_0_3 a1^-1") {
            CHECK(p.name_of(rel.rhs) == "g1_0_1^3 g1_0_2^-1 g1_0_3^-1");
            found_wrap = true;
        }
    }
    CHECK(found_power);
    CHECK(found_wrap);
    CHECK(audit_presentation(p));
}

TEST_CASE("presentation relation counts and audits") {
    for (long q : {3L, 5L, 9L}) {
        Presentation p = presentation(q);
        GroupSpec spec = cyclic_spec(q);
        const long dim = spec.dim();
        long expected = dim * (dim - 1) / 2      // lattice commutators
                        + spec.t()               // power relations
                        + spec.t() * dim         // conjugation table
                        + spec.t() * (spec.t() - 1) / 2;
        INFO("q = " << q);
        CHECK(static_cast<long>(p.relations.size()) == expected);
        CHECK(audit_presentation(p));
    }
}

TEST_CASE("presentation audit covers the mixed-orbit CRT shifts (q = 15)") {
    Presentation p = presentation(15);
    // find a mixed conjugation relation and check the audit passes
    bool has_mixed = false;
    for (const auto &rel : p.relations)
        if (rel.kind == "conjugation" && p.name_of(rel.lhs).find("g3_4_") != std::string::npos)
            has_mixed = true;
    CHECK(has_mixed);
    CHECK(audit_presentation(p));
}

TEST_CASE("conjugation relations never use index 0 (representatives 1..z)") {
    Presentation p = presentation(9);
    for (const auto &rel : p.relations) {
        std::string rhs = p.name_of(rel.rhs);
        CHECK(rhs.find("_0 ") == std::string::npos);
        CHECK(rhs.find("_-") == std::string::npos);
    }
}

TEST_CASE("gap rendering is structurally loadable") {
    Presentation p = presentation(3);
    std::string gap = render_presentation_gap(p);
    CHECK(gap.find("F := FreeGroup(\"g1_0_1\", \"g1_0_2\", \"g1_0_3\", \"a1\");") !=
          std::string::npos);
    CHECK(gap.find("AssignGeneratorVariables(F);") != std::string::npos);
    CHECK(gap.find("G := F / rels;") != std::string::npos);

    // round-trip structural parse: every relator token is a declared name,
    // '^' powers are integers, separators balance
    size_t open = std::count(gap.begin(), gap.end(), '[');
    size_t close = std::count(gap.begin(), gap.end(), ']');
    CHECK(open == close);
    size_t lb = gap.find("rels := [");
    size_t rb = gap.find("];", lb);
    REQUIRE(lb != std::string::npos);
    REQUIRE(rb != std::string::npos);
    std::string body = gap.substr(lb + 9, rb - lb - 9);
    size_t count = 0;
    for (std::string::size_type pos = 0; (pos = body.find('/', pos)) != std::string::npos; ++pos)
        ++count;
    CHECK(count == p.relations.size());  // one lhs/(rhs) per relation
    // all generator tokens resolve
    for (const auto &name : p.names) CHECK(gap.find(name) != std::string::npos);
}

TEST_CASE("presentation text rendering") {
    std::string text = render_presentation_text(presentation(3));
    CHECK(text.find("generators (4):") != std::string::npos);
    CHECK(text.find("a1^3 = g1_0_1") != std::string::npos);
    CHECK(text.find("[section generator]") != std::string::npos);
}
