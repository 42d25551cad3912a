#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "progen/chief.hpp"
#include "progen/lattice.hpp"

using namespace progen;

TEST_CASE("lattice of C2") {
    SubgroupLattice L(cyclic_group(2));
    CHECK(L.size() == 2);
    CHECK(L.mobius(L.top()) == 1);
    CHECK(L.mobius(L.bottom()) == -1);
}

TEST_CASE("lattice of S3: six subgroups, mobius(1,G) = 3") {
    SubgroupLattice L(symmetric_group(3));
    CHECK(L.size() == 6);  // 1, three C2, C3, S3
    CHECK(L.mobius(L.bottom()) == 3);
    CHECK(L.maximal_subgroups().size() == 4);  // C3 and three C2
    CHECK(L.frattini().order() == 1);
}

TEST_CASE("lattice of prime cyclic groups") {
    for (uint32_t p : {3u, 5u, 7u}) {
        SubgroupLattice L(cyclic_group(p));
        CHECK(L.size() == 2);
        CHECK(L.mobius(L.bottom()) == -1);
        CHECK(L.maximal_subgroups().size() == 1);
        CHECK(L.at(L.maximal_subgroups()[0]).order() == 1);
    }
}

TEST_CASE("maximal subgroups: C4 and klein four") {
    SubgroupLattice L4(cyclic_group(4));
    auto m4 = L4.maximal_subgroups();
    REQUIRE(m4.size() == 1);
    CHECK(L4.at(m4[0]).order() == 2);
    CHECK(L4.frattini().order() == 2);

    SubgroupLattice LV(klein_four_group());
    auto mv = LV.maximal_subgroups();
    CHECK(mv.size() == 3);
    for (size_t i : mv) CHECK(LV.at(i).order() == 2);
    CHECK(LV.frattini().order() == 1);
}

TEST_CASE("mobius recursion identity holds on every computed lattice") {
    for (const char* id : {"C12", "D6", "Q8", "A4", "S4", "C2xC4"}) {
        SubgroupLattice L(named_group(id));
        for (size_t h = 0; h < L.size(); ++h) {
            long long acc = 0;
            for (size_t k = 0; k < L.size(); ++k)
                if (L.at(k).contains(L.at(h))) acc += L.mobius(k);
            CHECK(acc == (h == L.top() ? 1 : 0));
        }
    }
}

TEST_CASE("subgroup counts of known groups") {
    CHECK(SubgroupLattice(quaternion_group()).size() == 6);     // 1, Z, three C4, Q8
    CHECK(SubgroupLattice(alternating_group(4)).size() == 10);  // 1,3xC2,4xC3,V4,A4
    CHECK(SubgroupLattice(symmetric_group(4)).size() == 30);
    CHECK(SubgroupLattice(alternating_group(5)).size() == 59);
    CHECK(SubgroupLattice(sl25_group()).size() == 76);
}

TEST_CASE("lattice cap is enforced") {
    CHECK_THROWS_AS(SubgroupLattice(symmetric_group(7)), CapExceeded);
}

TEST_CASE("quotient group: S3 / C3 is C2") {
    PermGroup S3 = symmetric_group(3);
    const ElementTable& T = S3.elements();
    std::vector<uint32_t> c3 = subgroup_closure(T, {*T.index_of(Perm::parse_cycles("(0 1 2)", 3))});
    QuotientGroup qg = quotient_by(S3, T, c3);
    CHECK(qg.Q.order_u64() == 2);
    CHECK(qg.Q.gens().size() == 2);  // generator list parallels the parent
}

TEST_CASE("frattini cover tests") {
    PermGroup C4 = cyclic_group(4), C2 = cyclic_group(2), V = klein_four_group();
    CHECK(is_frattini_cover(C2, C2, {C2.gens()[0]}));
    CHECK(is_frattini_cover(C4, C2, {C2.gens()[0]}));
    CHECK(!is_frattini_cover(V, C2, {C2.gens()[0], Perm(2)}));
    CHECK_THROWS(is_frattini_cover(C4, V, {V.gens()[0]}));
}

TEST_CASE("sl25 -> A5 is a frattini cover (schur cover witness)") {
    PermGroup H = sl25_group();
    const ElementTable& T = H.elements();
    std::vector<uint32_t> center{0};
    for (uint32_t i = 1; i < T.size(); ++i)
        if (T.mult(i, i) == 0) center.push_back(i);
    REQUIRE(center.size() == 2);
    std::sort(center.begin(), center.end());
    QuotientGroup qg = quotient_by(H, T, center);
    CHECK(qg.Q.order_u64() == 60);
    CHECK(is_frattini_cover(H, qg.Q, qg.Q.gens()));
}

TEST_CASE("chief series of S3: factors C3 then C2, both non-frattini") {
    ChiefSeries cs = chief_series(symmetric_group(3));
    REQUIRE(cs.factors.size() == 2);
    CHECK(cs.factors[0].order == 3);
    CHECK(cs.factors[0].abelian);
    CHECK(cs.factors[0].non_frattini);
    CHECK(cs.factors[1].order == 2);
    CHECK(cs.factors[1].abelian);
    CHECK(cs.factors[1].non_frattini);
}

TEST_CASE("chief series of C4: one frattini factor") {
    ChiefSeries cs = chief_series(cyclic_group(4));
    REQUIRE(cs.factors.size() == 2);
    CHECK(cs.factors[0].order == 2);
    CHECK(!cs.factors[0].non_frattini);  // bottom C2 = Phi(C4)
    CHECK(cs.factors[1].non_frattini);
}

TEST_CASE("chief series of A5: single nonabelian factor") {
    ChiefSeries cs = chief_series(alternating_group(5));
    REQUIRE(cs.factors.size() == 1);
    CHECK(cs.factors[0].order == 60);
    CHECK(!cs.factors[0].abelian);
}

TEST_CASE("chief series terms are normal subgroups of the parent") {
    for (const char* id : {"S4", "Q8", "C12", "D6"}) {
        PermGroup G = named_group(id);
        const ElementTable& T = G.elements();
        ChiefSeries cs = chief_series(G);
        size_t total = 1;
        for (const ChiefFactor& f : cs.factors) {
            total *= f.order;
            Subgroup H;
            H.elems = f.upper_elems;
            SubgroupLattice L(G);
            CHECK(L.is_normal(H));
            CHECK(f.upper_elems.size() == f.lower_elems.size() * f.order);
        }
        CHECK(total == G.order_u64());
    }
}

TEST_CASE("delta examples") {
    const Field& F2 = Field::get(2);
    CHECK(delta(alternating_group(5), trivial_module(alternating_group(5), F2)) == 0);
    CHECK(delta(symmetric_group(3), trivial_module(symmetric_group(3), F2)) == 1);
    CHECK(delta(klein_four_group(), trivial_module(klein_four_group(), F2)) == 2);
    const Field& F5 = Field::get(5);
    CHECK(delta(symmetric_group(3), trivial_module(symmetric_group(3), F5)) == 0);
}

TEST_CASE("centralizer kernel and faithful quotient") {
    PermGroup S3 = symmetric_group(3);
    const Field& F3 = Field::get(3);
    GModule triv = trivial_module(S3, F3);
    CHECK(centralizer_kernel(triv).size() == 6);
    CHECK(faithful_quotient(triv).quotient.Q.order_u64() == 1);
    std::vector<Mat> act{Mat::from_rows(F3, {{2}}), Mat::from_rows(F3, {{1}})};
    GModule sign(S3, F3, 1, act);
    CHECK(centralizer_kernel(sign).size() == 3);
    CHECK(faithful_quotient(sign).quotient.Q.order_u64() == 2);
    const Field& F2 = Field::get(2);
    GModule aug = augmentation_module(S3, F2);
    CHECK(centralizer_kernel(aug).size() == 1);
}
