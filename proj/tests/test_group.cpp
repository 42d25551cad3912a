#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "progen/group.hpp"

using namespace progen;

namespace {

// Independent oracle: closure of the generators under multiplication.
std::set<std::vector<uint32_t>> naive_elements(const PermGroup& G, size_t cap = 20000) {
    std::set<std::vector<uint32_t>> seen;
    std::vector<Perm> queue{Perm(G.degree())};
    seen.insert(queue[0].images());
    for (size_t i = 0; i < queue.size(); ++i) {
        for (const Perm& g : G.gens()) {
            Perm n = queue[i] * g;
            if (seen.insert(n.images()).second) {
                queue.push_back(n);
                REQUIRE(seen.size() <= cap);
            }
        }
    }
    return seen;
}

}  // namespace

TEST_CASE("perm parse/print round trip") {
    Perm p = Perm::parse_cycles("(0 1 2)(3 4)", 6);
    CHECK(p[0] == 1);
    CHECK(p[2] == 0);
    CHECK(p[3] == 4);
    CHECK(p[5] == 5);
    CHECK(Perm::parse_cycles(p.cycles(), 6) == p);
    CHECK(Perm::parse_cycles("()", 4) == Perm(4));
    CHECK(p.order() == 6);
    CHECK((p * p.inverse()).is_identity());
}

TEST_CASE("group orders from the stabilizer chain") {
    CHECK(trivial_group().order_u64() == 1);
    CHECK(cyclic_group(12).order_u64() == 12);
    CHECK(dihedral_group(6).order_u64() == 12);
    CHECK(symmetric_group(5).order_u64() == 120);
    CHECK(alternating_group(5).order_u64() == 60);
    CHECK(alternating_group(6).order_u64() == 360);
    CHECK(klein_four_group().order_u64() == 4);
    CHECK(quaternion_group().order_u64() == 8);
    CHECK(sl25_group().order_u64() == 120);
    CHECK(named_group("C2xC4").order_u64() == 8);
    CHECK(direct_product(alternating_group(5), alternating_group(5)).order_u64() == 3600);
}

TEST_CASE("degree-5 generator pairs give S5 and A5") {
    std::vector<Perm> g1{Perm::parse_cycles("(0 1 2 3 4)", 5), Perm::parse_cycles("(0 1)", 5)};
    CHECK(PermGroup(5, g1).order_u64() == 120);
    std::vector<Perm> g2{Perm::parse_cycles("(0 1 2 3 4)", 5), Perm::parse_cycles("(2 3 4)", 5)};
    CHECK(PermGroup(5, g2).order_u64() == 60);
}

TEST_CASE("chain membership agrees with naive enumeration on small groups") {
    for (const char* id : {"C6", "S3", "D4", "Q8", "A4", "C2xC4", "S4", "A5"}) {
        PermGroup G = named_group(id);
        auto elems = naive_elements(G);
        CHECK(G.order_u64() == elems.size());
        for (const auto& img : elems) CHECK(G.contains(Perm(img)));
        PermGroup S = symmetric_group(static_cast<uint32_t>(G.degree()));
        size_t tried = 0;
        for (const auto& img : naive_elements(S, 100000)) {
            if (++tried > 60) break;
            if (!elems.count(img)) CHECK(!G.contains(Perm(img)));
        }
    }
}

TEST_CASE("element table: words, mult, inverse") {
    PermGroup G = symmetric_group(4);
    const ElementTable& T = G.elements();
    CHECK(T.size() == 24);
    for (uint32_t i = 0; i < T.size(); ++i) {
        Perm w(G.degree());
        for (uint32_t gi : T.word(i)) w = w * G.gens()[gi];
        CHECK(w == T.perm(i));
        CHECK((T.perm(i) * T.perm(T.inverse(i))).is_identity());
        for (uint32_t j = 0; j < T.size(); ++j)
            CHECK(T.perm(T.mult(i, j)) == T.perm(i) * T.perm(j));
    }
}

TEST_CASE("uniform sampling is exact over the whole group") {
    PermGroup G = symmetric_group(4);
    const ElementTable& T = G.elements();
    std::vector<size_t> counts(24, 0);
    Rng rng = Rng::stream(42, 0);
    const size_t N = 24000;
    for (size_t i = 0; i < N; ++i) {
        auto idx = T.index_of(G.random_element(rng));
        REQUIRE(idx.has_value());
        ++counts[*idx];
    }
    double mean = static_cast<double>(N) / 24, sigma = std::sqrt(mean * (1 - 1.0 / 24));
    for (size_t c : counts) {
        CHECK(c > mean - 4 * sigma);
        CHECK(c < mean + 4 * sigma);
    }
}

TEST_CASE("derived subgroup and perfectness") {
    CHECK(alternating_group(5).is_perfect());
    CHECK(sl25_group().is_perfect());
    CHECK(!symmetric_group(4).is_perfect());
    CHECK(symmetric_group(4).derived_subgroup().order_u64() == 12);
    CHECK(quaternion_group().derived_subgroup().order_u64() == 2);
}

TEST_CASE("normal closure") {
    PermGroup S4 = symmetric_group(4);
    Perm dt = Perm::parse_cycles("(0 1)(2 3)", 4);
    CHECK(S4.normal_closure({dt}).order_u64() == 4);
    CHECK(S4.normal_closure({Perm::parse_cycles("(0 1)", 4)}).order_u64() == 24);
    PermGroup A5 = alternating_group(5);
    CHECK(A5.normal_closure({Perm::parse_cycles("(0 1 2)", 5)}).order_u64() == 60);
}

TEST_CASE("sl25 has a unique involution (double cover witness)") {
    PermGroup G = sl25_group();
    const ElementTable& T = G.elements();
    size_t involutions = 0;
    for (uint32_t i = 0; i < T.size(); ++i)
        if (i != 0 && T.mult(i, i) == 0) ++involutions;
    CHECK(involutions == 1);
}
