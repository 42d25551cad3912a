#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "progen/homs.hpp"

using namespace progen;

namespace {

Rational frac(long long n, long long d) { return Rational(BigInt(n), BigInt(d)); }

const GModule& two_dim_class(const IrrCensus& c) {
    for (const auto& cl : c.classes)
        if (cl.module.dim() == 2) return cl.module;
    throw std::runtime_error("no 2-dim class");
}

// Brute-force least k with a generating k-tuple, by exhaustive search.
size_t brute_min_generators(const GModule& N, size_t kmax = 4) {
    if (N.dim() == 0) return 0;
    const Field& F = N.field();
    unsigned long long size = 1;
    for (size_t i = 0; i < N.dim(); ++i) size *= F.q();
    for (size_t k = 1; k <= kmax; ++k) {
        unsigned long long total = 1;
        for (size_t i = 0; i < k; ++i) total *= size;
        for (unsigned long long t = 0; t < total; ++t) {
            unsigned long long v = t;
            std::vector<std::vector<fel>> seeds(k);
            for (size_t i = 0; i < k; ++i) {
                seeds[i] = detail::unrank_vector(F, N.dim(), v % size);
                v /= size;
            }
            if (spin(N, seeds).rows() == N.dim()) return k;
        }
    }
    return kmax + 1;
}

}  // namespace

TEST_CASE("hom dimensions and head multiplicities") {
    PermGroup S3 = symmetric_group(3);
    const Field& F2 = Field::get(2);
    IrrCensus c = irr_census(S3, 2);
    const IrrClass& triv = c.classes[0];
    const IrrClass& two = c.classes[1];

    // N = M irreducible: i_mult = 1
    CHECK(i_mult(two.module, two) == 1);
    CHECK(i_mult(triv.module, triv) == 1);
    // N = M + M: additivity
    CHECK(i_mult(direct_sum(two.module, two.module), two) == 2);
    // regular module head: one trivial, two copies of the 2-dim
    GModule reg = regular_module(S3, F2);
    CHECK(i_mult(reg, triv) == 1);
    CHECK(i_mult(reg, two) == 2);
    // cross homs vanish
    CHECK(hom_dim(triv.module, two.module) == 0);
    CHECK(hom_dim(two.module, triv.module) == 0);
}

TEST_CASE("minimal generator counts") {
    const Field& F2 = Field::get(2);
    PermGroup S3 = symmetric_group(3);
    CHECK(min_generators(zero_module(S3, F2)) == 0);
    CHECK(min_generators(regular_module(cyclic_group(2), F2)) == 1);  // cyclic
    IrrCensus c = irr_census(S3, 2);
    GModule m3 = power_module(two_dim_class(c), 3);
    CHECK(min_generators(m3) == 2);  // ceil(3/2) with r = 2
    CHECK(brute_min_generators(m3) == 2);
    // augmentation module of F2[S3] is 1-generated; brute force agrees
    GModule aug = augmentation_module(S3, F2);
    CHECK(min_generators(aug) == 1);
    // d = least k with positive probability
    CHECK(module_gen_prob(m3, 1).is_zero());
    CHECK(!module_gen_prob(m3, 2).is_zero());
}

TEST_CASE("pinned product-formula values") {
    const Field& F3 = Field::get(3);
    PermGroup T = trivial_group();
    // N = 0: empty product
    CHECK(module_gen_prob(zero_module(T, F3), 3) == Rational(1));
    // N = F3^2 with trivial action, k = 2: (1 - 1/9)(1 - 3/9) = 16/27
    GModule f32 = power_module(trivial_module(T, F3), 2);
    CHECK(module_gen_prob(f32, 2) == frac(16, 27));
    CHECK(module_gen_prob_enum(f32, 2) == frac(16, 27));
    // N = M^3 for the 2-dim F2[S3] irreducible, k = 2: 315/512
    IrrCensus c = irr_census(symmetric_group(3), 2);
    GModule m3 = power_module(two_dim_class(c), 3);
    CHECK(module_gen_prob(m3, 2) == frac(315, 512));
    CHECK(module_gen_prob_enum(m3, 2) == frac(315, 512));
    // homogeneous non-absolutely-irreducible case: C3 over F2, q_M = 4
    IrrCensus c3 = irr_census(cyclic_group(3), 2);
    const GModule& w = two_dim_class(c3);
    CHECK(module_gen_prob(w, 1) == frac(3, 4));
    CHECK(module_gen_prob_enum(w, 1) == frac(3, 4));
    GModule ww = power_module(w, 2);
    CHECK(module_gen_prob(ww, 1).is_zero());
    CHECK(module_gen_prob(ww, 2) == frac(45, 64));  // (1-1/16)(1-4/16)
    CHECK(module_gen_prob_enum(ww, 2) == frac(45, 64));
}

TEST_CASE("spanning pairs of the plane: F2^2 with trivial action") {
    PermGroup T = trivial_group();
    const Field& F2 = Field::get(2);
    GModule f22 = power_module(trivial_module(T, F2), 2);
    // ordered spanning pairs: (4-1)(4-2) = 6 of 16
    CHECK(module_gen_prob_enum(f22, 2) == Rational(BigInt(3), BigInt(8)));
    CHECK(module_gen_prob(f22, 2) == Rational(BigInt(3), BigInt(8)));
    // irreducible at k = 1: (|N|-1)/|N|
    IrrCensus c3 = irr_census(cyclic_group(3), 2);
    const GModule& w = two_dim_class(c3);
    CHECK(module_gen_prob_enum(w, 1) == Rational(BigInt(3), BigInt(4)));
}

TEST_CASE("formula equals enumeration across a corpus") {
    const Field& F2 = Field::get(2);
    const Field& F3 = Field::get(3);
    std::vector<GModule> corpus;
    corpus.push_back(regular_module(cyclic_group(2), F2));
    corpus.push_back(regular_module(cyclic_group(3), F3));
    corpus.push_back(regular_module(cyclic_group(4), F2));
    corpus.push_back(augmentation_module(symmetric_group(3), F2));
    corpus.push_back(regular_module(symmetric_group(3), F2));
    corpus.push_back(regular_module(klein_four_group(), F2));
    for (const GModule& N : corpus) {
        for (unsigned k = 1; k <= 2; ++k) {
            double total = std::pow(std::pow(2.0, std::log2(N.field().q()) * N.dim()), k);
            if (total > (1 << 24)) continue;
            CAPTURE(N.dim());
            CAPTURE(k);
            CHECK(module_gen_prob(N, k) == module_gen_prob_enum(N, k));
        }
    }
}

TEST_CASE("head invariance: radical does not change generation probabilities") {
    // P(N,k) only sees head(N): compare regular module vs its head factors
    PermGroup S3 = symmetric_group(3);
    const Field& F2 = Field::get(2);
    IrrCensus c = irr_census(S3, 2);
    GModule reg = regular_module(S3, F2);
    // head(F2[S3]) = triv + 2dim^2
    GModule head = direct_sum(c.classes[0].module, power_module(two_dim_class(c), 2));
    for (unsigned k = 1; k <= 3; ++k) CHECK(module_gen_prob(reg, k) == module_gen_prob(head, k));
}

TEST_CASE("maximal submodule counts: formula and enumeration") {
    PermGroup T = trivial_group();
    const Field& F3 = Field::get(3);
    // N irreducible: single maximal submodule 0, index |N|
    IrrCensus cT = irr_census(T, 3);
    GModule triv = trivial_module(T, F3);
    auto mc = max_submodule_census(triv);
    REQUIRE(mc.size() == 1);
    CHECK(mc.at("3") == BigInt(1));
    // N = F3^2 trivial action: four index-3 maximal submodules
    GModule f32 = power_module(triv, 2);
    auto mc2 = max_submodule_census(f32);
    REQUIRE(mc2.size() == 1);
    CHECK(mc2.at("3") == BigInt(4));
    auto or2 = max_submodule_enumerate(f32, cT);
    CHECK(or2 == mc2);
    // regular module of C2 over F2: local algebra, unique maximal
    PermGroup C2 = cyclic_group(2);
    const Field& F2 = Field::get(2);
    GModule reg = regular_module(C2, F2);
    auto mcr = max_submodule_census(reg);
    REQUIRE(mcr.size() == 1);
    CHECK(mcr.at("2") == BigInt(1));
    auto orr = max_submodule_enumerate(reg, irr_census(C2, 2));
    CHECK(orr == mcr);
}

TEST_CASE("maximal submodule counts agree with enumeration corpus-wide") {
    std::vector<std::pair<PermGroup, uint32_t>> corpus = {
        {symmetric_group(3), 2}, {cyclic_group(3), 2}, {cyclic_group(4), 2},
        {klein_four_group(), 2}, {cyclic_group(3), 3}};
    for (auto& [G, p] : corpus) {
        IrrCensus c = irr_census(G, p);
        GModule reg = regular_module(G, Field::get(p));
        CAPTURE(G.name());
        CHECK(max_submodule_census(reg) == max_submodule_enumerate(reg, c));
        GModule aug = augmentation_module(G, Field::get(p));
        CHECK(max_submodule_census(aug) == max_submodule_enumerate(aug, c));
    }
}

TEST_CASE("pinned hom growth sums") {
    PermGroup S3 = symmetric_group(3);
    const Field& F2 = Field::get(2);
    IrrCensus c = irr_census(S3, 2);
    // N = 0: all sums zero
    auto z = hom_growth_sum(zero_module(S3, F2), c);
    for (auto& [k, v] : z) CHECK(v == BigInt(0));
    // N = trivial: |Hom(N, triv)| - 1 = 1 at order 2
    auto t = hom_growth_sum(trivial_module(S3, F2), c);
    CHECK(t.at("2") == BigInt(1));
    CHECK(t.at("4") == BigInt(0));
    // N = regular F2[S3]: at order 4, |Hom(N, 2dim)| - 1 = 2^2 - 1 = 3
    auto r = hom_growth_sum(regular_module(S3, F2), c);
    CHECK(r.at("4") == BigInt(3));
    CHECK(r.at("2") == BigInt(1));
}

TEST_CASE("PMSMG sandwich: m_k <= hom sum <= k^d m_k") {
    std::vector<std::pair<PermGroup, uint32_t>> corpus = {
        {symmetric_group(3), 2}, {cyclic_group(4), 2}, {klein_four_group(), 2},
        {cyclic_group(3), 3}, {alternating_group(4), 2}};
    for (auto& [G, p] : corpus) {
        IrrCensus c = irr_census(G, p);
        for (const GModule& N : {regular_module(G, Field::get(p)), augmentation_module(G, Field::get(p))}) {
            size_t d = min_generators(N);
            auto mk = max_submodule_census(N);
            auto hs = hom_growth_sum(N, c);
            for (auto& [key, sum] : hs) {
                BigInt m = mk.count(key) ? mk.at(key) : BigInt(0);
                CAPTURE(G.name());
                CAPTURE(key);
                CHECK((m < sum || m == sum));
                BigInt kd = BigInt::pow(BigInt::from_string(key), d);
                BigInt bound = kd * m;
                CHECK((sum < bound || sum == bound));
            }
        }
    }
}
