#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "progen/gmodule.hpp"

using namespace progen;

TEST_CASE("regular module of C2 over F2: spinning a unit vector fills it") {
    PermGroup C2 = cyclic_group(2);
    const Field& F2 = Field::get(2);
    GModule reg = regular_module(C2, F2);
    CHECK(reg.dim() == 2);
    CHECK(spin(reg, {}).rows() == 0);
    CHECK(spin(reg, {{1, 0}}).rows() == 2);  // cyclic module
}

TEST_CASE("spin of a seed inside a proper submodule stays proper") {
    PermGroup C2 = cyclic_group(2);
    const Field& F2 = Field::get(2);
    GModule reg = regular_module(C2, F2);
    // (1,1) spans the fixed line, a proper submodule
    Mat w = spin(reg, {{1, 1}});
    CHECK(w.rows() == 1);
    CHECK(is_submodule_basis(reg, w));
}

TEST_CASE("augmentation module shapes and actions") {
    const Field& F2 = Field::get(2);
    CHECK(augmentation_module(trivial_group(), F2).dim() == 0);
    GModule aug2 = augmentation_module(cyclic_group(2), F2);
    CHECK(aug2.dim() == 1);
    CHECK(aug2.gen_matrix(0) == Mat::identity(F2, 1));  // trivial action on {1+g}
    GModule aug6 = augmentation_module(symmetric_group(3), F2);
    CHECK(aug6.dim() == 5);
    Rng rng(5);
    CHECK(aug6.check_relations(rng));
}

TEST_CASE("module relation checking accepts valid actions and data round trips") {
    Rng rng(9);
    for (const char* id : {"S3", "Q8", "A4"}) {
        PermGroup G = named_group(id);
        for (uint32_t q : {2u, 3u}) {
            GModule reg = regular_module(G, Field::get(q));
            CAPTURE(id);
            CHECK(reg.check_relations(rng, 10));
        }
    }
}

TEST_CASE("submodule and quotient constructions are modules of right dims") {
    PermGroup S3 = symmetric_group(3);
    const Field& F2 = Field::get(2);
    GModule reg = regular_module(S3, F2);
    // all-ones vector spans the fixed line
    Mat fixed = spin(reg, {{1, 1, 1, 1, 1, 1}});
    REQUIRE(fixed.rows() == 1);
    GModule sub = submodule(reg, fixed);
    CHECK(sub.dim() == 1);
    GModule quo = quotient_module(reg, fixed);
    CHECK(quo.dim() == 5);
    Rng rng(11);
    CHECK(sub.check_relations(rng, 5));
    CHECK(quo.check_relations(rng, 10));
}

TEST_CASE("dual and tensor constructions") {
    PermGroup S3 = symmetric_group(3);
    const Field& F2 = Field::get(2);
    GModule aug = augmentation_module(S3, F2);
    GModule dd = dual_module(dual_module(aug));
    for (size_t gi = 0; gi < aug.num_gens(); ++gi) CHECK(dd.gen_matrix(gi) == aug.gen_matrix(gi));

    GModule triv1 = trivial_module(trivial_group(), F2);
    GModule t = tensor_outer(aug, triv1);
    CHECK(t.dim() == aug.dim());
    CHECK(t.group().order_u64() == 6);

    GModule tt = tensor_outer(aug, aug);
    CHECK(tt.dim() == 25);
    CHECK(tt.group().order_u64() == 36);
    Rng rng(3);
    CHECK(tt.check_relations(rng, 10));
}

TEST_CASE("restriction via generator words") {
    PermGroup S4 = symmetric_group(4);
    const Field& F2 = Field::get(2);
    GModule reg = regular_module(S4, F2);
    // restrict to A4 inside S4
    PermGroup A4 = alternating_group(4);
    auto words = generator_words(S4, A4);
    GModule res = restrict_module(reg, A4, words);
    CHECK(res.dim() == 24);
    CHECK(res.group().order_u64() == 12);
    // restriction to the whole group with single-letter words is the module itself
    std::vector<std::vector<uint32_t>> self_words;
    for (uint32_t i = 0; i < S4.gens().size(); ++i) self_words.push_back({i});
    GModule same = restrict_module(reg, S4, self_words);
    for (size_t gi = 0; gi < reg.num_gens(); ++gi) CHECK(same.gen_matrix(gi) == reg.gen_matrix(gi));
    // mismatched word is rejected
    CHECK_THROWS(restrict_module(reg, A4, {words[1], words[0]}));
}

TEST_CASE("extend scalars embeds prime-field matrices") {
    PermGroup C3 = cyclic_group(3);
    const Field& F2 = Field::get(2);
    const Field& F4 = Field::get(2, 2);
    GModule reg = regular_module(C3, F2);
    GModule ext = extend_scalars(reg, F4);
    CHECK(ext.dim() == 3);
    CHECK(&ext.field() == &F4);
    Rng rng(8);
    CHECK(ext.check_relations(rng, 5));
}
