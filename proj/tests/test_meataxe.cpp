#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "progen/census.hpp"
#include "progen/meataxe.hpp"

using namespace progen;

namespace {

std::multiset<size_t> factor_dims(const std::vector<GModule>& factors) {
    std::multiset<size_t> dims;
    for (const auto& f : factors) dims.insert(f.dim());
    return dims;
}

}  // namespace

TEST_CASE("polynomial division, gcd, powmod") {
    const Field& F5 = Field::get(5);
    Poly a{1, 0, 2, 3};  // 3x^3+2x^2+1
    Poly b{2, 1};        // x+2
    Poly q, r;
    poly_divmod(F5, a, b, q, r);
    CHECK(poly_mul(F5, q, b).size() <= 4);
    Poly rec = poly_mul(F5, q, b);
    if (!r.empty()) {
        rec.resize(std::max(rec.size(), r.size()), 0);
        for (size_t i = 0; i < r.size(); ++i) rec[i] = F5.add(rec[i], r[i]);
    }
    poly_trim(rec);
    CHECK(rec == a);
    // gcd of (x+1)(x+2) and (x+1)(x+3) is x+1 over F5
    Poly p1 = poly_mul(F5, Poly{1, 1}, Poly{2, 1});
    Poly p2 = poly_mul(F5, Poly{1, 1}, Poly{3, 1});
    CHECK(poly_gcd(F5, p1, p2) == Poly{1, 1});
}

TEST_CASE("distinct factorization recovers random products") {
    Rng rng(31);
    for (uint32_t q : {2u, 3u, 4u, 5u, 9u}) {
        const Field& F = Field::for_q(q);
        // build a product of small known irreducibles: x^2+... use canonical
        // modulus polys of degrees 2 and 3 and a linear factor
        Poly lin{1, 1};
        auto m2 = canonical_modulus(F.p(), 2);
        Poly quad(m2.begin(), m2.end());
        if (F.e() > 1) quad = Poly{};  // canonical table is over the prime field only
        Poly prod = lin;
        if (!quad.empty() && F.e() == 1) {
            Poly qq;
            for (uint32_t c : m2) qq.push_back(static_cast<fel>(c));
            prod = poly_mul(F, prod, qq);
            prod = poly_mul(F, prod, qq);  // squared factor: multiplicity dropped
        }
        Rng r2(rng.next());
        std::vector<Poly> fac = poly_distinct_factors(F, prod, 16, r2);
        // every factor divides prod, product of distinct factors has the right roots
        for (const Poly& f : fac) {
            Poly rem = poly_mod(F, prod, f);
            CHECK(rem.empty());
        }
        if (F.e() == 1) CHECK(fac.size() == 2);
    }
}

TEST_CASE("local and global minimal polynomials") {
    const Field& F2 = Field::get(2);
    Mat nilp = Mat::from_rows(F2, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
    Poly mp = minpoly(nilp);
    CHECK(mp == Poly{0, 0, 0, 1});  // x^3
    Mat id = Mat::identity(F2, 4);
    CHECK(minpoly(id) == Poly{1, 1});  // x+1
    // local minpoly of e2 under the shift is x (e2*theta = 0)... e2 is killed once
    std::vector<fel> e2{0, 0, 1};
    Poly lp = local_minpoly(nilp, e2);
    CHECK(poly_deg(lp) >= 1);
    // p(theta) evaluation: x^3 at nilp is zero
    CHECK(poly_eval_matrix(F2, mp, nilp).is_zero());
}

TEST_CASE("chop: irreducible module returns itself") {
    PermGroup S3 = symmetric_group(3);
    const Field& F2 = Field::get(2);
    // the 2-dim irreducible: action of S3 on the quotient of the natural
    // permutation module by the fixed line
    GModule nat = [&] {
        Mat t = Mat::from_rows(F2, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
        Mat c = Mat::from_rows(F2, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
        return GModule(S3, F2, 3, {t, c});
    }();
    Mat fixed = spin(nat, {{1, 1, 1}});
    GModule two = quotient_module(nat, fixed);
    REQUIRE(two.dim() == 2);
    auto factors = chop(two);
    REQUIRE(factors.size() == 1);
    CHECK(factors[0].dim() == 2);
    CHECK(is_irreducible(two));
}

TEST_CASE("chop of the regular module of C3 over F3: trivial x3") {
    auto factors = chop(regular_module(cyclic_group(3), Field::get(3)));
    CHECK(factor_dims(factors) == std::multiset<size_t>{1, 1, 1});
}

TEST_CASE("chop of the regular module of S3 over F2: 1,1,2,2") {
    auto factors = chop(regular_module(symmetric_group(3), Field::get(2)));
    CHECK(factor_dims(factors) == std::multiset<size_t>{1, 1, 2, 2});
    // the two 2-dim factors are isomorphic
    std::vector<const GModule*> twos;
    for (const auto& f : factors)
        if (f.dim() == 2) twos.push_back(&f);
    REQUIRE(twos.size() == 2);
    CHECK(is_iso(*twos[0], *twos[1]));
}

TEST_CASE("chop is stable across rerandomization") {
    PermGroup A4 = alternating_group(4);
    const Field& F2 = Field::get(2);
    GModule reg = regular_module(A4, F2);
    auto base = factor_dims(chop(reg, 1));
    for (uint64_t seed = 2; seed <= 11; ++seed) CHECK(factor_dims(chop(reg, seed)) == base);
}

TEST_CASE("is_iso basics") {
    PermGroup C3 = cyclic_group(3);
    const Field& F2 = Field::get(2);
    GModule reg = regular_module(C3, F2);
    auto factors = chop(reg);
    REQUIRE(factors.size() == 2);  // trivial + 2-dim
    const GModule& triv = factors[0].dim() == 1 ? factors[0] : factors[1];
    const GModule& two = factors[0].dim() == 2 ? factors[0] : factors[1];
    CHECK(is_iso(triv, triv));
    CHECK(is_iso(two, two));
    CHECK(!is_iso(triv, two));
}

TEST_CASE("endo field sizes") {
    PermGroup C3 = cyclic_group(3);
    const Field& F2 = Field::get(2);
    auto factors = chop(regular_module(C3, F2));
    for (const auto& f : factors) {
        if (f.dim() == 1) CHECK(endo_size(f) == 2);   // trivial module over F_p: p
        if (f.dim() == 2) CHECK(endo_size(f) == 4);   // commutant F4
    }
    PermGroup S3 = symmetric_group(3);
    for (const auto& f : chop(regular_module(S3, F2)))
        if (f.dim() == 2) CHECK(endo_size(f) == 2);   // absolutely irreducible
}

TEST_CASE("census of S3 mod 2: trivial and the 2-dim, both with q_M = 2") {
    IrrCensus c = irr_census(symmetric_group(3), 2);
    REQUIRE(c.classes.size() == 2);
    CHECK(c.classes[0].module.dim() == 1);
    CHECK(c.classes[0].endo_size == 2);
    CHECK(c.classes[1].module.dim() == 2);
    CHECK(c.classes[1].endo_size == 2);
    CHECK(c.complete);
}

TEST_CASE("census of C3 mod 3: only the trivial module") {
    IrrCensus c = irr_census(cyclic_group(3), 3);
    REQUIRE(c.classes.size() == 1);
    CHECK(c.classes[0].module.dim() == 1);
}

TEST_CASE("census of C3 mod 2: trivial plus one 2-dim with endo F4 (r = 1)") {
    IrrCensus c = irr_census(cyclic_group(3), 2);
    REQUIRE(c.classes.size() == 2);
    CHECK(c.classes[1].module.dim() == 2);
    CHECK(c.classes[1].endo_size == 4);
    CHECK(c.classes[1].r == 1);
    CHECK(c.classes[1].f == 2);
}

TEST_CASE("splitting classes of the C3 mod 2 nontrivial class over F4") {
    IrrCensus c = irr_census(cyclic_group(3), 2);
    const Field& F4 = Field::get(2, 2);
    auto split = splitting_classes(c.classes[1], F4);
    REQUIRE(split.size() == 2);  // two Galois-conjugate 1-dim classes
    CHECK(split[0].module.dim() == 1);
    CHECK(split[1].module.dim() == 1);
    CHECK(!is_iso(split[0].module, split[1].module));
}

TEST_CASE("outer tensor square of the 2-dim S3 irreducible is irreducible over S3xS3") {
    PermGroup S3 = symmetric_group(3);
    const Field& F2 = Field::get(2);
    Mat t = Mat::from_rows(F2, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    Mat cy = Mat::from_rows(F2, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
    GModule nat(S3, F2, 3, {t, cy});
    GModule two = quotient_module(nat, spin(nat, {{1, 1, 1}}));
    GModule tensor = tensor_outer(two, two);
    CHECK(tensor.dim() == 4);
    CHECK(tensor.group().order_u64() == 36);
    auto factors = chop(tensor);
    REQUIRE(factors.size() == 1);
    CHECK(factors[0].dim() == 4);
    CHECK(is_irreducible(tensor));
}
