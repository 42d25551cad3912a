#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "progen/bigint.hpp"
#include "progen/field.hpp"
#include "progen/rational.hpp"

using namespace progen;

TEST_CASE("bigint arithmetic basics") {
    BigInt a = BigInt::from_string("123456789012345678901234567890");
    BigInt b = BigInt::from_string("98765432109876543210");
    CHECK((a * b).str() == "12193263113702179522496570642237463801111263526900");
    CHECK((a + b).str() == "123456789111111111011111111100");
    CHECK((a - a).str() == "0");
    CHECK((-a).str() == "-123456789012345678901234567890");
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK((q * b + r) == a);
    CHECK(BigInt::pow(BigInt(2), 100).str() == "1267650600228229401496703205376");
    CHECK(BigInt::gcd(BigInt(48), BigInt(36)).str() == "12");
    CHECK(BigInt(-7) + BigInt(7) == BigInt(0));
    CHECK(BigInt(-7) * BigInt(-6) == BigInt(42));
    CHECK(BigInt(1) < BigInt(2));
    CHECK(BigInt(-5) < BigInt(3));
}

TEST_CASE("rational normalization and serialization") {
    Rational r(BigInt(6), BigInt(8));
    CHECK(r.str() == "3/4");
    CHECK((r + Rational(BigInt(1), BigInt(4))).str() == "1/1");
    CHECK((r * Rational(BigInt(2), BigInt(3))).str() == "1/2");
    CHECK(Rational::parse("3/4") == r);
    CHECK(Rational::parse("-6/-8") == r);
    CHECK(Rational(0) < r);
    CHECK(Rational(BigInt(1), BigInt(3)).to_double() == doctest::Approx(1.0 / 3));
}

TEST_CASE("prime field arithmetic") {
    const Field& F5 = Field::get(5);
    CHECK(F5.add(3, 4) == 2);
    CHECK(F5.mul(3, 4) == 2);
    CHECK(F5.neg(2) == 3);
    CHECK(F5.inv(3) == 2);
    for (fel a = 1; a < 5; ++a) CHECK(F5.mul(a, F5.inv(a)) == 1);
}

TEST_CASE("canonical modulus is the least irreducible") {
    // F4 = F2[x]/(x^2+x+1): coefficients c0=1, c1=1.
    auto m4 = canonical_modulus(2, 2);
    CHECK(m4 == std::vector<uint32_t>{1, 1, 1});
    // F8: x^3+x+1 (c0=1,c1=1,c2=0).
    auto m8 = canonical_modulus(2, 3);
    CHECK(m8 == std::vector<uint32_t>{1, 1, 0, 1});
    // F9 over F3: least c0 with irreducibility: x^2+1.
    auto m9 = canonical_modulus(3, 2);
    CHECK(m9 == std::vector<uint32_t>{1, 0, 1});
}

TEST_CASE("extension field tables satisfy field axioms") {
    for (uint32_t q : {4u, 8u, 9u, 49u}) {
        const Field& F = Field::for_q(q);
        CHECK(F.q() == q);
        // multiplicative inverses
        for (fel a = 1; a < q; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
        // associativity, distributivity spot checks across all triples for small q
        if (q <= 9) {
            for (fel a = 0; a < q; ++a)
                for (fel b = 0; b < q; ++b)
                    for (fel c = 0; c < q; ++c) {
                        CHECK(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
                        CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                    }
        }
        // Frobenius is additive
        for (fel a = 0; a < std::min(q, 30u); ++a)
            for (fel b = 0; b < std::min(q, 30u); ++b)
                CHECK(F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b)));
    }
}

TEST_CASE("same (p,e) yields the identical canonical field object") {
    const Field& a = Field::get(2, 2);
    const Field& b = Field::for_q(4);
    CHECK(&a == &b);
    CHECK(a.spec().modulus == b.spec().modulus);
}

TEST_CASE("field construction rejects invalid parameters") {
    CHECK_THROWS(Field::get(4));        // p must be prime
    CHECK_THROWS(Field::get(6, 2));
    CHECK_THROWS(Field::for_q(12));     // not a prime power
    CHECK_THROWS(Field::get(2, 0));     // degree must be >= 1
    CHECK_THROWS(Field::get(3, 9));     // extension fields capped at q <= 256
}
