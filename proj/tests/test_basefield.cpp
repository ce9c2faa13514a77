#include <doctest.h>

#include <random>

#include "ramify/basefield.hpp"

using namespace ramify;

namespace {

BaseFieldConfig q2{2, Backend::char_zero, 1, 20};
BaseFieldConfig q3{3, Backend::char_zero, 1, 20};
BaseFieldConfig q3r{3, Backend::char_zero, 2, 20};
BaseFieldConfig f3t{3, Backend::char_p, 1, 20};

long finite_val(const FieldElement& e) {
    Valuation v = e.valuation();
    REQUIRE(v.is_finite());
    return v.value;
}

}  // namespace

TEST_CASE("integer embeddings carry the expected valuation") {
    CHECK(finite_val(FieldElement::from_integer(q2, 6)) == 1);
    CHECK(finite_val(FieldElement::from_integer(q3r, 3)) == 2);
    CHECK(FieldElement::from_integer(f3t, 3).is_exact_zero());
    CHECK(FieldElement::from_integer(f3t, 5).valuation().is_finite());
    CHECK(finite_val(FieldElement::from_integer(f3t, 5)) == 0);
}

TEST_CASE("ring identities and valuation additivity") {
    FieldElement a = FieldElement::from_integer(q2, 6);
    CHECK(a + FieldElement::zero(q2) == a);
    CHECK(a * FieldElement::one(q2) == a);
    FieldElement prod = a * a;
    CHECK(finite_val(prod) == 2);
    CHECK(prod.coords()[0] == 36);
}

TEST_CASE("three-way valuation answer") {
    CHECK(FieldElement::zero(q2).valuation().is_infinite());
    FieldElement four = FieldElement::from_integer(q2, 4).truncated(10);
    CHECK(finite_val(four) == 2);
    FieldElement hidden = FieldElement::from_integer(q2, 16).truncated(3);
    CHECK(hidden.valuation().is_unknown());
    CHECK(hidden.indistinguishable_from_zero());
    CHECK(!hidden.is_exact_zero());
}

TEST_CASE("congruence predicate and its precision contract") {
    FieldElement a = FieldElement::from_integer(q2, 2);
    FieldElement b = FieldElement::from_integer(q2, 10);
    CHECK(a.congruent(a, 15));
    CHECK(a.congruent(b, 3));
    CHECK(!a.congruent(b, 4));
    FieldElement low = b.truncated(2);
    CHECK_THROWS_AS((void)low.congruent(a, 3), precision_too_low);
}

TEST_CASE("unit inversion") {
    BaseFieldConfig q3p4{3, Backend::char_zero, 1, 4};
    FieldElement two = FieldElement::from_integer(q3p4, 2);
    FieldElement inv = two.inv_unit();
    CHECK(inv.precision() == 4);
    CHECK(inv.coords()[0] == 41);  // 2 * 41 = 82 = 1 mod 81
    CHECK((two * inv).congruent(FieldElement::one(q3p4), 4));

    CHECK(FieldElement::one(q2).inv_unit() == FieldElement::one(q2).truncated(20));
    CHECK_THROWS_AS(FieldElement::from_integer(q3p4, 3).inv_unit(), not_a_unit);
    CHECK_THROWS_AS(FieldElement::from_integer(q2, 6).truncated(0).inv_unit(),
                    not_a_unit);
}

TEST_CASE("inversion works in every backend") {
    for (const BaseFieldConfig& cfg : {q2, q3, q3r, f3t}) {
        FieldElement u = FieldElement::one(cfg) +
                         FieldElement::uniformizer(cfg).mul_scalar(2);
        FieldElement v = u.inv_unit();
        CHECK((u * v).congruent(FieldElement::one(cfg), cfg.precision));
    }
}

TEST_CASE("from_integer is a ring homomorphism (random pairs)") {
    std::mt19937_64 rng(12345);
    for (const BaseFieldConfig& cfg : {q2, q3r, f3t}) {
        for (int t = 0; t < 200; ++t) {
            long x = static_cast<long>(rng() % 2001) - 1000;
            long y = static_cast<long>(rng() % 2001) - 1000;
            FieldElement fx = FieldElement::from_integer(cfg, x);
            FieldElement fy = FieldElement::from_integer(cfg, y);
            CHECK(fx + fy == FieldElement::from_integer(cfg, x + y));
            CHECK(fx - fy == FieldElement::from_integer(cfg, x - y));
            CHECK(fx * fy ==
                  FieldElement::from_integer(cfg, mpz_class(x) * mpz_class(y)));
        }
    }
}

TEST_CASE("valuation rules on random elements") {
    std::mt19937_64 rng(999);
    for (const BaseFieldConfig& cfg : {q2, q3, q3r, f3t}) {
        FieldElement pi = FieldElement::uniformizer(cfg);
        for (int t = 0; t < 100; ++t) {
            long va = static_cast<long>(rng() % 4);
            long vb = static_cast<long>(rng() % 4);
            long ua = 1 + static_cast<long>(rng() % (cfg.p - 1 ? cfg.p - 1 : 1));
            long ub = 1 + static_cast<long>(rng() % (cfg.p - 1 ? cfg.p - 1 : 1));
            FieldElement a = pi.pow_u(va).mul_scalar(ua);
            FieldElement b = pi.pow_u(vb).mul_scalar(ub);
            CHECK(finite_val(a * b) == finite_val(a) + finite_val(b));
            Valuation vsum = (a + b).valuation();
            if (vsum.is_finite())
                CHECK(vsum.value >= std::min(finite_val(a), finite_val(b)));
        }
    }
}

TEST_CASE("precision propagation never claims too much") {
    FieldElement a = FieldElement::from_integer(q2, 3).truncated(5);
    FieldElement b = FieldElement::from_integer(q2, 7).truncated(8);
    CHECK((a + b).precision() == 5);
    CHECK((a * b).precision() == 5);  // min(0+8, 0+5)
    FieldElement c = FieldElement::from_integer(q2, 4).truncated(6);  // v = 2
    CHECK((a * c).precision() == std::min(0 + 6, 2 + 5));
    CHECK((a * FieldElement::zero(q2)).is_exact_zero());
    FieldElement exact = FieldElement::from_integer(q2, 12);  // v = 2, exact
    CHECK((exact * a).precision() == 2 + 5);
}

TEST_CASE("ramified coordinates reduce per their own depth") {
    // known mod M^5 with e_K = 2: coordinate 0 mod p^3, coordinate 1 mod p^2
    FieldElement x = FieldElement::from_coords(q3r, {mpz_class(28), mpz_class(10)}, 5);
    CHECK(x.coords()[0] == 1);
    CHECK(x.coords()[1] == 1);
    // pi^2 = p folds down
    FieldElement pi = FieldElement::uniformizer(q3r);
    CHECK(pi * pi == FieldElement::from_integer(q3r, 3));
}

TEST_CASE("element strings parse back") {
    FieldElement a = FieldElement::from_integer(q2, -17);
    CHECK(FieldElement::parse(q2, a.to_string()) == a);

    FieldElement b = FieldElement::from_coords(q3r, {mpz_class(4), mpz_class(-2)}, -1);
    CHECK(FieldElement::parse(q3r, b.to_string()) == b);

    FieldElement c = FieldElement::from_coords(
        f3t, {mpz_class(2), mpz_class(0), mpz_class(1), mpz_class(2)}, 7);
    CHECK(FieldElement::parse(f3t, c.to_string()) == c);
    CHECK(c.to_string() == "2 + t^2 + 2*t^3 (mod t^7)");

    CHECK_THROWS_AS(FieldElement::parse(q2, "1,2"), parse_error);
    CHECK_THROWS_AS(FieldElement::parse(q2, "t + 1"), parse_error);
}

TEST_CASE("config mismatch is rejected") {
    CHECK_THROWS_AS(FieldElement::one(q2) + FieldElement::one(q3), config_mismatch);
}
