#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "iqt/scalars.hpp"

using namespace iqt;

namespace {

FieldElem random_elem(std::mt19937& rng) {
    std::uniform_int_distribution<int> exp(-3, 3), coef(-4, 4), nterms(1, 3);
    auto poly = [&]() {
        LaurentPoly p;
        int k = nterms(rng);
        for (int i = 0; i < k; i++) p = p + LaurentPoly::u_pow(exp(rng), Rat(coef(rng)));
        return p;
    };
    LaurentPoly den = poly();
    while (den.is_zero()) den = poly();
    return FieldElem(poly(), den);
}

} // namespace

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(12345);
    for (int t = 0; t < 60; t++) {
        FieldElem x = random_elem(rng), y = random_elem(rng), z = random_elem(rng);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + (-x) == FieldElem(0));
        if (!x.is_zero()) CHECK(x * x.inv() == FieldElem(1));
    }
}

TEST_CASE("defining relation u^2 = v") {
    CHECK(FieldElem::u() * FieldElem::u() == FieldElem::v());
    FieldElem vm = FieldElem::v() - FieldElem::v_pow(-1);
    CHECK(vm * vm.inv() == FieldElem(1));
    CHECK(FieldElem::v() + (-FieldElem::v()) == FieldElem(0));
}

TEST_CASE("normalization is canonical") {
    // (v^2-1)/(v-1) = v+1 after gcd reduction
    FieldElem a(LaurentPoly::v_pow(2) - LaurentPoly(Rat(1)),
                LaurentPoly::v_pow(1) - LaurentPoly(Rat(1)));
    FieldElem b = FieldElem::v() + FieldElem(1);
    CHECK(a == b);
    // denominator monic with lowest exponent zero
    FieldElem c(LaurentPoly(Rat(1)), LaurentPoly::v_pow(-2, Rat(3)));
    CHECK(c.den().is_one());
    CHECK(c == FieldElem::v_pow(2) * FieldElem(Rat(1, 3)));
}

TEST_CASE("specialize at v = sqrt(q)") {
    CHECK(specialize(FieldElem::v_pow(2), 2) == QuadNum(2, 0, 2));
    // -1/(v^2-1) at q=2 -> -1
    FieldElem x = -(FieldElem::v_pow(2) - FieldElem(1)).inv();
    CHECK(specialize(x, 2) == QuadNum(-1, 0, 2));
    // v/(v^2-1) at q=3 -> sqrt(3)/2
    FieldElem y = FieldElem::v() / (FieldElem::v_pow(2) - FieldElem(1));
    CHECK(specialize(y, 3) == QuadNum(0, Rat(1, 2), 3));
    CHECK_THROWS_AS(specialize(FieldElem::u(), 2), Error);
    CHECK_THROWS_AS(specialize((FieldElem::v_pow(2) - FieldElem(2)).inv(), 2), Error);
}

TEST_CASE("specialize is a ring homomorphism") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> exp(-2, 2), coef(-3, 3);
    auto rand_even = [&]() {
        LaurentPoly p;
        for (int i = 0; i < 3; i++) p = p + LaurentPoly::v_pow(exp(rng), Rat(coef(rng)));
        LaurentPoly d;
        d = d + LaurentPoly::v_pow(0, Rat(1)) + LaurentPoly::v_pow(1, Rat(coef(rng)));
        return FieldElem(p, d);
    };
    for (int t = 0; t < 40; t++) {
        FieldElem x = rand_even(), y = rand_even();
        for (long q : {2L, 3L}) {
            CHECK(specialize(x * y, q) == specialize(x, q) * specialize(y, q));
            CHECK(specialize(x + y, q) == specialize(x, q) + specialize(y, q));
        }
    }
}

TEST_CASE("sqrt_unit") {
    // sqrt(-v^2 * (-v^-2)) = sqrt(1) = 1
    FieldElem r = -FieldElem::v_pow(2) * (-FieldElem::v_pow(-2));
    CHECK(sqrt_unit(r) == FieldElem(1));
    CHECK(sqrt_unit(FieldElem::v_pow(2)) == FieldElem::v());
    CHECK(sqrt_unit(FieldElem::v()) == FieldElem::u());
    CHECK_THROWS_AS(sqrt_unit(-FieldElem::v_pow(4)), Error);
}

TEST_CASE("textual round trip") {
    for (const char* s : {"-v^-2", "u^3", "v", "1", "(v - v^-1)/(v^2 - 1)", "3/2*v + u"}) {
        FieldElem x = parse_field_elem(s);
        CHECK(parse_field_elem(x.str()) == x);
    }
    CHECK(parse_field_elem("-v^-2") == -FieldElem::v_pow(-2));
    CHECK(parse_field_elem("u^2") == FieldElem::v());
    CHECK((-FieldElem::v_pow(-2)).str() == "-v^-2");
}

TEST_CASE("quantum integers") {
    CHECK(quantum_int(2) == FieldElem::v() + FieldElem::v_pow(-1));
    CHECK(quantum_binomial(2, 1) == quantum_int(2));
    CHECK(quantum_binomial(3, 2) == quantum_int(3) * quantum_int(2) / quantum_int(2));
}

TEST_CASE("quadnum arithmetic") {
    QuadNum x(1, 2, 2), y(-3, Rat(1, 2), 2);
    CHECK((x * y) * x.inv() == y);
    CHECK(QuadNum::sqrtq_pow(3, 2) == QuadNum(0, 2, 2));
    CHECK(QuadNum::sqrtq_pow(-2, 3) == QuadNum(Rat(1, 3), 0, 3));
}
