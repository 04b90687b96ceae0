#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "iqt/freealg.hpp"

using namespace iqt;

TEST_CASE("two commuting letters") {
    Alphabet ab;
    Gen x = ab.add("x", {1, 0});
    Gen y = ab.add("y", {0, 1});
    NCPoly rel = NCPoly::monomial({x, y}) - NCPoly::monomial({y, x});
    RewriteSystem rs(ab, {rel}, 8);
    // normal forms are sorted words
    NCPoly p = rs.normal_form(NCPoly::monomial({y, x, y, x}));
    CHECK(p == NCPoly::monomial({x, x, y, y}));
    CHECK(rs.recheck_certificate());
}

TEST_CASE("v_comm expansion") {
    Alphabet ab;
    Gen x = ab.add("x", {1, 0});
    Gen y = ab.add("y", {0, 1});
    NCPoly bx = NCPoly::monomial({x}), by = NCPoly::monomial({y});
    CHECK(v_comm(bx, bx, FieldElem(1)).is_zero());
    NCPoly c = v_comm(bx, by, FieldElem::v());
    CHECK(c == NCPoly::monomial({x, y}) - NCPoly::monomial({y, x}) * FieldElem::v());
    // with three distinct letters the nested commutator has four terms
    Alphabet ab3;
    Gen a = ab3.add("a", {1, 0, 0});
    Gen b = ab3.add("b", {0, 1, 0});
    Gen d = ab3.add("d", {0, 0, 1});
    NCPoly nested = v_comm(v_comm(NCPoly::monomial({a}), NCPoly::monomial({b}), FieldElem::v()),
                           NCPoly::monomial({d}), FieldElem::v());
    CHECK(nested.size() == 4);
    // repeated letters collapse one word
    NCPoly sq = v_comm(v_comm(by, bx, FieldElem::v()), by, FieldElem::v());
    CHECK(sq.size() == 3);
}

TEST_CASE("unit rules for declared inverses") {
    Alphabet ab;
    Gen k = ab.add_invertible("k", {0});
    Gen ki = (Gen)ab.inverse(k);
    RewriteSystem rs(ab, {}, 6);
    CHECK(rs.normal_form(NCPoly::monomial({k, ki})) == NCPoly::one());
    CHECK(rs.normal_form(NCPoly::monomial({ki, k, k})) == NCPoly::monomial({k}));
}

TEST_CASE("weight homogeneity is enforced") {
    Alphabet ab;
    Gen x = ab.add("x", {1});
    NCPoly bad = NCPoly::monomial({x}) - NCPoly::one();
    CHECK_THROWS_AS(RewriteSystem(ab, {bad}, 6), Error);
}

TEST_CASE("normal form is idempotent and sound on a quantum plane") {
    Alphabet ab;
    Gen x = ab.add("x", {1, 0});
    Gen y = ab.add("y", {0, 1});
    // yx = v xy, oriented as a rule on the larger word
    NCPoly rel = NCPoly::monomial({y, x}) - NCPoly::monomial({x, y}) * FieldElem::v();
    RewriteSystem rs(ab, {rel}, 10);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> letter(0, 1);
    for (int t = 0; t < 20; t++) {
        Word w;
        for (int i = 0; i < 6; i++) w.push_back(letter(rng) ? y : x);
        NCPoly p = rs.normal_form(NCPoly::monomial(w));
        CHECK(rs.normal_form(p) == p);
        CHECK(p.size() == 1); // single sorted monomial times a power of v
        CHECK(rs.normal_form(rel).is_zero());
    }
}

TEST_CASE("linear solve") {
    Alphabet ab;
    Gen x = ab.add("x", {1, 0});
    Gen y = ab.add("y", {0, 1});
    RewriteSystem rs(ab, {}, 6);
    NCPoly bx = NCPoly::monomial({x}), by = NCPoly::monomial({y});
    auto res = linear_solve({bx + by}, {bx, by}, rs);
    REQUIRE(res[0].solvable);
    CHECK(res[0].coeffs[0] == FieldElem(1));
    CHECK(res[0].coeffs[1] == FieldElem(1));
    auto bad = linear_solve({NCPoly::monomial({x, y})}, {bx, by}, rs);
    CHECK(!bad[0].solvable);
    CHECK(nf_rank({bx, by, bx + by}, rs) == 2);
    CHECK(nf_rank_specialized({bx, by, bx + by}, rs, Rat(7, 5)) == 2);
}
