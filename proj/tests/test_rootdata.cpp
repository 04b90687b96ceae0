#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "iqt/rootdata.hpp"

using namespace iqt;

namespace {

DiagramSpec spec(char t, int r, bool nontrivial, const std::string& orient = "") {
    DiagramSpec s;
    s.type = t;
    s.rank = r;
    s.tau_nontrivial = nontrivial;
    if (!orient.empty()) s.orientation = parse_orientation(orient, r);
    return s;
}

} // namespace

TEST_CASE("A3 with diagram involution gives W(B2) of order 8") {
    auto rd = build_root_datum(spec('A', 3, true));
    CHECK(rd.reps == std::vector<int>{0, 1});
    CHECK(rd.wtau.type_label() == "B2");
    CHECK(rd.wtau.group_order() == 8);
    CHECK(rd.wtau.coxeter_m(0, 1) == 4);
}

TEST_CASE("A2 split keeps W(A2)") {
    auto rd = build_root_datum(spec('A', 2, false));
    CHECK(rd.wtau.type_label() == "A2");
    CHECK(rd.wtau.coxeter_m(0, 1) == 3);
    CHECK(rd.wtau.group_order() == 6);
}

TEST_CASE("E6 quasi-split gives F4") {
    auto rd = build_root_datum(spec('E', 6, true));
    CHECK(rd.roots.num_positive() == 36);
    CHECK(rd.wtau.type_label() == "F4");
    CHECK(rd.wtau.group_order() == 1152);
}

TEST_CASE("D4 quasi-split gives B3") {
    auto rd = build_root_datum(spec('D', 4, true));
    CHECK(rd.roots.num_positive() == 12);
    CHECK(rd.wtau.type_label() == "B3");
    CHECK(rd.wtau.group_order() == 48);
}

TEST_CASE("A5 quasi-split gives B3") {
    auto rd = build_root_datum(spec('A', 5, true));
    CHECK(rd.wtau.type_label() == "B3");
}

TEST_CASE("A_even with nontrivial tau is rejected") {
    CHECK_THROWS_AS(build_root_datum(spec('A', 4, true)), Error);
}

TEST_CASE("bs reflection formulas") {
    auto rd = build_root_datum(spec('A', 3, true, "1->2,3->2"));
    const IQuiver& q = rd.quiver;
    // bs_1(alpha_2) = s_1 s_3 (alpha_2) = alpha_1 + alpha_2 + alpha_3
    RootVec a2{0, 1, 0};
    CHECK(bs_apply(q, 0, a2) == RootVec{1, 1, 1});
    // bs_i(alpha_i) = -alpha_i
    RootVec a1{1, 0, 0};
    CHECK(bs_apply(q, 0, a1) == RootVec{-1, 0, 0});
    // involution on the whole root set
    for (auto& r : rd.roots.positive())
        for (int i : rd.reps) CHECK(bs_apply(q, i, bs_apply(q, i, r)) == r);
}

TEST_CASE("bs permutes the signed roots and coxeter matrix matches eq table") {
    for (auto s :
         {spec('A', 2, false), spec('A', 3, true), spec('A', 5, true), spec('D', 4, true),
          spec('D', 4, false), spec('A', 4, false)}) {
        auto rd = build_root_datum(s);
        for (size_t a = 0; a < rd.reps.size(); a++) {
            const Perm& p = rd.wtau.bs_perm((int)a);
            CHECK(perm_order(p) == 2);
        }
    }
}

TEST_CASE("quiver reflection at sinks") {
    auto rd = build_root_datum(spec('A', 3, true, "2->1,2->3"));
    const IQuiver& q = rd.quiver;
    CHECK(q.is_sink(0));
    CHECK(q.is_sink(2));
    CHECK(!q.is_sink(1));
    IQuiver r = q.reflect_at_sink(0); // tau-orbit {1,3}: both flip
    CHECK(r.is_sink(1));
    CHECK(r.is_source(0));
    CHECK(r.is_source(2));
    IQuiver back = r.reflect_at_sink(1);
    CHECK(back.arrows() == q.arrows());
    CHECK_THROWS_AS(q.reflect_at_sink(1), Error);
}

TEST_CASE("euler form") {
    auto rd = build_root_datum(spec('A', 2, false, "1->2"));
    const IQuiver& q = rd.quiver;
    RootVec a1{1, 0}, a2{0, 1};
    CHECK(euler_form(q, a1, a2) == -1);
    CHECK(euler_form(q, a2, a1) == 0);
    CHECK(euler_form(q, a1, a1) == 1);
    // symmetrization equals the Cartan pairing
    for (int i = 0; i < 2; i++)
        for (int j = 0; j < 2; j++) {
            RootVec ei{i == 0, i == 1}, ej{j == 0, j == 1};
            CHECK(euler_form(q, ei, ej) + euler_form(q, ej, ei) == q.cartan(i, j));
        }
}

TEST_CASE("euler form is reflection invariant on pairs (sink model check)") {
    // <bs_l a, bs_l b>_{Q'} = <a, b>_Q for simples a, b, all sinks l
    for (auto s : {spec('A', 3, true, "2->1,2->3"), spec('A', 2, false, "2->1")}) {
        auto rd = build_root_datum(s);
        const IQuiver& q = rd.quiver;
        for (int l = 0; l < q.rank(); l++) {
            if (!q.is_sink(l)) continue;
            IQuiver qp = q.reflect_at_sink(l);
            for (int i = 0; i < q.rank(); i++)
                for (int j = 0; j < q.rank(); j++) {
                    RootVec a = rd.roots.simple(i), b = rd.roots.simple(j);
                    CHECK(euler_form(qp, bs_apply(q, l, a), bs_apply(q, l, b)) ==
                          euler_form(q, a, b));
                }
        }
    }
}

TEST_CASE("orientation parsing") {
    auto ar = parse_orientation("1<-2,2->3", 3);
    CHECK(ar == std::vector<Arrow>{{1, 0}, {1, 2}});
    CHECK_THROWS_AS(parse_orientation("1=>2", 3), Error);
}
