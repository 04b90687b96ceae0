#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "iqt/iqg.hpp"

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

TEST_CASE("embedding the generators") {
    auto rd = build_root_datum(spec('A', 1, false));
    AmbientAlgebra amb(rd, false, {}, 8);
    IContext ctx(rd, amb, Level::Universal);
    // B = F + E Kt'
    NCPoly expect = NCPoly::monomial({amb.F(0)}) + NCPoly::monomial({amb.E(0), amb.Kp(0)});
    CHECK(ctx.embed(ctx.B(0)) == amb.nf(expect));
    CHECK(ctx.embed(ctx.one()) == NCPoly::one());
}

TEST_CASE("kt is central in the split case") {
    auto rd = build_root_datum(spec('A', 2, false));
    AmbientAlgebra amb(rd, false, {}, 10);
    IContext ctx(rd, amb, Level::Universal);
    std::vector<int> e{1, 0};
    for (int j = 0; j < 2; j++) {
        IExpr lhs = ctx.mul(ctx.cartan(e), ctx.B(j));
        IExpr rhs = ctx.mul(ctx.B(j), ctx.cartan(e));
        CHECK(ctx.equal(lhs, rhs));
    }
}

TEST_CASE("kt_i kt_tau(i) is central in the quasi-split case") {
    auto rd = build_root_datum(spec('A', 3, true, "1->2,3->2"));
    AmbientAlgebra amb(rd, false, {}, 10);
    IContext ctx(rd, amb, Level::Universal);
    std::vector<int> e{1, 0, 1}; // kt_1 kt_3 with tau(1)=3
    for (int j = 0; j < 3; j++) {
        CHECK(ctx.equal(ctx.mul(ctx.cartan(e), ctx.B(j)), ctx.mul(ctx.B(j), ctx.cartan(e))));
    }
}

TEST_CASE("embedding is multiplicative") {
    auto rd = build_root_datum(spec('A', 2, false));
    AmbientAlgebra amb(rd, false, {}, 10);
    IContext ctx(rd, amb, Level::Universal);
    IExpr x = ctx.mul(ctx.B(0), ctx.B(1));
    IExpr y = ctx.B(0);
    CHECK(amb.nf(ctx.embed(ctx.mul(x, y)) - amb.nf(ctx.embed(x) * ctx.embed(y))).is_zero());
}

TEST_CASE("split A2 braid relation, universal level") {
    auto rd = build_root_datum(spec('A', 2, false));
    AmbientAlgebra amb(rd, false, {}, 10);
    IContext ctx(rd, amb, Level::Universal);
    // table entry: T_1(B_2) = B_2 B_1 - v B_1 B_2
    IExpr img = ctx.ti_gen_B(0, 1);
    IExpr expect = ctx.mul(ctx.B(1), ctx.B(0)) - ctx.mul(ctx.B(0), ctx.B(1)) * FieldElem::v();
    CHECK(ctx.equal(img, expect));
    auto rep = verify_braid_pair(ctx, 0, 1);
    CHECK(rep.m == 3);
    CHECK(rep.ok);
}

TEST_CASE("quotient-weight equivariance") {
    auto rd = build_root_datum(spec('A', 3, true, "1->2,3->2"));
    AmbientAlgebra amb(rd, false, {}, 10);
    IContext ctx(rd, amb, Level::Universal);
    for (int i : rd.reps)
        for (int j = 0; j < 3; j++) {
            IExpr img = ctx.ti_apply(i, ctx.B(j));
            RootVec w(3, 0);
            w[j] = -1;
            RootVec target = bs_apply(rd.quiver, i, w);
            std::vector<int> folded(3, 0);
            for (int l = 0; l < 3; l++) {
                if (rd.quiver.tau(l) == l)
                    folded[l] = ((target[l] % 2) + 2) % 2;
                else if (l < rd.quiver.tau(l))
                    folded[l] = target[l] - target[rd.quiver.tau(l)];
            }
            for (auto& [k, c] : img.terms()) CHECK(ctx.quotient_weight(k) == folded);
        }
}

TEST_CASE("A3 quasi-split: braid m=4 holds on all generators") {
    auto rd = build_root_datum(spec('A', 3, true, "1->2,3->2"));
    AmbientAlgebra amb(rd, false, {}, 12);
    IContext ctx(rd, amb, Level::Universal);
    auto rep = verify_braid_pair(ctx, 0, 1);
    CHECK(rep.m == 4);
    for (auto& g : rep.per_generator) {
        INFO(g.gen);
        CHECK(g.equal);
    }
    CHECK(rep.ok);
}

TEST_CASE("inverse round trip on generators") {
    auto rd = build_root_datum(spec('A', 2, false));
    AmbientAlgebra amb(rd, false, {}, 10);
    IContext ctx(rd, amb, Level::Universal);
    for (int i = 0; i < 2; i++)
        for (int j = 0; j < 2; j++) {
            IExpr inv = ctx.ti_inverse_apply(i, ctx.B(j));
            CHECK(ctx.equal(ctx.ti_apply(i, inv), ctx.B(j)));
            IExpr fwd = ctx.ti_apply(i, ctx.B(j));
            CHECK(ctx.equal(ctx.ti_inverse_apply(i, fwd), ctx.B(j)));
        }
    // Cartan: T_i^-1(kt_i) = b_i^-2 kt_i^-1
    std::vector<int> e{1, 0};
    IExpr inv = ctx.ti_inverse_apply(0, ctx.cartan(e));
    std::vector<int> em{-1, 0};
    IExpr expect = ctx.cartan(em) * (-FieldElem::v_pow(2)).pow(-2);
    CHECK(ctx.equal(inv, expect));
}

TEST_CASE("split A2 parameter level at the distinguished parameter") {
    auto rd = build_root_datum(spec('A', 2, false));
    auto vs = distinguished_parameter(rd.quiver);
    AmbientAlgebra amb(rd, true, vs, 10);
    IContext ctx(rd, amb, Level::Parameter);
    IExpr img = ctx.ti_gen_B(0, 1);
    IExpr expect = ctx.mul(ctx.B(1), ctx.B(0)) - ctx.mul(ctx.B(0), ctx.B(1)) * FieldElem::v();
    CHECK(ctx.equal(img, expect));
    auto rep = verify_braid_pair(ctx, 0, 1);
    CHECK(rep.ok);
}

TEST_CASE("split A2 parameter level at a non-distinguished parameter") {
    auto rd = build_root_datum(spec('A', 2, false));
    std::vector<FieldElem> vs{-FieldElem::v_pow(-4), -FieldElem::v_pow(-4)};
    AmbientAlgebra amb(rd, true, vs, 10);
    IContext ctx(rd, amb, Level::Parameter);
    auto rep = verify_braid_pair(ctx, 0, 1);
    CHECK(rep.ok);
    std::vector<FieldElem> a;
    for (int l = 0; l < 2; l++) a.push_back(sqrt_unit((-FieldElem::v_pow(-2)) / vs[l]));
    CHECK(a[0] == FieldElem::v());
    // conjugation identity: T_i = phi T_{diamond,i} phi^-1 on generators
    auto vsd = distinguished_parameter(rd.quiver);
    AmbientAlgebra ambd(rd, true, vsd, 10);
    IContext ctxd(rd, ambd, Level::Parameter);
    std::vector<FieldElem> ainv;
    for (auto& x : a) ainv.push_back(x.inv());
    for (int i = 0; i < 2; i++)
        for (int j = 0; j < 2; j++) {
            IExpr lhs = ctx.ti_gen_B(i, j);
            IExpr rhs =
                ctx.phi_param_change(ctxd.ti_apply(i, ctxd.phi_param_change(ctxd.B(j), ainv)), a);
            CHECK(ctx.equal(lhs, rhs));
        }
}

TEST_CASE("reduced ideal stability at the distinguished parameter") {
    auto rd = build_root_datum(spec('A', 2, false));
    AmbientAlgebra reduced(rd, true, distinguished_parameter(rd.quiver), 10);
    for (int i = 0; i < 2; i++) {
        auto rep = reduced_ideal_stability(rd, reduced, i, 10);
        CHECK(rep.ok);
    }
    auto rd3 = build_root_datum(spec('A', 3, true, "1->2,3->2"));
    AmbientAlgebra red3(rd3, true, distinguished_parameter(rd3.quiver), 12);
    auto rep3 = reduced_ideal_stability(rd3, red3, 0, 12);
    CHECK(rep3.ok);
}

TEST_CASE("q-root vectors for split A2") {
    auto rd = build_root_datum(spec('A', 2, false, "2->1"));
    auto vs = distinguished_parameter(rd.quiver);
    AmbientAlgebra amb(rd, true, vs, 10);
    IContext ctx(rd, amb, Level::Parameter);
    auto seq = i_admissible_complete(rd.quiver);
    auto roots = q_root_vectors(ctx, seq, vs);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].beta == RootVec{1, 0});
    CHECK(ctx.equal(roots[0].expr, ctx.B(seq.indices[0])));
    CHECK(roots[1].beta == RootVec{1, 1});
    CHECK(ctx.equal(ctx.ti_apply(seq.indices[0], roots[1].expr), ctx.B(seq.indices[1])));
}

TEST_CASE("pbw independence and spanning for split A2") {
    auto rd = build_root_datum(spec('A', 2, false, "2->1"));
    auto vs = distinguished_parameter(rd.quiver);
    AmbientAlgebra amb(rd, true, vs, 10);
    IContext ctx(rd, amb, Level::Parameter);
    auto seq = i_admissible_complete(rd.quiver);
    auto roots = q_root_vectors(ctx, seq, vs);
    auto rep = pbw_check(ctx, roots, 2, 2);
    CHECK(rep.monomials == 10); // stars and bars: lambda over 3 roots, sum <= 2
    CHECK(rep.rank == 10);
    CHECK(rep.independent);
    CHECK(rep.spanning_ok);
}

TEST_CASE("orientation independence of the braid suite") {
    for (auto orient : {"2->1", "1->2"}) {
        auto rd = build_root_datum(spec('A', 2, false, orient));
        AmbientAlgebra amb(rd, false, {}, 10);
        IContext ctx(rd, amb, Level::Universal);
        CHECK(verify_braid_pair(ctx, 0, 1).ok);
    }
}
