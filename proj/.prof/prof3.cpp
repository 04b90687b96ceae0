#include <chrono>
#include <cstdio>
#include "iqt/iqg.hpp"
using namespace iqt;
using Clock = std::chrono::steady_clock;
double secs(Clock::time_point a, Clock::time_point b) { return std::chrono::duration<double>(b - a).count(); }
int main() {
    DiagramSpec s; s.type = 'A'; s.rank = 3; s.tau_nontrivial = true;
    s.orientation = parse_orientation("1->2,3->2", 3);
    auto rd = build_root_datum(s);
    AmbientAlgebra amb(rd, false, {}, 12);
    IContext ctx(rd, amb, Level::Universal);
    auto t2 = Clock::now();
    IExpr x = ctx.ti_apply(0, ctx.ti_apply(1, ctx.ti_apply(0, ctx.ti_apply(1, ctx.B(1)))));
    IExpr y = ctx.ti_apply(1, ctx.ti_apply(0, ctx.ti_apply(1, ctx.ti_apply(0, ctx.B(1)))));
    auto t3 = Clock::now();
    printf("chains: %.2fs terms %zu %zu\n", secs(t2,t3), x.terms().size(), y.terms().size());
    fflush(stdout);
    IExpr d = x - y;
    printf("difference terms: %zu\n", d.terms().size());
    fflush(stdout);
    ctx.warm_cache({d});
    auto t4 = Clock::now();
    printf("warm: %.2fs\n", secs(t3,t4));
    fflush(stdout);
    NCPoly p = ctx.embed(d);
    auto t5 = Clock::now();
    printf("embed diff: %.2fs zero=%d\n", secs(t4,t5), (int)p.is_zero());
    return 0;
}
