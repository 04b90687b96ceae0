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
    std::vector<int> w;
    int pattern[] = {1, 0, 2, 1, 0, 2, 1, 1};
    for (int k = 0; k < 8; k++) {
        w.push_back(pattern[k]);
        IExpr::Key key; key.bword = w; key.kexp.assign(3, 0);
        IExpr ex; ex.add_term(key, FieldElem(1));
        auto t0 = Clock::now();
        NCPoly p = ctx.embed(ex);
        auto t1 = Clock::now();
        printf("len %d: %.3fs nfterms=%zu\n", k + 1, secs(t0, t1), p.size());
        fflush(stdout);
    }
    return 0;
}
