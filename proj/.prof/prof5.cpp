#include <chrono>
#include <cstdio>
#include "iqt/iqg.hpp"
using namespace iqt;
using Clock = std::chrono::steady_clock;
double secs(Clock::time_point a, Clock::time_point b) { return std::chrono::duration<double>(b - a).count(); }
void suite(char t, int r, bool nt, Level lev, bool reduced) {
    DiagramSpec s; s.type = t; s.rank = r; s.tau_nontrivial = nt;
    auto t0 = Clock::now();
    auto rd = build_root_datum(s);
    std::vector<FieldElem> vs;
    if (reduced) vs = distinguished_parameter(rd.quiver);
    AmbientAlgebra amb(rd, reduced, vs, 12);
    auto t1 = Clock::now();
    IContext ctx(rd, amb, lev);
    auto t2 = Clock::now();
    bool all = true;
    int pairs = 0;
    for (size_t a = 0; a < rd.reps.size(); a++)
        for (size_t b = a + 1; b < rd.reps.size(); b++) {
            auto rep = verify_braid_pair(ctx, rd.reps[a], rd.reps[b]);
            all = all && rep.ok;
            pairs++;
        }
    auto t3 = Clock::now();
    printf("%c%d nt=%d %s: ambient %.1fs ictx %.1fs suite(%d pairs) %.1fs ok=%d\n", t, r, (int)nt,
           lev == Level::Universal ? "univ" : "param", secs(t0,t1), secs(t1,t2), pairs, secs(t2,t3), (int)all);
    fflush(stdout);
}
int main() {
    suite('A', 2, false, Level::Universal, false);
    suite('A', 3, false, Level::Universal, false);
    suite('A', 3, true, Level::Universal, false);
    suite('A', 4, false, Level::Universal, false);
    suite('D', 4, false, Level::Universal, false);
    suite('D', 4, true, Level::Universal, false);
    suite('A', 5, true, Level::Universal, false);
    suite('A', 4, false, Level::Parameter, true);
    suite('A', 5, true, Level::Parameter, true);
    return 0;
}
