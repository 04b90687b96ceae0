#include <chrono>
#include <cstdio>
#include "iqt/iqg.hpp"
using namespace iqt;
using Clock = std::chrono::steady_clock;
double secs(Clock::time_point a, Clock::time_point b) { return std::chrono::duration<double>(b - a).count(); }
void run(char t, int r, bool nt, int cap) {
    DiagramSpec s; s.type = t; s.rank = r; s.tau_nontrivial = nt;
    auto rd = build_root_datum(s);
    auto t0 = Clock::now();
    AmbientAlgebra amb(rd, false, {}, cap);
    auto t1 = Clock::now();
    IContext ctx(rd, amb, Level::Universal);
    auto t2 = Clock::now();
    bool all = true;
    for (size_t a = 0; a < rd.reps.size(); a++)
        for (size_t b = a + 1; b < rd.reps.size(); b++)
            all = all && verify_braid_pair(ctx, rd.reps[a], rd.reps[b]).ok;
    auto t3 = Clock::now();
    printf("%c%d nt=%d cap=%d: ambient %.1fs (%zu rules) ictx %.1fs suite %.1fs ok=%d\n", t, r,
           (int)nt, cap, secs(t0,t1), amb.rewrite().rules().size(), secs(t1,t2), secs(t2,t3), (int)all);
    fflush(stdout);
}
int main(int argc, char** argv) {
    int cap = argc > 1 ? atoi(argv[1]) : 8;
    run('A', 4, false, cap);
    run('D', 4, false, cap);
    run('D', 4, true, cap);
    run('A', 5, true, cap);
    return 0;
}
