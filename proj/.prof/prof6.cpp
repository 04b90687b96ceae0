#include <chrono>
#include <cstdio>
#include "iqt/qgroup.hpp"
using namespace iqt;
using Clock = std::chrono::steady_clock;
double secs(Clock::time_point a, Clock::time_point b) { return std::chrono::duration<double>(b - a).count(); }
int main() {
    for (auto [t, r] : {std::pair<char,int>{'A',3},{'A',4},{'D',4}}) {
        DiagramSpec s; s.type = t; s.rank = r; s.tau_nontrivial = false;
        auto rd = build_root_datum(s);
        auto t0 = Clock::now();
        AmbientAlgebra amb(rd, false, {}, 12);
        auto t1 = Clock::now();
        printf("%c%d: %.1fs rules=%zu certificate=%zu\n", t, r, secs(t0,t1),
               amb.rewrite().rules().size(), amb.rewrite().certificate().size());
        fflush(stdout);
    }
    return 0;
}
