#include "iqt/iseq.hpp"

#include <algorithm>
#include <set>

namespace iqt {

namespace {

bool extend_ordering(const RootSystem& rs, const IQuiver& cur, std::vector<int>& word,
                     std::vector<RootVec>& gammas, size_t N) {
    if (gammas.size() == N) return true;
    for (int i = 0; i < cur.rank(); i++) {
        if (!cur.is_sink(i)) continue;
        // keep the word reduced: the candidate root must stay positive
        RootVec g = rs.simple(i);
        for (auto it = word.rbegin(); it != word.rend(); ++it) g = rs.s_apply(*it, g);
        if (!std::all_of(g.begin(), g.end(), [](int x) { return x >= 0; })) continue;
        word.push_back(i);
        gammas.push_back(g);
        if (extend_ordering(rs, cur.reflect_one(i), word, gammas, N)) return true;
        word.pop_back();
        gammas.pop_back();
    }
    return false;
}

} // namespace

QAdmissibleOrdering q_admissible_ordering(const IQuiver& q) {
    RootSystem rs(q);
    // sink bookkeeping runs on a tau-stripped copy: the single-vertex BGP
    // moves below do not preserve involution-stability
    std::vector<int> id(q.rank());
    for (int i = 0; i < q.rank(); i++) id[i] = i;
    IQuiver work(q.rank(), q.arrows(), id);
    QAdmissibleOrdering out;
    if (!extend_ordering(rs, work, out.sinks, out.gammas, rs.num_positive()))
        fail(Err::InvalidParameter, "no admissible ordering found");
    return out;
}

IAdmissibleSeq i_admissible_complete(const IQuiver& q) {
    IAdmissibleSeq seq;
    seq.ordering = q_admissible_ordering(q);
    RootSystem rs(q);
    std::set<RootVec> taken;
    for (size_t k = 0; k < seq.ordering.gammas.size(); k++) {
        const RootVec& g = seq.ordering.gammas[k];
        if (taken.count(g)) continue;
        RootVec tg = rs.tau_apply(g);
        taken.insert(g);
        taken.insert(tg);
        int node = seq.ordering.sinks[k];
        int rep = std::min(node, q.tau(node));
        seq.indices.push_back(rep);
        seq.betas.push_back(g);
        seq.tau_betas.push_back(tg);
        seq.t_positions.push_back((int)k + 1);
    }
    return seq;
}

SeqCheck verify_i_admissible(const std::vector<int>& indices, const IQuiver& q) {
    SeqCheck r;
    RootSystem rs(q);
    IQuiver cur = q;
    std::vector<RootVec> betas;
    for (size_t step = 0; step < indices.size(); step++) {
        int i = indices[step];
        if (i < 0 || i >= q.rank()) {
            r.ok = false;
            r.failed_step = (int)step + 1;
            r.condition = "index out of range";
            return r;
        }
        if (!cur.is_sink(i)) {
            r.ok = false;
            r.failed_step = (int)step + 1;
            r.condition = "node " + std::to_string(i + 1) + " is not a sink of the reflected quiver";
            return r;
        }
        RootVec beta = rs.simple(i);
        for (size_t j = step; j-- > 0;) beta = bs_apply(q, indices[j], beta);
        betas.push_back(beta);
        cur = cur.reflect_at_sink(i);
    }
    // distinctness and coverage of {beta_j, tau beta_j}
    std::set<RootVec> seen;
    for (auto& b : betas) {
        if (!std::all_of(b.begin(), b.end(), [](int x) { return x >= 0; })) {
            r.ok = false;
            r.condition = "beta root not positive";
            return r;
        }
        if (!seen.insert(b).second) {
            r.ok = false;
            r.condition = "repeated beta root";
            return r;
        }
        seen.insert(rs.tau_apply(b));
    }
    if (seen.size() != rs.num_positive()) {
        r.ok = false;
        r.condition = "beta roots with tau-partners do not exhaust the positive roots";
        return r;
    }
    // the bs-product must send Phi^+ to -Phi^+
    for (auto& a : rs.positive()) {
        RootVec x = a;
        for (size_t j = indices.size(); j-- > 0;) x = bs_apply(q, indices[j], x);
        if (!std::all_of(x.begin(), x.end(), [](int v) { return v <= 0; })) {
            r.ok = false;
            r.condition = "bs-product is not the longest element";
            return r;
        }
    }
    return r;
}

} // namespace iqt
