#pragma once

#include "iqt/rootdata.hpp"

namespace iqt {

/// A (+)-admissible sink sequence together with the root ordering it induces:
/// gamma_j = s_{i_1} ... s_{i_{j-1}}(alpha_{i_j}).
struct QAdmissibleOrdering {
    std::vector<int> sinks;      // i_1 .. i_N, node indices
    std::vector<RootVec> gammas; // gamma_1 .. gamma_N, all of Phi^+
};

/// Complete i-admissible sequence: indices in I_tau, the roots beta_j they
/// produce, and the positions t_j of beta_j inside the Q-admissible ordering.
struct IAdmissibleSeq {
    std::vector<int> indices; // i_{t_1} .. i_{t_{N_i}}, normalized to I_tau
    std::vector<RootVec> betas;
    std::vector<RootVec> tau_betas;
    std::vector<int> t_positions; // 1-based positions into the ordering
    QAdmissibleOrdering ordering; // the ordering the extraction ran on
};

struct SeqCheck {
    bool ok = true;
    int failed_step = -1; // 1-based step index, -1 if none
    std::string condition;
};

/// Sink-first construction of a Q-admissible ordering of Phi^+.  Ties between
/// sinks are broken toward the smallest node index.
QAdmissibleOrdering q_admissible_ordering(const IQuiver& q);

/// Extraction of a complete i-admissible sequence from the ordering above.
IAdmissibleSeq i_admissible_complete(const IQuiver& q);

/// Check the sink condition at every step, distinctness and coverage of the
/// beta-roots, and that the bs-product is the longest element.
SeqCheck verify_i_admissible(const std::vector<int>& indices, const IQuiver& q);

/// Optional brute-force check (small ranks) that a root ordering satisfies
/// the Hom/Ext directionality over F_q; used behind a flag.
bool verify_hom_ext_directionality(const std::vector<RootVec>& gammas, const IQuiver& q, long qprime);

} // namespace iqt
