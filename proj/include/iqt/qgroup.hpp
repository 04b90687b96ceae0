#pragma once

#include <memory>

#include "iqt/freealg.hpp"
#include "iqt/rootdata.hpp"

namespace iqt {

/// The ambient algebra with generators E_i, F_i and invertible Cartan
/// generators Kt_i, Kt'_i, presented by the standard relations; optionally
/// reduced by the central unit rules Kt_i Kt'_i = varsigma_i.
class AmbientAlgebra {
public:
    AmbientAlgebra(const RootDatum& rd, bool reduced, std::vector<FieldElem> varsigma, int cap);

    const RootDatum& datum() const { return *rd_; }
    const Alphabet& alphabet() const { return ab_; }
    const RewriteSystem& rewrite() const { return *rs_; }
    bool reduced() const { return reduced_; }
    const std::vector<FieldElem>& varsigma() const { return varsigma_; }
    int cap() const { return cap_; }

    Gen E(int i) const { return e_[i]; }
    Gen F(int i) const { return f_[i]; }
    Gen K(int i) const { return k_[i]; }
    Gen Kp(int i) const { return kp_[i]; }
    Gen Kinv(int i) const { return (Gen)ab_.inverse(k_[i]); }
    Gen Kpinv(int i) const { return (Gen)ab_.inverse(kp_[i]); }

    NCPoly nf(const NCPoly& p) const { return rs_->normal_form(p); }
    bool equal(const NCPoly& x, const NCPoly& y) const { return nf(x - y).is_zero(); }

    /// Every normal-form word must factor as F-block, Cartan block, E-block.
    bool triangular_shape(const NCPoly& nf_poly) const;

private:
    const RootDatum* rd_;
    Alphabet ab_;
    std::unique_ptr<RewriteSystem> rs_;
    bool reduced_;
    std::vector<FieldElem> varsigma_;
    int cap_;
    std::vector<Gen> e_, f_, k_, kp_;
};

/// Distinguished parameter: -v^-2 at tau-fixed nodes, 1 elsewhere.
std::vector<FieldElem> distinguished_parameter(const IQuiver& q);

/// Admissibility of a parameter table: each entry +-v^m and tau-symmetric.
void check_parameter(const IQuiver& q, const std::vector<FieldElem>& varsigma);

} // namespace iqt
