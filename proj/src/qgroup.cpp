#include "iqt/qgroup.hpp"

namespace iqt {

std::vector<FieldElem> distinguished_parameter(const IQuiver& q) {
    std::vector<FieldElem> vs;
    for (int i = 0; i < q.rank(); i++)
        vs.push_back(q.tau(i) == i ? -FieldElem::v_pow(-2) : FieldElem(1));
    return vs;
}

void check_parameter(const IQuiver& q, const std::vector<FieldElem>& vs) {
    if ((int)vs.size() != q.rank()) fail(Err::InvalidParameter, "parameter table size mismatch");
    for (int i = 0; i < q.rank(); i++) {
        const FieldElem& s = vs[i];
        if (!s.den().is_one() || !s.num().is_monomial())
            fail(Err::InvalidParameter, "varsigma_" + std::to_string(i + 1) + " must be +-v^m");
        Rat c = s.num().coeff(s.num().min_exp());
        if (c != 1 && c != -1)
            fail(Err::InvalidParameter, "varsigma_" + std::to_string(i + 1) + " must be +-v^m");
        if (s.num().min_exp() % 2 != 0)
            fail(Err::InvalidParameter, "varsigma_" + std::to_string(i + 1) + " has a half power");
        if (!(vs[i] == vs[q.tau(i)]))
            fail(Err::InvalidParameter, "varsigma must be tau-symmetric");
    }
}

AmbientAlgebra::AmbientAlgebra(const RootDatum& rd, bool reduced, std::vector<FieldElem> varsigma,
                               int cap)
    : rd_(&rd), reduced_(reduced), varsigma_(std::move(varsigma)), cap_(cap) {
    const IQuiver& q = rd.quiver;
    int n = q.rank();
    if (reduced_) check_parameter(q, varsigma_);

    RootVec zero(n, 0);
    // precedence: F block < Cartan block (per node, Kt' then Kt) < E block
    for (int i = 0; i < n; i++) {
        RootVec w = zero;
        w[i] = -1;
        f_.push_back(ab_.add("F" + std::to_string(i + 1), w));
    }
    for (int i = 0; i < n; i++) {
        kp_.push_back(ab_.add_invertible("Kt'" + std::to_string(i + 1), zero));
        k_.push_back(ab_.add_invertible("Kt" + std::to_string(i + 1), zero));
    }
    for (int i = 0; i < n; i++) {
        RootVec w = zero;
        w[i] = 1;
        e_.push_back(ab_.add("E" + std::to_string(i + 1), w));
    }

    FieldElem v = FieldElem::v();
    FieldElem vinv = FieldElem::v_pow(-1);
    FieldElem denom = v - vinv;
    auto mono = [](std::initializer_list<Gen> gs) { return NCPoly::monomial(Word(gs)); };

    std::vector<NCPoly> rels;
    // [E_i, F_j] = delta_ij (Kt_i - Kt'_i)/(v - v^-1)
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
            NCPoly r = mono({e_[i], f_[j]}) - mono({f_[j], e_[i]});
            if (i == j)
                r = r - (NCPoly::monomial({k_[i]}) - NCPoly::monomial({kp_[i]})) * denom.inv();
            rels.push_back(r);
        }
    // Cartan letters commute pairwise (inverses included)
    std::vector<Gen> cartan;
    for (int i = 0; i < n; i++) {
        cartan.push_back(kp_[i]);
        cartan.push_back(Kpinv(i));
        cartan.push_back(k_[i]);
        cartan.push_back(Kinv(i));
    }
    for (size_t a = 0; a < cartan.size(); a++)
        for (size_t b = a + 1; b < cartan.size(); b++) {
            if (ab_.inverse(cartan[a]) == (int)cartan[b]) continue;
            rels.push_back(mono({cartan[a], cartan[b]}) - mono({cartan[b], cartan[a]}));
        }
    // Kt_i E_j = v^{c_ij} E_j Kt_i and friends, including inverse letters
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
            long c = q.cartan(i, j);
            rels.push_back(mono({k_[i], e_[j]}) - mono({e_[j], k_[i]}) * FieldElem::v_pow(c));
            rels.push_back(mono({k_[i], f_[j]}) - mono({f_[j], k_[i]}) * FieldElem::v_pow(-c));
            rels.push_back(mono({kp_[i], e_[j]}) - mono({e_[j], kp_[i]}) * FieldElem::v_pow(-c));
            rels.push_back(mono({kp_[i], f_[j]}) - mono({f_[j], kp_[i]}) * FieldElem::v_pow(c));
            rels.push_back(mono({Kinv(i), e_[j]}) - mono({e_[j], Kinv(i)}) * FieldElem::v_pow(-c));
            rels.push_back(mono({Kinv(i), f_[j]}) - mono({f_[j], Kinv(i)}) * FieldElem::v_pow(c));
            rels.push_back(mono({Kpinv(i), e_[j]}) - mono({e_[j], Kpinv(i)}) * FieldElem::v_pow(c));
            rels.push_back(mono({Kpinv(i), f_[j]}) - mono({f_[j], Kpinv(i)}) * FieldElem::v_pow(-c));
        }
    // quantum Serre relations
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
            if (i == j) continue;
            long c = q.cartan(i, j);
            if (c == 0) {
                rels.push_back(mono({e_[i], e_[j]}) - mono({e_[j], e_[i]}));
                rels.push_back(mono({f_[i], f_[j]}) - mono({f_[j], f_[i]}));
            } else {
                // c = -1:  x_i^2 x_j - [2] x_i x_j x_i + x_j x_i^2 = 0
                FieldElem two = quantum_int(2);
                rels.push_back(mono({e_[i], e_[i], e_[j]}) - mono({e_[i], e_[j], e_[i]}) * two +
                               mono({e_[j], e_[i], e_[i]}));
                rels.push_back(mono({f_[i], f_[i], f_[j]}) - mono({f_[i], f_[j], f_[i]}) * two +
                               mono({f_[j], f_[i], f_[i]}));
            }
        }
    if (reduced_) {
        for (int i = 0; i < n; i++) {
            rels.push_back(mono({k_[i], kp_[i]}) - NCPoly::one() * varsigma_[i]);
            rels.push_back(mono({kp_[i], k_[i]}) - NCPoly::one() * varsigma_[i]);
        }
    }
    rs_ = std::make_unique<RewriteSystem>(ab_, rels, cap_);
}

bool AmbientAlgebra::triangular_shape(const NCPoly& p) const {
    int n = rd_->quiver.rank();
    auto block = [&](Gen g) {
        if (g < f_[0] + (Gen)n) return 0;             // F block
        if (g < e_[0]) return 1;                      // Cartan block
        return 2;                                     // E block
    };
    for (auto& [w, c] : p.terms()) {
        int cur = 0;
        for (Gen g : w) {
            int b = block(g);
            if (b < cur) return false;
            cur = b;
        }
    }
    return true;
}

} // namespace iqt
