#pragma once

#include <functional>
#include <map>
#include <memory>
#include <unordered_map>

#include "iqt/iseq.hpp"
#include "iqt/qgroup.hpp"

namespace iqt {

enum class Level { Universal, Parameter };

/// Elements of the i-quantum group are noncommutative polynomials over the
/// alphabet {B_i} + invertible Cartan letters (kt_l at the universal level,
/// k_l for non-fixed representatives at the parameter level).
using IExpr = NCPoly;

/// Shared context for i-quantum group computations over one diagram at one
/// level.  Owns the generator alphabet, a straightening rewrite system whose
/// rules are solved for (and therefore certified) inside the ambient algebra,
/// the braid-operator tables, and the embedding cache.
class IContext {
public:
    IContext(const RootDatum& rd, const AmbientAlgebra& amb, Level level);

    const RootDatum& datum() const { return *rd_; }
    const AmbientAlgebra& ambient() const { return *amb_; }
    const Alphabet& ialphabet() const { return iab_; }
    Level level() const { return level_; }
    int rank() const { return rd_->quiver.rank(); }

    IExpr B(int i) const { return NCPoly::monomial({bgen_[i]}); }
    IExpr cartan(const std::vector<int>& kexp) const;
    IExpr one() const { return NCPoly::one(); }

    /// Product followed by straightening.
    IExpr mul(const IExpr& a, const IExpr& b) const { return inorm(a * b); }
    IExpr inorm(const IExpr& x) const { return irs_->normal_form(x); }

    /// Weight in Z^I / <alpha_i + alpha_{tau i}>, folded onto representatives
    /// (pair difference; parity at tau-fixed nodes).
    std::vector<int> quotient_weight(const Word& w) const;

    /// T_i images of single generators per the tables; i must be an orbit
    /// representative.
    IExpr ti_gen_B(int i, int j) const;
    IExpr ti_apply(int i, const IExpr& x) const;
    IExpr ti_inverse_apply(int i, const IExpr& x);

    /// Ambient image with normal form; memoized per i-normal word.
    NCPoly embed(const IExpr& x) const;
    void warm_cache(const std::vector<IExpr>& xs) const;

    bool equal(const IExpr& x, const IExpr& y) const;
    std::string nf_hash(const IExpr& x) const;

    /// Base-change rescaling B_i -> a_i B_i.
    IExpr phi_param_change(const IExpr& x, const std::vector<FieldElem>& a) const;

    bool is_bgen(Gen g) const { return gen_node_[g] >= 0 && !gen_is_cartan_[g]; }
    int gen_node(Gen g) const { return gen_node_[g]; }

private:
    void build_alphabet();
    void derive_rules();
    NCPoly embed_word(const Word& w) const;
    NCPoly embed_letter(Gen g) const;
    IExpr ti_gen(int i, Gen g) const;           // forward image of any letter
    IExpr ti_inverse_gen(int i, Gen g);         // inverse image of any letter
    IExpr cartan_image(int i, Gen g, bool inverse) const;

    const RootDatum* rd_;
    const AmbientAlgebra* amb_;
    Level level_;
    Alphabet iab_;
    std::vector<Gen> bgen_;              // node -> B letter
    std::vector<int> kgen_;              // node -> Cartan letter id or -1
    std::vector<int> gen_node_;          // letter -> node
    std::vector<bool> gen_is_cartan_;    // letter -> Cartan flag
    std::unique_ptr<RewriteSystem> irs_; // straightening rules, ambient-certified
    mutable std::map<Word, NCPoly> word_cache_;
    std::map<std::pair<int, Gen>, IExpr> tinv_cache_;
    mutable std::map<std::pair<int, Gen>, IExpr> tfwd_cache_;
};

struct GenCheck {
    std::string gen;
    std::string lhs_hash, rhs_hash;
    bool equal = false;
};

struct BraidPairReport {
    int i, j;
    int m;
    bool ok = true;
    std::vector<GenCheck> per_generator;
};

BraidPairReport verify_braid_pair(IContext& ctx, int i, int j);

struct QRootVector {
    RootVec beta;
    int node;
    IExpr expr;
};

std::vector<QRootVector> q_root_vectors(IContext& ctx, const IAdmissibleSeq& seq,
                                        const std::vector<FieldElem>& varsigma);

struct PbwReport {
    size_t monomials = 0;
    size_t rank = 0;
    bool independent = false;
    bool spanning_ok = true;
};

PbwReport pbw_check(IContext& ctx, const std::vector<QRootVector>& roots, int degree,
                    int spot_check_len);

struct IdealStabilityReport {
    int i;
    bool ok = true;
    std::vector<std::string> failures;
};

IdealStabilityReport reduced_ideal_stability(const RootDatum& rd, const AmbientAlgebra& reduced_amb,
                                             int i, int cap);

} // namespace iqt
