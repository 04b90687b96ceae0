#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "iqt/rootdata.hpp"
#include "iqt/scalars.hpp"

namespace iqt {

using Gen = uint8_t;
using Word = std::vector<Gen>;

/// Generator alphabet with root-lattice weights and optional declared
/// inverses.  Generator ids double as the monomial-order precedence.
class Alphabet {
public:
    struct Info {
        std::string name;
        RootVec weight;
        int inverse = -1; // id of the declared inverse, -1 if none
    };

    Gen add(const std::string& name, RootVec weight);
    /// Adds g and g^-1 as adjacent ids; returns the id of g.
    Gen add_invertible(const std::string& name, RootVec weight);

    size_t size() const { return gens_.size(); }
    const Info& info(Gen g) const { return gens_[g]; }
    const std::string& name(Gen g) const { return gens_[g].name; }
    int inverse(Gen g) const { return gens_[g].inverse; }
    int find(const std::string& name) const;

    RootVec word_weight(const Word& w) const;
    std::string word_str(const Word& w) const;

private:
    std::vector<Info> gens_;
};

/// Graded order: length first, then lexicographic on generator ids.
bool word_less(const Word& a, const Word& b);

struct WordLess {
    bool operator()(const Word& a, const Word& b) const { return word_less(a, b); }
};

/// Linear combination of words with FieldElem coefficients.
class NCPoly {
public:
    using Terms = std::map<Word, FieldElem, WordLess>;

    NCPoly() = default;
    static NCPoly one() { return monomial(Word{}); }
    static NCPoly monomial(const Word& w, FieldElem c = FieldElem(1));

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    void add_term(const Word& w, const FieldElem& c);
    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly operator*(const NCPoly& o) const;
    NCPoly operator*(const FieldElem& c) const;
    NCPoly operator-() const;
    bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }

    const Word& leading_word() const;
    const FieldElem& leading_coeff() const;

    /// Weight of the terms when homogeneous; nullopt for 0 or mixed weights.
    std::optional<RootVec> weight(const Alphabet& ab) const;

    std::string str(const Alphabet& ab) const;

private:
    Terms terms_;
};

/// [x,y]_s = x*y - s*y*x.
NCPoly v_comm(const NCPoly& x, const NCPoly& y, const FieldElem& s);

struct Rule {
    Word lhs;
    std::vector<std::pair<Word, FieldElem>> rhs;
};

struct OverlapRecord {
    int rule_a, rule_b;
    int position; // offset of lhs_b inside the ambiguity word
};

/// Oriented rewriting system produced by truncated completion; frozen after
/// construction and safe for concurrent normal_form calls.
class RewriteSystem {
public:
    RewriteSystem(const Alphabet& ab, const std::vector<NCPoly>& relations, int degree_cap);

    const Alphabet& alphabet() const { return *ab_; }
    int degree_cap() const { return cap_; }
    const std::vector<Rule>& rules() const { return rules_; }
    const std::vector<OverlapRecord>& certificate() const { return certificate_; }

    NCPoly normal_form(const NCPoly& p) const;
    NCPoly reduce_word(const Word& w, const FieldElem& c) const;

    /// Re-runs every recorded overlap and reduces it; true when all vanish.
    bool recheck_certificate() const;

    std::string dump() const;

private:
    void add_rule_from(const NCPoly& p);
    bool find_match(const Word& w, int& pos, int& rule) const;
    NCPoly reduce_uncached(const Word& w) const;

    const Alphabet* ab_;
    int cap_;
    uint64_t id_;
    std::vector<Rule> rules_;
    std::vector<std::vector<int>> by_first_; // generator id -> rule indices
    std::vector<OverlapRecord> certificate_;
};

/// Coordinates of nf(p) in the (sparse) word basis.
using CoordVec = std::map<Word, FieldElem, WordLess>;

struct SolveResult {
    bool solvable = false;
    std::vector<FieldElem> coeffs; // per candidate
};

/// Express each target as a FieldElem-combination of the candidates, all
/// compared through their normal forms.  Exact over Q(u).
std::vector<SolveResult> linear_solve(const std::vector<NCPoly>& targets,
                                      const std::vector<NCPoly>& candidates,
                                      const RewriteSystem& rs);

/// Rank of the candidate set in normal-form coordinates.  Computed exactly
/// over Q(u) by Gaussian elimination.
size_t nf_rank(const std::vector<NCPoly>& candidates, const RewriteSystem& rs);

/// Lower bound on nf_rank obtained by specializing u to a rational point;
/// equality with the candidate count certifies independence.
size_t nf_rank_specialized(const std::vector<NCPoly>& candidates, const RewriteSystem& rs,
                           const Rat& u0);

struct SpecializedSolve {
    bool solvable = false;
    std::vector<size_t> support; // candidate indices carrying the solution
};

/// Solve the target over the candidates with u evaluated at a rational point.
/// A negative answer rules the generic solve out for prefiltering purposes;
/// a positive answer reports which candidates suffice, so the exact solve can
/// run on that small subset.
SpecializedSolve linear_solve_specialized(const NCPoly& target, const std::vector<NCPoly>& candidates,
                                          const RewriteSystem& rs, const Rat& u0);

} // namespace iqt
