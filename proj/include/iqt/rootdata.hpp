#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "iqt/error.hpp"

namespace iqt {

/// Vector in the root lattice Z^I, indexed by node 0..n-1.
using RootVec = std::vector<int>;

struct Arrow {
    int src, tgt;
    bool operator<(const Arrow& o) const { return std::tie(src, tgt) < std::tie(o.src, o.tgt); }
    bool operator==(const Arrow& o) const { return src == o.src && tgt == o.tgt; }
};

/// Simply laced Dynkin diagram with an orientation and an involution tau.
/// Nodes are 0-based internally; the CLI presents 1-based labels.
class IQuiver {
public:
    IQuiver() = default;
    IQuiver(int n, std::vector<Arrow> arrows, std::vector<int> tau);

    int rank() const { return n_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    int tau(int i) const { return tau_[i]; }
    const std::vector<int>& tau() const { return tau_; }
    int cartan(int i, int j) const { return cartan_[i][j]; }

    bool is_sink(int i) const;
    bool is_source(int i) const;
    bool has_edge(int i, int j) const { return i != j && cartan_[i][j] != 0; }
    std::vector<int> arrows_into(int i) const;

    /// Reverse all arrows ending at ell and tau(ell); ell must be a sink.
    IQuiver reflect_at_sink(int ell) const;
    /// Reverse arrows at a single vertex (plain BGP move, no tau pairing).
    IQuiver reflect_one(int ell) const;

    std::string orientation_str() const;

private:
    void validate() const;
    int n_ = 0;
    std::vector<Arrow> arrows_;
    std::vector<int> tau_;
    std::vector<std::vector<int>> cartan_;
};

/// Positive roots and the simple-reflection action on the full root set.
class RootSystem {
public:
    explicit RootSystem(const IQuiver& q);

    int rank() const { return n_; }
    const std::vector<RootVec>& positive() const { return pos_; }
    size_t num_positive() const { return pos_.size(); }

    RootVec simple(int i) const;
    RootVec s_apply(int i, const RootVec& a) const;
    RootVec tau_apply(const RootVec& a) const;

    /// Index of a root in the signed list {pos, -pos}; 0..N-1 positive,
    /// N..2N-1 negative.
    int root_index(const RootVec& a) const;
    RootVec root_at(int idx) const;
    size_t num_roots() const { return 2 * pos_.size(); }

    /// Simple reflection as a permutation of the signed root list.
    std::vector<int> s_perm(int i) const;

private:
    int n_;
    std::vector<std::vector<int>> cartan_;
    std::vector<int> tau_;
    std::vector<RootVec> pos_;
    std::map<RootVec, int> pos_index_;
};

using Perm = std::vector<int>;

Perm perm_compose(const Perm& f, const Perm& g); // (f*g)(x) = f(g(x))
int perm_order(const Perm& p);

/// Restricted Weyl group W_tau with simple reflections bs_i = s_i or s_i s_{tau i}.
class RestrictedWeyl {
public:
    RestrictedWeyl(const IQuiver& q, const RootSystem& rs, const std::vector<int>& reps);

    const std::vector<int>& reps() const { return reps_; }
    int coxeter_m(int a, int b) const { return m_[a][b]; } // indices into reps
    const std::string& type_label() const { return type_; }
    unsigned long group_order() const { return order_; }
    const Perm& bs_perm(int a) const { return bs_[a]; }

private:
    std::vector<int> reps_;
    std::vector<Perm> bs_;
    std::vector<std::vector<int>> m_;
    std::string type_;
    unsigned long order_;
};

/// Everything rootdata.build produces.
struct RootDatum {
    IQuiver quiver;
    RootSystem roots;
    RestrictedWeyl wtau;
    std::vector<int> reps; // I_tau, one representative per tau-orbit
    std::string diagram;   // e.g. "A3"
};

/// Diagram spec: type in {A,D,E}, rank, tau either "id" or "diagram",
/// orientation as explicit arrows or empty for the built-in default.
struct DiagramSpec {
    char type = 'A';
    int rank = 2;
    bool tau_nontrivial = false;
    std::vector<Arrow> orientation; // empty -> default orientation
};

std::vector<std::pair<int, int>> diagram_edges(char type, int rank);
std::vector<int> diagram_involution(char type, int rank, bool nontrivial);
std::vector<Arrow> default_orientation(char type, int rank, const std::vector<int>& tau);

RootDatum build_root_datum(const DiagramSpec& spec);

/// bs_i acting on a root-lattice vector: s_i if tau(i)=i, else s_i s_{tau i}.
RootVec bs_apply(const IQuiver& q, int i, const RootVec& a);

/// Hereditary Euler form of the oriented quiver:
///   <a,b> = sum_i a_i b_i - sum_{(i->j)} a_i b_j.
long euler_form(const IQuiver& q, const RootVec& a, const RootVec& b);

/// Parse "1->2,3->2" / "1<-2" style orientation strings (1-based labels).
std::vector<Arrow> parse_orientation(const std::string& text, int rank);

} // namespace iqt
