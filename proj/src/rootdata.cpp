#include "iqt/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace iqt {

IQuiver::IQuiver(int n, std::vector<Arrow> arrows, std::vector<int> tau)
    : n_(n), arrows_(std::move(arrows)), tau_(std::move(tau)) {
    std::sort(arrows_.begin(), arrows_.end());
    cartan_.assign(n_, std::vector<int>(n_, 0));
    for (int i = 0; i < n_; i++) cartan_[i][i] = 2;
    for (auto& a : arrows_) {
        cartan_[a.src][a.tgt] -= 1;
        cartan_[a.tgt][a.src] -= 1;
    }
    validate();
}

void IQuiver::validate() const {
    if ((int)tau_.size() != n_) fail(Err::InvalidInvolution, "tau size mismatch");
    for (int i = 0; i < n_; i++) {
        if (tau_[i] < 0 || tau_[i] >= n_ || tau_[tau_[i]] != i)
            fail(Err::InvalidInvolution, "tau is not an involution");
        if (tau_[i] != i && cartan_[i][tau_[i]] != 0)
            fail(Err::InvalidInvolution,
                 "c(i, tau i) != 0 at node " + std::to_string(i + 1));
    }
    for (auto& a : arrows_) {
        if (a.src == a.tgt) fail(Err::InvalidInvolution, "loop arrow");
        Arrow im{tau_[a.src], tau_[a.tgt]};
        if (!std::binary_search(arrows_.begin(), arrows_.end(), im))
            fail(Err::InvalidInvolution, "orientation is not tau-stable");
    }
    // acyclicity via Kahn's algorithm
    std::vector<int> indeg(n_, 0);
    for (auto& a : arrows_) indeg[a.tgt]++;
    std::vector<int> queue;
    for (int i = 0; i < n_; i++)
        if (indeg[i] == 0) queue.push_back(i);
    int seen = 0;
    while (!queue.empty()) {
        int x = queue.back();
        queue.pop_back();
        seen++;
        for (auto& a : arrows_)
            if (a.src == x && --indeg[a.tgt] == 0) queue.push_back(a.tgt);
    }
    if (seen != n_) fail(Err::InvalidInvolution, "orientation has a cycle");
}

bool IQuiver::is_sink(int i) const {
    for (auto& a : arrows_)
        if (a.src == i) return false;
    return true;
}

bool IQuiver::is_source(int i) const {
    for (auto& a : arrows_)
        if (a.tgt == i) return false;
    return true;
}

std::vector<int> IQuiver::arrows_into(int i) const {
    std::vector<int> r;
    for (auto& a : arrows_)
        if (a.tgt == i) r.push_back(a.src);
    return r;
}

IQuiver IQuiver::reflect_at_sink(int ell) const {
    if (!is_sink(ell)) fail(Err::NotASink, "node " + std::to_string(ell + 1) + " is not a sink");
    int tl = tau_[ell];
    std::vector<Arrow> rev;
    for (auto a : arrows_) {
        if (a.tgt == ell || a.tgt == tl) std::swap(a.src, a.tgt);
        rev.push_back(a);
    }
    return IQuiver(n_, std::move(rev), tau_);
}

IQuiver IQuiver::reflect_one(int ell) const {
    if (!is_sink(ell)) fail(Err::NotASink, "node " + std::to_string(ell + 1) + " is not a sink");
    std::vector<Arrow> rev;
    for (auto a : arrows_) {
        if (a.tgt == ell) std::swap(a.src, a.tgt);
        rev.push_back(a);
    }
    return IQuiver(n_, std::move(rev), tau_);
}

std::string IQuiver::orientation_str() const {
    std::ostringstream os;
    bool first = true;
    for (auto& a : arrows_) {
        if (!first) os << ",";
        os << a.src + 1 << "->" << a.tgt + 1;
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------

RootSystem::RootSystem(const IQuiver& q) : n_(q.rank()), tau_(q.tau()) {
    cartan_.assign(n_, std::vector<int>(n_, 0));
    for (int i = 0; i < n_; i++)
        for (int j = 0; j < n_; j++) cartan_[i][j] = q.cartan(i, j);
    // close the simple roots under all simple reflections
    std::set<RootVec> pos;
    std::vector<RootVec> work;
    for (int i = 0; i < n_; i++) {
        RootVec a(n_, 0);
        a[i] = 1;
        pos.insert(a);
        work.push_back(a);
    }
    while (!work.empty()) {
        RootVec a = work.back();
        work.pop_back();
        for (int i = 0; i < n_; i++) {
            RootVec b = s_apply(i, a);
            bool positive = std::all_of(b.begin(), b.end(), [](int x) { return x >= 0; });
            if (positive && pos.insert(b).second) work.push_back(b);
        }
    }
    pos_.assign(pos.begin(), pos.end());
    std::sort(pos_.begin(), pos_.end(), [](const RootVec& a, const RootVec& b) {
        int ha = std::accumulate(a.begin(), a.end(), 0);
        int hb = std::accumulate(b.begin(), b.end(), 0);
        return std::tie(ha, a) < std::tie(hb, b);
    });
    for (size_t k = 0; k < pos_.size(); k++) pos_index_[pos_[k]] = (int)k;
}

RootVec RootSystem::simple(int i) const {
    RootVec a(n_, 0);
    a[i] = 1;
    return a;
}

RootVec RootSystem::s_apply(int i, const RootVec& a) const {
    long c = 0;
    for (int j = 0; j < n_; j++) c += (long)cartan_[i][j] * a[j];
    RootVec b = a;
    b[i] -= (int)c;
    return b;
}

RootVec RootSystem::tau_apply(const RootVec& a) const {
    RootVec b(n_, 0);
    for (int i = 0; i < n_; i++) b[tau_[i]] = a[i];
    return b;
}

int RootSystem::root_index(const RootVec& a) const {
    auto it = pos_index_.find(a);
    if (it != pos_index_.end()) return it->second;
    RootVec neg(a.size());
    for (size_t i = 0; i < a.size(); i++) neg[i] = -a[i];
    it = pos_index_.find(neg);
    if (it == pos_index_.end()) fail(Err::InvalidParameter, "vector is not a root");
    return it->second + (int)pos_.size();
}

RootVec RootSystem::root_at(int idx) const {
    int N = (int)pos_.size();
    if (idx < N) return pos_[idx];
    RootVec a = pos_[idx - N];
    for (auto& x : a) x = -x;
    return a;
}

Perm RootSystem::s_perm(int i) const {
    Perm p(num_roots());
    for (size_t k = 0; k < num_roots(); k++) p[k] = root_index(s_apply(i, root_at((int)k)));
    return p;
}

Perm perm_compose(const Perm& f, const Perm& g) {
    Perm r(f.size());
    for (size_t i = 0; i < f.size(); i++) r[i] = f[g[i]];
    return r;
}

int perm_order(const Perm& p) {
    Perm x = p;
    Perm id(p.size());
    std::iota(id.begin(), id.end(), 0);
    int k = 1;
    while (x != id) {
        x = perm_compose(p, x);
        if (++k > 1000) fail(Err::InvalidParameter, "permutation order too large");
    }
    return k;
}

// ---------------------------------------------------------------------------

namespace {

// Label a Coxeter graph given by off-diagonal orders m (2,3,4) over the
// listed generators.  Handles the finite types arising here: A, B, D, F4.
std::string detect_type(const std::vector<std::vector<int>>& m) {
    int r = (int)m.size();
    if (r == 0) return "A0";
    if (r == 1) return "A1";
    std::vector<std::vector<int>> adj(r);
    int fours = 0;
    for (int i = 0; i < r; i++)
        for (int j = i + 1; j < r; j++) {
            if (m[i][j] >= 3) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
            if (m[i][j] == 4) fours++;
            if (m[i][j] > 4) return "?";
        }
    int edges = 0;
    for (int i = 0; i < r; i++) edges += (int)adj[i].size();
    edges /= 2;
    if (edges != r - 1) return "?"; // not a tree with the right edge count
    std::vector<int> deg(r);
    for (int i = 0; i < r; i++) deg[i] = (int)adj[i].size();
    int maxdeg = *std::max_element(deg.begin(), deg.end());
    if (maxdeg > 3) return "?";
    bool path = maxdeg <= 2;
    if (fours == 0) {
        if (path) return "A" + std::to_string(r);
        // one degree-3 node: D or E by arm lengths
        int center = -1;
        for (int i = 0; i < r; i++)
            if (deg[i] == 3) center = i;
        std::vector<int> arms;
        for (int s : adj[center]) {
            int len = 1, prev = center, cur = s;
            for (;;) {
                int next = -1;
                for (int t : adj[cur])
                    if (t != prev) next = t;
                if (next < 0) break;
                prev = cur;
                cur = next;
                len++;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(r);
        if (arms[0] == 1 && arms[1] == 2) return "E" + std::to_string(r);
        return "?";
    }
    if (fours == 1 && path) {
        // B if the 4-edge is terminal, F4 if interior with r = 4
        int a = -1, b = -1;
        for (int i = 0; i < r; i++)
            for (int j = i + 1; j < r; j++)
                if (m[i][j] == 4) a = i, b = j;
        if (deg[a] == 1 || deg[b] == 1) {
            if (r == 4 && deg[a] == 2 && deg[b] == 2) return "F4";
            if (deg[a] > 1 && deg[b] > 1) return "F4";
            return "B" + std::to_string(r);
        }
        if (r == 4) return "F4";
    }
    return "?";
}

unsigned long group_order_closure(const std::vector<Perm>& gens) {
    std::set<Perm> seen(gens.begin(), gens.end());
    std::vector<Perm> work(gens.begin(), gens.end());
    Perm id(gens.empty() ? 0 : gens[0].size());
    std::iota(id.begin(), id.end(), 0);
    seen.insert(id);
    while (!work.empty()) {
        Perm x = work.back();
        work.pop_back();
        for (auto& g : gens) {
            Perm y = perm_compose(g, x);
            if (seen.insert(y).second) work.push_back(y);
        }
    }
    return seen.size();
}

} // namespace

RestrictedWeyl::RestrictedWeyl(const IQuiver& q, const RootSystem& rs, const std::vector<int>& reps)
    : reps_(reps) {
    for (int i : reps_) {
        Perm p = rs.s_perm(i);
        if (q.tau(i) != i) p = perm_compose(p, rs.s_perm(q.tau(i)));
        bs_.push_back(p);
    }
    int r = (int)reps_.size();
    m_.assign(r, std::vector<int>(r, 1));
    for (int a = 0; a < r; a++)
        for (int b = 0; b < r; b++)
            if (a != b) m_[a][b] = perm_order(perm_compose(bs_[a], bs_[b]));
    type_ = detect_type(m_);
    order_ = group_order_closure(bs_);
}

// ---------------------------------------------------------------------------

std::vector<std::pair<int, int>> diagram_edges(char type, int rank) {
    std::vector<std::pair<int, int>> e;
    switch (type) {
    case 'A':
        for (int i = 0; i + 1 < rank; i++) e.push_back({i, i + 1});
        break;
    case 'D':
        if (rank < 4) fail(Err::InvalidParameter, "D requires rank >= 4");
        for (int i = 0; i + 1 < rank - 2; i++) e.push_back({i, i + 1});
        e.push_back({rank - 3, rank - 2});
        e.push_back({rank - 3, rank - 1});
        break;
    case 'E':
        // labels as in the source material: chain 1-2-3-5-6 with 4 attached to 3
        if (rank != 6) fail(Err::InvalidParameter, "only E6 is supported");
        e = {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}};
        break;
    default:
        fail(Err::InvalidParameter, std::string("unknown diagram type ") + type);
    }
    return e;
}

std::vector<int> diagram_involution(char type, int rank, bool nontrivial) {
    std::vector<int> tau(rank);
    std::iota(tau.begin(), tau.end(), 0);
    if (!nontrivial) return tau;
    switch (type) {
    case 'A':
        for (int i = 0; i < rank; i++) tau[i] = rank - 1 - i;
        if (rank % 2 == 0)
            fail(Err::InvalidInvolution, "A_even with nontrivial tau violates c(i,tau i)=0");
        break;
    case 'D':
        std::swap(tau[rank - 2], tau[rank - 1]);
        break;
    case 'E':
        tau = {5, 4, 2, 3, 1, 0}; // 1<->6, 2<->5, fix 3 and 4
        break;
    default:
        fail(Err::InvalidParameter, "unknown diagram type");
    }
    return tau;
}

std::vector<Arrow> default_orientation(char type, int rank, const std::vector<int>& tau) {
    std::vector<Arrow> arrows;
    bool nontrivial = false;
    for (int i = 0; i < rank; i++)
        if (tau[i] != i) nontrivial = true;
    if (type == 'A' && nontrivial) {
        // arrows toward the central fixed node, as in the worked examples
        int c = rank / 2;
        for (int i = 0; i < c; i++) arrows.push_back({i, i + 1});
        for (int i = rank - 1; i > c; i--) arrows.push_back({i, i - 1});
        return arrows;
    }
    if (type == 'E' && nontrivial) {
        // the orientation drawn in the source: 2->1, 3->2, 3->4, 3->5, 5->6
        return {{1, 0}, {2, 1}, {2, 3}, {2, 4}, {4, 5}};
    }
    // otherwise orient every edge from the larger label to the smaller;
    // this is tau-stable for D and for tau = id, and makes node 1 a sink
    for (auto& [a, b] : diagram_edges(type, rank)) arrows.push_back({std::max(a, b), std::min(a, b)});
    return arrows;
}

RootDatum build_root_datum(const DiagramSpec& spec) {
    auto tau = diagram_involution(spec.type, spec.rank, spec.tau_nontrivial);
    auto arrows = spec.orientation;
    if (arrows.empty()) {
        arrows = default_orientation(spec.type, spec.rank, tau);
    } else {
        // accept arbitrary edge sets only if they match the diagram
        auto edges = diagram_edges(spec.type, spec.rank);
        std::set<std::pair<int, int>> eset;
        for (auto& [a, b] : edges) eset.insert({std::min(a, b), std::max(a, b)});
        if (arrows.size() != edges.size())
            fail(Err::InvalidParameter, "orientation must cover every diagram edge exactly once");
        for (auto& a : arrows)
            if (!eset.count({std::min(a.src, a.tgt), std::max(a.src, a.tgt)}))
                fail(Err::InvalidParameter, "arrow not on a diagram edge");
    }
    IQuiver q(spec.rank, arrows, tau);
    RootSystem rs(q);
    std::vector<int> reps;
    for (int i = 0; i < spec.rank; i++)
        if (i <= tau[i]) reps.push_back(i);
    RestrictedWeyl w(q, rs, reps);
    RootDatum rd{q, rs, std::move(w), reps, std::string(1, spec.type) + std::to_string(spec.rank)};
    return rd;
}

namespace {

RootVec s_apply_quiver(const IQuiver& q, int i, const RootVec& a) {
    long c = 0;
    for (int j = 0; j < q.rank(); j++) c += (long)q.cartan(i, j) * a[j];
    RootVec b = a;
    b[i] -= (int)c;
    return b;
}

} // namespace

RootVec bs_apply(const IQuiver& q, int i, const RootVec& a) {
    RootVec b = s_apply_quiver(q, i, a);
    if (q.tau(i) != i) b = s_apply_quiver(q, q.tau(i), b);
    return b;
}

long euler_form(const IQuiver& q, const RootVec& a, const RootVec& b) {
    long r = 0;
    for (int i = 0; i < q.rank(); i++) r += (long)a[i] * b[i];
    for (auto& ar : q.arrows()) r -= (long)a[ar.src] * b[ar.tgt];
    return r;
}

std::vector<Arrow> parse_orientation(const std::string& text, int rank) {
    std::vector<Arrow> arrows;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        size_t p;
        bool fwd;
        if ((p = item.find("->")) != std::string::npos)
            fwd = true;
        else if ((p = item.find("<-")) != std::string::npos)
            fwd = false;
        else
            fail(Err::ParseError, "bad arrow '" + item + "'");
        int a = std::stoi(item.substr(0, p)) - 1;
        int b = std::stoi(item.substr(p + 2)) - 1;
        if (a < 0 || b < 0 || a >= rank || b >= rank)
            fail(Err::ParseError, "node out of range in '" + item + "'");
        arrows.push_back(fwd ? Arrow{a, b} : Arrow{b, a});
    }
    return arrows;
}

} // namespace iqt
