#include "iqt/freealg.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace iqt {

Gen Alphabet::add(const std::string& name, RootVec weight) {
    if (gens_.size() >= 250) fail(Err::CapExceeded, "alphabet too large");
    gens_.push_back({name, std::move(weight), -1});
    return (Gen)(gens_.size() - 1);
}

Gen Alphabet::add_invertible(const std::string& name, RootVec weight) {
    Gen g = add(name, weight);
    RootVec nw = gens_[g].weight;
    for (auto& x : nw) x = -x;
    Gen gi = add(name + "^-1", nw);
    gens_[g].inverse = gi;
    gens_[gi].inverse = g;
    return g;
}

int Alphabet::find(const std::string& name) const {
    for (size_t i = 0; i < gens_.size(); i++)
        if (gens_[i].name == name) return (int)i;
    return -1;
}

RootVec Alphabet::word_weight(const Word& w) const {
    RootVec r;
    if (!gens_.empty()) r.assign(gens_[0].weight.size(), 0);
    for (Gen g : w) {
        const RootVec& wg = gens_[g].weight;
        for (size_t i = 0; i < wg.size(); i++) r[i] += wg[i];
    }
    return r;
}

std::string Alphabet::word_str(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < w.size(); i++) {
        if (i) s += "*";
        s += gens_[w[i]].name;
    }
    return s;
}

bool word_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

NCPoly NCPoly::monomial(const Word& w, FieldElem c) {
    NCPoly p;
    p.add_term(w, c);
    return p;
}

void NCPoly::add_term(const Word& w, const FieldElem& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    NCPoly r = *this;
    for (auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
    NCPoly r = *this;
    for (auto& [w, c] : o.terms_) r.add_term(w, -c);
    return r;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
    NCPoly r;
    for (auto& [w1, c1] : terms_)
        for (auto& [w2, c2] : o.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add_term(w, c1 * c2);
        }
    return r;
}

NCPoly NCPoly::operator*(const FieldElem& c) const {
    NCPoly r;
    if (c.is_zero()) return r;
    for (auto& [w, x] : terms_) r.terms_.emplace(w, x * c);
    return r;
}

NCPoly NCPoly::operator-() const { return *this * FieldElem(-1); }

const Word& NCPoly::leading_word() const {
    if (terms_.empty()) fail(Err::DivisionByZero, "leading term of zero");
    return terms_.rbegin()->first;
}

const FieldElem& NCPoly::leading_coeff() const {
    if (terms_.empty()) fail(Err::DivisionByZero, "leading term of zero");
    return terms_.rbegin()->second;
}

std::optional<RootVec> NCPoly::weight(const Alphabet& ab) const {
    std::optional<RootVec> r;
    for (auto& [w, c] : terms_) {
        RootVec wt = ab.word_weight(w);
        if (!r)
            r = wt;
        else if (*r != wt)
            return std::nullopt;
    }
    return r;
}

std::string NCPoly::str(const Alphabet& ab) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        os << "(" << it->second.str() << ")";
        if (!it->first.empty()) os << "*" << ab.word_str(it->first);
        first = false;
    }
    return os.str();
}

NCPoly v_comm(const NCPoly& x, const NCPoly& y, const FieldElem& s) {
    return x * y - (y * x) * s;
}

// ---------------------------------------------------------------------------

namespace {

struct WordHash {
    size_t operator()(const Word& w) const {
        size_t h = 1469598103934665603ull;
        for (Gen g : w) {
            h ^= g;
            h *= 1099511628211ull;
        }
        return h;
    }
};

using Accum = std::unordered_map<Word, FieldElem, WordHash>;

std::atomic<uint64_t> next_system_id{1};

// Per-thread memo of fully reduced words, keyed by the owning system id and
// invalidated whenever the rule set grows.  Thread-local storage avoids
// locking; duplication across threads is fine.
struct ReduceMemo {
    uint64_t id = 0;
    size_t epoch = 0;
    std::unordered_map<Word, NCPoly, WordHash> map;
};

std::unordered_map<Word, NCPoly, WordHash>& memo_for(uint64_t id, size_t epoch) {
    thread_local std::vector<ReduceMemo> memos;
    for (auto& m : memos)
        if (m.id == id) {
            if (m.epoch != epoch) {
                m.map.clear();
                m.epoch = epoch;
            }
            return m.map;
        }
    memos.push_back({id, epoch, {}});
    return memos.back().map;
}

void accum_add(Accum& m, const Word& w, const FieldElem& c) {
    auto it = m.find(w);
    if (it == m.end()) {
        if (!c.is_zero()) m.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

} // namespace

RewriteSystem::RewriteSystem(const Alphabet& ab, const std::vector<NCPoly>& relations, int degree_cap)
    : ab_(&ab), cap_(degree_cap), id_(next_system_id.fetch_add(1)) {
    by_first_.assign(ab.size(), {});
    // unit rules for declared inverses
    for (Gen g = 0; g < ab.size(); g++) {
        int gi = ab.inverse(g);
        if (gi < 0 || (int)g > gi) continue;
        add_rule_from(NCPoly::monomial({g, (Gen)gi}) - NCPoly::one());
        add_rule_from(NCPoly::monomial({(Gen)gi, g}) - NCPoly::one());
    }
    for (auto& r : relations) {
        if (!r.weight(ab)) fail(Err::InvalidParameter, "relation is not weight-homogeneous");
        add_rule_from(normal_form(r));
    }
    // Knuth-Bendix loop over overlap ambiguities, capped at combined degree D
    for (size_t a = 0; a < rules_.size(); a++) {
        for (size_t b = 0; b <= a; b++) {
            for (auto [i, j] : {std::pair<size_t, size_t>{a, b}, {b, a}}) {
                const Word& u = rules_[i].lhs;
                const Word& v = rules_[j].lhs;
                // proper overlaps: nonempty proper suffix of u = prefix of v
                for (size_t k = 1; k < u.size() && k < v.size(); k++) {
                    if (!std::equal(u.end() - k, u.end(), v.begin())) continue;
                    Word amb = u;
                    amb.insert(amb.end(), v.begin() + k, v.end());
                    if ((int)amb.size() > cap_) continue;
                    // reduce via rule i at position 0 and via rule j at u.size()-k
                    NCPoly s1, s2;
                    Word tail(v.begin() + k, v.end());
                    for (auto& [rw, rc] : rules_[i].rhs) {
                        Word w = rw;
                        w.insert(w.end(), tail.begin(), tail.end());
                        s1.add_term(w, rc);
                    }
                    Word head(u.begin(), u.end() - k);
                    for (auto& [rw, rc] : rules_[j].rhs) {
                        Word w = head;
                        w.insert(w.end(), rw.begin(), rw.end());
                        s2.add_term(w, rc);
                    }
                    NCPoly h = normal_form(s1 - s2);
                    certificate_.push_back({(int)i, (int)j, (int)(u.size() - k)});
                    if (!h.is_zero()) add_rule_from(h);
                }
                // containment: v occurs strictly inside u
                if (i != j && v.size() < u.size()) {
                    for (size_t pos = 0; pos + v.size() <= u.size(); pos++) {
                        if (!std::equal(v.begin(), v.end(), u.begin() + pos)) continue;
                        NCPoly s1;
                        for (auto& [rw, rc] : rules_[i].rhs) s1.add_term(rw, rc);
                        NCPoly s2;
                        Word pre(u.begin(), u.begin() + pos);
                        Word post(u.begin() + pos + v.size(), u.end());
                        for (auto& [rw, rc] : rules_[j].rhs) {
                            Word w = pre;
                            w.insert(w.end(), rw.begin(), rw.end());
                            w.insert(w.end(), post.begin(), post.end());
                            s2.add_term(w, rc);
                        }
                        NCPoly h = normal_form(s1 - s2);
                        certificate_.push_back({(int)i, (int)j, (int)pos});
                        if (!h.is_zero()) add_rule_from(h);
                    }
                }
            }
        }
    }
}

void RewriteSystem::add_rule_from(const NCPoly& p) {
    if (p.is_zero()) return;
    Word lhs = p.leading_word();
    if ((int)lhs.size() > cap_)
        fail(Err::CapExceeded,
             "completion needs a rule of length " + std::to_string(lhs.size()) +
                 " > cap " + std::to_string(cap_));
    FieldElem lc = p.leading_coeff();
    Rule r;
    r.lhs = lhs;
    for (auto& [w, c] : p.terms()) {
        if (w == lhs) continue;
        r.rhs.push_back({w, -(c / lc)});
    }
    if (!lhs.empty()) by_first_[lhs[0]].push_back((int)rules_.size());
    rules_.push_back(std::move(r));
}

bool RewriteSystem::find_match(const Word& w, int& pos, int& rule) const {
    for (size_t p = 0; p < w.size(); p++) {
        for (int ri : by_first_[w[p]]) {
            const Word& l = rules_[ri].lhs;
            if (p + l.size() > w.size()) continue;
            if (std::equal(l.begin(), l.end(), w.begin() + p)) {
                pos = (int)p;
                rule = ri;
                return true;
            }
        }
    }
    return false;
}

NCPoly RewriteSystem::reduce_uncached(const Word& w0) const {
    Accum pending;
    accum_add(pending, w0, FieldElem(1));
    NCPoly out;
    while (!pending.empty()) {
        Accum next;
        for (auto& [w, c] : pending) {
            int pos, ri;
            if (!find_match(w, pos, ri)) {
                out.add_term(w, c);
                continue;
            }
            const Rule& r = rules_[ri];
            for (auto& [rw, rc] : r.rhs) {
                Word nw;
                nw.reserve(w.size() - r.lhs.size() + rw.size());
                nw.insert(nw.end(), w.begin(), w.begin() + pos);
                nw.insert(nw.end(), rw.begin(), rw.end());
                nw.insert(nw.end(), w.begin() + pos + r.lhs.size(), w.end());
                accum_add(next, nw, c * rc);
            }
        }
        pending = std::move(next);
    }
    return out;
}

NCPoly RewriteSystem::reduce_word(const Word& w0, const FieldElem& c0) const {
    int pos, ri;
    if (!find_match(w0, pos, ri)) return NCPoly::monomial(w0, c0);
    auto& memo = memo_for(id_, rules_.size());
    auto it = memo.find(w0);
    if (it != memo.end()) return it->second * c0;
    NCPoly r = reduce_uncached(w0);
    if (memo.size() < (1u << 21)) memo.emplace(w0, r);
    return r * c0;
}

NCPoly RewriteSystem::normal_form(const NCPoly& p) const {
    NCPoly out;
    for (auto& [w, c] : p.terms()) out = out + reduce_word(w, c);
    return out;
}

bool RewriteSystem::recheck_certificate() const {
    for (auto& o : certificate_) {
        const Word& u = rules_[o.rule_a].lhs;
        const Word& v = rules_[o.rule_b].lhs;
        Word amb;
        if (o.position + v.size() <= u.size()) {
            amb = u; // containment
        } else {
            amb.assign(u.begin(), u.end());
            amb.insert(amb.end(), v.begin() + (u.size() - o.position), v.end());
        }
        NCPoly s1, s2;
        // reduce amb via rule_a at 0 and via rule_b at o.position
        Word post_a(amb.begin() + u.size(), amb.end());
        for (auto& [rw, rc] : rules_[o.rule_a].rhs) {
            Word w = rw;
            w.insert(w.end(), post_a.begin(), post_a.end());
            s1.add_term(w, rc);
        }
        Word pre(amb.begin(), amb.begin() + o.position);
        Word post(amb.begin() + o.position + v.size(), amb.end());
        for (auto& [rw, rc] : rules_[o.rule_b].rhs) {
            Word w = pre;
            w.insert(w.end(), rw.begin(), rw.end());
            w.insert(w.end(), post.begin(), post.end());
            s2.add_term(w, rc);
        }
        if (!normal_form(s1 - s2).is_zero()) return false;
    }
    return true;
}

std::string RewriteSystem::dump() const {
    std::ostringstream os;
    for (auto& r : rules_) {
        os << ab_->word_str(r.lhs) << " -> ";
        NCPoly rhs;
        for (auto& [w, c] : r.rhs) rhs.add_term(w, c);
        os << rhs.str(*ab_) << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

// Dense Gaussian elimination over Q(u).  Columns are candidates; the basis
// rows are the union of normal-form words.
struct DenseSystem {
    std::vector<Word> basis;
    std::vector<std::vector<FieldElem>> cols;

    DenseSystem(const std::vector<NCPoly>& nfs) {
        std::map<Word, int, WordLess> index;
        for (auto& p : nfs)
            for (auto& [w, c] : p.terms()) index.emplace(w, 0);
        int k = 0;
        for (auto& [w, i] : index) {
            basis.push_back(w);
            index[w] = k++;
        }
        for (auto& p : nfs) {
            std::vector<FieldElem> col(basis.size(), FieldElem(0));
            for (auto& [w, c] : p.terms()) col[index[w]] = c;
            cols.push_back(std::move(col));
        }
    }
};

} // namespace

std::vector<SolveResult> linear_solve(const std::vector<NCPoly>& targets,
                                      const std::vector<NCPoly>& candidates,
                                      const RewriteSystem& rs) {
    size_t nc = candidates.size(), nt = targets.size();
    std::vector<NCPoly> nfs;
    nfs.reserve(nc + nt);
    for (auto& c : candidates) nfs.push_back(rs.normal_form(c));
    for (auto& t : targets) nfs.push_back(rs.normal_form(t));
    DenseSystem sys(nfs);
    size_t rows = sys.basis.size();

    // reduced row echelon on the augmented matrix [candidates | targets]
    std::vector<std::vector<FieldElem>> m(rows, std::vector<FieldElem>(nc + nt, FieldElem(0)));
    for (size_t c = 0; c < nc + nt; c++)
        for (size_t r = 0; r < rows; r++) m[r][c] = sys.cols[c][r];
    std::vector<int> pivcol;
    size_t r0 = 0;
    for (size_t c = 0; c < nc && r0 < rows; c++) {
        int pr = -1;
        for (size_t r = r0; r < rows; r++)
            if (!m[r][c].is_zero()) {
                pr = (int)r;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[r0], m[(size_t)pr]);
        FieldElem inv = m[r0][c].inv();
        for (size_t cc = c; cc < nc + nt; cc++)
            if (!m[r0][cc].is_zero()) m[r0][cc] *= inv;
        for (size_t r = 0; r < rows; r++) {
            if (r == r0 || m[r][c].is_zero()) continue;
            FieldElem f = m[r][c];
            for (size_t cc = c; cc < nc + nt; cc++)
                if (!m[r0][cc].is_zero()) m[r][cc] -= m[r0][cc] * f;
        }
        pivcol.push_back((int)c);
        r0++;
    }
    std::vector<SolveResult> results(nt);
    for (size_t t = 0; t < nt; t++) {
        bool ok = true;
        for (size_t r = r0; r < rows; r++)
            if (!m[r][nc + t].is_zero()) ok = false;
        if (!ok) continue;
        results[t].solvable = true;
        results[t].coeffs.assign(nc, FieldElem(0));
        for (size_t k = 0; k < pivcol.size(); k++) results[t].coeffs[pivcol[k]] = m[k][nc + t];
    }
    return results;
}

size_t nf_rank(const std::vector<NCPoly>& candidates, const RewriteSystem& rs) {
    std::vector<NCPoly> nfs;
    for (auto& c : candidates) nfs.push_back(rs.normal_form(c));
    DenseSystem sys(nfs);
    size_t nrows = sys.basis.size(), rank = 0;
    std::vector<bool> row_used(nrows, false);
    for (size_t c = 0; c < sys.cols.size(); c++) {
        int pr = -1;
        for (size_t r = 0; r < nrows; r++)
            if (!row_used[r] && !sys.cols[c][r].is_zero()) {
                pr = (int)r;
                break;
            }
        if (pr < 0) continue;
        row_used[pr] = true;
        rank++;
        FieldElem inv = sys.cols[c][pr].inv();
        for (size_t c2 = c + 1; c2 < sys.cols.size(); c2++) {
            if (sys.cols[c2][pr].is_zero()) continue;
            FieldElem f = sys.cols[c2][pr] * inv;
            for (size_t r = 0; r < nrows; r++)
                if (!sys.cols[c][r].is_zero()) sys.cols[c2][r] -= sys.cols[c][r] * f;
        }
    }
    return rank;
}

namespace {

// evaluate at u = u0, shifting so only nonnegative powers appear
Rat eval_at(const FieldElem& x, const Rat& u0) {
    long e0 = x.num().is_zero() ? 0 : x.num().min_exp();
    long e1 = x.den().min_exp();
    long lo = std::min(std::min(e0, e1), 0L);
    auto evp = [&](const LaurentPoly& q) {
        Rat acc = 0;
        for (auto& [e, c] : q.terms()) {
            Rat t = c;
            for (long k = 0; k < e - lo; k++) t *= u0;
            acc += t;
        }
        return acc;
    };
    Rat n = evp(x.num());
    Rat d = evp(x.den());
    if (d == 0) fail(Err::PoleAtSqrtQ, "bad specialization point");
    return n / d;
}

} // namespace

size_t nf_rank_specialized(const std::vector<NCPoly>& candidates, const RewriteSystem& rs,
                           const Rat& u0) {
    auto eval = [&](const FieldElem& x) -> Rat { return eval_at(x, u0); };
    std::vector<NCPoly> nfs;
    for (auto& c : candidates) nfs.push_back(rs.normal_form(c));
    DenseSystem sys(nfs);
    size_t nrows = sys.basis.size(), rank = 0;
    std::vector<std::vector<Rat>> cols;
    for (auto& col : sys.cols) {
        std::vector<Rat> c;
        c.reserve(col.size());
        for (auto& x : col) c.push_back(x.is_zero() ? Rat(0) : eval(x));
        cols.push_back(std::move(c));
    }
    std::vector<bool> row_used(nrows, false);
    for (size_t c = 0; c < cols.size(); c++) {
        int pr = -1;
        for (size_t r = 0; r < nrows; r++)
            if (!row_used[r] && cols[c][r] != 0) {
                pr = (int)r;
                break;
            }
        if (pr < 0) continue;
        row_used[pr] = true;
        rank++;
        Rat inv = 1 / cols[c][pr];
        for (size_t c2 = c + 1; c2 < cols.size(); c2++) {
            if (cols[c2][pr] == 0) continue;
            Rat f = cols[c2][pr] * inv;
            for (size_t r = 0; r < nrows; r++)
                if (cols[c][r] != 0) cols[c2][r] -= cols[c][r] * f;
        }
    }
    return rank;
}

SpecializedSolve linear_solve_specialized(const NCPoly& target, const std::vector<NCPoly>& candidates,
                                          const RewriteSystem& rs, const Rat& u0) {
    size_t nc = candidates.size();
    std::vector<NCPoly> nfs;
    nfs.reserve(nc + 1);
    for (auto& c : candidates) nfs.push_back(rs.normal_form(c));
    nfs.push_back(rs.normal_form(target));
    DenseSystem sys(nfs);
    size_t rows = sys.basis.size();
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(nc + 1, Rat(0)));
    for (size_t c = 0; c <= nc; c++)
        for (size_t r = 0; r < rows; r++)
            if (!sys.cols[c][r].is_zero()) m[r][c] = eval_at(sys.cols[c][r], u0);
    std::vector<int> pivcol;
    size_t r0 = 0;
    for (size_t c = 0; c < nc && r0 < rows; c++) {
        int pr = -1;
        for (size_t r = r0; r < rows; r++)
            if (m[r][c] != 0) {
                pr = (int)r;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[r0], m[(size_t)pr]);
        Rat inv = 1 / m[r0][c];
        for (size_t cc = c; cc <= nc; cc++) m[r0][cc] *= inv;
        for (size_t r = 0; r < rows; r++) {
            if (r == r0 || m[r][c] == 0) continue;
            Rat f = m[r][c];
            for (size_t cc = c; cc <= nc; cc++) m[r][cc] -= m[r0][cc] * f;
        }
        pivcol.push_back((int)c);
        r0++;
    }
    SpecializedSolve out;
    for (size_t r = r0; r < rows; r++)
        if (m[r][nc] != 0) return out;
    out.solvable = true;
    for (size_t k = 0; k < pivcol.size(); k++)
        if (m[k][nc] != 0) out.support.push_back((size_t)pivcol[k]);
    return out;
}

} // namespace iqt
