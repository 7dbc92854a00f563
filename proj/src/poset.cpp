#include "milab/poset.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace milab {

namespace {

void or_row(uint64_t* dst, const uint64_t* src, int words) {
    for (int w = 0; w < words; ++w) dst[w] |= src[w];
}

// true if a is a subset of b
bool row_subset(const uint64_t* a, const uint64_t* b, int words) {
    for (int w = 0; w < words; ++w)
        if (a[w] & ~b[w]) return false;
    return true;
}

int popcount_row(const uint64_t* a, int words) {
    int c = 0;
    for (int w = 0; w < words; ++w) c += __builtin_popcountll(a[w]);
    return c;
}

}  // namespace

FinitePoset FinitePoset::from_relations(int n, const std::vector<std::pair<int, int>>& relations) {
    BitMatrix up(n, n);
    for (int i = 0; i < n; ++i) up.set(i, i);
    for (auto [a, b] : relations) {
        if (a < 0 || a >= n || b < 0 || b >= n) fail(Errc::unknown_element, "relation endpoint out of range");
        up.set(a, b);
    }
    // Warshall closure over bit rows.
    int words = up.words_per_row();
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (up.get(i, k)) or_row(up.row(i), up.row(k), words);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (up.get(a, b) && up.get(b, a))
                fail(Errc::cycle_detected, "relations generate a cycle through nodes " + std::to_string(a) + " and " +
                                               std::to_string(b));
    return from_leq(n, up);
}

FinitePoset FinitePoset::from_leq(int n, const BitMatrix& leq) {
    FinitePoset p;
    p.n_ = n;
    p.up_ = leq;
    p.down_ = BitMatrix(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (leq.get(a, b)) p.down_.set(b, a);
    for (int a = 0; a < n; ++a) {
        if (!leq.get(a, a)) fail(Errc::cycle_detected, "relation not reflexive");
        for (int b = a + 1; b < n; ++b)
            if (leq.get(a, b) && leq.get(b, a)) fail(Errc::cycle_detected, "relation not antisymmetric");
    }
    p.finalize();
    return p;
}

void FinitePoset::finalize() {
    covers_up_.assign(n_, {});
    covers_dn_.assign(n_, {});
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            if (a == b || !up_.get(a, b)) continue;
            bool cover = true;
            for (int c = 0; c < n_ && cover; ++c)
                if (c != a && c != b && up_.get(a, c) && up_.get(c, b)) cover = false;
            if (cover) {
                covers_up_[a].push_back(b);
                covers_dn_[b].push_back(a);
            }
        }
}

void FinitePoset::set_labels(std::vector<Monomial> labels) {
    if (static_cast<int>(labels.size()) != n_) fail(Errc::unknown_element, "label count mismatch");
    labels_ = std::move(labels);
}

FinitePoset FinitePoset::induced(const std::vector<int>& keep) const {
    int m = static_cast<int>(keep.size());
    BitMatrix leq(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (up_.get(keep[i], keep[j])) leq.set(i, j);
    FinitePoset q = from_leq(m, leq);
    if (has_labels()) {
        std::vector<Monomial> lb(m);
        for (int i = 0; i < m; ++i) lb[i] = labels_[keep[i]];
        q.set_labels(std::move(lb));
    }
    return q;
}

std::vector<int> FinitePoset::minimal_elements() const {
    std::vector<int> r;
    for (int a = 0; a < n_; ++a)
        if (covers_dn_[a].empty()) r.push_back(a);
    return r;
}

std::vector<int> FinitePoset::maximal_elements() const {
    std::vector<int> r;
    for (int a = 0; a < n_; ++a)
        if (covers_up_[a].empty()) r.push_back(a);
    return r;
}

int length(const FinitePoset& p) {
    int n = p.size();
    if (n == 0) fail(Errc::empty_poset, "length of the empty poset");
    // longest chain ending at each node, by increasing down-set size
    std::vector<int> order(n), h(n, 0);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return popcount_row(p.down().row(a), p.down().words_per_row()) <
               popcount_row(p.down().row(b), p.down().words_per_row());
    });
    int best = 0;
    for (int a : order) {
        for (int d : p.lower_covers()[a]) h[a] = std::max(h[a], h[d] + 1);
        best = std::max(best, h[a]);
    }
    return best;
}

FiniteLattice FiniteLattice::from_poset(FinitePoset p) {
    int n = p.size();
    if (n == 0) fail(Errc::empty_poset, "lattice must be nonempty");
    FiniteLattice l;
    int words = p.up().words_per_row();
    l.meet_.assign(static_cast<size_t>(n) * n, -1);
    l.join_.assign(static_cast<size_t>(n) * n, -1);
    std::vector<uint64_t> buf(words);
    auto bound = [&](int a, int b, const BitMatrix& dir) -> int {
        // unique maximum of dir(a) ∩ dir(b) under dir-order (meet for down, join for up)
        const uint64_t* ra = dir.row(a);
        const uint64_t* rb = dir.row(b);
        for (int w = 0; w < words; ++w) buf[w] = ra[w] & rb[w];
        int found = -1;
        for (int w = 0; w < words; ++w) {
            uint64_t bits = buf[w];
            while (bits) {
                int c = w * 64 + __builtin_ctzll(bits);
                bits &= bits - 1;
                if (row_subset(buf.data(), dir.row(c), words)) {
                    if (found != -1) return -1;  // two maxima: impossible, but be safe
                    found = c;
                }
            }
        }
        return found;
    };
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            int m = bound(a, b, p.down());
            if (m < 0)
                throw Error(Errc::not_a_lattice,
                            "no meet for pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
            int j = bound(a, b, p.up());
            if (j < 0)
                throw Error(Errc::not_a_lattice,
                            "no join for pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
            l.meet_[static_cast<size_t>(a) * n + b] = l.meet_[static_cast<size_t>(b) * n + a] = m;
            l.join_[static_cast<size_t>(a) * n + b] = l.join_[static_cast<size_t>(b) * n + a] = j;
        }
    l.poset_ = std::move(p);
    int bot = 0, top = 0;
    for (int a = 1; a < n; ++a) {
        bot = l.meet_[static_cast<size_t>(bot) * n + a];
        top = l.join_[static_cast<size_t>(top) * n + a];
    }
    l.bottom_ = bot;
    l.top_ = top;
    l.atoms_ = l.poset_.upper_covers()[bot];
    std::sort(l.atoms_.begin(), l.atoms_.end());
    if (l.atoms_.size() > 64) fail(Errc::too_large, "more than 64 atoms");
    // atomistic: every element is the join of the atoms below it
    l.atomistic_ = true;
    for (int a = 0; a < n && l.atomistic_; ++a) {
        int j = bot;
        for (int at : l.atoms_)
            if (l.poset_.leq(at, a)) j = l.join_[static_cast<size_t>(j) * n + at];
        if (j != a) l.atomistic_ = false;
    }
    return l;
}

int FiniteLattice::rank(int a) const {
    if (a < 0 || a >= size()) fail(Errc::unknown_element, "rank: unknown node " + std::to_string(a));
    int r = 0;
    for (int at : atoms_)
        if (poset_.leq(at, a)) ++r;
    return r;
}

uint64_t FiniteLattice::atom_support(int a) const {
    if (a < 0 || a >= size()) fail(Errc::unknown_element, "atom_support: unknown node");
    uint64_t s = 0;
    for (size_t i = 0; i < atoms_.size(); ++i)
        if (poset_.leq(atoms_[i], a)) s |= uint64_t(1) << i;
    return s;
}

bool FiniteLattice::is_meet_irreducible(int a) const {
    int n = size();
    if (a < 0 || a >= n) fail(Errc::unknown_element, "is_meet_irreducible: unknown node");
    for (int b = 0; b < n; ++b) {
        if (b == a) continue;
        for (int c = b; c < n; ++c) {
            if (c == a) continue;
            if (meet(b, c) == a) return false;
        }
    }
    return true;
}

std::vector<int> FiniteLattice::meet_irreducibles() const {
    std::vector<int> r;
    for (int a = 0; a < size(); ++a)
        if (is_meet_irreducible(a)) r.push_back(a);
    return r;
}

FiniteLattice FiniteLattice::induced_sublattice(const std::vector<int>& keep, std::vector<int>* orig) const {
    if (orig) *orig = keep;
    return from_poset(poset_.induced(keep));
}

FiniteLattice FiniteLattice::remove_element(int a, std::vector<int>* orig) const {
    if (a < 0 || a >= size()) fail(Errc::unknown_element, "remove_element: unknown node");
    if (a == bottom_) fail(Errc::cannot_remove_bottom, "remove_element: cannot remove the bottom");
    if (!is_meet_irreducible(a)) fail(Errc::not_meet_irreducible, "remove_element: node is not meet-irreducible");
    std::vector<int> keep;
    keep.reserve(size() - 1);
    for (int b = 0; b < size(); ++b)
        if (b != a) keep.push_back(b);
    return induced_sublattice(keep, orig);
}

int rank(const FiniteLattice& l, int a) { return l.rank(a); }

SimplicialComplexData SimplicialComplexData::from_faces(int vertex_count, std::vector<std::vector<int>> faces) {
    SimplicialComplexData k;
    k.vertex_count = vertex_count;
    size_t maxc = 1;
    for (auto& f : faces) maxc = std::max(maxc, f.size() + 1);
    k.faces_by_card.assign(maxc, {});
    bool empty_seen = false;
    for (auto& f : faces) {
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end()) fail(Errc::unknown_element, "repeated vertex in face");
        for (int v : f)
            if (v < 0 || v >= vertex_count) fail(Errc::unknown_element, "face vertex out of range");
        if (f.empty()) empty_seen = true;
        k.faces_by_card[f.size()].push_back(std::move(f));
    }
    if (!empty_seen) fail(Errc::unknown_element, "the empty face must be present");
    for (auto& fs : k.faces_by_card) {
        std::sort(fs.begin(), fs.end());
        if (std::adjacent_find(fs.begin(), fs.end()) != fs.end()) fail(Errc::unknown_element, "duplicate face");
    }
    // downward closure check: every facet of every face is present
    for (size_t c = 2; c < k.faces_by_card.size(); ++c) {
        for (auto& f : k.faces_by_card[c]) {
            std::vector<int> sub(f.size() - 1);
            for (size_t drop = 0; drop < f.size(); ++drop) {
                size_t t = 0;
                for (size_t i = 0; i < f.size(); ++i)
                    if (i != drop) sub[t++] = f[i];
                if (!std::binary_search(k.faces_by_card[c - 1].begin(), k.faces_by_card[c - 1].end(), sub))
                    fail(Errc::unknown_element, "face family not closed under subsets");
            }
        }
    }
    return k;
}

SimplicialComplexData SimplicialComplexData::closure(int vertex_count, const std::vector<std::vector<int>>& facets) {
    std::vector<std::vector<int>> all;
    all.push_back({});
    std::vector<std::vector<int>> seen;
    auto add = [&](std::vector<int> f) {
        std::sort(f.begin(), f.end());
        all.push_back(std::move(f));
    };
    for (auto f : facets) {
        std::sort(f.begin(), f.end());
        int m = static_cast<int>(f.size());
        for (int mask = 1; mask < (1 << m); ++mask) {
            std::vector<int> sub;
            for (int i = 0; i < m; ++i)
                if (mask & (1 << i)) sub.push_back(f[i]);
            add(std::move(sub));
        }
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return from_faces(vertex_count, std::move(all));
}

SimplicialComplexData SimplicialComplexData::cone() const {
    int apex = vertex_count;
    std::vector<std::vector<int>> faces;
    for (auto& fs : faces_by_card)
        for (auto& f : fs) {
            faces.push_back(f);
            auto g = f;
            g.push_back(apex);
            faces.push_back(std::move(g));
        }
    return from_faces(vertex_count + 1, std::move(faces));
}

SimplicialComplexData open_lower_complex(const FiniteLattice& l, int m) {
    if (m < 0 || m >= l.size()) fail(Errc::unknown_element, "open_lower_complex: unknown node");
    if (m == l.bottom()) fail(Errc::bottom_excluded, "open_lower_complex: bottom has no open interval");
    std::vector<int> verts;
    for (int a = 0; a < l.size(); ++a)
        if (a != l.bottom() && a != m && l.poset().less(a, m)) verts.push_back(a);
    int v = static_cast<int>(verts.size());
    // faces = chains of the interval = cliques of the comparability graph
    std::vector<std::vector<char>> comp(v, std::vector<char>(v, 0));
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j)
            if (i != j && (l.poset().less(verts[i], verts[j]) || l.poset().less(verts[j], verts[i]))) comp[i][j] = 1;
    std::vector<std::vector<int>> faces;
    faces.push_back({});
    std::vector<int> cur;
    auto dfs = [&](auto&& self, int start) -> void {
        for (int i = start; i < v; ++i) {
            bool ok = true;
            for (int c : cur)
                if (!comp[c][i]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(i);
            faces.push_back(cur);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    dfs(dfs, 0);
    return SimplicialComplexData::from_faces(v, std::move(faces));
}

FiniteLattice meet_closure(int atom_count, const std::vector<uint64_t>& b_family, std::vector<uint64_t>* subsets) {
    if (atom_count < 0 || atom_count > 64) fail(Errc::too_large, "meet_closure supports at most 64 atoms");
    uint64_t full = atom_count == 64 ? ~uint64_t(0) : ((uint64_t(1) << atom_count) - 1);
    std::vector<uint64_t> elems = {full};
    for (uint64_t s : b_family) {
        if (s & ~full) fail(Errc::unknown_element, "meet_closure: member outside the ground set");
        elems.push_back(s);
    }
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    // close under pairwise intersection
    for (bool grew = true; grew;) {
        grew = false;
        size_t sz = elems.size();
        std::vector<uint64_t> add;
        for (size_t i = 0; i < sz; ++i)
            for (size_t j = i + 1; j < sz; ++j) {
                uint64_t x = elems[i] & elems[j];
                if (!std::binary_search(elems.begin(), elems.end(), x)) add.push_back(x);
            }
        if (!add.empty()) {
            grew = true;
            elems.insert(elems.end(), add.begin(), add.end());
            std::sort(elems.begin(), elems.end());
            elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
        }
    }
    // order nodes by (popcount, value) so the bottom is node 0
    std::sort(elems.begin(), elems.end(), [](uint64_t a, uint64_t b) {
        int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
        return pa != pb ? pa < pb : a < b;
    });
    int n = static_cast<int>(elems.size());
    BitMatrix leq(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((elems[i] & ~elems[j]) == 0) leq.set(i, j);
    FinitePoset p = FinitePoset::from_leq(n, leq);
    std::vector<Monomial> labels(n);
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(atom_count, 0);
        for (int bit = 0; bit < atom_count; ++bit)
            if (elems[i] >> bit & 1) e[bit] = 1;
        labels[i] = Monomial(std::move(e));
    }
    p.set_labels(std::move(labels));
    if (subsets) *subsets = elems;
    return FiniteLattice::from_poset(std::move(p));
}

// ---------------------------------------------------------------------------
// Canonical form by individualization-refinement. Initial colors come from
// (chain height, lower-cover count, upper-cover count); refinement hashes the
// sorted color multisets of covers; branching individualizes each member of
// the first non-singleton class and keeps the lexicographically least
// encoding over all leaves.
// ---------------------------------------------------------------------------

namespace {

struct CanonCtx {
    const FinitePoset* p;
    int n;
    std::string best;
    bool have_best = false;

    std::vector<int> refine(std::vector<int> color) const {
        for (;;) {
            std::vector<std::tuple<int, std::vector<int>, std::vector<int>, int>> keys(n);
            for (int a = 0; a < n; ++a) {
                std::vector<int> dn, up;
                for (int d : p->lower_covers()[a]) dn.push_back(color[d]);
                for (int u : p->upper_covers()[a]) up.push_back(color[u]);
                std::sort(dn.begin(), dn.end());
                std::sort(up.begin(), up.end());
                keys[a] = {color[a], std::move(dn), std::move(up), a};
            }
            auto sorted = keys;
            std::sort(sorted.begin(), sorted.end());
            std::vector<int> next(n);
            int classes = 0;
            for (int i = 0; i < n; ++i) {
                if (i > 0 && (std::get<0>(sorted[i]) != std::get<0>(sorted[i - 1]) ||
                              std::get<1>(sorted[i]) != std::get<1>(sorted[i - 1]) ||
                              std::get<2>(sorted[i]) != std::get<2>(sorted[i - 1])))
                    ++classes;
                next[std::get<3>(sorted[i])] = classes;
            }
            if (next == color) return color;
            color = std::move(next);
        }
    }

    std::string encode(const std::vector<int>& color) const {
        std::vector<int> perm(n);  // perm[new] = old
        for (int a = 0; a < n; ++a) perm[color[a]] = a;
        std::string bits((static_cast<size_t>(n) * n + 3) / 4, '0');
        static const char* hex = "0123456789abcdef";
        std::vector<int> nibble(bits.size(), 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (p->less(perm[i], perm[j])) {
                    size_t bit = static_cast<size_t>(i) * n + j;
                    nibble[bit / 4] |= 1 << (3 - bit % 4);
                }
        for (size_t i = 0; i < bits.size(); ++i) bits[i] = hex[nibble[i]];
        return "MP1:" + std::to_string(n) + ":" + bits;
    }

    void run(std::vector<int> color) {
        color = refine(std::move(color));
        // first class with >= 2 members
        std::vector<int> count(n, 0);
        for (int a = 0; a < n; ++a) ++count[color[a]];
        int cell = -1;
        for (int c = 0; c < n; ++c)
            if (count[c] >= 2) {
                cell = c;
                break;
            }
        if (cell < 0) {
            std::string s = encode(color);
            if (!have_best || s < best) {
                best = std::move(s);
                have_best = true;
            }
            return;
        }
        for (int a = 0; a < n; ++a) {
            if (color[a] != cell) continue;
            auto branched = color;
            for (int b = 0; b < n; ++b)
                if (branched[b] >= cell && b != a) branched[b] += 1;
            run(std::move(branched));
        }
    }
};

}  // namespace

std::string canonical_form(const FinitePoset& p) {
    int n = p.size();
    if (n == 0) return "MP1:0:";
    std::vector<int> h(n, 0);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return popcount_row(p.down().row(a), p.down().words_per_row()) <
               popcount_row(p.down().row(b), p.down().words_per_row());
    });
    for (int a : order)
        for (int d : p.lower_covers()[a]) h[a] = std::max(h[a], h[d] + 1);
    std::vector<std::tuple<int, int, int, int>> keys(n);
    for (int a = 0; a < n; ++a)
        keys[a] = {h[a], static_cast<int>(p.lower_covers()[a].size()), static_cast<int>(p.upper_covers()[a].size()), a};
    auto sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> color(n);
    int classes = 0;
    for (int i = 0; i < n; ++i) {
        if (i > 0 && (std::get<0>(sorted[i]) != std::get<0>(sorted[i - 1]) ||
                      std::get<1>(sorted[i]) != std::get<1>(sorted[i - 1]) ||
                      std::get<2>(sorted[i]) != std::get<2>(sorted[i - 1])))
            ++classes;
        color[std::get<3>(sorted[i])] = classes;
    }
    CanonCtx ctx{&p, n, {}, false};
    ctx.run(std::move(color));
    return ctx.best;
}

bool is_isomorphic(const FinitePoset& p, const FinitePoset& q) {
    if (p.size() != q.size()) return false;
    return canonical_form(p) == canonical_form(q);
}

FiniteLattice boolean_lattice(int k) {
    if (k < 0 || k > 20) fail(Errc::too_large, "boolean_lattice: unsupported atom count");
    std::vector<uint64_t> all;
    for (uint64_t s = 0; s < (uint64_t(1) << k); ++s) all.push_back(s);
    return meet_closure(k, all);
}

DecreasingRankChain decreasing_rank_chain(const FiniteLattice& l, const std::vector<int>& m_nodes) {
    int n = l.size();
    std::vector<char> in_m(n, 0);
    for (int a : m_nodes) {
        if (a < 0 || a >= n) fail(Errc::unknown_element, "decreasing_rank_chain: unknown node in M");
        in_m[a] = 1;
    }
    if (!in_m[l.bottom()]) fail(Errc::not_meet_closed, "decreasing_rank_chain: M must contain the bottom");
    if (!in_m[l.top()]) fail(Errc::not_meet_closed, "decreasing_rank_chain: M must contain the top");
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (in_m[a] && in_m[b] && !in_m[l.meet(a, b)])
                fail(Errc::not_meet_closed, "decreasing_rank_chain: M not closed under meets");

    std::vector<int> removal;
    for (int a = 0; a < n; ++a)
        if (!in_m[a]) removal.push_back(a);
    std::stable_sort(removal.begin(), removal.end(), [&](int a, int b) { return l.rank(a) > l.rank(b); });

    DecreasingRankChain chain;
    chain.lattices.push_back(l);
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i;
    chain.original_ids.push_back(ids);
    chain.removed = removal;

    std::vector<char> gone(n, 0);
    for (size_t step = 0; step < removal.size(); ++step) {
        gone[removal[step]] = 1;
        std::vector<int> keep;
        for (int a = 0; a < n; ++a)
            if (!gone[a]) keep.push_back(a);
        FiniteLattice li;
        try {
            li = FiniteLattice::from_poset(l.poset().induced(keep));
        } catch (const Error& e) {
            if (e.code() == Errc::not_a_lattice)
                throw Error(Errc::step_not_lattice,
                            "decreasing_rank_chain: step " + std::to_string(step + 1) + " is not a lattice");
            throw;
        }
        chain.lattices.push_back(std::move(li));
        chain.original_ids.push_back(keep);
    }
    return chain;
}

}  // namespace milab
