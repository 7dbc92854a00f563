#include "milab/stanley.hpp"

#include <algorithm>

namespace milab {

CharacteristicPoset characteristic_poset(const MonomialIdeal& ideal, Side side,
                                         const std::optional<Monomial>& g_extension, long grid_budget) {
    Monomial def = ideal.generator_lcm();
    std::vector<int> g = def.exps;
    if (g_extension) {
        if (g_extension->nvars() != ideal.nvars()) fail(Errc::cap_too_small, "g extension arity mismatch");
        for (int j = 0; j < ideal.nvars(); ++j) {
            if (g_extension->exps[j] < def.exps[j])
                fail(Errc::cap_too_small, "g extension below the generator lcm in coordinate " + std::to_string(j));
            g[j] = g_extension->exps[j];
        }
    }
    int nv = ideal.nvars();
    long total = 1;
    for (int j = 0; j < nv; ++j) {
        if (total > grid_budget / (g[j] + 1) + 1) fail(Errc::too_large, "characteristic poset grid exceeds budget");
        total *= g[j] + 1;
    }
    if (total > grid_budget) fail(Errc::too_large, "characteristic poset grid exceeds budget");

    CharacteristicPoset p;
    p.g = g;
    p.side = side;
    p.radix.assign(nv, 1);
    for (int j = nv - 2; j >= 0; --j) p.radix[j] = p.radix[j + 1] * (g[j + 1] + 1);
    p.grid.assign(total, -1);

    std::vector<std::vector<int>> pts;
    std::vector<int> e(nv, 0);
    for (;;) {
        bool in_ideal = ideal.contains(Monomial{e});
        if ((side == Side::ideal) == in_ideal) pts.push_back(e);
        int j = nv - 1;
        while (j >= 0 && e[j] == g[j]) e[j--] = 0;
        if (j < 0) break;
        ++e[j];
    }
    std::sort(pts.begin(), pts.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        long da = 0, db = 0;
        for (int x : a) da += x;
        for (int x : b) db += x;
        return da != db ? da < db : a < b;
    });
    p.points = std::move(pts);
    p.rho.resize(p.points.size());
    for (int i = 0; i < p.size(); ++i) {
        int r = 0;
        for (int j = 0; j < nv; ++j)
            if (p.points[i][j] == g[j]) ++r;
        p.rho[i] = r;
        p.grid[p.grid_index(p.points[i])] = i;
    }
    return p;
}

namespace {

// Backtracking exact cover. The first uncovered point in the (total degree,
// lex) order must be the bottom of the next interval, because every point
// below it is already covered and intervals are downward-connected boxes.
struct PartitionSearch {
    const CharacteristicPoset& p;
    int k;
    long long budget;
    long long expansions = 0;
    std::vector<char> covered;
    std::vector<std::vector<int>> tops;  // admissible interval tops per point
    std::vector<std::pair<int, int>> chosen;

    explicit PartitionSearch(const CharacteristicPoset& p, int k, long long budget)
        : p(p), k(k), budget(budget), covered(p.size(), 0) {}

    // all poset points in the box [a, b], via odometer over coordinates
    template <typename F>
    void for_box(int a, int b, F&& fn) const {
        const auto& lo = p.points[a];
        const auto& hi = p.points[b];
        std::vector<int> e = lo;
        for (;;) {
            int idx = p.point_at(e);
            fn(idx);
            int j = static_cast<int>(e.size()) - 1;
            while (j >= 0 && e[j] == hi[j]) e[j] = lo[j], --j;
            if (j < 0) break;
            ++e[j];
        }
    }

    bool prepare() {
        tops.assign(p.size(), {});
        for (int a = 0; a < p.size(); ++a) {
            for (int b = a; b < p.size(); ++b)
                if (p.rho[b] >= k && p.leq(a, b)) tops[a].push_back(b);
            if (tops[a].empty()) return false;  // a can never be covered
        }
        return true;
    }

    bool search(int from) {
        int first = -1;
        for (int i = from; i < p.size(); ++i)
            if (!covered[i]) {
                first = i;
                break;
            }
        if (first < 0) return true;
        for (int b : tops[first]) {
            if (covered[b]) continue;
            if (++expansions > budget)
                throw BudgetExceededError("partition search budget exceeded", expansions, k);
            bool free = true;
            for_box(first, b, [&](int idx) {
                if (covered[idx]) free = false;
            });
            if (!free) continue;
            for_box(first, b, [&](int idx) { covered[idx] = 1; });
            chosen.push_back({first, b});
            if (search(first + 1)) return true;
            chosen.pop_back();
            for_box(first, b, [&](int idx) { covered[idx] = 0; });
        }
        return false;
    }
};

}  // namespace

std::optional<IntervalPartition> exists_partition_with_min_rho(const CharacteristicPoset& p, int k, long long budget) {
    PartitionSearch s(p, k, budget);
    if (!s.prepare()) return std::nullopt;
    if (!s.search(0)) return std::nullopt;
    IntervalPartition part;
    part.intervals = std::move(s.chosen);
    part.value = static_cast<int>(p.g.size());
    for (auto [a, b] : part.intervals) part.value = std::min(part.value, p.rho[b]);
    return part;
}

SdepthResult sdepth(const CharacteristicPoset& p, long long budget) {
    int n = static_cast<int>(p.g.size());
    // cheap upper bound: every point must sit in an interval whose top
    // dominates it, so sdepth <= min over points of max rho above
    int ub = n;
    for (int a = 0; a < p.size(); ++a) {
        int best = -1;
        for (int b = a; b < p.size(); ++b)
            if (p.leq(a, b)) best = std::max(best, p.rho[b]);
        ub = std::min(ub, best);
    }
    for (int k = ub; k >= 0; --k) {
        auto part = exists_partition_with_min_rho(p, k, budget);
        if (part) return {k, std::move(*part)};
    }
    fail(Errc::invalid_partition, "sdepth: no partition found at k = 0");
}

SdepthResult sdepth(const MonomialIdeal& ideal, Side side, long long budget) {
    return sdepth(characteristic_poset(ideal, side), budget);
}

int spdim(const MonomialIdeal& ideal, Side side, long long budget) {
    return ideal.nvars() - sdepth(ideal, side, budget).value;
}

StanleyDecomposition partition_to_stanley_decomposition(const CharacteristicPoset& p, const IntervalPartition& part) {
    auto diag = verify_partition(p, part);
    if (!diag.ok) fail(Errc::invalid_partition, "partition_to_stanley_decomposition: " + diag.problem);
    StanleyDecomposition d;
    for (auto [a, b] : part.intervals) {
        StanleySpace s;
        s.generator = Monomial{p.points[a]};
        for (size_t j = 0; j < p.g.size(); ++j)
            if (p.points[b][j] == p.g[j]) s.var_indices.push_back(static_cast<int>(j));
        d.spaces.push_back(std::move(s));
    }
    return d;
}

PartitionDiagnostics verify_partition(const CharacteristicPoset& p, const IntervalPartition& part) {
    PartitionDiagnostics diag;
    std::vector<int> covered(p.size(), 0);
    int value = static_cast<int>(p.g.size());
    for (auto [a, b] : part.intervals) {
        if (a < 0 || a >= p.size() || b < 0 || b >= p.size()) {
            diag.problem = "interval endpoint is not a poset point";
            return diag;
        }
        if (!p.leq(a, b)) {
            diag.problem = "interval bottom does not divide its top";
            diag.witness = p.points[a];
            return diag;
        }
        value = std::min(value, p.rho[b]);
        // walk the box; any grid cell not in the poset means the interval
        // leaves the side
        const auto& lo = p.points[a];
        const auto& hi = p.points[b];
        std::vector<int> e = lo;
        for (;;) {
            int idx = p.grid[p.grid_index(e)];
            if (idx < 0) {
                diag.problem = "interval leaves the poset";
                diag.witness = e;
                return diag;
            }
            if (++covered[idx] > 1) {
                diag.problem = "intervals overlap";
                diag.witness = e;
                return diag;
            }
            int j = static_cast<int>(e.size()) - 1;
            while (j >= 0 && e[j] == hi[j]) e[j] = lo[j], --j;
            if (j < 0) break;
            ++e[j];
        }
    }
    for (int i = 0; i < p.size(); ++i)
        if (!covered[i]) {
            diag.problem = "coverage gap";
            diag.witness = p.points[i];
            return diag;
        }
    // counting invariant of the induced decomposition: each point lies in
    // exactly one space
    StanleyDecomposition d;
    for (auto [a, b] : part.intervals) {
        StanleySpace s;
        s.generator = Monomial{p.points[a]};
        for (size_t j = 0; j < p.g.size(); ++j)
            if (p.points[b][j] == p.g[j]) s.var_indices.push_back(static_cast<int>(j));
        d.spaces.push_back(std::move(s));
    }
    for (int i = 0; i < p.size(); ++i) {
        int hits = 0;
        for (auto& s : d.spaces) {
            if (!s.generator.divides(Monomial{p.points[i]})) continue;
            bool inside = true;
            for (size_t j = 0; j < p.g.size() && inside; ++j)
                if (p.points[i][j] != s.generator.exps[j] &&
                    std::find(s.var_indices.begin(), s.var_indices.end(), static_cast<int>(j)) == s.var_indices.end())
                    inside = false;
            if (inside) ++hits;
        }
        if (hits != 1) {
            diag.problem = "decomposition counting failure (" + std::to_string(hits) + " spaces contain a point)";
            diag.witness = p.points[i];
            return diag;
        }
    }
    diag.ok = true;
    diag.value = value;
    return diag;
}

}  // namespace milab
