#include "milab/betti.hpp"

#include <algorithm>

namespace milab {

std::vector<std::map<int, long>> lattice_interval_homology(const FiniteLattice& l, FieldSpec field) {
    std::vector<std::map<int, long>> out(l.size());
    for (int m = 0; m < l.size(); ++m) {
        if (m == l.bottom()) continue;
        auto ranks = reduced_homology_ranks(open_lower_complex(l, m), field);
        for (auto [deg, r] : ranks)
            if (r != 0) out[m][deg] = r;
    }
    return out;
}

std::vector<int> betti_nodes_of_lattice(const FiniteLattice& l, FieldSpec field) {
    auto hom = lattice_interval_homology(l, field);
    std::vector<int> nodes;
    for (int m = 0; m < l.size(); ++m)
        if (!hom[m].empty()) nodes.push_back(m);
    return nodes;
}

BettiTable betti_table(const MonomialIdeal& ideal, FieldSpec field, size_t node_cap) {
    LcmLattice l = lcm_lattice(ideal, node_cap);
    BettiTable t;
    t.field = field;
    t.ambient = ideal.nvars();
    auto hom = lattice_interval_homology(l.lattice, field);
    for (int m = 0; m < l.lattice.size(); ++m)
        for (auto [deg, r] : hom[m]) t.entries[{deg + 2, l.degree(m).exps}] = r;
    return t;
}

BettiTable taylor_betti_oracle(const MonomialIdeal& ideal, FieldSpec field) {
    int k = static_cast<int>(ideal.generators.size());
    if (k > 20) fail(Errc::too_many_generators, "taylor_betti_oracle: more than 20 generators");
    // group the 2^k cells by their lcm
    std::vector<Monomial> lcm_of(size_t(1) << k);
    lcm_of[0] = Monomial(std::vector<int>(ideal.nvars(), 0));
    std::map<Monomial, std::vector<uint32_t>> strands;
    for (uint32_t s = 1; s < (uint32_t(1) << k); ++s) {
        uint32_t low = s & (s - 1);
        int bit = __builtin_ctz(s);
        lcm_of[s] = lcm_of[low].lcm_with(ideal.generators[bit]);
        strands[lcm_of[s]].push_back(s);
    }
    BettiTable t;
    t.field = field;
    t.ambient = ideal.nvars();
    for (auto& [deg, cells] : strands) {
        // strand complex: cells with this exact lcm, graded by subset size;
        // the boundary keeps only faces that stay in the strand
        int maxsz = 0;
        std::map<uint32_t, int> index;
        std::vector<std::vector<uint32_t>> by_size(k + 1);
        for (uint32_t s : cells) {
            int sz = __builtin_popcount(s);
            maxsz = std::max(maxsz, sz);
            by_size[sz].push_back(s);
        }
        for (auto& v : by_size) {
            std::sort(v.begin(), v.end());
            for (size_t i = 0; i < v.size(); ++i) index[v[i]] = static_cast<int>(i);
        }
        std::vector<int> ranks(maxsz + 2, 0);
        for (int sz = 1; sz <= maxsz; ++sz) {
            if (by_size[sz].empty() || by_size[sz - 1].empty()) continue;
            SparseIntMatrix b(static_cast<int>(by_size[sz - 1].size()), static_cast<int>(by_size[sz].size()));
            for (size_t c = 0; c < by_size[sz].size(); ++c) {
                uint32_t s = by_size[sz][c];
                int pos = 0;
                for (uint32_t bits = s; bits; bits &= bits - 1, ++pos) {
                    uint32_t face = s & ~(bits & -bits);
                    if (lcm_of[face] == deg)
                        b.col_entries[c].push_back({index.at(face), pos % 2 == 0 ? 1 : -1});
                }
            }
            ranks[sz] = rank_over(b, field);
        }
        for (int sz = 1; sz <= maxsz; ++sz) {
            long beta = static_cast<long>(by_size[sz].size()) - ranks[sz] - ranks[sz + 1];
            if (beta != 0) t.entries[{sz, deg.exps}] = beta;
        }
    }
    return t;
}

BettiPoset betti_poset(const MonomialIdeal& ideal, FieldSpec field) {
    LcmLattice l = lcm_lattice(ideal);
    BettiPoset b;
    b.field = field;
    b.lattice_nodes = betti_nodes_of_lattice(l.lattice, field);
    b.poset = l.lattice.poset().induced(b.lattice_nodes);
    return b;
}

HomologicalSummary homological_summary(const MonomialIdeal& ideal, FieldSpec field) {
    BettiTable t = betti_table(ideal, field);
    HomologicalSummary s;
    s.pdim_quotient = t.max_degree();
    s.pdim_ideal = s.pdim_quotient - 1;
    s.depth_quotient = ideal.nvars() - s.pdim_quotient;
    s.depth_ideal = s.depth_quotient + 1;
    return s;
}

ScarfComplex scarf_complex(const MonomialIdeal& ideal) {
    LcmLattice l = lcm_lattice(ideal);
    // count atom subsets joining to each node
    int n = l.lattice.size();
    std::vector<long> reps(n, 0);
    const auto& atoms = l.lattice.atoms();
    int k = static_cast<int>(atoms.size());
    if (k > 20) fail(Errc::too_many_generators, "scarf_complex: more than 20 generators");
    std::vector<int> join_of(size_t(1) << k);
    join_of[0] = l.lattice.bottom();
    for (uint32_t s = 1; s < (uint32_t(1) << k); ++s) {
        uint32_t low = s & (s - 1);
        int bit = __builtin_ctz(s);
        join_of[s] = l.lattice.join(join_of[low], atoms[bit]);
        ++reps[join_of[s]];
    }
    ScarfComplex sc;
    for (int a = 0; a < n; ++a)
        if (a != l.lattice.bottom() && reps[a] == 1) sc.lattice_nodes.push_back(a);
    sc.poset = l.lattice.poset().induced(sc.lattice_nodes);
    return sc;
}

std::map<std::vector<int>, long> hilbert_numerator(const MonomialIdeal& ideal, HilbertSource source, FieldSpec field) {
    std::map<std::vector<int>, long> coeff;
    if (source == HilbertSource::betti) {
        BettiTable t = betti_table(ideal, field);
        coeff[std::vector<int>(ideal.nvars(), 0)] += 1;  // implicit beta_{0,1}
        for (auto& [key, beta] : t.entries) coeff[key.second] += (key.first % 2 == 0 ? 1 : -1) * beta;
    } else {
        int k = static_cast<int>(ideal.generators.size());
        if (k > 20) fail(Errc::too_many_generators, "hilbert_numerator: more than 20 generators");
        std::vector<Monomial> lcm_of(size_t(1) << k);
        lcm_of[0] = Monomial(std::vector<int>(ideal.nvars(), 0));
        coeff[lcm_of[0].exps] += 1;
        for (uint32_t s = 1; s < (uint32_t(1) << k); ++s) {
            uint32_t low = s & (s - 1);
            int bit = __builtin_ctz(s);
            lcm_of[s] = lcm_of[low].lcm_with(ideal.generators[bit]);
            coeff[lcm_of[s].exps] += __builtin_popcount(s) % 2 == 0 ? 1 : -1;
        }
    }
    for (auto it = coeff.begin(); it != coeff.end();)
        it = it->second == 0 ? coeff.erase(it) : std::next(it);
    return coeff;
}

}  // namespace milab
