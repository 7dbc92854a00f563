#pragma once

#include <map>
#include <vector>

#include "milab/homology.hpp"
#include "milab/monomial.hpp"

namespace milab {

// Multigraded Betti numbers of S/I; only strictly positive entries are kept
// and the unit entry in homological degree 0 stays implicit.
struct BettiTable {
    FieldSpec field;
    int ambient = 0;
    std::map<std::pair<int, std::vector<int>>, long> entries;  // (i, multidegree) -> beta

    long beta(int i, const Monomial& m) const {
        auto it = entries.find({i, m.exps});
        return it == entries.end() ? 0 : it->second;
    }
    int max_degree() const {
        int d = 0;
        for (auto& [key, v] : entries) d = std::max(d, key.first);
        return d;
    }
    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

// Per-node Betti numbers of an abstract lattice: homology of the order
// complex of each open lower interval. Index 0 pairs with the lattice node;
// the bottom always gets an empty map.
std::vector<std::map<int, long>> lattice_interval_homology(const FiniteLattice& l, FieldSpec field);

// Nodes (bottom excluded) with some nonvanishing interval homology.
std::vector<int> betti_nodes_of_lattice(const FiniteLattice& l, FieldSpec field);

BettiTable betti_table(const MonomialIdeal& ideal, FieldSpec field, size_t node_cap = size_t(1) << 16);

// Independent route: homology of the multigraded Taylor complex, strand by
// strand. TooManyGenerators above 20 generators.
BettiTable taylor_betti_oracle(const MonomialIdeal& ideal, FieldSpec field);

struct BettiPoset {
    FinitePoset poset;               // labeled by multidegrees
    FieldSpec field;
    std::vector<int> lattice_nodes;  // ids in the lcm-lattice
};

BettiPoset betti_poset(const MonomialIdeal& ideal, FieldSpec field);

struct HomologicalSummary {
    int pdim_quotient = 0;
    int pdim_ideal = 0;
    int depth_quotient = 0;
    int depth_ideal = 0;
};

HomologicalSummary homological_summary(const MonomialIdeal& ideal, FieldSpec field);

// Lattice nodes with a unique representation as a join of atoms.
struct ScarfComplex {
    FinitePoset poset;  // labeled by multidegrees
    std::vector<int> lattice_nodes;
};

ScarfComplex scarf_complex(const MonomialIdeal& ideal);

enum class HilbertSource { betti, taylor };

// Numerator of the multigraded Hilbert series of S/I over prod(1 - t_j),
// as multidegree -> integer coefficient (zeros dropped).
std::map<std::vector<int>, long> hilbert_numerator(const MonomialIdeal& ideal, HilbertSource source,
                                                   FieldSpec field = FieldSpec::rational());

}  // namespace milab
