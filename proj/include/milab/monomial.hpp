#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "milab/poset.hpp"

namespace milab {

// Monomial ideal given by its minimal generators, which are kept as a
// divisibility antichain sorted lexicographically by exponent vector.
struct MonomialIdeal {
    std::vector<std::string> variables;
    std::vector<Monomial> generators;

    MonomialIdeal() = default;
    MonomialIdeal(std::vector<std::string> vars, std::vector<Monomial> gens);

    int nvars() const { return static_cast<int>(variables.size()); }
    bool is_squarefree() const {
        for (auto& g : generators)
            if (!g.is_squarefree()) return false;
        return true;
    }
    // componentwise lcm of all generators
    Monomial generator_lcm() const;
    bool contains(const Monomial& m) const {
        for (auto& g : generators)
            if (g.divides(m)) return true;
        return false;
    }
    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
};

// Divisibility-maximal antichain of the input, order of survivors preserved.
std::vector<Monomial> minimalize(const std::vector<Monomial>& gens);

MonomialIdeal parse_ideal(const std::string& text);
std::string print_ideal(const MonomialIdeal& ideal);
std::string monomial_to_string(const MonomialIdeal& ideal, const Monomial& m);

// Stable content hash of the canonical printed form, "mi1:" + 16 hex digits.
std::string fingerprint(const MonomialIdeal& ideal);

// All lcms of nonempty generator subsets plus an adjoined bottom labeled by
// the unit monomial; order is divisibility. Nodes are sorted lexicographically
// by exponent vector, so node 0 is the bottom.
struct LcmLattice {
    FiniteLattice lattice;
    const Monomial& degree(int node) const { return lattice.poset().label(node); }
    int node_of(const Monomial& m) const;  // -1 if absent
};

LcmLattice lcm_lattice(const MonomialIdeal& ideal, size_t node_cap = size_t(1) << 16);

// Exponent of v dropped by one (floored at zero) in every generator, then
// minimalized. UnitGenerator if the result is the unit ideal.
MonomialIdeal colon_by_variable(const MonomialIdeal& ideal, const std::string& v);

// Both ideals side by side over the concatenated variable list; clashing
// names from the second ideal get numeric suffixes.
MonomialIdeal disjoint_sum(const MonomialIdeal& a, const MonomialIdeal& b);

// Whenever two distinct generators share the same positive exponent in some
// variable, a third generator must strictly divide their lcm (strictly:
// smaller exponent in every variable of the lcm's support).
bool is_generic(const MonomialIdeal& ideal);

MonomialIdeal random_ideal(int n_vars, int n_gens, int max_exp, bool squarefree, uint64_t seed);

}  // namespace milab
