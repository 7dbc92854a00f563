#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "milab/betti.hpp"
#include "milab/stanley.hpp"

namespace milab {

enum class Verdict { holds, violated, unknown, not_applicable };

std::string verdict_tag(Verdict v);

// One verification run: named quantities, a verdict, and (for violations)
// a witness that reproduces it.
struct CheckReport {
    std::string check;
    std::vector<std::string> fingerprints;
    std::string field_tag;
    std::vector<std::pair<std::string, long long>> quantities;
    std::vector<std::pair<std::string, std::string>> notes;
    Verdict verdict = Verdict::unknown;
    nlohmann::ordered_json witness;  // null unless set

    void put(const std::string& name, long long v) { quantities.push_back({name, v}); }
    void note(const std::string& name, const std::string& v) { notes.push_back({name, v}); }
};

struct CheckBudgets {
    long long search = 100'000'000;  // partition-search expansions
    long grid = 1'000'000;           // characteristic poset cells
    long long map_search = 50'000'000;
};

// Join-preserving surjection L -> L2 fixing the bottoms, encoded by atom
// images in L2; nullopt is an exact absence verdict.
std::optional<std::vector<int>> find_join_surjection(const FiniteLattice& l, const FiniteLattice& l2,
                                                     long long budget = 50'000'000);

// Squarefree ideal whose lcm-lattice is isomorphic to the given atomistic
// lattice: a variable per meet-irreducible (top excluded), a generator per
// atom collecting the variables of the meet-irreducibles not above it.
MonomialIdeal realize_lattice(const FiniteLattice& l);

CheckReport surjection_monotonicity_check(const MonomialIdeal& i1, const MonomialIdeal& i2, FieldSpec field,
                                          const CheckBudgets& budgets = {});

CheckReport mb_chain_check(const MonomialIdeal& ideal, FieldSpec field, const CheckBudgets& budgets = {});

CheckReport check_onestep(const MonomialIdeal& ideal, const std::string& var, FieldSpec field,
                          const CheckBudgets& budgets = {});

CheckReport conjecture_scan(const std::vector<MonomialIdeal>& corpus, FieldSpec field,
                            const CheckBudgets& budgets = {});

CheckReport stanley_bounds_check(const MonomialIdeal& ideal, const CheckBudgets& budgets = {});

CheckReport length_bounds_check(const MonomialIdeal& ideal, const CheckBudgets& budgets = {});

// Lattice-level reduction inequality at a meet-irreducible node; p defaults
// to pdim S/I.
CheckReport reduction_lemma_check(const MonomialIdeal& ideal, int node, std::optional<int> p = {},
                                  const CheckBudgets& budgets = {});

CheckReport generic_weak_check(const MonomialIdeal& i1, const MonomialIdeal& i2, FieldSpec field,
                               const CheckBudgets& budgets = {});

}  // namespace milab
