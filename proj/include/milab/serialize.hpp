#pragma once

#include "json.hpp"

#include "milab/checks.hpp"

namespace milab {

using ordered_json = nlohmann::ordered_json;

// {"field": "q"|"fp:<p>", "entries": [{"i", "deg", "beta"}...]} sorted by (i, deg)
ordered_json betti_table_to_json(const BettiTable& t);

// {"g", "side", "intervals": [{"a", "b"}...], "value"}
ordered_json certificate_to_json(const CharacteristicPoset& p, const IntervalPartition& part);

ordered_json report_to_json(const CheckReport& r);

ordered_json lcm_lattice_to_json(const MonomialIdeal& ideal, const LcmLattice& l);

ordered_json labeled_subposet_to_json(const MonomialIdeal& ideal, const FinitePoset& poset,
                                      const std::vector<int>& lattice_nodes);

ordered_json hilbert_to_json(const MonomialIdeal& ideal, const std::map<std::vector<int>, long>& numerator);

ordered_json summary_to_json(const MonomialIdeal& ideal, const HomologicalSummary& s, FieldSpec field);

}  // namespace milab
