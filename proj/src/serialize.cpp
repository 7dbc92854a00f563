#include "milab/serialize.hpp"

namespace milab {

ordered_json betti_table_to_json(const BettiTable& t) {
    ordered_json entries = ordered_json::array();
    for (const auto& [key, beta] : t.entries)
        entries.push_back(ordered_json{{"i", key.first}, {"deg", key.second}, {"beta", beta}});
    return ordered_json{{"field", t.field.tag()}, {"entries", entries}};
}

ordered_json certificate_to_json(const CharacteristicPoset& p, const IntervalPartition& part) {
    ordered_json intervals = ordered_json::array();
    for (auto [a, b] : part.intervals)
        intervals.push_back(ordered_json{{"a", p.points[a]}, {"b", p.points[b]}});
    return ordered_json{{"g", p.g}, {"side", side_tag(p.side)}, {"intervals", intervals}, {"value", part.value}};
}

ordered_json report_to_json(const CheckReport& r) {
    ordered_json j;
    j["schema"] = "check-report/v1";
    j["check"] = r.check;
    ordered_json inputs;
    inputs["ideals"] = r.fingerprints;
    inputs["field"] = r.field_tag;
    j["inputs"] = inputs;
    ordered_json q;
    for (const auto& [name, v] : r.quantities) q[name] = v;
    j["quantities"] = q;
    for (const auto& [name, v] : r.notes) j["notes"][name] = v;
    j["verdict"] = verdict_tag(r.verdict);
    if (!r.witness.is_null()) j["witness"] = r.witness;
    return j;
}

ordered_json lcm_lattice_to_json(const MonomialIdeal& ideal, const LcmLattice& l) {
    ordered_json nodes = ordered_json::array();
    for (int a = 0; a < l.lattice.size(); ++a)
        nodes.push_back(ordered_json{{"id", a},
                                     {"deg", l.degree(a).exps},
                                     {"monomial", monomial_to_string(ideal, l.degree(a))},
                                     {"rank", l.lattice.rank(a)}});
    ordered_json covers = ordered_json::array();
    for (int a = 0; a < l.lattice.size(); ++a)
        for (int b : l.lattice.poset().upper_covers()[a]) covers.push_back(ordered_json::array({a, b}));
    return ordered_json{{"ideal", fingerprint(ideal)},
                        {"nodes", nodes},
                        {"covers", covers},
                        {"atoms", l.lattice.atoms()},
                        {"atomistic", l.lattice.atomistic()},
                        {"length", length(l.lattice.poset())}};
}

ordered_json labeled_subposet_to_json(const MonomialIdeal& ideal, const FinitePoset& poset,
                                      const std::vector<int>& lattice_nodes) {
    ordered_json nodes = ordered_json::array();
    for (int a = 0; a < poset.size(); ++a)
        nodes.push_back(ordered_json{{"id", a},
                                     {"lattice_node", lattice_nodes[a]},
                                     {"deg", poset.label(a).exps},
                                     {"monomial", monomial_to_string(ideal, poset.label(a))}});
    ordered_json covers = ordered_json::array();
    for (int a = 0; a < poset.size(); ++a)
        for (int b : poset.upper_covers()[a]) covers.push_back(ordered_json::array({a, b}));
    return ordered_json{{"ideal", fingerprint(ideal)},
                        {"nodes", nodes},
                        {"covers", covers},
                        {"canonical", canonical_form(poset)}};
}

ordered_json hilbert_to_json(const MonomialIdeal& ideal, const std::map<std::vector<int>, long>& numerator) {
    ordered_json terms = ordered_json::array();
    for (const auto& [deg, c] : numerator)
        terms.push_back(ordered_json{{"deg", deg}, {"coeff", c},
                                     {"monomial", monomial_to_string(ideal, Monomial{deg})}});
    return ordered_json{{"ideal", fingerprint(ideal)}, {"terms", terms}};
}

ordered_json summary_to_json(const MonomialIdeal& ideal, const HomologicalSummary& s, FieldSpec field) {
    return ordered_json{{"ideal", fingerprint(ideal)},
                        {"field", field.tag()},
                        {"nvars", ideal.nvars()},
                        {"pdim_quotient", s.pdim_quotient},
                        {"pdim_ideal", s.pdim_ideal},
                        {"depth_quotient", s.depth_quotient},
                        {"depth_ideal", s.depth_ideal}};
}

}  // namespace milab
