#include "milab/checks.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace milab {

using json = nlohmann::ordered_json;

std::string verdict_tag(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::violated: return "violated";
        case Verdict::unknown: return "unknown";
        case Verdict::not_applicable: return "not-applicable";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// Join-preserving surjections
// ---------------------------------------------------------------------------

namespace {

// On an atomistic lattice a bottom-fixing join-preserving map is determined
// by its atom images: f(x) = join of f(a) over atoms a <= x.
std::vector<int> extend_by_joins(const FiniteLattice& l, const FiniteLattice& l2, const std::vector<int>& atom_img) {
    std::vector<int> f(l.size(), l2.bottom());
    const auto& atoms = l.atoms();
    for (int x = 0; x < l.size(); ++x) {
        int v = l2.bottom();
        for (size_t i = 0; i < atoms.size(); ++i)
            if (l.poset().leq(atoms[i], x)) v = l2.join(v, atom_img[i]);
        f[x] = v;
    }
    return f;
}

bool is_join_preserving_surjection(const FiniteLattice& l, const FiniteLattice& l2, const std::vector<int>& f) {
    std::vector<char> hit(l2.size(), 0);
    for (int x = 0; x < l.size(); ++x) hit[f[x]] = 1;
    for (int y = 0; y < l2.size(); ++y)
        if (!hit[y]) return false;
    if (f[l.bottom()] != l2.bottom()) return false;
    for (int x = 0; x < l.size(); ++x)
        for (int y = x; y < l.size(); ++y)
            if (f[l.join(x, y)] != l2.join(f[x], f[y])) return false;
    return true;
}

struct SurjectionSearch {
    const FiniteLattice& l;
    const FiniteLattice& l2;
    long long budget;
    long long expansions = 0;
    int k;
    std::vector<int> img;
    std::vector<uint64_t> node_support;  // atom mask per node of l
    std::optional<std::vector<int>> found;

    SurjectionSearch(const FiniteLattice& l, const FiniteLattice& l2, long long budget)
        : l(l), l2(l2), budget(budget), k(static_cast<int>(l.atoms().size())), img(k, -1) {
        node_support.resize(l.size());
        for (int x = 0; x < l.size(); ++x) node_support[x] = l.atom_support(x);
    }

    // join-preservation restricted to nodes whose atoms are all assigned
    bool partial_ok(int assigned) const {
        uint64_t ready = assigned == 64 ? ~uint64_t(0) : ((uint64_t(1) << assigned) - 1);
        std::vector<int> f(l.size(), -1);
        for (int x = 0; x < l.size(); ++x) {
            if (node_support[x] & ~ready) continue;
            int v = l2.bottom();
            for (int i = 0; i < assigned; ++i)
                if (node_support[x] >> i & 1) v = l2.join(v, img[i]);
            f[x] = v;
        }
        for (int x = 0; x < l.size(); ++x) {
            if (f[x] < 0) continue;
            for (int y = x; y < l.size(); ++y) {
                if (f[y] < 0) continue;
                int j = l.join(x, y);
                if (f[j] >= 0 && f[j] != l2.join(f[x], f[y])) return false;
            }
        }
        return true;
    }

    void run(int i) {
        if (found) return;
        if (i == k) {
            auto f = extend_by_joins(l, l2, img);
            if (is_join_preserving_surjection(l, l2, f)) found = img;
            return;
        }
        for (int cand = 0; cand < l2.size(); ++cand) {
            if (++expansions > budget) throw BudgetExceededError("join-surjection search budget exceeded", expansions, -1);
            img[i] = cand;
            if (partial_ok(i + 1)) run(i + 1);
            if (found) return;
        }
        img[i] = -1;
    }
};

}  // namespace

std::optional<std::vector<int>> find_join_surjection(const FiniteLattice& l, const FiniteLattice& l2,
                                                     long long budget) {
    if (!l.atomistic() || !l2.atomistic()) fail(Errc::not_atomistic, "find_join_surjection needs atomistic lattices");
    if (l2.size() > l.size()) return std::nullopt;  // no surjection between finite sets
    SurjectionSearch s(l, l2, budget);
    s.run(0);
    return s.found;
}

// ---------------------------------------------------------------------------
// Lattice realization
// ---------------------------------------------------------------------------

MonomialIdeal realize_lattice(const FiniteLattice& l) {
    if (!l.atomistic()) fail(Errc::not_atomistic, "realize_lattice needs an atomistic lattice");
    if (l.atoms().empty()) fail(Errc::empty_poset, "realize_lattice: lattice has no atoms");
    std::vector<int> irr;
    for (int a : l.meet_irreducibles())
        if (a != l.top()) irr.push_back(a);
    std::vector<std::string> vars;
    for (int m : irr) vars.push_back("v" + std::to_string(m));
    if (vars.empty()) fail(Errc::empty_poset, "realize_lattice: no meet-irreducibles besides the top");
    std::vector<Monomial> gens;
    for (int a : l.atoms()) {
        std::vector<int> e(irr.size(), 0);
        for (size_t j = 0; j < irr.size(); ++j)
            if (!l.poset().leq(a, irr[j])) e[j] = 1;
        gens.emplace_back(std::move(e));
    }
    MonomialIdeal ideal(std::move(vars), std::move(gens));
    LcmLattice check = lcm_lattice(ideal);
    if (!is_isomorphic(check.lattice.poset(), l.poset()))
        fail(Errc::not_a_lattice, "realize_lattice: realization does not reproduce the lattice");
    return ideal;
}

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

CheckReport surjection_monotonicity_check(const MonomialIdeal& i1, const MonomialIdeal& i2, FieldSpec field,
                                          const CheckBudgets& budgets) {
    CheckReport r;
    r.check = "surjection_monotonicity";
    r.fingerprints = {fingerprint(i1), fingerprint(i2)};
    r.field_tag = field.tag();
    LcmLattice l1 = lcm_lattice(i1), l2 = lcm_lattice(i2);
    auto map = find_join_surjection(l1.lattice, l2.lattice, budgets.map_search);
    if (!map) {
        r.verdict = Verdict::unknown;
        r.note("reason", "no join-preserving surjection exists; inequality not asserted");
        return r;
    }
    auto s1 = homological_summary(i1, field);
    auto s2 = homological_summary(i2, field);
    int spq1 = spdim(i1, Side::quotient, budgets.search);
    int spq2 = spdim(i2, Side::quotient, budgets.search);
    int spi1 = spdim(i1, Side::ideal, budgets.search);
    int spi2 = spdim(i2, Side::ideal, budgets.search);
    r.put("pdim_quotient_1", s1.pdim_quotient);
    r.put("pdim_quotient_2", s2.pdim_quotient);
    r.put("pdim_ideal_1", s1.pdim_ideal);
    r.put("pdim_ideal_2", s2.pdim_ideal);
    r.put("spdim_quotient_1", spq1);
    r.put("spdim_quotient_2", spq2);
    r.put("spdim_ideal_1", spi1);
    r.put("spdim_ideal_2", spi2);
    bool ok = s2.pdim_quotient <= s1.pdim_quotient && s2.pdim_ideal <= s1.pdim_ideal && spq2 <= spq1 && spi2 <= spi1;
    r.verdict = ok ? Verdict::holds : Verdict::violated;
    if (!ok) {
        r.witness = json{{"ideal_1", print_ideal(i1)},
                         {"ideal_2", print_ideal(i2)},
                         {"atom_images", *map}};
    }
    return r;
}

CheckReport mb_chain_check(const MonomialIdeal& ideal, FieldSpec field, const CheckBudgets& budgets) {
    (void)budgets;
    CheckReport r;
    r.check = "mb_chain";
    r.fingerprints = {fingerprint(ideal)};
    r.field_tag = field.tag();

    LcmLattice l = lcm_lattice(ideal);
    const FiniteLattice& lat = l.lattice;
    std::vector<int> b_nodes = betti_nodes_of_lattice(lat, field);
    std::vector<char> in_b(lat.size(), 0);
    for (int a : b_nodes) in_b[a] = 1;

    // embed by atom supports, close under intersection, pull back to nodes
    std::vector<uint64_t> b_supports;
    for (int a : b_nodes) b_supports.push_back(lat.atom_support(a));
    std::vector<uint64_t> closure_sets;
    meet_closure(static_cast<int>(lat.atoms().size()), b_supports, &closure_sets);
    std::map<uint64_t, int> support_to_node;
    for (int a = 0; a < lat.size(); ++a) support_to_node[lat.atom_support(a)] = a;
    std::vector<int> m_nodes;
    for (uint64_t s : closure_sets) {
        auto it = support_to_node.find(s);
        if (it == support_to_node.end())
            fail(Errc::not_meet_closed, "mb_chain_check: meet closure leaves the lattice image");
        m_nodes.push_back(it->second);
    }
    std::vector<char> in_m(lat.size(), 0);
    for (int a : m_nodes) in_m[a] = 1;
    // the bottom joins M so every chain step stays a bounded lattice; with
    // at least two atoms it is already there as an empty intersection of
    // atom supports
    if (!in_m[lat.bottom()]) {
        m_nodes.push_back(lat.bottom());
        in_m[lat.bottom()] = 1;
    }

    auto chain = decreasing_rank_chain(lat, m_nodes);

    bool removed_outside_b = true;
    for (int a : chain.removed)
        if (in_b[a]) removed_outside_b = false;

    bool betti_constant = true;
    std::set<int> b_set(b_nodes.begin(), b_nodes.end());
    for (size_t step = 1; step < chain.lattices.size(); ++step) {
        auto bi = betti_nodes_of_lattice(chain.lattices[step], field);
        std::set<int> bi_orig;
        for (int a : bi) bi_orig.insert(chain.original_ids[step][a]);
        if (bi_orig != b_set) {
            betti_constant = false;
            break;
        }
    }

    r.put("lattice_size", lat.size());
    r.put("betti_size", static_cast<long long>(b_nodes.size()));
    r.put("mb_size", static_cast<long long>(m_nodes.size()));
    r.put("chain_length", static_cast<long long>(chain.removed.size()));
    r.put("removed_outside_betti", removed_outside_b ? 1 : 0);
    r.put("betti_poset_constant", betti_constant ? 1 : 0);
    r.verdict = removed_outside_b && betti_constant ? Verdict::holds : Verdict::violated;
    if (r.verdict == Verdict::violated)
        r.witness = json{{"ideal", print_ideal(ideal)}, {"removed", chain.removed}};
    return r;
}

CheckReport check_onestep(const MonomialIdeal& ideal, const std::string& var, FieldSpec field,
                          const CheckBudgets& budgets) {
    CheckReport r;
    r.check = "onestep_colon";
    r.fingerprints = {fingerprint(ideal)};
    r.field_tag = field.tag();
    r.note("variable", var);
    if (!ideal.is_squarefree()) fail(Errc::not_squarefree, "check_onestep needs a squarefree ideal");

    MonomialIdeal colon;
    try {
        colon = colon_by_variable(ideal, var);
    } catch (const Error& e) {
        if (e.code() == Errc::unit_generator) {
            r.verdict = Verdict::not_applicable;
            r.note("reason", "colon is the unit ideal");
            return r;
        }
        throw;
    }
    r.fingerprints.push_back(fingerprint(colon));

    SdepthResult sq1 = sdepth(ideal, Side::quotient, budgets.search);
    SdepthResult sq2 = sdepth(colon, Side::quotient, budgets.search);
    SdepthResult si1 = sdepth(ideal, Side::ideal, budgets.search);
    SdepthResult si2 = sdepth(colon, Side::ideal, budgets.search);
    r.put("sdepth_quotient", sq1.value);
    r.put("sdepth_quotient_colon", sq2.value);
    r.put("sdepth_ideal", si1.value);
    r.put("sdepth_ideal_colon", si2.value);

    // restriction inequalities hold unconditionally
    bool restrict_ok = sq1.value <= sq2.value && si1.value <= si2.value;
    r.put("restriction_inequalities", restrict_ok ? 1 : 0);

    BettiPoset b1 = betti_poset(ideal, field);
    BettiPoset b2 = betti_poset(colon, field);
    bool iso = is_isomorphic(b1.poset, b2.poset);
    r.put("betti_posets_isomorphic", iso ? 1 : 0);

    if (!restrict_ok) {
        r.verdict = Verdict::violated;
        r.witness = json{{"ideal", print_ideal(ideal)}, {"variable", var}, {"colon", print_ideal(colon)},
                         {"failure", "restriction inequality"}};
        return r;
    }
    if (!iso) {
        r.verdict = Verdict::not_applicable;
        return r;
    }
    bool equal = sq1.value == sq2.value && si1.value == si2.value;
    r.verdict = equal ? Verdict::holds : Verdict::violated;
    if (!equal)
        r.witness = json{{"ideal", print_ideal(ideal)},
                         {"variable", var},
                         {"colon", print_ideal(colon)},
                         {"sdepth_quotient", sq1.value},
                         {"sdepth_quotient_colon", sq2.value},
                         {"sdepth_ideal", si1.value},
                         {"sdepth_ideal_colon", si2.value}};
    return r;
}

CheckReport conjecture_scan(const std::vector<MonomialIdeal>& corpus, FieldSpec field, const CheckBudgets& budgets) {
    CheckReport r;
    r.check = "betti_class_scan";
    r.field_tag = field.tag();
    struct Member {
        std::string fp;
        int spdim_q, spdim_i, pdim_q;
        const MonomialIdeal* ideal;
    };
    std::map<std::string, std::vector<Member>> classes;
    long long skipped = 0;
    for (const auto& ideal : corpus) {
        r.fingerprints.push_back(fingerprint(ideal));
        try {
            BettiPoset b = betti_poset(ideal, field);
            Member m;
            m.fp = fingerprint(ideal);
            m.ideal = &ideal;
            m.spdim_q = spdim(ideal, Side::quotient, budgets.search);
            m.spdim_i = spdim(ideal, Side::ideal, budgets.search);
            m.pdim_q = homological_summary(ideal, field).pdim_quotient;
            classes[canonical_form(b.poset)].push_back(m);
        } catch (const BudgetExceededError&) {
            ++skipped;
        }
    }
    std::sort(r.fingerprints.begin(), r.fingerprints.end());
    r.put("corpus_size", static_cast<long long>(corpus.size()));
    r.put("classes", static_cast<long long>(classes.size()));
    r.put("skipped_budget", skipped);
    long long nontrivial = 0, violations = 0, pdim_mismatches = 0;
    json witness = json::array();
    for (auto& [canon, members] : classes) {
        if (members.size() < 2) continue;
        ++nontrivial;
        for (size_t i = 1; i < members.size(); ++i) {
            if (members[i].pdim_q != members[0].pdim_q) ++pdim_mismatches;
            if (members[i].spdim_q != members[0].spdim_q || members[i].spdim_i != members[0].spdim_i) {
                ++violations;
                witness.push_back(json{{"ideal_1", print_ideal(*members[0].ideal)},
                                       {"ideal_2", print_ideal(*members[i].ideal)},
                                       {"spdim_quotient", {members[0].spdim_q, members[i].spdim_q}},
                                       {"spdim_ideal", {members[0].spdim_i, members[i].spdim_i}}});
            }
        }
    }
    r.put("classes_with_pairs", nontrivial);
    r.put("pdim_class_mismatches", pdim_mismatches);
    r.put("violations", violations);
    if (skipped > 0 && violations == 0) r.verdict = Verdict::unknown;
    else r.verdict = violations ? Verdict::violated : Verdict::holds;
    if (violations) r.witness = witness;
    return r;
}

CheckReport stanley_bounds_check(const MonomialIdeal& ideal, const CheckBudgets& budgets) {
    CheckReport r;
    r.check = "stanley_bounds";
    r.fingerprints = {fingerprint(ideal)};
    r.field_tag = FieldSpec::rational().tag();
    auto s = homological_summary(ideal, FieldSpec::rational());
    int sdq = sdepth(ideal, Side::quotient, budgets.search).value;
    int sdi = sdepth(ideal, Side::ideal, budgets.search).value;
    r.put("sdepth_quotient", sdq);
    r.put("depth_quotient", s.depth_quotient);
    r.put("sdepth_ideal", sdi);
    r.put("depth_ideal", s.depth_ideal);
    bool ok = sdq >= s.depth_quotient - 1 && sdi >= s.depth_ideal;
    r.verdict = ok ? Verdict::holds : Verdict::violated;
    if (!ok)
        r.witness = json{{"ideal", print_ideal(ideal)},
                         {"sdepth_quotient", sdq},
                         {"depth_quotient", s.depth_quotient},
                         {"sdepth_ideal", sdi},
                         {"depth_ideal", s.depth_ideal}};
    return r;
}

CheckReport length_bounds_check(const MonomialIdeal& ideal, const CheckBudgets& budgets) {
    CheckReport r;
    r.check = "length_bounds";
    r.fingerprints = {fingerprint(ideal)};
    r.field_tag = FieldSpec::rational().tag();
    LcmLattice l = lcm_lattice(ideal);
    int len = length(l.lattice.poset());
    int spq = spdim(ideal, Side::quotient, budgets.search);
    int spi = spdim(ideal, Side::ideal, budgets.search);
    r.put("length", len);
    r.put("spdim_quotient", spq);
    r.put("spdim_ideal", spi);
    bool ok = spq <= len && spi <= len - 1;
    r.verdict = ok ? Verdict::holds : Verdict::violated;
    if (!ok)
        r.witness = json{{"ideal", print_ideal(ideal)}, {"length", len}, {"spdim_quotient", spq},
                         {"spdim_ideal", spi}};
    return r;
}

CheckReport reduction_lemma_check(const MonomialIdeal& ideal, int node, std::optional<int> p_opt,
                                  const CheckBudgets& budgets) {
    CheckReport r;
    r.check = "reduction_lemma";
    r.fingerprints = {fingerprint(ideal)};
    r.field_tag = FieldSpec::rational().tag();
    LcmLattice l = lcm_lattice(ideal);
    const FiniteLattice& lat = l.lattice;
    if (node < 0 || node >= lat.size()) fail(Errc::unknown_element, "reduction_lemma_check: unknown node");
    if (!lat.is_meet_irreducible(node))
        fail(Errc::not_meet_irreducible, "reduction_lemma_check: node is not meet-irreducible");
    int p = p_opt ? *p_opt : homological_summary(ideal, FieldSpec::rational()).pdim_quotient;
    int rk = lat.rank(node);
    r.put("node", node);
    r.put("rank", rk);
    r.put("p", p);
    if (rk >= 2 * p) {
        r.verdict = Verdict::not_applicable;
        r.note("reason", "rank not below 2p");
        return r;
    }
    if (node == lat.bottom()) {
        r.verdict = Verdict::not_applicable;
        r.note("reason", "cannot remove the bottom");
        return r;
    }
    FiniteLattice reduced;
    try {
        reduced = lat.remove_element(node);
    } catch (const Error& e) {
        if (e.code() == Errc::not_a_lattice) {
            r.verdict = Verdict::not_applicable;
            r.note("reason", "removal does not leave a lattice");
            return r;
        }
        throw;
    }
    if (!reduced.atomistic() || reduced.atoms().empty() || reduced.size() < 2) {
        r.verdict = Verdict::not_applicable;
        r.note("reason", "removal leaves a degenerate or non-atomistic lattice");
        return r;
    }
    int spdim_i_full = ideal.nvars() - sdepth(ideal, Side::ideal, budgets.search).value;
    MonomialIdeal reduced_ideal = realize_lattice(reduced);
    int spdim_i_reduced = reduced_ideal.nvars() - sdepth(reduced_ideal, Side::ideal, budgets.search).value;
    r.put("spdim_ideal", spdim_i_full);
    r.put("spdim_ideal_reduced", spdim_i_reduced);
    bool ok = spdim_i_full <= std::max(p, spdim_i_reduced);
    r.verdict = ok ? Verdict::holds : Verdict::violated;
    if (!ok)
        r.witness = json{{"ideal", print_ideal(ideal)},
                         {"node", node},
                         {"p", p},
                         {"spdim_ideal", spdim_i_full},
                         {"spdim_ideal_reduced", spdim_i_reduced}};
    return r;
}

CheckReport generic_weak_check(const MonomialIdeal& i1, const MonomialIdeal& i2, FieldSpec field,
                               const CheckBudgets& budgets) {
    CheckReport r;
    r.check = "generic_weak";
    r.fingerprints = {fingerprint(i1), fingerprint(i2)};
    r.field_tag = field.tag();
    if (!is_generic(i1)) fail(Errc::not_generic, "generic_weak_check: first ideal is not generic");

    LcmLattice l1 = lcm_lattice(i1), l2 = lcm_lattice(i2);
    auto map = find_join_surjection(l1.lattice, l2.lattice, budgets.map_search);
    if (!map) {
        r.verdict = Verdict::not_applicable;
        r.note("reason", "no join-preserving surjection");
        return r;
    }
    BettiPoset b1 = betti_poset(i1, field);
    BettiPoset b2 = betti_poset(i2, field);
    if (!is_isomorphic(b1.poset, b2.poset)) {
        r.verdict = Verdict::not_applicable;
        r.note("reason", "Betti posets not isomorphic");
        return r;
    }

    int p = homological_summary(i1, field).pdim_quotient;
    int p2 = homological_summary(i2, field).pdim_quotient;
    r.put("p", p);
    r.put("pdim_quotient_2", p2);

    ScarfComplex s1 = scarf_complex(i1);
    ScarfComplex s2 = scarf_complex(i2);
    bool b1_scarf = b1.lattice_nodes == s1.lattice_nodes;
    bool b2_scarf = b2.lattice_nodes == s2.lattice_nodes;
    r.put("betti_equals_scarf_1", b1_scarf ? 1 : 0);
    r.put("betti_equals_scarf_2", b2_scarf ? 1 : 0);

    // a rank-p Scarf element must exist; the map b -> atoms below b ∧ a is
    // checked as given, and the surjection onto the boolean algebra on p
    // atoms is established by complete search when the explicit map fails
    bool recipe_ok = false;
    int rank_p_element = -1;
    for (int a : s2.lattice_nodes) {
        if (l2.lattice.rank(a) != p) continue;
        if (rank_p_element < 0) rank_p_element = a;
        uint64_t amask = l2.lattice.atom_support(a);
        std::set<uint64_t> image;
        bool joins_ok = true;
        std::vector<uint64_t> fx(l2.lattice.size());
        for (int x = 0; x < l2.lattice.size(); ++x) {
            fx[x] = l2.lattice.atom_support(l2.lattice.meet(x, a));
            image.insert(fx[x]);
        }
        for (int x = 0; x < l2.lattice.size() && joins_ok; ++x)
            for (int y = x; y < l2.lattice.size() && joins_ok; ++y)
                if (fx[l2.lattice.join(x, y)] != (fx[x] | fx[y])) joins_ok = false;
        if (joins_ok && image.size() == (size_t(1) << __builtin_popcountll(amask))) {
            recipe_ok = true;
            rank_p_element = a;
            break;
        }
    }
    bool boolean_surjection = recipe_ok;
    if (!boolean_surjection && rank_p_element >= 0 && p >= 1) {
        auto bp = boolean_lattice(p);
        boolean_surjection = find_join_surjection(l2.lattice, bp, budgets.map_search).has_value();
    }
    r.put("rank_p_element_exists", rank_p_element >= 0 ? 1 : 0);
    r.put("recipe_map_join_preserving", recipe_ok ? 1 : 0);
    r.put("boolean_surjection", boolean_surjection ? 1 : 0);

    int spq1 = spdim(i1, Side::quotient, budgets.search);
    int spq2 = spdim(i2, Side::quotient, budgets.search);
    r.put("spdim_quotient_1", spq1);
    r.put("spdim_quotient_2", spq2);

    bool ok = b1_scarf && b2_scarf && rank_p_element >= 0 && boolean_surjection && p == p2 && spq1 == spq2;
    r.verdict = ok ? Verdict::holds : Verdict::violated;
    if (!ok)
        r.witness = json{{"ideal_1", print_ideal(i1)}, {"ideal_2", print_ideal(i2)},
                         {"betti_equals_scarf", {b1_scarf, b2_scarf}},
                         {"spdim_quotient", {spq1, spq2}}};
    return r;
}

}  // namespace milab
