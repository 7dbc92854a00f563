#include "milab/monomial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace milab {

std::vector<Monomial> minimalize(const std::vector<Monomial>& gens) {
    std::vector<Monomial> out;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool keep = true;
        for (size_t j = 0; j < gens.size() && keep; ++j) {
            if (i == j) continue;
            if (gens[j] == gens[i]) {
                if (j < i) keep = false;  // duplicate: keep the first copy
            } else if (gens[j].divides(gens[i])) {
                keep = false;
            }
        }
        if (keep) out.push_back(gens[i]);
    }
    return out;
}

MonomialIdeal::MonomialIdeal(std::vector<std::string> vars, std::vector<Monomial> gens)
    : variables(std::move(vars)) {
    if (gens.empty()) fail(Errc::empty_after_minimalization, "ideal needs at least one generator");
    for (auto& g : gens) {
        if (g.nvars() != nvars()) fail(Errc::unknown_variable, "generator arity mismatch");
        if (g.is_unit()) fail(Errc::unit_generator, "the unit monomial cannot be a generator");
    }
    generators = minimalize(gens);
    std::sort(generators.begin(), generators.end());
}

Monomial MonomialIdeal::generator_lcm() const {
    Monomial g(std::vector<int>(nvars(), 0));
    for (auto& m : generators) g = g.lcm_with(m);
    return g;
}

namespace {

bool valid_var_name(const std::string& s) {
    if (s.empty()) return false;
    if (!isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> parts;
    std::istringstream in(line);
    std::string w;
    while (in >> w) parts.push_back(w);
    return parts;
}

}  // namespace

MonomialIdeal parse_ideal(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<std::string> vars;
    std::map<std::string, int> var_index;
    std::vector<Monomial> gens;
    bool have_vars = false;
    while (std::getline(in, line)) {
        ++lineno;
        size_t h = line.find('#');
        if (h != std::string::npos) line.resize(h);
        auto parts = split_ws(line);
        if (parts.empty()) continue;
        if (!have_vars) {
            if (parts[0] != "vars")
                fail(Errc::syntax_error, "line " + std::to_string(lineno) + ": expected 'vars'");
            for (size_t i = 1; i < parts.size(); ++i) {
                if (!valid_var_name(parts[i]))
                    fail(Errc::syntax_error, "line " + std::to_string(lineno) + ": bad variable name '" + parts[i] + "'");
                if (var_index.count(parts[i]))
                    fail(Errc::syntax_error, "line " + std::to_string(lineno) + ": duplicate variable '" + parts[i] + "'");
                var_index[parts[i]] = static_cast<int>(vars.size());
                vars.push_back(parts[i]);
            }
            if (vars.empty()) fail(Errc::syntax_error, "line " + std::to_string(lineno) + ": no variables declared");
            have_vars = true;
            continue;
        }
        if (parts[0] != "gen" || parts.size() != 2)
            fail(Errc::syntax_error, "line " + std::to_string(lineno) + ": expected 'gen <monomial>'");
        std::vector<int> exps(vars.size(), 0);
        std::istringstream ms(parts[1]);
        std::string factor;
        while (std::getline(ms, factor, '*')) {
            if (factor.empty())
                fail(Errc::syntax_error, "line " + std::to_string(lineno) + ": empty factor");
            std::string name = factor;
            long e = 1;
            size_t caret = factor.find('^');
            if (caret != std::string::npos) {
                name = factor.substr(0, caret);
                std::string es = factor.substr(caret + 1);
                try {
                    size_t pos = 0;
                    e = std::stol(es, &pos);
                    if (pos != es.size()) throw std::invalid_argument("");
                } catch (...) {
                    fail(Errc::syntax_error, "line " + std::to_string(lineno) + ": bad exponent '" + es + "'");
                }
                if (e <= 0) fail(Errc::syntax_error, "line " + std::to_string(lineno) + ": exponent must be positive");
            }
            auto it = var_index.find(name);
            if (it == var_index.end())
                fail(Errc::unknown_variable, "line " + std::to_string(lineno) + ": unknown variable '" + name + "'");
            exps[it->second] += static_cast<int>(e);
        }
        Monomial m{exps};
        if (m.is_unit()) fail(Errc::unit_generator, "line " + std::to_string(lineno) + ": unit generator");
        gens.push_back(std::move(m));
    }
    if (!have_vars) fail(Errc::syntax_error, "missing 'vars' line");
    if (gens.empty()) fail(Errc::syntax_error, "no generators");
    return MonomialIdeal(std::move(vars), std::move(gens));
}

std::string monomial_to_string(const MonomialIdeal& ideal, const Monomial& m) {
    std::string s;
    for (int i = 0; i < m.nvars(); ++i) {
        if (m.exps[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += ideal.variables[i];
        if (m.exps[i] > 1) s += '^' + std::to_string(m.exps[i]);
    }
    return s.empty() ? "1" : s;
}

std::string print_ideal(const MonomialIdeal& ideal) {
    std::string out = "vars";
    for (auto& v : ideal.variables) out += ' ' + v;
    out += '\n';
    for (auto& g : ideal.generators) out += "gen " + monomial_to_string(ideal, g) + '\n';
    return out;
}

std::string fingerprint(const MonomialIdeal& ideal) {
    uint64_t h = 14695981039346656037ull;
    for (char c : print_ideal(ideal)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("mi1:") + buf;
}

int LcmLattice::node_of(const Monomial& m) const {
    for (int a = 0; a < lattice.size(); ++a)
        if (lattice.poset().label(a) == m) return a;
    return -1;
}

LcmLattice lcm_lattice(const MonomialIdeal& ideal, size_t node_cap) {
    // BFS over joins: closing the generator set under pairwise lcm reaches
    // every lcm of a nonempty subset.
    std::set<Monomial> nodes(ideal.generators.begin(), ideal.generators.end());
    std::vector<Monomial> frontier(ideal.generators);
    while (!frontier.empty()) {
        std::vector<Monomial> next;
        for (auto& m : frontier)
            for (auto& g : ideal.generators) {
                Monomial j = m.lcm_with(g);
                if (nodes.insert(j).second) {
                    next.push_back(std::move(j));
                    if (nodes.size() > node_cap)
                        fail(Errc::too_large, "lcm_lattice: node cap " + std::to_string(node_cap) + " exceeded");
                }
            }
        frontier = std::move(next);
    }
    std::vector<Monomial> labels;
    labels.emplace_back(std::vector<int>(ideal.nvars(), 0));  // adjoined bottom
    labels.insert(labels.end(), nodes.begin(), nodes.end());
    int n = static_cast<int>(labels.size());
    BitMatrix leq(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (labels[a].divides(labels[b])) leq.set(a, b);
    FinitePoset p = FinitePoset::from_leq(n, leq);
    p.set_labels(labels);
    LcmLattice l;
    l.lattice = FiniteLattice::from_poset(std::move(p));
    return l;
}

MonomialIdeal colon_by_variable(const MonomialIdeal& ideal, const std::string& v) {
    int vi = -1;
    for (int i = 0; i < ideal.nvars(); ++i)
        if (ideal.variables[i] == v) vi = i;
    if (vi < 0) fail(Errc::unknown_variable, "colon_by_variable: unknown variable '" + v + "'");
    std::vector<Monomial> gens;
    for (auto g : ideal.generators) {
        if (g.exps[vi] > 0) --g.exps[vi];
        if (g.is_unit())
            fail(Errc::unit_generator, "colon_by_variable: (I : " + v + ") is the unit ideal");
        gens.push_back(std::move(g));
    }
    return MonomialIdeal(ideal.variables, std::move(gens));
}

MonomialIdeal disjoint_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    std::vector<std::string> vars = a.variables;
    std::set<std::string> used(vars.begin(), vars.end());
    for (auto name : b.variables) {
        if (used.count(name)) {
            int suffix = 2;
            while (used.count(name + "_" + std::to_string(suffix))) ++suffix;
            name += "_" + std::to_string(suffix);
        }
        used.insert(name);
        vars.push_back(name);
    }
    int na = a.nvars(), nb = b.nvars();
    std::vector<Monomial> gens;
    for (auto& g : a.generators) {
        std::vector<int> e = g.exps;
        e.resize(na + nb, 0);
        gens.emplace_back(std::move(e));
    }
    for (auto& g : b.generators) {
        std::vector<int> e(na, 0);
        e.insert(e.end(), g.exps.begin(), g.exps.end());
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(std::move(vars), std::move(gens));
}

bool is_generic(const MonomialIdeal& ideal) {
    const auto& gens = ideal.generators;
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j) {
            bool shared = false;
            for (int v = 0; v < ideal.nvars() && !shared; ++v)
                if (gens[i].exps[v] > 0 && gens[i].exps[v] == gens[j].exps[v]) shared = true;
            if (!shared) continue;
            Monomial l = gens[i].lcm_with(gens[j]);
            bool witness = false;
            for (size_t k = 0; k < gens.size() && !witness; ++k) {
                if (k == i || k == j) continue;
                bool strict = true;
                for (int v = 0; v < ideal.nvars() && strict; ++v)
                    if (l.exps[v] > 0 && gens[k].exps[v] >= l.exps[v]) strict = false;
                witness = strict;
            }
            if (!witness) return false;
        }
    return true;
}

namespace {

// splitmix64: stable across platforms, unlike std distributions
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    int below(int bound) {  // uniform in [0, bound)
        uint64_t limit = ~uint64_t(0) - ~uint64_t(0) % bound;
        uint64_t x;
        do x = next();
        while (x >= limit);
        return static_cast<int>(x % bound);
    }
};

}  // namespace

MonomialIdeal random_ideal(int n_vars, int n_gens, int max_exp, bool squarefree, uint64_t seed) {
    if (n_vars < 1 || n_gens < 1 || max_exp < 1) fail(Errc::syntax_error, "random_ideal: bad parameters");
    Rng rng(seed);
    int cap = squarefree ? 1 : max_exp;
    const int max_tries = 10000;
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        std::vector<Monomial> gens;
        for (int g = 0; g < n_gens; ++g) {
            std::vector<int> e(n_vars);
            bool unit = true;
            for (int v = 0; v < n_vars; ++v) {
                e[v] = rng.below(cap + 1);
                if (e[v]) unit = false;
            }
            if (unit) {
                --g;
                continue;
            }
            gens.emplace_back(std::move(e));
        }
        auto mins = minimalize(gens);
        if (static_cast<int>(mins.size()) == n_gens) {
            std::vector<std::string> vars(n_vars);
            for (int v = 0; v < n_vars; ++v) vars[v] = "x" + std::to_string(v + 1);
            return MonomialIdeal(std::move(vars), std::move(mins));
        }
    }
    fail(Errc::retries_exhausted, "random_ideal: could not sample an antichain of the requested size");
}

}  // namespace milab
