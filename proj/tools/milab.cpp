// milab: invariants of monomial ideals (lcm-lattices, Betti posets, Stanley
// depth) and verification pipelines over .ideal files.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "milab/checks.hpp"
#include "milab/serialize.hpp"

namespace fs = std::filesystem;
using namespace milab;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Output {
    std::string path;  // empty = stdout
    std::ostringstream buf;

    template <typename T>
    Output& operator<<(const T& v) {
        buf << v;
        return *this;
    }
    int flush() {
        if (path.empty()) {
            std::cout << buf.str();
            return 0;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << path << "\n";
            return 1;
        }
        out << buf.str();
        return 0;
    }
};

MonomialIdeal read_ideal_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::io_error, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_ideal(ss.str());
}

// positional inputs may be .ideal files or directories of them
std::vector<std::string> collect_ideal_paths(const std::vector<std::string>& inputs) {
    std::vector<std::string> paths;
    for (const auto& in : inputs) {
        if (fs::is_directory(in)) {
            std::vector<std::string> dir_files;
            for (const auto& e : fs::directory_iterator(in))
                if (e.path().extension() == ".ideal") dir_files.push_back(e.path().string());
            std::sort(dir_files.begin(), dir_files.end());
            paths.insert(paths.end(), dir_files.begin(), dir_files.end());
        } else {
            paths.push_back(in);
        }
    }
    if (paths.empty()) fail(Errc::io_error, "no .ideal files found");
    return paths;
}

std::vector<FieldSpec> fields_to_scan(const std::string& field_arg, bool scan_default) {
    if (!field_arg.empty()) return {FieldSpec::parse(field_arg)};
    if (scan_default) return {FieldSpec::rational(), FieldSpec::prime(2)};
    return {FieldSpec::rational()};
}

void render_report_table(Output& out, const std::vector<CheckReport>& reports) {
    size_t wcheck = 5, wideal = 5, wfield = 5, wverdict = 7;
    for (const auto& r : reports) {
        wcheck = std::max(wcheck, r.check.size());
        if (!r.fingerprints.empty()) wideal = std::max(wideal, r.fingerprints[0].size());
        wfield = std::max(wfield, r.field_tag.size());
        wverdict = std::max(wverdict, verdict_tag(r.verdict).size());
    }
    for (const auto& r : reports) {
        std::ostringstream line;
        line.width(static_cast<int>(wcheck));
        line << std::left << r.check << "  ";
        line.width(static_cast<int>(wideal));
        line << std::left << (r.fingerprints.empty() ? "-" : r.fingerprints[0]) << "  ";
        line.width(static_cast<int>(wfield));
        line << std::left << r.field_tag << "  ";
        line.width(static_cast<int>(wverdict));
        line << std::left << verdict_tag(r.verdict);
        for (const auto& [k, v] : r.quantities) line << "  " << k << "=" << v;
        out << line.str() << "\n";
    }
}

int emit_reports(Output& out, std::vector<CheckReport> reports, bool json) {
    std::stable_sort(reports.begin(), reports.end(), [](const CheckReport& a, const CheckReport& b) {
        std::string fa = a.fingerprints.empty() ? "" : a.fingerprints[0];
        std::string fb = b.fingerprints.empty() ? "" : b.fingerprints[0];
        return std::tie(fa, a.check, a.field_tag) < std::tie(fb, b.check, b.field_tag);
    });
    if (json) {
        for (const auto& r : reports) out << report_to_json(r).dump() << "\n";
    } else {
        render_report_table(out, reports);
    }
    int rc = out.flush();
    if (rc) return rc;
    for (const auto& r : reports)
        if (r.verdict == Verdict::violated) return 3;
    for (const auto& r : reports)
        if (r.verdict == Verdict::unknown) return 2;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants of monomial ideals: lcm-lattices, Betti posets, Stanley depth"};
    app.require_subcommand(1);

    std::string field_arg, output_path, side_arg = "quotient", var_arg, source_arg = "betti";
    bool json = false;
    long long budget = 100'000'000;
    long grid_budget = 1'000'000;
    uint64_t seed = 0;
    std::vector<std::string> inputs;
    int node_arg = -1, p_arg = -1;

    auto add_common = [&](CLI::App* cmd, bool with_field = true) {
        cmd->add_flag("--json", json, "emit JSON instead of a table");
        cmd->add_option("-o,--output", output_path, "write to a file instead of stdout");
        if (with_field) cmd->add_option("--field", field_arg, "coefficient field: q or fp:<p>");
        cmd->add_option("--budget", budget, "search expansion budget");
        cmd->add_option("--grid-budget", grid_budget, "characteristic poset size budget");
    };

    auto* c_lcm = app.add_subcommand("lcm", "lcm-lattice of an ideal");
    c_lcm->add_option("file", inputs)->required();
    add_common(c_lcm, false);

    auto* c_betti = app.add_subcommand("betti", "multigraded Betti numbers");
    c_betti->add_option("file", inputs)->required();
    add_common(c_betti);

    auto* c_bposet = app.add_subcommand("betti-poset", "Betti poset");
    c_bposet->add_option("file", inputs)->required();
    add_common(c_bposet);

    auto* c_scarf = app.add_subcommand("scarf", "Scarf complex");
    c_scarf->add_option("file", inputs)->required();
    add_common(c_scarf, false);

    auto* c_hilbert = app.add_subcommand("hilbert", "Hilbert series numerator");
    c_hilbert->add_option("file", inputs)->required();
    c_hilbert->add_option("--source", source_arg, "betti or taylor")->check(CLI::IsMember({"betti", "taylor"}));
    add_common(c_hilbert);

    auto* c_sdepth = app.add_subcommand("sdepth", "Stanley depth with certificate");
    c_sdepth->add_option("file", inputs)->required();
    c_sdepth->add_option("--side", side_arg, "quotient or ideal")->check(CLI::IsMember({"quotient", "ideal"}));
    add_common(c_sdepth, false);

    auto* c_summary = app.add_subcommand("summary", "projective dimensions and depths");
    c_summary->add_option("file", inputs)->required();
    add_common(c_summary);

    auto* c_onestep = app.add_subcommand("check-onestep", "colon-by-variable comparison");
    c_onestep->add_option("file", inputs)->required();
    c_onestep->add_option("--var", var_arg, "variable (default: all variables)");
    add_common(c_onestep);

    auto* c_scan = app.add_subcommand("check-conjecture", "group a corpus by Betti poset and compare spdim");
    c_scan->add_option("paths", inputs, ".ideal files or directories")->required();
    add_common(c_scan);

    auto* c_bounds = app.add_subcommand("check-bounds", "sdepth vs depth bounds");
    c_bounds->add_option("paths", inputs)->required();
    add_common(c_bounds, false);

    auto* c_length = app.add_subcommand("check-length", "spdim vs lattice length bounds");
    c_length->add_option("paths", inputs)->required();
    add_common(c_length, false);

    auto* c_reduction = app.add_subcommand("check-reduction", "meet-irreducible removal inequality");
    c_reduction->add_option("file", inputs)->required();
    c_reduction->add_option("--node", node_arg, "lattice node id (default: all meet-irreducibles)");
    c_reduction->add_option("--p", p_arg, "parameter p (default: pdim of the quotient)");
    add_common(c_reduction, false);

    auto* c_generic = app.add_subcommand("check-generic", "generic-ideal comparison");
    c_generic->add_option("files", inputs, "one or two .ideal files")->required();
    add_common(c_generic);

    auto* c_mb = app.add_subcommand("mb-chain", "meet-closure chain of the Betti poset");
    c_mb->add_option("file", inputs)->required();
    add_common(c_mb);

    std::string corpus_dir;
    int corpus_count = 50, corpus_vars = 4, corpus_gens = 4, corpus_maxexp = 1;
    bool corpus_squarefree = false;
    auto* c_gen = app.add_subcommand("gen-corpus", "write a deterministic random corpus");
    c_gen->add_option("--out", corpus_dir, "output directory")->required();
    c_gen->add_option("--count", corpus_count);
    c_gen->add_option("--vars", corpus_vars);
    c_gen->add_option("--gens", corpus_gens);
    c_gen->add_option("--max-exp", corpus_maxexp);
    c_gen->add_flag("--squarefree", corpus_squarefree);
    c_gen->add_option("--seed", seed);
    c_gen->add_flag("--json", json);
    c_gen->add_option("-o,--output", output_path, "write the manifest here instead of <out>/manifest.json");

    CLI11_PARSE(app, argc, argv);

    Output out;
    out.path = output_path;
    CheckBudgets budgets;
    budgets.search = budget;
    budgets.grid = grid_budget;

    try {
        if (*c_lcm) {
            auto ideal = read_ideal_file(inputs.at(0));
            auto l = lcm_lattice(ideal);
            if (json) {
                out << lcm_lattice_to_json(ideal, l).dump() << "\n";
            } else {
                out << "nodes " << l.lattice.size() << ", atoms " << l.lattice.atoms().size() << ", length "
                    << length(l.lattice.poset()) << "\n";
                for (int a = 0; a < l.lattice.size(); ++a)
                    out << a << "  rank " << l.lattice.rank(a) << "  " << monomial_to_string(ideal, l.degree(a))
                        << "\n";
            }
            return out.flush();
        }
        if (*c_betti) {
            auto ideal = read_ideal_file(inputs.at(0));
            auto field = fields_to_scan(field_arg, false).front();
            auto t = betti_table(ideal, field);
            if (json) {
                out << betti_table_to_json(t).dump() << "\n";
            } else {
                for (const auto& [key, beta] : t.entries)
                    out << "beta_" << key.first << "," << monomial_to_string(ideal, Monomial{key.second}) << " = "
                        << beta << "\n";
            }
            return out.flush();
        }
        if (*c_bposet || *c_scarf) {
            auto ideal = read_ideal_file(inputs.at(0));
            FinitePoset poset;
            std::vector<int> nodes;
            std::string field_tag;
            if (*c_bposet) {
                auto field = fields_to_scan(field_arg, false).front();
                auto b = betti_poset(ideal, field);
                poset = b.poset;
                nodes = b.lattice_nodes;
                field_tag = field.tag();
            } else {
                auto s = scarf_complex(ideal);
                poset = s.poset;
                nodes = s.lattice_nodes;
            }
            if (json) {
                auto j = labeled_subposet_to_json(ideal, poset, nodes);
                if (!field_tag.empty()) j["field"] = field_tag;
                out << j.dump() << "\n";
            } else {
                out << poset.size() << " elements, canonical " << canonical_form(poset) << "\n";
                for (int a = 0; a < poset.size(); ++a)
                    out << a << "  " << monomial_to_string(ideal, poset.label(a)) << "\n";
            }
            return out.flush();
        }
        if (*c_hilbert) {
            auto ideal = read_ideal_file(inputs.at(0));
            auto field = fields_to_scan(field_arg, false).front();
            auto src = source_arg == "taylor" ? HilbertSource::taylor : HilbertSource::betti;
            auto h = hilbert_numerator(ideal, src, field);
            if (json) {
                out << hilbert_to_json(ideal, h).dump() << "\n";
            } else {
                bool first = true;
                for (const auto& [deg, c] : h) {
                    out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
                    long a = std::abs(c);
                    std::string m = monomial_to_string(ideal, Monomial{deg});
                    if (a != 1 || m == "1") out << a;
                    if (m != "1") out << (a != 1 ? "*" : "") << m;
                    first = false;
                }
                out << "\n";
            }
            return out.flush();
        }
        if (*c_sdepth) {
            auto ideal = read_ideal_file(inputs.at(0));
            Side side = side_arg == "ideal" ? Side::ideal : Side::quotient;
            auto p = characteristic_poset(ideal, side, {}, grid_budget);
            auto r = sdepth(p, budget);
            if (json) {
                ordered_json j{{"ideal", fingerprint(ideal)},
                               {"side", side_tag(side)},
                               {"value", r.value},
                               {"spdim", ideal.nvars() - r.value},
                               {"certificate", certificate_to_json(p, r.certificate)}};
                out << j.dump() << "\n";
            } else {
                out << "sdepth (" << side_tag(side) << ") = " << r.value << ", spdim = "
                    << ideal.nvars() - r.value << ", " << r.certificate.intervals.size() << " intervals over "
                    << p.size() << " points\n";
            }
            return out.flush();
        }
        if (*c_summary) {
            auto ideal = read_ideal_file(inputs.at(0));
            auto field = fields_to_scan(field_arg, false).front();
            auto s = homological_summary(ideal, field);
            if (json) {
                out << summary_to_json(ideal, s, field).dump() << "\n";
            } else {
                out << "pdim S/I = " << s.pdim_quotient << ", pdim I = " << s.pdim_ideal << ", depth S/I = "
                    << s.depth_quotient << ", depth I = " << s.depth_ideal << "\n";
            }
            return out.flush();
        }
        if (*c_onestep) {
            auto ideal = read_ideal_file(inputs.at(0));
            std::vector<CheckReport> reports;
            std::vector<std::string> vars =
                var_arg.empty() ? ideal.variables : std::vector<std::string>{var_arg};
            for (auto field : fields_to_scan(field_arg, true))
                for (const auto& v : vars) reports.push_back(check_onestep(ideal, v, field, budgets));
            return emit_reports(out, std::move(reports), json);
        }
        if (*c_scan) {
            std::vector<MonomialIdeal> corpus;
            for (const auto& p : collect_ideal_paths(inputs)) corpus.push_back(read_ideal_file(p));
            std::vector<CheckReport> reports;
            for (auto field : fields_to_scan(field_arg, true))
                reports.push_back(conjecture_scan(corpus, field, budgets));
            return emit_reports(out, std::move(reports), json);
        }
        if (*c_bounds || *c_length) {
            std::vector<CheckReport> reports;
            for (const auto& p : collect_ideal_paths(inputs)) {
                auto ideal = read_ideal_file(p);
                reports.push_back(*c_bounds ? stanley_bounds_check(ideal, budgets)
                                            : length_bounds_check(ideal, budgets));
            }
            return emit_reports(out, std::move(reports), json);
        }
        if (*c_reduction) {
            auto ideal = read_ideal_file(inputs.at(0));
            std::vector<CheckReport> reports;
            std::optional<int> p_opt;
            if (p_arg >= 0) p_opt = p_arg;
            if (node_arg >= 0) {
                reports.push_back(reduction_lemma_check(ideal, node_arg, p_opt, budgets));
            } else {
                auto l = lcm_lattice(ideal);
                for (int a : l.lattice.meet_irreducibles()) {
                    if (a == l.lattice.bottom()) continue;
                    reports.push_back(reduction_lemma_check(ideal, a, p_opt, budgets));
                }
            }
            return emit_reports(out, std::move(reports), json);
        }
        if (*c_generic) {
            auto i1 = read_ideal_file(inputs.at(0));
            auto i2 = inputs.size() > 1 ? read_ideal_file(inputs.at(1)) : i1;
            std::vector<CheckReport> reports;
            for (auto field : fields_to_scan(field_arg, true))
                reports.push_back(generic_weak_check(i1, i2, field, budgets));
            return emit_reports(out, std::move(reports), json);
        }
        if (*c_mb) {
            auto ideal = read_ideal_file(inputs.at(0));
            std::vector<CheckReport> reports;
            for (auto field : fields_to_scan(field_arg, true))
                reports.push_back(mb_chain_check(ideal, field, budgets));
            return emit_reports(out, std::move(reports), json);
        }
        if (*c_gen) {
            fs::create_directories(corpus_dir);
            ordered_json files = ordered_json::array();
            for (int i = 0; i < corpus_count; ++i) {
                auto ideal = random_ideal(corpus_vars, corpus_gens, corpus_maxexp, corpus_squarefree,
                                          seed * 1000003ull + static_cast<uint64_t>(i));
                char name[32];
                snprintf(name, sizeof name, "c%04d.ideal", i);
                std::ofstream f(fs::path(corpus_dir) / name, std::ios::binary);
                if (!f) fail(Errc::io_error, "cannot write corpus file");
                f << print_ideal(ideal);
                files.push_back(ordered_json{{"name", name}, {"fingerprint", fingerprint(ideal)}});
            }
            ordered_json manifest{{"schema", "corpus-manifest/v1"},
                                  {"params",
                                   ordered_json{{"count", corpus_count},
                                                {"vars", corpus_vars},
                                                {"gens", corpus_gens},
                                                {"max_exp", corpus_maxexp},
                                                {"squarefree", corpus_squarefree},
                                                {"seed", seed}}},
                                  {"files", files}};
            std::string manifest_path =
                output_path.empty() ? (fs::path(corpus_dir) / "manifest.json").string() : output_path;
            std::ofstream mf(manifest_path, std::ios::binary);
            if (!mf) fail(Errc::io_error, "cannot write manifest");
            mf << manifest.dump(2) << "\n";
            std::cout << "wrote " << corpus_count << " files to " << corpus_dir << "\n";
            return 0;
        }
    } catch (const BudgetExceededError& e) {
        std::cerr << "budget exhausted: " << e.what() << " (expansions " << e.expansions << ")\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
