#include <arrowing/archive.hpp>
#include <arrowing/arrowing.hpp>
#include <arrowing/enumerate.hpp>
#include <arrowing/error.hpp>
#include <arrowing/formula.hpp>
#include <arrowing/gadget.hpp>
#include <arrowing/p3k3.hpp>
#include <arrowing/reduction.hpp>
#include <arrowing/subgraph.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <atomic>
#include <functional>
#include <iostream>
#include <thread>

using namespace arrowing;
using nlohmann::json;

namespace {

constexpr int exit_answered = 0;
constexpr int exit_input_error = 1;
constexpr int exit_inconclusive = 2;

struct Options {
    std::uint64_t budget = SearchBudget{}.max_nodes;
    std::uint64_t seed = 1;
    std::string archive = "gadgets";
    std::string out;
};

Options opts;

Graph load_graph(const std::string& arg)
{
    if (std::filesystem::exists(arg))
        return read_edge_list_file(arg);
    if (is_shorthand(arg))
        return graph_from_shorthand(arg);
    fail(ErrorCode::syntax, "'" + arg + "' is neither a graph file nor a pattern shorthand");
}

Edge parse_edge(const std::string& text)
{
    auto comma = text.find(',');
    try {
        if (comma == std::string::npos)
            throw std::invalid_argument(text);
        std::size_t used = 0;
        auto u = std::stoul(text.substr(0, comma), &used);
        auto v = std::stoul(text.substr(comma + 1));
        return {static_cast<Vertex>(u), static_cast<Vertex>(v)};
    } catch (const std::exception&) {
        fail(ErrorCode::syntax, "edge '" + text + "' is not of the form u,v");
    }
}

json linkage_json(const Linkage& l)
{
    if (l.is_infinite())
        return "infinite";
    return l.value();
}

json edges_json(std::span<const Edge> edges)
{
    auto arr = json::array();
    for (const auto& e : edges)
        arr.push_back({e.u, e.v});
    return arr;
}

int emit(const json& j, int code = exit_answered)
{
    auto text = j.dump(2) + "\n";
    if (opts.out.empty())
        std::cout << text;
    else
        write_text_file(opts.out, text);
    return code;
}

void note(const std::string& line) { std::cerr << line << "\n"; }

json stats_json(const SearchStats& s)
{
    return {{"nodes", s.nodes}, {"conflicts", s.conflicts}, {"propagations", s.propagations},
        {"lazy_clauses", s.lazy_clauses}};
}

// Gadgets come from the archive when present there and are forged (and
// stored) otherwise.
class Forge {
  public:
    Forge(Graph f, Graph h, bool build_missing) : f_(std::move(f)), h_(std::move(h)), build_(build_missing) {}

    const Gadget& get(GadgetKind kind)
    {
        auto it = cache_.find(kind);
        if (it != cache_.end())
            return it->second;
        auto loaded = load_gadget(opts.archive, f_, h_, kind, true, budget());
        if (loaded && loaded->verified)
            return cache_.emplace(kind, std::move(*loaded)).first->second;
        if (!build_)
            fail(ErrorCode::missing_gadget, "archive " + opts.archive + " has no verified " +
                    std::string(gadget_kind_name(kind)) + " for " + pattern_name(f_) + "/" + pattern_name(h_));
        auto g = build(kind);
        written_.push_back(store_gadget(opts.archive, g));
        return cache_.emplace(kind, std::move(g)).first->second;
    }

    const std::vector<std::string>& written() const { return written_; }

  private:
    SearchBudget budget() const { return SearchBudget{opts.budget}; }

    Gadget build(GadgetKind kind)
    {
        switch (kind) {
        case GadgetKind::enforcer: {
            auto e = search_enforcer(f_, h_, budget());
            if (!e)
                fail(ErrorCode::construction_failed, "no enforcer found within the search limits");
            return *e;
        }
        case GadgetKind::signal_extender:
            return build_signal_extender(h_, get(GadgetKind::enforcer), budget());
        case GadgetKind::leaf_sender:
            return build_leaf_sender(f_, h_, get(GadgetKind::enforcer), budget());
        case GadgetKind::variable_gadget:
            return build_variable_gadget(h_, get(GadgetKind::enforcer), get(GadgetKind::signal_extender), budget());
        case GadgetKind::clause_gadget:
            return build_clause_gadget(h_, get(GadgetKind::enforcer), budget());
        }
        fail(ErrorCode::precondition, "unknown gadget kind");
    }

    Graph f_;
    Graph h_;
    bool build_;
    std::map<GadgetKind, Gadget> cache_;
    std::vector<std::string> written_;
};

json gadget_summary(const Gadget& g, const std::string& path)
{
    return {{"kind", gadget_kind_name(g.kind)}, {"verified", g.verified}, {"vertices", g.graph.vertex_count()},
        {"edges", g.graph.edge_count()}, {"digest", g.log.digest()}, {"nodes", g.log.total_nodes()},
        {"copies_reconcile", copies_reconcile(g)}, {"construction", g.construction}, {"path", path}};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Arrowing toolkit: decide, search, forge gadgets and reduce (2,2)-3SAT"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--budget", opts.budget, "Search-node ceiling");
    app.add_option("--seed", opts.seed, "Seed for generated data");
    app.add_option("--archive", opts.archive, "Gadget archive directory");
    app.add_option("--out", opts.out, "Write the JSON result here instead of standard output");

    std::function<int()> action;
    std::string graph_spec, f_spec = "p3", h_spec = "k3", cert_path, first_edge, second_edge;

    auto* mepl_cmd = app.add_subcommand("mepl", "Minimum edge pair linkage");
    mepl_cmd->add_option("--graph", graph_spec)->required();
    mepl_cmd->callback([&] {
        action = [&] {
            auto g = load_graph(graph_spec);
            auto m = mepl(g);
            note("mepl = " + m.to_string());
            return emit({{"mepl", linkage_json(m)}});
        };
    });

    auto* epl_cmd = app.add_subcommand("epl", "Linkage of one pair of edges");
    epl_cmd->add_option("--graph", graph_spec)->required();
    epl_cmd->add_option("--first", first_edge, "u,v")->required();
    epl_cmd->add_option("--second", second_edge, "u,v")->required();
    epl_cmd->callback([&] {
        action = [&] {
            auto g = load_graph(graph_spec);
            auto l = epl(g, parse_edge(first_edge), parse_edge(second_edge));
            note("epl = " + l.to_string());
            return emit({{"epl", linkage_json(l)}});
        };
    });

    auto* copies_cmd = app.add_subcommand("copies", "Count subgraphs isomorphic to h");
    copies_cmd->add_option("--graph", graph_spec)->required();
    copies_cmd->add_option("--h", h_spec)->required();
    copies_cmd->callback([&] {
        action = [&] {
            auto n = count_copies(load_graph(graph_spec), load_graph(h_spec));
            note(std::to_string(n) + " copies");
            return emit({{"copies", n}});
        };
    });

    unsigned k = 2;
    auto* conn_cmd = app.add_subcommand("connectivity", "Connectivity and k-connectivity");
    conn_cmd->add_option("--graph", graph_spec)->required();
    conn_cmd->add_option("--k", k, "Connectivity order to test");
    conn_cmd->callback([&] {
        action = [&] {
            auto g = load_graph(graph_spec);
            auto comps = connected_components(g);
            bool kc = is_k_connected(g, k);
            note(std::to_string(comps.size()) + " components, " + (kc ? "" : "not ") + std::to_string(k) +
                "-connected");
            return emit({{"connected", is_connected(g)}, {"components", comps.size()}, {"k", k}, {"k_connected", kc}});
        };
    });

    std::string strategy = "automatic";
    auto* arrows_cmd = app.add_subcommand("arrows", "Decide G -> (F, H) by exhaustive search");
    arrows_cmd->add_option("--graph", graph_spec)->required();
    arrows_cmd->add_option("--f", f_spec);
    arrows_cmd->add_option("--h", h_spec);
    arrows_cmd->add_option("--certificate", cert_path, "Write a good colouring here when one exists");
    arrows_cmd->add_option("--strategy", strategy)->check(CLI::IsMember({"automatic", "generic"}));
    arrows_cmd->callback([&] {
        action = [&] {
            auto g = load_graph(graph_spec);
            SearchOptions so;
            so.strategy = strategy == "generic" ? Strategy::generic : Strategy::automatic;
            auto r = arrows(g, load_graph(f_spec), load_graph(h_spec), SearchBudget{opts.budget}, so);
            json j{{"stats", stats_json(r.stats)}};
            if (!r.result) {
                note("inconclusive: budget exceeded");
                j["arrows"] = nullptr;
                j["status"] = "budget_exceeded";
                return emit(j, exit_inconclusive);
            }
            j["arrows"] = *r.result;
            if (r.certificate && !cert_path.empty()) {
                write_text_file(cert_path, coloring_to_json(*r.certificate).dump(2) + "\n");
                j["certificate"] = cert_path;
            }
            note(*r.result ? "arrows" : "does not arrow");
            return emit(j);
        };
    });

    auto* p3k3_cmd = app.add_subcommand("p3k3", "Polynomial (P3, K3) decision via triangle-weighted matching");
    p3k3_cmd->add_option("--graph", graph_spec)->required();
    p3k3_cmd->add_option("--certificate", cert_path);
    p3k3_cmd->callback([&] {
        action = [&] {
            auto d = decide_p3_k3(load_graph(graph_spec));
            json j{{"arrows", d.arrows}, {"t", d.triangles}, {"matching_weight", d.matching_weight},
                {"matching", edges_json(d.matching.edges)}};
            if (d.certificate && !cert_path.empty()) {
                write_text_file(cert_path, coloring_to_json(*d.certificate).dump(2) + "\n");
                j["certificate"] = cert_path;
            }
            note(std::string(d.arrows ? "arrows" : "does not arrow") + ": weight " +
                std::to_string(d.matching_weight) + " vs t = " + std::to_string(d.triangles));
            return emit(j);
        };
    });

    std::string graph_out;
    auto* prune_cmd = app.add_subcommand("prune", "Delete edges that lie in no copy of h");
    prune_cmd->add_option("--graph", graph_spec)->required();
    prune_cmd->add_option("--h", h_spec)->required();
    prune_cmd->add_option("--graph-out", graph_out);
    prune_cmd->callback([&] {
        action = [&] {
            auto g = load_graph(graph_spec);
            auto p = prune_non_h_edges(g, load_graph(h_spec));
            if (!graph_out.empty())
                write_edge_list_file(p.graph, graph_out);
            note("removed " + std::to_string(p.removed.size()) + " edges");
            return emit({{"edges_before", g.edge_count()}, {"edges_after", p.graph.edge_count()},
                {"removed", edges_json(p.removed)}, {"graph", to_edge_list(p.graph)}});
        };
    });

    unsigned tk_n = 3;
    auto* tk_cmd = app.add_subcommand("tk-check", "Compare (P3, TK_n) and (P3, K_n) arrowing");
    tk_cmd->add_option("--graph", graph_spec)->required();
    tk_cmd->add_option("--n", tk_n);
    tk_cmd->callback([&] {
        action = [&] {
            auto r = check_tk_equivalence(load_graph(graph_spec), tk_n, SearchBudget{opts.budget});
            auto opt = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
            const char* agreement = r.agreement == Agreement::agree ? "agree"
                : r.agreement == Agreement::disagree                ? "disagree"
                                                                    : "inconclusive";
            note(agreement);
            return emit({{"n", r.n}, {"tk_arrows", opt(r.tk_arrows)}, {"k_arrows", opt(r.k_arrows)},
                            {"agreement", agreement}},
                r.agreement == Agreement::inconclusive ? exit_inconclusive : exit_answered);
        };
    });

    std::string kind_name = "all";
    auto* find_cmd = app.add_subcommand("gadget-find", "Search, verify and archive gadgets");
    find_cmd->add_option("--f", f_spec);
    find_cmd->add_option("--h", h_spec)->required();
    find_cmd->add_option("--kind", kind_name, "enforcer, signal_extender, leaf_sender, variable_gadget, clause_gadget or all");
    find_cmd->callback([&] {
        action = [&] {
            auto f = load_graph(f_spec);
            auto h = load_graph(h_spec);
            Forge forge(f, h, true);
            std::vector<GadgetKind> kinds;
            if (kind_name == "all") {
                if (star_size(f) == 2u)
                    kinds = {GadgetKind::enforcer, GadgetKind::signal_extender, GadgetKind::variable_gadget,
                        GadgetKind::clause_gadget};
                else
                    kinds = {GadgetKind::enforcer, GadgetKind::leaf_sender};
            } else {
                kinds = {gadget_kind_from_name(kind_name)};
            }
            json list = json::array();
            for (auto kind : kinds) {
                const auto& g = forge.get(kind);
                auto path = (std::filesystem::path(opts.archive) / archive_file_name(f, h, kind)).string();
                list.push_back(gadget_summary(g, path));
                note(std::string(gadget_kind_name(kind)) + ": " + g.construction);
            }
            return emit({{"gadgets", list}, {"written", forge.written()}});
        };
    });

    std::string gadget_file;
    auto* verify_cmd = app.add_subcommand("gadget-verify", "Re-run the exhaustive verification of an archived gadget");
    verify_cmd->add_option("--file", gadget_file)->required()->check(CLI::ExistingFile);
    verify_cmd->callback([&] {
        action = [&] {
            json stored;
            try {
                stored = json::parse(read_text_file(gadget_file));
            } catch (const json::exception& e) {
                fail(ErrorCode::syntax, gadget_file + ": " + e.what());
            }
            auto g = gadget_from_json(stored);
            auto stored_digest = g.log.digest();
            verify_gadget(g, SearchBudget{opts.budget});
            note(std::string(gadget_kind_name(g.kind)) + (g.verified ? " verified" : " FAILED verification"));
            auto j = gadget_summary(g, gadget_file);
            j["stored_digest"] = stored_digest;
            return emit(j);
        };
    });

    std::string formula_path, graph_path;
    bool forge_missing = false;
    auto* reduce_cmd = app.add_subcommand("reduce", "Compile a (2,2)-3SAT formula into G_phi");
    reduce_cmd->add_option("--formula", formula_path)->required()->check(CLI::ExistingFile);
    reduce_cmd->add_option("--h", h_spec)->required();
    reduce_cmd->add_option("--certificate", cert_path, "Write the colouring of a satisfying assignment here");
    reduce_cmd->add_option("--graph-out", graph_path);
    reduce_cmd->add_flag("--forge", forge_missing, "Forge gadgets missing from the archive");
    reduce_cmd->callback([&] {
        action = [&] {
            auto phi = read_formula_file(formula_path);
            auto h = load_graph(h_spec);
            Forge forge(path_graph(3), h, forge_missing);
            ReductionGadgets gadgets;
            gadgets.variable = forge.get(GadgetKind::variable_gadget);
            gadgets.clause = forge.get(GadgetKind::clause_gadget);
            gadgets.extender = forge.get(GadgetKind::signal_extender);
            auto out = build_g_phi(phi, gadgets, SearchBudget{opts.budget});
            auto j = reduction_to_json(out);
            j["copies_reconcile"] = reduction_copies_reconcile(out);
            j["vertex_count_matches"] = out.g_phi.vertex_count() == expected_vertex_count(out);
            if (!graph_path.empty())
                write_edge_list_file(out.g_phi, graph_path);
            auto a = sat_oracle(phi);
            j["satisfiable"] = a.has_value();
            if (a && !cert_path.empty()) {
                auto c = assignment_to_coloring(out, *a);
                write_text_file(cert_path, coloring_to_json(c).dump() + "\n");
                j["certificate"] = cert_path;
                auto back = coloring_to_assignment(out, c);
                j["round_trip_satisfies"] = satisfies(phi, back);
            }
            note("G_phi: " + std::to_string(out.g_phi.vertex_count()) + " vertices, " +
                std::to_string(out.g_phi.edge_count()) + " edges");
            return emit(j);
        };
    });

    std::string coloring_path;
    auto* certify_cmd = app.add_subcommand("certify", "Check that a colouring file is (F, H)-good");
    certify_cmd->add_option("--coloring", coloring_path)->required()->check(CLI::ExistingFile);
    certify_cmd->add_option("--f", f_spec);
    certify_cmd->add_option("--h", h_spec);
    certify_cmd->add_option("--graph", graph_spec, "Instance the colouring must belong to");
    certify_cmd->callback([&] {
        action = [&] {
            json cj;
            try {
                cj = json::parse(read_text_file(coloring_path));
            } catch (const json::exception& e) {
                fail(ErrorCode::syntax, coloring_path + ": " + e.what());
            }
            auto c = coloring_from_json(cj);
            json j{{"red_edges", c.red_edges().size()}};
            bool matches = true;
            if (!graph_spec.empty()) {
                matches = load_graph(graph_spec) == c.graph();
                j["graph_matches"] = matches;
            }
            bool good = matches && is_good(c, load_graph(f_spec), load_graph(h_spec));
            j["good"] = good;
            note(good ? "certificate is good" : "certificate REJECTED");
            return emit(j);
        };
    });

    unsigned gen_n = 3;
    std::size_t gen_count = 10;
    std::string gen_dir;
    auto* gen_cmd = app.add_subcommand("gen-formulas", "Generate distinct random (2,2)-3SAT instances");
    gen_cmd->add_option("--n", gen_n)->required();
    gen_cmd->add_option("--count", gen_count);
    gen_cmd->add_option("--dir", gen_dir, "Also write phi_<i>.txt files here");
    gen_cmd->callback([&] {
        action = [&] {
            auto list = generate_formulas(gen_n, opts.seed, gen_count);
            json texts = json::array();
            if (!gen_dir.empty())
                std::filesystem::create_directories(gen_dir);
            for (std::size_t i = 0; i < list.size(); ++i) {
                auto text = formula_to_text(list[i]);
                texts.push_back(text);
                if (!gen_dir.empty())
                    write_text_file((std::filesystem::path(gen_dir) / ("phi_" + std::to_string(i) + ".txt")).string(),
                        text);
            }
            note(std::to_string(list.size()) + " formulas");
            return emit({{"n", gen_n}, {"seed", opts.seed}, {"formulas", texts}});
        };
    });

    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force satisfiability of a formula");
    oracle_cmd->add_option("--formula", formula_path)->required()->check(CLI::ExistingFile);
    oracle_cmd->callback([&] {
        action = [&] {
            auto phi = read_formula_file(formula_path);
            auto a = sat_oracle(phi);
            json j{{"satisfiable", a.has_value()}};
            if (a) {
                json lits = json::array();
                for (unsigned v = 0; v < a->size(); ++v)
                    lits.push_back((*a)[v] ? static_cast<int>(v) + 1 : -static_cast<int>(v) - 1);
                j["assignment"] = lits;
            }
            note(a ? "satisfiable" : "unsatisfiable");
            return emit(j);
        };
    });

    std::string check = "p3k3";
    std::size_t max_n = 7;
    unsigned jobs = 1;
    auto* sweep_cmd = app.add_subcommand("sweep", "Cross-check a decider over every connected graph up to a size");
    sweep_cmd->add_option("--check", check, "p3k3 (matching vs exhaustive search) or tk (TK3 vs K3)")
        ->check(CLI::IsMember({"p3k3", "tk"}));
    sweep_cmd->add_option("--max-n", max_n)->check(CLI::Range(1, 9));
    sweep_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    sweep_cmd->callback([&] {
        action = [&] {
            auto graphs = connected_graphs_up_to(max_n);
            // 1 agree, 0 disagree, -1 inconclusive; slots are per graph so the
            // merged result does not depend on scheduling.
            std::vector<int> verdict(graphs.size(), -1);
            std::atomic<std::size_t> next{0};
            auto p3 = path_graph(3), k3 = complete_graph(3);
            auto work = [&] {
                for (std::size_t i; (i = next++) < graphs.size();) {
                    if (check == "tk") {
                        auto r = check_tk_equivalence(graphs[i], 3, SearchBudget{opts.budget});
                        verdict[i] = r.agreement == Agreement::agree ? 1 : r.agreement == Agreement::disagree ? 0 : -1;
                    } else {
                        SearchOptions generic;
                        generic.strategy = Strategy::generic;
                        auto r = find_good_coloring(graphs[i], p3, k3, SearchBudget{opts.budget}, generic);
                        if (r.status != SearchStatus::budget_exceeded)
                            verdict[i] = decide_p3_k3(graphs[i]).arrows == (r.status == SearchStatus::none);
                    }
                }
            };
            std::vector<std::thread> pool;
            for (unsigned t = 1; t < jobs; ++t)
                pool.emplace_back(work);
            work();
            for (auto& t : pool)
                t.join();
            std::size_t agree = 0, inconclusive = 0;
            json disagreements = json::array();
            for (std::size_t i = 0; i < graphs.size(); ++i) {
                agree += verdict[i] == 1;
                inconclusive += verdict[i] == -1;
                if (verdict[i] == 0)
                    disagreements.push_back(to_edge_list(graphs[i]));
            }
            note(std::to_string(agree) + "/" + std::to_string(graphs.size()) + " agree");
            return emit({{"check", check}, {"max_n", max_n}, {"graphs", graphs.size()}, {"agree", agree},
                            {"inconclusive", inconclusive}, {"disagreements", disagreements}},
                inconclusive ? exit_inconclusive : exit_answered);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input_error;
    }

    try {
        return action();
    } catch (const ArrowingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        bool budget = e.code() == ErrorCode::budget_exceeded;
        std::cout << json{{"error", error_code_name(e.code())}, {"message", e.what()}}.dump() << "\n";
        return budget ? exit_inconclusive : exit_input_error;
    }
}
