// Command-line front end: generate graphs, run the refinement and
// recognition pipelines, build CFI instances, and reproduce the
// standard workflows. Exit codes: 0 success, 1 usage/runtime error,
// 2 = a property the toolkit asserts failed to hold.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wlkit/cfi.hpp"
#include "wlkit/coherent.hpp"
#include "wlkit/generators.hpp"
#include "wlkit/graph.hpp"
#include "wlkit/io.hpp"
#include "wlkit/parallel.hpp"
#include "wlkit/transitivity.hpp"
#include "wlkit/version.hpp"
#include "wlkit/wl.hpp"

namespace {

using nlohmann::json;
using namespace wlkit;

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    return hash;
}

struct Manifest {
    json j;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::string out_path;

    Manifest(int argc, char** argv) {
        std::vector<std::string> args(argv, argv + argc);
        j["command"] = args;
        j["version"] = kVersion;
        j["inputs"] = json::object();
        j["outputs"] = json::array();
        j["seed"] = nullptr;
    }
    void input(const std::string& path, const std::string& content) {
        j["inputs"][path] = "fnv1a64:" + std::to_string(fnv1a(content));
    }
    void output(const std::string& path) { j["outputs"].push_back(path); }
    void seed(unsigned long long s) { j["seed"] = s; }
    void emit(int exit_code) {
        j["elapsed_seconds"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        j["exit_code"] = exit_code;
        if (out_path.empty()) {
            std::cerr << "manifest: " << j.dump() << "\n";
        } else {
            write_text_file(out_path, j.dump(2) + "\n");
        }
    }
};

Graph load_graph(Manifest& manifest, const std::string& path) {
    std::string content = read_text_file(path);
    manifest.input(path, content);
    std::string trimmed = content;
    while (!trimmed.empty() && (trimmed.back() == '\n' || trimmed.back() == '\r'))
        trimmed.pop_back();
    if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0)
        return from_graph6(trimmed);
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0)
        return from_json(trimmed);
    return from_edge_list(content);
}

std::set<int> parse_int_set(const std::string& csv) {
    std::set<int> out;
    std::stringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.insert(std::stoi(item));
    }
    return out;
}

Graph template_by_name(const std::string& spec, Manifest& manifest) {
    if (spec == "petersen") return petersen();
    if (spec.rfind("torus:", 0) == 0) return torus(std::stoi(spec.substr(6)));
    if (spec.rfind("cheng-oxley:", 0) == 0) return cheng_oxley(std::stoi(spec.substr(12)));
    if (spec.rfind("file:", 0) == 0) return load_graph(manifest, spec.substr(5));
    throw CLI::ValidationError("--template", "unknown template spec: " + spec);
}

int g_exit = 0;

void fail_property(const std::string& what) {
    std::cout << "FAIL: " << what << "\n";
    g_exit = 2;
}

void check_property(bool ok, const std::string& what) {
    if (ok)
        std::cout << "ok: " << what << "\n";
    else
        fail_property(what);
}

// ---- subcommand bodies ----

struct GenArgs {
    std::vector<std::string> circulant, dihedral;
    int paley_p = 0, cheng_oxley_p = 0, torus_l = 0, complete_n = -1, empty_n = -1, cycle_n = 0;
    bool petersen_flag = false, complement_flag = false;
    std::string output, format = "g6";
};

int run_gen(const GenArgs& args, Manifest& manifest) {
    std::optional<Graph> g;
    if (!args.circulant.empty())
        g = circulant(std::stoi(args.circulant[0]), parse_int_set(args.circulant[1]));
    else if (!args.dihedral.empty())
        g = dihedral_cayley(std::stoi(args.dihedral[0]), parse_int_set(args.dihedral[1]));
    else if (args.paley_p) g = paley(args.paley_p);
    else if (args.cheng_oxley_p) g = cheng_oxley(args.cheng_oxley_p);
    else if (args.torus_l) g = torus(args.torus_l);
    else if (args.petersen_flag) g = petersen();
    else if (args.complete_n >= 0) g = complete_graph(args.complete_n);
    else if (args.empty_n >= 0) g = empty_graph(args.empty_n);
    else if (args.cycle_n) g = cycle_graph(args.cycle_n);
    if (!g) throw CLI::ValidationError("gen", "no generator selected");
    if (args.complement_flag) g = complement(*g);

    std::string text;
    if (args.format == "g6") text = to_graph6(*g) + "\n";
    else if (args.format == "edgelist") text = to_edge_list(*g);
    else if (args.format == "json") text = to_json(*g) + "\n";
    else throw CLI::ValidationError("--format", "unknown format " + args.format);

    if (args.output.empty()) {
        std::cout << text;
    } else {
        write_text_file(args.output, text);
        manifest.output(args.output);
        std::cout << "wrote " << args.output << " (" << g->vertex_count() << " vertices, "
                  << g->edge_count() << " edges)\n";
    }
    return 0;
}

json coloring_classes_json(const PairColoring& coloring) {
    std::map<int, std::pair<long long, std::pair<int, int>>> classes;
    for (int u = 0; u < coloring.n; ++u)
        for (int v = 0; v < coloring.n; ++v) {
            auto [it, fresh] = classes.try_emplace(coloring.at(u, v), std::pair{0LL, std::pair{u, v}});
            ++it->second.first;
        }
    json out = json::array();
    for (auto& [color, info] : classes)
        out.push_back({{"color", color},
                       {"size", info.first},
                       {"representative_tuple", {info.second.first, info.second.second}}});
    return out;
}

int run_wl(const std::string& path, int k, int individualize_vertex, bool as_json, bool diagonal_only,
           Manifest& manifest) {
    Graph g = load_graph(manifest, path);
    if (individualize_vertex >= 0) g = individualize(g, individualize_vertex);

    json out;
    out["n"] = g.vertex_count();
    out["k"] = k;
    if (k == 1) {
        VertexColoring coloring = wl1(g);
        out["num_colors"] = coloring.num_colors;
        out["rounds"] = coloring.rounds;
    } else if (k == 2) {
        PairColoring coloring = wl2(g);
        out["num_colors"] = coloring.num_colors;
        out["rounds"] = coloring.rounds;
        if (as_json) out["classes"] = coloring_classes_json(coloring);
        if (diagonal_only) {
            std::set<int> diag;
            for (int v = 0; v < g.vertex_count(); ++v) diag.insert(coloring.at(v, v));
            out["diagonal_classes"] = diag.size();
        }
    } else {
        TupleColoring coloring = wlk(g, k);
        out["num_colors"] = coloring.num_colors;
        out["rounds"] = coloring.rounds;
        if (diagonal_only) {
            std::set<int> diag;
            std::vector<int> tuple(k);
            for (int v = 0; v < g.vertex_count(); ++v) {
                std::fill(tuple.begin(), tuple.end(), v);
                diag.insert(coloring.at(tuple));
            }
            out["diagonal_classes"] = diag.size();
        }
    }
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "n=" << out["n"] << " k=" << k << " classes=" << out["num_colors"]
                  << " rounds=" << out["rounds"];
        if (out.contains("diagonal_classes"))
            std::cout << " diagonal_classes=" << out["diagonal_classes"]
                      << " (experimental report, no claim attached)";
        std::cout << "\n";
    }
    return 0;
}

int run_coherent(const std::string& path, int extend_vertex, bool verify, bool as_json,
                 Manifest& manifest) {
    Graph g = load_graph(manifest, path);
    CoherentConfiguration x =
        extend_vertex >= 0 ? one_point_extension(g, extend_vertex) : closure(g);
    if (as_json) {
        std::cout << coherent_to_json(x) << "\n";
    } else {
        std::cout << "points=" << x.n << " relations=" << x.num_relations
                  << " fibers=" << x.fibers.size() << "\n";
        std::cout << "fibers:";
        for (auto& f : x.fibers) {
            std::cout << " {";
            for (std::size_t i = 0; i < f.size(); ++i) std::cout << (i ? "," : "") << f[i];
            std::cout << "}";
        }
        std::cout << "\nvalency:";
        for (int r = 0; r < x.num_relations; ++r)
            std::cout << " " << r << (x.reflexive[r] ? "*" : "") << ":" << x.valency[r];
        std::cout << "\n";
    }
    if (verify) {
        CoherenceReport report = verify_coherence(x);
        check_property(report.ok(), "coherence axioms A, B, C");
        for (auto& violation : report.violations)
            std::cout << "  axiom " << violation.axiom << ": " << violation.detail << "\n";
    }
    return 0;
}

int run_recognize(const std::string& path, const std::string& property, bool use_oracle,
                  bool as_json, Manifest& manifest) {
    Graph g = load_graph(manifest, path);
    json out;
    out["property"] = property;
    bool yes = false;
    if (use_oracle) {
        yes = property == "vertex-transitive" ? is_vertex_transitive_exact(g)
                                              : is_arc_transitive_exact(g);
        out["method"] = "oracle";
    } else {
        RecognitionVerdict verdict = property == "vertex-transitive"
                                         ? recognize_vertex_transitive_prime(g)
                                         : recognize_arc_transitive_prime(g);
        yes = verdict.yes();
        out["method"] = "prime-method";
        out["conditions"] = {{"diagonal", verdict.condition_diagonal},
                             {"outdegree", verdict.condition_outdegree},
                             {"extensions", verdict.condition_extensions}};
        out["d"] = verdict.d;
        out["trivial"] = verdict.trivial;
        if (verdict.witness_vertex) out["witness_vertex"] = *verdict.witness_vertex;
        if (verdict.adjacency_split) out["adjacency_split"] = *verdict.adjacency_split;
        if (!verdict.note.empty()) out["note"] = verdict.note;
    }
    out["answer"] = yes;
    if (as_json)
        std::cout << out.dump(2) << "\n";
    else
        std::cout << property << ": " << (yes ? "yes" : "no") << "\n";
    return 0;
}

int run_distinguish(const std::string& a_path, const std::string& b_path, int k, bool as_json,
                    Manifest& manifest) {
    Graph a = load_graph(manifest, a_path);
    Graph b = load_graph(manifest, b_path);
    DistinguishReport report = distinguish_report(a, b, k);
    if (as_json) {
        json out{{"k", k},
                 {"distinguished", report.distinguished},
                 {"round", report.round},
                 {"rounds_to_stable", report.rounds_to_stable}};
        std::cout << out.dump(2) << "\n";
    } else if (report.distinguished) {
        std::cout << "distinguished at round " << report.round << "\n";
    } else {
        std::cout << "indistinguishable\n";
    }
    return 0;
}

struct CfiArgs {
    std::string template_spec;
    std::string twists;
    bool pair = false, hard = false, analyze = false;
    std::string output_prefix = "cfi";
};

int run_cfi(const CfiArgs& args, Manifest& manifest) {
    Graph f = template_by_name(args.template_spec, manifest);
    if (args.analyze) {
        TemplateReport report = analyze_template(f);
        json out{{"k", report.k},
                 {"regular", report.regular},
                 {"connected", report.connected},
                 {"nu", report.max_common_neighbors},
                 {"assumption_ok", report.assumption_ok},
                 {"separator_bound_expansion", report.separator_bound_expansion},
                 {"separator_bound_diameter", report.separator_bound_diameter},
                 {"separator_best_bound", report.separator_best_bound}};
        if (report.diameter) out["diameter"] = *report.diameter;
        if (report.separator_exact) out["separator_exact"] = *report.separator_exact;
        if (report.expansion_exact) out["vertex_expansion"] = *report.expansion_exact;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (args.hard) {
        HardPair pair = hard_pair(f);
        std::string g_path = args.output_prefix + "_G.g6";
        std::string h_path = args.output_prefix + "_H.g6";
        write_text_file(g_path, to_graph6(pair.g) + "\n");
        write_text_file(h_path, to_graph6(pair.h) + "\n");
        manifest.output(g_path);
        manifest.output(h_path);
        json out{{"k_bound", pair.k_bound},
                 {"k_bound_exact", pair.k_bound_exact},
                 {"n", pair.g.vertex_count()},
                 {"files", {g_path, h_path}}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::vector<int> twist_ids;
    if (!args.twists.empty())
        for (int e : parse_int_set(args.twists)) twist_ids.push_back(e);
    if (args.pair) {
        auto [a, b] = cfi_pair(f);
        std::string a_path = args.output_prefix + "_A.g6";
        std::string b_path = args.output_prefix + "_B.g6";
        write_text_file(a_path, to_graph6(a.base) + "\n");
        write_text_file(b_path, to_graph6(b.base) + "\n");
        manifest.output(a_path);
        manifest.output(b_path);
        std::cout << cfi_manifest_json(b, std::nullopt) << "\n";
        return 0;
    }
    CfiGraph a = cfi(f, twist_ids);
    std::string path = args.output_prefix + ".g6";
    write_text_file(path, to_graph6(a.base) + "\n");
    manifest.output(path);
    std::cout << cfi_manifest_json(a, std::nullopt) << "\n";
    return 0;
}

std::vector<Graph> all_labeled_graphs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<Graph> out;
    for (unsigned long long mask = 0; mask < (1ULL << pairs.size()); ++mask) {
        std::vector<Graph::Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask & (1ULL << i)) edges.push_back(pairs[i]);
        out.push_back(Graph::build(n, std::move(edges)));
    }
    return out;
}

std::vector<Graph> all_circulants_on(int p) {
    std::vector<Graph> out;
    int half = p / 2;
    for (unsigned long long mask = 1; mask < (1ULL << half); ++mask) {
        std::set<int> connection;
        for (int z = 1; z <= half; ++z)
            if (mask & (1ULL << (z - 1))) {
                connection.insert(z);
                connection.insert(p - z);
            }
        out.push_back(circulant(p, connection));
    }
    return out;
}

int run_reproduce(const std::string& figure, unsigned long long seed, Manifest& manifest) {
    manifest.seed(seed);
    if (figure == "fig1") {
        Graph g = complement(cycle_graph(7));
        CoherentConfiguration x = closure(g);
        check_property(x.num_relations == 4, "stable coloring has 4 classes");
        int outdeg2 = 0;
        for (auto& c : constituents(x))
            if (!c.reflexive && c.outdegree == 2) ++outdeg2;
        check_property(outdeg2 == 3, "three irreflexive constituents of outdegree 2");

        CoherentConfiguration x0 = one_point_extension(g, 0);
        int with2 = 0;
        bool rest_one = true;
        for (auto& c : constituents(x0)) {
            if (c.reflexive) continue;
            if (c.outdegree == 2) ++with2;
            else if (c.outdegree != 1) rest_one = false;
        }
        check_property(with2 == 3, "individualized copy keeps 3 constituents of outdegree 2");
        check_property(rest_one, "all remaining constituents have outdegree 1");
        return g_exit;
    }
    if (figure == "thm1-corpus") {
        int checked = 0;
        for (const Graph& g : all_labeled_graphs(5)) {
            bool expected = is_vertex_transitive_exact(g);
            if (recognize_vertex_transitive_prime(g).yes() != expected)
                fail_property("disagreement on a 5-vertex graph");
            ++checked;
        }
        for (int p : {11, 13})
            for (const Graph& g : all_circulants_on(p)) {
                if (!recognize_vertex_transitive_prime(g).yes())
                    fail_property("circulant not recognized as vertex-transitive");
                ++checked;
            }
        std::cout << "checked " << checked << " graphs\n";
        check_property(g_exit == 0, "recognizer agrees with the oracle on the quick corpus");
        return g_exit;
    }
    if (figure == "cfi-petersen") {
        check_property(is_isomorphic(cfi(complete_graph(4)).base,
                                     [] {
                                         std::vector<Graph::Edge> edges;
                                         for (int i = 0; i < 4; ++i)
                                             for (int j = 0; j < 4; ++j) {
                                                 for (int jj = j + 1; jj < 4; ++jj)
                                                     edges.emplace_back(i * 4 + j, i * 4 + jj);
                                                 for (int ii = i + 1; ii < 4; ++ii)
                                                     edges.emplace_back(i * 4 + j, ii * 4 + j);
                                             }
                                         return Graph::build(16, std::move(edges));
                                     }()),
                       "cfi(K4) is the 4x4 rook's graph");
        auto [a, b] = cfi_pair(petersen());
        check_property(a.base.vertex_count() == 40, "cfi(Petersen) has 40 vertices");
        check_property(basic_stats(a.base).regular_degree == 6, "cfi(Petersen) is 6-regular");
        check_property(max_common_neighbors(a.base) == 2, "nu of the CFI graph is 2");
        check_property(!is_isomorphic(a.base, b.base), "one twist changes the isomorphism class");
        return g_exit;
    }
    if (figure == "arc-torus") {
        auto [a, b] = cfi_pair(torus(3));
        check_property(is_arc_transitive_exact(a.base), "untwisted torus CFI graph is arc-transitive");
        check_property(is_arc_transitive_exact(b.base), "twisted torus CFI graph is arc-transitive");
        return g_exit;
    }
    throw CLI::ValidationError("reproduce", "unknown figure: " + figure);
}

}  // namespace

int main(int argc, char** argv) {
    Manifest manifest(argc, argv);
    CLI::App app{"Weisfeiler-Leman refinement, coherent configurations, prime-order "
                 "transitivity recognition and CFI hard instances"};
    app.set_version_flag("--version", kVersion);
    unsigned threads = 0;
    app.add_option("--threads", threads, "worker thread cap (0 = hardware)");
    std::size_t budget = 0;
    app.add_option("--memory-budget", budget, "tuple-space memory budget in bytes");
    app.add_option("--manifest", manifest.out_path, "write the run manifest to this file");
    unsigned long long seed = 1;
    app.add_option("--seed", seed, "seed for randomized corpora");
    app.require_subcommand(1);

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "generate a graph");
    gen->add_option("--circulant", gen_args.circulant, "modulus and comma-separated residues")
        ->expected(2);
    gen->add_option("--dihedral", gen_args.dihedral, "order parameter and exponent list")
        ->expected(2);
    gen->add_option("--paley", gen_args.paley_p, "Paley graph on a prime p = 1 mod 4");
    gen->add_option("--cheng-oxley", gen_args.cheng_oxley_p, "cubic arc-transitive graph on 2p");
    gen->add_option("--torus", gen_args.torus_l, "l x l torus grid");
    gen->add_flag("--petersen", gen_args.petersen_flag, "the Petersen graph");
    gen->add_option("--complete", gen_args.complete_n, "complete graph");
    gen->add_option("--empty", gen_args.empty_n, "empty graph");
    gen->add_option("--cycle", gen_args.cycle_n, "cycle graph");
    gen->add_flag("--complement", gen_args.complement_flag, "complement the result");
    gen->add_option("-o,--output", gen_args.output, "output file (.g6/.json/anything=edge list)");
    gen->add_option("--format", gen_args.format, "stdout format: g6, edgelist, json");

    std::string wl_graph;
    int wl_k = 2, wl_ind = -1;
    bool wl_json = false, wl_diag = false;
    CLI::App* wl_cmd = app.add_subcommand("wl", "run k-WL refinement");
    wl_cmd->add_option("--graph", wl_graph, "input graph file")->required();
    wl_cmd->add_option("--k", wl_k, "dimension (1, 2 or k)");
    wl_cmd->add_option("--individualize", wl_ind, "individualize this vertex first");
    wl_cmd->add_flag("--json", wl_json, "JSON output with class table");
    wl_cmd->add_flag("--diagonal", wl_diag,
                     "also report how many classes the diagonal splits into");

    std::string coh_graph;
    int coh_extend = -1;
    bool coh_verify = false, coh_json = false;
    CLI::App* coh = app.add_subcommand("coherent", "coherent configuration of a graph");
    coh->add_option("--graph", coh_graph, "input graph file")->required();
    coh->add_option("--extend", coh_extend, "one-point extension at this vertex");
    coh->add_flag("--verify", coh_verify, "run the axiom checks");
    coh->add_flag("--json", coh_json, "JSON output");

    std::string rec_graph, rec_property;
    bool rec_oracle = false, rec_prime = false, rec_json = false;
    CLI::App* rec = app.add_subcommand("recognize", "vertex/arc-transitivity");
    rec->add_option("--graph", rec_graph, "input graph file")->required();
    rec->add_option("--property", rec_property, "vertex-transitive or arc-transitive")
        ->required()
        ->check(CLI::IsMember({"vertex-transitive", "arc-transitive"}));
    rec->add_flag("--oracle", rec_oracle, "use the exact automorphism oracle");
    rec->add_flag("--prime-method", rec_prime, "use the prime-order method (default)");
    rec->add_flag("--json", rec_json, "JSON output");

    std::vector<std::string> dist_files;
    int dist_k = 2;
    bool dist_json = false;
    CLI::App* dist = app.add_subcommand("distinguish", "k-WL distinguishability of two graphs");
    dist->add_option("files", dist_files, "two graph files")->expected(2);
    dist->add_option("--k", dist_k, "dimension");
    dist->add_flag("--json", dist_json, "JSON output");

    CfiArgs cfi_args;
    CLI::App* cfi_cmd = app.add_subcommand("cfi", "CFI construction");
    cfi_cmd->add_option("--template", cfi_args.template_spec,
                        "petersen | torus:L | cheng-oxley:P | file:PATH")
        ->required();
    cfi_cmd->add_option("--twists", cfi_args.twists, "comma-separated template edge indices");
    cfi_cmd->add_flag("--pair", cfi_args.pair, "emit the untwisted/one-twist pair");
    cfi_cmd->add_flag("--hard-pair", cfi_args.hard, "emit the 2A vs A+B pair");
    cfi_cmd->add_flag("--analyze", cfi_args.analyze, "template diagnostics only");
    cfi_cmd->add_option("-o,--output", cfi_args.output_prefix, "output file prefix");

    std::string figure;
    CLI::App* rep = app.add_subcommand("reproduce", "reproduce a standard workflow");
    rep->add_option("figure", figure, "fig1 | thm1-corpus | cfi-petersen | arc-torus")
        ->required()
        ->check(CLI::IsMember({"fig1", "thm1-corpus", "cfi-petersen", "arc-torus"}));

    int exit_code = 0;
    try {
        app.parse(argc, argv);
        if (threads) set_thread_count(threads);
        if (const char* env = std::getenv("WLKIT_MEMORY_BUDGET"); env && !budget)
            budget = std::strtoull(env, nullptr, 10);
        if (budget) set_memory_budget(budget);

        if (gen->parsed()) exit_code = run_gen(gen_args, manifest);
        else if (wl_cmd->parsed())
            exit_code = run_wl(wl_graph, wl_k, wl_ind, wl_json, wl_diag, manifest);
        else if (coh->parsed())
            exit_code = run_coherent(coh_graph, coh_extend, coh_verify, coh_json, manifest);
        else if (rec->parsed())
            exit_code = run_recognize(rec_graph, rec_property, rec_oracle, rec_json, manifest);
        else if (dist->parsed())
            exit_code = run_distinguish(dist_files[0], dist_files[1], dist_k, dist_json, manifest);
        else if (cfi_cmd->parsed())
            exit_code = run_cfi(cfi_args, manifest);
        else if (rep->parsed())
            exit_code = run_reproduce(figure, seed, manifest);
        if (g_exit) exit_code = g_exit;
    } catch (const CLI::ParseError& e) {
        exit_code = app.exit(e) == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        exit_code = 1;
    }
    manifest.emit(exit_code);
    return exit_code;
}
