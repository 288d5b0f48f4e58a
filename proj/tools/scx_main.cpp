// scx: singly-connectedness toolkit command line.
//
// Exit codes: 0 = singly-connected / success, 1 = not singly-connected,
// 2 = usage, parse or guard error. Codes are a function of the verdict,
// never of timing. All output except the two wall-time CSV columns is
// byte-deterministic.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "scx/bench.hpp"
#include "scx/condense.hpp"
#include "scx/dot.hpp"
#include "scx/edge_list.hpp"
#include "scx/generators.hpp"
#include "scx/hardness.hpp"
#include "scx/oracle.hpp"
#include "scx/reduce.hpp"
#include "scx/sc_check.hpp"

namespace {

using namespace scx;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

DirectedGraph load_directed(const std::string& path) {
    std::istringstream in(read_input(path));
    return parse_directed_edge_list(in);
}

UndirectedGraph load_undirected(const std::string& path) {
    std::istringstream in(read_input(path));
    return parse_undirected_edge_list(in);
}

void print_origin_lines(const NotScWitness& w, const std::vector<VertexId>& ids) {
    for (VertexId r : ids) {
        std::cout << "origin " << r << ":";
        for (VertexId v : w.origin_map[r]) std::cout << ' ' << v;
        std::cout << "\n";
    }
}

void print_witness(const NotScWitness& w) {
    switch (w.kind()) {
        case WitnessKind::NonCycleScc: {
            const auto& d = std::get<NonCycleScc>(w.detail);
            std::cout << "witness kind=non-cycle-scc\n"
                      << "component " << d.component << "\n"
                      << "vertex " << d.vertex << "\n"
                      << "internal-indegree " << d.internal_indegree << "\n"
                      << "internal-outdegree " << d.internal_outdegree << "\n";
            break;
        }
        case WitnessKind::ParallelCondensationEdges: {
            const auto& d = std::get<ParallelCondensationEdges>(w.detail);
            std::cout << "witness kind=parallel-condensation-edges\n"
                      << "components " << d.comp_tail << " -> " << d.comp_head << "\n"
                      << "edge-1 " << d.original_edges[0].first << " -> "
                      << d.original_edges[0].second << "\n"
                      << "edge-2 " << d.original_edges[1].first << " -> "
                      << d.original_edges[1].second << "\n";
            break;
        }
        case WitnessKind::MultiEdgeAfterReduction: {
            const auto& d = std::get<MultiEdgeAfterReduction>(w.detail);
            std::cout << "witness kind=multi-edge-after-reduction\n"
                      << "reduced-pair " << d.tail << " -> " << d.head << "\n";
            print_origin_lines(w, {d.tail, d.head});
            break;
        }
        case WitnessKind::ConvergingDfsPaths: {
            const auto& d = std::get<ConvergingDfsPaths>(w.detail);
            std::cout << "witness kind=converging-dfs-paths\n"
                      << "source " << d.source << "\n"
                      << "meet " << d.meet << "\n";
            std::cout << "path-a:";
            for (VertexId v : d.path_a) std::cout << ' ' << v;
            std::cout << "\npath-b:";
            for (VertexId v : d.path_b) std::cout << ' ' << v;
            std::cout << "\n";
            std::vector<VertexId> ids = d.path_a;
            ids.insert(ids.end(), d.path_b.begin(), d.path_b.end());
            std::sort(ids.begin(), ids.end());
            ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
            print_origin_lines(w, ids);
            break;
        }
    }
}

int cmd_check(const std::string& file, bool witness, bool stats, bool naive, bool oracle) {
    DirectedGraph g = load_directed(file);
    ScVerdict v = is_singly_connected(g);
    std::cout << (v.singly_connected ? "singly-connected" : "not singly-connected") << "\n";
    if (witness && v.witness) {
        if (!validate_witness(g, v)) {
            std::cerr << "internal error: witness failed re-validation\n";
            return 2;
        }
        print_witness(*v.witness);
    }
    if (stats) {
        std::cout << "stat sources_processed " << v.counters.sources_processed << "\n"
                  << "stat dfs_vertex_visits " << v.counters.dfs_vertex_visits << "\n"
                  << "stat dfs_edge_explorations " << v.counters.dfs_edge_explorations << "\n"
                  << "stat reduction_edges_touched " << v.counters.reduction_edges_touched
                  << "\n"
                  << "stat s " << v.source_count << "\n"
                  << "stat t " << v.sink_count << "\n"
                  << "stat n " << g.live_vertex_count() << "\n"
                  << "stat m " << v.input_edge_count << "\n";
    }
    if (naive) {
        bool agrees;
        CondenseResult cres = condense(g);
        if (std::holds_alternative<Condensation>(cres)) {
            ScVerdict nv = naive_quadratic_check(std::get<Condensation>(cres).dag);
            agrees = nv.singly_connected == v.singly_connected;
        } else {
            agrees = !v.singly_connected;  // early reject is a rejection
        }
        std::cout << "naive agree " << (agrees ? "yes" : "no") << "\n";
    }
    if (oracle) {
        OracleVerdict ov = oracle_singly_connected(g);  // refuses n > 16
        std::cout << "oracle agree "
                  << (ov.singly_connected == v.singly_connected ? "yes" : "no") << "\n";
    }
    return v.singly_connected ? 0 : 1;
}

int cmd_gen(const std::string& family, const std::vector<std::string>& args) {
    auto need = [&](std::size_t k) {
        if (args.size() != k)
            throw Error("gen " + family + ": expected " + std::to_string(k) + " arguments");
    };
    DirectedGraph g;
    if (family == "butterfly") {
        need(1);
        g = butterfly(static_cast<unsigned>(std::stoul(args[0])));
    } else if (family == "cycle") {
        need(1);
        g = simple_cycle(std::stoul(args[0]));
    } else if (family == "gnp") {
        need(3);
        g = random_digraph(std::stoul(args[0]), std::stod(args[1]), std::stoull(args[2]));
    } else if (family == "dag") {
        need(3);
        g = random_dag(std::stoul(args[0]), std::stod(args[1]), std::stoull(args[2]));
    } else {
        throw Error("gen: unknown family " + family);
    }
    std::cout << serialize_edge_list(g);
    return 0;
}

int cmd_reduce(const std::string& file) {
    DirectedGraph g = load_directed(file);
    CondenseResult cres = condense(g);
    auto revalidate = [&](NotScWitness w) {
        ScVerdict v;
        v.singly_connected = false;
        v.witness = std::move(w);
        if (!validate_witness(g, v)) throw Error("internal: reject failed re-validation");
    };
    if (auto* ncs = std::get_if<NonCycleScc>(&cres)) {
        revalidate(NotScWitness{*ncs, {}});
        std::cout << "early-reject non-cycle-scc component=" << ncs->component
                  << " vertex=" << ncs->vertex << " indegree=" << ncs->internal_indegree
                  << " outdegree=" << ncs->internal_outdegree << "\n";
        return 1;
    }
    if (auto* pce = std::get_if<ParallelCondensationEdges>(&cres)) {
        revalidate(NotScWitness{*pce, {}});
        std::cout << "early-reject parallel-condensation-edges components="
                  << pce->comp_tail << "->" << pce->comp_head << " edge1="
                  << pce->original_edges[0].first << "->" << pce->original_edges[0].second
                  << " edge2=" << pce->original_edges[1].first << "->"
                  << pce->original_edges[1].second << "\n";
        return 1;
    }
    Condensation cond = std::get<Condensation>(std::move(cres));
    auto members = std::move(cond.members);
    ReducedGraph rg = reduce_degree_one(std::move(cond.dag));
    std::cout << serialize_edge_list(rg.dag);
    for (std::size_t r = 0; r < rg.origin.size(); ++r) {
        std::vector<VertexId> originals;
        for (VertexId c : rg.origin[r])
            originals.insert(originals.end(), members[c].begin(), members[c].end());
        std::sort(originals.begin(), originals.end());
        std::cout << r << ":";
        for (VertexId v : originals) std::cout << ' ' << v;
        std::cout << "\n";
    }
    if (rg.has_multi_edge) {
        std::cout << "has-multi-edge\n";
        return 1;
    }
    return 0;
}

int cmd_hardness(const std::string& kind, const std::string& file) {
    UndirectedGraph g = load_undirected(file);
    ReductionArtifact art = kind == "esc" ? reduce_vc_to_esc(g) : reduce_vc_to_vsc(g);
    std::cout << serialize_edge_list(art.gadget);
    std::cout << "# vertex gadgets: v: v' v''\n";
    for (std::size_t v = 0; v < art.vertex_gadget.size(); ++v) {
        std::cout << "v " << v << ": " << art.vertex_gadget[v].first;
        if (art.vertex_gadget[v].second != kNoVertex)
            std::cout << ' ' << art.vertex_gadget[v].second;
        std::cout << "\n";
    }
    std::cout << "# edge gadgets: e {u,w}: e' e''\n";
    for (std::size_t i = 0; i < art.edge_gadget.size(); ++i) {
        auto [u, w] = g.edges()[i];
        std::cout << "e " << i << " {" << u << "," << w << "}: " << art.edge_gadget[i].first
                  << ' ' << art.edge_gadget[i].second << "\n";
    }
    return 0;
}

int cmd_solve(const std::string& kind, const std::string& file, bool exact) {
    if (!exact) throw Error("solve: only --exact mode is available");
    ExactSolution sol;
    if (kind == "vc") {
        sol = exact_min_vertex_cover(load_undirected(file));
    } else if (kind == "esc") {
        sol = exact_min_esc(load_directed(file));
    } else {
        sol = exact_min_vsc(load_directed(file));
    }
    std::cout << "kind " << kind << "\n"
              << "size " << sol.size << "\n"
              << "members";
    for (std::uint32_t x : sol.chosen) std::cout << ' ' << x;
    std::cout << "\n"
              << "certificate " << (sol.certificate ? "ok" : "FAILED") << "\n";
    return 0;
}

int cmd_bench(unsigned dmin, unsigned dmax, const std::string& csv_path) {
    std::vector<BenchRecord> rows = run_bench_butterfly(dmin, dmax);
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw Error("cannot write " + csv_path);
    out << bench_csv_header();
    for (const auto& r : rows) out << bench_csv_row(r);
    if (!out) throw Error("write failed on " + csv_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"singly-connectedness toolkit"};
    app.require_subcommand(1);

    std::string file;
    bool flag_witness = false, flag_stats = false, flag_naive = false, flag_oracle = false;
    auto* check = app.add_subcommand("check", "decide single connectedness of an edge list");
    check->add_option("file", file, "edge-list file or -")->required();
    check->add_flag("--witness", flag_witness, "print the structured witness on rejection");
    check->add_flag("--stats", flag_stats, "print work counters");
    check->add_flag("--naive", flag_naive, "also run the quadratic baseline and report agreement");
    check->add_flag("--oracle", flag_oracle, "also run the brute-force oracle (n <= 16)");

    std::string gen_family;
    std::vector<std::string> gen_args;
    auto* gen = app.add_subcommand("gen", "emit a generated graph as an edge list");
    gen->add_option("family", gen_family, "butterfly | cycle | gnp | dag")->required();
    gen->add_option("args", gen_args, "family parameters");

    std::string reduce_file;
    auto* red = app.add_subcommand("reduce", "condense and contract degree-1 vertices");
    red->add_option("file", reduce_file, "edge-list file or -")->required();

    std::string hard_kind, hard_file;
    auto* hard = app.add_subcommand("hardness", "build a vertex-cover gadget");
    hard->add_option("kind", hard_kind, "esc | vsc")
        ->required()
        ->check(CLI::IsMember({"esc", "vsc"}));
    hard->add_option("file", hard_file, "undirected edge-list file or -")->required();

    std::string solve_kind, solve_file;
    bool solve_exact = false;
    auto* solve = app.add_subcommand("solve", "exact minimization at desk scale");
    solve->add_option("kind", solve_kind, "vc | esc | vsc")
        ->required()
        ->check(CLI::IsMember({"vc", "esc", "vsc"}));
    solve->add_option("file", solve_file, "edge-list file or -")->required();
    solve->add_flag("--exact", solve_exact, "exhaustive enumeration (the only mode)");

    std::string bench_family = "butterfly", csv_path;
    unsigned dmin = 1, dmax = 1;
    auto* bench = app.add_subcommand("bench", "work-counter comparison table");
    bench->add_option("--family", bench_family, "instance family")
        ->check(CLI::IsMember({"butterfly"}));
    bench->add_option("--min", dmin, "smallest dimension")->required();
    bench->add_option("--max", dmax, "largest dimension")->required();
    bench->add_option("--csv", csv_path, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*check) return cmd_check(file, flag_witness, flag_stats, flag_naive, flag_oracle);
        if (*gen) return cmd_gen(gen_family, gen_args);
        if (*red) return cmd_reduce(reduce_file);
        if (*hard) return cmd_hardness(hard_kind, hard_file);
        if (*solve) return cmd_solve(solve_kind, solve_file, solve_exact);
        if (*bench) return cmd_bench(dmin, dmax, csv_path);
    } catch (const scx::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
