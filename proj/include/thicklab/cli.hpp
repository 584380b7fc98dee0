#ifndef THICKLAB_CLI_HPP
#define THICKLAB_CLI_HPP

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "thicklab/serialize.hpp"

namespace thicklab::cli {

// Exit codes: 0 success/valid, 1 verification failure, 2 usage or input
// error, 3 solver refusal.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRefused = 3;

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        if (!text.empty() && text.back() != '\n') out << '\n';
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw FormatError("cannot write file: " + out_path);
    file << text;
}

inline Graph parse_graph(const std::string& text, const std::string& format) {
    if (format == "edgelist") return from_edge_list(text);
    if (format == "graph6") return from_graph6(text);
    try {
        return from_edge_list(text);
    } catch (const FormatError&) {
        return from_graph6(text);
    }
}

inline SolverOptions solver_options(bool parallel) {
    SolverOptions opt;
    if (const char* cap = std::getenv("THICKNESS_LAB_NODE_CAP")) {
        char* end = nullptr;
        const unsigned long long value = std::strtoull(cap, &end, 10);
        if (end == cap || *end != '\0' || value == 0) {
            throw FormatError("THICKNESS_LAB_NODE_CAP must be a positive integer");
        }
        opt.node_cap = value;
    }
    if (parallel) {
        const unsigned hw = std::thread::hardware_concurrency();
        opt.threads = hw > 1 ? static_cast<int>(hw) : 1;
    }
    return opt;
}

}  // namespace detail

// Runs one subcommand; args exclude the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"construct, verify and bound biplanar decompositions of K_n x P_m"};
    app.name("thickness-lab");
    app.require_subcommand(1);

    auto* generate = app.add_subcommand("generate", "emit a biplanar decomposition of K_8 x P_m");
    int gen_m = 1;
    std::string gen_format = "json";
    std::string gen_out;
    generate->add_option("--m", gen_m, "number of path layers (>= 1)")->required();
    generate->add_option("--format", gen_format, "output format")
        ->check(CLI::IsMember({"json", "graph6", "dot"}));
    generate->add_option("--out", gen_out, "output file (default: stdout)");

    auto* verify = app.add_subcommand("verify", "verify a decomposition file");
    std::string verify_file;
    verify->add_option("--file", verify_file, "decomposition JSON file")->required();

    auto* bounds = app.add_subcommand("bounds", "thickness bounds for K_n x P_m");
    int bounds_n = 0;
    int bounds_m = 1;
    bounds->add_option("--n", bounds_n, "complete-graph order")->required();
    bounds->add_option("--m", bounds_m, "path length (default 1, i.e. K_n itself)");

    auto* solve = app.add_subcommand("solve", "exact thickness of a small graph");
    std::string solve_file;
    std::string solve_format = "auto";
    int solve_kmax = 4;
    bool solve_parallel = false;
    solve->add_option("--file", solve_file, "graph file (edge list or graph6)")->required();
    solve->add_option("--k-max", solve_kmax, "largest part count to try");
    solve->add_option("--input-format", solve_format, "edgelist|graph6|auto")
        ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
    solve->add_flag("--parallel", solve_parallel, "explore search subtrees concurrently");

    auto* gadgets = app.add_subcommand("gadgets", "fixed 8-vertex gadget edge lists");
    std::string gadget_kind;
    gadgets->add_option("--kind", gadget_kind, "one of h1|h2|i1|i2 (default: all)")
        ->check(CLI::IsMember({"h1", "h2", "i1", "i2"}));

    auto* census = app.add_subcommand("census", "face census of a K_n x P_2 decomposition");
    std::string census_file;
    census->add_option("--file", census_file, "decomposition JSON file")->required();

    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (generate->parsed()) {
            if (gen_m < 1) {
                err << "error: --m must be >= 1\n";
                return kExitUsage;
            }
            const BiplanarDecomposition d = build_decomposition(gen_m);
            std::string text;
            if (gen_format == "json") {
                text = decomposition_to_json(d).dump(2);
            } else if (gen_format == "graph6") {
                const int n = 8 * gen_m;
                text = to_graph6(Graph(n, d.part1)) + "\n" + to_graph6(Graph(n, d.part2));
            } else {
                text = decomposition_to_dot(8 * gen_m, d.part1, d.part2);
            }
            detail::emit(text, gen_out, out);
            return kExitOk;
        }

        if (verify->parsed()) {
            const auto file = decomposition_from_json(json::parse(detail::read_file(verify_file)));
            const DecompositionReport report = verify_decomposition(file.product(), file.parts);
            out << report_to_json(report).dump(2) << "\n";
            const bool valid = report.is_partition && report.all_parts_planar();
            return valid ? kExitOk : kExitInvalid;
        }

        if (bounds->parsed()) {
            if (bounds_n < 1 || bounds_m < 1) {
                err << "error: --n and --m must be >= 1\n";
                return kExitUsage;
            }
            BoundReport report;
            if (bounds_m == 1) {
                report = thickness_complete_report(bounds_n);
            } else if (bounds_m == 2) {
                report = thickness_kn_p2(bounds_n);
            } else {
                report = thickness_kn_pm(bounds_n, bounds_m);
            }
            out << bound_report_to_json(report).dump(2) << "\n";
            return kExitOk;
        }

        if (solve->parsed()) {
            const Graph g = detail::parse_graph(detail::read_file(solve_file), solve_format);
            if (solve_kmax < 1) {
                err << "error: --k-max must be >= 1\n";
                return kExitUsage;
            }
            const SolverResult result =
                thickness_exact(g, solve_kmax, detail::solver_options(solve_parallel));
            out << solver_result_to_json(result).dump(2) << "\n";
            return result.status == SolverStatus::refused ? kExitRefused : kExitOk;
        }

        if (gadgets->parsed()) {
            json body;
            if (gadget_kind.empty()) {
                for (GadgetKind kind : {GadgetKind::h1, GadgetKind::h2, GadgetKind::i1,
                                        GadgetKind::i2}) {
                    body[gadget_name(kind)] = edges_to_json(gadget_edges(kind));
                }
            } else {
                const GadgetKind kind = gadget_kind == "h1"   ? GadgetKind::h1
                                        : gadget_kind == "h2" ? GadgetKind::h2
                                        : gadget_kind == "i1" ? GadgetKind::i1
                                                              : GadgetKind::i2;
                body["kind"] = gadget_kind;
                body["edges"] = edges_to_json(gadget_edges(kind));
            }
            out << body.dump(2) << "\n";
            return kExitOk;
        }

        if (census->parsed()) {
            const auto file = decomposition_from_json(json::parse(detail::read_file(census_file)));
            if (file.m != 2) {
                err << "error: the face census is defined for m = 2 decompositions\n";
                return kExitUsage;
            }
            std::vector<Embedding> embeddings;
            for (std::size_t i = 0; i < file.parts.size(); ++i) {
                PlanarityCertificate cert =
                    is_planar(Graph(2 * file.n, sorted_edges(file.parts[i])));
                if (!cert.planar()) {
                    err << "error: part " << i << " is not planar; no census possible\n";
                    return kExitInvalid;
                }
                embeddings.push_back(std::move(*cert.embedding));
            }
            EdgeList path_edges;
            for (int i = 0; i < file.n; ++i) path_edges.push_back(edge(i, file.n + i));
            FaceCensus result;
            try {
                result = face_census(embeddings, path_edges);
            } catch (const CensusPreconditionError& e) {
                err << "error: " << e.what() << "\n";
                return kExitInvalid;
            }
            out << census_to_json(result).dump(2) << "\n";
            return result.all_ok() ? kExitOk : kExitInvalid;
        }
    } catch (const FormatError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const json::exception& e) {
        err << "error: invalid JSON input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
}

inline int run_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(std::move(args), out, err);
}

}  // namespace thicklab::cli

#endif
