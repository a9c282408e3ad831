#include "antimagic/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "antimagic/approx_magic.hpp"
#include "antimagic/decomposition.hpp"
#include "antimagic/generators.hpp"
#include "antimagic/graph_io.hpp"
#include "antimagic/product_antimagic.hpp"
#include "antimagic/search.hpp"
#include "antimagic/verification.hpp"

namespace antimagic::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError:
        case ErrorCode::InfeasibleParameters:
        case ErrorCode::RetryBudgetExhausted:
        case ErrorCode::SelfLoop:
        case ErrorCode::DuplicateEdge:
        case ErrorCode::VertexOutOfRange:
        case ErrorCode::SizeMismatch:
            return kExitParseError;
        default:
            return kExitUnsupported;
    }
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open graph file '" + path + "'");
    return read_edge_list(in);
}

Labeling load_labeling(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open labeling file '" + path + "'");
    return read_labeling(in, g);
}

// Writes to `path`, or to `fallback` when path is empty.
template <typename Fn>
void emit(const std::string& path, std::ostream& fallback, Fn&& write) {
    if (path.empty()) {
        write(fallback);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
    write(f);
}

std::size_t to_size(const std::string& s) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != s.size() || s.empty() || s.front() == '-') {
        throw Error(ErrorCode::InfeasibleParameters, "expected a non-negative integer, got '" + s + "'");
    }
    return static_cast<std::size_t>(v);
}

Graph generate(const std::string& family, const std::vector<std::string>& params, std::uint64_t seed) {
    auto want = [&](std::size_t count) {
        if (params.size() != count) {
            throw Error(ErrorCode::InfeasibleParameters,
                        "family '" + family + "' takes " + std::to_string(count) + " parameter(s)");
        }
    };
    if (family == "cycle") return want(1), cycle_graph(to_size(params[0]));
    if (family == "complete") return want(1), complete_graph(to_size(params[0]));
    if (family == "path") return want(1), path_graph(to_size(params[0]));
    if (family == "petersen") return want(0), petersen_graph();
    if (family == "random-regular") return want(2), random_regular_graph(to_size(params[0]), to_size(params[1]), seed);
    if (family == "circulant") {
        if (params.size() < 2) throw Error(ErrorCode::InfeasibleParameters, "circulant takes n and offsets");
        std::vector<std::size_t> offsets;
        for (std::size_t i = 1; i < params.size(); ++i) offsets.push_back(to_size(params[i]));
        return circulant_graph(to_size(params[0]), offsets);
    }
    if (family == "disjoint-union") {
        std::vector<Graph> parts;
        for (const auto& p : params) parts.push_back(load_graph(p));
        return disjoint_union(parts);
    }
    throw Error(ErrorCode::InfeasibleParameters, "unknown family '" + family + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Antimagic and approximately magic edge labelings of regular graphs and their products"};
    app.require_subcommand(1);

    // gen
    std::string family;
    std::vector<std::string> gen_params;
    std::string gen_out;
    std::uint64_t seed = 1;
    auto* gen = app.add_subcommand("gen", "Generate a graph family as an edge list");
    gen->add_option("family", family, "cycle | complete | path | petersen | circulant | random-regular | disjoint-union")
        ->required();
    gen->add_option("params", gen_params, "Family parameters (or graph files for disjoint-union)");
    gen->add_option("-o,--out", gen_out, "Output file (default: stdout)");
    gen->add_option("--seed", seed, "Seed for random-regular");

    // product
    std::string prod_g1;
    std::string prod_g2;
    std::string prod_out;
    std::string prod_prov;
    auto* product = app.add_subcommand("product", "Cartesian product with a provenance sidecar");
    product->add_option("g1", prod_g1)->required();
    product->add_option("g2", prod_g2)->required();
    product->add_option("-o,--out", prod_out, "Product edge list (default: stdout)");
    product->add_option("--provenance", prod_prov, "Sidecar path (default: <out>.prov)");

    // label
    std::string mode;
    std::vector<std::string> label_inputs;
    std::string label_out;
    std::string label_graph_out;
    std::size_t budget = kDefaultAntimagicSearchEdges;
    auto* label = app.add_subcommand("label", "Construct a labeling");
    label->add_option("--mode", mode, "approx-magic | antimagic-product | brute")
        ->required()
        ->check(CLI::IsMember({"approx-magic", "antimagic-product", "brute"}));
    label->add_option("graphs", label_inputs, "Graph file, or two or more factor files for antimagic-product")
        ->required();
    label->add_option("-o,--out", label_out, "Labeling file (default: stdout)");
    label->add_option("--graph-out", label_graph_out, "Also write the product graph here (sidecar: <path>.prov)");
    label->add_option("--budget", budget, "Largest edge count for exhaustive search");

    // verify
    std::string ver_graph;
    std::string ver_lab;
    std::string ver_prov;
    std::string format = "text";
    bool expect_antimagic = false;
    long long max_delta = -1;
    auto* verify_cmd = app.add_subcommand("verify", "Check a labeling");
    verify_cmd->add_option("graph", ver_graph)->required();
    verify_cmd->add_option("labeling", ver_lab)->required();
    verify_cmd->add_option("--provenance", ver_prov, "Product sidecar; enables the monotone chain check");
    verify_cmd->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
    verify_cmd->add_flag("--expect-antimagic", expect_antimagic, "Fail unless all vertex sums differ");
    verify_cmd->add_option("--max-delta", max_delta, "Fail if max sum - min sum exceeds this");

    // export-dot
    std::string dot_graph;
    std::string dot_lab;
    std::string dot_out;
    auto* dot = app.add_subcommand("export-dot", "Render a graph (and labeling) as Graphviz DOT");
    dot->add_option("graph", dot_graph)->required();
    dot->add_option("labeling", dot_lab);
    dot->add_option("-o,--out", dot_out, "Output file (default: stdout)");

    // decompose
    std::string dec_graph;
    std::string kind = "trails";
    auto* decompose = app.add_subcommand("decompose", "Print an edge decomposition, one trail per line");
    decompose->add_option("graph", dec_graph)->required();
    decompose->add_option("--kind", kind, "trails | euler | cycles | circuits")
        ->check(CLI::IsMember({"trails", "euler", "cycles", "circuits"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitParseError;
    }

    try {
        if (*gen) {
            const Graph g = generate(family, gen_params, seed);
            emit(gen_out, out, [&](std::ostream& os) { write_edge_list(os, g); });
            return kExitOk;
        }

        if (*product) {
            const ProductStructure ps = cartesian_product(load_graph(prod_g1), load_graph(prod_g2));
            emit(prod_out, out, [&](std::ostream& os) { write_edge_list(os, ps.product); });
            const std::string prov = !prod_prov.empty() ? prod_prov : (prod_out.empty() ? "" : prod_out + ".prov");
            if (!prov.empty()) emit(prov, out, [&](std::ostream& os) { write_provenance(os, ps.layout()); });
            return kExitOk;
        }

        if (*label) {
            std::ostream& status = label_out.empty() ? err : out;
            if (mode == "antimagic-product") {
                if (label_inputs.size() < 2) throw UsageError("antimagic-product needs two or more factor files");
                std::vector<Graph> factors;
                for (const auto& f : label_inputs) factors.push_back(load_graph(f));
                const ProductResult r = iterated_product(factors, budget);
                emit(label_out, out, [&](std::ostream& os) { write_labeling(os, r.structure.product, r.labeling); });
                if (!label_graph_out.empty()) {
                    emit(label_graph_out, out, [&](std::ostream& os) { write_edge_list(os, r.structure.product); });
                    emit(label_graph_out + ".prov", out,
                         [&](std::ostream& os) { write_provenance(os, r.structure.layout()); });
                }
                const auto report = verify(r.structure.product, r.labeling);
                status << "route: " << r.route << '\n'
                       << "antimagic: " << (report.is_antimagic ? "yes" : "no") << '\n';
                return report.is_antimagic && report.is_bijection ? kExitOk : kExitVerificationFailed;
            }

            if (label_inputs.size() != 1) throw UsageError("mode '" + mode + "' takes exactly one graph file");
            const Graph g = load_graph(label_inputs.front());
            if (mode == "approx-magic") {
                const ApproxMagicResult r = label_approx_magic(g);
                emit(label_out, out, [&](std::ostream& os) { write_labeling(os, g, r.labeling); });
                const auto report = verify(g, r.labeling);
                status << "method: " << r.method << '\n'
                       << "delta: " << report.delta << '\n'
                       << "bound: " << r.bound.to_string() << '\n';
                return r.bound.admits(report.delta) ? kExitOk : kExitVerificationFailed;
            }
            const auto found = brute_force_antimagic(g, budget);
            if (found.status != SearchStatus::Found) {
                status << "antimagic: no (exhaustive search)\n";
                return kExitVerificationFailed;
            }
            emit(label_out, out, [&](std::ostream& os) { write_labeling(os, g, *found.labeling); });
            status << "antimagic: yes\n";
            return kExitOk;
        }

        if (*verify_cmd) {
            const Graph g = load_graph(ver_graph);
            const Labeling lab = load_labeling(ver_lab, g);
            VerificationReport report = verify(g, lab);
            if (!ver_prov.empty()) {
                std::ifstream in(ver_prov);
                if (!in) throw Error(ErrorCode::ParseError, "cannot open provenance file '" + ver_prov + "'");
                report.chain_ok = report.is_bijection && verify_chain(g, read_provenance(in), lab);
                if (!*report.chain_ok) report.violations.emplace_back("monotone chain does not hold");
            }
            bool ok = report.is_bijection && report.chain_ok.value_or(true);
            if (expect_antimagic && !report.is_antimagic) ok = false;
            if (max_delta >= 0 && report.delta > max_delta) {
                report.violations.push_back("delta " + std::to_string(report.delta) + " exceeds " +
                                            std::to_string(max_delta));
                ok = false;
            }
            out << (format == "json" ? report_to_json(report) : report_to_text(report));
            return ok ? kExitOk : kExitVerificationFailed;
        }

        if (*dot) {
            const Graph g = load_graph(dot_graph);
            std::optional<Labeling> lab;
            if (!dot_lab.empty()) lab = load_labeling(dot_lab, g);
            emit(dot_out, out, [&](std::ostream& os) { write_dot(os, g, lab); });
            return kExitOk;
        }

        if (*decompose) {
            const Graph g = load_graph(dec_graph);
            std::vector<Trail> trails;
            if (kind == "trails") {
                trails = listing_trails(g).trails;
            } else if (kind == "euler") {
                trails.push_back(euler_circuit(g));
            } else if (kind == "cycles") {
                trails = cycle_decompose_even(g);
            } else {
                auto cd = circuit_decomposition(g);
                trails = std::move(cd.even_circuits);
                trails.insert(trails.end(), cd.odd_cycles.begin(), cd.odd_cycles.end());
            }
            for (const auto& t : trails) {
                for (std::size_t i = 0; i < t.edge_seq.size(); ++i) out << (i ? " " : "") << t.edge_seq[i];
                out << '\n';
            }
            return kExitOk;
        }
    } catch (const Error& e) {
        err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParseError;
    }
    return kExitParseError;
}

}  // namespace antimagic::cli
