#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mixlap/cli_commands.hpp"
#include "mixlap/json_io.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

mixlap::MixedGraph load_graph(const std::string& path) {
    return mixlap::MixedGraph::parse(read_file(path));
}

// Writes to --output when given, standard output otherwise.
struct OutputTarget {
    std::string path;
    std::ostringstream buffer;

    std::ostream& stream() { return buffer; }
    void flush() {
        if (path.empty()) {
            std::cout << buffer.str();
        } else {
            std::ofstream out(path);
            if (!out) throw std::runtime_error("cannot write " + path);
            out << buffer.str();
        }
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hermitian (quasi-)Laplacian toolkit for mixed graphs"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string format = "text";
    std::string output_path;
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--output", output_path, "write the report to a file");

    std::string graph_path;
    std::string which = "N,D,L,Q,S,T";
    auto* matrices = app.add_subcommand("matrices", "print exact matrices of a graph");
    matrices->add_option("file", graph_path, "graph file")->required();
    matrices->add_option("--which", which, "comma-separated subset of N,D,L,Q,S,T");

    std::size_t cycle_budget = 1000;
    auto* classify = app.add_subcommand("classify", "cycle classes and null-structure verdicts");
    classify->add_option("file", graph_path, "graph file")->required();
    classify->add_option("--budget", cycle_budget, "maximum number of simple cycles");

    std::string v1_text, v2_text;
    auto* minor = app.add_subcommand("minor", "algebraic vs combinatorial minors");
    minor->add_option("file", graph_path, "graph file")->required();
    minor->add_option("--v1", v1_text, "row vertex set, e.g. 2,3,4")->required();
    minor->add_option("--v2", v2_text, "column vertex set (defaults to --v1)");

    auto* treecount = app.add_subcommand("treecount", "spanning-tree counts via cofactors");
    treecount->add_option("file", graph_path, "graph file")->required();

    std::string spec_path;
    std::uint64_t budget_override = 0, seed_override = 0;
    unsigned workers = 0;
    auto* verify = app.add_subcommand("verify", "run a checking sweep from a spec file");
    verify->add_option("spec", spec_path, "sweep spec file (JSON or key-value)")->required();
    verify->add_option("--budget", budget_override, "override the orientation budget");
    verify->add_option("--seed", seed_override, "override the sampling seed");
    verify->add_option("--workers", workers, "worker threads (0 = hardware)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    OutputTarget target{output_path, {}};
    const bool json = format == "json";
    int code = 0;
    try {
        if (matrices->parsed()) {
            std::vector<std::string> names;
            std::stringstream in(which);
            std::string item;
            while (std::getline(in, item, ','))
                if (!item.empty()) names.push_back(item);
            code = mixlap::cmd_matrices(load_graph(graph_path), names, json, target.stream());
        } else if (classify->parsed()) {
            code = mixlap::cmd_classify(load_graph(graph_path), json, cycle_budget,
                                        target.stream());
        } else if (minor->parsed()) {
            const auto v1 = mixlap::parse_vertex_list(v1_text);
            const auto v2 = v2_text.empty() ? v1 : mixlap::parse_vertex_list(v2_text);
            code = mixlap::cmd_minor(load_graph(graph_path), v1, v2, json, target.stream());
        } else if (treecount->parsed()) {
            code = mixlap::cmd_treecount(load_graph(graph_path), json, target.stream());
        } else if (verify->parsed()) {
            mixlap::SweepSpec spec = mixlap::SweepSpec::parse(read_file(spec_path));
            if (verify->count("--seed")) spec.seed = seed_override;
            if (verify->count("--budget")) spec.budget = budget_override;
            code = mixlap::cmd_verify(spec, json, workers, target.stream());
        }
        target.flush();
    } catch (const mixlap::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const mixlap::config_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const mixlap::budget_error& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return code;
}
