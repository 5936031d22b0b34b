#include "mixlap/cli_commands.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "mixlap/exact_linalg.hpp"
#include "mixlap/json_io.hpp"
#include "mixlap/matrix_builder.hpp"
#include "mixlap/minor_theorems.hpp"
#include "mixlap/structure.hpp"

namespace mixlap {

std::vector<int> parse_vertex_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        const int value = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad vertex list entry: " + item);
        out.push_back(value);
    }
    if (out.empty()) throw std::invalid_argument("empty vertex list");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int cmd_matrices(const MixedGraph& g, const std::vector<std::string>& which, bool json,
                 std::ostream& out) {
    bool all_ok = true;
    nlohmann::json report = nlohmann::json::object();
    if (json) report["graph"] = to_json(g);
    const ExactMatrix s = build_S(g);
    const ExactMatrix t = build_T(g);
    const ExactMatrix l = build_L(g);
    const ExactMatrix q = build_Q(g);

    for (const std::string& name : which) {
        ExactMatrix m;
        if (name == "N") m = build_N(g);
        else if (name == "D") m = build_D(g);
        else if (name == "L") m = l;
        else if (name == "Q") m = q;
        else if (name == "S") m = s;
        else if (name == "T") m = t;
        else throw std::invalid_argument("unknown matrix \"" + name + "\"");

        if (json) {
            report[name] = to_json(m);
        } else {
            out << name << ":\n" << m.to_text();
            out << "complex:\n" << m.to_complex_text() << "\n";
        }
    }

    const bool s_ok = multiply_conj_transpose(s, s) == l;
    const bool t_ok = multiply_conj_transpose(t, t) == q;
    all_ok = s_ok && t_ok;
    if (json) {
        report["factorization"] = {{"incidence_product_is_l", s_ok},
                                   {"quasi_incidence_product_is_q", t_ok}};
        out << report.dump(2) << "\n";
    } else {
        out << "S*conj(S)^T == L: " << (s_ok ? "yes" : "NO") << "\n";
        out << "T*conj(T)^T == Q: " << (t_ok ? "yes" : "NO") << "\n";
    }
    return all_ok ? 0 : 1;
}

int cmd_classify(const MixedGraph& g, bool json, std::size_t cycle_budget,
                 std::ostream& out) {
    const std::vector<MixedWalk> cycles = enumerate_simple_cycles(g, cycle_budget);
    const auto sp = sp_labeling(g);
    const auto quasi = quasi_null_labeling(g);
    const bool connected = g.is_connected();

    const MixedWalk* sp_witness = nullptr;
    const MixedWalk* quasi_witness = nullptr;
    std::vector<CycleClassReport> reports;
    reports.reserve(cycles.size());
    for (const MixedWalk& cycle : cycles) {
        reports.push_back(classify_cycle(cycle, g));
        if (!sp_witness && reports.back().phi != PhiClass::phi4) sp_witness = &cycle;
        if (!quasi_witness && reports.back().psi != PsiClass::psi4) quasi_witness = &cycle;
    }

    if (json) {
        nlohmann::json j;
        j["graph"] = to_json(g);
        nlohmann::json cycle_list = nlohmann::json::array();
        for (std::size_t i = 0; i < cycles.size(); ++i) {
            nlohmann::json item = to_json(reports[i]);
            item["vertices"] = cycles[i].vertices;
            cycle_list.push_back(item);
        }
        j["cycles"] = cycle_list;
        j["connected"] = connected;
        j["sp"] = sp.has_value();
        if (sp) j["sp_labeling"] = to_json(*sp);
        else if (sp_witness) j["sp_witness_cycle"] = sp_witness->vertices;
        j["quasi_singular"] = quasi.has_value();
        if (quasi) j["quasi_labeling"] = to_json(*quasi);
        else if (quasi_witness) j["quasi_witness_cycle"] = quasi_witness->vertices;
        out << j.dump(2) << "\n";
        return 0;
    }

    out << "cycles: " << cycles.size() << "\n";
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        out << "  ";
        for (std::size_t k = 0; k < cycles[i].vertices.size(); ++k)
            out << (k ? "-" : "") << cycles[i].vertices[k];
        out << "  a=" << reports[i].a << " b=" << reports[i].b << " c=" << reports[i].c
            << "  " << to_string(reports[i].phi) << " " << to_string(reports[i].psi)
            << "\n";
    }
    if (!connected) out << "note: graph is disconnected\n";
    out << "sp: " << (sp ? "yes" : "no");
    if (sp) {
        out << "  labels:";
        for (std::size_t v = 0; v < sp->labels.size(); ++v)
            out << " " << v + 1 << ":" << sp->labels[v];
    } else if (sp_witness) {
        out << "  witness cycle:";
        for (int v : sp_witness->vertices) out << " " << v;
    }
    out << "\n";
    out << "quasi-singular: " << (quasi ? "yes" : "no");
    if (quasi) {
        out << "  labels:";
        for (std::size_t v = 0; v < quasi->labels.size(); ++v)
            out << " " << v + 1 << ":" << quasi->labels[v];
    } else if (quasi_witness) {
        out << "  witness cycle:";
        for (int v : quasi_witness->vertices) out << " " << v;
    }
    out << "\n";
    return 0;
}

int cmd_minor(const MixedGraph& g, const std::vector<int>& v1, const std::vector<int>& v2,
              bool json, std::ostream& out) {
    const MinorReport rl = offdiag_minor_L(g, v1, v2);
    const MinorReport rq = offdiag_minor_Q(g, v1, v2);
    if (json) {
        nlohmann::json j;
        j["laplacian"] = to_json(rl);
        j["quasi_laplacian"] = to_json(rq);
        out << j.dump(2) << "\n";
    } else {
        auto render = [&](const char* name, const MinorReport& r) {
            out << name << ": algebraic " << r.algebraic.to_string() << " (norm "
                << r.algebraic.norm().get_str() << "), combinatorial "
                << r.combinatorial.to_string() << " (norm "
                << r.combinatorial.norm().get_str() << ") -> "
                << (r.exact_match ? "exact match" : r.norm_match ? "norm match" : "MISMATCH")
                << "\n";
        };
        render("L minor", rl);
        render("Q minor", rq);
    }
    return rl.exact_match && rq.exact_match ? 0 : 1;
}

int cmd_treecount(const MixedGraph& g, bool json, std::ostream& out) {
    const Int kirchhoff = spanning_trees_kirchhoff(g);
    const TreeCountReport rl = tree_count_via_L(g);
    const TreeCountReport rq = tree_count_via_Q(g);
    if (json) {
        nlohmann::json j;
        j["kirchhoff"] = kirchhoff.fits_slong_p() ? nlohmann::json(kirchhoff.get_si())
                                                  : nlohmann::json(kirchhoff.get_str());
        j["via_l"] = to_json(rl);
        j["via_q"] = to_json(rq);
        out << j.dump(2) << "\n";
    } else {
        out << "kirchhoff spanning trees: " << kirchhoff.get_str() << "\n";
        auto render = [&](const char* name, const TreeCountReport& r) {
            out << name << ": ";
            if (!r.applicable) {
                out << "not applicable";
                if (r.witness)
                    out << " (cofactor (" << r.witness->row1 << "," << r.witness->col1
                        << ") norm " << r.witness->norm1.get_str() << " vs ("
                        << r.witness->row2 << "," << r.witness->col2 << ") norm "
                        << r.witness->norm2.get_str() << ")";
                out << "\n";
            } else {
                out << "count " << r.tree_count.get_str()
                    << (r.matches ? " (matches kirchhoff)" : " (INCONSISTENT)") << "\n";
            }
        };
        render("via L", rl);
        render("via Q", rq);
        if (!rl.connected) out << "note: graph is disconnected\n";
    }
    const bool ok = (!rl.applicable || rl.matches) && (!rq.applicable || rq.matches);
    return ok ? 0 : 1;
}

int cmd_verify(const SweepSpec& spec, bool json, unsigned workers, std::ostream& out) {
    const SweepReport report = run_sweep(spec, workers);
    if (json)
        out << report.to_json().dump(2) << "\n";
    else
        out << report.summary_text();
    return report.all_passed() ? 0 : 1;
}

}  // namespace mixlap
