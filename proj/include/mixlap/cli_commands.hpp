#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mixlap/mixed_graph.hpp"
#include "mixlap/verify.hpp"

namespace mixlap {

/// Command implementations behind the CLI. Each returns the process exit
/// code contribution: 0 when every check it ran passed, 1 otherwise.
/// Usage and parse errors are reported by throwing; the CLI maps them to
/// exit code 2.

int cmd_matrices(const MixedGraph& g, const std::vector<std::string>& which,
                 bool json, std::ostream& out);

int cmd_classify(const MixedGraph& g, bool json, std::size_t cycle_budget,
                 std::ostream& out);

int cmd_minor(const MixedGraph& g, const std::vector<int>& v1,
              const std::vector<int>& v2, bool json, std::ostream& out);

int cmd_treecount(const MixedGraph& g, bool json, std::ostream& out);

int cmd_verify(const SweepSpec& spec, bool json, unsigned workers, std::ostream& out);

/// Comma-separated 1-based vertex list ("2,3,4").
std::vector<int> parse_vertex_list(const std::string& text);

}  // namespace mixlap
