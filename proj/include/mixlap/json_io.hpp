#pragma once

#include <json.hpp>

#include "mixlap/eisenstein.hpp"
#include "mixlap/exact_matrix.hpp"
#include "mixlap/minor_theorems.hpp"
#include "mixlap/mixed_graph.hpp"
#include "mixlap/structure.hpp"

namespace mixlap {

/// [a, b]; components that fit in 64 bits are emitted as JSON numbers,
/// anything larger as decimal strings.
nlohmann::json to_json(const EisensteinInt& x);

nlohmann::json to_json(const MixedGraph& g);
MixedGraph graph_from_json(const nlohmann::json& j);

/// {rows, cols, entries} with entries row-major as [a, b] pairs.
nlohmann::json to_json(const ExactMatrix& m);

nlohmann::json to_json(const CycleClassReport& report);
nlohmann::json to_json(const SPLabeling& labeling);
nlohmann::json to_json(const MinorReport& report);
nlohmann::json to_json(const TreeCountReport& report);

}  // namespace mixlap
