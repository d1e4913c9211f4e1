#pragma once

#include <string>

#include "artinacyl/classify.hpp"
#include "artinacyl/graph.hpp"

namespace artinacyl {

/// "A3 x I2(5)" style product name, "" for the trivial group.
std::string finite_type_label(const std::vector<FiniteType>& types);

std::string classification_to_json(const ClassificationReport& report);

/// Join decomposition, derived graphs, classification, verdict with
/// justifications, and the center report when its hypotheses hold.
std::string analysis_to_json(const DefiningGraph& g);

/// Complement and Coxeter graphs as edge lists by name.
std::string derived_to_json(const DefiningGraph& g);

}  // namespace artinacyl
