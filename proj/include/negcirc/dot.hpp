#pragma once

#include "negcirc/interaction.hpp"
#include "negcirc/transition_graph.hpp"

#include <string>

namespace negcirc {

/// Graphviz text. Vertices are listed in rank order and arcs in successor
/// order, so the output is byte-identical for equal graphs.
std::string export_dot(const TransitionGraph& g);

/// Positive arcs are labelled "+"; negative arcs "-" and drawn dashed.
std::string export_dot(const SignedDigraph& g);

} // namespace negcirc
