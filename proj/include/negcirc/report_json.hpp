#pragma once

#include "negcirc/verifier.hpp"

#include <json.hpp>

namespace negcirc {

using Json = nlohmann::ordered_json;

/// States and circuits are rendered with to_string; attractor and arc lists
/// keep their canonical order, so equal reports serialize identically.
///
/// Report fields: space, dimension, states, fixed_points, async_attractors,
/// unitary_attractors, global_graph, unitary_graph, local_graphs, verdicts,
/// witnesses, violation, counterexample.
Json to_json(const AnalysisReport& report);

/// Fields: space, mode, seed, maps, injected, counts, claims,
/// witnesses_checked, witness_failures, violation_count,
/// counterexample_count, violations, counterexamples.
Json to_json(const SweepSummary& summary);

Json to_json(const WitnessTrace& trace, const StateSpace& space);
Json to_json(const SignedDigraph& g);

/// A finding's table: one image state per source state, in rank order.
Json table_to_json(const StateSpace& space, std::span<const Rank> table);
/// Inverse of table_to_json; throws DomainError on malformed input.
NetworkMap map_from_json(const StateSpace& space, const Json& table);

} // namespace negcirc
