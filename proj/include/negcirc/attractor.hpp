#pragma once

#include "negcirc/transition_graph.hpp"

#include <vector>

namespace negcirc {

/// Partition of X into strongly connected components. Components are numbered
/// in order of their smallest member rank.
struct SccPartition
{
    std::vector<std::uint32_t> component;
    std::uint32_t count = 0;
};

SccPartition strongly_connected_components(const TransitionGraph& g);

/// A minimal trap domain; `states` is sorted by rank.
struct Attractor
{
    std::vector<Rank> states;

    bool cyclic() const noexcept { return states.size() >= 2; }
    bool contains(Rank x) const;

    friend bool operator==(const Attractor&, const Attractor&) = default;
};

/// Attractors ordered by smallest member rank.
using AttractorSet = std::vector<Attractor>;

/// The attractors of g, i.e. its terminal strongly connected components.
///
/// A terminal SCC C is a trap domain, and any trap domain D inside C is all of
/// C because every member of C reaches every other member along arcs that
/// cannot leave D. Conversely every trap domain contains a terminal SCC (follow
/// the condensation downward), so a minimal one is a terminal SCC.
AttractorSet attractors(const TransitionGraph& g);

std::size_t count_cyclic(const AttractorSet& set);

/// All x with F(x) = x, in rank order.
std::vector<Rank> fixed_point_ranks(const NetworkMap& f);
std::vector<State> fixed_points(const NetworkMap& f);

} // namespace negcirc
