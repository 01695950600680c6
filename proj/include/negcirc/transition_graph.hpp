#pragma once

#include "negcirc/network_map.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace negcirc {

enum class Flavor {
    /// x -> F_i(x) for every unstable component i.
    Asynchronous,
    /// The asynchronous graph of the unitary map (one-unit moves).
    Unitary,
    /// x -> F(x) whenever F(x) != x.
    Synchronous,
};

std::string_view to_string(Flavor flavor);
/// Accepts "async", "unitary", "sync" and the full enumerator names.
std::optional<Flavor> parse_flavor(std::string_view text);

/// A state transition graph on X in forward-star form. Asynchronous and
/// unitary successors are listed in increasing component order.
class TransitionGraph
{
public:
    TransitionGraph(const StateSpace& space, Flavor flavor, std::vector<std::size_t> offsets, std::vector<Rank> targets);

    const StateSpace& space() const noexcept { return space_; }
    Flavor flavor() const noexcept { return flavor_; }
    Rank vertex_count() const noexcept { return space_.size(); }
    std::size_t arc_count() const noexcept { return targets_.size(); }

    std::span<const Rank> successors(Rank x) const
    {
        return {targets_.data() + offsets_[x], offsets_[x + 1] - offsets_[x]};
    }
    std::size_t out_degree(Rank x) const { return offsets_[x + 1] - offsets_[x]; }
    bool has_arc(Rank from, Rank to) const;

    friend bool operator==(const TransitionGraph&, const TransitionGraph&) = default;

private:
    StateSpace space_;
    Flavor flavor_;
    std::vector<std::size_t> offsets_;
    std::vector<Rank> targets_;
};

TransitionGraph build_stg(const NetworkMap& f, Flavor flavor);

/// True iff no arc leaves `domain`. Throws DomainError for an empty domain or
/// a rank outside X.
bool is_trap_domain(const TransitionGraph& g, std::span<const Rank> domain);
bool is_trap_domain(const TransitionGraph& g, std::span<const State> domain);

/// Minimum-length path from `from` to `to` (both included), or nullopt.
/// Breadth-first with successors expanded in increasing rank, so ties go to the
/// smallest successor rank. A length-zero path [from] is returned when from == to.
std::optional<std::vector<Rank>> shortest_path(const TransitionGraph& g, Rank from, Rank to);
std::optional<std::vector<State>> shortest_path(const TransitionGraph& g, const State& from, const State& to);

bool path_exists(const TransitionGraph& g, Rank from, Rank to);
bool path_exists(const TransitionGraph& g, const State& from, const State& to);

/// True iff the graph contains a directed cycle (self-arcs never occur).
bool has_directed_cycle(const TransitionGraph& g);

} // namespace negcirc
