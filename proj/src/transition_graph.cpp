#include "negcirc/transition_graph.hpp"

#include "negcirc/attractor.hpp"
#include "negcirc/error.hpp"

#include <algorithm>
#include <deque>

namespace negcirc {

std::string_view to_string(Flavor flavor)
{
    switch (flavor) {
    case Flavor::Asynchronous: return "async";
    case Flavor::Unitary: return "unitary";
    case Flavor::Synchronous: return "sync";
    }
    return "?";
}

std::optional<Flavor> parse_flavor(std::string_view text)
{
    if (text == "async" || text == "asynchronous")
        return Flavor::Asynchronous;
    if (text == "unitary")
        return Flavor::Unitary;
    if (text == "sync" || text == "synchronous")
        return Flavor::Synchronous;
    return std::nullopt;
}

TransitionGraph::TransitionGraph(const StateSpace& space, Flavor flavor, std::vector<std::size_t> offsets,
                                 std::vector<Rank> targets)
    : space_(space), flavor_(flavor), offsets_(std::move(offsets)), targets_(std::move(targets))
{
    if (offsets_.size() != static_cast<std::size_t>(space_.size()) + 1 || offsets_.back() != targets_.size())
        throw ContractError("malformed forward-star arrays");
}

bool TransitionGraph::has_arc(Rank from, Rank to) const
{
    auto succ = successors(from);
    return std::find(succ.begin(), succ.end(), to) != succ.end();
}

namespace {

TransitionGraph build_async(const NetworkMap& f, Flavor flavor)
{
    const Rank size = f.size();
    std::vector<std::size_t> offsets(static_cast<std::size_t>(size) + 1);
    std::vector<Rank> targets;
    targets.reserve(size);
    for (Rank x = 0; x < size; ++x) {
        offsets[x] = targets.size();
        for (int i = 0; i < f.dimension(); ++i)
            if (f.delta(x, i) != 0)
                targets.push_back(f.async_update(x, i));
    }
    offsets[size] = targets.size();
    return TransitionGraph(f.space(), flavor, std::move(offsets), std::move(targets));
}

} // namespace

TransitionGraph build_stg(const NetworkMap& f, Flavor flavor)
{
    switch (flavor) {
    case Flavor::Asynchronous:
        return build_async(f, flavor);
    case Flavor::Unitary:
        return build_async(unitary_map(f), flavor);
    case Flavor::Synchronous: {
        const Rank size = f.size();
        std::vector<std::size_t> offsets(static_cast<std::size_t>(size) + 1);
        std::vector<Rank> targets;
        for (Rank x = 0; x < size; ++x) {
            offsets[x] = targets.size();
            if (f.image(x) != x)
                targets.push_back(f.image(x));
        }
        offsets[size] = targets.size();
        return TransitionGraph(f.space(), flavor, std::move(offsets), std::move(targets));
    }
    }
    throw ContractError("unknown flavor");
}

bool is_trap_domain(const TransitionGraph& g, std::span<const Rank> domain)
{
    if (domain.empty())
        throw DomainError("a trap domain must be non-empty");
    std::vector<char> member(g.vertex_count(), 0);
    for (Rank x : domain) {
        if (!g.space().contains(x))
            throw DomainError("rank " + std::to_string(x) + " is not a state");
        member[x] = 1;
    }
    for (Rank x : domain)
        for (Rank y : g.successors(x))
            if (!member[y])
                return false;
    return true;
}

bool is_trap_domain(const TransitionGraph& g, std::span<const State> domain)
{
    std::vector<Rank> ranks;
    ranks.reserve(domain.size());
    for (const State& x : domain)
        ranks.push_back(g.space().rank(x));
    return is_trap_domain(g, ranks);
}

std::optional<std::vector<Rank>> shortest_path(const TransitionGraph& g, Rank from, Rank to)
{
    if (!g.space().contains(from) || !g.space().contains(to))
        throw DomainError("path endpoint is not a state");
    if (from == to)
        return std::vector<Rank>{from};
    constexpr Rank unseen = static_cast<Rank>(-1);
    std::vector<Rank> parent(g.vertex_count(), unseen);
    std::deque<Rank> queue{from};
    parent[from] = from;
    std::vector<Rank> succ;
    while (!queue.empty()) {
        const Rank x = queue.front();
        queue.pop_front();
        auto s = g.successors(x);
        succ.assign(s.begin(), s.end());
        std::sort(succ.begin(), succ.end());
        for (Rank y : succ) {
            if (parent[y] != unseen)
                continue;
            parent[y] = x;
            if (y == to) {
                std::vector<Rank> path{to};
                while (path.back() != from)
                    path.push_back(parent[path.back()]);
                std::reverse(path.begin(), path.end());
                return path;
            }
            queue.push_back(y);
        }
    }
    return std::nullopt;
}

std::optional<std::vector<State>> shortest_path(const TransitionGraph& g, const State& from, const State& to)
{
    auto ranks = shortest_path(g, g.space().rank(from), g.space().rank(to));
    if (!ranks)
        return std::nullopt;
    std::vector<State> out;
    out.reserve(ranks->size());
    for (Rank r : *ranks)
        out.push_back(g.space().unrank(r));
    return out;
}

bool path_exists(const TransitionGraph& g, Rank from, Rank to) { return shortest_path(g, from, to).has_value(); }

bool path_exists(const TransitionGraph& g, const State& from, const State& to)
{
    return path_exists(g, g.space().rank(from), g.space().rank(to));
}

bool has_directed_cycle(const TransitionGraph& g)
{
    const SccPartition scc = strongly_connected_components(g);
    for (Rank x = 0; x < g.vertex_count(); ++x)
        for (Rank y : g.successors(x))
            if (scc.component[x] == scc.component[y])
                return true;
    return false;
}

} // namespace negcirc
