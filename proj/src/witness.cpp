#include "negcirc/witness.hpp"

#include "negcirc/error.hpp"

#include <algorithm>
#include <bit>

namespace negcirc {

int SupportedPath::sign() const noexcept
{
    int s = 1;
    for (const Arc& a : arcs)
        s *= a.sign;
    return s;
}

namespace {

/// The component whose update turns x into y, or -1 when (x,y) is not an
/// arc of the asynchronous graph.
int moving_component(const NetworkMap& f, Rank x, Rank y)
{
    if (x == y)
        return -1;
    const StateSpace& space = f.space();
    int moved = -1;
    for (int i = 0; i < space.dimension(); ++i)
        if (space.coord(x, i) != space.coord(y, i)) {
            if (moved >= 0)
                return -1;
            moved = i;
        }
    return f.async_update(x, moved) == y ? moved : -1;
}

} // namespace

SupportedPath signed_path_along(const NetworkMap& f, std::span<const Rank> path, int target)
{
    if (path.size() < 2)
        throw ContractError("signed_path_along needs a path of length at least one");
    if (target < 0 || target >= f.dimension())
        throw ContractError("target component out of range");
    const std::size_t r = path.size() - 1;
    std::vector<int> moved(r);
    for (std::size_t q = 0; q < r; ++q) {
        if (!f.space().contains(path[q]) || !f.space().contains(path[q + 1]))
            throw ContractError("path contains a non-state");
        moved[q] = moving_component(f, path[q], path[q + 1]);
        if (moved[q] < 0)
            throw ContractError("consecutive path states are not an asynchronous transition");
    }
    {
        std::vector<Rank> sorted(path.begin(), path.end());
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ContractError("path is not elementary");
    }
    const int final_direction = f.delta(path[r], target);
    if (final_direction == 0)
        throw ContractError("target component is stable at the end of the path");
    for (std::size_t p = 0; p < r; ++p)
        if (f.delta(path[p], target) == final_direction)
            throw ContractError("target direction is not new at the end of the path");

    SupportedPath out;
    out.target = target;
    int goal = target;
    std::size_t end = r;
    while (true) {
        const int k = moved[end - 1];
        const Rank from = path[end - 1];
        out.arcs.push_back({k, f.delta(from, k) * f.delta(path[end], goal), goal});
        out.support.push_back(from);
        const int direction = f.delta(from, k);
        std::size_t p = 0;
        while (f.delta(path[p], k) != direction)
            ++p;
        if (p == 0) {
            out.source = k;
            break;
        }
        goal = k;
        end = p;
    }
    std::reverse(out.arcs.begin(), out.arcs.end());
    std::reverse(out.support.begin(), out.support.end());
    return out;
}

namespace {

WitnessTrace close_circuit(const NetworkMap& f, std::span<const Rank> domain, Rank start, int component)
{
    const int direction = f.delta(start, component);
    const TransitionGraph g = build_stg(f, Flavor::Asynchronous);
    const Rank next = f.async_update(start, component);
    auto back = shortest_path(g, next, start);
    if (!back)
        throw ContractError("no path back to the start state inside the attractor");

    std::vector<Rank> walk{start};
    walk.insert(walk.end(), back->begin(), back->end());
    std::size_t p = 1;
    while (p + 1 < walk.size() && f.delta(walk[p], component) != -direction)
        ++p;
    if (p + 1 >= walk.size())
        throw ContractError("the unstable component never reverses along the return path");
    for (std::size_t q = 0; q <= p; ++q)
        if (!std::binary_search(domain.begin(), domain.end(), walk[q]))
            throw ContractError("return path leaves the attractor");

    SupportedPath sp = signed_path_along(f, std::span<const Rank>(walk.data(), p + 1), component);
    if (sp.source != component)
        throw ContractError("signed path does not start at the single unstable component");

    WitnessTrace w;
    w.circuit.arcs = std::move(sp.arcs);
    w.support = std::move(sp.support);
    if (!w.circuit.is_closed() || w.circuit.sign() >= 0)
        throw ContractError("extracted circuit is not a negative circuit");
    return w;
}

} // namespace

WitnessTrace extract_negative_circuit(const NetworkMap& f, std::span<const Rank> attractor)
{
    std::vector<Rank> domain(attractor.begin(), attractor.end());
    std::sort(domain.begin(), domain.end());
    {
        const AttractorSet all = attractors(build_stg(f, Flavor::Asynchronous));
        const bool known = std::any_of(all.begin(), all.end(), [&](const Attractor& a) { return a.states == domain; });
        if (!known || domain.size() < 2)
            throw DomainError("state set is not a cyclic attractor of the asynchronous graph");
    }

    NetworkMap current = f;
    std::vector<int> chain;
    while (true) {
        for (Rank x : domain) {
            const ComponentSet unstable = current.unstable(x);
            if (std::popcount(unstable) == 1) {
                WitnessTrace w = close_circuit(current, domain, x, std::countr_zero(unstable));
                w.reduction_chain = std::move(chain);
                return w;
            }
        }
        const ComponentSet unstable = current.unstable(domain.front());
        if (std::popcount(unstable) < 2 || static_cast<int>(chain.size()) >= f.dimension())
            throw ContractError("cyclic attractor state without two unstable components");
        const int c = std::countr_zero(unstable);
        NetworkMap frozen = freeze_component(current, c);

        const AttractorSet inner = attractors(build_stg(frozen, Flavor::Asynchronous));
        const Attractor* next = nullptr;
        for (const Attractor& b : inner)
            if (std::includes(domain.begin(), domain.end(), b.states.begin(), b.states.end())) {
                next = &b;
                break;
            }
        if (!next || !next->cyclic() || next->states.size() >= domain.size())
            throw ContractError("freezing did not yield a strictly smaller cyclic attractor");
        domain = next->states;
        chain.push_back(c);
        current = std::move(frozen);
    }
}

WitnessTrace extract_negative_circuit(const NetworkMap& f, const Attractor& attractor)
{
    return extract_negative_circuit(f, attractor.states);
}

bool witness_is_sound(const NetworkMap& f, std::span<const Rank> attractor, const WitnessTrace& w)
{
    if (!w.circuit.is_closed() || w.circuit.sign() >= 0 || w.support.size() != w.circuit.arcs.size())
        return false;
    for (std::size_t q = 0; q < w.support.size(); ++q) {
        if (std::find(attractor.begin(), attractor.end(), w.support[q]) == attractor.end())
            return false;
        if (!dynamic_local_ig(f, w.support[q]).has_arc(w.circuit.arcs[q]))
            return false;
    }
    return true;
}

} // namespace negcirc
