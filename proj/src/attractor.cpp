#include "negcirc/attractor.hpp"

#include <algorithm>

namespace negcirc {

SccPartition strongly_connected_components(const TransitionGraph& g)
{
    const Rank size = g.vertex_count();
    constexpr std::uint32_t unvisited = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> index(size, unvisited);
    std::vector<std::uint32_t> low(size, 0);
    std::vector<char> on_stack(size, 0);
    std::vector<Rank> stack;
    std::vector<std::uint32_t> raw(size, unvisited);
    std::uint32_t next_index = 0;
    std::uint32_t raw_count = 0;

    struct Frame
    {
        Rank v;
        std::size_t edge;
    };
    std::vector<Frame> call;

    for (Rank root = 0; root < size; ++root) {
        if (index[root] != unvisited)
            continue;
        call.push_back({root, 0});
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            Frame& fr = call.back();
            auto succ = g.successors(fr.v);
            if (fr.edge < succ.size()) {
                const Rank w = succ[fr.edge++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[fr.v] = std::min(low[fr.v], index[w]);
                }
                continue;
            }
            const Rank v = fr.v;
            call.pop_back();
            if (!call.empty())
                low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] == index[v]) {
                Rank w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    raw[w] = raw_count;
                } while (w != v);
                ++raw_count;
            }
        }
    }

    SccPartition out;
    out.component.assign(size, 0);
    std::vector<std::uint32_t> relabel(raw_count, unvisited);
    for (Rank x = 0; x < size; ++x) {
        std::uint32_t& id = relabel[raw[x]];
        if (id == unvisited)
            id = out.count++;
        out.component[x] = id;
    }
    return out;
}

bool Attractor::contains(Rank x) const { return std::binary_search(states.begin(), states.end(), x); }

AttractorSet attractors(const TransitionGraph& g)
{
    const SccPartition scc = strongly_connected_components(g);
    std::vector<char> terminal(scc.count, 1);
    for (Rank x = 0; x < g.vertex_count(); ++x)
        for (Rank y : g.successors(x))
            if (scc.component[x] != scc.component[y])
                terminal[scc.component[x]] = 0;

    std::vector<std::uint32_t> slot(scc.count, static_cast<std::uint32_t>(-1));
    AttractorSet out;
    for (Rank x = 0; x < g.vertex_count(); ++x) {
        const std::uint32_t c = scc.component[x];
        if (!terminal[c])
            continue;
        if (slot[c] == static_cast<std::uint32_t>(-1)) {
            slot[c] = static_cast<std::uint32_t>(out.size());
            out.emplace_back();
        }
        out[slot[c]].states.push_back(x);
    }
    return out;
}

std::size_t count_cyclic(const AttractorSet& set)
{
    return static_cast<std::size_t>(std::count_if(set.begin(), set.end(), [](const Attractor& a) { return a.cyclic(); }));
}

std::vector<Rank> fixed_point_ranks(const NetworkMap& f)
{
    std::vector<Rank> out;
    for (Rank x = 0; x < f.size(); ++x)
        if (f.is_fixed(x))
            out.push_back(x);
    return out;
}

std::vector<State> fixed_points(const NetworkMap& f)
{
    std::vector<State> out;
    for (Rank x : fixed_point_ranks(f))
        out.push_back(f.space().unrank(x));
    return out;
}

} // namespace negcirc
