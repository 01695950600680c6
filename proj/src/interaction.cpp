#include "negcirc/interaction.hpp"

#include "negcirc/error.hpp"

#include <bit>

namespace negcirc {

bool canonical_less(const Arc& a, const Arc& b) noexcept
{
    if (a.from != b.from)
        return a.from < b.from;
    if (a.to != b.to)
        return a.to < b.to;
    return a.sign < b.sign;
}

std::string to_string(const Arc& arc)
{
    return "(" + std::to_string(arc.from + 1) + "," + (arc.sign > 0 ? "+" : "-") + "," + std::to_string(arc.to + 1) + ")";
}

SignedDigraph::SignedDigraph(int n) : n_(n)
{
    if (n < 1 || n > kMaxComponents)
        throw DomainError("interaction graph vertex count out of range: " + std::to_string(n));
}

void SignedDigraph::add_arc(int from, int sign, int to)
{
    if (from < 0 || from >= n_ || to < 0 || to >= n_)
        throw DomainError("arc endpoint out of range");
    if (sign != 1 && sign != -1)
        throw DomainError("arc sign must be -1 or +1");
    add_arc_unchecked(from, sign, to);
}

bool SignedDigraph::has_arc(int from, int sign, int to) const noexcept
{
    if (from < 0 || from >= n_ || to < 0 || to >= n_)
        return false;
    const VertexSet set = sign > 0 ? pos_[static_cast<std::size_t>(from)] : neg_[static_cast<std::size_t>(from)];
    return (set >> to) & 1U;
}

std::size_t SignedDigraph::arc_count() const noexcept
{
    std::size_t total = 0;
    for (int v = 0; v < n_; ++v)
        total += static_cast<std::size_t>(std::popcount(pos_[static_cast<std::size_t>(v)]) +
                                          std::popcount(neg_[static_cast<std::size_t>(v)]));
    return total;
}

std::vector<Arc> SignedDigraph::arcs() const
{
    std::vector<Arc> out;
    for (int j = 0; j < n_; ++j)
        for (int i = 0; i < n_; ++i) {
            if (has_arc(j, -1, i))
                out.push_back({j, -1, i});
            if (has_arc(j, 1, i))
                out.push_back({j, 1, i});
        }
    return out;
}

SignedDigraph& SignedDigraph::operator|=(const SignedDigraph& other)
{
    if (other.n_ != n_)
        throw DomainError("interaction graphs have different vertex counts");
    for (std::size_t v = 0; v < static_cast<std::size_t>(n_); ++v) {
        pos_[v] |= other.pos_[v];
        neg_[v] |= other.neg_[v];
    }
    return *this;
}

std::string to_string(const SignedDigraph& g)
{
    std::string out = "{";
    bool first = true;
    for (const Arc& a : g.arcs()) {
        if (!first)
            out += ',';
        first = false;
        out += to_string(a);
    }
    return out + "}";
}

SignedDigraph graph_union(std::span<const SignedDigraph> graphs)
{
    if (graphs.empty())
        throw DomainError("union of no interaction graphs");
    SignedDigraph out = graphs.front();
    for (const SignedDigraph& g : graphs.subspan(1))
        out |= g;
    return out;
}

bool is_subgraph(const SignedDigraph& a, const SignedDigraph& b)
{
    if (a.vertex_count() != b.vertex_count())
        throw DomainError("interaction graphs have different vertex counts");
    for (int v = 0; v < a.vertex_count(); ++v)
        if ((a.positive_targets(v) & ~b.positive_targets(v)) || (a.negative_targets(v) & ~b.negative_targets(v)))
            return false;
    return true;
}

SignedDigraph global_ig(const NetworkMap& f)
{
    const StateSpace& space = f.space();
    const int n = space.dimension();
    SignedDigraph g(n);
    for (Rank x = 0; x < space.size(); ++x)
        for (int j = 0; j < n; ++j) {
            if (space.coord(x, j) == space.interval(j).hi)
                continue;
            const Rank y = x + space.stride(j);
            for (int i = 0; i < n; ++i) {
                const int s = sign_of(f.component(y, i) - f.component(x, i));
                if (s != 0)
                    g.add_arc_unchecked(j, s, i);
            }
        }
    return g;
}

SignedDigraph unitary_ig(const NetworkMap& f)
{
    const StateSpace& space = f.space();
    const int n = space.dimension();
    SignedDigraph g(n);
    for (Rank x = 0; x < space.size(); ++x)
        for (int j = 0; j < n; ++j) {
            if (space.coord(x, j) == space.interval(j).hi)
                continue;
            const Rank y = x + space.stride(j);
            for (int i = 0; i < n; ++i) {
                const int xi = space.coord(x, i);
                const int before = sign_of(f.component(x, i) - xi);
                const int after = sign_of(f.component(y, i) - xi);
                if (i == j) {
                    if (before <= 0 && after > 0)
                        g.add_arc_unchecked(j, 1, i);
                    if (before > 0 && after <= 0)
                        g.add_arc_unchecked(j, -1, i);
                } else if (before != after) {
                    g.add_arc_unchecked(j, after > before ? 1 : -1, i);
                }
            }
        }
    return g;
}

SignedDigraph local_ig(const NetworkMap& f, Rank x)
{
    const StateSpace& space = f.space();
    if (!space.contains(x))
        throw DomainError("rank " + std::to_string(x) + " is not a state");
    const int n = space.dimension();
    SignedDigraph g(n);
    for (int j = 0; j < n; ++j) {
        const int xj = space.coord(x, j);
        const bool up = xj < space.interval(j).hi;
        const bool down = xj > space.interval(j).lo;
        for (int i = 0; i < n; ++i) {
            const int here = f.component(x, i);
            if (up) {
                const int s = sign_of(f.component(x + space.stride(j), i) - here);
                if (s != 0)
                    g.add_arc_unchecked(j, s, i);
            }
            if (down) {
                const int s = sign_of(here - f.component(x - space.stride(j), i));
                if (s != 0)
                    g.add_arc_unchecked(j, s, i);
            }
        }
    }
    return g;
}

SignedDigraph local_ig(const NetworkMap& f, const State& x) { return local_ig(f, f.space().rank(x)); }

SignedDigraph dynamic_local_ig(const NetworkMap& f, Rank x)
{
    if (!f.space().contains(x))
        throw DomainError("rank " + std::to_string(x) + " is not a state");
    const int n = f.dimension();
    SignedDigraph g(n);
    for (int j = 0; j < n; ++j) {
        const int dj = f.delta(x, j);
        if (dj == 0)
            continue;
        const Rank y = f.async_update(x, j);
        for (int i = 0; i < n; ++i) {
            const int after = f.delta(y, i);
            if (f.delta(x, i) != after && after != 0)
                g.add_arc_unchecked(j, dj * after, i);
        }
    }
    return g;
}

SignedDigraph dynamic_local_ig(const NetworkMap& f, const State& x) { return dynamic_local_ig(f, f.space().rank(x)); }

} // namespace negcirc
