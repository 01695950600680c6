#include "negcirc/circuits.hpp"

#include "negcirc/error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>

namespace negcirc {

namespace {

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

template <class F>
void for_each_member(VertexSet set, F&& f)
{
    while (set) {
        f(std::countr_zero(set));
        set &= set - 1;
    }
}

/// Transitive closure of the parity lift over 2n <= 64 lifted vertices;
/// lifted vertex 2v is (v,+1), 2v+1 is (v,-1).
std::array<std::uint64_t, 2 * kMaxComponents> lift_closure(const SignedDigraph& g)
{
    const int n = g.vertex_count();
    std::array<std::uint64_t, 2 * kMaxComponents> reach{};
    for (int j = 0; j < n; ++j) {
        std::uint64_t same = 0;
        std::uint64_t flip = 0;
        for_each_member(g.positive_targets(j), [&](int i) { same |= std::uint64_t{1} << (2 * i); flip |= std::uint64_t{1} << (2 * i + 1); });
        for_each_member(g.negative_targets(j), [&](int i) { same |= std::uint64_t{1} << (2 * i + 1); flip |= std::uint64_t{1} << (2 * i); });
        reach[static_cast<std::size_t>(2 * j)] = same;
        reach[static_cast<std::size_t>(2 * j + 1)] = flip;
    }
    const int m = 2 * n;
    for (int k = 0; k < m; ++k)
        for (int u = 0; u < m; ++u)
            if ((reach[static_cast<std::size_t>(u)] >> k) & 1U)
                reach[static_cast<std::size_t>(u)] |= reach[static_cast<std::size_t>(k)];
    return reach;
}

bool same_lift_component(const std::array<std::uint64_t, 2 * kMaxComponents>& reach, int v)
{
    return ((reach[static_cast<std::size_t>(2 * v)] >> (2 * v + 1)) & 1U) &&
           ((reach[static_cast<std::size_t>(2 * v + 1)] >> (2 * v)) & 1U);
}

/// Johnson's elementary circuit enumeration on the unsigned skeleton, with
/// every vertex cycle expanded into its sign patterns.
class CircuitEnumerator
{
public:
    CircuitEnumerator(const SignedDigraph& g, const std::function<bool(const SignedCircuit&)>& visit)
        : g_(g), visit_(visit), n_(g.vertex_count())
    {
        for (int v = 0; v < n_; ++v)
            adj_[static_cast<std::size_t>(v)] = g.targets(v);
    }

    void run()
    {
        for (start_ = 0; start_ < n_ && !stop_; ++start_) {
            allowed_ = ~VertexSet{0} << start_;
            if (n_ < kMaxComponents)
                allowed_ &= bit(n_) - 1;
            component_ = strong_component(start_);
            if (!(adj_[static_cast<std::size_t>(start_)] & component_))
                continue;
            blocked_ = 0;
            blocked_by_.fill(0);
            circuit(start_);
        }
    }

private:
    VertexSet forward(int s, bool reverse) const
    {
        VertexSet seen = bit(s);
        VertexSet frontier = seen;
        while (frontier) {
            VertexSet next = 0;
            for_each_member(frontier, [&](int v) {
                if (!reverse) {
                    next |= adj_[static_cast<std::size_t>(v)];
                } else {
                    for (int u = 0; u < n_; ++u)
                        if (adj_[static_cast<std::size_t>(u)] & bit(v))
                            next |= bit(u);
                }
            });
            next &= allowed_ & ~seen;
            seen |= next;
            frontier = next;
        }
        return seen;
    }

    VertexSet strong_component(int s) const { return forward(s, false) & forward(s, true); }

    void unblock(int u)
    {
        blocked_ &= ~bit(u);
        VertexSet waiting = blocked_by_[static_cast<std::size_t>(u)];
        blocked_by_[static_cast<std::size_t>(u)] = 0;
        for_each_member(waiting, [&](int w) {
            if (blocked_ & bit(w))
                unblock(w);
        });
    }

    bool circuit(int v)
    {
        bool found = false;
        stack_.push_back(v);
        blocked_ |= bit(v);
        const VertexSet succ = adj_[static_cast<std::size_t>(v)] & component_;
        for (VertexSet rest = succ; rest && !stop_; rest &= rest - 1) {
            const int w = std::countr_zero(rest);
            if (w == start_) {
                found = true;
                emit();
            } else if (!(blocked_ & bit(w)) && circuit(w)) {
                found = true;
            }
        }
        if (found)
            unblock(v);
        else
            for_each_member(succ, [&](int w) { blocked_by_[static_cast<std::size_t>(w)] |= bit(v); });
        stack_.pop_back();
        return found;
    }

    void emit()
    {
        const std::size_t k = stack_.size();
        SignedCircuit c;
        c.arcs.resize(k);
        std::vector<int> options(k);
        for (std::size_t q = 0; q < k; ++q) {
            const int from = stack_[q];
            const int to = stack_[(q + 1) % k];
            const bool pos = g_.has_arc(from, 1, to);
            const bool neg = g_.has_arc(from, -1, to);
            options[q] = (pos ? 1 : 0) | (neg ? 2 : 0);
            c.arcs[q] = {from, pos ? 1 : -1, to};
        }
        // Odometer over per-arc sign choices, + first.
        while (true) {
            if (!visit_(c)) {
                stop_ = true;
                return;
            }
            std::size_t q = k;
            while (q > 0) {
                --q;
                if (options[q] == 3 && c.arcs[q].sign == 1) {
                    c.arcs[q].sign = -1;
                    for (std::size_t r = q + 1; r < k; ++r)
                        if (options[r] == 3)
                            c.arcs[r].sign = 1;
                    break;
                }
                if (q == 0)
                    return;
            }
        }
    }

    const SignedDigraph& g_;
    const std::function<bool(const SignedCircuit&)>& visit_;
    int n_;
    std::array<VertexSet, kMaxComponents> adj_{};
    std::array<VertexSet, kMaxComponents> blocked_by_{};
    std::vector<int> stack_;
    VertexSet allowed_ = 0;
    VertexSet component_ = 0;
    VertexSet blocked_ = 0;
    int start_ = 0;
    bool stop_ = false;
};

} // namespace

int SignedCircuit::sign() const noexcept
{
    int s = 1;
    for (const Arc& a : arcs)
        s *= a.sign;
    return s;
}

bool SignedCircuit::is_closed() const noexcept
{
    if (arcs.empty())
        return false;
    for (std::size_t q = 0; q < arcs.size(); ++q)
        if (arcs[q].to != arcs[(q + 1) % arcs.size()].from)
            return false;
    return true;
}

bool SignedCircuit::is_elementary() const noexcept
{
    if (!is_closed())
        return false;
    VertexSet seen = 0;
    for (const Arc& a : arcs) {
        if (seen & bit(a.to))
            return false;
        seen |= bit(a.to);
    }
    return true;
}

std::vector<int> SignedCircuit::vertices() const
{
    std::vector<int> out;
    out.reserve(arcs.size());
    for (const Arc& a : arcs)
        out.push_back(a.from);
    return out;
}

std::string to_string(const SignedCircuit& c)
{
    if (c.arcs.empty())
        return "";
    std::string out = std::to_string(c.arcs.front().from + 1);
    for (const Arc& a : c.arcs) {
        out += a.sign > 0 ? " (+) " : " (-) ";
        out += std::to_string(a.to + 1);
    }
    return out;
}

SignedCircuit canonical_rotation(const SignedCircuit& c)
{
    if (c.arcs.empty())
        return c;
    auto smallest = std::min_element(c.arcs.begin(), c.arcs.end(), [](const Arc& a, const Arc& b) { return a.from < b.from; });
    SignedCircuit out;
    out.arcs.assign(smallest, c.arcs.end());
    out.arcs.insert(out.arcs.end(), c.arcs.begin(), smallest);
    return out;
}

bool has_negative_circuit(const SignedDigraph& g)
{
    const auto reach = lift_closure(g);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (same_lift_component(reach, v))
            return true;
    return false;
}

bool has_circuit(const SignedDigraph& g)
{
    const int n = g.vertex_count();
    std::array<VertexSet, kMaxComponents> reach{};
    for (int v = 0; v < n; ++v)
        reach[static_cast<std::size_t>(v)] = g.targets(v);
    for (int k = 0; k < n; ++k)
        for (int u = 0; u < n; ++u)
            if (reach[static_cast<std::size_t>(u)] & bit(k))
                reach[static_cast<std::size_t>(u)] |= reach[static_cast<std::size_t>(k)];
    for (int v = 0; v < n; ++v)
        if (reach[static_cast<std::size_t>(v)] & bit(v))
            return true;
    return false;
}

bool has_positive_circuit(const SignedDigraph& g)
{
    bool found = false;
    for_each_elementary_circuit(g, [&](const SignedCircuit& c) {
        found = c.sign() > 0;
        return !found;
    });
    return found;
}

void for_each_elementary_circuit(const SignedDigraph& g, const std::function<bool(const SignedCircuit&)>& visit)
{
    if (g.vertex_count() > kMaxEnumerationVertices)
        throw DomainError("elementary circuit enumeration is limited to " + std::to_string(kMaxEnumerationVertices) +
                          " vertices");
    CircuitEnumerator(g, visit).run();
}

std::vector<SignedCircuit> elementary_circuits(const SignedDigraph& g)
{
    std::vector<SignedCircuit> out;
    for_each_elementary_circuit(g, [&](const SignedCircuit& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

std::optional<SignedCircuit> find_negative_circuit(const SignedDigraph& g)
{
    const auto reach = lift_closure(g);
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        if (!same_lift_component(reach, v))
            continue;
        // Breadth-first from (v,+1) to (v,-1) in the lift.
        const int m = 2 * n;
        std::vector<int> parent(static_cast<std::size_t>(m), -1);
        std::vector<Arc> via(static_cast<std::size_t>(m));
        std::deque<int> queue{2 * v};
        parent[static_cast<std::size_t>(2 * v)] = 2 * v;
        const int goal = 2 * v + 1;
        while (!queue.empty() && parent[static_cast<std::size_t>(goal)] < 0) {
            const int u = queue.front();
            queue.pop_front();
            const int j = u / 2;
            const int p = (u % 2) ? -1 : 1;
            for (int s : {1, -1}) {
                const VertexSet targets = s > 0 ? g.positive_targets(j) : g.negative_targets(j);
                for_each_member(targets, [&](int i) {
                    const int w = 2 * i + ((p * s) < 0 ? 1 : 0);
                    if (parent[static_cast<std::size_t>(w)] >= 0)
                        return;
                    parent[static_cast<std::size_t>(w)] = u;
                    via[static_cast<std::size_t>(w)] = {j, s, i};
                    queue.push_back(w);
                });
            }
        }
        SignedCircuit walk;
        for (int w = goal; w != 2 * v; w = parent[static_cast<std::size_t>(w)])
            walk.arcs.push_back(via[static_cast<std::size_t>(w)]);
        std::reverse(walk.arcs.begin(), walk.arcs.end());
        return negative_elementary_subcircuit(walk);
    }
    return std::nullopt;
}

SignedCircuit negative_elementary_subcircuit(const SignedCircuit& walk)
{
    if (!walk.is_closed() || walk.sign() >= 0)
        throw ContractError("expected a closed walk of negative sign");
    std::array<int, kMaxComponents> leaves_at;
    leaves_at.fill(-1);
    std::vector<Arc> stack;
    for (const Arc& a : walk.arcs) {
        stack.push_back(a);
        leaves_at[static_cast<std::size_t>(a.from)] = static_cast<int>(stack.size()) - 1;
        const int at = leaves_at[static_cast<std::size_t>(a.to)];
        if (at < 0)
            continue;
        SignedCircuit cycle;
        cycle.arcs.assign(stack.begin() + at, stack.end());
        if (cycle.sign() < 0)
            return canonical_rotation(cycle);
        for (std::size_t q = static_cast<std::size_t>(at); q < stack.size(); ++q)
            leaves_at[static_cast<std::size_t>(stack[q].from)] = -1;
        stack.resize(static_cast<std::size_t>(at));
    }
    throw ContractError("negative closed walk without a negative elementary circuit");
}

} // namespace negcirc
