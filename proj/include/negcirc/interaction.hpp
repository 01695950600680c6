#pragma once

#include "negcirc/network_map.hpp"

#include <array>
#include <span>
#include <string>
#include <vector>

namespace negcirc {

/// Bit i set means vertex i (0-based) is a member.
using VertexSet = std::uint32_t;

/// Signed arc (from, sign, to) with sign in {-1, +1}; vertices are 0-based.
struct Arc
{
    int from = 0;
    int sign = 1;
    int to = 0;

    friend bool operator==(const Arc&, const Arc&) = default;
};

/// Canonical arc order: by from, then to, then sign (-1 before +1).
bool canonical_less(const Arc& a, const Arc& b) noexcept;

/// "(j,+,i)" with 1-based vertex numbers.
std::string to_string(const Arc& arc);

/// An interaction graph: a signed digraph on vertices 0..n-1 in which a
/// positive and a negative arc between the same ordered pair may coexist.
/// Stored as per-vertex target bit sets, one per sign.
class SignedDigraph
{
public:
    /// Throws DomainError unless 1 <= n <= kMaxComponents.
    explicit SignedDigraph(int n);

    int vertex_count() const noexcept { return n_; }

    /// Throws DomainError for a vertex outside 0..n-1 or a sign outside {-1,+1}.
    void add_arc(int from, int sign, int to);
    void add_arc(const Arc& a) { add_arc(a.from, a.sign, a.to); }
    bool has_arc(int from, int sign, int to) const noexcept;
    bool has_arc(const Arc& a) const noexcept { return has_arc(a.from, a.sign, a.to); }

    VertexSet positive_targets(int from) const { return pos_[static_cast<std::size_t>(from)]; }
    VertexSet negative_targets(int from) const { return neg_[static_cast<std::size_t>(from)]; }
    VertexSet targets(int from) const { return positive_targets(from) | negative_targets(from); }

    std::size_t arc_count() const noexcept;
    bool empty() const noexcept { return arc_count() == 0; }

    /// Arcs in canonical order.
    std::vector<Arc> arcs() const;

    /// Arc-set union; throws DomainError on mismatched vertex counts.
    SignedDigraph& operator|=(const SignedDigraph& other);

    friend bool operator==(const SignedDigraph&, const SignedDigraph&) = default;

    /// Add an arc whose endpoints and sign are already known to be valid.
    void add_arc_unchecked(int from, int sign, int to) noexcept
    {
        (sign > 0 ? pos_ : neg_)[static_cast<std::size_t>(from)] |= VertexSet{1} << to;
    }

private:
    int n_;
    std::array<VertexSet, kMaxComponents> pos_{};
    std::array<VertexSet, kMaxComponents> neg_{};
};

/// "{(j,s,i), ...}" in canonical order.
std::string to_string(const SignedDigraph& g);

SignedDigraph graph_union(std::span<const SignedDigraph> graphs);

/// Throws DomainError on mismatched vertex counts.
bool is_subgraph(const SignedDigraph& a, const SignedDigraph& b);

/// Global interaction graph: (j,s,i) iff sign(f_i(x + e_j) - f_i(x)) = s for
/// some x with x_j + 1 in X_j.
SignedDigraph global_ig(const NetworkMap& f);

/// Unitary interaction graph, over x with x_j + 1 in X_j. A self-arc (i,+,i)
/// needs f_i(x) <= x_i < f_i(x + e_i) and (i,-,i) needs
/// f_i(x) > x_i >= f_i(x + e_i). For j != i the arc sign is the direction in
/// which sign(f_i - x_i) changes between x and x + e_j, so both
/// f_i(x) <= x_i < f_i(x + e_j) and f_i(x) < x_i <= f_i(x + e_j) give (j,+,i).
SignedDigraph unitary_ig(const NetworkMap& f);

/// Local interaction graph at x: signs of the forward difference
/// f_i(x + e_j) - f_i(x) and of the backward difference f_i(x) - f_i(x - e_j),
/// each taken when the shifted state exists.
SignedDigraph local_ig(const NetworkMap& f, Rank x);
SignedDigraph local_ig(const NetworkMap& f, const State& x);

/// Dynamic local interaction graph at x: (j,s,i) iff f'_i(x) != f'_i(F_j(x))
/// and s = f'_j(x) * f'_i(F_j(x)) is nonzero.
SignedDigraph dynamic_local_ig(const NetworkMap& f, Rank x);
SignedDigraph dynamic_local_ig(const NetworkMap& f, const State& x);

} // namespace negcirc
