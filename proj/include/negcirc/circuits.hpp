#pragma once

#include "negcirc/interaction.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace negcirc {

/// Elementary-circuit enumeration refuses graphs with more vertices than this.
inline constexpr int kMaxEnumerationVertices = 24;

/// A closed sequence of signed arcs, each ending where the next begins.
struct SignedCircuit
{
    std::vector<Arc> arcs;

    /// Product of the arc signs.
    int sign() const noexcept;
    /// Non-empty, consecutive arcs chain, and the last arc returns to the start.
    bool is_closed() const noexcept;
    /// Closed, and no vertex is entered twice.
    bool is_elementary() const noexcept;
    /// Start vertices of the arcs, in order.
    std::vector<int> vertices() const;

    friend bool operator==(const SignedCircuit&, const SignedCircuit&) = default;
};

/// "1 (+) 2 (-) 1" with 1-based vertices.
std::string to_string(const SignedCircuit& c);

/// Rotation of a closed circuit that starts at its smallest vertex (first
/// occurrence).
SignedCircuit canonical_rotation(const SignedCircuit& c);

/// Whether g contains a circuit of negative sign.
///
/// Decided on the parity lift: vertices (v, p) with p in {+1, -1}, and an arc
/// (j, p) -> (i, p * s) for every arc (j, s, i). A negative circuit through v
/// exists iff (v, +1) and (v, -1) share a strongly connected component of the
/// lift. Any negative closed walk splits into elementary circuits one of which
/// is negative, so an elementary negative circuit exists whenever this is true.
bool has_negative_circuit(const SignedDigraph& g);

/// Whether g contains any circuit (sign ignored).
bool has_circuit(const SignedDigraph& g);

/// Whether g contains a positive circuit. Decided by elementary enumeration:
/// the parity lift does not answer this (a positive closed walk can be made of
/// two negative circuits).
bool has_positive_circuit(const SignedDigraph& g);

/// Calls `visit` on every elementary circuit in canonical rotation, ordered by
/// start vertex, then by the depth-first order of successors, then by sign
/// pattern (+ before - per arc). Parallel opposite-sign arcs give distinct
/// circuits. Enumeration stops when `visit` returns false.
/// Throws DomainError when g has more than kMaxEnumerationVertices vertices.
void for_each_elementary_circuit(const SignedDigraph& g, const std::function<bool(const SignedCircuit&)>& visit);

std::vector<SignedCircuit> elementary_circuits(const SignedDigraph& g);

/// An elementary negative circuit of g, if any.
std::optional<SignedCircuit> find_negative_circuit(const SignedDigraph& g);

/// An elementary negative circuit made of arcs of a negative closed walk.
/// Throws ContractError unless `walk` is closed and negative.
SignedCircuit negative_elementary_subcircuit(const SignedCircuit& walk);

} // namespace negcirc
