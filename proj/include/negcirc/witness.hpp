#pragma once

#include "negcirc/attractor.hpp"
#include "negcirc/circuits.hpp"

#include <span>
#include <vector>

namespace negcirc {

/// A chain of signed arcs, each tagged with the state whose dynamic local
/// interaction graph contains it.
struct SupportedPath
{
    int source = 0;
    int target = 0;
    std::vector<Arc> arcs;
    std::vector<Rank> support;

    int sign() const noexcept;
};

/// Given an elementary path x^0..x^r (r >= 1) of the asynchronous graph of f
/// and a component i unstable at x^r whose direction f'_i differs at every
/// earlier state, returns a component j unstable at x^0 and a path j -> i in
/// the union of dynamic_local_ig(f, x^q), q < r, of sign f'_j(x^0) * f'_i(x^r).
///
/// The last transition x^{r-1} -> x^r, made by some component k, gives the
/// arc (k, f'_k(x^{r-1}) f'_i(x^r), i) at x^{r-1}. If k already moved in the
/// same direction at x^0 we are done with j = k; otherwise the first p with
/// f'_k(x^p) = f'_k(x^{r-1}) satisfies the same hypotheses for target k on
/// x^0..x^p, and the signs telescope.
///
/// Throws ContractError when a hypothesis fails.
SupportedPath signed_path_along(const NetworkMap& f, std::span<const Rank> path, int target);

struct WitnessTrace
{
    /// Negative circuit; arcs[q] belongs to dynamic_local_ig(f, support[q]).
    SignedCircuit circuit;
    std::vector<Rank> support;
    /// Components frozen, in order, before a state with a single unstable
    /// component was found.
    std::vector<int> reduction_chain;
};

/// Extracts a negative circuit of the union of dynamic_local_ig(f, x) over x
/// in the cyclic attractor `attractor` of the asynchronous graph of f.
///
/// While every state of the current attractor has two or more unstable
/// components, the smallest unstable component of the smallest state is
/// frozen; the frozen map still traps the current attractor and has a strictly
/// smaller cyclic attractor inside it. Once some state x^0 has a single
/// unstable component i, the shortest path from F_i(x^0) back to x^0 must
/// reverse the direction of i; the prefix up to that reversal feeds
/// signed_path_along, which returns a circuit on i of sign -1.
///
/// Throws DomainError if `attractor` is not a cyclic attractor of f.
WitnessTrace extract_negative_circuit(const NetworkMap& f, std::span<const Rank> attractor);
WitnessTrace extract_negative_circuit(const NetworkMap& f, const Attractor& attractor);

/// Sign -1, closed, every support state in `attractor`, every arc present in
/// dynamic_local_ig(f, support).
bool witness_is_sound(const NetworkMap& f, std::span<const Rank> attractor, const WitnessTrace& w);

} // namespace negcirc
