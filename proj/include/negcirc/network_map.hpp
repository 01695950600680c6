#pragma once

#include "negcirc/state_space.hpp"

#include <functional>
#include <span>
#include <vector>

namespace negcirc {

/// sign(f_i(x) - x_i) for every component i; entries in {-1, 0, +1}.
using SignVector = std::vector<int>;

constexpr int sign_of(long long v) noexcept { return (v > 0) - (v < 0); }

/// A total map F: X -> X stored as a table of image ranks.
class NetworkMap
{
public:
    /// Throws DomainError unless `table` has |X| entries, all valid ranks.
    NetworkMap(const StateSpace& space, std::vector<Rank> table);

    static NetworkMap identity(const StateSpace& space);
    static NetworkMap from_function(const StateSpace& space, const std::function<State(const State&)>& f);

    const StateSpace& space() const noexcept { return space_; }
    int dimension() const noexcept { return space_.dimension(); }
    Rank size() const noexcept { return space_.size(); }
    std::span<const Rank> table() const noexcept { return table_; }

    Rank image(Rank x) const { return table_[x]; }
    State operator()(const State& x) const { return space_.unrank(table_[space_.rank(x)]); }

    /// f_i(x)
    int component(Rank x, int i) const { return space_.coord(table_[x], i); }

    /// f'_i(x) = sign(f_i(x) - x_i)
    int delta(Rank x, int i) const { return sign_of(component(x, i) - space_.coord(x, i)); }

    /// Components i with f_i(x) != x_i, as a bit set.
    ComponentSet unstable(Rank x) const
    {
        ComponentSet set = 0;
        for (int i = 0; i < space_.dimension(); ++i)
            if (component(x, i) != space_.coord(x, i))
                set |= ComponentSet{1} << i;
        return set;
    }

    /// F_i(x): x with coordinate i replaced by f_i(x).
    Rank async_update(Rank x, int i) const
    {
        const long long step = static_cast<long long>(component(x, i)) - space_.coord(x, i);
        return static_cast<Rank>(static_cast<long long>(x) + step * static_cast<long long>(space_.stride(i)));
    }

    bool is_fixed(Rank x) const { return table_[x] == x; }

    friend bool operator==(const NetworkMap&, const NetworkMap&) = default;

private:
    StateSpace space_;
    std::vector<Rank> table_;
};

/// F_i(x). Throws DomainError for x outside X or i outside 0..n-1.
State async_update(const NetworkMap& f, const State& x, int i);

/// f'(x). Throws DomainError for x outside X.
SignVector delta_sign(const NetworkMap& f, const State& x);

/// I_F(x) as an ascending list of 0-based components; empty iff x is fixed.
std::vector<int> unstable_set(const NetworkMap& f, const State& x);

/// The unitary map: each coordinate moves one unit toward f_i(x).
NetworkMap unitary_map(const NetworkMap& f);

/// The map with component c frozen: h_c(x) = x_c, h_k = f_k for k != c.
NetworkMap freeze_component(const NetworkMap& f, int c);

/// Ascending list of 0-based members of a component set.
std::vector<int> components_of(ComponentSet set);

} // namespace negcirc
