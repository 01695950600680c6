#include "negcirc/network_map.hpp"

#include "negcirc/error.hpp"

#include <bit>

namespace negcirc {

NetworkMap::NetworkMap(const StateSpace& space, std::vector<Rank> table) : space_(space), table_(std::move(table))
{
    if (table_.size() != space_.size())
        throw DomainError("map table has " + std::to_string(table_.size()) + " entries, space has " +
                          std::to_string(space_.size()) + " states");
    for (Rank r : table_)
        if (r >= space_.size())
            throw DomainError("map table entry " + std::to_string(r) + " is not a state rank");
}

NetworkMap NetworkMap::identity(const StateSpace& space)
{
    std::vector<Rank> table(space.size());
    for (Rank x = 0; x < space.size(); ++x)
        table[x] = x;
    return NetworkMap(space, std::move(table));
}

NetworkMap NetworkMap::from_function(const StateSpace& space, const std::function<State(const State&)>& f)
{
    std::vector<Rank> table(space.size());
    for (Rank x = 0; x < space.size(); ++x)
        table[x] = space.rank(f(space.unrank(x)));
    return NetworkMap(space, std::move(table));
}

namespace {

void check_component(const NetworkMap& f, int i)
{
    if (i < 0 || i >= f.dimension())
        throw DomainError("component " + std::to_string(i + 1) + " out of range 1.." + std::to_string(f.dimension()));
}

} // namespace

State async_update(const NetworkMap& f, const State& x, int i)
{
    check_component(f, i);
    return f.space().unrank(f.async_update(f.space().rank(x), i));
}

SignVector delta_sign(const NetworkMap& f, const State& x)
{
    const Rank r = f.space().rank(x);
    SignVector out(static_cast<std::size_t>(f.dimension()));
    for (int i = 0; i < f.dimension(); ++i)
        out[static_cast<std::size_t>(i)] = f.delta(r, i);
    return out;
}

std::vector<int> unstable_set(const NetworkMap& f, const State& x)
{
    return components_of(f.unstable(f.space().rank(x)));
}

NetworkMap unitary_map(const NetworkMap& f)
{
    const StateSpace& space = f.space();
    std::vector<Rank> table(space.size());
    for (Rank x = 0; x < space.size(); ++x) {
        long long r = x;
        for (int i = 0; i < space.dimension(); ++i)
            r += static_cast<long long>(f.delta(x, i)) * space.stride(i);
        table[x] = static_cast<Rank>(r);
    }
    return NetworkMap(space, std::move(table));
}

NetworkMap freeze_component(const NetworkMap& f, int c)
{
    check_component(f, c);
    const StateSpace& space = f.space();
    std::vector<Rank> table(space.size());
    for (Rank x = 0; x < space.size(); ++x) {
        const long long shift = static_cast<long long>(space.coord(x, c)) - f.component(x, c);
        table[x] = static_cast<Rank>(static_cast<long long>(f.image(x)) + shift * space.stride(c));
    }
    return NetworkMap(space, std::move(table));
}

std::vector<int> components_of(ComponentSet set)
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(std::popcount(set)));
    while (set) {
        out.push_back(std::countr_zero(set));
        set &= set - 1;
    }
    return out;
}

} // namespace negcirc
