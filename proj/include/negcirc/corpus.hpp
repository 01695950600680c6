#pragma once

#include "negcirc/network_map.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace negcirc {

/// A small reference network with pinned expectations, numbered 1..6.
struct CorpusNetwork
{
    int id;
    std::string_view name;
    std::string_view summary;
    /// Network file text.
    std::string_view source;
};

std::span<const CorpusNetwork> builtin_networks();
/// Throws DomainError for an unknown id.
const CorpusNetwork& builtin_network(int id);
NetworkMap load(const CorpusNetwork& entry);

struct Expectation
{
    std::string what;
    std::string expected;
    std::string actual;

    bool passed() const { return expected == actual; }
};

/// Recomputes every pinned property of `entry` and pairs it with its
/// expected rendering.
std::vector<Expectation> check_expectations(const CorpusNetwork& entry);

} // namespace negcirc
