#pragma once

#include "negcirc/network_map.hpp"
#include "negcirc/rule_dsl.hpp"

#include <string>
#include <string_view>

namespace negcirc {

/// Network file format. '#' starts a comment; blank lines are ignored.
///
///     intervals: 0..2 0..2
///     table:
///     0 0 -> 2 0
///     0 1 -> 1 0
///     ...
///
/// or, instead of the table, one rule per component:
///
///     intervals: 0..3 0..3
///     rule f1: if x2 == 3 or (x2 > 0 and x1 >= 2) then 3 else 0
///     rule f2: if x1 == 0 or (x1 < 3 and x2 >= 2) then 3 else 0
///
/// Table rows may come in any order but must cover every state exactly once.
/// Throws ParseError with the offending line and column.
NetworkMap parse_network_file(std::string_view text);

/// Reads and parses a file; I/O failures become ParseError at line 0.
NetworkMap load_network_file(const std::string& path);

/// Table form, rows in rank order; parse_network_file inverts it.
std::string write_network_file(const NetworkMap& f);

} // namespace negcirc
