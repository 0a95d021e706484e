#pragma once

/**
 * @file text.hpp
 * @brief Canonical text form "C<n>(<j1>,<j2>,...)" and its parser.
 */

#include <string>
#include <vector>

#include "circulant/zmod.hpp"

namespace circulant {

struct ParsedGraph {
    CirculantGraph graph;
    /// One entry per anomaly worth reporting, e.g. duplicated raw jumps.
    std::vector<std::string> warnings;
};

/// Parses "C<n>(<comma-separated integers>)"; whitespace between tokens is
/// tolerated, values may be any integers (they fold into canonical jumps).
/// Throws ParseError (with byte position) on malformed input and
/// ZeroJumpError for values divisible by n.
ParsedGraph parse_graph_verbose(const std::string& text);

/// parse_graph_verbose with the warnings dropped.
CirculantGraph parse_graph(const std::string& text);

/// Canonical form; inverse of parse_graph on canonical input.
std::string render_graph(const CirculantGraph& g);

}  // namespace circulant
