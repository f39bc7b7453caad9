#pragma once

#include <string>

#include "c2crystal/crystal.hpp"

namespace c2crystal {

/// {"model", "ground", "depth", "nodes":[{"id","key","wt","frontier"}], "edges":[{"from","to","i"}]}
/// with keys in that order; byte-stable for identical input.
std::string to_json(const GraphData& g);

/// Graphviz digraph, one edge per crystal arrow, coloured 0 red / 1 blue / 2 darkgreen.
std::string to_dot(const GraphData& g);

const char* dot_color(Index i);

}  // namespace c2crystal
