#include "c2crystal/crystal.hpp"

namespace c2crystal {

Adjacency make_adjacency(const GraphData& g) {
  Adjacency adj;
  constexpr std::array<std::size_t, 3> kEmpty{kNoNode, kNoNode, kNoNode};
  adj.out.assign(g.nodes.size(), kEmpty);
  adj.in.assign(g.nodes.size(), kEmpty);
  for (const GraphEdge& edge : g.edges) {
    auto& out = adj.out[edge.from][edge.color.slot()];
    auto& in = adj.in[edge.to][edge.color.slot()];
    if (out != kNoNode || in != kNoNode) ++adj.collisions;
    out = edge.to;
    in = edge.from;
  }
  return adj;
}

MultiplicityTable weight_multiplicities(const GraphData& g) {
  MultiplicityTable table;
  for (const GraphNode& node : g.nodes) ++table[node.wt];
  return table;
}

}  // namespace c2crystal
