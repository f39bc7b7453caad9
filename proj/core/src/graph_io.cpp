#include "c2crystal/graph_io.hpp"

#include <sstream>

#include "json.hpp"

namespace c2crystal {

const char* dot_color(Index i) {
  switch (i.value()) {
    case 0: return "red";
    case 1: return "blue";
    default: return "darkgreen";
  }
}

std::string to_json(const GraphData& g) {
  nlohmann::ordered_json doc;
  doc["model"] = g.model;
  doc["ground"] = g.ground;
  doc["depth"] = g.depth;
  auto nodes = nlohmann::ordered_json::array();
  for (const GraphNode& n : g.nodes) {
    nlohmann::ordered_json node;
    node["id"] = n.id;
    node["key"] = n.key;
    node["wt"] = {n.wt.lambda0, n.wt.lambda1, n.wt.lambda2, n.wt.delta};
    node["frontier"] = n.frontier;
    nodes.push_back(std::move(node));
  }
  doc["nodes"] = std::move(nodes);
  auto edges = nlohmann::ordered_json::array();
  for (const GraphEdge& e : g.edges) {
    nlohmann::ordered_json edge;
    edge["from"] = e.from;
    edge["to"] = e.to;
    edge["i"] = e.color.value();
    edges.push_back(std::move(edge));
  }
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

std::string to_dot(const GraphData& g) {
  std::ostringstream os;
  os << "digraph crystal {\n";
  os << "  // model=" << g.model << " ground=" << g.ground << " depth=" << g.depth << "\n";
  for (const GraphNode& n : g.nodes) {
    // Keys contain commas and '|' but never quotes.
    os << "  n" << n.id << " [label=\"" << n.key << "\"";
    if (n.frontier) os << ", style=dashed";
    os << "];\n";
  }
  for (const GraphEdge& e : g.edges) {
    os << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.color.value() << "\", color=\""
       << dot_color(e.color) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace c2crystal
