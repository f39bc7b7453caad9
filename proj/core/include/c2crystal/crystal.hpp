#pragma once

// Abstract crystal machinery shared by every model in the library.
//
// A model is any type satisfying `CrystalModel`: it names an element type and
// supplies wt, eps_i, phi_i, the Kashiwara operators e_i / f_i (nullopt plays
// the role of 0) and a canonical string key. Crystals here are seminormal, so
// eps_i and phi_i are always finite non-negative integers.

#include <algorithm>
#include <array>
#include <concepts>
#include <cstddef>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "c2crystal/cartan.hpp"

namespace c2crystal {

template <class M>
concept CrystalModel = requires(const M& m, const typename M::Element& x, Index i) {
  requires std::equality_comparable<typename M::Element>;
  { M::kAffine } -> std::convertible_to<bool>;
  { m.name() } -> std::convertible_to<std::string>;
  { m.wt(x) } -> std::same_as<AffineWeight>;
  { m.eps(i, x) } -> std::convertible_to<int>;
  { m.phi(i, x) } -> std::convertible_to<int>;
  { m.e(i, x) } -> std::same_as<std::optional<typename M::Element>>;
  { m.f(i, x) } -> std::same_as<std::optional<typename M::Element>>;
  { m.key(x) } -> std::same_as<std::string>;
};

/// Weight comparison used across models: exact when both sides carry a
/// delta-grading, classical otherwise.
inline bool same_weight(const AffineWeight& a, const AffineWeight& b, bool affine) {
  return affine ? a == b : a.classical() == b.classical();
}

// ---------------------------------------------------------------------------
// Tensor products

template <CrystalModel Left, CrystalModel Right>
class TensorModel {
 public:
  struct Element {
    typename Left::Element left;
    typename Right::Element right;
    friend bool operator==(const Element&, const Element&) = default;
  };

  static constexpr bool kAffine = Left::kAffine && Right::kAffine;

  TensorModel(Left left, Right right) : left_(std::move(left)), right_(std::move(right)) {}

  const Left& left_model() const noexcept { return left_; }
  const Right& right_model() const noexcept { return right_; }

  std::string name() const { return std::string(left_.name()) + "(x)" + std::string(right_.name()); }

  AffineWeight wt(const Element& t) const {
    AffineWeight w = left_.wt(t.left) + right_.wt(t.right);
    return kAffine ? w : w.classical();
  }

  int eps(Index i, const Element& t) const {
    const auto shift = pair(left_.wt(t.left), i);
    return static_cast<int>(std::max<std::int64_t>(left_.eps(i, t.left), right_.eps(i, t.right) - shift));
  }

  int phi(Index i, const Element& t) const {
    const auto shift = pair(right_.wt(t.right), i);
    return static_cast<int>(std::max<std::int64_t>(right_.phi(i, t.right), left_.phi(i, t.left) + shift));
  }

  std::optional<Element> e(Index i, const Element& t) const {
    if (left_.phi(i, t.left) >= right_.eps(i, t.right)) {
      auto moved = left_.e(i, t.left);
      if (!moved) return std::nullopt;
      return Element{*moved, t.right};
    }
    auto moved = right_.e(i, t.right);
    if (!moved) return std::nullopt;
    return Element{t.left, *moved};
  }

  std::optional<Element> f(Index i, const Element& t) const {
    if (left_.phi(i, t.left) > right_.eps(i, t.right)) {
      auto moved = left_.f(i, t.left);
      if (!moved) return std::nullopt;
      return Element{*moved, t.right};
    }
    auto moved = right_.f(i, t.right);
    if (!moved) return std::nullopt;
    return Element{t.left, *moved};
  }

  std::string key(const Element& t) const { return "[" + left_.key(t.left) + "]x[" + right_.key(t.right) + "]"; }

 private:
  Left left_;
  Right right_;
};

template <CrystalModel L, CrystalModel R>
std::optional<typename TensorModel<L, R>::Element> tensor_f(const TensorModel<L, R>& m, Index i,
                                                            const typename TensorModel<L, R>::Element& t) {
  return m.f(i, t);
}

template <CrystalModel L, CrystalModel R>
std::optional<typename TensorModel<L, R>::Element> tensor_e(const TensorModel<L, R>& m, Index i,
                                                            const typename TensorModel<L, R>::Element& t) {
  return m.e(i, t);
}

template <CrystalModel L, CrystalModel R>
std::pair<int, int> tensor_eps_phi(const TensorModel<L, R>& m, Index i, const typename TensorModel<L, R>::Element& t) {
  return {m.eps(i, t), m.phi(i, t)};
}

// ---------------------------------------------------------------------------
// Crystal graphs

inline constexpr std::size_t kNoNode = std::numeric_limits<std::size_t>::max();

struct GraphNode {
  std::size_t id = 0;
  std::string key;
  AffineWeight wt;
  std::size_t distance = 0;
  /// Sits at exactly the generation depth; its outgoing edges were not explored.
  bool frontier = false;
};

struct GraphEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  Index color{0};
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// Element-free part of a generated crystal graph; this is what gets serialized.
struct GraphData {
  std::string model;
  int ground = -1;
  std::size_t depth = 0;
  std::size_t root = 0;
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;
};

template <class E>
struct CrystalGraph : GraphData {
  std::vector<E> elements;
};

/// Colour-indexed successor / predecessor tables rebuilt from an edge list.
struct Adjacency {
  std::vector<std::array<std::size_t, 3>> out;
  std::vector<std::array<std::size_t, 3>> in;
  /// Number of edges that collided with an already-present edge of the same colour.
  std::size_t collisions = 0;
};

Adjacency make_adjacency(const GraphData& g);

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BuildOptions {
  std::size_t node_cap = 1'000'000;
  int ground = -1;
};

/// Breadth-first closure of `root` under f_0, f_1, f_2 up to edge-distance
/// `depth`. Node ids follow discovery order, which makes the result
/// deterministic for a given model and root.
template <CrystalModel M>
CrystalGraph<typename M::Element> build_graph(const M& model, const typename M::Element& root, std::size_t depth,
                                              const BuildOptions& options = {}) {
  CrystalGraph<typename M::Element> g;
  g.model = model.name();
  g.ground = options.ground;
  g.depth = depth;
  g.root = 0;

  std::unordered_map<std::string, std::size_t> ids;
  auto intern = [&](const typename M::Element& x, std::size_t distance) -> std::size_t {
    std::string key = model.key(x);
    auto [it, inserted] = ids.try_emplace(key, g.nodes.size());
    if (inserted) {
      if (g.nodes.size() >= options.node_cap) {
        throw CapacityError("crystal graph exceeded node cap of " + std::to_string(options.node_cap));
      }
      g.nodes.push_back(GraphNode{g.nodes.size(), std::move(key), model.wt(x), distance, distance == depth});
      g.elements.push_back(x);
    }
    return it->second;
  };

  intern(root, 0);
  for (std::size_t next = 0; next < g.nodes.size(); ++next) {
    if (g.nodes[next].frontier) continue;
    const std::size_t distance = g.nodes[next].distance;
    for (Index i : kIndices) {
      // Copy: `intern` may reallocate `elements`.
      auto target = model.f(i, typename M::Element(g.elements[next]));
      if (!target) continue;
      const std::size_t to = intern(*target, distance + 1);
      g.edges.push_back(GraphEdge{next, to, i});
    }
  }
  return g;
}

struct AxiomViolation {
  std::size_t node = 0;
  Index color{0};
  /// Which crystal axiom failed: 1..4.
  int condition = 0;
  std::string detail;
};

struct AxiomReport {
  std::size_t nodes_checked = 0;
  std::vector<AxiomViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Checks axioms (i)-(iv) of an abstract crystal on every node of `g`.
/// Edge-completeness for (iv) is only demanded of non-frontier nodes.
template <CrystalModel M>
AxiomReport check_axioms(const CrystalGraph<typename M::Element>& g, const M& model) {
  AxiomReport report;
  report.nodes_checked = g.nodes.size();
  const Adjacency adj = make_adjacency(g);
  auto fail = [&](std::size_t node, Index i, int condition, std::string detail) {
    report.violations.push_back(AxiomViolation{node, i, condition, std::move(detail)});
  };

  for (const GraphEdge& edge : g.edges) {
    const auto& src = g.elements[edge.from];
    const auto& dst = g.elements[edge.to];
    auto image = model.f(edge.color, src);
    if (!image || !(*image == dst)) {
      fail(edge.from, edge.color, 4, "edge " + g.nodes[edge.from].key + " -> " + g.nodes[edge.to].key +
                                         " is not an f-arrow of this colour");
      continue;
    }
    auto back = model.e(edge.color, dst);
    if (!back || !(*back == src)) {
      fail(edge.to, edge.color, 4, "e does not invert the edge into " + g.nodes[edge.to].key);
    }
  }

  for (std::size_t n = 0; n < g.nodes.size(); ++n) {
    const auto& x = g.elements[n];
    const AffineWeight w = model.wt(x);
    if (!same_weight(w, g.nodes[n].wt, M::kAffine)) {
      fail(n, Index{0}, 1, "cached weight differs from model weight");
    }
    for (Index i : kIndices) {
      const std::int64_t gap = static_cast<std::int64_t>(model.phi(i, x)) - model.eps(i, x);
      if (gap != pair(w, i)) {
        fail(n, i, 1, "phi - eps = " + std::to_string(gap) + " but <wt,h> = " + std::to_string(pair(w, i)));
      }
      if (auto up = model.e(i, x)) {
        if (!same_weight(model.wt(*up), w + simple_root(i), M::kAffine)) fail(n, i, 2, "wt(e b) != wt(b) + alpha");
        auto down = model.f(i, *up);
        if (!down || !(*down == x)) fail(n, i, 4, "f(e b) != b");
      }
      auto down = model.f(i, x);
      if (down) {
        if (!same_weight(model.wt(*down), w - simple_root(i), M::kAffine)) fail(n, i, 3, "wt(f b) != wt(b) - alpha");
        auto up = model.e(i, *down);
        if (!up || !(*up == x)) fail(n, i, 4, "e(f b) != b");
      }
      if (!g.nodes[n].frontier) {
        const bool has_edge = adj.out[n][i.slot()] != kNoNode;
        if (has_edge != down.has_value()) fail(n, i, 4, "graph edge set disagrees with f at a non-frontier node");
      }
    }
  }
  if (adj.collisions != 0) fail(0, Index{0}, 4, "two edges of one colour leave or enter the same node");
  return report;
}

struct IsoResult {
  bool ok = false;
  /// mapping[a] is the node of the second graph matched with node a of the first.
  std::vector<std::size_t> mapping;
  std::size_t offending_node = kNoNode;
  std::optional<Index> offending_color;
  std::string reason;
};

/// Tries to extend root -> root to an isomorphism of the two generated graphs.
/// Because f_i is a partial function, the image of every node is forced by the
/// path that reaches it, so a synchronized BFS decides the question.
template <CrystalModel MA, CrystalModel MB>
IsoResult check_root_isomorphism(const CrystalGraph<typename MA::Element>& ga,
                                 const CrystalGraph<typename MB::Element>& gb, const MA& ma, const MB& mb) {
  constexpr bool kAffine = MA::kAffine && MB::kAffine;
  IsoResult result;
  result.mapping.assign(ga.nodes.size(), kNoNode);
  std::vector<std::size_t> inverse(gb.nodes.size(), kNoNode);
  const Adjacency adj_a = make_adjacency(ga);
  const Adjacency adj_b = make_adjacency(gb);

  auto fail = [&](std::size_t node, std::optional<Index> color, std::string reason) {
    result.ok = false;
    result.offending_node = node;
    result.offending_color = color;
    result.reason = std::move(reason);
    return result;
  };
  auto bind = [&](std::size_t a, std::size_t b) -> bool {
    if (result.mapping[a] == kNoNode && inverse[b] == kNoNode) {
      result.mapping[a] = b;
      inverse[b] = a;
      return true;
    }
    return result.mapping[a] == b && inverse[b] == a;
  };

  if (ga.nodes.empty() || gb.nodes.empty()) return fail(kNoNode, std::nullopt, "empty graph");
  if (ga.depth != gb.depth) return fail(ga.root, std::nullopt, "graphs generated to different depths");

  std::deque<std::size_t> queue;
  bind(ga.root, gb.root);
  queue.push_back(ga.root);
  while (!queue.empty()) {
    const std::size_t a = queue.front();
    queue.pop_front();
    const std::size_t b = result.mapping[a];
    const auto& xa = ga.elements[a];
    const auto& xb = gb.elements[b];
    if (!same_weight(ma.wt(xa), mb.wt(xb), kAffine)) return fail(a, std::nullopt, "weights differ");
    if (ga.nodes[a].frontier != gb.nodes[b].frontier) return fail(a, std::nullopt, "frontier flags differ");
    for (Index i : kIndices) {
      if (ma.eps(i, xa) != mb.eps(i, xb) || ma.phi(i, xa) != mb.phi(i, xb)) {
        return fail(a, i, "eps/phi differ");
      }
      if (ma.e(i, xa).has_value() != mb.e(i, xb).has_value()) return fail(a, i, "e defined on one side only");
      const std::size_t pa = adj_a.in[a][i.slot()];
      const std::size_t pb = adj_b.in[b][i.slot()];
      if ((pa == kNoNode) != (pb == kNoNode)) return fail(a, i, "incoming edge on one side only");
      if (pa != kNoNode) {
        const bool fresh = result.mapping[pa] == kNoNode;
        if (!bind(pa, pb)) return fail(a, i, "incoming edges lead to inconsistent images");
        if (fresh) queue.push_back(pa);
      }
      if (ga.nodes[a].frontier) continue;
      const std::size_t sa = adj_a.out[a][i.slot()];
      const std::size_t sb = adj_b.out[b][i.slot()];
      if ((sa == kNoNode) != (sb == kNoNode)) return fail(a, i, "outgoing edge on one side only");
      if (sa == kNoNode) continue;
      const bool fresh = result.mapping[sa] == kNoNode;
      if (!bind(sa, sb)) return fail(a, i, "outgoing edges lead to inconsistent images");
      if (fresh) queue.push_back(sa);
    }
  }

  for (std::size_t a = 0; a < ga.nodes.size(); ++a) {
    if (result.mapping[a] == kNoNode) return fail(a, std::nullopt, "node unreachable in synchronized traversal");
  }
  if (ga.nodes.size() != gb.nodes.size()) {
    return fail(kNoNode, std::nullopt,
                "node counts differ: " + std::to_string(ga.nodes.size()) + " vs " + std::to_string(gb.nodes.size()));
  }
  if (ga.edges.size() != gb.edges.size()) return fail(kNoNode, std::nullopt, "edge counts differ");
  result.ok = true;
  return result;
}

using MultiplicityTable = std::map<AffineWeight, std::size_t>;

/// Number of generated nodes per weight.
MultiplicityTable weight_multiplicities(const GraphData& g);

}  // namespace c2crystal
