#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <system_error>
#include <tuple>
#include <unistd.h>

#include "CLI11.hpp"
#include "c2crystal/crystal.hpp"
#include "c2crystal/graph_io.hpp"
#include "c2crystal/literal_error.hpp"
#include "c2crystal/path.hpp"
#include "c2crystal/perfect_crystal.hpp"
#include "c2crystal/young_wall.hpp"

namespace c2crystal::cli {

namespace {

/// Bad user input that is not a literal: reported like a usage error.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GraphArgs {
  std::string model = "wall";
  int ground = 0;
  std::size_t depth = 4;
  std::string format = "json";
  std::string out;
  std::size_t node_cap = 1'000'000;
};

struct ActArgs {
  std::string model = "wall";
  std::string state;
  std::string op;
};

struct CheckArgs {
  std::string suite;
  std::string model = "wall";
  int ground = 0;
  std::size_t depth = 8;
};

struct MultArgs {
  int ground = 0;
  std::size_t depth = 8;
};

struct Operator {
  bool raise = false;
  Index color{0};
};

Operator parse_operator(const std::string& op) {
  if (op.size() != 2 || (op[0] != 'e' && op[0] != 'f') || op[1] < '0' || op[1] > '2') {
    throw UsageError("--op must be one of e0 e1 e2 f0 f1 f2, got '" + op + "'");
  }
  return {op[0] == 'e', Index{op[1] - '0'}};
}

template <CrystalModel M>
std::optional<typename M::Element> apply(const M& model, const Operator& op, const typename M::Element& x) {
  return op.raise ? model.e(op.color, x) : model.f(op.color, x);
}

GraphData generate(const GraphArgs& a) {
  const Index g{a.ground};
  const BuildOptions options{a.node_cap, a.ground};
  if (a.model == "wall") return build_graph(WallModel{}, ground_wall(g), a.depth, options);
  if (a.model == "path") return build_graph(PathModel{}, ground_path(g), a.depth, options);
  const BuildOptions ungrounded{a.node_cap, -1};
  if (a.model == "b") return build_graph(PerfectCrystalModel{}, BElem::OneTwo, a.depth, ungrounded);
  return build_graph(tensor_square_model(), {BElem::OneTwo, BElem::OneTwo}, a.depth, ungrounded);
}

int run_graph(const GraphArgs& a, std::ostream& out) {
  const GraphData g = generate(a);
  const std::string text = a.format == "dot" ? to_dot(g) : to_json(g);
  if (a.out.empty()) {
    out << text;
  } else {
    write_atomically(a.out, text);
  }
  return kExitPass;
}

int run_act(const ActArgs& a, std::ostream& out) {
  const Operator op = parse_operator(a.op);
  if (a.model == "path") {
    const auto r = apply(PathModel{}, op, parse_path(a.state));
    out << (r ? to_literal(*r) : "null") << '\n';
  } else if (a.model == "b") {
    const auto b = parse_belem(a.state);
    if (!b) throw LiteralError("unknown element '" + a.state + "'", 0);
    const auto r = apply(PerfectCrystalModel{}, op, *b);
    out << (r ? std::string(name(*r)) : "null") << '\n';
  } else {
    const Wall w = parse_wall(a.state);
    if (!is_proper(w)) throw UsageError("'" + a.state + "' is not a proper Young wall");
    if (!is_reduced(w)) throw UsageError("'" + a.state + "' contains a removable delta");
    const auto r = apply(WallModel{}, op, w);
    out << (r ? to_literal(*r) : "null") << '\n';
  }
  return kExitPass;
}

int verdict(std::ostream& out, const std::string& suite, bool ok, const std::string& summary,
            const std::string& counterexample) {
  out << suite << ": " << (ok ? "PASS" : "FAIL") << " (" << summary << ")\n";
  if (!ok) out << "  first counterexample: " << counterexample << '\n';
  return ok ? kExitPass : kExitFail;
}

template <CrystalModel M>
int check_axioms_of(const M& model, const typename M::Element& root, const CheckArgs& a, std::ostream& out) {
  const auto g = build_graph(model, root, a.depth, BuildOptions{1'000'000, a.ground});
  const AxiomReport r = check_axioms(g, model);
  std::ostringstream summary;
  summary << model.name() << ", " << g.nodes.size() << " nodes, " << g.edges.size() << " edges, "
          << r.violations.size() << " violations";
  std::string first;
  if (!r.ok()) {
    const AxiomViolation& v = r.violations.front();
    first = "condition (" + std::to_string(v.condition) + ") at " + g.nodes[v.node].key + ", i=" +
            std::to_string(v.color.value()) + ": " + v.detail;
  }
  return verdict(out, "axioms", r.ok(), summary.str(), first);
}

int check_perfect_suite(std::ostream& out) {
  const PerfectnessReport r = check_perfect(1);
  std::ostringstream summary;
  summary << "B(x)B component " << r.tensor_square_component << "/25, |B^min| = " << r.minimal.size();
  if (r.lambda0) summary << ", lambda_0 = " << to_json_array(*r.lambda0);
  return verdict(out, "perfect", r.ok(), summary.str(), r.failures.empty() ? "" : r.failures.front());
}

int check_iso_suite(const CheckArgs& a, std::ostream& out) {
  const Index g{a.ground};
  const BuildOptions options{1'000'000, a.ground};
  const auto paths = build_graph(PathModel{}, ground_path(g), a.depth, options);
  const auto walls = build_graph(WallModel{}, ground_wall(g), a.depth, options);
  const IsoResult iso = check_root_isomorphism(walls, paths, WallModel{}, PathModel{});
  std::ostringstream summary;
  summary << walls.nodes.size() << " walls, " << paths.nodes.size() << " paths, depth " << a.depth;
  if (!iso.ok) {
    std::string where = iso.offending_node < walls.nodes.size() ? walls.nodes[iso.offending_node].key : "-";
    if (iso.offending_color) where += ", i=" + std::to_string(iso.offending_color->value());
    return verdict(out, "iso", false, summary.str(), iso.reason + " at " + where);
  }
  // The traversal fixes the bijection; the reading map has to be that bijection.
  for (std::size_t n = 0; n < walls.nodes.size(); ++n) {
    const PathState image = read_wall(walls.elements[n]);
    if (!(image == paths.elements[iso.mapping[n]])) {
      return verdict(out, "iso", false, summary.str(),
                     "reading map sends " + walls.nodes[n].key + " to " + to_literal(image) + ", expected " +
                         paths.nodes[iso.mapping[n]].key);
    }
  }
  return verdict(out, "iso", true, summary.str(), "");
}

int check_shift_suite(const CheckArgs& a, std::ostream& out) {
  const ShiftCheckReport r = check_shift_decomposition(Index{a.ground}, a.depth);
  std::ostringstream summary;
  summary << r.nodes_checked << " paths, " << r.mismatches << " mismatches";
  return verdict(out, "shift", r.ok(), summary.str(), r.first_mismatch);
}

int check_reduced_suite(const CheckArgs& a, std::ostream& out) {
  const auto g = build_graph(WallModel{}, ground_wall(Index{a.ground}), a.depth, BuildOptions{1'000'000, a.ground});
  std::size_t bad = 0;
  std::string first;
  for (std::size_t n = 0; n < g.nodes.size(); ++n) {
    const Wall& w = g.elements[n];
    std::string why;
    if (!is_valid(w)) {
      why = "not a Young wall: " + validate_wall(w).front().detail;
    } else if (!is_proper(w)) {
      why = "not proper";
    } else if (!is_reduced(w)) {
      why = "has a removable delta";
    }
    if (!why.empty() && bad++ == 0) first = g.nodes[n].key + " " + why;
  }
  std::ostringstream summary;
  summary << g.nodes.size() << " walls, " << bad << " violations";
  return verdict(out, "reduced", bad == 0, summary.str(), first);
}

int run_check(const CheckArgs& a, std::ostream& out) {
  if (a.suite == "perfect") return check_perfect_suite(out);
  if (a.suite == "iso") return check_iso_suite(a, out);
  if (a.suite == "shift") return check_shift_suite(a, out);
  if (a.suite == "reduced") return check_reduced_suite(a, out);
  const Index g{a.ground};
  if (a.model == "path") return check_axioms_of(PathModel{}, ground_path(g), a, out);
  if (a.model == "b") return check_axioms_of(PerfectCrystalModel{}, BElem::OneTwo, a, out);
  if (a.model == "tensor-bb") {
    return check_axioms_of(tensor_square_model(), {BElem::OneTwo, BElem::OneTwo}, a, out);
  }
  return check_axioms_of(WallModel{}, ground_wall(g), a, out);
}

// Lambda_g - sum m_a alpha_a, written with as many deltas pulled out as possible.
std::string format_weight(const AffineWeight& w, Index ground) {
  const AffineWeight d = AffineWeight::fundamental(ground) - w;
  const std::int64_t m0 = d.delta;
  const std::int64_t m1 = 2 * m0 - d.lambda0;
  const std::int64_t m2 = (d.lambda2 + m1) / 2;
  const std::int64_t k = std::min({m0, m1 / 2, m2});
  std::string s = "Λ" + std::to_string(ground.value());
  auto term = [&](std::int64_t count, const std::string& symbol) {
    if (count <= 0) return;
    s += "−";
    if (count > 1) s += std::to_string(count);
    s += symbol;
  };
  term(k, "δ");
  term(m0 - k, "α0");
  term(m1 - 2 * k, "α1");
  term(m2 - k, "α2");
  return s;
}

int run_mult(const MultArgs& a, std::ostream& out) {
  const Index g{a.ground};
  const auto graph = build_graph(WallModel{}, ground_wall(g), a.depth, BuildOptions{1'000'000, a.ground});
  const MultiplicityTable table = weight_multiplicities(graph);

  struct Row {
    AffineWeight wt;
    std::size_t count;
    std::int64_t height;
  };
  std::vector<Row> rows;
  for (const auto& [wt, count] : table) {
    const AffineWeight d = AffineWeight::fundamental(g) - wt;
    const std::int64_t m0 = d.delta;
    const std::int64_t m1 = 2 * m0 - d.lambda0;
    const std::int64_t m2 = (d.lambda2 + m1) / 2;
    rows.push_back({wt, count, m0 + m1 + m2});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    if (x.wt.delta != y.wt.delta) return x.wt.delta > y.wt.delta;
    return std::tie(x.wt.lambda0, x.wt.lambda1, x.wt.lambda2) < std::tie(y.wt.lambda0, y.wt.lambda1, y.wt.lambda2);
  });
  // Every f_i adds one block, so a weight with h blocks is only reached at
  // distance h; its count is final once the depth reaches h.
  for (const Row& r : rows) {
    out << format_weight(r.wt, g) << " → " << r.count;
    if (r.height > static_cast<std::int64_t>(a.depth)) out << "  (unstable)";
    out << '\n';
  }
  return kExitPass;
}

int run_render(const std::string& state, std::ostream& out) {
  out << render_ascii(parse_wall(state));
  return kExitPass;
}

}  // namespace

void write_atomically(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  std::filesystem::path temp = target;
  temp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream file(temp, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open " + temp.string() + " for writing");
    file << content;
    file.flush();
    if (!file) {
      std::error_code ignored;
      std::filesystem::remove(temp, ignored);
      throw std::runtime_error("failed writing " + temp.string());
    }
  }
  std::filesystem::rename(temp, target);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Explore the crystals B(Lambda_i) of type C_2^(1) through paths and Young walls"};
  app.require_subcommand(1);

  const std::vector<std::string> kModels{"wall", "path", "b", "tensor-bb"};
  const std::vector<std::string> kActModels{"wall", "path", "b"};

  GraphArgs graph_args;
  auto* graph = app.add_subcommand("graph", "Generate a crystal graph to a given depth");
  graph->add_option("--model", graph_args.model, "wall, path, b or tensor-bb")->check(CLI::IsMember(kModels));
  graph->add_option("--ground", graph_args.ground, "i of Lambda_i")->check(CLI::Range(0, 2));
  graph->add_option("--depth", graph_args.depth, "Edge distance from the root");
  graph->add_option("--format", graph_args.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  graph->add_option("--out", graph_args.out, "Output file (default: stdout)");
  graph->add_option("--node-cap", graph_args.node_cap, "Abort when the graph grows beyond this many nodes");

  ActArgs act_args;
  auto* act = app.add_subcommand("act", "Apply one Kashiwara operator to a literal");
  act->add_option("--model", act_args.model, "wall, path or b")->check(CLI::IsMember(kActModels));
  act->add_option("--state", act_args.state, "Wall, path or element literal")->required();
  act->add_option("--op", act_args.op, "e0 e1 e2 f0 f1 f2")->required();

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Run a verification suite");
  check->add_option("--suite", check_args.suite, "axioms, perfect, iso, shift or reduced")
      ->required()
      ->check(CLI::IsMember({"axioms", "perfect", "iso", "shift", "reduced"}));
  check->add_option("--model", check_args.model, "Model for the axioms suite")->check(CLI::IsMember(kModels));
  check->add_option("--ground", check_args.ground, "i of Lambda_i")->check(CLI::Range(0, 2));
  check->add_option("--depth", check_args.depth, "Generation depth");

  MultArgs mult_args;
  auto* mult = app.add_subcommand("mult", "Weight multiplicities of B(Lambda_i) from Young walls");
  mult->add_option("--ground", mult_args.ground, "i of Lambda_i")->check(CLI::Range(0, 2));
  mult->add_option("--depth", mult_args.depth, "Generation depth");

  std::string render_state;
  auto* render = app.add_subcommand("render", "Draw a Young wall as text");
  render->add_option("--state", render_state, "Wall literal")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (graph->parsed()) return run_graph(graph_args, out);
    if (act->parsed()) return run_act(act_args, out);
    if (check->parsed()) return run_check(check_args, out);
    if (mult->parsed()) return run_mult(mult_args, out);
    if (render->parsed()) return run_render(render_state, out);
  } catch (const LiteralError& e) {
    err << "error: invalid literal: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"c2crystal"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace c2crystal::cli
