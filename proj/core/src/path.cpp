#include "c2crystal/path.hpp"

#include <array>
#include <stdexcept>

#include "c2crystal/literal_error.hpp"

namespace c2crystal {

BElem ground_elem(Index i, std::size_t k) {
  const bool even = k % 2 == 0;
  switch (i.value()) {
    case 0: return even ? BElem::BarTwoBarOne : BElem::OneTwo;
    case 1: return BElem::TwoBarTwo;
    default: return even ? BElem::OneTwo : BElem::BarTwoBarOne;
  }
}

std::string_view symbols(Index i, BElem b) {
  // Rows i = 0, 1, 2; columns in BElem order.
  static constexpr std::array<std::array<std::string_view, 5>, 3> kTable{{
      {"1", "1", "", "0", "0"},
      {"", "00", "10", "11", ""},
      {"0", "1", "", "0", "1"},
  }};
  return kTable[i.slot()][static_cast<std::size_t>(b)];
}

PathState ground_path(Index i) { return PathState{i, {}}; }

PathState normalized(PathState p) {
  while (!p.overrides.empty() && p.overrides.back() == ground_elem(p.ground, p.overrides.size() - 1)) {
    p.overrides.pop_back();
  }
  return p;
}

Signature reduce_signature(std::string_view word, const std::vector<std::size_t>& owners) {
  if (owners.size() != word.size()) throw std::invalid_argument("reduce_signature: owner list length mismatch");
  // Zeros wait on a stack for a later 1 to cancel them. A 1 arriving with
  // the stack empty can never be cancelled, since cancellation needs a 0 on
  // its left.
  Signature out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (word[k] == '0') {
      out.zeros.push_back(owners[k]);
    } else if (word[k] == '1') {
      if (out.zeros.empty()) {
        out.ones.push_back(owners[k]);
      } else {
        out.zeros.pop_back();
      }
    } else {
      throw std::invalid_argument("reduce_signature: word must be over {0,1}");
    }
  }
  return out;
}

Signature reduce_signature(std::string_view word) {
  std::vector<std::size_t> owners(word.size());
  for (std::size_t k = 0; k < owners.size(); ++k) owners[k] = k;
  return reduce_signature(word, owners);
}

std::size_t default_window(const PathState& p) { return p.overrides.size() + 4; }

namespace {

void append_factor(Index i, BElem b, std::size_t k, std::string& word, std::vector<std::size_t>& owners) {
  for (char c : symbols(i, b)) {
    word.push_back(c);
    owners.push_back(k);
  }
}

}  // namespace

Signature path_signature(Index i, const PathState& p, std::optional<std::size_t> window) {
  const std::size_t w = window.value_or(default_window(p));
  if (w < p.overrides.size()) throw std::invalid_argument("path_signature: window shorter than the override list");

  // Beyond the window the path is ground and has period 2, so the tail reads
  // ... P P P with P = sym(W+1) sym(W). If P reduces to 1^a 0^b with a >= b
  // the infinite repetition leaves 1s at infinity (never selectable, never
  // cancelling anything) followed by the zeros of the copy next to the window.
  std::string period;
  std::vector<std::size_t> period_owners;
  append_factor(i, p.at(w + 1), w + 1, period, period_owners);
  append_factor(i, p.at(w), w, period, period_owners);
  const Signature tail = reduce_signature(period, period_owners);
  if (tail.zeros.size() > tail.ones.size()) {
    throw std::logic_error("path_signature: ground tail does not stabilize");
  }

  std::string word;
  std::vector<std::size_t> owners;
  for (std::size_t owner : tail.zeros) {
    word.push_back('0');
    owners.push_back(owner);
  }
  for (std::size_t k = w; k-- > 0;) append_factor(i, p.at(k), k, word, owners);
  return reduce_signature(word, owners);
}

namespace {

PathState with_entry(const PathState& p, std::size_t k, BElem b) {
  PathState out = p;
  while (out.overrides.size() <= k) out.overrides.push_back(ground_elem(p.ground, out.overrides.size()));
  out.overrides[k] = b;
  return normalized(std::move(out));
}

}  // namespace

std::optional<PathState> f_path(Index i, const PathState& p, std::optional<std::size_t> window) {
  const Signature s = path_signature(i, p, window);
  if (s.zeros.empty()) return std::nullopt;
  const std::size_t k = s.zeros.front();
  const auto moved = f_b(i, p.at(k));
  if (!moved) throw std::logic_error("f_path: surviving 0 on a factor with phi = 0");
  return with_entry(p, k, *moved);
}

std::optional<PathState> e_path(Index i, const PathState& p, std::optional<std::size_t> window) {
  const Signature s = path_signature(i, p, window);
  if (s.ones.empty()) return std::nullopt;
  const std::size_t k = s.ones.back();
  const auto moved = e_b(i, p.at(k));
  if (!moved) throw std::logic_error("e_path: surviving 1 on a factor with eps = 0");
  return with_entry(p, k, *moved);
}

int eps_path(Index i, const PathState& p, std::optional<std::size_t> window) {
  return static_cast<int>(path_signature(i, p, window).ones.size());
}

int phi_path(Index i, const PathState& p, std::optional<std::size_t> window) {
  return static_cast<int>(path_signature(i, p, window).zeros.size());
}

AffineWeight wt_path(const PathState& p) {
  AffineWeight w = AffineWeight::fundamental(p.ground);
  for (std::size_t k = 0; k < p.overrides.size(); ++k) {
    w += wt_b(p.overrides[k]) - wt_b(ground_elem(p.ground, k));
  }
  return w.classical();
}

std::string to_literal(const PathState& p) {
  std::string out = "P" + std::to_string(p.ground.value()) + ":";
  for (std::size_t k = 0; k < p.overrides.size(); ++k) {
    if (k != 0) out += '|';
    out += name(p.overrides[k]);
  }
  return out;
}

PathState parse_path(std::string_view text) {
  if (text.size() < 3 || text[0] != 'P' || text[2] != ':' || text[1] < '0' || text[1] > '2') {
    throw LiteralError("path literal must start with P0:, P1: or P2:", 0);
  }
  PathState p{Index{text[1] - '0'}, {}};
  std::size_t pos = 3;
  if (pos == text.size()) return p;
  while (true) {
    const std::size_t bar = text.find('|', pos);
    const std::size_t end = bar == std::string_view::npos ? text.size() : bar;
    const auto b = parse_belem(text.substr(pos, end - pos));
    if (!b) throw LiteralError("unknown element '" + std::string(text.substr(pos, end - pos)) + "'", pos);
    p.overrides.push_back(*b);
    if (bar == std::string_view::npos) break;
    pos = bar + 1;
  }
  return normalized(std::move(p));
}

Index shifted_ground(Index i) { return Index{2 - i.value()}; }

PathState shift(const PathState& p) {
  PathState out{shifted_ground(p.ground), {}};
  if (p.overrides.size() > 1) out.overrides.assign(p.overrides.begin() + 1, p.overrides.end());
  return normalized(std::move(out));
}

ShiftCheckReport check_shift_decomposition(Index i, std::size_t depth) {
  const PathModel paths;
  const PathTensorModel tensor{PathModel{}, PerfectCrystalModel{}};
  const auto g = build_graph(paths, ground_path(i), depth, BuildOptions{1'000'000, i.value()});

  ShiftCheckReport report;
  auto split = [](const PathState& p) { return PathTensorModel::Element{shift(p), p.at(0)}; };
  auto mismatch = [&](const PathState& p, Index j, const char* op) {
    if (report.mismatches++ == 0) {
      report.first_mismatch = std::string(op) + std::to_string(j.value()) + " at " + to_literal(p);
    }
  };

  for (const PathState& p : g.elements) {
    ++report.nodes_checked;
    const auto t = split(p);
    for (Index j : kIndices) {
      const auto fp = f_path(j, p);
      const auto ft = tensor.f(j, t);
      if (fp.has_value() != ft.has_value() || (fp && !(split(*fp) == *ft))) mismatch(p, j, "f");
      const auto ep = e_path(j, p);
      const auto et = tensor.e(j, t);
      if (ep.has_value() != et.has_value() || (ep && !(split(*ep) == *et))) mismatch(p, j, "e");
      if (eps_path(j, p) != tensor.eps(j, t) || phi_path(j, p) != tensor.phi(j, t)) mismatch(p, j, "eps/phi ");
    }
  }
  return report;
}

}  // namespace c2crystal
