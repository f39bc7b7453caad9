#include "c2crystal/young_wall.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "c2crystal/literal_error.hpp"

namespace c2crystal {

namespace {

constexpr bool is_lambda1(Index ground) { return ground.value() == 1; }

constexpr int other_half(int color) { return 2 - color; }

LoneTag tag_for(int color) { return color == 0 ? LoneTag::Lone0 : LoneTag::Lone2; }

std::optional<int> tag_color(LoneTag tag) {
  switch (tag) {
    case LoneTag::Lone0: return 0;
    case LoneTag::Lone2: return 2;
    case LoneTag::None: break;
  }
  return std::nullopt;
}

bool tag_expected(Index ground, int n) {
  if (is_lambda1(ground)) return n % 4 == 2;
  return n >= 4 && n % 4 == 0;
}

Wall with_column(const Wall& w, std::size_t j, const ColumnState& c) {
  Wall out = w;
  if (out.columns.size() <= j) out.columns.resize(j + 1);
  out.columns[j] = c;
  return normalized(std::move(out));
}

bool proper_young_wall(const Wall& w) { return is_valid(w) && is_proper(w); }

}  // namespace

Wall ground_wall(Index i) { return Wall{i, {}}; }

Wall normalized(Wall w) {
  while (!w.columns.empty() && w.columns.back() == ColumnState{}) w.columns.pop_back();
  return w;
}

std::optional<int> ground_color(Index ground, std::size_t j) {
  if (is_lambda1(ground)) return std::nullopt;
  const bool even = j % 2 == 0;
  if (ground.value() == 0) return even ? 2 : 0;
  return even ? 0 : 2;
}

ColumnPhase phase(Index ground, const ColumnState& c) {
  static constexpr std::array<ColumnPhase, 4> kOuter{ColumnPhase::HalfLayer, ColumnPhase::FullLayer,
                                                     ColumnPhase::OneBlock, ColumnPhase::TwoBlocks};
  static constexpr std::array<ColumnPhase, 4> kMiddle{ColumnPhase::OneBlock, ColumnPhase::TwoBlocks,
                                                      ColumnPhase::HalfLayer, ColumnPhase::FullLayer};
  const auto r = static_cast<std::size_t>(c.n % 4);
  return is_lambda1(ground) ? kMiddle[r] : kOuter[r];
}

std::optional<int> lone_color(Index ground, std::size_t j, const ColumnState& c) {
  if (phase(ground, c) != ColumnPhase::HalfLayer) return std::nullopt;
  if (auto t = tag_color(c.tag)) return t;
  if (c.n == 0) return ground_color(ground, j);
  return std::nullopt;
}

std::optional<ColumnState> column_add(Index ground, std::size_t j, const ColumnState& c, Index color) {
  const int i = color.value();
  switch (phase(ground, c)) {
    case ColumnPhase::HalfLayer: {
      const auto lone = lone_color(ground, j, c);
      if (!lone || i == 1 || i != other_half(*lone)) return std::nullopt;
      return ColumnState{c.n + 1, LoneTag::None};
    }
    case ColumnPhase::FullLayer:
    case ColumnPhase::OneBlock:
      if (i != 1) return std::nullopt;
      return ColumnState{c.n + 1, LoneTag::None};
    case ColumnPhase::TwoBlocks:
      if (i == 1) return std::nullopt;
      return ColumnState{c.n + 1, tag_for(i)};
  }
  return std::nullopt;
}

std::optional<ColumnState> column_remove(Index ground, std::size_t j, const ColumnState& c, Index color) {
  const int i = color.value();
  if (c.n == 0) return std::nullopt;
  switch (phase(ground, c)) {
    case ColumnPhase::HalfLayer: {
      const auto lone = tag_color(c.tag);
      if (!lone || *lone != i) return std::nullopt;
      return ColumnState{c.n - 1, LoneTag::None};
    }
    case ColumnPhase::FullLayer: {
      if (i == 1) return std::nullopt;
      const int remaining = other_half(i);
      if (c.n - 1 == 0) {
        // Only the added half can go; the ground half stays.
        if (ground_color(ground, j) != remaining) return std::nullopt;
        return ColumnState{};
      }
      return ColumnState{c.n - 1, tag_for(remaining)};
    }
    case ColumnPhase::OneBlock:
    case ColumnPhase::TwoBlocks:
      if (i != 1) return std::nullopt;
      return ColumnState{c.n - 1, LoneTag::None};
  }
  return std::nullopt;
}

std::vector<int> column_colors(Index ground, std::size_t j, const ColumnState& c) {
  std::vector<int> out;
  if (c.n <= 0) return out;
  const int k = c.n - 1;
  const auto partial = tag_color(c.tag);
  if (is_lambda1(ground)) {
    out.push_back(1);
    for (int s = 0; s < k; ++s) {
      switch (s % 4) {
        case 0: out.push_back(s + 1 < k ? 0 : partial.value_or(0)); break;
        case 1: out.push_back(2); break;
        default: out.push_back(1); break;
      }
    }
  } else {
    out.push_back(other_half(ground_color(ground, j).value()));
    for (int s = 0; s < k; ++s) {
      switch (s % 4) {
        case 0:
        case 1: out.push_back(1); break;
        case 2: out.push_back(s + 1 < k ? 0 : partial.value_or(0)); break;
        default: out.push_back(2); break;
      }
    }
  }
  return out;
}

bool is_full(const ColumnState& c, Index /*ground*/) { return c.n % 4 == 1 || c.n % 4 == 3; }

std::vector<WallViolation> validate_wall(const Wall& w) {
  std::vector<WallViolation> out;
  const std::size_t m = w.columns.size();
  if (m != 0 && w.columns.back() == ColumnState{}) {
    out.push_back({m - 1, "trailing bare column (wall is not normalized)"});
  }
  bool columns_ok = true;
  for (std::size_t j = 0; j < m; ++j) {
    const ColumnState& c = w.columns[j];
    if (c.n < 0) {
      out.push_back({j, "negative block count"});
      columns_ok = false;
    } else if ((c.tag != LoneTag::None) != tag_expected(w.ground, c.n)) {
      out.push_back({j, "half-layer tag inconsistent with block count " + std::to_string(c.n)});
      columns_ok = false;
    }
  }
  if (!columns_ok) return out;
  for (std::size_t j = 0; j < m; ++j) {
    const ColumnState here = w.at(j);
    const ColumnState left = w.at(j + 1);
    if (left.n > here.n) {
      out.push_back({j + 1, "column " + std::to_string(j + 1) + " is higher than column " + std::to_string(j)});
      continue;
    }
    // Two half layers side by side at the same level must be of opposite halves.
    if (left.n == here.n && phase(w.ground, here) == ColumnPhase::HalfLayer &&
        lone_color(w.ground, j, here) == lone_color(w.ground, j + 1, left)) {
      out.push_back({j + 1, "half layers of the same colour side by side in columns " + std::to_string(j + 1) +
                                " and " + std::to_string(j)});
    }
  }
  return out;
}

bool is_valid(const Wall& w) { return validate_wall(w).empty(); }

bool is_proper(const Wall& w) {
  for (std::size_t j = 0; j < w.columns.size(); ++j) {
    if (w.at(j + 1).n == w.columns[j].n && is_full(w.columns[j], w.ground)) return false;
  }
  return true;
}

bool has_removable_delta(const Wall& w, std::size_t j, DeltaSemantics semantics) {
  if (j >= w.columns.size()) throw std::out_of_range("has_removable_delta: column index out of range");
  if (w.columns[j].n < 4) return false;

  // Budget of blocks still to take off: one 0, two 1s, one 2.
  std::array<int, 3> budget{1, 2, 1};
  auto search = [&](auto&& self, const Wall& current, int removed) -> bool {
    if (removed == 4) return proper_young_wall(current);
    for (Index color : kIndices) {
      if (budget[color.slot()] == 0) continue;
      const auto next = column_remove(current.ground, j, current.at(j), color);
      if (!next) continue;
      const Wall candidate = with_column(current, j, *next);
      if (semantics == DeltaSemantics::Successive && !proper_young_wall(candidate)) continue;
      --budget[color.slot()];
      const bool found = self(self, candidate, removed + 1);
      ++budget[color.slot()];
      if (found) return true;
    }
    return false;
  };
  return search(search, w, 0);
}

bool is_reduced(const Wall& w, DeltaSemantics semantics) {
  for (std::size_t j = 0; j < w.columns.size(); ++j) {
    if (has_removable_delta(w, j, semantics)) return false;
  }
  return true;
}

std::string column_signature(Index i, const Wall& w, std::size_t j) {
  std::string out;
  Wall current = w;
  while (auto next = column_remove(w.ground, j, current.at(j), i)) {
    Wall candidate = with_column(current, j, *next);
    if (!proper_young_wall(candidate)) break;
    out += '1';
    current = std::move(candidate);
  }
  current = w;
  while (auto next = column_add(w.ground, j, current.at(j), i)) {
    Wall candidate = with_column(current, j, *next);
    if (!proper_young_wall(candidate)) break;
    out += '0';
    current = std::move(candidate);
  }
  return out;
}

Signature wall_signature(Index i, const Wall& w) {
  std::string word;
  std::vector<std::size_t> owners;
  for (std::size_t j = w.columns.size() + 2; j-- > 0;) {
    for (char c : column_signature(i, w, j)) {
      word.push_back(c);
      owners.push_back(j);
    }
  }
  return reduce_signature(word, owners);
}

std::optional<Wall> f_wall(Index i, const Wall& w) {
  const Signature s = wall_signature(i, w);
  if (s.zeros.empty()) return std::nullopt;
  const std::size_t j = s.zeros.front();
  return with_column(w, j, column_add(w.ground, j, w.at(j), i).value());
}

std::optional<Wall> e_wall(Index i, const Wall& w) {
  const Signature s = wall_signature(i, w);
  if (s.ones.empty()) return std::nullopt;
  const std::size_t j = s.ones.back();
  return with_column(w, j, column_remove(w.ground, j, w.at(j), i).value());
}

std::pair<int, int> eps_phi_wall(Index i, const Wall& w) {
  const Signature s = wall_signature(i, w);
  return {static_cast<int>(s.ones.size()), static_cast<int>(s.zeros.size())};
}

RootCoordinates column_census(Index ground, std::size_t j, const ColumnState& c) {
  RootCoordinates m{0, 0, 0};
  for (int color : column_colors(ground, j, c)) ++m[static_cast<std::size_t>(color)];
  return m;
}

RootCoordinates block_census(const Wall& w) {
  RootCoordinates m{0, 0, 0};
  for (std::size_t j = 0; j < w.columns.size(); ++j) {
    const RootCoordinates c = column_census(w.ground, j, w.columns[j]);
    for (std::size_t a = 0; a < 3; ++a) m[a] += c[a];
  }
  return m;
}

AffineWeight wt_wall(const Wall& w) {
  return AffineWeight::fundamental(w.ground) - root_lattice_weight(block_census(w));
}

BElem read_column(Index ground, std::size_t j, const ColumnState& c) {
  switch (phase(ground, c)) {
    case ColumnPhase::HalfLayer:
      return lone_color(ground, j, c).value() == 0 ? BElem::OneTwo : BElem::BarTwoBarOne;
    case ColumnPhase::FullLayer: return BElem::OneBarTwo;
    case ColumnPhase::OneBlock: return BElem::TwoBarTwo;
    case ColumnPhase::TwoBlocks: return BElem::TwoBarOne;
  }
  throw std::logic_error("read_column: unreachable");
}

PathState read_wall(const Wall& w) {
  PathState p{w.ground, {}};
  p.overrides.reserve(w.columns.size());
  for (std::size_t j = 0; j < w.columns.size(); ++j) p.overrides.push_back(read_column(w.ground, j, w.columns[j]));
  return normalized(std::move(p));
}

std::string to_literal(const Wall& w) {
  std::string out = "L" + std::to_string(w.ground.value()) + ";";
  bool first = true;
  for (std::size_t j = 0; j < w.columns.size(); ++j) {
    if (w.columns[j] == ColumnState{}) continue;
    if (!first) out += ';';
    first = false;
    out += 'c' + std::to_string(j) + '=';
    const auto colors = column_colors(w.ground, j, w.columns[j]);
    for (std::size_t k = 0; k < colors.size(); ++k) {
      if (k != 0) out += ',';
      out += static_cast<char>('0' + colors[k]);
    }
  }
  return out;
}

Wall parse_wall(std::string_view text) {
  if (text.size() < 3 || text[0] != 'L' || text[2] != ';' || text[1] < '0' || text[1] > '2') {
    throw LiteralError("wall literal must start with L0;, L1; or L2;", 0);
  }
  Wall w{Index{text[1] - '0'}, {}};
  std::map<std::size_t, std::size_t> token_at;  // column -> offset of its token
  std::size_t pos = 3;
  std::optional<std::size_t> previous;
  while (pos < text.size()) {
    const std::size_t semi = text.find(';', pos);
    const std::size_t end = semi == std::string_view::npos ? text.size() : semi;
    const std::string_view token = text.substr(pos, end - pos);
    const std::size_t eq = token.find('=');
    if (token.size() < 3 || token[0] != 'c' || eq == std::string_view::npos || eq < 2) {
      throw LiteralError("expected c<index>=<colours>", pos);
    }
    std::size_t j = 0;
    for (std::size_t k = 1; k < eq; ++k) {
      if (token[k] < '0' || token[k] > '9' || j > 100'000) throw LiteralError("bad column index", pos);
      j = j * 10 + static_cast<std::size_t>(token[k] - '0');
    }
    if (previous && j <= *previous) throw LiteralError("column indices must increase", pos);
    previous = j;
    token_at[j] = pos;

    ColumnState c;
    for (std::size_t k = eq + 1; k < token.size(); k += 2) {
      const char ch = token[k];
      if (ch < '0' || ch > '2') throw LiteralError("expected a colour 0, 1 or 2", pos + k);
      if (k + 1 < token.size() && token[k + 1] != ',') throw LiteralError("expected ',' between colours", pos + k + 1);
      if (k + 2 == token.size()) throw LiteralError("trailing comma in colour list", pos + k + 1);
      const auto next = column_add(w.ground, j, c, Index{ch - '0'});
      if (!next) {
        throw LiteralError("a " + std::string(1, ch) + "-block cannot be placed on column " + std::to_string(j), pos + k);
      }
      c = *next;
    }
    if (w.columns.size() <= j) w.columns.resize(j + 1);
    w.columns[j] = c;
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
    if (pos == text.size()) throw LiteralError("empty column token", pos);
  }
  w = normalized(std::move(w));

  const auto violations = validate_wall(w);
  if (!violations.empty()) {
    const auto it = token_at.lower_bound(violations.front().column);
    throw LiteralError(violations.front().detail, it == token_at.end() ? text.size() : it->second);
  }
  return w;
}

namespace {

// Glyphs bottom to top for one column, ground included.
std::vector<std::string> column_glyphs(Index ground, std::size_t j, const ColumnState& c) {
  auto half = [](int color) { return color == 0 ? std::string("0.") : std::string(".2"); };
  std::vector<std::string> out;
  const auto colors = column_colors(ground, j, c);
  std::size_t k = 0;
  if (is_lambda1(ground)) {
    out.push_back("11");
  } else {
    out.push_back(c.n == 0 ? half(ground_color(ground, j).value()) : "02");
    k = 1;
  }
  while (k < colors.size()) {
    if (colors[k] == 1) {
      out.push_back("11");
      ++k;
    } else if (k + 1 < colors.size() && colors[k + 1] != 1) {
      out.push_back("02");
      k += 2;
    } else {
      out.push_back(half(colors[k]));
      ++k;
    }
  }
  return out;
}

}  // namespace

std::string render_ascii(const Wall& w) {
  const std::size_t shown = w.columns.size() + 1;
  std::vector<std::vector<std::string>> glyphs;
  std::size_t height = 0;
  for (std::size_t j = shown; j-- > 0;) {
    glyphs.push_back(column_glyphs(w.ground, j, w.at(j)));
    height = std::max(height, glyphs.back().size());
  }
  std::ostringstream os;
  for (std::size_t row = height; row-- > 0;) {
    for (const auto& col : glyphs) os << ' ' << (row < col.size() ? col[row] : "  ") << ' ';
    os << '\n';
  }
  for (std::size_t j = 0; j < shown; ++j) os << "====";
  os << '\n';
  for (std::size_t j = shown; j-- > 0;) {
    std::string label = "c" + std::to_string(j);
    while (label.size() < 4) label = ' ' + label;
    os << label;
  }
  os << '\n';
  return os.str();
}

}  // namespace c2crystal
