#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace oracle {

using c2crystal::BElem;
using c2crystal::Index;

std::string naive_reduce(std::string word) {
  for (std::size_t at = word.find("01"); at != std::string::npos; at = word.find("01")) word.erase(at, 2);
  return word;
}

namespace {

struct Token {
  char symbol;
  int owner;
};

std::vector<Token> reduce_tokens(std::vector<Token> tokens) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < tokens.size(); ++k) {
      if (tokens[k].symbol == '0' && tokens[k + 1].symbol == '1') {
        tokens.erase(tokens.begin() + static_cast<std::ptrdiff_t>(k), tokens.begin() + static_cast<std::ptrdiff_t>(k) + 2);
        changed = true;
        break;
      }
    }
  }
  return tokens;
}

}  // namespace

TensorStep tensor_by_signature(Index i, BElem left, BElem right) {
  std::vector<Token> tokens;
  const std::array<BElem, 2> factors{left, right};
  for (int owner = 0; owner < 2; ++owner) {
    const auto [eps, phi] = c2crystal::eps_phi_b(i, factors[static_cast<std::size_t>(owner)]);
    for (int k = 0; k < eps; ++k) tokens.push_back({'1', owner});
    for (int k = 0; k < phi; ++k) tokens.push_back({'0', owner});
  }
  const auto reduced = reduce_tokens(tokens);

  TensorStep step;
  for (const Token& t : reduced) (t.symbol == '1' ? step.eps : step.phi)++;
  auto moved = [&](int owner, bool raise) -> std::optional<std::pair<BElem, BElem>> {
    std::array<BElem, 2> out = factors;
    const auto b = raise ? c2crystal::e_b(i, out[static_cast<std::size_t>(owner)])
                         : c2crystal::f_b(i, out[static_cast<std::size_t>(owner)]);
    if (!b) return std::nullopt;
    out[static_cast<std::size_t>(owner)] = *b;
    return std::make_pair(out[0], out[1]);
  };
  for (auto it = reduced.rbegin(); it != reduced.rend(); ++it) {
    if (it->symbol == '1') {
      step.e = moved(it->owner, true);
      break;
    }
  }
  for (const Token& t : reduced) {
    if (t.symbol == '0') {
      step.f = moved(t.owner, false);
      break;
    }
  }
  return step;
}

std::pair<int, int> tensor_string_lengths(Index i, BElem left, BElem right) {
  const auto square = c2crystal::tensor_square_model();
  using Pair = c2crystal::TensorSquareModel::Element;
  int eps = 0;
  for (auto x = square.e(i, Pair{left, right}); x; x = square.e(i, *x)) ++eps;
  int phi = 0;
  for (auto x = square.f(i, Pair{left, right}); x; x = square.f(i, *x)) ++phi;
  return {eps, phi};
}

// ---------------------------------------------------------------------------
// Young walls as explicit row stacks.
//
// Heights are measured in half units: a 0/2 row is one unit tall, a 1-block
// half a unit.

namespace {

enum class Row { Full, Lone0, Lone2, One };

struct Column {
  std::vector<Row> rows;  // bottom to top, ground row first
  Row ground_row = Row::One;
  bool ground_full = false;  // the ground half-layer has been completed by an added block
};

using Stack = std::vector<Column>;  // column 0 first

int ground_half(int ground, std::size_t j) {
  if (ground == 0) return j % 2 == 0 ? 2 : 0;
  return j % 2 == 0 ? 0 : 2;
}

Column bare(int ground, std::size_t j) {
  if (ground == 1) return Column{{Row::One}, Row::One, false};
  const Row half = ground_half(ground, j) == 0 ? Row::Lone0 : Row::Lone2;
  return Column{{half}, half, false};
}

int height(const Column& c) {
  int h = 0;
  for (Row r : c.rows) h += r == Row::One ? 1 : 2;
  return h;
}

bool top_is_lone(const Column& c) { return c.rows.back() == Row::Lone0 || c.rows.back() == Row::Lone2; }

bool is_full_column(const Column& c) {
  if (height(c) % 2 != 0) return false;
  const std::size_t s = c.rows.size();
  if (c.rows.back() == Row::Full) return true;
  return s >= 2 && c.rows[s - 1] == Row::One && c.rows[s - 2] == Row::One;
}

// Places one block of `color` on top if the building rules allow it.
std::optional<Column> place(Column c, int color) {
  const Row top = c.rows.back();
  const std::size_t s = c.rows.size();
  if (top == Row::Lone0 || top == Row::Lone2) {
    const int lone = top == Row::Lone0 ? 0 : 2;
    if (color != 2 - lone || color == 1) return std::nullopt;
    if (s == 1) c.ground_full = true;
    c.rows.back() = Row::Full;
    return c;
  }
  if (top == Row::Full) {
    if (color != 1) return std::nullopt;
    c.rows.push_back(Row::One);
    return c;
  }
  const bool two_ones = s >= 2 && c.rows[s - 2] == Row::One;
  if (!two_ones) {
    if (color != 1) return std::nullopt;
    c.rows.push_back(Row::One);
    return c;
  }
  if (color == 1) return std::nullopt;
  c.rows.push_back(color == 0 ? Row::Lone0 : Row::Lone2);
  return c;
}

// Takes one added block of `color` off the top.
std::optional<Column> take(Column c, int color) {
  const Row top = c.rows.back();
  const std::size_t s = c.rows.size();
  if (top == Row::One) {
    if (color != 1 || s == 1) return std::nullopt;  // a lone One row is the Lambda_1 ground
    c.rows.pop_back();
    return c;
  }
  if (top == Row::Lone0 || top == Row::Lone2) {
    if (s == 1 || color != (top == Row::Lone0 ? 0 : 2)) return std::nullopt;
    c.rows.pop_back();
    return c;
  }
  if (color == 1) return std::nullopt;
  const Row remaining = color == 0 ? Row::Lone2 : Row::Lone0;
  if (s == 1) {
    // Completed ground layer: only the added half may go.
    if (remaining != c.ground_row) return std::nullopt;
    c.ground_full = false;
  }
  c.rows.back() = remaining;
  return c;
}

bool valid(const Stack& wall, int ground) {
  const std::size_t m = wall.size();
  for (std::size_t j = 0; j < m; ++j) {
    const Column& right = wall[j];
    const Column left = j + 1 < m ? wall[j + 1] : bare(ground, j + 1);
    if (height(left) > height(right)) return false;
    if (height(left) == height(right) && top_is_lone(right)) {
      if (!top_is_lone(left) || left.rows.back() == right.rows.back()) return false;
    }
  }
  return true;
}

bool proper(const Stack& wall) {
  std::vector<int> full_heights;
  for (const Column& c : wall) {
    if (is_full_column(c)) full_heights.push_back(height(c));
  }
  std::sort(full_heights.begin(), full_heights.end());
  return std::adjacent_find(full_heights.begin(), full_heights.end()) == full_heights.end();
}

bool removable_delta(const Stack& wall, std::size_t j, int ground) {
  std::array<int, 3> budget{1, 2, 1};
  std::function<bool(const Stack&, int)> search = [&](const Stack& current, int removed) {
    if (removed == 4) return valid(current, ground) && proper(current);
    for (int color = 0; color < 3; ++color) {
      if (budget[static_cast<std::size_t>(color)] == 0) continue;
      auto next = take(current[j], color);
      if (!next) continue;
      Stack candidate = current;
      candidate[j] = *next;
      --budget[static_cast<std::size_t>(color)];
      const bool found = search(candidate, removed + 1);
      ++budget[static_cast<std::size_t>(color)];
      if (found) return true;
    }
    return false;
  };
  return search(wall, 0);
}

// Bottom-to-top rows with the ground flag: equal walls compare equal.
using Shape = std::vector<std::pair<std::vector<Row>, bool>>;

Shape shape_of(const Stack& wall) {
  Shape s;
  for (const Column& c : wall) s.emplace_back(c.rows, c.ground_full);
  while (!s.empty() && s.back().first.size() == 1 && !s.back().second) s.pop_back();
  return s;
}

}  // namespace

std::size_t count_reduced_proper_walls(int ground, const std::array<int, 3>& census) {
  std::set<Shape> found;
  const int total = census[0] + census[1] + census[2];

  // Enumerate the stack of column j given the budget left, then move left.
  std::function<void(Stack&, std::array<int, 3>&, std::size_t)> next_column;
  std::function<void(Stack&, std::array<int, 3>&, std::size_t, Column)> grow;

  grow = [&](Stack& wall, std::array<int, 3>& left, std::size_t j, Column c) {
    // Option 1: stop growing this column. Nothing can stand to the left of a
    // bare column, so a bare column ends the wall.
    const bool is_bare = c.rows.size() == 1 && !c.ground_full;
    wall.push_back(c);
    const bool monotone = j == 0 || height(wall[j]) <= height(wall[j - 1]);
    if (monotone) {
      if (left == std::array<int, 3>{0, 0, 0}) {
        if (valid(wall, ground) && proper(wall)) {
          bool reduced = true;
          for (std::size_t k = 0; k < wall.size() && reduced; ++k) reduced = !removable_delta(wall, k, ground);
          if (reduced) found.insert(shape_of(wall));
        }
      } else if (!is_bare) {
        next_column(wall, left, j + 1);
      }
    }
    wall.pop_back();
    // Option 2: add one more block.
    for (int color = 0; color < 3; ++color) {
      if (left[static_cast<std::size_t>(color)] == 0) continue;
      auto bigger = place(c, color);
      if (!bigger) continue;
      if (j > 0 && height(*bigger) > height(wall[j - 1])) continue;
      --left[static_cast<std::size_t>(color)];
      grow(wall, left, j, *bigger);
      ++left[static_cast<std::size_t>(color)];
    }
  };
  next_column = [&](Stack& wall, std::array<int, 3>& left, std::size_t j) {
    if (static_cast<int>(j) > total) return;
    grow(wall, left, j, bare(ground, j));
  };

  Stack wall;
  std::array<int, 3> left = census;
  next_column(wall, left, 0);
  return found.size();
}

}  // namespace oracle

namespace oracle {

namespace {

using Beta = std::array<int, 3>;

// (alpha_i | alpha_j) = d_i a_ij with d = (2, 1, 2).
constexpr std::array<std::array<int, 3>, 3> kForm{{{4, -2, 0}, {-2, 2, -2}, {0, -2, 4}}};
constexpr std::array<int, 3> kSymmetrizer{2, 1, 2};

std::int64_t form(const Beta& x, const Beta& y) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) s += static_cast<std::int64_t>(x[i]) * kForm[i][j] * y[j];
  }
  return s;
}

bool nonnegative(const Beta& b) { return b[0] >= 0 && b[1] >= 0 && b[2] >= 0; }

// Positive roots with multiplicity whose delta-part is at most `depth`.
std::vector<std::pair<Beta, int>> positive_roots(int depth) {
  const std::array<Beta, 4> finite{{{0, 1, 0}, {0, 0, 1}, {0, 1, 1}, {0, 2, 1}}};
  std::vector<std::pair<Beta, int>> roots;
  for (const Beta& a : finite) roots.push_back({a, 1});
  for (int n = 1; n <= depth; ++n) {
    const Beta nd{n, 2 * n, n};
    roots.push_back({nd, 2});
    for (const Beta& a : finite) {
      roots.push_back({{nd[0] + a[0], nd[1] + a[1], nd[2] + a[2]}, 1});
      roots.push_back({{nd[0] - a[0], nd[1] - a[1], nd[2] - a[2]}, 1});
    }
  }
  return roots;
}

}  // namespace

std::int64_t freudenthal_multiplicity(int ground, const Beta& beta) {
  const int depth = std::max({beta[0], (beta[1] + 1) / 2, beta[2]}) + 1;
  const auto roots = positive_roots(depth);
  // (Lambda | beta) and (rho | beta).
  auto lambda = [&](const Beta& b) { return static_cast<std::int64_t>(kSymmetrizer[static_cast<std::size_t>(ground)]) * b[static_cast<std::size_t>(ground)]; };
  auto rho = [](const Beta& b) {
    return static_cast<std::int64_t>(kSymmetrizer[0]) * b[0] + kSymmetrizer[1] * b[1] + kSymmetrizer[2] * b[2];
  };

  std::map<Beta, std::int64_t> memo;
  std::function<std::int64_t(const Beta&)> mult = [&](const Beta& b) -> std::int64_t {
    if (!nonnegative(b)) return 0;
    if (b == Beta{0, 0, 0}) return 1;
    if (auto it = memo.find(b); it != memo.end()) return it->second;
    const std::int64_t lhs = 2 * (lambda(b) + rho(b)) - form(b, b);
    std::int64_t rhs = 0;
    for (const auto& [a, m] : roots) {
      for (int k = 1;; ++k) {
        const Beta higher{b[0] - k * a[0], b[1] - k * a[1], b[2] - k * a[2]};
        if (!nonnegative(higher)) break;
        rhs += m * (lambda(a) - form(b, a) + k * form(a, a)) * mult(higher);
      }
    }
    rhs *= 2;
    const std::int64_t value = lhs == 0 ? 0 : rhs / lhs;
    memo[b] = value;
    return value;
  };
  return mult(beta);
}

}  // namespace oracle
