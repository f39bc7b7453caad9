#pragma once

// Young walls on the ground-state walls Y_{Lambda_0}, Y_{Lambda_1}, Y_{Lambda_2}.
//
// The building rules force every column to grow through the cycle
//
//   half layer --(other half)--> full layer --1--> one 1-block --1--> two 1-blocks --(0 or 2)--> half layer
//
// so a column is fully described by how many blocks were added (n) and, when
// the top layer is half filled by an added block, which half it is (tag).
// Columns are numbered from the right: column 0 is the right-most one.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "c2crystal/cartan.hpp"
#include "c2crystal/path.hpp"
#include "c2crystal/perfect_crystal.hpp"

namespace c2crystal {

enum class LoneTag : std::uint8_t { None, Lone0, Lone2 };

struct ColumnState {
  int n = 0;
  LoneTag tag = LoneTag::None;
  friend bool operator==(const ColumnState&, const ColumnState&) = default;
};

/// What sits on top of a column.
enum class ColumnPhase : std::uint8_t {
  HalfLayer,  ///< a lone 0 or lone 2 half-block
  FullLayer,  ///< a complete 0/2 layer
  OneBlock,   ///< a single 1-block on a full layer
  TwoBlocks,  ///< two stacked 1-blocks
};

struct Wall {
  Index ground{0};
  /// Column 0 first. Columns past the end are bare ground; the last stored
  /// column is never bare.
  std::vector<ColumnState> columns;

  ColumnState at(std::size_t j) const { return j < columns.size() ? columns[j] : ColumnState{}; }

  friend bool operator==(const Wall&, const Wall&) = default;
};

Wall ground_wall(Index i);

/// Drops trailing bare columns.
Wall normalized(Wall w);

/// Colour of the ground half-block under column j, or nullopt for Lambda_1,
/// whose ground is a 1-block.
std::optional<int> ground_color(Index ground, std::size_t j);

ColumnPhase phase(Index ground, const ColumnState& c);

/// Colour of the half-block on top when phase == HalfLayer, including the bare ground half.
std::optional<int> lone_color(Index ground, std::size_t j, const ColumnState& c);

/// One transition of the column automaton; nullopt when the block cannot go there.
std::optional<ColumnState> column_add(Index ground, std::size_t j, const ColumnState& c, Index color);
std::optional<ColumnState> column_remove(Index ground, std::size_t j, const ColumnState& c, Index color);

/// Added block colours, bottom to top, with complete layers listed as 0 then 2.
std::vector<int> column_colors(Index ground, std::size_t j, const ColumnState& c);

/// Unit-height column with a unit-thickness top.
bool is_full(const ColumnState& c, Index ground);

struct WallViolation {
  std::size_t column = 0;
  std::string detail;
};

/// Empty when w is a Young wall.
std::vector<WallViolation> validate_wall(const Wall& w);
bool is_valid(const Wall& w);

/// No two full columns of equal height. Assumes w is valid.
bool is_proper(const Wall& w);

enum class DeltaSemantics : std::uint8_t {
  /// Only the wall left after all four removals has to be a proper Young wall.
  FinalState,
  /// Every intermediate wall has to be a proper Young wall too.
  Successive,
};

/// Can one 0-, one 2- and two 1-blocks be taken off the top of column j?
/// Throws std::out_of_range when j is not a stored column.
bool has_removable_delta(const Wall& w, std::size_t j, DeltaSemantics semantics = DeltaSemantics::FinalState);

bool is_reduced(const Wall& w, DeltaSemantics semantics = DeltaSemantics::FinalState);

/// "1" per successive removable i-block followed by "0" per successive
/// admissible i-block, each step required to leave a proper Young wall.
std::string column_signature(Index i, const Wall& w, std::size_t j);

/// Reduced i-signature over columns m+1, ..., 0 (far left first).
Signature wall_signature(Index i, const Wall& w);

std::optional<Wall> f_wall(Index i, const Wall& w);
std::optional<Wall> e_wall(Index i, const Wall& w);
std::pair<int, int> eps_phi_wall(Index i, const Wall& w);

/// (m_0, m_1, m_2): added blocks of each colour.
RootCoordinates column_census(Index ground, std::size_t j, const ColumnState& c);
RootCoordinates block_census(const Wall& w);

/// Lambda_ground - sum_a m_a alpha_a.
AffineWeight wt_wall(const Wall& w);

/// Element of B read from the top unit of column j.
BElem read_column(Index ground, std::size_t j, const ColumnState& c);
PathState read_wall(const Wall& w);

/// "L<g>;c0=...;c1=...". The parser rejects anything the column automaton or
/// validate_wall refuses, reporting the offending token's offset.
std::string to_literal(const Wall& w);
Wall parse_wall(std::string_view text);

/// Text picture, columns left to right as on the page.
std::string render_ascii(const Wall& w);

class WallModel {
 public:
  using Element = Wall;
  static constexpr bool kAffine = true;

  std::string name() const { return "wall"; }
  AffineWeight wt(const Wall& w) const { return wt_wall(w); }
  int eps(Index i, const Wall& w) const { return eps_phi_wall(i, w).first; }
  int phi(Index i, const Wall& w) const { return eps_phi_wall(i, w).second; }
  std::optional<Wall> e(Index i, const Wall& w) const { return e_wall(i, w); }
  std::optional<Wall> f(Index i, const Wall& w) const { return f_wall(i, w); }
  std::string key(const Wall& w) const { return to_literal(w); }
};

}  // namespace c2crystal
