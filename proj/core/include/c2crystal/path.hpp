#pragma once

// Lambda_i-paths: sequences (..., p(2), p(1), p(0)) in B that agree with the
// ground-state path p_{Lambda_i} from some point on. Only the finitely many
// leading entries that differ are stored.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "c2crystal/cartan.hpp"
#include "c2crystal/crystal.hpp"
#include "c2crystal/perfect_crystal.hpp"

namespace c2crystal {

/// p_{Lambda_i}(k).
BElem ground_elem(Index i, std::size_t k);

/// The 0/1 word that replaces b when reading the i-signature: "1"*eps + "0"*phi.
std::string_view symbols(Index i, BElem b);

struct PathState {
  Index ground{0};
  /// p(0), p(1), ..., p(L-1). Trailing ground-equal entries are trimmed.
  std::vector<BElem> overrides;

  BElem at(std::size_t k) const { return k < overrides.size() ? overrides[k] : ground_elem(ground, k); }

  friend bool operator==(const PathState&, const PathState&) = default;
};

PathState ground_path(Index i);

/// Drops trailing entries that agree with the ground-state path.
PathState normalized(PathState p);

struct Signature {
  /// Factor index owning each surviving symbol, in reading order.
  std::vector<std::size_t> ones;
  std::vector<std::size_t> zeros;
};

/// Cancels "01" pairs in `word`. `owners[k]` names the factor of word[k].
Signature reduce_signature(std::string_view word, const std::vector<std::size_t>& owners);

/// Same, with owners equal to the character offsets.
Signature reduce_signature(std::string_view word);

/// Window used when none is given: L + 4 factors.
std::size_t default_window(const PathState& p);

/// Reduced i-signature of p, read over factors W-1, ..., 0 with the tail k >= W
/// folded in analytically. W must be at least the override count.
Signature path_signature(Index i, const PathState& p, std::optional<std::size_t> window = std::nullopt);

std::optional<PathState> f_path(Index i, const PathState& p, std::optional<std::size_t> window = std::nullopt);
std::optional<PathState> e_path(Index i, const PathState& p, std::optional<std::size_t> window = std::nullopt);
int eps_path(Index i, const PathState& p, std::optional<std::size_t> window = std::nullopt);
int phi_path(Index i, const PathState& p, std::optional<std::size_t> window = std::nullopt);

/// Classical weight; the delta coefficient is always 0.
AffineWeight wt_path(const PathState& p);

/// "P<g>:<b0>|<b1>|...". The parser normalizes.
std::string to_literal(const PathState& p);
PathState parse_path(std::string_view text);

class PathModel {
 public:
  using Element = PathState;
  static constexpr bool kAffine = false;

  std::string name() const { return "path"; }
  AffineWeight wt(const PathState& p) const { return wt_path(p); }
  int eps(Index i, const PathState& p) const { return eps_path(i, p); }
  int phi(Index i, const PathState& p) const { return phi_path(i, p); }
  std::optional<PathState> e(Index i, const PathState& p) const { return e_path(i, p); }
  std::optional<PathState> f(Index i, const PathState& p) const { return f_path(i, p); }
  std::string key(const PathState& p) const { return to_literal(p); }
};

/// sigma(i) = 2 - i: the ground of the path left after removing p(0).
Index shifted_ground(Index i);

/// k -> p(k+1), a path over the shifted ground.
PathState shift(const PathState& p);

using PathTensorModel = TensorModel<PathModel, PerfectCrystalModel>;

struct ShiftCheckReport {
  std::size_t nodes_checked = 0;
  std::size_t mismatches = 0;
  std::string first_mismatch;
  bool ok() const noexcept { return mismatches == 0; }
};

/// For every path in the depth-closure of p_{Lambda_i}, checks that
/// p -> shift(p) (x) p(0) intertwines e_j and f_j with the tensor rule.
ShiftCheckReport check_shift_decomposition(Index i, std::size_t depth);

}  // namespace c2crystal
