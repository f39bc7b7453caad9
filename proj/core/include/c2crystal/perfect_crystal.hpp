#pragma once

// The five-element level-1 perfect crystal B of type C_2^(1).
//
//        2          1          1          2
//  (1,2) --> (1,-2) --> (2,-2) --> (2,-1) --> (-2,-1)
//
// plus the two 0-arrows (2,-1) -> (1,2) and (-2,-1) -> (1,-2). eps/phi are
// string lengths along these arrows.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "c2crystal/cartan.hpp"
#include "c2crystal/crystal.hpp"

namespace c2crystal {

/// Declaration order is the canonical total order.
enum class BElem : std::uint8_t { OneTwo, OneBarTwo, TwoBarTwo, TwoBarOne, BarTwoBarOne };

inline constexpr std::array<BElem, 5> kBElems{BElem::OneTwo, BElem::OneBarTwo, BElem::TwoBarTwo, BElem::TwoBarOne,
                                              BElem::BarTwoBarOne};

/// "1,2", "1,-2", "2,-2", "2,-1", "-2,-1".
std::string_view name(BElem b);
std::optional<BElem> parse_belem(std::string_view text);

std::optional<BElem> f_b(Index i, BElem b);
std::optional<BElem> e_b(Index i, BElem b);

/// (eps_i(b), phi_i(b)).
std::pair<int, int> eps_phi_b(Index i, BElem b);

/// Classical weight phi(b) - eps(b).
AffineWeight wt_b(BElem b);

/// sum_i eps_i(b) Lambda_i and sum_i phi_i(b) Lambda_i.
AffineWeight eps_vector(BElem b);
AffineWeight phi_vector(BElem b);

class PerfectCrystalModel {
 public:
  using Element = BElem;
  static constexpr bool kAffine = false;

  std::string name() const { return "b"; }
  AffineWeight wt(BElem b) const { return wt_b(b); }
  int eps(Index i, BElem b) const { return eps_phi_b(i, b).first; }
  int phi(Index i, BElem b) const { return eps_phi_b(i, b).second; }
  std::optional<BElem> e(Index i, BElem b) const { return e_b(i, b); }
  std::optional<BElem> f(Index i, BElem b) const { return f_b(i, b); }
  std::string key(BElem b) const { return std::string(c2crystal::name(b)); }
};

using TensorSquareModel = TensorModel<PerfectCrystalModel, PerfectCrystalModel>;

inline TensorSquareModel tensor_square_model() { return {PerfectCrystalModel{}, PerfectCrystalModel{}}; }

struct PerfectnessReport {
  int level = 1;
  bool tensor_square_connected = false;
  std::size_t tensor_square_component = 0;
  /// The weight found for condition (ii), if any.
  std::optional<AffineWeight> lambda0;
  bool level_bound = false;
  std::vector<BElem> minimal;
  bool eps_bijective = false;
  bool phi_bijective = false;
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// Evaluates the four perfectness conditions at the given level.
PerfectnessReport check_perfect(int level = 1);

}  // namespace c2crystal
