#pragma once

// Reference implementations used only by the tests. Each one reaches its
// answer by a different route from the library code it is compared with.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "c2crystal/cartan.hpp"
#include "c2crystal/perfect_crystal.hpp"

namespace oracle {

/// Deletes the left-most "01" until none is left.
std::string naive_reduce(std::string word);

/// Tensor rule on B (x) B computed by writing out both signatures and
/// cancelling "01" pairs by rescanning, not by comparing phi and eps.
struct TensorStep {
  std::optional<std::pair<c2crystal::BElem, c2crystal::BElem>> e;
  std::optional<std::pair<c2crystal::BElem, c2crystal::BElem>> f;
  int eps = 0;
  int phi = 0;
};
TensorStep tensor_by_signature(c2crystal::Index i, c2crystal::BElem left, c2crystal::BElem right);

/// eps_i / phi_i of an element of B (x) B by walking its i-string with the
/// library's tensor operators.
std::pair<int, int> tensor_string_lengths(c2crystal::Index i, c2crystal::BElem left, c2crystal::BElem right);

/// Number of reduced proper Young walls on Y_{Lambda_ground} whose added
/// blocks are exactly census = {0: c0, 1: c1, 2: c2}. Walls are built as
/// explicit stacks of rows and checked against the geometric rules directly.
std::size_t count_reduced_proper_walls(int ground, const std::array<int, 3>& census);

/// Multiplicity of Lambda_ground - (b0 alpha_0 + b1 alpha_1 + b2 alpha_2) in the
/// irreducible highest weight module, from Freudenthal's formula over the
/// affine root system (real roots of multiplicity 1, n delta of multiplicity 2).
std::int64_t freudenthal_multiplicity(int ground, const std::array<int, 3>& beta);

}  // namespace oracle
