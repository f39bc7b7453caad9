#pragma once

// Cartan datum of the affine algebra of type C_2^(1).
//
// Weights live in the basis {Lambda_0, Lambda_1, Lambda_2, delta} of the
// weight lattice P; coroots in {h_0, h_1, h_2, d}. Everything is exact integer
// arithmetic and every value type here is immutable once built.

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace c2crystal {

/// A node of the Dynkin diagram, i.e. an element of I = {0, 1, 2}.
class Index {
 public:
  constexpr explicit Index(int value) : value_(value) {
    if (value < 0 || value > 2) throw std::out_of_range("Index must be 0, 1 or 2");
  }

  constexpr int value() const noexcept { return value_; }
  constexpr std::size_t slot() const noexcept { return static_cast<std::size_t>(value_); }

  friend constexpr auto operator<=>(Index, Index) = default;

 private:
  int value_;
};

inline constexpr std::array<Index, 3> kIndices{Index{0}, Index{1}, Index{2}};

std::ostream& operator<<(std::ostream& os, Index i);

/// Element of P written as l0*Lambda_0 + l1*Lambda_1 + l2*Lambda_2 + d*delta.
struct AffineWeight {
  std::int64_t lambda0 = 0;
  std::int64_t lambda1 = 0;
  std::int64_t lambda2 = 0;
  std::int64_t delta = 0;

  static AffineWeight fundamental(Index i);
  static AffineWeight null_root();

  /// Projection to the classical lattice (drops the delta coefficient).
  AffineWeight classical() const noexcept { return {lambda0, lambda1, lambda2, 0}; }

  std::int64_t coefficient(Index i) const noexcept;

  AffineWeight& operator+=(const AffineWeight& other);
  AffineWeight& operator-=(const AffineWeight& other);

  friend AffineWeight operator+(AffineWeight a, const AffineWeight& b) { return a += b; }
  friend AffineWeight operator-(AffineWeight a, const AffineWeight& b) { return a -= b; }
  friend AffineWeight operator-(const AffineWeight& a) { return AffineWeight{} - a; }
  friend AffineWeight operator*(std::int64_t k, const AffineWeight& w);

  friend auto operator<=>(const AffineWeight&, const AffineWeight&) = default;
};

std::ostream& operator<<(std::ostream& os, const AffineWeight& w);

/// JSON array text "[l0,l1,l2,d]".
std::string to_json_array(const AffineWeight& w);

/// Element of the dual lattice h0*h_0 + h1*h_1 + h2*h_2 + d*d.
struct Coroot {
  std::int64_t h0 = 0;
  std::int64_t h1 = 0;
  std::int64_t h2 = 0;
  std::int64_t d = 0;

  static Coroot simple(Index i);
  /// Canonical central element c = h_0 + h_1 + h_2.
  static Coroot central() { return {1, 1, 1, 0}; }
  static Coroot scaling() { return {0, 0, 0, 1}; }

  friend auto operator<=>(const Coroot&, const Coroot&) = default;
};

using CartanMatrix = std::array<std::array<int, 3>, 3>;

/// a_ij with rows (2,-1,0), (-2,2,-2), (0,-1,2).
inline constexpr CartanMatrix kCartanMatrix{{{2, -1, 0}, {-2, 2, -2}, {0, -1, 2}}};

constexpr int cartan_entry(Index i, Index j) { return kCartanMatrix[i.slot()][j.slot()]; }

/// The unique weight with <alpha_i, h_j> = a_ji and <alpha_i, d> = delta_{0,i}.
AffineWeight simple_root(Index i);

std::int64_t pair(const AffineWeight& w, const Coroot& h);

inline std::int64_t pair(const AffineWeight& w, Index i) { return pair(w, Coroot::simple(i)); }

/// <w, c>.
std::int64_t level(const AffineWeight& w);

/// Coordinates (m_0, m_1, m_2) of a root-lattice element sum m_a alpha_a.
using RootCoordinates = std::array<std::int64_t, 3>;

AffineWeight root_lattice_weight(const RootCoordinates& m);

}  // namespace c2crystal
