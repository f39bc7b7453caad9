#include "c2crystal/cartan.hpp"

#include <cassert>
#include <ostream>
#include <sstream>

namespace c2crystal {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  [[maybe_unused]] const bool overflow = __builtin_add_overflow(a, b, &out);
  assert(!overflow && "weight coefficient overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  [[maybe_unused]] const bool overflow = __builtin_mul_overflow(a, b, &out);
  assert(!overflow && "weight coefficient overflow");
  return out;
}

}  // namespace

std::ostream& operator<<(std::ostream& os, Index i) { return os << i.value(); }

AffineWeight AffineWeight::fundamental(Index i) {
  AffineWeight w;
  switch (i.value()) {
    case 0: w.lambda0 = 1; break;
    case 1: w.lambda1 = 1; break;
    default: w.lambda2 = 1; break;
  }
  return w;
}

AffineWeight AffineWeight::null_root() { return {0, 0, 0, 1}; }

std::int64_t AffineWeight::coefficient(Index i) const noexcept {
  switch (i.value()) {
    case 0: return lambda0;
    case 1: return lambda1;
    default: return lambda2;
  }
}

AffineWeight& AffineWeight::operator+=(const AffineWeight& other) {
  lambda0 = checked_add(lambda0, other.lambda0);
  lambda1 = checked_add(lambda1, other.lambda1);
  lambda2 = checked_add(lambda2, other.lambda2);
  delta = checked_add(delta, other.delta);
  return *this;
}

AffineWeight& AffineWeight::operator-=(const AffineWeight& other) {
  lambda0 = checked_add(lambda0, -other.lambda0);
  lambda1 = checked_add(lambda1, -other.lambda1);
  lambda2 = checked_add(lambda2, -other.lambda2);
  delta = checked_add(delta, -other.delta);
  return *this;
}

AffineWeight operator*(std::int64_t k, const AffineWeight& w) {
  return {checked_mul(k, w.lambda0), checked_mul(k, w.lambda1), checked_mul(k, w.lambda2),
          checked_mul(k, w.delta)};
}

std::ostream& operator<<(std::ostream& os, const AffineWeight& w) { return os << to_json_array(w); }

std::string to_json_array(const AffineWeight& w) {
  std::ostringstream os;
  os << '[' << w.lambda0 << ',' << w.lambda1 << ',' << w.lambda2 << ',' << w.delta << ']';
  return os.str();
}

Coroot Coroot::simple(Index i) {
  Coroot h;
  switch (i.value()) {
    case 0: h.h0 = 1; break;
    case 1: h.h1 = 1; break;
    default: h.h2 = 1; break;
  }
  return h;
}

// alpha_i(h_j) = a_ji, so the Lambda_j coefficient of alpha_i is column i of A.
AffineWeight simple_root(Index i) {
  AffineWeight w;
  w.lambda0 = cartan_entry(Index{0}, i);
  w.lambda1 = cartan_entry(Index{1}, i);
  w.lambda2 = cartan_entry(Index{2}, i);
  w.delta = i.value() == 0 ? 1 : 0;
  return w;
}

std::int64_t pair(const AffineWeight& w, const Coroot& h) {
  std::int64_t sum = checked_mul(w.lambda0, h.h0);
  sum = checked_add(sum, checked_mul(w.lambda1, h.h1));
  sum = checked_add(sum, checked_mul(w.lambda2, h.h2));
  return checked_add(sum, checked_mul(w.delta, h.d));
}

std::int64_t level(const AffineWeight& w) { return pair(w, Coroot::central()); }

AffineWeight root_lattice_weight(const RootCoordinates& m) {
  AffineWeight w;
  for (Index a : kIndices) w += m[a.slot()] * simple_root(a);
  return w;
}

}  // namespace c2crystal
