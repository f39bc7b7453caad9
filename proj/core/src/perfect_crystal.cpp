#include "c2crystal/perfect_crystal.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace c2crystal {

namespace {

struct Arrow {
  int color;
  BElem from;
  BElem to;
};

// Transcription of the crystal graph; every other table in this file is
// derived from these six arrows.
constexpr std::array<Arrow, 6> kArrows{{
    {2, BElem::OneTwo, BElem::OneBarTwo},
    {1, BElem::OneBarTwo, BElem::TwoBarTwo},
    {1, BElem::TwoBarTwo, BElem::TwoBarOne},
    {2, BElem::TwoBarOne, BElem::BarTwoBarOne},
    {0, BElem::TwoBarOne, BElem::OneTwo},
    {0, BElem::BarTwoBarOne, BElem::OneBarTwo},
}};

constexpr std::size_t slot(BElem b) { return static_cast<std::size_t>(b); }

struct Tables {
  std::array<std::array<std::optional<BElem>, 5>, 3> f{};
  std::array<std::array<std::optional<BElem>, 5>, 3> e{};
  std::array<std::array<std::pair<int, int>, 5>, 3> eps_phi{};
};

const Tables& tables() {
  static const Tables t = [] {
    Tables out;
    for (const Arrow& a : kArrows) {
      out.f[a.color][slot(a.from)] = a.to;
      out.e[a.color][slot(a.to)] = a.from;
    }
    for (Index i : kIndices) {
      for (BElem b : kBElems) {
        int eps = 0;
        for (auto x = out.e[i.slot()][slot(b)]; x; x = out.e[i.slot()][slot(*x)]) ++eps;
        int phi = 0;
        for (auto x = out.f[i.slot()][slot(b)]; x; x = out.f[i.slot()][slot(*x)]) ++phi;
        out.eps_phi[i.slot()][slot(b)] = {eps, phi};
      }
    }
    return out;
  }();
  return t;
}

}  // namespace

std::string_view name(BElem b) {
  switch (b) {
    case BElem::OneTwo: return "1,2";
    case BElem::OneBarTwo: return "1,-2";
    case BElem::TwoBarTwo: return "2,-2";
    case BElem::TwoBarOne: return "2,-1";
    case BElem::BarTwoBarOne: return "-2,-1";
  }
  return "?";
}

std::optional<BElem> parse_belem(std::string_view text) {
  for (BElem b : kBElems) {
    if (name(b) == text) return b;
  }
  return std::nullopt;
}

std::optional<BElem> f_b(Index i, BElem b) { return tables().f[i.slot()][slot(b)]; }

std::optional<BElem> e_b(Index i, BElem b) { return tables().e[i.slot()][slot(b)]; }

std::pair<int, int> eps_phi_b(Index i, BElem b) { return tables().eps_phi[i.slot()][slot(b)]; }

AffineWeight eps_vector(BElem b) {
  AffineWeight w;
  for (Index i : kIndices) w += eps_phi_b(i, b).first * AffineWeight::fundamental(i);
  return w;
}

AffineWeight phi_vector(BElem b) {
  AffineWeight w;
  for (Index i : kIndices) w += eps_phi_b(i, b).second * AffineWeight::fundamental(i);
  return w;
}

AffineWeight wt_b(BElem b) { return phi_vector(b) - eps_vector(b); }

namespace {

// Is d = -(m1 alpha_1 + m2 alpha_2) classically, with m1, m2 >= 0?
bool in_negative_cone(const AffineWeight& d) {
  // -(m1 a1 + m2 a2) = (m1, -2 m1 + 2 m2, m1 - 2 m2).
  const std::int64_t m1 = d.lambda0;
  if (m1 < 0) return false;
  const std::int64_t twice_m2 = m1 - d.lambda2;
  if (twice_m2 < 0 || twice_m2 % 2 != 0) return false;
  const std::int64_t m2 = twice_m2 / 2;
  return d.lambda1 == -2 * m1 + 2 * m2;
}

}  // namespace

PerfectnessReport check_perfect(int target_level) {
  PerfectnessReport report;
  report.level = target_level;

  // (i) B (x) B is connected under e and f.
  const TensorSquareModel square = tensor_square_model();
  using Pair = TensorSquareModel::Element;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::deque<Pair> queue;
  queue.push_back(Pair{kBElems[0], kBElems[0]});
  seen.insert({0, 0});
  while (!queue.empty()) {
    const Pair t = queue.front();
    queue.pop_front();
    for (Index i : kIndices) {
      for (auto next : {square.e(i, t), square.f(i, t)}) {
        if (next && seen.insert({slot(next->left), slot(next->right)}).second) queue.push_back(*next);
      }
    }
  }
  report.tensor_square_component = seen.size();
  report.tensor_square_connected = seen.size() == kBElems.size() * kBElems.size();
  if (!report.tensor_square_connected) report.failures.push_back("(i) B(x)B is not connected");

  // (ii) Search for lambda_0 among the weights of B.
  for (BElem candidate : kBElems) {
    const AffineWeight top = wt_b(candidate);
    const auto multiplicity =
        std::count_if(kBElems.begin(), kBElems.end(), [&](BElem b) { return wt_b(b) == top; });
    const bool dominates =
        std::all_of(kBElems.begin(), kBElems.end(), [&](BElem b) { return in_negative_cone(wt_b(b) - top); });
    if (multiplicity == 1 && dominates) {
      report.lambda0 = top;
      break;
    }
  }
  if (!report.lambda0) report.failures.push_back("(ii) no extremal weight lambda_0 found");

  // (iii) <eps(b), c> >= level.
  report.level_bound = std::all_of(kBElems.begin(), kBElems.end(),
                                   [&](BElem b) { return level(eps_vector(b)) >= target_level; });
  if (!report.level_bound) report.failures.push_back("(iii) some <eps(b),c> is below the level");

  // (iv) eps, phi : B^min -> dominant weights of this level are bijections.
  for (BElem b : kBElems) {
    if (level(eps_vector(b)) == target_level) report.minimal.push_back(b);
  }
  std::set<AffineWeight> targets;
  for (std::int64_t a0 = 0; a0 <= target_level; ++a0) {
    for (std::int64_t a1 = 0; a0 + a1 <= target_level; ++a1) targets.insert(AffineWeight{a0, a1, target_level - a0 - a1, 0});
  }
  auto bijective = [&](auto vector_of) {
    std::set<AffineWeight> image;
    for (BElem b : report.minimal) image.insert(vector_of(b));
    return image.size() == report.minimal.size() && image == targets;
  };
  report.eps_bijective = bijective(eps_vector);
  report.phi_bijective = bijective(phi_vector);
  if (!report.eps_bijective) report.failures.push_back("(iv) eps is not a bijection from B^min");
  if (!report.phi_bijective) report.failures.push_back("(iv) phi is not a bijection from B^min");
  return report;
}

}  // namespace c2crystal
