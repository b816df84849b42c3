// Stable Auslander-Reiten tube of a block with cyclic defect group: positions
// (column mod e, level 1..em), Heller-translate arithmetic, duality on
// positions, and the census of self-dual positions with the two self-dual
// hooks.
#pragma once

#include <compare>
#include <vector>

#include "brauer/star.hpp"

namespace brauer {

struct TubePosition {
  int column = 0;  // residue 0..e-1
  int level = 1;   // 1..em; level 1 = positive-hook rim, em = negative rim

  friend auto operator<=>(const TubePosition&, const TubePosition&) = default;
};

// Normalizes the column residue and checks 1 <= level <= em.
TubePosition make_position(const StarParams& p, int column, int level);

// Heller translate on positions: omega(c,l) = (c-l+1 mod e, em+1-l).
TubePosition omega(const StarParams& p, TubePosition pos);
// omega applied twice: (c+1 mod e, l).
TubePosition omega2(const StarParams& p, TubePosition pos);
// n-fold omega, closed form; negative n inverts.
TubePosition omega_pow(const StarParams& p, TubePosition pos, int n);

// Duality on positions: (zero_star - (c-l+1) mod e, l).
TubePosition dual_position(const StarParams& p, TubePosition pos);

// Columns c at the given level with dual_position fixed, sorted ascending:
// solutions of 2c = zero_star + level - 1 (mod e).
std::vector<int> self_dual_columns(const StarParams& p, int level);

struct Distances {
  int d_plus;   // level - 1, steps to the positive-hook rim
  int d_minus;  // em - level, steps to the negative-hook rim
};
Distances distances(const StarParams& p, TubePosition pos);

struct SelfDualCensus {
  // columns[level-1] = sorted self-dual columns at that level.
  std::vector<std::vector<int>> columns;
  // The two self-dual hook positions, related by the e-th Heller power;
  // ordered by (level, column).
  TubePosition hooks[2];
};

// Builds the census and checks its shape: one column per level for e odd,
// zero or two for e even, em positions in total, hooks omega^e-related.
SelfDualCensus self_dual_census(const StarParams& p);

}  // namespace brauer
