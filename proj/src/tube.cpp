#include "brauer/tube.hpp"

#include <string>

namespace brauer {

namespace {

int mod(int a, int e) { return ((a % e) + e) % e; }

}  // namespace

TubePosition make_position(const StarParams& p, int column, int level) {
  if (level < 1 || level > p.max_length()) {
    throw Error(ErrorCode::NotSelfDualPosition,
                "level " + std::to_string(level) + " outside 1.." +
                    std::to_string(p.max_length()));
  }
  return {mod(column, p.e), level};
}

TubePosition omega(const StarParams& p, TubePosition pos) {
  return make_position(p, pos.column - pos.level + 1,
                       p.max_length() + 1 - pos.level);
}

TubePosition omega2(const StarParams& p, TubePosition pos) {
  return make_position(p, pos.column + 1, pos.level);
}

TubePosition omega_pow(const StarParams& p, TubePosition pos, int n) {
  if (n % 2 == 0) {
    return make_position(p, pos.column + n / 2, pos.level);
  }
  return omega(p, make_position(p, pos.column + (n - 1) / 2, pos.level));
}

TubePosition dual_position(const StarParams& p, TubePosition pos) {
  return make_position(p, p.zero_star() - (pos.column - pos.level + 1),
                       pos.level);
}

std::vector<int> self_dual_columns(const StarParams& p, int level) {
  int rhs = mod(p.zero_star() + level - 1, p.e);
  if (p.e % 2 != 0) {
    // 2 is invertible mod e; (e+1)/2 is its inverse.
    return {mod(rhs * ((p.e + 1) / 2), p.e)};
  }
  if (rhs % 2 != 0) return {};
  std::vector<int> cols{rhs / 2, mod(rhs / 2 + p.h(), p.e)};
  if (cols[1] < cols[0]) std::swap(cols[0], cols[1]);
  return cols;
}

Distances distances(const StarParams& p, TubePosition pos) {
  return {pos.level - 1, p.max_length() - pos.level};
}

SelfDualCensus self_dual_census(const StarParams& p) {
  p.validate();
  const int em = p.max_length();
  SelfDualCensus census;
  int total = 0;
  for (int level = 1; level <= em; ++level) {
    std::vector<int> cols = self_dual_columns(p, level);
    for (int c : cols) {
      if (dual_position(p, {c, level}) != TubePosition{c, level}) {
        throw Error(ErrorCode::InternalCountMismatch,
                    "column " + std::to_string(c) + " at level " +
                        std::to_string(level) + " is not duality-fixed");
      }
    }
    size_t expected_odd = 1;
    if (p.e % 2 != 0 ? cols.size() != expected_odd
                     : (cols.size() != 0 && cols.size() != 2)) {
      throw Error(ErrorCode::InternalCountMismatch,
                  "unexpected self-dual count at level " +
                      std::to_string(level));
    }
    total += static_cast<int>(cols.size());
    census.columns.push_back(std::move(cols));
  }
  if (total != em) {
    throw Error(ErrorCode::InternalCountMismatch,
                "self-dual census totals " + std::to_string(total) +
                    ", expected " + std::to_string(em));
  }

  std::vector<TubePosition> hooks;
  for (int c : census.columns.front()) hooks.push_back({c, 1});
  for (int c : census.columns.back()) hooks.push_back({c, em});
  if (hooks.size() != 2) {
    throw Error(ErrorCode::InternalCountMismatch,
                "expected exactly two self-dual hooks, found " +
                    std::to_string(hooks.size()));
  }
  census.hooks[0] = hooks[0];
  census.hooks[1] = hooks[1];
  if (omega_pow(p, census.hooks[0], p.e) != census.hooks[1] &&
      omega_pow(p, census.hooks[1], p.e) != census.hooks[0]) {
    throw Error(ErrorCode::InternalCountMismatch,
                "self-dual hooks are not related by the e-th Heller power");
  }
  return census;
}

}  // namespace brauer
