#include "brauer/type_engine.hpp"

#include <algorithm>

namespace brauer {

const char* to_string(ModuleType t) {
  switch (t) {
    case ModuleType::Orthogonal: return "orthogonal";
    case ModuleType::Symplectic: return "symplectic";
  }
  return "unknown";
}

namespace {

// "Ω^{−4}(H⁺)" for power −4 over base "H⁺"; the bare base for power 0.
std::string omega_symbol(int power, const std::string& base) {
  if (power == 0) return base;
  std::string exponent = power < 0 ? "−" + std::to_string(-power)
                                   : std::to_string(power);
  return "Ω^{" + exponent + "}(" + base + ")";
}

int hook_index(const SelfDualCensus& census, TubePosition anchor) {
  if (anchor == census.hooks[0]) return 0;
  if (anchor == census.hooks[1]) return 1;
  throw Error(ErrorCode::InternalCountMismatch,
              "anchor walk missed both self-dual hooks");
}

}  // namespace

TypeVerdict resolve_type(const StarParams& p, TubePosition pos,
                         const HookTypeAssignment& hooks) {
  p.validate();
  const int em = p.max_length();
  if (pos.level < 1 || pos.level > em) {
    throw Error(ErrorCode::NotSelfDualPosition,
                "level " + std::to_string(pos.level) + " is outside the tube");
  }
  if (p.star_case == StarCase::TwoSelfDualSimples && pos.level % 2 == 0) {
    throw Error(ErrorCode::ParityMismatch,
                "self-dual positions sit at odd levels when two simples are "
                "self-dual");
  }
  if (p.star_case == StarCase::NoSelfDualSimple && pos.level % 2 != 0) {
    throw Error(ErrorCode::ParityMismatch,
                "self-dual positions sit at even levels when no simple is "
                "self-dual");
  }
  SelfDualCensus census = self_dual_census(p);
  const std::vector<int>& cols = census.columns.at(pos.level - 1);
  if (std::find(cols.begin(), cols.end(), pos.column) == cols.end()) {
    throw Error(ErrorCode::NotSelfDualPosition,
                "column " + std::to_string(pos.column) + " at level " +
                    std::to_string(pos.level) + " is not duality-fixed");
  }
  if (p.star_case == StarCase::TwoSelfDualSimples && p.m % 2 != 0 &&
      hooks.first && hooks.second && *hooks.first != *hooks.second) {
    throw Error(ErrorCode::InconsistentAnchors,
                "odd multiplicity forces both self-dual hooks to share one "
                "type");
  }

  TypeVerdict verdict;
  TubePosition anchor{};
  switch (p.star_case) {
    case StarCase::TwoSelfDualSimples: {
      const int i = (pos.level - 1) / 2;
      anchor = omega_pow(p, make_position(p, pos.column, 1), -2 * i);
      verdict.anchor = omega_symbol(-2 * i, "H⁺");
      break;
    }
    case StarCase::NoSelfDualSimple: {
      const int j = (em - pos.level) / 2;
      anchor = omega_pow(p, make_position(p, pos.column, 1), 2 * j + 1);
      verdict.anchor = omega_symbol(2 * j + 1, "H⁺");
      break;
    }
    case StarCase::OneSelfDualSimple: {
      const bool bottom = (pos.level - 1) % 2 == 0;
      anchor = bottom ? census.hooks[0] : census.hooks[1];
      verdict.anchor =
          bottom ? "g(E₀)" : omega_symbol(p.e, "g(E₀)");
      break;
    }
  }
  int index = hook_index(census, anchor);
  verdict.anchor_position = anchor;
  verdict.anchor_index = index;
  verdict.value = index == 0 ? hooks.first : hooks.second;
  return verdict;
}

HookTypeAssignment anchor_types_from_indicators(
    const StarParams& p, std::optional<int> first_indicator,
    std::optional<int> second_indicator, const HookTypeAssignment& supplied) {
  p.validate();
  bool simple_hook[2] = {false, false};
  switch (p.star_case) {
    case StarCase::TwoSelfDualSimples:
      simple_hook[0] = simple_hook[1] = true;
      break;
    case StarCase::OneSelfDualSimple:
      simple_hook[0] = true;
      break;
    case StarCase::NoSelfDualSimple:
      break;
  }
  auto from_indicator = [](int nu, const char* which) -> ModuleType {
    if (nu == 1) return ModuleType::Orthogonal;
    if (nu == -1) return ModuleType::Symplectic;
    throw Error(ErrorCode::MissingAnchor,
                std::string(which) +
                    " hook's character has indicator " + std::to_string(nu) +
                    "; a real irreducible anchor needs ±1");
  };
  HookTypeAssignment out = supplied;
  std::optional<int> indicator[2] = {first_indicator, second_indicator};
  const char* names[2] = {"first", "second"};
  std::optional<ModuleType>* slots[2] = {&out.first, &out.second};
  for (int k = 0; k < 2; ++k) {
    if (indicator[k]) {
      if (!simple_hook[k]) {
        throw Error(ErrorCode::MissingAnchor,
                    std::string("the ") + names[k] +
                        " self-dual hook is not a simple module; supply its "
                        "type directly");
      }
      *slots[k] = from_indicator(*indicator[k], names[k]);
    }
    if (!slots[k]->has_value()) {
      throw Error(ErrorCode::MissingAnchor,
                  std::string("no type for the ") + names[k] +
                      " self-dual hook");
    }
  }
  return out;
}

TypeVerdict normal_defect_type(int epsilon) {
  if (epsilon != 1 && epsilon != -1) {
    throw Error(ErrorCode::BadEpsilon,
                "twisted indicator must be ±1, got " +
                    std::to_string(epsilon));
  }
  TypeVerdict verdict;
  verdict.value =
      epsilon == -1 ? ModuleType::Orthogonal : ModuleType::Symplectic;
  verdict.anchor = std::string("ε = ") +
                   (epsilon == -1 ? "−1" : "+1");
  return verdict;
}

int distance_from_parameters(int n, int eta, int e) {
  if (e < 1) {
    throw Error(ErrorCode::BadMultiplicity, "e must be positive");
  }
  if (n < 1 || n % 2 == 0) {
    throw Error(ErrorCode::ParityMismatch,
                "the distance parameter n must be a positive odd integer");
  }
  return (n - 1) / 2 + eta * e;
}

}  // namespace brauer
