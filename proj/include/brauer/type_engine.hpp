#pragma once

#include <optional>
#include <string>

#include "brauer/errors.hpp"
#include "brauer/star.hpp"
#include "brauer/tube.hpp"

namespace brauer {

// Orthogonal: the module carries an invariant symmetric bilinear form;
// Symplectic: an alternating one.  In odd characteristic exactly one of the
// two holds for every self-dual indecomposable.
enum class ModuleType { Orthogonal, Symplectic };

const char* to_string(ModuleType t);

// Types assigned to the two self-dual hooks of the tube, in census order
// (first = self_dual_census(p).hooks[0], second = hooks[1]).  Slots may be
// left empty; resolution then stays symbolic.
struct HookTypeAssignment {
  std::optional<ModuleType> first;
  std::optional<ModuleType> second;
};

// Outcome of a type computation.  The deciding anchor is always named; the
// value is present only when the anchor's slot was assigned or the verdict
// came from an indicator computation.
struct TypeVerdict {
  std::optional<ModuleType> value;
  std::string anchor;                           // e.g. "Ω^{−64}(H⁺)"
  std::optional<TubePosition> anchor_position;  // census hook, when positional
  std::optional<int> anchor_index;              // 0 or 1 into census hooks
};

// Walks from the module's positive hook to the self-dual hook that carries
// the same type.  The case split on the star parameters:
//   TwoSelfDualSimples: level = 2i+1, anchor = Ω^{−2i}(H⁺);
//   NoSelfDualSimple:   level = em−2j, anchor = Ω^{2j+1}(H⁺);
//   OneSelfDualSimple:  level−1 even → bottom hook, odd → its Ω^e image.
// With odd multiplicity in the two-simples case, assigned anchors must agree.
TypeVerdict resolve_type(const StarParams& p, TubePosition pos,
                         const HookTypeAssignment& hooks);

// Seeds hook types from Frobenius-Schur indicators of the hooks' irreducible
// characters (+1 orthogonal, −1 symplectic).  Indicators apply only to hooks
// that are simple modules; the remaining slots must arrive pre-assigned in
// `supplied`.  Both slots must end up filled.
HookTypeAssignment anchor_types_from_indicators(
    const StarParams& p, std::optional<int> first_indicator,
    std::optional<int> second_indicator,
    const HookTypeAssignment& supplied = {});

// Type of the self-dual module detected by a twisted indicator when the
// defect group is normal: ε = −1 gives orthogonal, ε = +1 symplectic (note
// the inversion relative to the Frobenius-Schur convention).
TypeVerdict normal_defect_type(int epsilon);

// Distance to the positive hook from the externally supplied parameter pair
// (n, η): d⁺ = (n−1)/2 + η·e.  n must be a positive odd integer.
int distance_from_parameters(int n, int eta, int e);

}  // namespace brauer
