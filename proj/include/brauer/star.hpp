// Uniserial star block: the Brauer-correspondent block whose tree is a star
// with exceptional centre.  Modules are the uniserial [i,l] with socle E_i and
// composition length l; duality, the Heller translate, and the three-case
// classification of self-dual modules all have closed forms here.
#pragma once

#include <compare>
#include <vector>

#include "brauer/errors.hpp"

namespace brauer {

enum class StarCase {
  NoSelfDualSimple,    // e even, E_0* = E_{-1}
  TwoSelfDualSimples,  // e even, E_0* = E_0
  OneSelfDualSimple,   // e odd,  E_0* = E_0
};

const char* to_string(StarCase c);

struct StarParams {
  int e = 1;  // number of simple modules
  int m = 1;  // exceptional multiplicity
  StarCase star_case = StarCase::OneSelfDualSimple;

  // Throws BadMultiplicity for e < 1 or m < 1, CaseMismatch when star_case
  // contradicts the parity of e (or e is odd with m odd).
  void validate() const;

  int zero_star() const;  // index of E_0*, reduced to 0..e-1
  int h() const;          // e/2 (e even) or (e-1)/2 (e odd)
  int max_length() const { return e * m; }  // longest non-projective module
};

struct StarModule {
  int socle = 0;   // residue 0..e-1
  int length = 1;  // 1..em non-projective, em+1 projective

  friend auto operator<=>(const StarModule&, const StarModule&) = default;
};

// Normalizes the socle residue and checks 1 <= length <= em+1.
StarModule make_star_module(const StarParams& p, int socle, int length);

bool is_projective(const StarParams& p, const StarModule& M);

// i* = 0* - i (mod e).
int star_involution(const StarParams& p, int i);

// Socle-to-head list of simple-factor indices: i, i-1, ..., i-l+1 (mod e).
std::vector<int> composition_factors(const StarParams& p,
                                     const StarModule& M);

// [i,l]* = [(i-l+1)*, l].  Throws ProjectiveInput for l = em+1.
StarModule dual_module(const StarParams& p, const StarModule& M);

// l = i - i* + 1 (mod e), equivalently dual_module(M) = M.
bool is_self_dual(const StarParams& p, const StarModule& M);

// Heller translate: kernel of the projective cover of M.
// Omega[i,l] = [i-l+1, em+1-l].  Throws ProjectiveInput.
StarModule heller(const StarParams& p, const StarModule& M);

// [i,l] <= [j,k] iff i = j and l <= k; quotient iff i-l = j-k (mod e), l <= k.
bool submodule_of(const StarParams& p, const StarModule& A,
                  const StarModule& B);
bool quotient_of(const StarParams& p, const StarModule& A,
                 const StarModule& B);

// One of the two families of non-projective self-dual modules, ordered by
// increasing composition length, with its distinguished anchor member (a
// simple module or a top-length hook, depending on the case).
struct StarFamily {
  std::vector<StarModule> modules;
  StarModule anchor;
};

struct StarClassification {
  StarFamily family1;
  StarFamily family2;
};

// The em non-projective self-dual modules, split into the two families with
// their anchors.  Every constructed entry is re-checked against the duality
// congruence; a failure aborts with InternalCountMismatch.
StarClassification classify_star_self_duals(const StarParams& p);

}  // namespace brauer
