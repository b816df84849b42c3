#pragma once

#include <complex>
#include <string>
#include <vector>

#include "brauer/errors.hpp"

namespace brauer {

struct ConjugacyClass {
  std::string name;
  long long size = 1;
  int square = 0;  // index of the class holding the squares of this class
};

struct CharacterRow {
  std::string name;
  std::vector<std::complex<double>> values;  // one per class
};

// A finite group seen through its character table: class sizes, the squaring
// map on classes, and complex character values.  No group elements are ever
// held; the squaring map arrives precomputed.
struct CharacterTable {
  long long order = 1;
  std::vector<ConjugacyClass> classes;
  std::vector<CharacterRow> characters;

  // Checks the structural invariants: class sizes sum to the group order,
  // square indices are in range, rows span all classes, and the identity
  // class exists with every character taking a positive integer degree there.
  void validate() const;

  // Index of the unique class of size 1 whose squares stay inside it.
  int identity_class() const;

  // Row lookup by name; unknown names are a document-level error.
  const CharacterRow& character(const std::string& name) const;
};

// Frobenius-Schur indicator (1/|G|) Σ_g χ(g²), snapped to {−1, 0, +1}.
int fs_indicator(const CharacterTable& t, const CharacterRow& chi);

// Twisted indicator ε_μ(χ) = (1/|G|) Σ_g μ(g)χ(g²) for a linear μ.  When
// the duality relation χ̄ = μχ fails pointwise the sum still gets computed
// but carries no invariant meaning; the flag records the mismatch.
struct TwistedIndicator {
  int value = 0;
  bool duality_mismatch = false;
};

TwistedIndicator twisted_indicator(const CharacterTable& t,
                                   const CharacterRow& mu,
                                   const CharacterRow& chi);

}  // namespace brauer
