// Complete catalog of self-dual indecomposable modules over a block with a
// planar-embedded, reflection-symmetric Brauer tree: stem irreducibles, their
// projective covers, and the four symmetric-path families, with the counting
// identity enforced.  Also locates catalog entries in the stable tube.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "brauer/descriptor.hpp"
#include "brauer/tube.hpp"

namespace brauer {

enum class CatalogFamily {
  Irreducible,  // stem edge
  Pim,          // projective cover of a stem edge
  C,            // m = 1: symmetric path through the stem
  DI,           // symmetric path, non-exceptional contact, mu = 0
  DII,          // symmetric path, exceptional contact, mu in 1..m
  DIII,         // symmetric path extended along the stem, mu in 2..m
  DIV,          // stem path back and forth, mu in 2..m
};

const char* to_string(CatalogFamily f);

struct CatalogEntry {
  CatalogFamily family;
  EdgeId edge;  // the generating edge (stem edge or off-stem seed)
  JanuszDescriptor descriptor;  // canonical; single-edge for irreducibles
  int count_index = 0;          // position within its family listing
};

struct SelfDualCatalog {
  int b = 0;
  int kappa = 0;
  std::vector<EdgeId> irreducibles;  // stem edges
  std::vector<EdgeId> pims;          // stem edges (projective covers)
  std::vector<CatalogEntry> paths;   // families C and DI..DIV

  int family_size(CatalogFamily f) const;
};

// Irreducibles and paths as one entry list (PIMs excluded: not in the tube).
std::vector<CatalogEntry> non_projective_entries(const BrauerTree& tree,
                                                 const SelfDualCatalog& cat);

// Star parameters of the block the tree describes: e, m, and the duality
// case read off the stem (e odd: one self-dual simple; e even: none when the
// stem has no edges, two otherwise).
StarParams star_params_for(const BrauerTree& tree);

// Canonical star indices E_0..E_{e-1} for a star tree: E_0 is the stem edge
// (lexicographically smallest when the stem has two), successors
// counterclockwise; with an edgeless stem the stored rotation list is used
// as-is.  Throws CaseMismatch on non-star trees.
std::map<EdgeId, int> star_edge_indices(const BrauerTree& tree);

// Builds the full catalog.  Every emitted descriptor is validated and
// checked to be a dual_descriptor fixed point; family sizes must satisfy
// b + kappa + (e-b-kappa)m + kappa(m-1) + b(m-1) = em (m >= 2) or
// (e-b) + b = e (m = 1), else InternalCountMismatch.
SelfDualCatalog classify(const BrauerTree& tree);

// Tube position(s) of a catalog entry: star trees and hook-shaped stem
// irreducibles are located intrinsically; otherwise a supplied d_plus gives
// the level and the census gives one column (e odd) or two candidates
// (e even).  Throws NeedsDistance when no intrinsic rule applies and no
// d_plus is supplied, ProjectiveInput for PIM entries.
std::vector<TubePosition> locate(const BrauerTree& tree,
                                 const CatalogEntry& entry,
                                 const StarParams& p,
                                 std::optional<int> d_plus = std::nullopt);

}  // namespace brauer
