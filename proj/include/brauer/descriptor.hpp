// Path descriptors for indecomposable modules over a block with cyclic
// defect group: an edge walk on the Brauer tree together with a direction
// and an exceptional multiplicity.  Provides grammar validation, the
// composition-factor amalgamation walk, duality, hooks, projective structure,
// exhaustive enumeration, and the uniserial shape tags.
#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "brauer/tree.hpp"

namespace brauer {

enum class DescriptorKind { TypeI, TypeII };

const char* to_string(DescriptorKind k);

struct JanuszDescriptor {
  std::vector<EdgeId> edges;  // S_1..S_t
  int dir_first = +1;         // sign carried by S_1
  int dir_last = -1;          // sign carried by S_t; alternation forces it
  int mu = 0;                 // exceptional multiplicity of the walk
  DescriptorKind kind = DescriptorKind::TypeI;

  int length() const { return static_cast<int>(edges.size()); }
  // Sign at 1-based position j (alternates from dir_first).
  int sign_at(int j) const { return j % 2 == 1 ? dir_first : -dir_first; }

  friend auto operator<=>(const JanuszDescriptor&,
                          const JanuszDescriptor&) = default;
};

// The reversed walk names the same module with both signs flipped when the
// length is even (doubles); canonical form keeps the lexicographically
// smaller of the pair, ordering by edge sequence then by dir_first with
// +1 before -1.
JanuszDescriptor mirror_descriptor(const JanuszDescriptor& d);
JanuszDescriptor canonical_descriptor(const JanuszDescriptor& d);

// Grammar check; returns the violated clauses (empty = valid).
std::vector<std::string> validate_descriptor(const BrauerTree& tree,
                                             const JanuszDescriptor& d);
// Throws Error(InvalidDescriptor) with the first violation.
void require_valid(const BrauerTree& tree, const JanuszDescriptor& d);

// Builds a descriptor from a walk: fills dir_last and kind, validates.
JanuszDescriptor make_descriptor(const BrauerTree& tree,
                                 std::vector<EdgeId> edges, int dir_first,
                                 int mu);

struct TopSocle {
  std::map<EdgeId, int> head;
  std::map<EdgeId, int> socle;
};
TopSocle top_socle(const JanuszDescriptor& d);

// One head-rooted uniserial summand of the amalgamation: the head edge with
// its two legs listed top-to-bottom.
struct CompositionPiece {
  EdgeId head;
  std::vector<EdgeId> left_leg;
  std::vector<EdgeId> right_leg;
};

struct Composition {
  std::vector<CompositionPiece> pieces;
  std::map<EdgeId, int> factors;  // amalgamated multiset
  int length() const;
  // For a uniserial module: the factors head-to-socle.
  std::vector<EdgeId> series() const;
};

Composition composition_factors(const BrauerTree& tree,
                                const JanuszDescriptor& d);

// Image under the stem reflection: edges mapped in order, both signs
// negated, multiplicity kept, result canonicalized.
JanuszDescriptor dual_descriptor(const Reflection& refl,
                                 const JanuszDescriptor& d);

// One of the two hook quotients of the projective cover of an edge module:
// the edge over the leg read off the rotation at one endpoint.
struct Hook {
  EdgeId head;
  VertexId vertex;          // the endpoint the leg walks around
  std::vector<EdgeId> leg;  // top-to-bottom, length val-1 (m*val-1 if
                            // the vertex is exceptional)
  int sign;                 // vertex sign: +1 = positive hook
  std::map<EdgeId, int> factors() const;
};

struct HookPair {
  EdgeId edge;
  Hook hook_a;  // at the positive endpoint
  Hook hook_b;  // at the negative endpoint
};

HookPair hooks(const BrauerTree& tree, const EdgeId& edge);

// Projective cover of the edge module: edge twice plus both hook legs.
struct PimStructure {
  EdgeId edge;
  std::vector<EdgeId> q_a;  // radical leg at the positive endpoint
  std::vector<EdgeId> q_b;  // radical leg at the negative endpoint
  std::map<EdgeId, int> factors;
};

PimStructure pim_structure(const BrauerTree& tree, const EdgeId& edge);

// All grammar-valid descriptors with at least two edges, modulo the mirror
// identification, sorted canonically.  Asserts the census size e(em-1) and
// throws Error(CountMismatch) otherwise.
std::vector<JanuszDescriptor> enumerate_descriptors(const BrauerTree& tree);

enum class UniserialShape {
  NotUniserial,
  Irreducible,  // single-edge descriptor
  U1,           // two distinct edges, no exceptional contact
  U2,           // walk ends at the exceptional vertex
  U3,           // walk starts at the exceptional vertex
  U4,           // exceptional vertex between the two edges
  U5,           // back-and-forth over one edge at the exceptional vertex
};

enum class SelfDualShape {
  None,
  USD1,  // (S, S*) around a non-exceptional vertex, mu = 0
  USD2,  // (S, S*) around the exceptional vertex, 1 <= mu <= m
  USD3,  // (S, S) at the exceptional vertex with S on the stem, 2 <= mu <= m
};

const char* to_string(UniserialShape s);
const char* to_string(SelfDualShape s);

struct ShapeTags {
  UniserialShape shape = UniserialShape::NotUniserial;
  SelfDualShape self_dual = SelfDualShape::None;
};

// Classifies a valid descriptor; the self-dual tag needs the reflection and
// stays None when refl is null.
ShapeTags uniserial_shapes(const BrauerTree& tree, const JanuszDescriptor& d,
                           const Reflection* refl = nullptr);

}  // namespace brauer
