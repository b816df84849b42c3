// Planar-embedded Brauer tree: edges, counterclockwise rotation system,
// exceptional vertex with multiplicity, real stem, and the derived data the
// rest of the library consumes (signs, stem statistics, geodesics to the stem,
// and the mirror reflection across the stem).
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "brauer/errors.hpp"

namespace brauer {

using VertexId = std::string;
using EdgeId = std::string;

struct TreeEdge {
  EdgeId id;
  std::array<VertexId, 2> ends;
};

class BrauerTree {
 public:
  std::vector<TreeEdge> edges;                        // document order
  std::map<VertexId, std::vector<EdgeId>> rotations;  // ccw cyclic lists
  VertexId exceptional;
  int multiplicity = 1;
  std::vector<VertexId> real_stem;  // ordered vertex path containing exceptional
  std::optional<VertexId> positive_vertex;

  // Checks all structural invariants; throws Error on the first violation.
  void validate() const;

  // --- basic queries -------------------------------------------------------
  int edge_count() const { return static_cast<int>(edges.size()); }
  bool has_edge(const EdgeId& id) const;
  const TreeEdge& edge(const EdgeId& id) const;
  const std::vector<EdgeId>& rotation(const VertexId& v) const;
  std::vector<VertexId> vertex_ids() const;  // sorted
  int valence(const VertexId& v) const;
  bool incident(const EdgeId& id, const VertexId& v) const;
  VertexId other_end(const EdgeId& id, const VertexId& v) const;
  // The unique common endpoint of two distinct edges (throws if none).
  VertexId shared_vertex(const EdgeId& a, const EdgeId& b) const;
  bool is_star() const;  // every edge incident to the exceptional vertex

  // --- rotation walking ----------------------------------------------------
  EdgeId ccw_next(const VertexId& v, const EdgeId& from) const;
  EdgeId ccw_prev(const VertexId& v, const EdgeId& from) const;

  // --- real stem -----------------------------------------------------------
  int stem_edge_count() const;               // b
  std::vector<EdgeId> stem_edges() const;    // ordered along real_stem
  bool on_stem(const EdgeId& id) const;
  bool is_stem_vertex(const VertexId& v) const;
  // Stem edges from a stem vertex to the exceptional vertex, in walk order.
  std::vector<EdgeId> stem_path_to_exceptional(const VertexId& v) const;

  // --- signs ---------------------------------------------------------------
  // The vertex carrying sign +1: positive_vertex if set, else the first
  // real_stem vertex.
  VertexId sign_origin() const;
  // Proper 2-coloring by ±1 with sign_origin() positive.
  std::map<VertexId, int> vertex_signs() const;

  // --- geodesics to the stem -----------------------------------------------
  struct Contact {
    VertexId vertex;               // where the geodesic meets the stem
    std::vector<EdgeId> geodesic;  // S_1..S_c: S_1 = the edge itself, S_c
                                   // incident to the contact vertex
    std::vector<EdgeId> stem_tail;  // stem edges from contact vertex to the
                                    // exceptional vertex (walk order)
  };
  Contact contact(const EdgeId& off_stem_edge) const;  // throws EdgeOnStem
};

// The mirror across the real stem: an involution on edges and vertices that
// fixes the stem pointwise and conjugates every rotation to the reversed
// rotation of the image vertex.
struct Reflection {
  std::map<EdgeId, EdgeId> edge_map;
  std::map<VertexId, VertexId> vertex_map;
};

// Derives the unique stem-fixing reflection, or throws
// Error(NotReflectionSymmetric) naming the offending vertex.
Reflection derive_reflection(const BrauerTree& tree);

struct StemStats {
  int b;      // number of stem edges
  int kappa;  // off-stem edges whose contact vertex is not exceptional
};
StemStats stem_stats(const BrauerTree& tree);

}  // namespace brauer
