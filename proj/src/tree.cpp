#include "brauer/tree.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace brauer {

namespace {

int index_in_rotation(const std::vector<EdgeId>& rot, const EdgeId& id) {
  for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
    if (rot[i] == id) return i;
  }
  throw Error(ErrorCode::BadRotation, "edge " + id + " not in rotation");
}

}  // namespace

void BrauerTree::validate() const {
  if (edges.empty()) {
    throw Error(ErrorCode::NotATree, "tree has no edges");
  }
  std::set<EdgeId> edge_ids;
  std::set<VertexId> verts;
  for (const TreeEdge& ed : edges) {
    if (!edge_ids.insert(ed.id).second) {
      throw Error(ErrorCode::NotATree, "duplicate edge id " + ed.id);
    }
    if (ed.ends[0] == ed.ends[1]) {
      throw Error(ErrorCode::NotATree, "edge " + ed.id + " is a loop");
    }
    verts.insert(ed.ends[0]);
    verts.insert(ed.ends[1]);
  }
  if (verts.size() != edges.size() + 1) {
    throw Error(ErrorCode::NotATree,
                "vertex count must exceed edge count by one");
  }
  // Connectivity: |V| = |E| + 1 plus connected is exactly a tree.
  std::map<VertexId, std::vector<VertexId>> adj;
  for (const TreeEdge& ed : edges) {
    adj[ed.ends[0]].push_back(ed.ends[1]);
    adj[ed.ends[1]].push_back(ed.ends[0]);
  }
  std::set<VertexId> seen{*verts.begin()};
  std::deque<VertexId> queue{*verts.begin()};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (const VertexId& w : adj[v]) {
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  if (seen.size() != verts.size()) {
    throw Error(ErrorCode::NotATree, "tree is disconnected");
  }

  // Rotations: one cyclic list per vertex, a permutation of its incident
  // edges.
  for (const auto& [v, rot] : rotations) {
    if (!verts.count(v)) {
      throw Error(ErrorCode::BadRotation, "rotation at unknown vertex " + v);
    }
  }
  for (const VertexId& v : verts) {
    auto it = rotations.find(v);
    if (it == rotations.end()) {
      throw Error(ErrorCode::BadRotation, "missing rotation at vertex " + v);
    }
    std::set<EdgeId> listed(it->second.begin(), it->second.end());
    if (listed.size() != it->second.size()) {
      throw Error(ErrorCode::BadRotation,
                  "rotation at " + v + " repeats an edge");
    }
    std::set<EdgeId> incident;
    for (const TreeEdge& ed : edges) {
      if (ed.ends[0] == v || ed.ends[1] == v) incident.insert(ed.id);
    }
    if (listed != incident) {
      throw Error(ErrorCode::BadRotation,
                  "rotation at " + v +
                      " does not list exactly the incident edges");
    }
  }

  if (multiplicity < 1) {
    throw Error(ErrorCode::BadMultiplicity,
                "multiplicity must be at least 1");
  }

  // Real stem: a vertex path through the tree containing the exceptional
  // vertex.
  if (!verts.count(exceptional)) {
    throw Error(ErrorCode::BadStem, "exceptional vertex " + exceptional +
                                        " is not a tree vertex");
  }
  if (real_stem.empty()) {
    throw Error(ErrorCode::BadStem, "real stem is empty");
  }
  std::set<VertexId> stem_set;
  for (const VertexId& v : real_stem) {
    if (!verts.count(v)) {
      throw Error(ErrorCode::BadStem, "stem vertex " + v + " is unknown");
    }
    if (!stem_set.insert(v).second) {
      throw Error(ErrorCode::BadStem, "stem repeats vertex " + v);
    }
  }
  for (size_t i = 0; i + 1 < real_stem.size(); ++i) {
    bool adjacent = false;
    for (const TreeEdge& ed : edges) {
      if ((ed.ends[0] == real_stem[i] && ed.ends[1] == real_stem[i + 1]) ||
          (ed.ends[1] == real_stem[i] && ed.ends[0] == real_stem[i + 1])) {
        adjacent = true;
        break;
      }
    }
    if (!adjacent) {
      throw Error(ErrorCode::BadStem, "stem vertices " + real_stem[i] +
                                          " and " + real_stem[i + 1] +
                                          " are not adjacent");
    }
  }
  if (!stem_set.count(exceptional)) {
    throw Error(ErrorCode::BadStem,
                "real stem does not contain the exceptional vertex");
  }
  if (positive_vertex && !verts.count(*positive_vertex)) {
    throw Error(ErrorCode::BadStem,
                "positive vertex " + *positive_vertex + " is unknown");
  }
}

bool BrauerTree::has_edge(const EdgeId& id) const {
  for (const TreeEdge& ed : edges) {
    if (ed.id == id) return true;
  }
  return false;
}

const TreeEdge& BrauerTree::edge(const EdgeId& id) const {
  for (const TreeEdge& ed : edges) {
    if (ed.id == id) return ed;
  }
  throw Error(ErrorCode::InvalidDescriptor, "unknown edge " + id);
}

const std::vector<EdgeId>& BrauerTree::rotation(const VertexId& v) const {
  auto it = rotations.find(v);
  if (it == rotations.end()) {
    throw Error(ErrorCode::BadRotation, "missing rotation at vertex " + v);
  }
  return it->second;
}

std::vector<VertexId> BrauerTree::vertex_ids() const {
  std::set<VertexId> verts;
  for (const TreeEdge& ed : edges) {
    verts.insert(ed.ends[0]);
    verts.insert(ed.ends[1]);
  }
  return {verts.begin(), verts.end()};
}

int BrauerTree::valence(const VertexId& v) const {
  return static_cast<int>(rotation(v).size());
}

bool BrauerTree::incident(const EdgeId& id, const VertexId& v) const {
  const TreeEdge& ed = edge(id);
  return ed.ends[0] == v || ed.ends[1] == v;
}

VertexId BrauerTree::other_end(const EdgeId& id, const VertexId& v) const {
  const TreeEdge& ed = edge(id);
  if (ed.ends[0] == v) return ed.ends[1];
  if (ed.ends[1] == v) return ed.ends[0];
  throw Error(ErrorCode::InvalidDescriptor,
              "edge " + id + " is not incident to vertex " + v);
}

VertexId BrauerTree::shared_vertex(const EdgeId& a, const EdgeId& b) const {
  const TreeEdge& ea = edge(a);
  const TreeEdge& eb = edge(b);
  for (const VertexId& v : ea.ends) {
    if (eb.ends[0] == v || eb.ends[1] == v) return v;
  }
  throw Error(ErrorCode::InvalidDescriptor,
              "edges " + a + " and " + b + " share no vertex");
}

bool BrauerTree::is_star() const {
  for (const TreeEdge& ed : edges) {
    if (ed.ends[0] != exceptional && ed.ends[1] != exceptional) return false;
  }
  return true;
}

EdgeId BrauerTree::ccw_next(const VertexId& v, const EdgeId& from) const {
  const std::vector<EdgeId>& rot = rotation(v);
  int i = index_in_rotation(rot, from);
  return rot[(i + 1) % rot.size()];
}

EdgeId BrauerTree::ccw_prev(const VertexId& v, const EdgeId& from) const {
  const std::vector<EdgeId>& rot = rotation(v);
  int i = index_in_rotation(rot, from);
  return rot[(i + rot.size() - 1) % rot.size()];
}

int BrauerTree::stem_edge_count() const {
  return static_cast<int>(real_stem.size()) - 1;
}

std::vector<EdgeId> BrauerTree::stem_edges() const {
  std::vector<EdgeId> result;
  for (size_t i = 0; i + 1 < real_stem.size(); ++i) {
    for (const TreeEdge& ed : edges) {
      if ((ed.ends[0] == real_stem[i] && ed.ends[1] == real_stem[i + 1]) ||
          (ed.ends[1] == real_stem[i] && ed.ends[0] == real_stem[i + 1])) {
        result.push_back(ed.id);
        break;
      }
    }
  }
  return result;
}

bool BrauerTree::on_stem(const EdgeId& id) const {
  std::vector<EdgeId> stem = stem_edges();
  return std::find(stem.begin(), stem.end(), id) != stem.end();
}

bool BrauerTree::is_stem_vertex(const VertexId& v) const {
  return std::find(real_stem.begin(), real_stem.end(), v) != real_stem.end();
}

std::vector<EdgeId> BrauerTree::stem_path_to_exceptional(
    const VertexId& v) const {
  auto pos = std::find(real_stem.begin(), real_stem.end(), v);
  if (pos == real_stem.end()) {
    throw Error(ErrorCode::BadStem, "vertex " + v + " is not on the stem");
  }
  auto exc = std::find(real_stem.begin(), real_stem.end(), exceptional);
  std::vector<EdgeId> stem = stem_edges();
  std::vector<EdgeId> result;
  int i = static_cast<int>(pos - real_stem.begin());
  int j = static_cast<int>(exc - real_stem.begin());
  if (i <= j) {
    for (int k = i; k < j; ++k) result.push_back(stem[k]);
  } else {
    for (int k = i - 1; k >= j; --k) result.push_back(stem[k]);
  }
  return result;
}

VertexId BrauerTree::sign_origin() const {
  return positive_vertex ? *positive_vertex : real_stem.front();
}

std::map<VertexId, int> BrauerTree::vertex_signs() const {
  std::map<VertexId, int> signs;
  VertexId origin = sign_origin();
  signs[origin] = +1;
  std::deque<VertexId> queue{origin};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (const EdgeId& id : rotation(v)) {
      VertexId w = other_end(id, v);
      if (!signs.count(w)) {
        signs[w] = -signs[v];
        queue.push_back(w);
      }
    }
  }
  return signs;
}

BrauerTree::Contact BrauerTree::contact(const EdgeId& off_stem_edge) const {
  if (on_stem(off_stem_edge)) {
    throw Error(ErrorCode::EdgeOnStem,
                "edge " + off_stem_edge + " lies on the real stem");
  }
  // Multi-source BFS from the stem gives each vertex its distance to the
  // stem and its parent edge toward it.
  std::map<VertexId, int> dist;
  std::map<VertexId, EdgeId> parent_edge;
  std::deque<VertexId> queue;
  for (const VertexId& v : real_stem) {
    dist[v] = 0;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (const EdgeId& id : rotation(v)) {
      VertexId w = other_end(id, v);
      if (!dist.count(w)) {
        dist[w] = dist[v] + 1;
        parent_edge[w] = id;
        queue.push_back(w);
      }
    }
  }
  const TreeEdge& ed = edge(off_stem_edge);
  // In a tree the two endpoints of an off-stem edge differ in stem distance
  // by exactly one; walk down from the nearer endpoint.
  VertexId nearer = dist[ed.ends[0]] < dist[ed.ends[1]] ? ed.ends[0]
                                                        : ed.ends[1];
  Contact result;
  result.geodesic.push_back(off_stem_edge);
  VertexId v = nearer;
  while (dist[v] > 0) {
    result.geodesic.push_back(parent_edge[v]);
    v = other_end(parent_edge[v], v);
  }
  result.vertex = v;
  result.stem_tail = stem_path_to_exceptional(v);
  return result;
}

namespace {

// Recursive pairing of the subtrees hanging off a matched edge pair.  Enters
// with (x, y) already recorded in the edge map and their near endpoints
// already matched; matches the far endpoints and their anchored rotations.
struct ReflectionBuilder {
  const BrauerTree& tree;
  Reflection out;

  void match_vertices(const VertexId& a, const VertexId& b) {
    auto it = out.vertex_map.find(a);
    if (it != out.vertex_map.end()) {
      if (it->second != b) {
        throw Error(ErrorCode::NotReflectionSymmetric,
                    "vertex " + a + " would need two distinct images");
      }
      return;
    }
    out.vertex_map[a] = b;
    out.vertex_map[b] = a;
  }

  void match_edges(const EdgeId& a, const EdgeId& b) {
    auto it = out.edge_map.find(a);
    if (it != out.edge_map.end()) {
      if (it->second != b) {
        throw Error(ErrorCode::NotReflectionSymmetric,
                    "edge " + a + " would need two distinct images");
      }
      return;
    }
    out.edge_map[a] = b;
    out.edge_map[b] = a;
  }

  void descend(const EdgeId& x, const VertexId& x_near, const EdgeId& y,
               const VertexId& y_near) {
    VertexId fx = tree.other_end(x, x_near);
    VertexId fy = tree.other_end(y, y_near);
    match_vertices(fx, fy);
    const std::vector<EdgeId>& rx = tree.rotation(fx);
    const std::vector<EdgeId>& ry = tree.rotation(fy);
    int d = static_cast<int>(rx.size());
    if (d != static_cast<int>(ry.size())) {
      throw Error(ErrorCode::NotReflectionSymmetric,
                  "vertices " + fx + " and " + fy + " have unequal valence");
    }
    int ax = 0, ay = 0;
    while (rx[ax] != x) ++ax;
    while (ry[ay] != y) ++ay;
    // Anchored at the entering edges, the mirror sends the t-th ccw edge at
    // fx to the t-th clockwise edge at fy.
    for (int t = 1; t < d; ++t) {
      const EdgeId& ex = rx[(ax + t) % d];
      const EdgeId& ey = ry[(ay + d - t) % d];
      bool fresh = !out.edge_map.count(ex);
      match_edges(ex, ey);
      if (fresh) descend(ex, fx, ey, fy);
    }
  }
};

bool cyclically_equal(const std::vector<EdgeId>& a,
                      const std::vector<EdgeId>& b) {
  if (a.size() != b.size()) return false;
  int n = static_cast<int>(a.size());
  for (int shift = 0; shift < n; ++shift) {
    bool match = true;
    for (int i = 0; i < n; ++i) {
      if (a[i] != b[(i + shift) % n]) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

}  // namespace

Reflection derive_reflection(const BrauerTree& tree) {
  ReflectionBuilder builder{tree, {}};
  for (const VertexId& v : tree.real_stem) {
    builder.out.vertex_map[v] = v;
  }
  for (const EdgeId& id : tree.stem_edges()) {
    builder.out.edge_map[id] = id;
  }

  std::vector<EdgeId> stem = tree.stem_edges();
  for (size_t pos = 0; pos < tree.real_stem.size(); ++pos) {
    const VertexId& v = tree.real_stem[pos];
    const std::vector<EdgeId>& rot = tree.rotation(v);
    int d = static_cast<int>(rot.size());
    if (stem.empty()) {
      // Single-vertex stem: the mirror reverses the stored rotation list,
      // which is fixed-point-free only for even valence.
      if (d % 2 != 0) {
        throw Error(ErrorCode::NotReflectionSymmetric,
                    "vertex " + v + " has odd valence on a one-vertex stem");
      }
      for (int i = 0; i * 2 < d - 1; ++i) {
        const EdgeId& ex = rot[i];
        const EdgeId& ey = rot[d - 1 - i];
        bool fresh = !builder.out.edge_map.count(ex);
        builder.match_edges(ex, ey);
        if (fresh) builder.descend(ex, v, ey, v);
      }
      continue;
    }
    bool interior = pos > 0 && pos + 1 < tree.real_stem.size();
    if (interior) {
      // Two fixed stem edges force an even valence with the second stem edge
      // diametrically opposite the first in the rotation.
      const EdgeId& prev = stem[pos - 1];
      const EdgeId& next = stem[pos];
      int ai = index_in_rotation(rot, prev);
      int bi = index_in_rotation(rot, next);
      if (d % 2 != 0 || (bi - ai + d) % d != d / 2) {
        throw Error(ErrorCode::NotReflectionSymmetric,
                    "stem edges at vertex " + v +
                        " are not diametrically opposite");
      }
      for (int t = 1; t < d / 2; ++t) {
        const EdgeId& ex = rot[(ai + t) % d];
        const EdgeId& ey = rot[(ai + d - t) % d];
        bool fresh = !builder.out.edge_map.count(ex);
        builder.match_edges(ex, ey);
        if (fresh) builder.descend(ex, v, ey, v);
      }
    } else {
      // Stem endpoint: one fixed edge, so the remaining edges pair up only
      // when the valence is odd.
      const EdgeId& anchor = pos == 0 ? stem.front() : stem.back();
      if (d % 2 == 0) {
        throw Error(ErrorCode::NotReflectionSymmetric,
                    "stem endpoint " + v + " has even valence");
      }
      int ai = index_in_rotation(rot, anchor);
      for (int t = 1; t * 2 < d; ++t) {
        const EdgeId& ex = rot[(ai + t) % d];
        const EdgeId& ey = rot[(ai + d - t) % d];
        bool fresh = !builder.out.edge_map.count(ex);
        builder.match_edges(ex, ey);
        if (fresh) builder.descend(ex, v, ey, v);
      }
    }
  }

  Reflection& result = builder.out;
  // Self-certification: a complete involution that conjugates every rotation
  // to the reversed rotation of the image vertex.
  for (const TreeEdge& ed : tree.edges) {
    if (!result.edge_map.count(ed.id)) {
      throw Error(ErrorCode::NotReflectionSymmetric,
                  "edge " + ed.id + " was never paired");
    }
  }
  for (const auto& [a, b] : result.edge_map) {
    if (result.edge_map.at(b) != a) {
      throw Error(ErrorCode::NotReflectionSymmetric,
                  "edge map is not an involution at " + a);
    }
  }
  for (const auto& [a, b] : result.vertex_map) {
    if (result.vertex_map.at(b) != a) {
      throw Error(ErrorCode::NotReflectionSymmetric,
                  "vertex map is not an involution at " + a);
    }
  }
  for (const VertexId& v : tree.vertex_ids()) {
    if (!result.vertex_map.count(v)) {
      throw Error(ErrorCode::NotReflectionSymmetric,
                  "vertex " + v + " was never paired");
    }
    const std::vector<EdgeId>& rot = tree.rotation(v);
    const std::vector<EdgeId>& img = tree.rotation(result.vertex_map.at(v));
    std::vector<EdgeId> mirrored;
    mirrored.push_back(result.edge_map.at(rot.front()));
    for (size_t i = rot.size(); i > 1; --i) {
      mirrored.push_back(result.edge_map.at(rot[i - 1]));
    }
    if (!cyclically_equal(mirrored, img)) {
      throw Error(ErrorCode::NotReflectionSymmetric,
                  "rotation at " + v + " is not mirrored at its image");
    }
  }
  return result;
}

StemStats stem_stats(const BrauerTree& tree) {
  StemStats stats{tree.stem_edge_count(), 0};
  for (const TreeEdge& ed : tree.edges) {
    if (tree.on_stem(ed.id)) continue;
    if (tree.contact(ed.id).vertex != tree.exceptional) ++stats.kappa;
  }
  return stats;
}

}  // namespace brauer
