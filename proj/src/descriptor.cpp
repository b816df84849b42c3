#include "brauer/descriptor.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace brauer {

const char* to_string(DescriptorKind k) {
  switch (k) {
    case DescriptorKind::TypeI: return "TypeI";
    case DescriptorKind::TypeII: return "TypeII";
  }
  return "UnknownKind";
}

const char* to_string(UniserialShape s) {
  switch (s) {
    case UniserialShape::NotUniserial: return "NotUniserial";
    case UniserialShape::Irreducible: return "Irreducible";
    case UniserialShape::U1: return "U1";
    case UniserialShape::U2: return "U2";
    case UniserialShape::U3: return "U3";
    case UniserialShape::U4: return "U4";
    case UniserialShape::U5: return "U5";
  }
  return "UnknownShape";
}

const char* to_string(SelfDualShape s) {
  switch (s) {
    case SelfDualShape::None: return "None";
    case SelfDualShape::USD1: return "USD1";
    case SelfDualShape::USD2: return "USD2";
    case SelfDualShape::USD3: return "USD3";
  }
  return "UnknownShape";
}

JanuszDescriptor mirror_descriptor(const JanuszDescriptor& d) {
  JanuszDescriptor out = d;
  std::reverse(out.edges.begin(), out.edges.end());
  out.dir_first = d.dir_last;
  out.dir_last = d.dir_first;
  return out;
}

namespace {

// Canonical order: edge sequence lexicographically, then +1 before -1.
bool precedes(const JanuszDescriptor& a, const JanuszDescriptor& b) {
  if (a.edges != b.edges) return a.edges < b.edges;
  return a.dir_first > b.dir_first;
}

}  // namespace

JanuszDescriptor canonical_descriptor(const JanuszDescriptor& d) {
  JanuszDescriptor m = mirror_descriptor(d);
  JanuszDescriptor out = precedes(m, d) ? m : d;
  if (out.length() == 1) {
    // A one-edge walk has no meetings, so its sign carries no information;
    // fix the positive representative.
    out.dir_first = 1;
    out.dir_last = 1;
  }
  return out;
}

namespace {

// Reconstructed vertex walk of an edge sequence, with the wrap parse around
// the exceptional vertex.
struct WalkAnalysis {
  std::vector<VertexId> walk;  // t+1 vertices
  int exc_index = -1;          // 0-based index into walk, -1 = never visited
  int wrap = 0;                // mirror-run length l (interior visits only)
  bool endpoint = false;       // exceptional vertex at a walk end
  std::vector<std::string> violations;
};

std::vector<std::string> check_candidate(const BrauerTree& tree,
                                         const std::vector<EdgeId>& edges,
                                         const std::vector<VertexId>& walk,
                                         WalkAnalysis& out) {
  std::vector<std::string> violations;
  const int t = static_cast<int>(edges.size());

  for (int j = 1; j < t; ++j) {
    if (edges[j] == edges[j - 1] && walk[j] != tree.exceptional) {
      violations.push_back("repeated edge at the non-exceptional vertex " +
                           walk[j]);
    }
  }

  std::vector<int> exc_indices;
  for (int k = 0; k <= t; ++k) {
    if (walk[k] == tree.exceptional) exc_indices.push_back(k);
  }

  auto require_distinct = [&](const std::vector<EdgeId>& list,
                              const std::string& what) {
    std::set<EdgeId> seen;
    for (const EdgeId& id : list) {
      if (!seen.insert(id).second) {
        violations.push_back(what + " repeats edge " + id);
        return;
      }
    }
  };

  if (tree.multiplicity == 1 || exc_indices.empty()) {
    // No exceptional contact (with m = 1 the walk is read as if the tree had
    // no exceptional vertex at all).
    require_distinct(edges, "walk");
    return violations;
  }
  if (exc_indices.size() > 1) {
    violations.push_back("walk meets the exceptional vertex more than once");
    return violations;
  }

  int k = exc_indices.front();
  out.exc_index = k;
  if (k == 0 || k == t) {
    out.endpoint = true;
    require_distinct(edges, "walk");
    return violations;
  }
  // Interior visit: take the maximal mirror run around position k.
  int l = 0;
  while (l + 1 <= std::min(k, t - k) && edges[k - (l + 1)] == edges[k + l]) {
    ++l;
  }
  out.wrap = l;
  std::vector<EdgeId> non_wrap(edges.begin(), edges.begin() + k);
  non_wrap.insert(non_wrap.end(), edges.begin() + k + l, edges.end());
  require_distinct(non_wrap, "walk (outside the exceptional wrap)");
  return violations;
}

WalkAnalysis analyze_walk(const BrauerTree& tree,
                          const std::vector<EdgeId>& edges) {
  WalkAnalysis best;
  if (edges.empty()) {
    best.violations.push_back("descriptor has no edges");
    return best;
  }
  for (const EdgeId& id : edges) {
    if (!tree.has_edge(id)) {
      best.violations.push_back("unknown edge " + id);
      return best;
    }
  }
  bool have_candidate = false;
  for (const VertexId& start : tree.edge(edges.front()).ends) {
    std::vector<VertexId> walk{start};
    bool ok = true;
    for (const EdgeId& id : edges) {
      if (!tree.incident(id, walk.back())) {
        ok = false;
        break;
      }
      walk.push_back(tree.other_end(id, walk.back()));
    }
    if (!ok) continue;
    WalkAnalysis candidate;
    candidate.walk = walk;
    candidate.violations = check_candidate(tree, edges, walk, candidate);
    if (candidate.violations.empty()) return candidate;
    if (!have_candidate) {
      best = candidate;
      have_candidate = true;
    }
  }
  if (!have_candidate) {
    best.violations.push_back("edges do not form a connected walk");
  }
  return best;
}

DescriptorKind kind_of(const BrauerTree& tree, const WalkAnalysis& analysis,
                       int t) {
  bool exceptional_contact =
      tree.multiplicity >= 2 && analysis.exc_index >= 0 && t >= 2;
  return exceptional_contact ? DescriptorKind::TypeII : DescriptorKind::TypeI;
}

}  // namespace

std::vector<std::string> validate_descriptor(const BrauerTree& tree,
                                             const JanuszDescriptor& d) {
  WalkAnalysis analysis = analyze_walk(tree, d.edges);
  std::vector<std::string> violations = analysis.violations;
  if (!violations.empty()) return violations;

  const int t = d.length();
  if (d.dir_first != 1 && d.dir_first != -1) {
    violations.push_back("direction must be +1 or -1");
    return violations;
  }
  if (d.dir_last != d.sign_at(t)) {
    violations.push_back("direction pair inconsistent with alternation");
  }

  DescriptorKind kind = kind_of(tree, analysis, t);
  if (d.kind != kind) {
    violations.push_back(std::string("kind does not match the walk: expected ") +
                         to_string(kind));
  }
  if (kind == DescriptorKind::TypeI) {
    if (d.mu != 0) {
      violations.push_back(
          "multiplicity must be 0 without exceptional contact");
    }
  } else if (analysis.endpoint) {
    if (d.mu != 1) {
      violations.push_back(
          "multiplicity must be 1 when the walk meets the exceptional "
          "vertex at an end");
    }
  } else if (analysis.wrap == 0) {
    if (d.mu < 1 || d.mu > tree.multiplicity) {
      violations.push_back("multiplicity outside 1.." +
                           std::to_string(tree.multiplicity));
    }
  } else {
    if (d.mu < 2 || d.mu > tree.multiplicity) {
      violations.push_back("multiplicity outside 2.." +
                           std::to_string(tree.multiplicity) +
                           " for a wrapped walk");
    }
  }
  return violations;
}

void require_valid(const BrauerTree& tree, const JanuszDescriptor& d) {
  std::vector<std::string> violations = validate_descriptor(tree, d);
  if (!violations.empty()) {
    throw Error(ErrorCode::InvalidDescriptor, violations.front());
  }
}

JanuszDescriptor make_descriptor(const BrauerTree& tree,
                                 std::vector<EdgeId> edges, int dir_first,
                                 int mu) {
  JanuszDescriptor d;
  d.edges = std::move(edges);
  d.dir_first = dir_first;
  d.dir_last = d.sign_at(d.length());
  d.mu = mu;
  WalkAnalysis analysis = analyze_walk(tree, d.edges);
  if (analysis.violations.empty()) {
    d.kind = kind_of(tree, analysis, d.length());
  }
  require_valid(tree, d);
  return d;
}

TopSocle top_socle(const JanuszDescriptor& d) {
  TopSocle out;
  for (int j = 1; j <= d.length(); ++j) {
    if (d.sign_at(j) > 0) {
      ++out.head[d.edges[j - 1]];
    } else {
      ++out.socle[d.edges[j - 1]];
    }
  }
  return out;
}

int Composition::length() const {
  int total = 0;
  for (const auto& [id, count] : factors) total += count;
  return total;
}

std::vector<EdgeId> Composition::series() const {
  if (pieces.size() != 1 ||
      (!pieces.front().left_leg.empty() &&
       !pieces.front().right_leg.empty())) {
    throw Error(ErrorCode::InvalidDescriptor,
                "composition is not uniserial");
  }
  const CompositionPiece& piece = pieces.front();
  std::vector<EdgeId> series{piece.head};
  const std::vector<EdgeId>& leg =
      piece.left_leg.empty() ? piece.right_leg : piece.left_leg;
  series.insert(series.end(), leg.begin(), leg.end());
  return series;
}

namespace {

// Counterclockwise walk around a vertex starting after `from`, collected
// top-to-bottom until `target` has been passed `occurrences` times.
std::vector<EdgeId> leg_walk(const BrauerTree& tree, const VertexId& v,
                             const EdgeId& from, const EdgeId& target,
                             int occurrences) {
  std::vector<EdgeId> leg;
  EdgeId cur = from;
  int count = 0;
  while (count < occurrences) {
    cur = tree.ccw_next(v, cur);
    leg.push_back(cur);
    if (cur == target) ++count;
  }
  return leg;
}

int leg_occurrences(const BrauerTree& tree, const VertexId& v,
                    const EdgeId& head, const EdgeId& target, int mu) {
  if (v != tree.exceptional || tree.multiplicity == 1) return 1;
  // Around the exceptional vertex the head edge must occur mu times in
  // head-plus-leg: stop at the mu-th passing of the target edge, one fewer
  // when the walk bounces over the head edge itself.
  return head == target ? mu - 1 : mu;
}

}  // namespace

Composition composition_factors(const BrauerTree& tree,
                                const JanuszDescriptor& d) {
  require_valid(tree, d);
  WalkAnalysis analysis = analyze_walk(tree, d.edges);
  const std::vector<VertexId>& walk = analysis.walk;
  const int t = d.length();

  Composition out;
  for (int i = 1; i <= t; ++i) {
    if (d.sign_at(i) < 0) continue;
    CompositionPiece piece;
    piece.head = d.edges[i - 1];
    if (i > 1) {
      const VertexId& v = walk[i - 1];
      piece.left_leg =
          leg_walk(tree, v, piece.head, d.edges[i - 2],
                   leg_occurrences(tree, v, piece.head, d.edges[i - 2], d.mu));
    }
    if (i < t) {
      const VertexId& v = walk[i];
      piece.right_leg =
          leg_walk(tree, v, piece.head, d.edges[i],
                   leg_occurrences(tree, v, piece.head, d.edges[i], d.mu));
    }
    ++out.factors[piece.head];
    for (const EdgeId& id : piece.left_leg) ++out.factors[id];
    for (const EdgeId& id : piece.right_leg) ++out.factors[id];
    out.pieces.push_back(std::move(piece));
  }
  // Interior socle constituents are shared by the two neighbouring pieces;
  // remove the double count.
  for (int j = 2; j <= t - 1; ++j) {
    if (d.sign_at(j) < 0) {
      auto it = out.factors.find(d.edges[j - 1]);
      if (--(it->second) == 0) out.factors.erase(it);
    }
  }
  return out;
}

JanuszDescriptor dual_descriptor(const Reflection& refl,
                                 const JanuszDescriptor& d) {
  JanuszDescriptor out = d;
  for (EdgeId& id : out.edges) {
    auto it = refl.edge_map.find(id);
    if (it == refl.edge_map.end()) {
      throw Error(ErrorCode::InvalidDescriptor,
                  "edge " + id + " is not covered by the reflection");
    }
    id = it->second;
  }
  out.dir_first = -d.dir_first;
  out.dir_last = -d.dir_last;
  return canonical_descriptor(out);
}

std::map<EdgeId, int> Hook::factors() const {
  std::map<EdgeId, int> out;
  ++out[head];
  for (const EdgeId& id : leg) ++out[id];
  return out;
}

namespace {

Hook hook_at(const BrauerTree& tree, const EdgeId& edge, const VertexId& v,
             int sign) {
  Hook hook;
  hook.head = edge;
  hook.vertex = v;
  hook.sign = sign;
  int steps = tree.valence(v);
  if (v == tree.exceptional) steps *= tree.multiplicity;
  EdgeId cur = edge;
  for (int i = 0; i < steps - 1; ++i) {
    cur = tree.ccw_next(v, cur);
    hook.leg.push_back(cur);
  }
  return hook;
}

}  // namespace

HookPair hooks(const BrauerTree& tree, const EdgeId& edge) {
  std::map<VertexId, int> signs = tree.vertex_signs();
  const TreeEdge& ed = tree.edge(edge);
  VertexId positive = signs.at(ed.ends[0]) > 0 ? ed.ends[0] : ed.ends[1];
  VertexId negative = tree.other_end(edge, positive);
  return {edge, hook_at(tree, edge, positive, +1),
          hook_at(tree, edge, negative, -1)};
}

PimStructure pim_structure(const BrauerTree& tree, const EdgeId& edge) {
  HookPair pair = hooks(tree, edge);
  PimStructure out;
  out.edge = edge;
  out.q_a = pair.hook_a.leg;
  out.q_b = pair.hook_b.leg;
  out.factors[edge] += 2;
  for (const EdgeId& id : out.q_a) ++out.factors[id];
  for (const EdgeId& id : out.q_b) ++out.factors[id];
  return out;
}

namespace {

// All simple edge paths starting at `from`, avoiding the given edges (and
// every edge incident to `banned_vertex` when it is non-empty), listed as
// edge sequences; the empty path is included.
void extend_paths(const BrauerTree& tree, const VertexId& at,
                  std::set<EdgeId>& used, std::vector<EdgeId>& current,
                  const VertexId& banned_vertex,
                  std::vector<std::vector<EdgeId>>& out) {
  out.push_back(current);
  for (const EdgeId& id : tree.rotation(at)) {
    if (used.count(id)) continue;
    VertexId next = tree.other_end(id, at);
    if (!banned_vertex.empty() &&
        (at == banned_vertex || next == banned_vertex)) {
      continue;
    }
    used.insert(id);
    current.push_back(id);
    extend_paths(tree, next, used, current, banned_vertex, out);
    current.pop_back();
    used.erase(id);
  }
}

std::vector<std::vector<EdgeId>> paths_from(const BrauerTree& tree,
                                            const VertexId& from,
                                            const std::set<EdgeId>& avoid,
                                            const VertexId& banned_vertex) {
  std::vector<std::vector<EdgeId>> out;
  std::set<EdgeId> used = avoid;
  std::vector<EdgeId> current;
  extend_paths(tree, from, used, current, banned_vertex, out);
  return out;
}

}  // namespace

std::vector<JanuszDescriptor> enumerate_descriptors(const BrauerTree& tree) {
  const int e = tree.edge_count();
  const int m = tree.multiplicity;
  std::set<JanuszDescriptor> out;

  auto emit = [&](const std::vector<EdgeId>& seq, int mu) {
    for (int dir : {+1, -1}) {
      out.insert(canonical_descriptor(make_descriptor(tree, seq, dir, mu)));
    }
  };

  // Walks with no exceptional contact (every walk when m = 1).
  VertexId banned = m >= 2 ? tree.exceptional : VertexId{};
  for (const VertexId& v : tree.vertex_ids()) {
    for (const std::vector<EdgeId>& path :
         paths_from(tree, v, {}, banned)) {
      if (path.size() >= 2) emit(path, 0);
    }
  }

  if (m >= 2) {
    // Walks meeting the exceptional vertex once: a wrap-in path W from u
    // (empty when u is the exceptional vertex itself), extended backward by
    // L and forward by R, all edge-disjoint.
    for (const VertexId& u : tree.vertex_ids()) {
      std::vector<EdgeId> wrap;  // unique path from u into the exceptional
      if (u != tree.exceptional) {
        std::set<VertexId> seen{u};
        std::function<bool(const VertexId&)> dfs =
            [&](const VertexId& v) -> bool {
          if (v == tree.exceptional) return true;
          for (const EdgeId& id : tree.rotation(v)) {
            VertexId w = tree.other_end(id, v);
            if (!seen.insert(w).second) continue;
            wrap.push_back(id);
            if (dfs(w)) return true;
            wrap.pop_back();
          }
          return false;
        };
        dfs(u);
      }
      const int l = static_cast<int>(wrap.size());
      std::set<EdgeId> wrap_set(wrap.begin(), wrap.end());
      std::vector<std::vector<EdgeId>> lefts =
          paths_from(tree, u, wrap_set, {});
      for (std::vector<EdgeId>& left : lefts) {
        std::reverse(left.begin(), left.end());  // now a walk into u
        std::set<EdgeId> used = wrap_set;
        used.insert(left.begin(), left.end());
        for (const std::vector<EdgeId>& right :
             paths_from(tree, u, used, {})) {
          std::vector<EdgeId> seq = left;
          seq.insert(seq.end(), wrap.begin(), wrap.end());
          seq.insert(seq.end(), wrap.rbegin(), wrap.rend());
          seq.insert(seq.end(), right.begin(), right.end());
          if (seq.size() < 2) continue;
          int mu_lo, mu_hi;
          if (l >= 1) {
            mu_lo = 2;
            mu_hi = m;
          } else if (!left.empty() && !right.empty()) {
            mu_lo = 1;
            mu_hi = m;
          } else {
            mu_lo = mu_hi = 1;
          }
          for (int mu = mu_lo; mu <= mu_hi; ++mu) emit(seq, mu);
        }
      }
    }
  }

  const int expected = e * (e * m - 1);
  if (static_cast<int>(out.size()) != expected) {
    throw Error(ErrorCode::CountMismatch,
                "enumerated " + std::to_string(out.size()) +
                    " descriptors, expected " + std::to_string(expected));
  }
  return {out.begin(), out.end()};
}

ShapeTags uniserial_shapes(const BrauerTree& tree, const JanuszDescriptor& d,
                           const Reflection* refl) {
  require_valid(tree, d);
  ShapeTags tags;
  if (d.length() == 1) {
    tags.shape = UniserialShape::Irreducible;
    return tags;
  }
  if (d.length() > 2) return tags;  // at least two heads

  // Classify in the head-first presentation.
  JanuszDescriptor p = d.dir_first == 1 ? d : mirror_descriptor(d);
  WalkAnalysis analysis = analyze_walk(tree, p.edges);
  if (tree.multiplicity == 1 || analysis.exc_index < 0) {
    tags.shape = UniserialShape::U1;
  } else if (analysis.exc_index == 0) {
    tags.shape = UniserialShape::U3;
  } else if (analysis.exc_index == 2) {
    tags.shape = UniserialShape::U2;
  } else {
    tags.shape = p.edges[0] == p.edges[1] ? UniserialShape::U5
                                          : UniserialShape::U4;
  }
  if (refl != nullptr) {
    const EdgeId& dual_first = refl->edge_map.at(p.edges[0]);
    if (tags.shape == UniserialShape::U1 && p.edges[1] == dual_first) {
      tags.self_dual = SelfDualShape::USD1;
    } else if (tags.shape == UniserialShape::U4 && p.edges[1] == dual_first) {
      tags.self_dual = SelfDualShape::USD2;
    } else if (tags.shape == UniserialShape::U5 && p.edges[0] == dual_first) {
      tags.self_dual = SelfDualShape::USD3;
    }
  }
  return tags;
}

}  // namespace brauer
