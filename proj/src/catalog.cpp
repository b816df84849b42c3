#include "brauer/catalog.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace brauer {

const char* to_string(CatalogFamily f) {
  switch (f) {
    case CatalogFamily::Irreducible: return "irreducible";
    case CatalogFamily::Pim: return "pim";
    case CatalogFamily::C: return "c";
    case CatalogFamily::DI: return "d-i";
    case CatalogFamily::DII: return "d-ii";
    case CatalogFamily::DIII: return "d-iii";
    case CatalogFamily::DIV: return "d-iv";
  }
  return "unknown";
}

int SelfDualCatalog::family_size(CatalogFamily f) const {
  int count = 0;
  for (const CatalogEntry& entry : paths) {
    if (entry.family == f) ++count;
  }
  return count;
}

StarParams star_params_for(const BrauerTree& tree) {
  StarParams p;
  p.e = tree.edge_count();
  p.m = tree.multiplicity;
  if (p.e % 2 != 0) {
    p.star_case = StarCase::OneSelfDualSimple;
  } else {
    p.star_case = tree.stem_edge_count() == 0
                      ? StarCase::NoSelfDualSimple
                      : StarCase::TwoSelfDualSimples;
  }
  return p;
}

std::map<EdgeId, int> star_edge_indices(const BrauerTree& tree) {
  if (!tree.is_star()) {
    throw Error(ErrorCode::CaseMismatch,
                "star indices are defined only for star trees");
  }
  const std::vector<EdgeId>& rot = tree.rotation(tree.exceptional);
  const int e = static_cast<int>(rot.size());
  std::vector<EdgeId> stem = tree.stem_edges();
  std::map<EdgeId, int> indices;
  int start = 0;
  if (!stem.empty()) {
    EdgeId anchor = *std::min_element(stem.begin(), stem.end());
    while (rot[start] != anchor) ++start;
  }
  for (int k = 0; k < e; ++k) {
    indices[rot[(start + k) % e]] = k;
  }
  return indices;
}

namespace {

std::vector<EdgeId> reflected_reverse(const Reflection& refl,
                                      const std::vector<EdgeId>& seq) {
  std::vector<EdgeId> out;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    out.push_back(refl.edge_map.at(*it));
  }
  return out;
}

std::vector<EdgeId> concat(std::initializer_list<std::vector<EdgeId>> parts) {
  std::vector<EdgeId> out;
  for (const std::vector<EdgeId>& part : parts) {
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace

SelfDualCatalog classify(const BrauerTree& tree) {
  tree.validate();
  Reflection refl = derive_reflection(tree);
  StemStats stats = stem_stats(tree);
  const int e = tree.edge_count();
  const int m = tree.multiplicity;

  SelfDualCatalog cat;
  cat.b = stats.b;
  cat.kappa = stats.kappa;
  cat.irreducibles = tree.stem_edges();
  cat.pims = cat.irreducibles;

  std::map<CatalogFamily, int> counters;
  auto emit = [&](CatalogFamily family, const EdgeId& seed,
                  const std::vector<EdgeId>& seq, int mu) {
    CatalogEntry entry;
    entry.family = family;
    entry.edge = seed;
    entry.descriptor =
        canonical_descriptor(make_descriptor(tree, seq, +1, mu));
    if (dual_descriptor(refl, entry.descriptor) != entry.descriptor) {
      throw Error(ErrorCode::InternalCountMismatch,
                  "catalog descriptor seeded by " + seed +
                      " is not a duality fixed point");
    }
    entry.count_index = counters[family]++;
    cat.paths.push_back(std::move(entry));
  };

  for (const TreeEdge& ed : tree.edges) {
    if (tree.on_stem(ed.id)) continue;
    BrauerTree::Contact contact = tree.contact(ed.id);
    std::vector<EdgeId> mirrored = reflected_reverse(refl, contact.geodesic);
    std::vector<EdgeId> symmetric = concat({contact.geodesic, mirrored});
    if (m == 1) {
      emit(CatalogFamily::C, ed.id, symmetric, 0);
      continue;
    }
    if (contact.vertex == tree.exceptional) {
      for (int mu = 1; mu <= m; ++mu) {
        emit(CatalogFamily::DII, ed.id, symmetric, mu);
      }
    } else {
      emit(CatalogFamily::DI, ed.id, symmetric, 0);
      std::vector<EdgeId> tail_back(contact.stem_tail.rbegin(),
                                    contact.stem_tail.rend());
      std::vector<EdgeId> extended = concat(
          {contact.geodesic, contact.stem_tail, tail_back, mirrored});
      for (int mu = 2; mu <= m; ++mu) {
        emit(CatalogFamily::DIII, ed.id, extended, mu);
      }
    }
  }

  if (m >= 2) {
    for (const EdgeId& stem_edge : tree.stem_edges()) {
      std::vector<EdgeId> to_exc;
      for (const VertexId& v : tree.edge(stem_edge).ends) {
        std::vector<EdgeId> path = tree.stem_path_to_exceptional(v);
        if (!path.empty() && path.front() == stem_edge) {
          to_exc = std::move(path);
          break;
        }
      }
      if (to_exc.empty()) {
        throw Error(ErrorCode::InternalCountMismatch,
                    "stem edge " + stem_edge +
                        " has no walk toward the exceptional vertex");
      }
      std::vector<EdgeId> back(to_exc.rbegin(), to_exc.rend());
      std::vector<EdgeId> seq = concat({to_exc, back});
      for (int mu = 2; mu <= m; ++mu) {
        emit(CatalogFamily::DIV, stem_edge, seq, mu);
      }
    }
  }

  // Counting identity and pairwise distinctness.
  const int b = cat.b;
  const int kappa = cat.kappa;
  auto check = [](bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::InternalCountMismatch, what);
  };
  if (m == 1) {
    check(cat.family_size(CatalogFamily::C) == e - b, "family c size");
  } else {
    check(cat.family_size(CatalogFamily::DI) == kappa, "family d-i size");
    check(cat.family_size(CatalogFamily::DII) == (e - b - kappa) * m,
          "family d-ii size");
    check(cat.family_size(CatalogFamily::DIII) == kappa * (m - 1),
          "family d-iii size");
    check(cat.family_size(CatalogFamily::DIV) == b * (m - 1),
          "family d-iv size");
  }
  std::set<JanuszDescriptor> distinct;
  for (const CatalogEntry& entry : cat.paths) {
    distinct.insert(entry.descriptor);
  }
  check(distinct.size() == cat.paths.size(),
        "catalog descriptors are not pairwise distinct");
  check(b + static_cast<int>(cat.paths.size()) == e * m,
        "catalog misses the em total");
  return cat;
}

std::vector<CatalogEntry> non_projective_entries(const BrauerTree& tree,
                                                 const SelfDualCatalog& cat) {
  std::vector<CatalogEntry> out;
  int index = 0;
  for (const EdgeId& id : cat.irreducibles) {
    CatalogEntry entry;
    entry.family = CatalogFamily::Irreducible;
    entry.edge = id;
    entry.descriptor = make_descriptor(tree, {id}, +1, 0);
    entry.count_index = index++;
    out.push_back(std::move(entry));
  }
  out.insert(out.end(), cat.paths.begin(), cat.paths.end());
  return out;
}

namespace {

// Level of a hook-shaped irreducible: 1 under a positive leaf, em under a
// negative one, 0 when the edge is not a hook.
int hook_level(const BrauerTree& tree, const EdgeId& edge, int em) {
  std::map<VertexId, int> signs = tree.vertex_signs();
  for (const VertexId& v : tree.edge(edge).ends) {
    bool empty_leg = tree.valence(v) == 1 &&
                     (v != tree.exceptional || tree.multiplicity == 1);
    if (empty_leg && signs.at(v) > 0) return 1;
  }
  for (const VertexId& v : tree.edge(edge).ends) {
    bool empty_leg = tree.valence(v) == 1 &&
                     (v != tree.exceptional || tree.multiplicity == 1);
    if (empty_leg && signs.at(v) < 0) return em;
  }
  return 0;
}

}  // namespace

std::vector<TubePosition> locate(const BrauerTree& tree,
                                 const CatalogEntry& entry,
                                 const StarParams& p,
                                 std::optional<int> d_plus) {
  if (entry.family == CatalogFamily::Pim) {
    throw Error(ErrorCode::ProjectiveInput,
                "projective covers do not live in the stable tube");
  }
  SelfDualCensus census = self_dual_census(p);
  const int em = p.max_length();

  if (tree.is_star()) {
    std::map<EdgeId, int> indices = star_edge_indices(tree);
    std::vector<EdgeId> series =
        composition_factors(tree, entry.descriptor).series();
    int level = static_cast<int>(series.size());
    int column = indices.at(series.back());
    const std::vector<int>& cols = census.columns.at(level - 1);
    if (std::find(cols.begin(), cols.end(), column) == cols.end()) {
      throw Error(ErrorCode::InternalCountMismatch,
                  "star catalog entry landed on a non-self-dual position");
    }
    return {make_position(p, column, level)};
  }

  if (entry.family == CatalogFamily::Irreducible) {
    int level = hook_level(tree, entry.edge, em);
    if (level != 0) {
      const std::vector<int>& cols = census.columns.at(level - 1);
      if (cols.empty()) {
        throw Error(ErrorCode::InternalCountMismatch,
                    "self-dual hook at a level with an empty census");
      }
      if (cols.size() == 1) return {make_position(p, cols.front(), level)};
      // Two hooks share the rim: rank the stem irreducibles that land here
      // by edge id and hand out the census columns in order.
      std::vector<EdgeId> peers;
      for (const TreeEdge& ed : tree.edges) {
        if (tree.on_stem(ed.id) && hook_level(tree, ed.id, em) == level) {
          peers.push_back(ed.id);
        }
      }
      std::sort(peers.begin(), peers.end());
      auto rank = std::find(peers.begin(), peers.end(), entry.edge);
      size_t r = static_cast<size_t>(rank - peers.begin());
      if (r >= cols.size()) {
        throw Error(ErrorCode::InternalCountMismatch,
                    "more hook irreducibles than census columns at level " +
                        std::to_string(level));
      }
      return {make_position(p, cols[r], level)};
    }
  }

  if (d_plus) {
    int level = *d_plus + 1;
    if (level < 1 || level > em) {
      throw Error(ErrorCode::NotSelfDualPosition,
                  "distance " + std::to_string(*d_plus) +
                      " puts the module outside the tube");
    }
    const std::vector<int>& cols = census.columns.at(level - 1);
    if (cols.empty()) {
      throw Error(ErrorCode::NotSelfDualPosition,
                  "no self-dual position at level " + std::to_string(level) +
                      "; the supplied distance cannot belong to a self-dual "
                      "module");
    }
    std::vector<TubePosition> out;
    for (int c : cols) out.push_back(make_position(p, c, level));
    return out;
  }
  throw Error(ErrorCode::NeedsDistance,
              "position on a general tree needs a supplied distance");
}

}  // namespace brauer
