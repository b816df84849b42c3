#include "brauer/catalog.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <utility>
#include <vector>

#include "brauer/fixtures.hpp"
#include "support/checks.hpp"
#include "support/tree_gen.hpp"

namespace brauer {
namespace {

using testsupport::expect_error;

std::set<JanuszDescriptor> duality_fixed_points(const BrauerTree& t) {
  Reflection refl = derive_reflection(t);
  std::set<JanuszDescriptor> fixed;
  for (const JanuszDescriptor& d : enumerate_descriptors(t)) {
    if (dual_descriptor(refl, d) == canonical_descriptor(d)) {
      fixed.insert(canonical_descriptor(d));
    }
  }
  return fixed;
}

void check_catalog_matches_fixed_points(const BrauerTree& t) {
  SelfDualCatalog cat = classify(t);
  std::set<JanuszDescriptor> paths;
  for (const CatalogEntry& entry : cat.paths) {
    EXPECT_TRUE(paths.insert(entry.descriptor).second)
        << "duplicate descriptor in the catalog";
  }
  EXPECT_EQ(paths, duality_fixed_points(t));

  // The self-dual simple modules are exactly the stem edges.
  Reflection refl = derive_reflection(t);
  std::set<EdgeId> self_dual_simples;
  for (const TreeEdge& ed : t.edges) {
    JanuszDescriptor s = make_descriptor(t, {ed.id}, +1, 0);
    if (dual_descriptor(refl, s) == canonical_descriptor(s)) {
      self_dual_simples.insert(ed.id);
    }
  }
  std::set<EdgeId> stem(cat.irreducibles.begin(), cat.irreducibles.end());
  EXPECT_EQ(self_dual_simples, stem);

  // Together they exhaust the self-dual non-projectives: em of them.
  EXPECT_EQ(static_cast<int>(paths.size() + stem.size()),
            t.edge_count() * t.multiplicity);
}

TEST(Catalog, ReeBlockCounts) {
  BrauerTree t = ree_tree();
  SelfDualCatalog cat = classify(t);
  EXPECT_EQ(cat.b, 4);
  EXPECT_EQ(cat.kappa, 8);
  EXPECT_EQ(cat.irreducibles.size(), 4u);
  EXPECT_EQ(cat.pims.size(), 4u);
  EXPECT_EQ(cat.family_size(CatalogFamily::C), 0);
  EXPECT_EQ(cat.family_size(CatalogFamily::DI), 8);
  EXPECT_EQ(cat.family_size(CatalogFamily::DII), 0);
  EXPECT_EQ(cat.family_size(CatalogFamily::DIII), 64);
  EXPECT_EQ(cat.family_size(CatalogFamily::DIV), 32);
  EXPECT_EQ(cat.paths.size(), 104u);
  EXPECT_EQ(cat.irreducibles,
            (std::vector<EdgeId>{"E0", "E1", "E2", "E3"}));
}

TEST(Catalog, ReeFamilySizesMatchTheFormulas) {
  BrauerTree t = ree_tree();
  SelfDualCatalog cat = classify(t);
  const int e = t.edge_count(), m = t.multiplicity;
  const int b = cat.b, kappa = cat.kappa;
  EXPECT_EQ(cat.family_size(CatalogFamily::DI), kappa);
  EXPECT_EQ(cat.family_size(CatalogFamily::DII), (e - b - kappa) * m);
  EXPECT_EQ(cat.family_size(CatalogFamily::DIII), kappa * (m - 1));
  EXPECT_EQ(cat.family_size(CatalogFamily::DIV), b * (m - 1));
  EXPECT_EQ(b + static_cast<int>(cat.paths.size()), e * m);
}

TEST(Catalog, StarExampleModules) {
  BrauerTree t = star_tree_e3_m2();
  SelfDualCatalog cat = classify(t);
  StarParams p = star_params_for(t);
  std::map<EdgeId, int> index = star_edge_indices(t);

  std::set<std::pair<int, int>> modules;
  for (const CatalogEntry& entry : non_projective_entries(t, cat)) {
    Composition c = composition_factors(t, entry.descriptor);
    std::vector<EdgeId> series = c.series();  // uniserial head-to-socle
    ASSERT_FALSE(series.empty());
    modules.insert({index.at(series.back()),
                    static_cast<int>(series.size())});
  }
  std::set<std::pair<int, int>> want = {{0, 1}, {2, 2}, {2, 5},
                                        {1, 3}, {1, 6}, {0, 4}};
  EXPECT_EQ(modules, want);

  // Each listed module satisfies the closed-form self-duality test.
  for (const auto& [socle, length] : modules) {
    EXPECT_TRUE(is_self_dual(p, make_star_module(p, socle, length)));
  }
}

TEST(Catalog, StarExampleFamilies) {
  BrauerTree t = star_tree_e3_m2();
  SelfDualCatalog cat = classify(t);
  EXPECT_EQ(cat.b, 1);
  EXPECT_EQ(cat.kappa, 0);
  EXPECT_EQ(cat.family_size(CatalogFamily::DII), 4);
  EXPECT_EQ(cat.family_size(CatalogFamily::DIV), 1);
  EXPECT_EQ(cat.irreducibles, (std::vector<EdgeId>{"E0"}));
  // DIV walks the stem back and forth with a wrap.
  for (const CatalogEntry& entry : cat.paths) {
    if (entry.family == CatalogFamily::DIV) {
      EXPECT_EQ(entry.descriptor.edges, (std::vector<EdgeId>{"E0", "E0"}));
      EXPECT_EQ(entry.descriptor.mu, 2);
    }
  }
}

TEST(Catalog, MultiplicityOneUsesFamilyC) {
  // m = 1: only the symmetric paths through the stem survive.
  BrauerTree t;
  t.edges = {{"A", {"u", "v"}}, {"B", {"u", "x"}}, {"C", {"u", "y"}}};
  t.rotations = {{"u", {"B", "A", "C"}},
                 {"v", {"A"}},
                 {"x", {"B"}},
                 {"y", {"C"}}};
  t.exceptional = "v";
  t.multiplicity = 1;
  t.real_stem = {"u", "v"};
  t.validate();
  SelfDualCatalog cat = classify(t);
  EXPECT_EQ(cat.b, 1);
  EXPECT_EQ(cat.family_size(CatalogFamily::C), 2);
  EXPECT_EQ(cat.family_size(CatalogFamily::DI), 0);
  EXPECT_EQ(cat.family_size(CatalogFamily::DII), 0);
  check_catalog_matches_fixed_points(t);
}

TEST(Catalog, FixedPointsOnFixtures) {
  check_catalog_matches_fixed_points(ree_tree());
  check_catalog_matches_fixed_points(star_tree_e3_m2());
}

TEST(Catalog, FixedPointsOnRandomCorpus) {
  std::mt19937 rng(17);
  testsupport::TreeGenOptions opt;
  opt.max_em = 24;
  for (int k = 0; k < 25; ++k) {
    BrauerTree t = testsupport::random_symmetric_tree(rng, opt);
    t.validate();
    check_catalog_matches_fixed_points(t);
  }
}

TEST(Catalog, StarParamsReadOffTheStem) {
  StarParams ree = star_params_for(ree_tree());
  EXPECT_EQ(ree.e, 12);
  EXPECT_EQ(ree.m, 9);
  EXPECT_EQ(ree.star_case, StarCase::TwoSelfDualSimples);

  StarParams star = star_params_for(star_tree_e3_m2());
  EXPECT_EQ(star.e, 3);
  EXPECT_EQ(star.m, 2);
  EXPECT_EQ(star.star_case, StarCase::OneSelfDualSimple);
}

TEST(Catalog, StarEdgeIndicesFollowTheRotation) {
  BrauerTree t = star_tree_e3_m2();
  std::map<EdgeId, int> index = star_edge_indices(t);
  EXPECT_EQ(index.at("E0"), 0);
  EXPECT_EQ(index.at("E1"), 1);
  EXPECT_EQ(index.at("E1*"), 2);
  expect_error(ErrorCode::CaseMismatch, [&] { star_edge_indices(ree_tree()); });
}

TEST(Catalog, NonProjectiveEntriesListEverything) {
  BrauerTree t = ree_tree();
  SelfDualCatalog cat = classify(t);
  std::vector<CatalogEntry> all = non_projective_entries(t, cat);
  EXPECT_EQ(all.size(), 108u);
  for (size_t k = 0; k < 4; ++k) {
    EXPECT_EQ(all[k].family, CatalogFamily::Irreducible);
    EXPECT_EQ(all[k].descriptor.edges.size(), 1u);
    EXPECT_EQ(all[k].descriptor.mu, 0);
  }
  for (size_t k = 4; k < all.size(); ++k) {
    EXPECT_NE(all[k].family, CatalogFamily::Irreducible);
    EXPECT_NE(all[k].family, CatalogFamily::Pim);
  }
}

TEST(CatalogLocate, StarEntriesLandOnTheCensus) {
  BrauerTree t = star_tree_e3_m2();
  SelfDualCatalog cat = classify(t);
  StarParams p = star_params_for(t);
  SelfDualCensus census = self_dual_census(p);
  std::set<std::pair<int, int>> seen;
  for (const CatalogEntry& entry : non_projective_entries(t, cat)) {
    std::vector<TubePosition> where = locate(t, entry, p);
    ASSERT_EQ(where.size(), 1u);  // e odd: one column per level
    const TubePosition& pos = where[0];
    ASSERT_EQ(census.columns[pos.level - 1].size(), 1u);
    EXPECT_EQ(census.columns[pos.level - 1][0], pos.column);
    EXPECT_TRUE(seen.insert({pos.column, pos.level}).second);
  }
  EXPECT_EQ(seen.size(), 6u);  // all of the tube's self-dual positions
}

TEST(CatalogLocate, DistanceFallbackAndErrors) {
  BrauerTree t = ree_tree();
  SelfDualCatalog cat = classify(t);
  StarParams p = star_params_for(t);

  // A non-hook path entry has no intrinsic location: NeedsDistance.
  const CatalogEntry* deep = nullptr;
  for (const CatalogEntry& entry : cat.paths) {
    if (entry.family == CatalogFamily::DIII) {
      deep = &entry;
      break;
    }
  }
  ASSERT_NE(deep, nullptr);
  expect_error(ErrorCode::NeedsDistance, [&] { locate(t, *deep, p); });

  // Supplying the rim distance resolves it to census columns.
  std::vector<TubePosition> where = locate(t, *deep, p, 14);
  ASSERT_FALSE(where.empty());
  for (const TubePosition& pos : where) {
    EXPECT_EQ(pos.level, 15);
    EXPECT_EQ(dual_position(p, pos), pos);
  }

  // Projective covers live outside the stable tube.
  CatalogEntry pim;
  pim.family = CatalogFamily::Pim;
  pim.edge = "E0";
  expect_error(ErrorCode::ProjectiveInput, [&] { locate(t, pim, p); });

  // A distance pointing at a level with no self-dual column is rejected.
  expect_error(ErrorCode::NotSelfDualPosition,
               [&] { locate(t, *deep, p, 13); });
}

TEST(CatalogLocate, HookIrreduciblesSitOnTheRims) {
  // The two hook simples of the Ree tree are the stem edges at the stem's
  // ends; locate pins them to the census hook positions.
  BrauerTree t = ree_tree();
  SelfDualCatalog cat = classify(t);
  StarParams p = star_params_for(t);
  SelfDualCensus census = self_dual_census(p);
  std::vector<CatalogEntry> all = non_projective_entries(t, cat);
  std::vector<TubePosition> found;
  for (const CatalogEntry& entry : all) {
    if (entry.family != CatalogFamily::Irreducible) continue;
    try {
      std::vector<TubePosition> where = locate(t, entry, p);
      ASSERT_EQ(where.size(), 1u);
      found.push_back(where[0]);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NeedsDistance);
    }
  }
  ASSERT_EQ(found.size(), 2u);
  EXPECT_TRUE((found[0] == census.hooks[0] && found[1] == census.hooks[1]) ||
              (found[0] == census.hooks[1] && found[1] == census.hooks[0]));
}

}  // namespace
}  // namespace brauer
