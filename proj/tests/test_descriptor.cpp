#include "brauer/descriptor.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <vector>

#include "brauer/fixtures.hpp"
#include "support/checks.hpp"

namespace brauer {
namespace {

using testsupport::expect_error;

std::map<EdgeId, int> add_factors(const std::map<EdgeId, int>& a,
                                  const std::map<EdgeId, int>& b) {
  std::map<EdgeId, int> out = a;
  for (const auto& [k, v] : b) out[k] += v;
  return out;
}

// Star tree with edges E0..E{e-1} around the exceptional centre; the stem
// picks the duality case: one edge (e odd), two opposite edges, or none.
BrauerTree star_tree(int e, int m, int stem_edges) {
  BrauerTree t;
  std::vector<EdgeId> rot;
  for (int k = 0; k < e; ++k) {
    EdgeId id = "E" + std::to_string(k);
    VertexId leaf = "x" + std::to_string(k);
    t.edges.push_back({id, {"c", leaf}});
    t.rotations[leaf] = {id};
    rot.push_back(id);
  }
  t.rotations["c"] = rot;
  t.exceptional = "c";
  t.multiplicity = m;
  if (stem_edges == 0) {
    t.real_stem = {"c"};
  } else if (stem_edges == 1) {
    t.real_stem = {"x0", "c"};
  } else {
    t.real_stem = {"x0", "c", "x" + std::to_string(e / 2)};
  }
  t.validate();
  return t;
}

TEST(DescriptorGrammar, MakeDescriptorFillsDerivedFields) {
  BrauerTree t = ree_tree();
  JanuszDescriptor d = make_descriptor(t, {"E4", "E6"}, +1, 0);
  EXPECT_EQ(d.dir_last, -1);
  EXPECT_EQ(d.kind, DescriptorKind::TypeI);
  EXPECT_EQ(d.sign_at(1), 1);
  EXPECT_EQ(d.sign_at(2), -1);

  JanuszDescriptor odd = make_descriptor(t, {"E5", "E4", "E4*"}, -1, 0);
  EXPECT_EQ(odd.dir_last, -1);  // alternation over three edges

  JanuszDescriptor contact = make_descriptor(t, {"E2", "E3"}, +1, 5);
  EXPECT_EQ(contact.kind, DescriptorKind::TypeII);
}

TEST(DescriptorGrammar, RejectsBrokenWalks) {
  BrauerTree t = ree_tree();
  // Consecutive edges must share a vertex.
  expect_error(ErrorCode::InvalidDescriptor,
               [&] { make_descriptor(t, {"E0", "E3"}, +1, 0); });
  // Unknown edges are walk violations.
  expect_error(ErrorCode::InvalidDescriptor,
               [&] { make_descriptor(t, {"E9"}, +1, 0); });
  // Re-using an edge away from the exceptional vertex is banned.
  expect_error(ErrorCode::InvalidDescriptor,
               [&] { make_descriptor(t, {"E5", "E5"}, +1, 2); });
  // Empty walks name nothing.
  expect_error(ErrorCode::InvalidDescriptor,
               [&] { make_descriptor(t, {}, +1, 0); });
}

TEST(DescriptorGrammar, MultiplicityRangesByContact) {
  BrauerTree t = ree_tree();  // exceptional v3, m = 9
  // No contact: mu must be 0.
  EXPECT_NO_THROW(make_descriptor(t, {"E4", "E6"}, +1, 0));
  expect_error(ErrorCode::InvalidDescriptor,
               [&] { make_descriptor(t, {"E4", "E6"}, +1, 1); });
  // Contact between two edges: mu in 1..m.
  EXPECT_NO_THROW(make_descriptor(t, {"E2", "E3"}, +1, 1));
  EXPECT_NO_THROW(make_descriptor(t, {"E2", "E3"}, +1, 9));
  expect_error(ErrorCode::InvalidDescriptor,
               [&] { make_descriptor(t, {"E2", "E3"}, +1, 0); });
  expect_error(ErrorCode::InvalidDescriptor,
               [&] { make_descriptor(t, {"E2", "E3"}, +1, 10); });
  // Contact at a walk end: mu = 1 exactly.
  EXPECT_NO_THROW(make_descriptor(t, {"E2", "E1"}, +1, 1));
  expect_error(ErrorCode::InvalidDescriptor,
               [&] { make_descriptor(t, {"E2", "E1"}, +1, 2); });
  // Bounce at the exceptional vertex: mu in 2..m.
  EXPECT_NO_THROW(make_descriptor(t, {"E3", "E3"}, +1, 2));
  expect_error(ErrorCode::InvalidDescriptor,
               [&] { make_descriptor(t, {"E3", "E3"}, +1, 1); });
  // Direction must be a sign.
  JanuszDescriptor d = make_descriptor(t, {"E4", "E6"}, +1, 0);
  d.dir_first = 0;
  EXPECT_FALSE(validate_descriptor(t, d).empty());
  d = make_descriptor(t, {"E4", "E6"}, +1, 0);
  d.dir_last = +1;
  EXPECT_FALSE(validate_descriptor(t, d).empty());
}

TEST(DescriptorCanonical, MirrorPairsNameOneModule) {
  BrauerTree t = ree_tree();
  JanuszDescriptor d = make_descriptor(t, {"E6", "E4", "E4*"}, +1, 0);
  JanuszDescriptor m = mirror_descriptor(d);
  EXPECT_EQ(m.edges, (std::vector<EdgeId>{"E4*", "E4", "E6"}));
  EXPECT_EQ(m.dir_first, d.dir_last);
  EXPECT_EQ(mirror_descriptor(m), d);
  EXPECT_EQ(canonical_descriptor(d), canonical_descriptor(m));
  // Canonicalization is idempotent and prefers the lex-smaller sequence.
  JanuszDescriptor c = canonical_descriptor(d);
  EXPECT_EQ(canonical_descriptor(c), c);
  EXPECT_LE(c.edges, mirror_descriptor(c).edges);
}

TEST(DescriptorCanonical, SingleEdgeSignIsVacuous) {
  BrauerTree t = ree_tree();
  JanuszDescriptor pos = make_descriptor(t, {"E5"}, +1, 0);
  JanuszDescriptor neg = make_descriptor(t, {"E5"}, -1, 0);
  EXPECT_NE(pos, neg);
  EXPECT_EQ(canonical_descriptor(pos), canonical_descriptor(neg));
  EXPECT_EQ(canonical_descriptor(neg).dir_first, 1);
  EXPECT_EQ(canonical_descriptor(neg).dir_last, 1);
}

TEST(DescriptorComposition, HeadsAndSocles) {
  BrauerTree t = ree_tree();
  JanuszDescriptor d = make_descriptor(t, {"E6", "E4", "E4*"}, +1, 0);
  TopSocle ts = top_socle(d);
  EXPECT_EQ(ts.head, (std::map<EdgeId, int>{{"E6", 1}, {"E4*", 1}}));
  EXPECT_EQ(ts.socle, (std::map<EdgeId, int>{{"E4", 1}}));
}

TEST(DescriptorComposition, UniserialSeriesWalksTheRotation) {
  BrauerTree t = ree_tree();
  // Head E4, socle E6; the connecting leg walks counterclockwise around p
  // from E4 (exclusive) to E6 (inclusive): rotation at p is [E7,E5,E6,E4].
  Composition c = composition_factors(t, make_descriptor(t, {"E4", "E6"}, +1, 0));
  EXPECT_EQ(c.series(), (std::vector<EdgeId>{"E4", "E7", "E5", "E6"}));
  EXPECT_EQ(c.length(), 4);
  ASSERT_EQ(c.pieces.size(), 1u);
  EXPECT_EQ(c.pieces[0].head, "E4");

  // Swapping head and socle walks the complementary arc.
  Composition r = composition_factors(t, make_descriptor(t, {"E6", "E4"}, +1, 0));
  EXPECT_EQ(r.series(), (std::vector<EdgeId>{"E6", "E4"}));
}

TEST(DescriptorComposition, ExceptionalWalkRepeatsTheLoop) {
  BrauerTree t = star_tree_e3_m2();
  // (E1, E1*) through the exceptional centre with mu = 2: the leg between
  // them wraps the full star once more.
  Composition once = composition_factors(
      t, make_descriptor(t, {"E1", "E1*"}, +1, 1));
  Composition twice = composition_factors(
      t, make_descriptor(t, {"E1", "E1*"}, +1, 2));
  EXPECT_EQ(twice.length() - once.length(), 3);
  EXPECT_EQ(once.series(), (std::vector<EdgeId>{"E1", "E1*"}));
  EXPECT_EQ(twice.series(),
            (std::vector<EdgeId>{"E1", "E1*", "E0", "E1", "E1*"}));
}

TEST(DescriptorHooks, PairCoversTheProjective) {
  for (const BrauerTree& t : {ree_tree(), star_tree_e3_m2()}) {
    for (const TreeEdge& ed : t.edges) {
      HookPair hp = hooks(t, ed.id);
      EXPECT_EQ(hp.hook_a.sign, 1);
      EXPECT_EQ(hp.hook_b.sign, -1);
      EXPECT_EQ(hp.hook_a.head, ed.id);
      PimStructure pim = pim_structure(t, ed.id);
      EXPECT_EQ(add_factors(hp.hook_a.factors(), hp.hook_b.factors()),
                pim.factors)
          << ed.id;
    }
  }
}

TEST(DescriptorHooks, LegLengthsCountTheValence) {
  BrauerTree t = ree_tree();
  HookPair hp = hooks(t, "E3");
  // E3 joins v3 (exceptional, valence 2, m = 9) and v4 (leaf).
  const Hook& exc = hp.hook_a.vertex == "v3" ? hp.hook_a : hp.hook_b;
  const Hook& leaf = hp.hook_a.vertex == "v3" ? hp.hook_b : hp.hook_a;
  EXPECT_EQ(exc.leg.size(), 9u * 2u - 1u);
  EXPECT_TRUE(leaf.leg.empty());

  // Head and socle contribute two copies of E3; the exceptional leg winds
  // through the rotation at v3 another m - 1 times, picking up eight more
  // E3's and nine E2's.
  PimStructure pim = pim_structure(t, "E3");
  EXPECT_EQ(pim.factors.at("E3"), 10);
  EXPECT_EQ(pim.factors.at("E2"), 9);
}

TEST(DescriptorDuality, ReflectionActsAsInvolution) {
  BrauerTree t = ree_tree();
  Reflection refl = derive_reflection(t);
  JanuszDescriptor d =
      canonical_descriptor(make_descriptor(t, {"E5", "E4", "E1"}, +1, 0));
  JanuszDescriptor dd = dual_descriptor(refl, d);
  EXPECT_EQ(dd.edges, (std::vector<EdgeId>{"E1", "E4*", "E5*"}));
  EXPECT_EQ(dual_descriptor(refl, dd), d);

  for (const JanuszDescriptor& x : enumerate_descriptors(t)) {
    EXPECT_EQ(dual_descriptor(refl, dual_descriptor(refl, x)),
              canonical_descriptor(x));
  }
}

TEST(DescriptorEnumeration, CensusSizeOnStars) {
  // All valid star cases with e <= 4, m <= 4: the census size is e(em-1).
  for (int e = 1; e <= 4; ++e) {
    for (int m = 1; m <= 4; ++m) {
      std::vector<int> stems;
      if (e % 2 == 1 && m % 2 == 0) stems.push_back(1);
      if (e % 2 == 0) {
        stems.push_back(2);
        stems.push_back(0);
      }
      for (int b : stems) {
        BrauerTree t = star_tree(e, m, b);
        std::vector<JanuszDescriptor> all = enumerate_descriptors(t);
        EXPECT_EQ(static_cast<int>(all.size()), e * (e * m - 1))
            << "e=" << e << " m=" << m << " b=" << b;
        // Entries are canonical, deduplicated, and sorted.
        std::set<JanuszDescriptor> seen;
        for (const JanuszDescriptor& d : all) {
          EXPECT_EQ(canonical_descriptor(d), d);
          EXPECT_TRUE(seen.insert(d).second);
          EXPECT_TRUE(validate_descriptor(t, d).empty());
        }
        EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
      }
    }
  }
}

TEST(DescriptorEnumeration, ExcludesSimplesAndProjectives) {
  BrauerTree t = ree_tree();
  std::vector<JanuszDescriptor> all = enumerate_descriptors(t);
  EXPECT_EQ(static_cast<int>(all.size()), 12 * (12 * 9 - 1));
  for (const JanuszDescriptor& d : all) EXPECT_GE(d.length(), 2);
}

TEST(DescriptorShapes, TagsFollowTheContactPattern) {
  BrauerTree t = ree_tree();
  Reflection refl = derive_reflection(t);

  ShapeTags irr = uniserial_shapes(t, make_descriptor(t, {"E5"}, +1, 0));
  EXPECT_EQ(irr.shape, UniserialShape::Irreducible);

  ShapeTags u1 = uniserial_shapes(t, make_descriptor(t, {"E4", "E6"}, +1, 0));
  EXPECT_EQ(u1.shape, UniserialShape::U1);
  EXPECT_EQ(u1.self_dual, SelfDualShape::None);

  ShapeTags u3 =
      uniserial_shapes(t, make_descriptor(t, {"E2", "E1"}, +1, 1), &refl);
  EXPECT_EQ(u3.shape, UniserialShape::U3);

  ShapeTags u2 =
      uniserial_shapes(t, make_descriptor(t, {"E1", "E2"}, +1, 1), &refl);
  EXPECT_EQ(u2.shape, UniserialShape::U2);

  ShapeTags u4 =
      uniserial_shapes(t, make_descriptor(t, {"E2", "E3"}, +1, 3), &refl);
  EXPECT_EQ(u4.shape, UniserialShape::U4);
  EXPECT_EQ(u4.self_dual, SelfDualShape::None);  // E2* = E2, not E3

  ShapeTags usd3 =
      uniserial_shapes(t, make_descriptor(t, {"E3", "E3"}, +1, 2), &refl);
  EXPECT_EQ(usd3.shape, UniserialShape::U5);
  EXPECT_EQ(usd3.self_dual, SelfDualShape::USD3);

  ShapeTags usd1 =
      uniserial_shapes(t, make_descriptor(t, {"E4", "E4*"}, +1, 0), &refl);
  EXPECT_EQ(usd1.shape, UniserialShape::U1);
  EXPECT_EQ(usd1.self_dual, SelfDualShape::USD1);

  BrauerTree star = star_tree_e3_m2();
  Reflection srefl = derive_reflection(star);
  ShapeTags usd2 = uniserial_shapes(
      star, make_descriptor(star, {"E1", "E1*"}, +1, 2), &srefl);
  EXPECT_EQ(usd2.shape, UniserialShape::U4);
  EXPECT_EQ(usd2.self_dual, SelfDualShape::USD2);

  ShapeTags tall = uniserial_shapes(
      t, make_descriptor(t, {"E6", "E4", "E4*"}, +1, 0), &refl);
  EXPECT_EQ(tall.shape, UniserialShape::NotUniserial);
}

}  // namespace
}  // namespace brauer
