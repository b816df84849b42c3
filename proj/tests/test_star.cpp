#include "brauer/star.hpp"

#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "support/checks.hpp"

namespace brauer {
namespace {

using testsupport::expect_error;

StarParams params(int e, int m, StarCase c) {
  StarParams p;
  p.e = e;
  p.m = m;
  p.star_case = c;
  p.validate();
  return p;
}

// Every (e, m, case) triple the validation admits, for small e and m.
std::vector<StarParams> small_param_grid(int max_e = 8, int max_m = 6) {
  std::vector<StarParams> grid;
  for (int e = 1; e <= max_e; ++e) {
    for (int m = 1; m <= max_m; ++m) {
      for (StarCase c : {StarCase::NoSelfDualSimple,
                         StarCase::TwoSelfDualSimples,
                         StarCase::OneSelfDualSimple}) {
        StarParams p;
        p.e = e;
        p.m = m;
        p.star_case = c;
        try {
          p.validate();
        } catch (const Error&) {
          continue;
        }
        grid.push_back(p);
      }
    }
  }
  return grid;
}

TEST(StarParamsValidate, CaseParityRules) {
  EXPECT_NO_THROW(params(4, 3, StarCase::NoSelfDualSimple));
  EXPECT_NO_THROW(params(4, 3, StarCase::TwoSelfDualSimples));
  EXPECT_NO_THROW(params(3, 2, StarCase::OneSelfDualSimple));

  StarParams p;
  p.e = 0;
  p.m = 1;
  p.star_case = StarCase::NoSelfDualSimple;
  expect_error(ErrorCode::BadMultiplicity, [&] { p.validate(); });
  p.e = 2;
  p.m = 0;
  expect_error(ErrorCode::BadMultiplicity, [&] { p.validate(); });

  // e odd admits only the one-simple case, and only with m even.
  expect_error(ErrorCode::CaseMismatch,
               [&] { params(3, 2, StarCase::NoSelfDualSimple); });
  expect_error(ErrorCode::CaseMismatch,
               [&] { params(3, 2, StarCase::TwoSelfDualSimples); });
  expect_error(ErrorCode::CaseMismatch,
               [&] { params(3, 3, StarCase::OneSelfDualSimple); });
  // e even never carries the one-simple case.
  expect_error(ErrorCode::CaseMismatch,
               [&] { params(4, 2, StarCase::OneSelfDualSimple); });
}

TEST(StarParamsValidate, DerivedConstants) {
  EXPECT_EQ(params(4, 2, StarCase::TwoSelfDualSimples).zero_star(), 0);
  EXPECT_EQ(params(4, 2, StarCase::NoSelfDualSimple).zero_star(), 3);
  EXPECT_EQ(params(5, 2, StarCase::OneSelfDualSimple).zero_star(), 0);
  EXPECT_EQ(params(4, 2, StarCase::TwoSelfDualSimples).h(), 2);
  EXPECT_EQ(params(5, 2, StarCase::OneSelfDualSimple).h(), 2);
  EXPECT_EQ(params(3, 4, StarCase::OneSelfDualSimple).max_length(), 12);
}

TEST(StarModules, ConstructionAndFactors) {
  StarParams p = params(3, 2, StarCase::OneSelfDualSimple);
  StarModule M = make_star_module(p, 5, 4);
  EXPECT_EQ(M.socle, 2);  // residue mod e
  EXPECT_EQ(M.length, 4);
  expect_error(ErrorCode::InvalidDescriptor,
               [&] { make_star_module(p, 0, 0); });
  expect_error(ErrorCode::InvalidDescriptor,
               [&] { make_star_module(p, 0, p.max_length() + 2); });

  // Socle-to-head factor indices step downward.
  EXPECT_EQ(composition_factors(p, M), (std::vector<int>{2, 1, 0, 2}));
  EXPECT_EQ(composition_factors(p, make_star_module(p, 1, 1)),
            (std::vector<int>{1}));

  EXPECT_TRUE(is_projective(p, make_star_module(p, 0, 7)));
  EXPECT_FALSE(is_projective(p, make_star_module(p, 0, 6)));
}

TEST(StarModules, InvolutionAndDuality) {
  StarParams p = params(4, 3, StarCase::NoSelfDualSimple);
  // i* = 0* - i is an involution on indices.
  for (int i = 0; i < p.e; ++i) {
    EXPECT_EQ(star_involution(p, star_involution(p, i)), i);
  }
  EXPECT_EQ(star_involution(p, 0), 3);
  EXPECT_EQ(star_involution(p, 1), 2);

  StarModule M = make_star_module(p, 2, 5);
  StarModule D = dual_module(p, M);
  EXPECT_EQ(D.length, M.length);
  // [i,l]* = [(i-l+1)*, l]: socle 2-5+1 = -2 = 2 (mod 4), 2* = 1.
  EXPECT_EQ(D.socle, 1);
  expect_error(ErrorCode::ProjectiveInput, [&] {
    dual_module(p, make_star_module(p, 0, p.max_length() + 1));
  });
}

TEST(StarModules, HellerTranslate) {
  StarParams p = params(3, 2, StarCase::OneSelfDualSimple);
  // Omega[i,l] = [i-l+1, em+1-l]; applying it twice shifts the socle by one.
  StarModule M = make_star_module(p, 0, 1);
  StarModule O = heller(p, M);
  EXPECT_EQ(O.socle, 0);
  EXPECT_EQ(O.length, 6);
  expect_error(ErrorCode::ProjectiveInput,
               [&] { heller(p, make_star_module(p, 0, 7)); });
}

TEST(StarModules, AlgebraPropertiesOnGrid) {
  for (const StarParams& p : small_param_grid()) {
    const int em = p.max_length();
    for (int i = 0; i < p.e; ++i) {
      for (int l = 1; l <= em; ++l) {
        StarModule M = make_star_module(p, i, l);
        // Duality is an involution and matches the closed-form test.
        EXPECT_EQ(dual_module(p, dual_module(p, M)), M);
        EXPECT_EQ(is_self_dual(p, M), dual_module(p, M) == M);
        // Omega is an involution up to the socle shift: Omega^2 = [i+1, l].
        StarModule O2 = heller(p, heller(p, M));
        EXPECT_EQ(O2.length, M.length);
        EXPECT_EQ(O2.socle, (M.socle + 1) % p.e);
        // Omega commutes with duality up to inverse:
        // dual(Omega(M)) = Omega^{-1}(dual(M)), so dual.Omega.dual.Omega = id.
        StarModule back =
            dual_module(p, heller(p, dual_module(p, heller(p, M))));
        EXPECT_EQ(back, M);
      }
    }
  }
}

TEST(StarModules, SubmoduleQuotientOrder) {
  StarParams p = params(4, 2, StarCase::TwoSelfDualSimples);
  StarModule small = make_star_module(p, 1, 2);
  StarModule big = make_star_module(p, 1, 5);
  EXPECT_TRUE(submodule_of(p, small, big));
  EXPECT_FALSE(submodule_of(p, big, small));
  EXPECT_FALSE(submodule_of(p, make_star_module(p, 2, 2), big));
  // Quotients share the head: i-l = j-k (mod e).
  EXPECT_TRUE(quotient_of(p, make_star_module(p, 2, 2), make_star_module(p, 1, 5)));
  EXPECT_FALSE(quotient_of(p, make_star_module(p, 1, 2), make_star_module(p, 1, 5)));
  // Every module is both a submodule and a quotient of itself.
  EXPECT_TRUE(submodule_of(p, big, big));
  EXPECT_TRUE(quotient_of(p, big, big));
}

// Brute force over all non-projective modules, straight from the congruence.
std::set<StarModule> brute_force_self_duals(const StarParams& p) {
  std::set<StarModule> out;
  for (int i = 0; i < p.e; ++i) {
    for (int l = 1; l <= p.max_length(); ++l) {
      StarModule M = make_star_module(p, i, l);
      if (dual_module(p, M) == M) out.insert(M);
    }
  }
  return out;
}

TEST(StarClassification, MatchesBruteForceOnGrid) {
  for (const StarParams& p : small_param_grid()) {
    StarClassification cls = classify_star_self_duals(p);
    std::set<StarModule> listed;
    for (const StarModule& M : cls.family1.modules) {
      EXPECT_TRUE(listed.insert(M).second);
    }
    for (const StarModule& M : cls.family2.modules) {
      EXPECT_TRUE(listed.insert(M).second);
    }
    EXPECT_EQ(listed, brute_force_self_duals(p))
        << "e=" << p.e << " m=" << p.m << " case=" << to_string(p.star_case);
    EXPECT_EQ(static_cast<int>(listed.size()), p.max_length());
    // Families come ordered by composition length, anchors belong to them.
    for (const StarFamily* f : {&cls.family1, &cls.family2}) {
      for (size_t k = 1; k < f->modules.size(); ++k) {
        EXPECT_LT(f->modules[k - 1].length, f->modules[k].length);
      }
      if (!f->modules.empty()) {
        EXPECT_TRUE(std::find(f->modules.begin(), f->modules.end(),
                              f->anchor) != f->modules.end());
      }
    }
  }
}

TEST(StarClassification, ThreeEdgeExample) {
  StarParams p = params(3, 2, StarCase::OneSelfDualSimple);
  StarClassification cls = classify_star_self_duals(p);
  std::set<std::pair<int, int>> got;
  for (const StarFamily* f : {&cls.family1, &cls.family2}) {
    for (const StarModule& M : f->modules) got.insert({M.socle, M.length});
  }
  std::set<std::pair<int, int>> want = {{0, 1}, {1, 3}, {2, 5},
                                        {2, 2}, {0, 4}, {1, 6}};
  EXPECT_EQ(got, want);
  // Family 1 grows from the self-dual simple E_0.
  EXPECT_EQ(cls.family1.modules.front(), make_star_module(p, 0, 1));
  EXPECT_EQ(cls.family1.anchor, make_star_module(p, 0, 1));
}

}  // namespace
}  // namespace brauer
