#include "brauer/star.hpp"

#include <string>

namespace brauer {

namespace {

int mod(int a, int e) { return ((a % e) + e) % e; }

std::string name(const StarModule& M) {
  return "[" + std::to_string(M.socle) + "," + std::to_string(M.length) + "]";
}

}  // namespace

const char* to_string(StarCase c) {
  switch (c) {
    case StarCase::NoSelfDualSimple: return "NoSelfDualSimple";
    case StarCase::TwoSelfDualSimples: return "TwoSelfDualSimples";
    case StarCase::OneSelfDualSimple: return "OneSelfDualSimple";
  }
  return "UnknownCase";
}

void StarParams::validate() const {
  if (e < 1 || m < 1) {
    throw Error(ErrorCode::BadMultiplicity,
                "star parameters need e >= 1 and m >= 1");
  }
  bool odd = e % 2 != 0;
  if (odd != (star_case == StarCase::OneSelfDualSimple)) {
    throw Error(ErrorCode::CaseMismatch,
                std::string(to_string(star_case)) + " is inconsistent with e = " +
                    std::to_string(e));
  }
  if (odd && m % 2 != 0) {
    throw Error(ErrorCode::CaseMismatch,
                "e odd forces an even multiplicity, got m = " +
                    std::to_string(m));
  }
}

int StarParams::zero_star() const {
  return star_case == StarCase::NoSelfDualSimple ? mod(-1, e) : 0;
}

int StarParams::h() const { return e / 2; }

StarModule make_star_module(const StarParams& p, int socle, int length) {
  if (length < 1 || length > p.max_length() + 1) {
    throw Error(ErrorCode::InvalidDescriptor,
                "module length " + std::to_string(length) +
                    " outside 1.." + std::to_string(p.max_length() + 1));
  }
  return {mod(socle, p.e), length};
}

bool is_projective(const StarParams& p, const StarModule& M) {
  return M.length == p.max_length() + 1;
}

int star_involution(const StarParams& p, int i) {
  return mod(p.zero_star() - i, p.e);
}

std::vector<int> composition_factors(const StarParams& p,
                                     const StarModule& M) {
  std::vector<int> factors;
  factors.reserve(M.length);
  for (int k = 0; k < M.length; ++k) {
    factors.push_back(mod(M.socle - k, p.e));
  }
  return factors;
}

StarModule dual_module(const StarParams& p, const StarModule& M) {
  if (is_projective(p, M)) {
    throw Error(ErrorCode::ProjectiveInput,
                "dual of projective " + name(M) + " is handled as a PIM");
  }
  return make_star_module(p, star_involution(p, M.socle - M.length + 1),
                          M.length);
}

bool is_self_dual(const StarParams& p, const StarModule& M) {
  if (is_projective(p, M)) {
    return M.socle == star_involution(p, M.socle);
  }
  return mod(M.length, p.e) ==
         mod(M.socle - star_involution(p, M.socle) + 1, p.e);
}

StarModule heller(const StarParams& p, const StarModule& M) {
  if (is_projective(p, M)) {
    throw Error(ErrorCode::ProjectiveInput,
                "Heller translate of projective " + name(M) + " is zero");
  }
  return make_star_module(p, M.socle - M.length + 1,
                          p.max_length() + 1 - M.length);
}

bool submodule_of(const StarParams& p, const StarModule& A,
                  const StarModule& B) {
  return mod(A.socle, p.e) == mod(B.socle, p.e) && A.length <= B.length;
}

bool quotient_of(const StarParams& p, const StarModule& A,
                 const StarModule& B) {
  return mod(A.socle - A.length, p.e) == mod(B.socle - B.length, p.e) &&
         A.length <= B.length;
}

namespace {

StarModule checked(const StarParams& p, int socle, int length) {
  StarModule M = make_star_module(p, socle, length);
  if (!is_self_dual(p, M)) {
    throw Error(ErrorCode::InternalCountMismatch,
                "constructed family member " + name(M) + " is not self-dual");
  }
  return M;
}

}  // namespace

StarClassification classify_star_self_duals(const StarParams& p) {
  p.validate();
  const int em = p.max_length();
  const int h = p.h();
  StarClassification out;
  switch (p.star_case) {
    case StarCase::NoSelfDualSimple: {
      // Self-dual modules sit at even lengths, two per level; the anchors
      // are the two top-length hooks.
      for (int i = 0; i < p.m * h; ++i) {
        out.family1.modules.push_back(checked(p, i, 2 * i + 2));
        out.family2.modules.push_back(checked(p, h + i, 2 * i + 2));
      }
      out.family1.anchor =
          make_star_module(p, star_involution(p, p.m * h), em);
      out.family2.anchor =
          make_star_module(p, star_involution(p, p.m * h + h), em);
      break;
    }
    case StarCase::TwoSelfDualSimples: {
      // Odd lengths, two per level; anchors are the self-dual simples.
      for (int i = 0; i < em / 2; ++i) {
        out.family1.modules.push_back(checked(p, i, 2 * i + 1));
        out.family2.modules.push_back(checked(p, h + i, 2 * i + 1));
      }
      out.family1.anchor = make_star_module(p, 0, 1);
      out.family2.anchor = make_star_module(p, h, 1);
      break;
    }
    case StarCase::OneSelfDualSimple: {
      // One module per length: odd lengths form family 1 anchored at E_0,
      // even lengths form family 2 anchored at the top-length hook over
      // column h (the Heller e-th translate of E_0).
      for (int i = 0; i < em / 2; ++i) {
        out.family1.modules.push_back(checked(p, i, 2 * i + 1));
        out.family2.modules.push_back(checked(p, i - h, 2 * i + 2));
      }
      out.family1.anchor = make_star_module(p, 0, 1);
      out.family2.anchor = make_star_module(p, h, em);
      break;
    }
  }
  for (const StarFamily* fam : {&out.family1, &out.family2}) {
    bool found = false;
    for (const StarModule& M : fam->modules) {
      if (M == fam->anchor) found = true;
    }
    if (!found) {
      throw Error(ErrorCode::InternalCountMismatch,
                  "family anchor " + name(fam->anchor) +
                      " is not a member of its family");
    }
  }
  return out;
}

}  // namespace brauer
