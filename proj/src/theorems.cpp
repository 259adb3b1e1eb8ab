#include "pgl/theorems.hpp"

#include "pgl/errors.hpp"

namespace pgl {

namespace {

uint64_t ppow(uint64_t p, int k) {
  uint64_t r = 1;
  while (k-- > 0) r *= p;
  return r;
}

TheoremVerdict inapplicable(TheoremId id, std::string why) {
  TheoremVerdict v;
  v.id = id;
  v.applicable = false;
  v.failed_hypothesis = std::move(why);
  return v;
}

}  // namespace

const char* theorem_id_name(TheoremId id) {
  switch (id) {
    case TheoremId::kLemma21: return "lemma2.1";
    case TheoremId::kLemma31: return "lemma3.1";
    case TheoremId::kThm32: return "thm3.2";
    case TheoremId::kThm33: return "thm3.3";
    case TheoremId::kCurranMcCaughan: return "curran-mccaughan";
    case TheoremId::kObservations: return "observations";
  }
  return "?";
}

std::optional<TheoremId> theorem_id_from_string(std::string_view s) {
  if (s == "lemma2.1") return TheoremId::kLemma21;
  if (s == "lemma3.1") return TheoremId::kLemma31;
  if (s == "thm3.2") return TheoremId::kThm32;
  if (s == "thm3.3") return TheoremId::kThm33;
  if (s == "curran-mccaughan") return TheoremId::kCurranMcCaughan;
  if (s == "observations") return TheoremId::kObservations;
  return std::nullopt;
}

TheoremVerdict check_theorem_3_2(const GroupAnalysis& a) {
  const auto id = TheoremId::kThm32;
  const uint64_t p = uint64_t(a.prime());
  if (a.order() != ppow(p, 5)) return inapplicable(id, "order is not p^5");
  if (a.nilpotency_class != 3) return inapplicable(id, "class is not 3");
  if (!a.eq) return inapplicable(id, "automorphism enumeration out of scope");
  TheoremVerdict v;
  v.id = id;
  v.applicable = true;
  v.left = a.eq->equal;
  v.right = (a.rank == 2 && a.Z.order() == p);
  v.pass = (v.left == v.right);
  v.notes = "autz=" + std::to_string(a.eq->autz_enumerated) +
            " zinn=" + std::to_string(a.eq->z_inn) + " d=" + std::to_string(a.rank) +
            " |Z|=" + std::to_string(a.Z.order());
  return v;
}

TheoremVerdict check_theorem_3_3(const GroupAnalysis& a) {
  const auto id = TheoremId::kThm33;
  const uint64_t p = uint64_t(a.prime());
  if (p == 2) return inapplicable(id, "p must be odd");
  if (a.order() != ppow(p, 6)) return inapplicable(id, "order is not p^6");
  if (a.nilpotency_class != 3 && a.nilpotency_class != 4)
    return inapplicable(id, "class is not 3 or 4");
  if (!a.eq) return inapplicable(id, "automorphism enumeration out of scope");
  TheoremVerdict v;
  v.id = id;
  v.applicable = true;
  v.left = a.eq->equal;
  v.right = (a.rank == 2 && a.Z.order() == p);
  v.pass = (v.left == v.right);
  v.notes = "autz=" + std::to_string(a.eq->autz_enumerated) +
            " zinn=" + std::to_string(a.eq->z_inn) + " d=" + std::to_string(a.rank) +
            " |Z|=" + std::to_string(a.Z.order());
  return v;
}

TheoremVerdict check_lemma_3_1(const GroupAnalysis& a) {
  const auto id = TheoremId::kLemma31;
  const uint64_t p = uint64_t(a.prime());
  if (a.order() != ppow(p, 4)) return inapplicable(id, "order is not p^4");
  if (a.rank != 2) return inapplicable(id, "rank is not 2");
  if (a.gamma2.order() != p) return inapplicable(id, "|gamma2| is not p");
  TheoremVerdict v;
  v.id = id;
  v.applicable = true;
  v.left = true;  // hypotheses hold
  v.right = (a.Z.members == a.phi.members) && a.Z.order() == p * p;
  v.pass = v.right;
  v.notes = "|Z|=" + std::to_string(a.Z.order()) + " |Phi|=" + std::to_string(a.phi.order());
  return v;
}

TheoremVerdict check_lemma_2_1_necessary(const GroupAnalysis& a) {
  const auto id = TheoremId::kLemma21;
  if (a.abelian) return inapplicable(id, "group is abelian");
  if (!a.eq) return inapplicable(id, "automorphism enumeration out of scope");
  if (!a.eq->equal) return inapplicable(id, "Aut_z != Z(Inn)");
  TheoremVerdict v;
  v.id = id;
  v.applicable = true;
  v.left = true;  // equality holds
  const Subgroup& Z2 = a.upper.chain.size() > 2 ? a.upper.chain[2] : a.upper.chain.back();
  bool z_in_gamma2 = a.Z.members.subset_of(a.gamma2.members);
  bool zinn_noncyclic = !section_is_cyclic(*a.G, Z2, a.Z);
  v.right = z_in_gamma2 && zinn_noncyclic;
  v.pass = v.right;
  v.notes = std::string("Z<=gamma2=") + (z_in_gamma2 ? "yes" : "no") +
            " Z(Inn) cyclic=" + (zinn_noncyclic ? "no" : "yes");
  return v;
}

TheoremVerdict check_curran_mccaughan(const GroupAnalysis& a) {
  const auto id = TheoremId::kCurranMcCaughan;
  if (a.abelian) return inapplicable(id, "group is abelian");
  if (!a.autz_equals_inn_actions)
    return inapplicable(id, "automorphism enumeration out of scope");
  TheoremVerdict v;
  v.id = id;
  v.applicable = true;
  v.left = *a.autz_equals_inn_actions;
  bool z_cyclic = section_is_cyclic(*a.G, a.Z, trivial_subgroup(*a.G));
  v.right = (a.gamma2.members == a.Z.members) && z_cyclic;
  v.pass = (v.left == v.right);
  v.notes = std::string("gamma2=Z: ") + ((a.gamma2.members == a.Z.members) ? "yes" : "no") +
            ", Z cyclic: " + (z_cyclic ? "yes" : "no");
  return v;
}

TheoremVerdict check_class2_and_maximal_class_observations(const GroupAnalysis& a) {
  const auto id = TheoremId::kObservations;
  if (a.abelian) return inapplicable(id, "group is abelian");
  const uint64_t p = uint64_t(a.prime());
  int n = a.G->num_gens();
  TheoremVerdict v;
  v.id = id;
  if (a.nilpotency_class == 2) {
    v.applicable = true;
    v.left = true;
    // class 2: Z(Inn) = Inn, i.e. Z_2(G) = G
    const Subgroup& Z2 = a.upper.chain.size() > 2 ? a.upper.chain[2] : a.upper.chain.back();
    v.right = (Z2.order() == a.order());
    v.pass = v.right;
    v.notes = "class-2 branch: |Z_2|=" + std::to_string(Z2.order());
    return v;
  }
  if (a.nilpotency_class == n - 1 && n >= 3) {
    if (!a.eq) return inapplicable(id, "automorphism enumeration out of scope");
    v.applicable = true;
    v.left = true;
    v.right = (a.eq->z_inn == p) && (a.eq->autz_enumerated > p);
    v.pass = v.right;
    v.notes = "maximal-class branch: zinn=" + std::to_string(a.eq->z_inn) +
              " autz=" + std::to_string(a.eq->autz_enumerated);
    return v;
  }
  return inapplicable(id, "class is neither 2 nor maximal");
}

namespace {
GroupAnalysis analyze_for(const RealizedGroup& G) {
  // The wrappers re-analyze; fine for one-off calls, reports reuse a bundle.
  return analyze_group(std::shared_ptr<const RealizedGroup>(&G, [](const RealizedGroup*) {}));
}
}  // namespace

TheoremVerdict check_theorem_3_2(const RealizedGroup& G) {
  return check_theorem_3_2(analyze_for(G));
}
TheoremVerdict check_theorem_3_3(const RealizedGroup& G) {
  return check_theorem_3_3(analyze_for(G));
}
TheoremVerdict check_lemma_3_1(const RealizedGroup& G) {
  return check_lemma_3_1(analyze_for(G));
}
TheoremVerdict check_lemma_2_1_necessary(const RealizedGroup& G) {
  return check_lemma_2_1_necessary(analyze_for(G));
}
TheoremVerdict check_curran_mccaughan(const RealizedGroup& G) {
  return check_curran_mccaughan(analyze_for(G));
}
TheoremVerdict check_class2_and_maximal_class_observations(const RealizedGroup& G) {
  return check_class2_and_maximal_class_observations(analyze_for(G));
}

TheoremVerdict check_theorem(TheoremId id, const GroupAnalysis& a) {
  switch (id) {
    case TheoremId::kLemma21: return check_lemma_2_1_necessary(a);
    case TheoremId::kLemma31: return check_lemma_3_1(a);
    case TheoremId::kThm32: return check_theorem_3_2(a);
    case TheoremId::kThm33: return check_theorem_3_3(a);
    case TheoremId::kCurranMcCaughan: return check_curran_mccaughan(a);
    case TheoremId::kObservations:
      return check_class2_and_maximal_class_observations(a);
  }
  throw UnknownTheoremIdError("bad theorem id");
}

std::vector<TheoremVerdict> check_all_theorems(const GroupAnalysis& a) {
  return {check_lemma_2_1_necessary(a), check_lemma_3_1(a),
          check_theorem_3_2(a),         check_theorem_3_3(a),
          check_curran_mccaughan(a),
          check_class2_and_maximal_class_observations(a)};
}

}  // namespace pgl
