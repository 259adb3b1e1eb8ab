#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pgl/analysis.hpp"

namespace pgl {

enum class TheoremId {
  kLemma21,          // equality forces Z <= gamma2 and non-cyclic Z(Inn)
  kLemma31,          // |G|=p^4, d=2, |gamma2|=p forces Z=Phi, |Z|=p^2
  kThm32,            // |G|=p^5, cl=3: equality iff d=2 and |Z|=p
  kThm33,            // |G|=p^6, p odd, cl in {3,4}: same biconditional
  kCurranMcCaughan,  // Aut_z = Inn iff gamma2 = Z cyclic
  kObservations,     // class-2 and maximal-class facts about Z(Inn)
};

const char* theorem_id_name(TheoremId id);
// Accepts the CLI spellings: lemma2.1, lemma3.1, thm3.2, thm3.3,
// curran-mccaughan, observations. Returns nullopt for unknown ids.
std::optional<TheoremId> theorem_id_from_string(std::string_view s);

// Verdicts are data: an inapplicable check reports which hypothesis failed
// instead of raising.
struct TheoremVerdict {
  TheoremId id;
  bool applicable = false;
  std::string failed_hypothesis;  // set when not applicable
  bool left = false;
  bool right = false;
  bool pass = true;
  std::string notes;
};

TheoremVerdict check_theorem_3_2(const GroupAnalysis& a);
TheoremVerdict check_theorem_3_3(const GroupAnalysis& a);
TheoremVerdict check_lemma_3_1(const GroupAnalysis& a);
TheoremVerdict check_lemma_2_1_necessary(const GroupAnalysis& a);
TheoremVerdict check_curran_mccaughan(const GroupAnalysis& a);
TheoremVerdict check_class2_and_maximal_class_observations(const GroupAnalysis& a);

// Convenience wrappers matchingable on a bare group.
TheoremVerdict check_theorem_3_2(const RealizedGroup& G);
TheoremVerdict check_theorem_3_3(const RealizedGroup& G);
TheoremVerdict check_lemma_3_1(const RealizedGroup& G);
TheoremVerdict check_lemma_2_1_necessary(const RealizedGroup& G);
TheoremVerdict check_curran_mccaughan(const RealizedGroup& G);
TheoremVerdict check_class2_and_maximal_class_observations(const RealizedGroup& G);

TheoremVerdict check_theorem(TheoremId id, const GroupAnalysis& a);
std::vector<TheoremVerdict> check_all_theorems(const GroupAnalysis& a);

}  // namespace pgl
