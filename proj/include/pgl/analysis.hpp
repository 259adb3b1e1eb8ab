#pragma once

#include <memory>
#include <optional>
#include <string>

#include "pgl/central_aut.hpp"
#include "pgl/group.hpp"
#include "pgl/invariants.hpp"
#include "pgl/subgroup.hpp"

namespace pgl {

// Everything the reports and theorem predicates need, computed once.
struct GroupAnalysis {
  GroupPtr G;
  bool abelian = false;
  SeriesData lower, upper;
  int nilpotency_class = 0;
  int rank = 0;
  Subgroup Z, gamma2, phi, omega, agemo;
  std::optional<AbelianType> type_g;             // abelian G only
  std::optional<AbelianType> type_g_mod_gamma2;  // non-abelian only
  std::optional<AbelianType> type_z;
  std::optional<bool> regular;                   // absent = scope exceeded
  std::optional<Pna> pna;                        // absent when undecidable
  std::optional<EqualityVerdict> eq;             // absent for abelian G
  std::optional<bool> autz_equals_inn_actions;   // Curran-McCaughan left side

  uint64_t order() const { return G->order(); }
  int prime() const { return G->prime(); }
};

GroupAnalysis analyze_group(GroupPtr G);

}  // namespace pgl
