#include "pgl/analysis.hpp"

#include <algorithm>
#include <set>

#include "pgl/errors.hpp"

namespace pgl {

namespace {

// Aut_z(G) = Inn(G) as permutation sets (the Curran-McCaughan left side).
bool autz_equals_inn(const RealizedGroup& G, const CentralAutomorphismSet& autz,
                     const Subgroup& Z) {
  uint64_t inn_order = G.order() / Z.order();
  if (autz.size() != inn_order) return false;
  std::set<std::vector<uint32_t>> inn;
  for (uint64_t g = 0; g < G.order(); ++g) {
    std::vector<uint32_t> act(G.order());
    for (uint64_t x = 0; x < G.order(); ++x)
      act[x] = G.conj(uint32_t(x), uint32_t(g));
    inn.insert(std::move(act));
  }
  if (inn.size() != inn_order)
    throw InternalError("inner automorphism count mismatch");
  for (const auto& tup : autz.tuples) {
    auto act = central_automorphism_action(G, autz.min_gens, tup);
    if (!inn.count(act)) return false;
  }
  return true;
}

}  // namespace

GroupAnalysis analyze_group(GroupPtr Gp) {
  const RealizedGroup& G = *Gp;
  GroupAnalysis a;
  a.G = Gp;
  a.abelian = is_abelian(G);
  a.lower = lower_central_series(G);
  a.upper = upper_central_series(G);
  a.nilpotency_class = a.lower.nilpotency_class;
  if (a.upper.nilpotency_class != a.lower.nilpotency_class)
    throw InternalError("central series lengths disagree for " +
                        G.presentation().name);
  a.Z = a.upper.chain.size() > 1 ? a.upper.chain[1] : trivial_subgroup(G);
  a.gamma2 = a.lower.chain.size() > 1 ? a.lower.chain[1] : trivial_subgroup(G);
  a.phi = frattini(G);
  a.omega = omega1(G);
  a.agemo = agemo1(G);
  {
    Subgroup zc = center(G);
    if (!(zc.members == a.Z.members))
      throw InternalError("center and Z_1 disagree for " + G.presentation().name);
  }
  a.rank = pgl::rank(G);

  if (a.abelian) {
    a.type_g = abelian_type(G);
  } else {
    QuotientGroup Q(G, a.gamma2);
    a.type_g_mod_gamma2 = abelian_type(Q);
    a.type_z = abelian_type(G, a.Z);
  }

  try {
    a.regular = is_regular(G);
  } catch (const ScopeExceededError&) {
    a.regular.reset();
  }

  if (!a.abelian) {
    try {
      a.pna = is_purely_nonabelian(G);
    } catch (const ScopeExceededError&) {
      a.pna.reset();
    }
    try {
      a.eq = autz_equals_zinn(G);
      CentralAutomorphismSet autz = autz_enumerate(G);
      a.autz_equals_inn_actions = autz_equals_inn(G, autz, a.Z);
    } catch (const ScopeExceededError&) {
      a.eq.reset();
      a.autz_equals_inn_actions.reset();
    }
  }
  return a;
}

}  // namespace pgl
