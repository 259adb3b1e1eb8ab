#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pgl/group.hpp"
#include "pgl/invariants.hpp"
#include "pgl/subgroup.hpp"

namespace pgl {

// |Hom(A, B)| for abelian p-groups given by their cyclic decompositions:
// the product of gcd(a_i, b_j) over all factor pairs. Computed in 128 bits;
// throws ScopeExceededError if the result overflows uint64.
uint64_t hom_order(const AbelianType& A, const AbelianType& B);

// |Hom(G/gamma2(G), Z(G))|; equals |Aut_z(G)| for purely non-abelian G.
// Throws NotPurelyNonabelianError otherwise.
uint64_t adney_yen_order(const RealizedGroup& G);

// All central automorphisms of G, each stored as its tuple of central
// offsets (z_1, ..., z_d) on the fixed minimal generating sequence:
// alpha(g_i) = g_i z_i. Tuples are kept sorted for determinism.
struct CentralAutomorphismSet {
  std::vector<uint32_t> min_gens;               // parent element indices
  std::vector<std::vector<uint32_t>> tuples;    // sorted lexicographically
  uint64_t size() const { return tuples.size(); }
};

// Exhaustive enumeration over the |Z|^d candidate maps g_i -> g_i z_i,
// keeping those that extend to endomorphisms (all pc relations preserved on
// the induced generator images) and are bijective. Throws NotApplicableError
// on abelian input and ScopeExceededError when |Z|^d > 10^7.
CentralAutomorphismSet autz_enumerate(const RealizedGroup& G);

// The full permutation action of the automorphism with the given offsets.
std::vector<uint32_t> central_automorphism_action(
    const RealizedGroup& G, const std::vector<uint32_t>& min_gens,
    const std::vector<uint32_t>& offsets);

// |Z(Inn(G))| = |Z_2(G)| / |Z(G)|. Throws NotApplicableError on abelian G.
uint64_t z_inn_order(const RealizedGroup& G);

struct EqualityVerdict {
  uint64_t autz_enumerated = 0;
  std::optional<uint64_t> autz_formula;  // absent when not purely non-abelian
  uint64_t z_inn = 0;
  bool equal = false;
  // every conjugation by a Z_2(G) element occurs among the enumerated tuples
  bool containment_witness = false;
};

// Decides Aut_z(G) = Z(Inn(G)) by order comparison and verifies the
// containment embedding Z_2/Z -> Aut_z explicitly.
EqualityVerdict autz_equals_zinn(const RealizedGroup& G);

// The deterministic minimal generating sequence: the lexicographically least
// pc generator indices whose images generate G/Phi(G).
std::vector<uint32_t> minimal_generating_sequence(const RealizedGroup& G);

// Independent brute-force |Hom(A, B)| between two realized abelian groups
// given as local-index views; used by oracle-compare and the tests.
struct AbelianView {
  uint64_t order = 0;
  std::vector<uint32_t> elems;  // parent indices, local id = position
  // mul in local indices
  std::function<uint32_t(uint32_t, uint32_t)> mul;
};
AbelianView view_of(const RealizedGroup& G, const Subgroup& H);
AbelianView view_of(const QuotientGroup& Q);
uint64_t hom_count_bruteforce(const AbelianView& A, const AbelianView& B);

}  // namespace pgl
