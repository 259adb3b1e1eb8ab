#pragma once

#include <cstdint>
#include <vector>

#include "pgl/group.hpp"
#include "pgl/subgroup.hpp"

namespace pgl {

// Nonincreasing cyclic factor orders (c_1 >= c_2 >= ...), product = |A|.
struct AbelianType {
  std::vector<uint64_t> factors;
  bool operator==(const AbelianType&) const = default;
  uint64_t product() const {
    uint64_t r = 1;
    for (auto f : factors) r *= f;
    return r;
  }
};

// One central series chain. For the lower series chain[0] = G and
// chain[i] = gamma_{i+1}; for the upper series chain[i] = Z_i.
struct SeriesData {
  std::vector<Subgroup> chain;
  int nilpotency_class = 0;
};

SeriesData lower_central_series(const RealizedGroup& G);
SeriesData upper_central_series(const RealizedGroup& G);

// Phi(G) = agemo1(G) * gamma2(G); cross-checked for |G| <= p^4 against the
// homomorphism-kernel description of the maximal subgroup intersection.
Subgroup frattini(const RealizedGroup& G);
int rank(const RealizedGroup& G);

Subgroup omega1(const RealizedGroup& G);
Subgroup agemo1(const RealizedGroup& G);

// Abelian type from the order-counting profile |{x : x^{p^k} = 1}|.
// Throws NotAbelianError.
AbelianType abelian_type(const RealizedGroup& G);
AbelianType abelian_type(const QuotientGroup& Q);
AbelianType abelian_type(const RealizedGroup& G, const Subgroup& H);

// Definition check over all pairs: x^p y^p = (xy)^p z^p for some z in
// gamma2(<x,y>). Scope: |G| <= 3^6, or <= 5^5 when p = 5; throws
// ScopeExceededError beyond that.
bool is_regular(const RealizedGroup& G);

enum class Pna {
  kFalse,
  kTrue,                 // exhaustive decomposition search found nothing
  kTrueZInFrattini,      // sufficient condition Z(G) <= Phi(G)
};
// Throws NotApplicableError on abelian input, ScopeExceededError when the
// fast path fails and |G| > p^4. force_exhaustive skips the fast path so the
// two routes can be compared (still scope-limited to |G| <= p^4).
Pna is_purely_nonabelian(const RealizedGroup& G, bool force_exhaustive = false);

// For regular G: [x^{p^i}, y^{p^j}] = 1 iff [x,y]^{p^{i+j}} = 1, for all
// pairs and i, j in {0,1,2} with p^i, p^j <= |G|. Throws NotRegularError.
bool regular_power_lemma_check(const RealizedGroup& G);

// Abelian type of the section H/N (N normal in H, both subgroups of G,
// section must be abelian).
AbelianType section_abelian_type(const RealizedGroup& G, const Subgroup& H,
                                 const Subgroup& N);
bool section_is_cyclic(const RealizedGroup& G, const Subgroup& H, const Subgroup& N);

}  // namespace pgl
