#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "pgl/collect.hpp"
#include "pgl/presentation.hpp"

namespace pgl {

// A fully enumerated group. Elements are indices 0..p^n-1; index i encodes
// the normal form with e_k = (i / p^{k-1}) mod p, so 0 is the identity.
// Immutable after realize() and safe to share across threads.
class RealizedGroup {
 public:
  // Enumerates all normal forms, builds the multiplication tables and runs
  // the consistency battery (closure, permutation rows, relation
  // re-evaluation, identity/inverse laws, associativity — exhaustive up to
  // order 243, a fixed-seed sample of 120000 triples above that).
  // Throws InconsistentPresentation if anything fails.
  static std::shared_ptr<const RealizedGroup> realize(PcPresentation pres);

  uint64_t order() const { return order_; }
  int prime() const { return pres_.p; }
  int num_gens() const { return pres_.n; }
  const PcPresentation& presentation() const { return pres_; }

  uint32_t identity() const { return 0; }
  uint32_t generator(int i) const { return gen_pow_[size_t(i - 1)]; }

  uint32_t mul(uint32_t a, uint32_t b) const {
    if (!cayley_.empty()) return cayley_[size_t(a) * order_ + b];
    return mul_chain(a, b);
  }
  uint32_t inv(uint32_t a) const { return inv_[a]; }
  // g^-1 a g
  uint32_t conj(uint32_t a, uint32_t g) const { return mul(mul(inv(g), a), g); }
  // a^-1 b^-1 a b
  uint32_t comm(uint32_t a, uint32_t b) const {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  uint32_t pow(uint32_t a, uint64_t k) const;
  uint32_t pow_p(uint32_t a) const { return pow_p_[a]; }
  const std::vector<uint32_t>& pow_p_map() const { return pow_p_; }

  bool has_cayley() const { return !cayley_.empty(); }
  // Row a of the cached Cayley table (a*x for all x); only if has_cayley().
  const uint32_t* cayley_row(uint32_t a) const {
    return cayley_.data() + size_t(a) * order_;
  }

  GroupElement element(uint32_t idx) const;
  uint32_t index_of(const GroupElement& e) const;

  // Fills out[x] = a*x for all x.
  void left_row(uint32_t a, uint32_t* out) const;
  // Fills out[x] = x*a for all x.
  void right_col(uint32_t a, uint32_t* out) const;

 private:
  RealizedGroup() = default;
  uint32_t mul_chain(uint32_t a, uint32_t b) const;
  uint32_t rmul_gen(uint32_t a, int gi) const {
    return rgen_[size_t(gi - 1)][a];
  }

  PcPresentation pres_;
  uint64_t order_ = 0;
  std::vector<uint64_t> radix_;               // p^{k-1} for k = 1..n
  std::vector<uint32_t> gen_pow_;             // index of g_k
  std::vector<std::vector<uint32_t>> rgen_;   // rgen_[k-1][x] = x * g_k
  std::vector<uint32_t> inv_;
  std::vector<uint32_t> pow_p_;
  std::vector<uint32_t> cayley_;              // order^2 entries when cached
};

using GroupPtr = std::shared_ptr<const RealizedGroup>;

}  // namespace pgl
