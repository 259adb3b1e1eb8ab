#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pgl/bitset.hpp"
#include "pgl/group.hpp"

namespace pgl {

// An explicit subgroup: membership bitset over the parent's element indices,
// plus the sorted element list and a reduced generator list.
struct Subgroup {
  const RealizedGroup* G = nullptr;
  Bitset members;
  std::vector<uint32_t> elems;  // ascending
  std::vector<uint32_t> gens;

  uint64_t order() const { return elems.size(); }
  bool contains(uint32_t x) const { return members.test(x); }
  bool operator==(const Subgroup& o) const { return members == o.members; }

  // Builds elems and a greedy generating set from a closed member set.
  static Subgroup from_members(const RealizedGroup& G, Bitset members);
};

Subgroup trivial_subgroup(const RealizedGroup& G);
Subgroup full_subgroup(const RealizedGroup& G);

// Smallest subgroup containing gens.
Subgroup subgroup_closure(const RealizedGroup& G, std::span<const uint32_t> gens);

// <[h,k] : h in H, k in K>. Uses the literal pair set when |H||K| is small
// and the normal-closure form above that; the two agree (tested).
Subgroup commutator_subgroup(const RealizedGroup& G, const Subgroup& H,
                             const Subgroup& K);

// {g : gs = sg for all s in S}.
Subgroup centralizer(const RealizedGroup& G, std::span<const uint32_t> S);
// Centralizing a subgroup only needs its generators.
Subgroup centralizer(const RealizedGroup& G, const Subgroup& S);
Subgroup center(const RealizedGroup& G);

bool is_normal(const RealizedGroup& G, const Subgroup& N);
bool is_abelian(const RealizedGroup& G);
bool is_abelian(const RealizedGroup& G, const Subgroup& H);

// Least k >= 1 with x^k = 1; always a power of p here.
uint64_t element_order(const RealizedGroup& G, uint32_t x);

// G/N with canonical coset representatives (minimal element index). Cosets
// get local contiguous indices in representative order; 0 is the identity
// coset. Throws NotNormalError.
class QuotientGroup {
 public:
  QuotientGroup(const RealizedGroup& G, Subgroup N);

  uint64_t order() const { return reps_.size(); }
  uint32_t identity() const { return 0; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    if (!table_.empty()) return table_[size_t(a) * order() + b];
    return project(G_->mul(reps_[a], reps_[b]));
  }
  uint32_t inv(uint32_t a) const;
  // parent element -> local coset index
  uint32_t project(uint32_t x) const { return local_[rep_of_[x]]; }
  // local coset index -> canonical representative in the parent
  uint32_t rep(uint32_t q) const { return reps_[q]; }
  const std::vector<uint32_t>& reps() const { return reps_; }
  // Images of the parent's pc generators (deduplicated, identity dropped).
  const std::vector<uint32_t>& gens() const { return gens_; }
  const Subgroup& kernel() const { return N_; }
  const RealizedGroup& parent() const { return *G_; }

 private:
  const RealizedGroup* G_;
  Subgroup N_;
  std::vector<uint32_t> reps_;     // ascending canonical reps
  std::vector<uint32_t> rep_of_;   // parent element -> its coset's rep
  std::vector<uint32_t> local_;    // parent rep -> local index
  std::vector<uint32_t> gens_;
  std::vector<uint32_t> table_;    // dense local table when small
};

}  // namespace pgl
