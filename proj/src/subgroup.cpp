#include "pgl/subgroup.hpp"

#include <algorithm>

#include "pgl/errors.hpp"
#include "pgl/kernels.hpp"

namespace pgl {

namespace {

constexpr uint64_t kCommutatorPairCap = 1'100'000;  // covers 3^6 squared
constexpr uint64_t kQuotientTableCap = 2048;

Bitset closure_bits(const RealizedGroup& G, std::span<const uint32_t> gens) {
  Bitset in(G.order());
  std::vector<uint32_t> work;
  in.set(G.identity());
  work.push_back(G.identity());
  while (!work.empty()) {
    uint32_t x = work.back();
    work.pop_back();
    for (uint32_t g : gens) {
      uint32_t y = G.mul(x, g);
      if (!in.test(y)) {
        in.set(y);
        work.push_back(y);
      }
    }
  }
  return in;
}

}  // namespace

Subgroup Subgroup::from_members(const RealizedGroup& G, Bitset members) {
  Subgroup S;
  S.G = &G;
  S.members = std::move(members);
  S.elems = S.members.to_indices();
  // Greedy reduced generating set.
  Bitset span(G.order());
  span.set(G.identity());
  size_t have = 1;
  for (uint32_t x : S.elems) {
    if (span.test(x)) continue;
    S.gens.push_back(x);
    std::vector<uint32_t> work = span.to_indices();
    // close the current span over the new generator set
    while (!work.empty()) {
      uint32_t y = work.back();
      work.pop_back();
      for (uint32_t g : S.gens) {
        uint32_t z = G.mul(y, g);
        if (!span.test(z)) {
          span.set(z);
          work.push_back(z);
        }
      }
    }
    have = span.count();
    if (have == S.elems.size()) break;
  }
  if (have != S.elems.size())
    throw InternalError("from_members: set is not a subgroup");
  if (G.order() % S.elems.size() != 0)
    throw InternalError("Lagrange violation in from_members");
  return S;
}

Subgroup trivial_subgroup(const RealizedGroup& G) {
  Bitset b(G.order());
  b.set(G.identity());
  Subgroup S;
  S.G = &G;
  S.members = std::move(b);
  S.elems = {G.identity()};
  return S;
}

Subgroup full_subgroup(const RealizedGroup& G) {
  Bitset b(G.order());
  for (uint64_t x = 0; x < G.order(); ++x) b.set(x);
  Subgroup S;
  S.G = &G;
  S.members = std::move(b);
  S.elems.resize(G.order());
  for (uint64_t x = 0; x < G.order(); ++x) S.elems[x] = uint32_t(x);
  for (int k = 1; k <= G.num_gens(); ++k) S.gens.push_back(G.generator(k));
  return S;
}

Subgroup subgroup_closure(const RealizedGroup& G, std::span<const uint32_t> gens) {
  for (uint32_t g : gens)
    if (g >= G.order()) throw IndexError("closure generator out of range");
  Bitset in = closure_bits(G, gens);
  Subgroup S;
  S.G = &G;
  S.members = std::move(in);
  S.elems = S.members.to_indices();
  for (uint32_t g : gens)
    if (g != G.identity() && std::find(S.gens.begin(), S.gens.end(), g) == S.gens.end())
      S.gens.push_back(g);
  if (G.order() % S.elems.size() != 0)
    throw InternalError("Lagrange violation in subgroup_closure");
  return S;
}

Subgroup commutator_subgroup(const RealizedGroup& G, const Subgroup& H,
                             const Subgroup& K) {
  const uint64_t pairs = H.order() * K.order();
  Bitset gens_bits(G.order());
  if (pairs <= kCommutatorPairCap) {
    for (uint32_t h : H.elems)
      for (uint32_t k : K.elems) gens_bits.set(G.comm(h, k));
  } else {
    // Normal closure of the generator commutators inside <H, K>.
    std::vector<uint32_t> conj_by = H.gens;
    conj_by.insert(conj_by.end(), K.gens.begin(), K.gens.end());
    for (uint32_t h : H.gens)
      for (uint32_t k : K.gens) gens_bits.set(G.comm(h, k));
    for (;;) {
      std::vector<uint32_t> gens = gens_bits.to_indices();
      Bitset closed = closure_bits(G, gens);
      bool grew = false;
      for (uint32_t s : gens)
        for (uint32_t g : conj_by) {
          uint32_t c = G.conj(s, g);
          if (!closed.test(c)) {
            gens_bits.set(c);
            grew = true;
          }
        }
      if (!grew) break;
    }
  }
  gens_bits.reset(G.identity());
  std::vector<uint32_t> gens = gens_bits.to_indices();
  return subgroup_closure(G, gens);
}

Subgroup centralizer(const RealizedGroup& G, std::span<const uint32_t> S) {
  const uint64_t n = G.order();
  Bitset cand(n);
  for (uint64_t x = 0; x < n; ++x) cand.set(x);
  std::vector<uint32_t> lrow(n), rcol(n);
  Bitset mask(n);
  for (uint32_t s : S) {
    G.left_row(s, lrow.data());   // s*x
    G.right_col(s, rcol.data());  // x*s
    kern::eq_mask(rcol.data(), lrow.data(), n, mask.data());
    cand &= mask;
  }
  return Subgroup::from_members(G, std::move(cand));
}

Subgroup centralizer(const RealizedGroup& G, const Subgroup& S) {
  return centralizer(G, std::span<const uint32_t>(S.gens));
}

Subgroup center(const RealizedGroup& G) {
  std::vector<uint32_t> gens;
  for (int k = 1; k <= G.num_gens(); ++k) gens.push_back(G.generator(k));
  return centralizer(G, std::span<const uint32_t>(gens));
}

bool is_normal(const RealizedGroup& G, const Subgroup& N) {
  for (uint32_t s : N.gens.empty() ? N.elems : N.gens)
    for (int k = 1; k <= G.num_gens(); ++k)
      if (!N.contains(G.conj(s, G.generator(k)))) return false;
  return true;
}

bool is_abelian(const RealizedGroup& G) {
  for (int a = 1; a <= G.num_gens(); ++a)
    for (int b = a + 1; b <= G.num_gens(); ++b)
      if (G.comm(G.generator(a), G.generator(b)) != G.identity()) return false;
  return true;
}

bool is_abelian(const RealizedGroup& G, const Subgroup& H) {
  const auto& gens = H.gens.empty() ? H.elems : H.gens;
  for (size_t a = 0; a < gens.size(); ++a)
    for (size_t b = a + 1; b < gens.size(); ++b)
      if (G.comm(gens[a], gens[b]) != G.identity()) return false;
  return true;
}

uint64_t element_order(const RealizedGroup& G, uint32_t x) {
  if (x >= G.order()) throw IndexError("element out of range");
  uint64_t ord = 1;
  uint32_t y = x;
  while (y != G.identity()) {
    y = G.pow_p(y);
    ord *= uint64_t(G.prime());
  }
  return ord;
}

QuotientGroup::QuotientGroup(const RealizedGroup& G, Subgroup N)
    : G_(&G), N_(std::move(N)) {
  if (!is_normal(G, N_)) throw NotNormalError("subgroup is not normal");
  const uint64_t n = G.order();
  rep_of_.assign(n, UINT32_MAX);
  for (uint64_t x = 0; x < n; ++x) {
    if (rep_of_[x] != UINT32_MAX) continue;
    // x is minimal in its coset: anything smaller was already visited.
    for (uint32_t v : N_.elems) rep_of_[G.mul(uint32_t(x), v)] = uint32_t(x);
    reps_.push_back(uint32_t(x));
  }
  if (n != N_.order() * reps_.size())
    throw InternalError("quotient: |G| != |N| * |G/N|");
  local_.assign(n, UINT32_MAX);
  for (size_t q = 0; q < reps_.size(); ++q) local_[reps_[q]] = uint32_t(q);
  Bitset seen(reps_.size());
  for (int k = 1; k <= G.num_gens(); ++k) {
    uint32_t q = project(G.generator(k));
    if (q != 0 && !seen.test(q)) {
      seen.set(q);
      gens_.push_back(q);
    }
  }
  if (reps_.size() <= kQuotientTableCap) {
    table_.resize(reps_.size() * reps_.size());
    for (size_t a = 0; a < reps_.size(); ++a)
      for (size_t b = 0; b < reps_.size(); ++b)
        table_[a * reps_.size() + b] = project(G.mul(reps_[a], reps_[b]));
  }
}

uint32_t QuotientGroup::inv(uint32_t a) const { return project(G_->inv(reps_[a])); }

}  // namespace pgl
