#include "pgl/group.hpp"

#include <algorithm>

#include "pgl/bitset.hpp"
#include "pgl/errors.hpp"

namespace pgl {

namespace {

// Full associativity check is cubic; above order 3^5 a fixed-seed sample of
// triples is used instead.
constexpr uint64_t kExhaustiveAssocCap = 243;
constexpr size_t kSampledTriples = 120000;
// Dense Cayley caching: 4096^2 u32 entries is 64 MiB, past that multiply
// chains through the per-generator tables.
constexpr uint64_t kCayleyCap = 4096;

struct SplitMix64 {
  uint64_t s;
  explicit SplitMix64(uint64_t seed) : s(seed) {}
  uint64_t next() {
    uint64_t z = (s += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};

}  // namespace

GroupElement RealizedGroup::element(uint32_t idx) const {
  GroupElement e;
  uint64_t rest = idx;
  for (int k = 1; k <= pres_.n; ++k) {
    e.exps[size_t(k)] = uint8_t(rest % uint64_t(pres_.p));
    rest /= uint64_t(pres_.p);
  }
  return e;
}

uint32_t RealizedGroup::index_of(const GroupElement& e) const {
  uint64_t idx = 0;
  for (int k = pres_.n; k >= 1; --k) idx = idx * uint64_t(pres_.p) + e.exps[size_t(k)];
  return uint32_t(idx);
}

uint32_t RealizedGroup::mul_chain(uint32_t a, uint32_t b) const {
  uint32_t x = a;
  uint64_t rest = b;
  for (int k = 1; k <= pres_.n; ++k) {
    int e = int(rest % uint64_t(pres_.p));
    rest /= uint64_t(pres_.p);
    for (int c = 0; c < e; ++c) x = rgen_[size_t(k - 1)][x];
  }
  return x;
}

uint32_t RealizedGroup::pow(uint32_t a, uint64_t k) const {
  uint32_t r = 0;
  for (uint64_t i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

void RealizedGroup::left_row(uint32_t a, uint32_t* out) const {
  if (!cayley_.empty()) {
    const uint32_t* row = cayley_row(a);
    std::copy(row, row + order_, out);
    return;
  }
  for (uint64_t x = 0; x < order_; ++x) out[x] = mul(a, uint32_t(x));
}

void RealizedGroup::right_col(uint32_t a, uint32_t* out) const {
  if (!cayley_.empty()) {
    for (uint64_t x = 0; x < order_; ++x) out[x] = cayley_[x * order_ + a];
    return;
  }
  for (uint64_t x = 0; x < order_; ++x) out[x] = mul(uint32_t(x), a);
}

std::shared_ptr<const RealizedGroup> RealizedGroup::realize(PcPresentation pres) {
  pres.validate();
  auto gptr = std::shared_ptr<RealizedGroup>(new RealizedGroup());
  RealizedGroup& G = *gptr;
  G.pres_ = std::move(pres);
  const PcPresentation& P = G.pres_;
  const int n = P.n;
  const int p = P.p;

  uint64_t order = 1;
  G.radix_.resize(size_t(n));
  for (int k = 0; k < n; ++k) {
    G.radix_[size_t(k)] = order;
    order *= uint64_t(p);
  }
  G.order_ = order;

  G.gen_pow_.resize(size_t(n));
  for (int k = 1; k <= n; ++k) G.gen_pow_[size_t(k - 1)] = uint32_t(G.radix_[size_t(k - 1)]);

  // Per-generator right multiplication tables, straight from collection.
  G.rgen_.assign(size_t(n), std::vector<uint32_t>(order));
  for (int k = 1; k <= n; ++k) {
    auto& tab = G.rgen_[size_t(k - 1)];
    for (uint64_t x = 0; x < order; ++x) {
      GroupElement e = G.element(uint32_t(x));
      std::vector<std::pair<int, long long>> raw;
      for (int i = 1; i <= n; ++i)
        if (e.exps[size_t(i)]) raw.push_back({i, e.exps[size_t(i)]});
      raw.push_back({k, 1});
      tab[x] = G.index_of(collect(P, raw));
    }
    // Right translation by a generator must permute the elements.
    Bitset seen(order);
    for (uint64_t x = 0; x < order; ++x) {
      if (seen.test(tab[x]))
        throw InconsistentPresentation(P.name + ": right translation by g" +
                                       std::to_string(k) + " is not a bijection");
      seen.set(tab[x]);
    }
  }

  // Inverses via the triangular solve, then verify both laws.
  G.inv_.resize(order);
  for (uint64_t x = 0; x < order; ++x) {
    uint32_t z = uint32_t(x);
    uint64_t acc = 0;
    for (int k = 1; k <= n; ++k) {
      GroupElement e = G.element(z);
      int a = (p - e.exps[size_t(k)]) % p;
      for (int c = 0; c < a; ++c) z = G.rgen_[size_t(k - 1)][z];
      acc += uint64_t(a) * G.radix_[size_t(k - 1)];
    }
    if (z != 0)
      throw InconsistentPresentation(P.name + ": no right inverse for element " +
                                     std::to_string(x));
    G.inv_[x] = uint32_t(acc);
  }

  // Optional dense Cayley table.
  if (order <= kCayleyCap) {
    G.cayley_.resize(size_t(order) * order);
    for (uint64_t a = 0; a < order; ++a)
      for (uint64_t b = 0; b < order; ++b)
        G.cayley_[a * order + b] = G.mul_chain(uint32_t(a), uint32_t(b));
  }

  // Closure from the generators must reach every normal form.
  {
    Bitset reached(order);
    std::vector<uint32_t> work;
    reached.set(0);
    work.push_back(0);
    while (!work.empty()) {
      uint32_t x = work.back();
      work.pop_back();
      for (int k = 1; k <= n; ++k) {
        uint32_t y = G.rgen_[size_t(k - 1)][x];
        if (!reached.test(y)) {
          reached.set(y);
          work.push_back(y);
        }
      }
    }
    if (reached.count() != order)
      throw InconsistentPresentation(P.name + ": closure reaches " +
                                     std::to_string(reached.count()) + " of " +
                                     std::to_string(order) + " elements");
  }

  // Re-evaluate every defining relation through the multiplication oracle.
  auto eval_word = [&](const Word& w) {
    uint32_t acc = 0;
    for (const auto& s : w)
      for (int c = 0; c < s.exp; ++c) acc = G.mul(acc, G.generator(s.gen));
    return acc;
  };
  for (int i = 1; i <= n; ++i) {
    uint32_t lhs = G.pow(G.generator(i), uint64_t(p));
    if (lhs != eval_word(P.power_word(i)))
      throw InconsistentPresentation(P.name + ": power relation for g" +
                                     std::to_string(i) + " fails");
  }
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) {
      uint32_t lhs = G.mul(G.generator(j), G.generator(i));
      uint32_t rhs = G.mul(G.mul(G.generator(i), G.generator(j)),
                           eval_word(P.comm_word(j, i)));
      if (lhs != rhs)
        throw InconsistentPresentation(P.name + ": commutator relation [g" +
                                       std::to_string(j) + ",g" + std::to_string(i) +
                                       "] fails");
    }

  // Identity laws and inverse law on every element.
  for (uint64_t x = 0; x < order; ++x) {
    if (G.mul(uint32_t(x), 0) != x || G.mul(0, uint32_t(x)) != x)
      throw InconsistentPresentation(P.name + ": identity law fails");
    if (G.mul(uint32_t(x), G.inv_[x]) != 0 || G.mul(G.inv_[x], uint32_t(x)) != 0)
      throw InconsistentPresentation(P.name + ": inverse law fails");
  }

  // Associativity.
  auto assoc_ok = [&](uint32_t a, uint32_t b, uint32_t c) {
    return G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c));
  };
  if (order <= kExhaustiveAssocCap) {
    for (uint64_t a = 0; a < order; ++a)
      for (uint64_t b = 0; b < order; ++b)
        for (uint64_t c = 0; c < order; ++c)
          if (!assoc_ok(uint32_t(a), uint32_t(b), uint32_t(c)))
            throw InconsistentPresentation(P.name + ": associativity fails");
  } else {
    SplitMix64 rng(0x70c0ffee ^ order);
    for (size_t t = 0; t < kSampledTriples; ++t) {
      uint32_t a = uint32_t(rng.next() % order);
      uint32_t b = uint32_t(rng.next() % order);
      uint32_t c = uint32_t(rng.next() % order);
      if (!assoc_ok(a, b, c))
        throw InconsistentPresentation(P.name + ": associativity fails (sampled)");
    }
  }

  // p-th power map.
  G.pow_p_.resize(order);
  for (uint64_t x = 0; x < order; ++x) G.pow_p_[x] = G.pow(uint32_t(x), uint64_t(p));

  return gptr;
}

}  // namespace pgl
