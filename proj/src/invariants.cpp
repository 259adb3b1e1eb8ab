#include "pgl/invariants.hpp"

#include <algorithm>
#include <set>

#include "pgl/errors.hpp"
#include "pgl/kernels.hpp"

namespace pgl {

namespace {

int log_p(uint64_t v, int p) {
  int k = 0;
  while (v > 1) {
    if (v % uint64_t(p) != 0) throw InternalError("not a p-power");
    v /= uint64_t(p);
    ++k;
  }
  return k;
}

// Abelian type via order counting on a local index space with a callable
// multiplication. counts[k] = #{x : x^{p^k} = 1} determines the factor
// multiset: with s_k = log_p counts[k], the number of factors of order
// >= p^k is s_k - s_{k-1}.
template <class MulFn>
AbelianType type_from_counts(uint64_t m, int p, MulFn mul) {
  std::vector<uint32_t> cur(m), nxt(m);
  for (uint64_t i = 0; i < m; ++i) cur[i] = uint32_t(i);
  // counts[k] for k = 0 is 1: x^{p^0} = x vanishes only at the identity.
  std::vector<size_t> counts;
  counts.push_back(1);
  while (counts.back() != m) {
    // cur[x] = x^{p^k}; advance to x^{p^{k+1}} by p-fold multiplication.
    for (uint64_t x = 0; x < m; ++x) {
      uint32_t y = 0;
      for (int c = 0; c < p; ++c) y = mul(y, cur[x]);
      nxt[x] = y;
    }
    std::swap(cur, nxt);
    counts.push_back(kern::count_value(cur.data(), 0, m));
  }
  std::vector<int> sk;
  sk.reserve(counts.size());
  for (size_t c : counts) sk.push_back(log_p(c, p));
  std::vector<int> ge;  // ge[k-1] = #factors of order >= p^k
  for (size_t k = 1; k < sk.size(); ++k) ge.push_back(sk[k] - sk[k - 1]);
  AbelianType t;
  for (size_t k = 1; k <= ge.size(); ++k) {
    int exactly = ge[k - 1] - (k < ge.size() ? ge[k] : 0);
    uint64_t q = 1;
    for (size_t c = 0; c < k; ++c) q *= uint64_t(p);
    for (int c = 0; c < exactly; ++c) t.factors.push_back(q);
  }
  std::sort(t.factors.rbegin(), t.factors.rend());
  if (t.product() != m) throw InternalError("abelian type does not multiply up");
  return t;
}

}  // namespace

SeriesData lower_central_series(const RealizedGroup& G) {
  SeriesData s;
  s.chain.push_back(full_subgroup(G));
  for (;;) {
    const Subgroup& cur = s.chain.back();
    if (cur.order() == 1) break;
    Subgroup nxt = commutator_subgroup(G, cur, s.chain.front());
    if (nxt.order() == cur.order())
      throw InternalError("lower central series stalls; group not nilpotent?");
    s.chain.push_back(std::move(nxt));
  }
  s.nilpotency_class = int(s.chain.size()) - 1;
  if (G.order() == 1) s.nilpotency_class = 0;
  return s;
}

SeriesData upper_central_series(const RealizedGroup& G) {
  // Z_{i+1} = {x : [x, g] in Z_i for all generators g} — the preimage of the
  // center of G/Z_i, since {y : [x,y] in Z_i} is a subgroup for normal Z_i.
  SeriesData s;
  s.chain.push_back(trivial_subgroup(G));
  std::vector<uint32_t> gens;
  for (int k = 1; k <= G.num_gens(); ++k) gens.push_back(G.generator(k));
  while (s.chain.back().order() != G.order()) {
    const Subgroup& Zi = s.chain.back();
    Bitset nxt(G.order());
    for (uint64_t x = 0; x < G.order(); ++x) {
      bool in = true;
      for (uint32_t g : gens)
        if (!Zi.contains(G.comm(uint32_t(x), g))) {
          in = false;
          break;
        }
      if (in) nxt.set(x);
    }
    Subgroup Znext = Subgroup::from_members(G, std::move(nxt));
    if (Znext.order() == Zi.order())
      throw InternalError("upper central series stalls; group not nilpotent?");
    s.chain.push_back(std::move(Znext));
  }
  s.nilpotency_class = int(s.chain.size()) - 1;
  return s;
}

Subgroup agemo1(const RealizedGroup& G) {
  Bitset gens(G.order());
  for (uint32_t y : G.pow_p_map()) gens.set(y);
  gens.reset(G.identity());
  auto idx = gens.to_indices();
  return subgroup_closure(G, idx);
}

Subgroup omega1(const RealizedGroup& G) {
  const auto& pm = G.pow_p_map();
  Bitset roots(G.order());
  kern::eq_mask_value(pm.data(), G.identity(), G.order(), roots.data());
  roots.reset(G.identity());
  auto idx = roots.to_indices();
  return subgroup_closure(G, idx);
}

namespace {

// Independent description of Phi(G) for the small-order cross-check: the
// functionals F_p^n -> F_p vanishing on all relation words are exactly the
// homomorphisms G -> C_p, and Phi is the common kernel of all of them.
Bitset frattini_by_functionals(const RealizedGroup& G) {
  const auto& P = G.presentation();
  const int n = P.n, p = P.p;
  std::vector<std::array<int, 8>> constraints;
  auto word_vec = [&](const Word& w) {
    std::array<int, 8> v{};
    for (const auto& s : w) v[size_t(s.gen)] = s.exp;
    return v;
  };
  for (int i = 1; i <= n; ++i) constraints.push_back(word_vec(P.power_word(i)));
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) constraints.push_back(word_vec(P.comm_word(j, i)));
  // Solution space basis by enumerating all p^n functionals (n <= 7).
  std::vector<std::array<int, 8>> sols;
  uint64_t total = 1;
  for (int k = 0; k < n; ++k) total *= uint64_t(p);
  for (uint64_t code = 0; code < total; ++code) {
    std::array<int, 8> a{};
    uint64_t rest = code;
    for (int k = 1; k <= n; ++k) {
      a[size_t(k)] = int(rest % uint64_t(p));
      rest /= uint64_t(p);
    }
    bool ok = true;
    for (const auto& c : constraints) {
      int dot = 0;
      for (int k = 1; k <= n; ++k) dot += a[size_t(k)] * c[size_t(k)];
      if (dot % p != 0) {
        ok = false;
        break;
      }
    }
    if (ok) sols.push_back(a);
  }
  Bitset phi(G.order());
  for (uint64_t x = 0; x < G.order(); ++x) {
    GroupElement e = G.element(uint32_t(x));
    bool all0 = true;
    for (const auto& a : sols) {
      int dot = 0;
      for (int k = 1; k <= n; ++k) dot += a[size_t(k)] * e.exps[size_t(k)];
      if (dot % p != 0) {
        all0 = false;
        break;
      }
    }
    if (all0) phi.set(x);
  }
  return phi;
}

}  // namespace

Subgroup frattini(const RealizedGroup& G) {
  Subgroup ag = agemo1(G);
  SeriesData lc = lower_central_series(G);
  const Subgroup& g2 = lc.chain.size() > 1 ? lc.chain[1] : lc.chain[0];
  std::vector<uint32_t> gens = ag.gens;
  gens.insert(gens.end(), g2.gens.begin(), g2.gens.end());
  Subgroup phi = subgroup_closure(G, gens);
  uint64_t p4 = 1;
  for (int k = 0; k < 4; ++k) p4 *= uint64_t(G.prime());
  if (G.order() <= p4) {
    Bitset oracle = frattini_by_functionals(G);
    if (!(oracle == phi.members))
      throw InternalError("frattini cross-check failed for " +
                          G.presentation().name);
  }
  return phi;
}

int rank(const RealizedGroup& G) {
  Subgroup phi = frattini(G);
  return log_p(G.order() / phi.order(), G.prime());
}

AbelianType abelian_type(const RealizedGroup& G) {
  if (!is_abelian(G)) throw NotAbelianError("abelian_type on non-abelian group");
  return type_from_counts(G.order(), G.prime(),
                          [&](uint32_t a, uint32_t b) { return G.mul(a, b); });
}

AbelianType abelian_type(const QuotientGroup& Q) {
  for (uint32_t a : Q.gens())
    for (uint32_t b : Q.gens())
      if (Q.mul(a, b) != Q.mul(b, a))
        throw NotAbelianError("abelian_type on non-abelian quotient");
  return type_from_counts(Q.order(), Q.parent().prime(),
                          [&](uint32_t a, uint32_t b) { return Q.mul(a, b); });
}

AbelianType abelian_type(const RealizedGroup& G, const Subgroup& H) {
  if (!is_abelian(G, H)) throw NotAbelianError("abelian_type on non-abelian subgroup");
  // local index space over H.elems
  std::vector<uint32_t> local_of(G.order(), UINT32_MAX);
  for (size_t i = 0; i < H.elems.size(); ++i) local_of[H.elems[i]] = uint32_t(i);
  return type_from_counts(H.order(), G.prime(), [&](uint32_t a, uint32_t b) {
    return local_of[G.mul(H.elems[a], H.elems[b])];
  });
}

bool is_regular(const RealizedGroup& G) {
  const uint64_t n = G.order();
  uint64_t cap = 729;  // 3^6
  if (G.prime() == 5) cap = 3125;  // 5^5
  if (n > cap) throw ScopeExceededError("regularity check out of scope");
  const auto& pm = G.pow_p_map();
  std::vector<uint32_t> nc_work;
  for (uint64_t xi = 0; xi < n; ++xi) {
    uint32_t x = uint32_t(xi);
    for (uint64_t yi = 0; yi < n; ++yi) {
      uint32_t y = uint32_t(yi);
      uint32_t c = G.comm(x, y);
      if (c == G.identity()) continue;  // z = 1 works
      // gamma2(<x,y>) = normal closure of [x,y] under conjugation by x, y.
      Bitset gens(n);
      gens.set(c);
      Bitset closed(n);
      for (;;) {
        auto gl = gens.to_indices();
        closed.clear();
        closed.set(G.identity());
        nc_work = {G.identity()};
        while (!nc_work.empty()) {
          uint32_t t = nc_work.back();
          nc_work.pop_back();
          for (uint32_t g : gl) {
            uint32_t u = G.mul(t, g);
            if (!closed.test(u)) {
              closed.set(u);
              nc_work.push_back(u);
            }
          }
        }
        bool grew = false;
        for (uint32_t s : gl) {
          uint32_t cx = G.conj(s, x), cy = G.conj(s, y);
          if (!closed.test(cx)) { gens.set(cx); grew = true; }
          if (!closed.test(cy)) { gens.set(cy); grew = true; }
        }
        if (!grew) break;
      }
      uint32_t xy = G.mul(x, y);
      uint32_t target = G.mul(G.inv(pm[xy]), G.mul(pm[x], pm[y]));
      bool found = false;
      for (uint32_t z : closed.to_indices())
        if (pm[z] == target) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  }
  return true;
}

Pna is_purely_nonabelian(const RealizedGroup& G, bool force_exhaustive) {
  if (is_abelian(G)) throw NotApplicableError("purely-non-abelian test on abelian group");
  Subgroup Z = center(G);
  Subgroup phi = frattini(G);
  if (!force_exhaustive && Z.members.subset_of(phi.members))
    return Pna::kTrueZInFrattini;
  uint64_t p4 = 1;
  for (int k = 0; k < 4; ++k) p4 *= uint64_t(G.prime());
  if (G.order() > p4)
    throw ScopeExceededError("purely-non-abelian decomposition search out of scope");
  // G = A x B with 1 != A <= Z(G) forces A ∩ gamma2 = 1 and B ⊇ gamma2;
  // modulo gamma2 the question becomes a complement search in the abelian
  // quotient, which is exhaustive over its subgroups.
  SeriesData lc = lower_central_series(G);
  const Subgroup& g2 = lc.chain[1];
  QuotientGroup Q(G, g2);
  const uint64_t qn = Q.order();
  // All subgroups of Q by closing generator subsets (|Q| <= p^3 here, so
  // rank <= 3).
  auto q_mul = [&](uint32_t a, uint32_t b) { return Q.mul(a, b); };
  auto q_closure = [&](std::vector<uint32_t> gens) {
    Bitset in(qn);
    in.set(0);
    std::vector<uint32_t> work = {0};
    while (!work.empty()) {
      uint32_t t = work.back();
      work.pop_back();
      for (uint32_t g : gens) {
        uint32_t u = q_mul(t, g);
        if (!in.test(u)) {
          in.set(u);
          work.push_back(u);
        }
      }
    }
    return in;
  };
  std::set<std::vector<uint64_t>> subgroup_keys;
  std::vector<Bitset> subgroups;
  auto add_sub = [&](const Bitset& b) {
    std::vector<uint64_t> key(b.data(), b.data() + b.words());
    if (subgroup_keys.insert(key).second) subgroups.push_back(b);
  };
  add_sub(q_closure({}));
  for (uint32_t a = 0; a < qn; ++a) {
    add_sub(q_closure({a}));
    for (uint32_t b = a + 1; b < qn; ++b) {
      add_sub(q_closure({a, b}));
      for (uint32_t c = b + 1; c < qn; ++c) add_sub(q_closure({a, b, c}));
    }
  }
  // Candidate central factors A: subgroups of Z with A ∩ gamma2 = 1,
  // enumerated the same way inside Z.
  std::vector<uint32_t> z_elems = Z.elems;
  auto try_A = [&](const std::vector<uint32_t>& a_gens) -> bool {
    Subgroup A = subgroup_closure(G, a_gens);
    if (A.order() == 1) return false;
    for (uint32_t x : A.elems)
      if (x != G.identity() && g2.contains(x)) return false;
    // image of A in Q
    Bitset abar(qn);
    for (uint32_t x : A.elems) abar.set(Q.project(x));
    uint64_t asz = abar.count();
    if (asz != A.order()) return false;  // embeds iff A ∩ gamma2 = 1
    for (const Bitset& B : subgroups) {
      if (B.count() != qn / asz) continue;
      // trivial intersection?
      Bitset inter = B;
      inter &= abar;
      if (inter.count() == 1) return true;  // complement found: G = A x B~
    }
    return false;
  };
  for (size_t i = 0; i < z_elems.size(); ++i) {
    if (z_elems[i] == G.identity()) continue;
    if (try_A({z_elems[i]})) return Pna::kFalse;
    for (size_t j = i + 1; j < z_elems.size(); ++j) {
      if (try_A({z_elems[i], z_elems[j]})) return Pna::kFalse;
      for (size_t k = j + 1; k < z_elems.size(); ++k)
        if (try_A({z_elems[i], z_elems[j], z_elems[k]})) return Pna::kFalse;
    }
  }
  return Pna::kTrue;
}

bool regular_power_lemma_check(const RealizedGroup& G) {
  if (!is_regular(G)) throw NotRegularError("power lemma requires a regular group");
  const uint64_t n = G.order();
  const uint64_t p = uint64_t(G.prime());
  // power maps P_k[x] = x^{p^k} for p^k <= |G|, k <= 2
  std::vector<std::vector<uint32_t>> pk;
  pk.emplace_back(n);
  for (uint64_t x = 0; x < n; ++x) pk[0][x] = uint32_t(x);
  uint64_t q = 1;
  for (int k = 1; k <= 2; ++k) {
    q *= p;
    if (q > n) break;
    pk.emplace_back(n);
    kern::gather(G.pow_p_map().data(), pk[size_t(k - 1)].data(), n,
                 pk[size_t(k)].data());
  }
  const int kmax = int(pk.size()) - 1;
  for (uint64_t x = 0; x < n; ++x)
    for (uint64_t y = 0; y < n; ++y) {
      uint32_t c = G.comm(uint32_t(x), uint32_t(y));
      for (int i = 0; i <= kmax; ++i)
        for (int j = 0; j <= kmax; ++j) {
          uint64_t pij = 1;
          for (int t = 0; t < i + j; ++t) pij *= p;
          if (pij > n) continue;
          bool lhs = G.comm(pk[size_t(i)][x], pk[size_t(j)][y]) == G.identity();
          uint32_t cp = c;
          for (int t = 0; t < i + j; ++t) cp = G.pow_p(cp);
          bool rhs = cp == G.identity();
          if (lhs != rhs) return false;
        }
    }
  return true;
}

AbelianType section_abelian_type(const RealizedGroup& G, const Subgroup& H,
                                 const Subgroup& N) {
  // coset reps of N inside H, canonical = minimal index
  std::vector<uint32_t> rep_of(G.order(), UINT32_MAX);
  std::vector<uint32_t> reps;
  for (uint32_t x : H.elems) {
    if (rep_of[x] != UINT32_MAX) continue;
    for (uint32_t v : N.elems) rep_of[G.mul(x, v)] = x;
    reps.push_back(x);
  }
  std::vector<uint32_t> local(G.order(), UINT32_MAX);
  for (size_t i = 0; i < reps.size(); ++i) local[reps[i]] = uint32_t(i);
  auto mul = [&](uint32_t a, uint32_t b) {
    return local[rep_of[G.mul(reps[a], reps[b])]];
  };
  for (size_t a = 0; a < reps.size(); ++a)
    for (size_t b = a + 1; b < reps.size(); ++b)
      if (mul(uint32_t(a), uint32_t(b)) != mul(uint32_t(b), uint32_t(a)))
        throw NotAbelianError("section is not abelian");
  return type_from_counts(reps.size(), G.prime(), mul);
}

bool section_is_cyclic(const RealizedGroup& G, const Subgroup& H, const Subgroup& N) {
  const uint64_t m = H.order() / N.order();
  if (m == 1) return true;
  for (uint32_t x : H.elems) {
    // order of xN: least p-power q with x^q in N
    uint64_t q = 1;
    uint32_t y = x;
    while (!N.contains(y)) {
      y = G.pow_p(y);
      q *= uint64_t(G.prime());
    }
    if (q == m) return true;
  }
  return false;
}

}  // namespace pgl
