#include "pgl/central_aut.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "pgl/errors.hpp"

namespace pgl {

uint64_t hom_order(const AbelianType& A, const AbelianType& B) {
  using u128 = unsigned __int128;
  u128 r = 1;
  for (uint64_t a : A.factors)
    for (uint64_t b : B.factors) {
      r *= std::gcd(a, b);
      if (r > u128(UINT64_MAX))
        throw ScopeExceededError("hom_order exceeds 64 bits");
    }
  return uint64_t(r);
}

uint64_t adney_yen_order(const RealizedGroup& G) {
  Pna st = is_purely_nonabelian(G);
  if (st == Pna::kFalse)
    throw NotPurelyNonabelianError("Adney-Yen formula needs a purely non-abelian group");
  SeriesData lc = lower_central_series(G);
  QuotientGroup Q(G, lc.chain[1]);
  Subgroup Z = center(G);
  return hom_order(abelian_type(Q), abelian_type(G, Z));
}

std::vector<uint32_t> minimal_generating_sequence(const RealizedGroup& G) {
  Subgroup phi = frattini(G);
  std::vector<uint32_t> mingens;
  Bitset span = phi.members;
  std::vector<uint32_t> span_gens = phi.gens;
  for (int k = 1; k <= G.num_gens(); ++k) {
    uint32_t g = G.generator(k);
    if (span.test(g)) continue;
    mingens.push_back(g);
    span_gens.push_back(g);
    span = subgroup_closure(G, span_gens).members;
    if (span.count() == G.order()) break;
  }
  if (span.count() != G.order())
    throw InternalError("pc generators fail to generate the group");
  return mingens;
}

namespace {

// BFS tree over right multiplication by the minimal generators; lets a
// candidate map on the generators propagate to every element in one pass.
struct GenTree {
  std::vector<uint32_t> order;            // BFS order, order[0] = identity
  std::vector<std::pair<uint32_t, int>> parent;  // (parent elt, gen slot)

  GenTree(const RealizedGroup& G, const std::vector<uint32_t>& gens) {
    parent.assign(G.order(), {UINT32_MAX, -1});
    std::vector<uint32_t> queue = {G.identity()};
    Bitset seen(G.order());
    seen.set(G.identity());
    order.push_back(G.identity());
    for (size_t head = 0; head < queue.size(); ++head) {
      uint32_t x = queue[head];
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        uint32_t y = G.mul(x, gens[gi]);
        if (!seen.test(y)) {
          seen.set(y);
          parent[y] = {x, int(gi)};
          order.push_back(y);
          queue.push_back(y);
        }
      }
    }
    if (order.size() != G.order())
      throw InternalError("generating sequence does not generate");
  }
};

void propagate(const RealizedGroup& G, const GenTree& tree,
               const std::vector<uint32_t>& gen_imgs, std::vector<uint32_t>& img) {
  img[G.identity()] = G.identity();
  for (size_t i = 1; i < tree.order.size(); ++i) {
    uint32_t y = tree.order[i];
    auto [x, gi] = tree.parent[y];
    img[y] = G.mul(img[x], gen_imgs[size_t(gi)]);
  }
}

bool relations_hold(const RealizedGroup& G, const std::vector<uint32_t>& img) {
  const PcPresentation& P = G.presentation();
  auto eval_word = [&](const Word& w) {
    uint32_t acc = G.identity();
    for (const auto& s : w)
      for (int c = 0; c < s.exp; ++c) acc = G.mul(acc, img[G.generator(s.gen)]);
    return acc;
  };
  for (int i = 1; i <= P.n; ++i) {
    uint32_t gi = img[G.generator(i)];
    uint32_t lhs = G.identity();
    for (int c = 0; c < P.p; ++c) lhs = G.mul(lhs, gi);
    if (lhs != eval_word(P.power_word(i))) return false;
  }
  for (int j = 2; j <= P.n; ++j)
    for (int i = 1; i < j; ++i) {
      uint32_t a = img[G.generator(j)], b = img[G.generator(i)];
      if (G.mul(a, b) != G.mul(G.mul(b, a), eval_word(P.comm_word(j, i))))
        return false;
    }
  return true;
}

}  // namespace

CentralAutomorphismSet autz_enumerate(const RealizedGroup& G) {
  if (is_abelian(G))
    throw NotApplicableError("central automorphisms of an abelian group are all of Aut");
  CentralAutomorphismSet out;
  out.min_gens = minimal_generating_sequence(G);
  Subgroup Z = center(G);
  const size_t d = out.min_gens.size();
  double cand = 1;
  for (size_t i = 0; i < d; ++i) cand *= double(Z.order());
  if (cand > 1e7) throw ScopeExceededError("central automorphism candidate space too large");

  GenTree tree(G, out.min_gens);
  std::vector<uint32_t> offsets(d, 0);  // indices into Z.elems
  std::vector<uint32_t> gen_imgs(d), img(G.order());
  Bitset seen(G.order());
  std::function<void(size_t)> rec = [&](size_t pos) {
    if (pos == d) {
      for (size_t i = 0; i < d; ++i)
        gen_imgs[i] = G.mul(out.min_gens[i], Z.elems[offsets[i]]);
      propagate(G, tree, gen_imgs, img);
      if (!relations_hold(G, img)) return;
      // bijective iff the image set has full size
      seen.clear();
      size_t count = 0;
      for (uint32_t y : img) {
        if (seen.test(y)) return;
        seen.set(y);
        ++count;
      }
      if (count != G.order()) return;
      std::vector<uint32_t> tup(d);
      for (size_t i = 0; i < d; ++i) tup[i] = Z.elems[offsets[i]];
      out.tuples.push_back(std::move(tup));
      return;
    }
    for (uint32_t zi = 0; zi < Z.order(); ++zi) {
      offsets[pos] = zi;
      rec(pos + 1);
    }
  };
  rec(0);
  std::sort(out.tuples.begin(), out.tuples.end());
  return out;
}

std::vector<uint32_t> central_automorphism_action(
    const RealizedGroup& G, const std::vector<uint32_t>& min_gens,
    const std::vector<uint32_t>& offsets) {
  GenTree tree(G, min_gens);
  std::vector<uint32_t> gen_imgs(min_gens.size()), img(G.order());
  for (size_t i = 0; i < min_gens.size(); ++i)
    gen_imgs[i] = G.mul(min_gens[i], offsets[i]);
  propagate(G, tree, gen_imgs, img);
  return img;
}

uint64_t z_inn_order(const RealizedGroup& G) {
  if (is_abelian(G)) throw NotApplicableError("Z(Inn) of an abelian group is trivial");
  SeriesData uc = upper_central_series(G);
  const Subgroup& Z1 = uc.chain[1];
  const Subgroup& Z2 = uc.chain.size() > 2 ? uc.chain[2] : uc.chain.back();
  return Z2.order() / Z1.order();
}

EqualityVerdict autz_equals_zinn(const RealizedGroup& G) {
  EqualityVerdict v;
  CentralAutomorphismSet autz = autz_enumerate(G);
  v.autz_enumerated = autz.size();
  try {
    v.autz_formula = adney_yen_order(G);
  } catch (const NotPurelyNonabelianError&) {
    v.autz_formula.reset();
  } catch (const ScopeExceededError&) {
    v.autz_formula.reset();
  }
  SeriesData uc = upper_central_series(G);
  const Subgroup& Z1 = uc.chain[1];
  const Subgroup& Z2 = uc.chain.size() > 2 ? uc.chain[2] : uc.chain.back();
  v.z_inn = Z2.order() / Z1.order();
  if (v.autz_enumerated % v.z_inn != 0)
    throw InternalError("containment violated: |Z(Inn)| does not divide |Aut_z|");
  v.equal = (v.autz_enumerated == v.z_inn);

  // Explicit containment witness: conjugation by x in Z_2 is the central
  // automorphism with offsets [g_i, x]; all such tuples (one per coset of
  // Z in Z_2) must occur in the enumerated set.
  std::set<std::vector<uint32_t>> tupset(autz.tuples.begin(), autz.tuples.end());
  std::set<std::vector<uint32_t>> conj_tuples;
  for (uint32_t x : Z2.elems) {
    std::vector<uint32_t> tup(autz.min_gens.size());
    for (size_t i = 0; i < autz.min_gens.size(); ++i)
      tup[i] = G.comm(autz.min_gens[i], x);
    conj_tuples.insert(std::move(tup));
  }
  v.containment_witness =
      conj_tuples.size() == v.z_inn &&
      std::all_of(conj_tuples.begin(), conj_tuples.end(),
                  [&](const auto& t) { return tupset.count(t) != 0; });
  return v;
}

AbelianView view_of(const RealizedGroup& G, const Subgroup& H) {
  AbelianView v;
  v.order = H.order();
  v.elems = H.elems;
  std::vector<uint32_t> local(G.order(), UINT32_MAX);
  for (size_t i = 0; i < H.elems.size(); ++i) local[H.elems[i]] = uint32_t(i);
  const RealizedGroup* Gp = &G;
  auto elems = H.elems;
  v.mul = [Gp, local = std::move(local), elems](uint32_t a, uint32_t b) {
    return local[Gp->mul(elems[a], elems[b])];
  };
  return v;
}

AbelianView view_of(const QuotientGroup& Q) {
  AbelianView v;
  v.order = Q.order();
  v.elems.resize(Q.order());
  for (uint64_t i = 0; i < Q.order(); ++i) v.elems[uint32_t(i)] = Q.rep(uint32_t(i));
  const QuotientGroup* Qp = &Q;
  v.mul = [Qp](uint32_t a, uint32_t b) { return Qp->mul(a, b); };
  return v;
}

uint64_t hom_count_bruteforce(const AbelianView& A, const AbelianView& B) {
  // Greedy generating sequence of A.
  std::vector<uint32_t> gens;
  Bitset span(A.order);
  span.set(0);
  std::vector<uint32_t> work;
  for (uint32_t x = 0; x < A.order; ++x) {
    if (span.test(x)) continue;
    gens.push_back(x);
    work = span.to_indices();
    while (!work.empty()) {
      uint32_t t = work.back();
      work.pop_back();
      for (uint32_t g : gens) {
        uint32_t u = A.mul(t, g);
        if (!span.test(u)) {
          span.set(u);
          work.push_back(u);
        }
      }
    }
  }
  const size_t k = gens.size();
  double cost = 1;
  for (size_t i = 0; i < k; ++i) cost *= double(B.order);
  if (cost * double(A.order) * double(A.order) > 5e8)
    throw ScopeExceededError("hom enumeration out of scope");

  // BFS tree over A for image propagation.
  std::vector<std::pair<uint32_t, int>> parent(A.order, {UINT32_MAX, -1});
  std::vector<uint32_t> order;
  {
    Bitset seen(A.order);
    seen.set(0);
    order.push_back(0);
    for (size_t head = 0; head < order.size(); ++head) {
      uint32_t x = order[head];
      for (size_t gi = 0; gi < k; ++gi) {
        uint32_t y = A.mul(x, gens[gi]);
        if (!seen.test(y)) {
          seen.set(y);
          parent[y] = {x, int(gi)};
          order.push_back(y);
        }
      }
    }
  }

  uint64_t count = 0;
  std::vector<uint32_t> choice(k, 0), img(A.order);
  std::function<void(size_t)> rec = [&](size_t pos) {
    if (pos == k) {
      img[0] = 0;
      for (size_t i = 1; i < order.size(); ++i) {
        uint32_t y = order[i];
        auto [x, gi] = parent[y];
        img[y] = B.mul(img[x], choice[size_t(gi)]);
      }
      // full homomorphism check over every pair — this is the oracle side
      for (uint32_t a = 0; a < A.order; ++a)
        for (uint32_t b = 0; b < A.order; ++b)
          if (img[A.mul(a, b)] != B.mul(img[a], img[b])) return;
      ++count;
      return;
    }
    for (uint32_t b = 0; b < B.order; ++b) {
      choice[pos] = b;
      rec(pos + 1);
    }
  };
  if (k == 0) return 1;
  rec(0);
  return count;
}

}  // namespace pgl
