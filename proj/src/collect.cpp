#include "pgl/collect.hpp"

#include <vector>

#include "pgl/errors.hpp"

namespace pgl {

namespace {

// Collection from the left. The word being collected is u * reverse(stack):
// u is a normal form and the stack holds the uncollected tail, top = leftmost.
//
// To absorb the tail's first letter g_j into u:
//   - if u has no letters above j, bump u_j (an overflow g_j^p is replaced by
//     its power word, pushed back for collection);
//   - otherwise the letters of u above j return to the stack interleaved with
//     commutator words: t g_j = g_j t [t, g_j] for each tail letter t, so
//     g_k^e g_j = g_j (g_k w_kj)^e with w_kj = comm[k][j].
//
// Termination is the usual weight argument: corrections only involve strictly
// larger generators. A step cap guards against pathological inputs.
class Collector {
 public:
  explicit Collector(const PcPresentation& pres) : pres_(pres) {}

  GroupElement run(std::span<const Syllable> word) {
    GroupElement u;
    stack_.clear();
    for (size_t k = word.size(); k-- > 0;) push(word[k]);
    size_t steps = 0;
    while (!stack_.empty()) {
      if (++steps > kStepCap)
        throw InconsistentPresentation("collection did not terminate");
      Syllable s = stack_.back();
      stack_.pop_back();
      if (s.exp > 1) {
        stack_.push_back({s.gen, s.exp - 1});
        s.exp = 1;
      }
      absorb(u, s.gen);
    }
    return u;
  }

 private:
  static constexpr size_t kStepCap = 50'000'000;

  void push(Syllable s) {
    if (s.exp > 0) stack_.push_back(s);
  }
  void push_word(const Word& w) {
    for (size_t k = w.size(); k-- > 0;) push(w[k]);
  }

  void absorb(GroupElement& u, int j) {
    int n = pres_.n;
    int top = 0;
    for (int k = n; k > j; --k)
      if (u.exps[size_t(k)]) {
        top = k;
        break;
      }
    if (top == 0) {
      // No tail above j: bump the exponent in place.
      if (++u.exps[size_t(j)] == pres_.p) {
        u.exps[size_t(j)] = 0;
        push_word(pres_.power_word(j));
      }
      return;
    }
    // Move the tail back to the stack with commutator corrections, rightmost
    // letters pushed first so they pop last.
    for (int k = n; k > j; --k) {
      int e = u.exps[size_t(k)];
      if (!e) continue;
      u.exps[size_t(k)] = 0;
      for (int c = 0; c < e; ++c) {
        push_word(pres_.comm_word(k, j));
        push({k, 1});
      }
    }
    // Now u ends at or below j; insert g_j. A power overflow word belongs
    // left of the returned tail, so it is pushed after (popped before) it.
    if (++u.exps[size_t(j)] == pres_.p) {
      u.exps[size_t(j)] = 0;
      push_word(pres_.power_word(j));
    }
  }

  const PcPresentation& pres_;
  std::vector<Syllable> stack_;
};

std::vector<Syllable> syllables_of(const PcPresentation& pres, const GroupElement& x) {
  std::vector<Syllable> out;
  for (int i = 1; i <= pres.n; ++i)
    if (x.exps[size_t(i)]) out.push_back({i, x.exps[size_t(i)]});
  return out;
}

}  // namespace

GroupElement identity_element() { return GroupElement{}; }

GroupElement multiply(const PcPresentation& pres, const GroupElement& x,
                      const GroupElement& y) {
  std::vector<Syllable> w = syllables_of(pres, x);
  for (const auto& s : syllables_of(pres, y)) w.push_back(s);
  return Collector(pres).run(w);
}

GroupElement inverse(const PcPresentation& pres, const GroupElement& x) {
  GroupElement acc;
  GroupElement z = x;
  for (int i = 1; i <= pres.n; ++i) {
    int a = (pres.p - z.exps[size_t(i)]) % pres.p;
    if (a == 0) continue;
    acc.exps[size_t(i)] = uint8_t(a);
    GroupElement gi;
    gi.exps[size_t(i)] = uint8_t(a);
    z = multiply(pres, z, gi);
  }
  if (z != GroupElement{})
    throw InternalError("inverse solve failed for " + pres.name);
  return acc;
}

GroupElement collect(const PcPresentation& pres,
                     std::span<const std::pair<int, long long>> raw) {
  std::vector<Syllable> word;
  std::vector<std::pair<GroupElement, long long>> neg;  // (g_i^-1, count)
  GroupElement acc;
  bool any_neg = false;
  for (auto [g, e] : raw) {
    if (g < 1 || g > pres.n)
      throw IndexError("generator " + std::to_string(g) + " out of range [1, " +
                       std::to_string(pres.n) + "]");
    if (e < 0) any_neg = true;
  }
  if (!any_neg) {
    for (auto [g, e] : raw)
      for (long long k = 0; k < e; ++k) word.push_back({g, 1});
    return Collector(pres).run(word);
  }
  // Mixed signs: fold the product left to right at element level.
  for (auto [g, e] : raw) {
    GroupElement gi;
    gi.exps[size_t(g)] = 1;
    GroupElement factor = gi;
    long long count = e;
    if (e < 0) {
      factor = inverse(pres, gi);
      count = -e;
    }
    for (long long k = 0; k < count; ++k) acc = multiply(pres, acc, factor);
  }
  return acc;
}

}  // namespace pgl
