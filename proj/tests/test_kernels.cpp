#include <doctest.h>

#include <random>
#include <vector>

#include "pgl/bitset.hpp"
#include "pgl/kernels.hpp"

using namespace pgl;

namespace {

struct BackendGuard {
  kern::Backend prev;
  BackendGuard() : prev(kern::active_backend()) {}
  ~BackendGuard() { kern::force_backend(prev); }
};

std::vector<uint32_t> random_u32(std::mt19937_64& rng, size_t n, uint32_t lim) {
  std::vector<uint32_t> v(n);
  for (auto& x : v) x = uint32_t(rng() % lim);
  return v;
}

}  // namespace

TEST_CASE("scalar and avx2 kernels agree") {
  if (!([] {
        try {
          BackendGuard g;
          kern::force_backend(kern::Backend::avx2);
          return true;
        } catch (...) {
          return false;
        }
      })()) {
    MESSAGE("avx2 unavailable; equivalence test skipped");
    return;
  }
  BackendGuard guard;
  std::mt19937_64 rng(42);
  const size_t sizes[] = {0, 1, 7, 8, 63, 64, 65, 100, 729, 4099};
  for (size_t n : sizes) {
    // low-cardinality values so equalities actually occur
    auto a = random_u32(rng, n, 5);
    auto b = random_u32(rng, n, 5);
    size_t nw = (n + 63) / 64;
    std::vector<uint64_t> m1(nw ? nw : 1), m2(nw ? nw : 1);
    std::vector<uint32_t> g1(n), g2(n);
    auto idx = random_u32(rng, n, n ? uint32_t(n) : 1);

    kern::force_backend(kern::Backend::scalar);
    kern::eq_mask(a.data(), b.data(), n, m1.data());
    size_t c1 = kern::count_value(a.data(), 3, n);
    if (n) kern::gather(a.data(), idx.data(), n, g1.data());
    size_t p1 = kern::words_popcount(m1.data(), nw);

    kern::force_backend(kern::Backend::avx2);
    kern::eq_mask(a.data(), b.data(), n, m2.data());
    size_t c2 = kern::count_value(a.data(), 3, n);
    if (n) kern::gather(a.data(), idx.data(), n, g2.data());
    size_t p2 = kern::words_popcount(m2.data(), nw);

    CHECK(m1 == m2);
    CHECK(c1 == c2);
    CHECK(g1 == g2);
    CHECK(p1 == p2);

    std::vector<uint64_t> w1 = m1, w2 = m2;
    std::vector<uint64_t> other(nw ? nw : 1);
    for (auto& x : other) x = rng();
    kern::force_backend(kern::Backend::scalar);
    kern::words_and(w1.data(), other.data(), nw);
    bool s1 = kern::words_subset(w1.data(), m1.data(), nw);
    kern::force_backend(kern::Backend::avx2);
    kern::words_and(w2.data(), other.data(), nw);
    bool s2 = kern::words_subset(w2.data(), m2.data(), nw);
    CHECK(w1 == w2);
    CHECK(s1 == s2);
    CHECK(kern::words_equal(w1.data(), w2.data(), nw));
  }
}

TEST_CASE("eq_mask matches a direct definition") {
  std::mt19937_64 rng(7);
  auto a = random_u32(rng, 1000, 3);
  auto b = random_u32(rng, 1000, 3);
  std::vector<uint64_t> m((1000 + 63) / 64);
  kern::eq_mask(a.data(), b.data(), 1000, m.data());
  size_t expected = 0;
  for (size_t i = 0; i < 1000; ++i) {
    bool bit = (m[i >> 6] >> (i & 63)) & 1;
    CHECK(bit == (a[i] == b[i]));
    expected += (a[i] == b[i]);
  }
  CHECK(kern::words_popcount(m.data(), m.size()) == expected);
}

TEST_CASE("bitset basics") {
  Bitset s(130);
  s.set(0);
  s.set(64);
  s.set(129);
  CHECK(s.count() == 3);
  CHECK(s.test(64));
  CHECK_FALSE(s.test(63));
  auto idx = s.to_indices();
  CHECK(idx == std::vector<uint32_t>{0, 64, 129});
  Bitset t(130);
  t.set(64);
  CHECK(t.subset_of(s));
  CHECK_FALSE(s.subset_of(t));
  s &= t;
  CHECK(s.count() == 1);
}
