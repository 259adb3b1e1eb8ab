// AVX2 kernel variants. This TU is compiled with -mavx2 and only ever
// entered after the dispatcher has confirmed cpu support.

#include <immintrin.h>

#include <cstring>

#include "pgl/kernels.hpp"

namespace pgl::kern::detail {

namespace {

// Compare 8 lanes, return an 8-bit mask (one bit per u32 lane).
inline uint32_t cmp8(const uint32_t* a, const uint32_t* b) {
  __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a));
  __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b));
  __m256i eq = _mm256_cmpeq_epi32(va, vb);
  return uint32_t(_mm256_movemask_ps(_mm256_castsi256_ps(eq)));
}

inline uint32_t cmp8v(const uint32_t* a, __m256i vv) {
  __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a));
  __m256i eq = _mm256_cmpeq_epi32(va, vv);
  return uint32_t(_mm256_movemask_ps(_mm256_castsi256_ps(eq)));
}

void a_eq_mask(const uint32_t* a, const uint32_t* b, size_t n, uint64_t* out) {
  size_t nw = (n + 63) / 64;
  std::memset(out, 0, nw * sizeof(uint64_t));
  size_t i = 0;
  for (; i + 64 <= n; i += 64) {
    uint64_t w = 0;
    for (int k = 0; k < 8; ++k)
      w |= uint64_t(cmp8(a + i + 8 * k, b + i + 8 * k)) << (8 * k);
    out[i >> 6] = w;
  }
  for (; i < n; ++i)
    if (a[i] == b[i]) out[i >> 6] |= uint64_t(1) << (i & 63);
}

void a_eq_mask_value(const uint32_t* a, uint32_t v, size_t n, uint64_t* out) {
  size_t nw = (n + 63) / 64;
  std::memset(out, 0, nw * sizeof(uint64_t));
  __m256i vv = _mm256_set1_epi32(int(v));
  size_t i = 0;
  for (; i + 64 <= n; i += 64) {
    uint64_t w = 0;
    for (int k = 0; k < 8; ++k)
      w |= uint64_t(cmp8v(a + i + 8 * k, vv)) << (8 * k);
    out[i >> 6] = w;
  }
  for (; i < n; ++i)
    if (a[i] == v) out[i >> 6] |= uint64_t(1) << (i & 63);
}

size_t a_count_value(const uint32_t* a, uint32_t v, size_t n) {
  __m256i vv = _mm256_set1_epi32(int(v));
  size_t c = 0, i = 0;
  for (; i + 8 <= n; i += 8)
    c += size_t(__builtin_popcount(cmp8v(a + i, vv)));
  for (; i < n; ++i) c += (a[i] == v);
  return c;
}

void a_gather(const uint32_t* table, const uint32_t* idx, size_t n, uint32_t* out) {
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i vi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(idx + i));
    __m256i g = _mm256_i32gather_epi32(reinterpret_cast<const int*>(table), vi, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), g);
  }
  for (; i < n; ++i) out[i] = table[idx[i]];
}

void a_words_and(uint64_t* dst, const uint64_t* src, size_t nwords) {
  size_t i = 0;
  for (; i + 4 <= nwords; i += 4) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_and_si256(d, s));
  }
  for (; i < nwords; ++i) dst[i] &= src[i];
}

void a_words_or(uint64_t* dst, const uint64_t* src, size_t nwords) {
  size_t i = 0;
  for (; i + 4 <= nwords; i += 4) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(d, s));
  }
  for (; i < nwords; ++i) dst[i] |= src[i];
}

size_t a_words_popcount(const uint64_t* w, size_t nwords) {
  size_t c = 0;
  for (size_t i = 0; i < nwords; ++i) c += size_t(__builtin_popcountll(w[i]));
  return c;
}

bool a_words_subset(const uint64_t* a, const uint64_t* b, size_t nwords) {
  size_t i = 0;
  for (; i + 4 <= nwords; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i t = _mm256_andnot_si256(vb, va);
    if (!_mm256_testz_si256(t, t)) return false;
  }
  for (; i < nwords; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

bool a_words_equal(const uint64_t* a, const uint64_t* b, size_t nwords) {
  size_t i = 0;
  for (; i + 4 <= nwords; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i x = _mm256_xor_si256(va, vb);
    if (!_mm256_testz_si256(x, x)) return false;
  }
  for (; i < nwords; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace

const Ops avx2_ops = {a_eq_mask,   a_eq_mask_value, a_count_value,
                      a_gather,    a_words_and,     a_words_or,
                      a_words_popcount, a_words_subset, a_words_equal};

bool avx2_tu_present() { return true; }

}  // namespace pgl::kern::detail
