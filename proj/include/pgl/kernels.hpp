#pragma once

#include <cstddef>
#include <cstdint>

// Flat array kernels used by the group engine's bulk scans: equality masks
// for centralizer computations, value counting for abelian-type profiles,
// gathers for power-map composition, and word ops backing Bitset.
//
// Every kernel has a scalar reference implementation and (on x86-64) an AVX2
// variant. The backend is picked once at runtime; the two must be bit-equal
// on all inputs, which tests/test_kernels.cpp checks.

namespace pgl::kern {

enum class Backend { scalar, avx2 };

Backend active_backend();
// Force a backend (tests). Throws ScopeExceededError if unsupported on this CPU.
void force_backend(Backend b);

// out bit i = (a[i] == b[i]); out has (n+63)/64 words, tail bits zero.
void eq_mask(const uint32_t* a, const uint32_t* b, size_t n, uint64_t* out);

// out bit i = (a[i] == v).
void eq_mask_value(const uint32_t* a, uint32_t v, size_t n, uint64_t* out);

// number of i with a[i] == v.
size_t count_value(const uint32_t* a, uint32_t v, size_t n);

// out[i] = table[idx[i]].
void gather(const uint32_t* table, const uint32_t* idx, size_t n, uint32_t* out);

// dst[i] &= src[i].
void words_and(uint64_t* dst, const uint64_t* src, size_t nwords);

// dst[i] |= src[i].
void words_or(uint64_t* dst, const uint64_t* src, size_t nwords);

size_t words_popcount(const uint64_t* w, size_t nwords);

// a subset of b, i.e. a & ~b == 0.
bool words_subset(const uint64_t* a, const uint64_t* b, size_t nwords);

bool words_equal(const uint64_t* a, const uint64_t* b, size_t nwords);

namespace detail {
struct Ops {
  void (*eq_mask)(const uint32_t*, const uint32_t*, size_t, uint64_t*);
  void (*eq_mask_value)(const uint32_t*, uint32_t, size_t, uint64_t*);
  size_t (*count_value)(const uint32_t*, uint32_t, size_t);
  void (*gather)(const uint32_t*, const uint32_t*, size_t, uint32_t*);
  void (*words_and)(uint64_t*, const uint64_t*, size_t);
  void (*words_or)(uint64_t*, const uint64_t*, size_t);
  size_t (*words_popcount)(const uint64_t*, size_t);
  bool (*words_subset)(const uint64_t*, const uint64_t*, size_t);
  bool (*words_equal)(const uint64_t*, const uint64_t*, size_t);
};
extern const Ops scalar_ops;
extern const Ops avx2_ops;  // defined only when the AVX2 TU is built
bool avx2_tu_present();
}  // namespace detail

}  // namespace pgl::kern
