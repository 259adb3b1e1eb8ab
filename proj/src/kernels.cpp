#include "pgl/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "pgl/errors.hpp"

namespace pgl::kern {

namespace {

void s_eq_mask(const uint32_t* a, const uint32_t* b, size_t n, uint64_t* out) {
  size_t nw = (n + 63) / 64;
  std::memset(out, 0, nw * sizeof(uint64_t));
  for (size_t i = 0; i < n; ++i)
    if (a[i] == b[i]) out[i >> 6] |= uint64_t(1) << (i & 63);
}

void s_eq_mask_value(const uint32_t* a, uint32_t v, size_t n, uint64_t* out) {
  size_t nw = (n + 63) / 64;
  std::memset(out, 0, nw * sizeof(uint64_t));
  for (size_t i = 0; i < n; ++i)
    if (a[i] == v) out[i >> 6] |= uint64_t(1) << (i & 63);
}

size_t s_count_value(const uint32_t* a, uint32_t v, size_t n) {
  size_t c = 0;
  for (size_t i = 0; i < n; ++i) c += (a[i] == v);
  return c;
}

void s_gather(const uint32_t* table, const uint32_t* idx, size_t n, uint32_t* out) {
  for (size_t i = 0; i < n; ++i) out[i] = table[idx[i]];
}

void s_words_and(uint64_t* dst, const uint64_t* src, size_t nwords) {
  for (size_t i = 0; i < nwords; ++i) dst[i] &= src[i];
}

void s_words_or(uint64_t* dst, const uint64_t* src, size_t nwords) {
  for (size_t i = 0; i < nwords; ++i) dst[i] |= src[i];
}

size_t s_words_popcount(const uint64_t* w, size_t nwords) {
  size_t c = 0;
  for (size_t i = 0; i < nwords; ++i) c += size_t(__builtin_popcountll(w[i]));
  return c;
}

bool s_words_subset(const uint64_t* a, const uint64_t* b, size_t nwords) {
  for (size_t i = 0; i < nwords; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

bool s_words_equal(const uint64_t* a, const uint64_t* b, size_t nwords) {
  return std::memcmp(a, b, nwords * sizeof(uint64_t)) == 0;
}

std::atomic<const detail::Ops*> g_ops{nullptr};
std::atomic<Backend> g_backend{Backend::scalar};

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const detail::Ops* resolve() {
  const detail::Ops* ops = &detail::scalar_ops;
  Backend be = Backend::scalar;
  if (detail::avx2_tu_present() && cpu_has_avx2()) {
    const char* env = std::getenv("PGL_KERNEL_BACKEND");
    if (!(env && std::strcmp(env, "scalar") == 0)) {
      ops = &detail::avx2_ops;
      be = Backend::avx2;
    }
  }
  g_backend.store(be);
  return ops;
}

const detail::Ops& ops() {
  const detail::Ops* p = g_ops.load(std::memory_order_acquire);
  if (!p) {
    p = resolve();
    g_ops.store(p, std::memory_order_release);
  }
  return *p;
}

}  // namespace

namespace detail {
const Ops scalar_ops = {s_eq_mask,   s_eq_mask_value, s_count_value,
                        s_gather,    s_words_and,     s_words_or,
                        s_words_popcount, s_words_subset, s_words_equal};

#if !PGL_HAVE_AVX2_TU
const Ops avx2_ops = scalar_ops;  // placeholder, never selected
bool avx2_tu_present() { return false; }
#endif
}  // namespace detail

Backend active_backend() {
  ops();
  return g_backend.load();
}

void force_backend(Backend b) {
  if (b == Backend::avx2) {
    if (!detail::avx2_tu_present() || !cpu_has_avx2())
      throw ScopeExceededError("avx2 backend unavailable on this CPU/build");
    g_ops.store(&detail::avx2_ops);
  } else {
    g_ops.store(&detail::scalar_ops);
  }
  g_backend.store(b);
}

void eq_mask(const uint32_t* a, const uint32_t* b, size_t n, uint64_t* out) {
  ops().eq_mask(a, b, n, out);
}
void eq_mask_value(const uint32_t* a, uint32_t v, size_t n, uint64_t* out) {
  ops().eq_mask_value(a, v, n, out);
}
size_t count_value(const uint32_t* a, uint32_t v, size_t n) {
  return ops().count_value(a, v, n);
}
void gather(const uint32_t* table, const uint32_t* idx, size_t n, uint32_t* out) {
  ops().gather(table, idx, n, out);
}
void words_and(uint64_t* dst, const uint64_t* src, size_t nwords) {
  ops().words_and(dst, src, nwords);
}
void words_or(uint64_t* dst, const uint64_t* src, size_t nwords) {
  ops().words_or(dst, src, nwords);
}
size_t words_popcount(const uint64_t* w, size_t nwords) {
  return ops().words_popcount(w, nwords);
}
bool words_subset(const uint64_t* a, const uint64_t* b, size_t nwords) {
  return ops().words_subset(a, b, nwords);
}
bool words_equal(const uint64_t* a, const uint64_t* b, size_t nwords) {
  return ops().words_equal(a, b, nwords);
}

}  // namespace pgl::kern
