#pragma once

#include <cstdint>
#include <vector>

#include "pgl/kernels.hpp"

namespace pgl {

// Fixed-size bitset over the element index space of one group.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(size_t nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  size_t size() const { return nbits_; }
  size_t words() const { return w_.size(); }
  uint64_t* data() { return w_.data(); }
  const uint64_t* data() const { return w_.data(); }

  bool test(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(size_t i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(size_t i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  size_t count() const { return kern::words_popcount(w_.data(), w_.size()); }

  Bitset& operator&=(const Bitset& o) {
    kern::words_and(w_.data(), o.w_.data(), w_.size());
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    kern::words_or(w_.data(), o.w_.data(), w_.size());
    return *this;
  }
  bool subset_of(const Bitset& o) const {
    return kern::words_subset(w_.data(), o.w_.data(), w_.size());
  }
  bool operator==(const Bitset& o) const {
    return nbits_ == o.nbits_ && kern::words_equal(w_.data(), o.w_.data(), w_.size());
  }

  std::vector<uint32_t> to_indices() const {
    std::vector<uint32_t> out;
    out.reserve(count());
    for (size_t wi = 0; wi < w_.size(); ++wi) {
      uint64_t w = w_[wi];
      while (w) {
        unsigned b = unsigned(__builtin_ctzll(w));
        out.push_back(uint32_t(64 * wi + b));
        w &= w - 1;
      }
    }
    return out;
  }

 private:
  size_t nbits_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace pgl
