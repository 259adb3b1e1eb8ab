#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>

#include "pgl/presentation.hpp"

namespace pgl {

// A group element in normal form g_1^{e_1} ... g_n^{e_n}, e_i in [0, p).
struct GroupElement {
  std::array<uint8_t, 8> exps{};  // exps[1..n] used, slot 0 ignored

  bool operator==(const GroupElement&) const = default;
};

GroupElement identity_element();

// Collects an arbitrary product of generator powers to normal form.
// Exponents may be any integer (negative powers are formed through element
// inversion). Throws IndexError on an out-of-range generator.
GroupElement collect(const PcPresentation& pres,
                     std::span<const std::pair<int, long long>> raw);

// Product of two normal forms.
GroupElement multiply(const PcPresentation& pres, const GroupElement& x,
                      const GroupElement& y);

// Inverse of a normal form, found by the triangular solve x * g_1^{a_1} ...
// g_n^{a_n} = 1 (collection only ever adds corrections on later generators,
// so the leading exponent of a product is additive).
GroupElement inverse(const PcPresentation& pres, const GroupElement& x);

}  // namespace pgl
