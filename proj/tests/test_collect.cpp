#include <doctest.h>

#include <vector>

#include "pgl/collect.hpp"
#include "pgl/errors.hpp"
#include "pgl/presentation.hpp"
#include "test_util.hpp"

using namespace pgl;

namespace {

PcPresentation heis() {
  return parse_presentation("name heis\nprime 3\ngens 3\ncomm 2 1 = 3:1\n");
}

GroupElement elt(std::initializer_list<int> exps) {
  GroupElement e;
  int k = 1;
  for (int v : exps) e.exps[size_t(k++)] = uint8_t(v);
  return e;
}

GroupElement collect_raw(const PcPresentation& p,
                         std::vector<std::pair<int, long long>> raw) {
  return collect(p, raw);
}

}  // namespace

TEST_CASE("heisenberg: b*a collects to a*b*c") {
  auto p = heis();
  // b a = a b [b,a] = a b c
  CHECK(collect_raw(p, {{2, 1}, {1, 1}}) == elt({1, 1, 1}));
  // a b stays a b
  CHECK(collect_raw(p, {{1, 1}, {2, 1}}) == elt({1, 1, 0}));
}

TEST_CASE("empty product is the identity") {
  auto p = heis();
  CHECK(collect_raw(p, {}) == identity_element());
}

TEST_CASE("collect is idempotent on normal forms") {
  auto p = heis();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        GroupElement e = elt({a, b, c});
        std::vector<std::pair<int, long long>> raw;
        for (int k = 1; k <= 3; ++k)
          if (e.exps[size_t(k)]) raw.push_back({k, e.exps[size_t(k)]});
        CHECK(collect(p, raw) == e);
      }
}

TEST_CASE("multiply and inverse satisfy the group laws on heis27") {
  auto p = heis();
  std::vector<GroupElement> all;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) all.push_back(elt({a, b, c}));
  for (const auto& x : all) {
    CHECK(multiply(p, x, identity_element()) == x);
    CHECK(multiply(p, identity_element(), x) == x);
    GroupElement xi = inverse(p, x);
    CHECK(multiply(p, x, xi) == identity_element());
    CHECK(multiply(p, xi, x) == identity_element());
  }
  CHECK(inverse(p, identity_element()) == identity_element());
}

TEST_CASE("power relations collect: C9 as two pc generators") {
  auto p = parse_presentation("name c9\nprime 3\ngens 2\npow 1 = 2:1\n");
  // g1^3 = g2, g1^4 = g1 g2
  CHECK(collect_raw(p, {{1, 3}}) == elt({0, 1}));
  CHECK(collect_raw(p, {{1, 4}}) == elt({1, 1}));
  // g1^9 = g2^3 = 1
  CHECK(collect_raw(p, {{1, 9}}) == identity_element());
}

TEST_CASE("negative exponents go through element inversion") {
  auto p = parse_presentation("name c9\nprime 3\ngens 2\npow 1 = 2:1\n");
  // g1^-1 = g1^8 = g1^2 g2^2
  CHECK(collect_raw(p, {{1, -1}}) == elt({2, 2}));
  CHECK(collect_raw(p, {{1, -1}, {1, 1}}) == identity_element());
  auto h = heis();
  // [b, a] = b^-1 a^-1 b a = c
  CHECK(collect_raw(h, {{2, -1}, {1, -1}, {2, 1}, {1, 1}}) == elt({0, 0, 1}));
}

TEST_CASE("phi8_243: collecting a1^3 yields the pc image of beta") {
  auto p = load_presentation_file(testutil::catalog_path("phi8_243.pcp"));
  // beta = a1^p is the third pc generator
  CHECK(collect(p, std::vector<std::pair<int, long long>>{{1, 3}}) ==
        elt({0, 0, 1, 0, 0}));
  // beta^{p^2} = a1^27 = 1 and a2^{p^2} = a2^9 = 1
  CHECK(collect(p, std::vector<std::pair<int, long long>>{{1, 27}}) ==
        identity_element());
  CHECK(collect(p, std::vector<std::pair<int, long long>>{{2, 9}}) ==
        identity_element());
  // the defining relation [a1, a2] = a1^3 holds under collection
  CHECK(collect(p, std::vector<std::pair<int, long long>>{
                       {1, -1}, {2, -1}, {1, 1}, {2, 1}}) == elt({0, 0, 1, 0, 0}));
}

TEST_CASE("out-of-range generators raise IndexError") {
  auto p = heis();
  CHECK_THROWS_AS(collect_raw(p, {{4, 1}}), IndexError);
  CHECK_THROWS_AS(collect_raw(p, {{0, 1}}), IndexError);
}
