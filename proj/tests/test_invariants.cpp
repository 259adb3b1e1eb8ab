#include <doctest.h>

#include <string>

#include "pgl/errors.hpp"
#include "pgl/invariants.hpp"
#include "pgl/subgroup.hpp"
#include "test_util.hpp"

using namespace pgl;

namespace {

std::vector<uint64_t> chain_orders(const SeriesData& s) {
  std::vector<uint64_t> out;
  for (const auto& g : s.chain) out.push_back(g.order());
  return out;
}

// Builds the pc presentation of a direct product of cyclic p-groups with the
// given factor orders (each a power of p).
PcPresentation abelian_presentation(int p, const std::vector<uint64_t>& factors) {
  std::string text = "name ab\nprime " + std::to_string(p) + "\n";
  int n = 0;
  std::vector<std::pair<int, int>> chains;  // (start gen, length)
  for (uint64_t f : factors) {
    int len = 0;
    uint64_t v = f;
    while (v > 1) {
      v /= uint64_t(p);
      ++len;
    }
    chains.push_back({n + 1, len});
    n += len;
  }
  text += "gens " + std::to_string(n) + "\n";
  for (auto [start, len] : chains)
    for (int k = 0; k < len - 1; ++k)
      text += "pow " + std::to_string(start + k) + " = " +
              std::to_string(start + k + 1) + ":1\n";
  return parse_presentation(text);
}

}  // namespace

TEST_CASE("lower central series: abelian, heis27, phi8, maxclass") {
  auto A = testutil::realize_catalog("c27.pcp");
  CHECK(lower_central_series(*A).nilpotency_class == 1);

  auto H = testutil::realize_catalog("heis27.pcp");
  SeriesData hs = lower_central_series(*H);
  CHECK(hs.nilpotency_class == 2);
  CHECK(chain_orders(hs) == std::vector<uint64_t>{27, 3, 1});

  auto P = testutil::realize_catalog("phi8_243.pcp");
  SeriesData ps = lower_central_series(*P);
  CHECK(ps.nilpotency_class == 3);
  CHECK(chain_orders(ps) == std::vector<uint64_t>{243, 9, 3, 1});

  auto W = testutil::realize_catalog("maxclass81.pcp");
  CHECK(lower_central_series(*W).nilpotency_class == 3);

  auto V = testutil::realize_catalog("c9c9byc9_729.pcp");
  SeriesData vs = lower_central_series(*V);
  CHECK(vs.nilpotency_class == 4);
  CHECK(chain_orders(vs) == std::vector<uint64_t>{729, 27, 9, 3, 1});
}

TEST_CASE("upper central series and agreement with quotient-center route") {
  auto H = testutil::realize_catalog("heis27.pcp");
  SeriesData us = upper_central_series(*H);
  CHECK(chain_orders(us) == std::vector<uint64_t>{1, 3, 27});

  auto W = testutil::realize_catalog("maxclass81.pcp");
  SeriesData ws = upper_central_series(*W);
  CHECK(chain_orders(ws) == std::vector<uint64_t>{1, 3, 9, 81});
  // |Z2/Z1| = 3 for the maximal-class group
  CHECK(ws.chain[2].order() / ws.chain[1].order() == 3);

  // differential check: Z_{i+1} is the preimage of the center of G/Z_i
  for (const char* nm : {"heis27.pcp", "maxclass81.pcp", "phi8_243.pcp"}) {
    auto G = testutil::realize_catalog(nm);
    SeriesData s = upper_central_series(*G);
    for (size_t i = 0; i + 1 < s.chain.size(); ++i) {
      QuotientGroup Q(*G, s.chain[i]);
      Bitset pre(G->order());
      for (uint64_t x = 0; x < G->order(); ++x) {
        uint32_t q = Q.project(uint32_t(x));
        bool central = true;
        for (uint32_t g : Q.gens())
          if (Q.mul(q, g) != Q.mul(g, q)) {
            central = false;
            break;
          }
        if (central) pre.set(x);
      }
      CHECK(pre == s.chain[i + 1].members);
    }
  }
}

TEST_CASE("series consistency: both series have the same length everywhere") {
  for (const char* nm :
       {"c3.pcp", "c27.pcp", "heis27.pcp", "m27.pcp", "c3xheis27.pcp",
        "maxclass81.pcp", "c9byc9_81.pcp", "phi8_243.pcp", "phi7_243.pcp",
        "ut4f3_729.pcp", "c27byc27_729.pcp", "c9c9byc9_729.pcp"}) {
    auto G = testutil::realize_catalog(nm);
    CHECK(lower_central_series(*G).nilpotency_class ==
          upper_central_series(*G).nilpotency_class);
  }
}

TEST_CASE("frattini and rank") {
  auto E = testutil::realize_catalog("c3c3.pcp");
  CHECK(frattini(*E).order() == 1);
  CHECK(rank(*E) == 2);

  auto H = testutil::realize_catalog("heis27.pcp");
  Subgroup hphi = frattini(*H);
  CHECK(hphi.order() == 3);
  CHECK(hphi.members == center(*H).members);  // Phi = Z for heis27
  CHECK(rank(*H) == 2);

  auto P = testutil::realize_catalog("phi8_243.pcp");
  CHECK(rank(*P) == 2);
  CHECK(frattini(*P).order() == 27);

  auto F = testutil::realize_catalog("phi7_243.pcp");
  CHECK(rank(*F) == 3);

  auto U = testutil::realize_catalog("ut4f3_729.pcp");
  CHECK(rank(*U) == 3);
}

TEST_CASE("omega1 and agemo1") {
  auto E = testutil::realize_catalog("c3c3.pcp");
  CHECK(omega1(*E).order() == 9);
  CHECK(agemo1(*E).order() == 1);

  auto C = testutil::realize_catalog("c9.pcp");
  CHECK(omega1(*C).order() == 3);
  CHECK(agemo1(*C).order() == 3);

  auto H = testutil::realize_catalog("heis27.pcp");
  CHECK(omega1(*H).order() == 27);
  CHECK(agemo1(*H).order() == 1);

  auto M = testutil::realize_catalog("m27.pcp");
  CHECK(omega1(*M).order() == 9);
  CHECK(agemo1(*M).order() == 3);

  // the agemo-in-gamma2 test that drives the rank argument at order p^6
  auto MC = testutil::realize_catalog("c27byc27_729.pcp");
  Subgroup g2 = commutator_subgroup(*MC, full_subgroup(*MC), full_subgroup(*MC));
  Subgroup ag = agemo1(*MC);
  CHECK(ag.order() == 81);
  CHECK(g2.order() == 9);
  CHECK_FALSE(ag.members.subset_of(g2.members));

  auto U = testutil::realize_catalog("ut4f3_729.pcp");
  Subgroup ug2 = commutator_subgroup(*U, full_subgroup(*U), full_subgroup(*U));
  CHECK(agemo1(*U).members.subset_of(ug2.members));
}

TEST_CASE("abelian types") {
  auto C3 = testutil::realize_catalog("c3.pcp");
  CHECK(abelian_type(*C3).factors == std::vector<uint64_t>{3});

  auto C9xC3 = RealizedGroup::realize(abelian_presentation(3, {9, 3}));
  CHECK(abelian_type(*C9xC3).factors == std::vector<uint64_t>{9, 3});

  auto P = testutil::realize_catalog("phi8_243.pcp");
  Subgroup g2 = commutator_subgroup(*P, full_subgroup(*P), full_subgroup(*P));
  QuotientGroup Q(*P, g2);
  CHECK(abelian_type(Q).factors == std::vector<uint64_t>{9, 3});

  auto H = testutil::realize_catalog("heis27.pcp");
  CHECK_THROWS_AS(abelian_type(*H), NotAbelianError);
}

TEST_CASE("abelian type round-trips through direct products") {
  const std::vector<std::vector<uint64_t>> types = {
      {3}, {9}, {27}, {3, 3}, {9, 3}, {27, 9}, {9, 3, 3}, {3, 3, 3, 3}, {81, 3}};
  for (const auto& t : types) {
    auto A = RealizedGroup::realize(abelian_presentation(3, t));
    CHECK(abelian_type(*A).factors == t);
  }
  auto B = RealizedGroup::realize(abelian_presentation(5, {25, 5}));
  CHECK(abelian_type(*B).factors == std::vector<uint64_t>{25, 5});
}

TEST_CASE("regularity: frozen values") {
  CHECK(is_regular(*testutil::realize_catalog("c27.pcp")));
  CHECK(is_regular(*testutil::realize_catalog("heis27.pcp")));
  CHECK(is_regular(*testutil::realize_catalog("m27.pcp")));
  CHECK(is_regular(*testutil::realize_catalog("c9byc9_81.pcp")));
  CHECK(is_regular(*testutil::realize_catalog("phi8_243.pcp")));
  // the wreath product is the classic irregular 3-group
  CHECK_FALSE(is_regular(*testutil::realize_catalog("maxclass81.pcp")));
  CHECK_FALSE(is_regular(*testutil::realize_catalog("phi7_243.pcp")));
}

TEST_CASE("class < p groups are regular (property over the catalog)") {
  for (const char* nm : {"c3.pcp", "c9.pcp", "c3c3.pcp", "heis27.pcp", "m27.pcp",
                         "c3xheis27.pcp", "c9byc9_81.pcp"}) {
    auto G = testutil::realize_catalog(nm);
    if (lower_central_series(*G).nilpotency_class < G->prime())
      CHECK(is_regular(*G));
  }
}

TEST_CASE("purely non-abelian: tri-state results") {
  auto H = testutil::realize_catalog("heis27.pcp");
  CHECK(is_purely_nonabelian(*H) == Pna::kTrueZInFrattini);

  auto X = testutil::realize_catalog("c3xheis27.pcp");
  CHECK(is_purely_nonabelian(*X) == Pna::kFalse);

  auto P = testutil::realize_catalog("phi8_243.pcp");
  CHECK(is_purely_nonabelian(*P) == Pna::kTrueZInFrattini);

  auto A = testutil::realize_catalog("c9.pcp");
  CHECK_THROWS_AS(is_purely_nonabelian(*A), NotApplicableError);
}

TEST_CASE("Z <= Phi implies the exhaustive search also finds no factor") {
  for (const char* nm : {"heis27.pcp", "m27.pcp", "maxclass81.pcp", "c9byc9_81.pcp"}) {
    auto G = testutil::realize_catalog(nm);
    REQUIRE(is_purely_nonabelian(*G) == Pna::kTrueZInFrattini);
    CHECK(is_purely_nonabelian(*G, /*force_exhaustive=*/true) == Pna::kTrue);
  }
}

TEST_CASE("scope guards raise ScopeExceededError") {
  // elementary abelian of order 5^6 = 15625: regularity check out of scope
  auto big = RealizedGroup::realize(parse_presentation("name e56\nprime 5\ngens 6\n"));
  CHECK(big->order() == 15625);
  CHECK_THROWS_AS(is_regular(*big), ScopeExceededError);

  // C9 x heis27 has order 243 > 3^4 and Z not inside Phi: search out of scope
  auto mixed = RealizedGroup::realize(parse_presentation(
      "name c9xheis\nprime 3\ngens 5\ncomm 2 1 = 3:1\npow 4 = 5:1\n"));
  CHECK(mixed->order() == 243);
  CHECK_THROWS_AS(is_purely_nonabelian(*mixed), ScopeExceededError);
}

TEST_CASE("regular power lemma") {
  CHECK(regular_power_lemma_check(*testutil::realize_catalog("c27.pcp")));
  CHECK(regular_power_lemma_check(*testutil::realize_catalog("heis27.pcp")));
  CHECK(regular_power_lemma_check(*testutil::realize_catalog("m27.pcp")));
  CHECK(regular_power_lemma_check(*testutil::realize_catalog("c9byc9_81.pcp")));
  CHECK(regular_power_lemma_check(*testutil::realize_catalog("phi8_243.pcp")));
  CHECK_THROWS_AS(regular_power_lemma_check(*testutil::realize_catalog("maxclass81.pcp")),
                  NotRegularError);
}

TEST_CASE("lemma 3.1 profile holds for the applicable order-81 entry") {
  auto G = testutil::realize_catalog("c9byc9_81.pcp");
  SeriesData lc = lower_central_series(*G);
  REQUIRE(lc.chain[1].order() == 3);
  CHECK(rank(*G) == 2);
  Subgroup Z = center(*G);
  Subgroup phi = frattini(*G);
  CHECK(Z.members == phi.members);
  CHECK(Z.order() == 9);
}

TEST_CASE("sections: type and cyclicity of Z2/Z") {
  auto P = testutil::realize_catalog("phi8_243.pcp");
  SeriesData uc = upper_central_series(*P);
  AbelianType t = section_abelian_type(*P, uc.chain[2], uc.chain[1]);
  CHECK(t.factors == std::vector<uint64_t>{3, 3});
  CHECK_FALSE(section_is_cyclic(*P, uc.chain[2], uc.chain[1]));

  auto W = testutil::realize_catalog("maxclass81.pcp");
  SeriesData wc = upper_central_series(*W);
  CHECK(section_is_cyclic(*W, wc.chain[2], wc.chain[1]));
}
