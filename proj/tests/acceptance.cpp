// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Criteria carry their own exactness and runtime bounds.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pgl/catalog.hpp"
#include "pgl/central_aut.hpp"
#include "pgl/errors.hpp"
#include "pgl/invariants.hpp"
#include "pgl/report.hpp"
#include "pgl/theorems.hpp"

using namespace pgl;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void criterion(int num, const std::string& desc, const std::function<bool(std::string&)>& fn) {
  std::string detail;
  bool ok = false;
  auto t0 = Clock::now();
  try {
    ok = fn(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
    ok = false;
  }
  double dt = seconds_since(t0);
  std::printf("%s  criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", num,
              desc.c_str(), dt, detail.empty() ? "" : " — ", detail.c_str());
  if (!ok) ++g_failures;
}

GroupPtr realize_named(const CatalogLoad& cat, const std::string& name) {
  for (const auto& e : cat.entries)
    if (e.name == name) return e.group;
  throw IoError("catalog entry missing: " + name);
}

GroupPtr abelian_group(int p, const std::vector<uint64_t>& factors) {
  std::string text = "name ab\nprime " + std::to_string(p) + "\n";
  int n = 0;
  std::vector<std::pair<int, int>> chains;
  for (uint64_t f : factors) {
    int len = 0;
    for (uint64_t v = f; v > 1; v /= uint64_t(p)) ++len;
    chains.push_back({n + 1, len});
    n += len;
  }
  text += "gens " + std::to_string(n) + "\n";
  for (auto [start, len] : chains)
    for (int k = 0; k < len - 1; ++k)
      text += "pow " + std::to_string(start + k) + " = " +
              std::to_string(start + k + 1) + ":1\n";
  return RealizedGroup::realize(parse_presentation(text));
}

}  // namespace

int main() {
  const std::string catalog_dir = PGL_CATALOG_DIR;

  CatalogLoad cat = load_catalog(catalog_dir);
  if (!cat.errors.empty()) {
    for (auto& [p, m] : cat.errors)
      std::printf("FAIL  catalog load: %s: %s\n", p.c_str(), m.c_str());
    return 1;
  }

  // Full-catalog analysis pass, timed per entry (used by criteria 3, 5, 6, 8).
  std::map<std::string, GroupAnalysis> analyses;
  std::map<std::string, double> analysis_seconds;
  auto catalog_t0 = Clock::now();
  for (const auto& e : cat.entries) {
    auto t0 = Clock::now();
    analyses.emplace(e.name, analyze_group(e.group));
    analysis_seconds[e.name] = seconds_since(t0);
  }
  const double catalog_elapsed = seconds_since(catalog_t0);

  criterion(1, "phi8(32) reproduction at p=3: cl=3 d=2 |Z|=3 |gamma2|=9, autz=zinn=9", [&](std::string& detail) {
    auto t0 = Clock::now();
    GroupAnalysis a = analyze_group(realize_named(cat, "phi8_243"));
    double dt = seconds_since(t0);
    bool ok = a.order() == 243 && a.nilpotency_class == 3 && a.rank == 2 &&
              a.Z.order() == 3 && a.gamma2.order() == 9 && a.eq &&
              a.eq->autz_enumerated == 9 && a.eq->z_inn == 9 && a.eq->equal;
    if (dt >= 10.0) {
      detail = "took " + std::to_string(dt) + "s (limit 10s)";
      return false;
    }
    if (!ok) detail = "invariant mismatch";
    return ok;
  });

  criterion(2, "phi7-family witness: autz=27, zinn=9, equality false, d=3", [&](std::string& detail) {
    auto t0 = Clock::now();
    GroupAnalysis a = analyze_group(realize_named(cat, "phi7_243"));
    double dt = seconds_since(t0);
    bool ok = a.eq && a.eq->autz_enumerated == 27 && a.eq->z_inn == 9 &&
              !a.eq->equal && a.rank == 3;
    if (dt >= 10.0) {
      detail = "took " + std::to_string(dt) + "s (limit 10s)";
      return false;
    }
    if (!ok) detail = "invariant mismatch";
    return ok;
  });

  criterion(3, "Adney-Yen formula = enumeration for every purely non-abelian entry", [&](std::string& detail) {
    size_t checked = 0;
    for (const auto& [name, a] : analyses) {
      if (a.abelian || !a.pna || *a.pna == Pna::kFalse) continue;
      if (!a.eq || !a.eq->autz_formula) {
        detail = name + ": formula unavailable";
        return false;
      }
      if (*a.eq->autz_formula != a.eq->autz_enumerated) {
        detail = name + ": formula " + std::to_string(*a.eq->autz_formula) +
                 " != enumerated " + std::to_string(a.eq->autz_enumerated);
        return false;
      }
      ++checked;
    }
    if (catalog_elapsed >= 300.0) {
      detail = "catalog run took " + std::to_string(catalog_elapsed) + "s (limit 300s)";
      return false;
    }
    detail = std::to_string(checked) + " groups checked, catalog run " +
             std::to_string(catalog_elapsed).substr(0, 5) + "s";
    return checked >= 8;
  });

  criterion(4, "hom gcd formula = brute-force enumeration on 12 pairs of order <= 81", [&](std::string& detail) {
    const std::vector<std::pair<std::vector<uint64_t>, std::vector<uint64_t>>> pairs = {
        {{3}, {3}},       {{9}, {3}},       {{3}, {9}},       {{9, 3}, {3}},
        {{9, 3}, {9}},    {{3, 3}, {3, 3}}, {{27}, {9}},      {{3, 3, 3}, {3}},
        {{9, 3}, {3, 3}}, {{27, 3}, {9}},   {{9, 9}, {27}},   {{3, 3, 3, 3}, {3, 3}}};
    size_t n = 0;
    for (const auto& [ta, tb] : pairs) {
      auto A = abelian_group(3, ta);
      auto B = abelian_group(3, tb);
      uint64_t formula = hom_order(AbelianType{ta}, AbelianType{tb});
      uint64_t brute =
          hom_count_bruteforce(view_of(*A, full_subgroup(*A)), view_of(*B, full_subgroup(*B)));
      if (formula != brute) {
        detail = "pair " + std::to_string(n) + ": " + std::to_string(formula) +
                 " != " + std::to_string(brute);
        return false;
      }
      ++n;
    }
    detail = std::to_string(n) + " pairs";
    return n >= 10;
  });

  criterion(5, "lemma 2.1 necessary conditions hold wherever equality holds", [&](std::string& detail) {
    size_t eq_groups = 0;
    for (const auto& [name, a] : analyses) {
      if (a.abelian || !a.eq || !a.eq->equal) continue;
      ++eq_groups;
      bool z_in_g2 = a.Z.members.subset_of(a.gamma2.members);
      const Subgroup& Z2 = a.upper.chain.size() > 2 ? a.upper.chain[2] : a.upper.chain.back();
      bool noncyclic = !section_is_cyclic(*a.G, Z2, a.Z);
      if (!z_in_g2 || !noncyclic) {
        detail = name + ": Z<=gamma2=" + (z_in_g2 ? "yes" : "no") +
                 ", Z(Inn) non-cyclic=" + (noncyclic ? "yes" : "no");
        return false;
      }
    }
    detail = std::to_string(eq_groups) + " equality groups";
    return eq_groups >= 1;
  });

  criterion(6, "class-2 entries have Z2 = G; maximal-class 81 has zinn=3 < autz", [&](std::string& detail) {
    size_t class2 = 0;
    for (const auto& [name, a] : analyses) {
      if (a.abelian || a.nilpotency_class != 2) continue;
      ++class2;
      const Subgroup& Z2 = a.upper.chain.size() > 2 ? a.upper.chain[2] : a.upper.chain.back();
      if (Z2.order() != a.order()) {
        detail = name + ": Z2 != G";
        return false;
      }
    }
    const GroupAnalysis& w = analyses.at("maxclass81");
    if (!w.eq || w.eq->z_inn != 3 || w.eq->autz_enumerated <= 3) {
      detail = "maxclass81: zinn/autz mismatch";
      return false;
    }
    detail = std::to_string(class2) + " class-2 entries";
    return class2 >= 3;
  });

  criterion(7, "extraspecial order-27 groups: Aut_z = Inn as action sets, order 9", [&](std::string& detail) {
    for (const char* nm : {"heis27", "m27"}) {
      const GroupAnalysis& a = analyses.at(nm);
      if (!a.eq || a.eq->autz_enumerated != 9 || !a.autz_equals_inn_actions ||
          !*a.autz_equals_inn_actions) {
        detail = std::string(nm) + ": action sets differ or wrong order";
        return false;
      }
    }
    return true;
  });

  criterion(8, "theorem 3.3 biconditional on all applicable order-729 entries", [&](std::string& detail) {
    size_t applicable = 0, right_true = 0, right_false = 0;
    for (const auto& [name, a] : analyses) {
      TheoremVerdict v = check_theorem_3_3(a);
      if (!v.applicable) continue;
      ++applicable;
      (v.right ? right_true : right_false)++;
      if (!v.pass) {
        detail = name + ": biconditional fails";
        return false;
      }
      if (analysis_seconds.at(name) >= 180.0) {
        detail = name + ": analysis took " + std::to_string(analysis_seconds.at(name)) + "s";
        return false;
      }
    }
    detail = std::to_string(applicable) + " applicable (" + std::to_string(right_true) +
             " satisfying, " + std::to_string(right_false) + " violating)";
    return applicable >= 2 && right_true >= 1 && right_false >= 1;
  });

  criterion(9, "power lemma holds on every regular catalog group of order <= 243", [&](std::string& detail) {
    size_t checked = 0;
    for (const auto& [name, a] : analyses) {
      if (a.order() > 243 || !a.regular || !*a.regular) continue;
      if (!regular_power_lemma_check(*a.G)) {
        detail = name + ": power lemma fails";
        return false;
      }
      ++checked;
    }
    detail = std::to_string(checked) + " regular groups";
    return checked >= 5;
  });

  criterion(10, "two catalog report builds are byte-identical", [&](std::string& detail) {
    auto render_all = [&]() {
      CatalogLoad fresh = load_catalog(catalog_dir);
      std::string out;
      for (const auto& e : fresh.entries) out += render_text(build_report(e));
      return out;
    };
    std::string a = render_all();
    std::string b = render_all();
    if (a != b) {
      detail = "renders differ";
      return false;
    }
    detail = std::to_string(a.size()) + " bytes";
    return !a.empty();
  });

  if (g_failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
