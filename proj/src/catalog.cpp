#include "pgl/catalog.hpp"

#include <algorithm>
#include <filesystem>

#include "pgl/errors.hpp"
#include "pgl/invariants.hpp"
#include "pgl/subgroup.hpp"

namespace fs = std::filesystem;

namespace pgl {

namespace {

void check_expectations(const CatalogEntry& e) {
  const auto& exp = e.group->presentation().expect;
  if (!exp.nilpotency_class && !exp.rank && !exp.center_order && !exp.gamma2_order)
    return;
  const RealizedGroup& G = *e.group;
  if (exp.nilpotency_class || exp.gamma2_order) {
    SeriesData lc = lower_central_series(G);
    if (exp.nilpotency_class && *exp.nilpotency_class != lc.nilpotency_class)
      throw InconsistentPresentation(
          "expectation failed: class is " + std::to_string(lc.nilpotency_class) +
          ", expected " + std::to_string(*exp.nilpotency_class));
    if (exp.gamma2_order) {
      uint64_t g2 = lc.chain.size() > 1 ? lc.chain[1].order() : 1;
      if (uint64_t(*exp.gamma2_order) != g2)
        throw InconsistentPresentation("expectation failed: |gamma2| is " +
                                       std::to_string(g2) + ", expected " +
                                       std::to_string(*exp.gamma2_order));
    }
  }
  if (exp.rank && *exp.rank != rank(G))
    throw InconsistentPresentation("expectation failed: rank is " +
                                   std::to_string(rank(G)) + ", expected " +
                                   std::to_string(*exp.rank));
  if (exp.center_order) {
    uint64_t z = center(G).order();
    if (uint64_t(*exp.center_order) != z)
      throw InconsistentPresentation("expectation failed: |Z| is " +
                                     std::to_string(z) + ", expected " +
                                     std::to_string(*exp.center_order));
  }
}

}  // namespace

CatalogEntry load_entry(const std::string& path) {
  CatalogEntry e;
  e.path = path;
  PcPresentation pres = load_presentation_file(path);
  e.name = pres.name;
  e.provenance = pres.provenance;
  e.group = RealizedGroup::realize(std::move(pres));
  check_expectations(e);
  return e;
}

CatalogLoad load_catalog(const std::string& dir, bool include_p5) {
  if (!fs::exists(dir) || !fs::is_directory(dir))
    throw IoError("catalog directory not found: " + dir);
  std::vector<std::string> files;
  for (const auto& de : fs::directory_iterator(dir))
    if (de.is_regular_file() && de.path().extension() == ".pcp")
      files.push_back(de.path().string());
  std::sort(files.begin(), files.end());

  CatalogLoad out;
  for (const auto& f : files) {
    try {
      CatalogEntry e = load_entry(f);
      if (e.group->prime() == 5 && !include_p5) continue;
      out.entries.push_back(std::move(e));
    } catch (const Error& err) {
      out.errors.emplace_back(f, err.what());
    }
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.name < b.name; });
  return out;
}

}  // namespace pgl
