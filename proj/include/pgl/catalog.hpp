#pragma once

#include <string>
#include <vector>

#include "pgl/analysis.hpp"
#include "pgl/group.hpp"
#include "pgl/presentation.hpp"

namespace pgl {

struct CatalogEntry {
  std::string path;
  std::string name;        // presentation name
  std::string provenance;  // "paper" | "derived" | ""
  GroupPtr group;
};

struct CatalogLoad {
  std::vector<CatalogEntry> entries;                      // sorted by name
  std::vector<std::pair<std::string, std::string>> errors;  // (path, message)
};

// Loads every *.pcp file in a directory: parse, realize, and check the
// embedded "# expect" assertions. Failures are collected per entry, never
// fail-fast. p=5 entries are skipped unless include_p5 is set.
// Throws IoError if the directory cannot be read.
CatalogLoad load_catalog(const std::string& dir, bool include_p5 = false);

// Parse + realize + expectation checks for a single file.
CatalogEntry load_entry(const std::string& path);

}  // namespace pgl
