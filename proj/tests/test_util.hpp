#pragma once

#include <string>

#include "pgl/catalog.hpp"
#include "pgl/group.hpp"
#include "pgl/presentation.hpp"

namespace testutil {

inline std::string catalog_path(const std::string& file) {
  return std::string(PGL_CATALOG_DIR) + "/" + file;
}

inline std::string fixture_path(const std::string& file) {
  return std::string(PGL_FIXTURE_DIR) + "/" + file;
}

inline pgl::GroupPtr realize_catalog(const std::string& file) {
  return pgl::RealizedGroup::realize(pgl::load_presentation_file(catalog_path(file)));
}

inline pgl::GroupPtr realize_fixture(const std::string& file) {
  return pgl::RealizedGroup::realize(pgl::load_presentation_file(fixture_path(file)));
}

}  // namespace testutil
