#pragma once

#include <string>
#include <vector>

#include "pgl/catalog.hpp"
#include "pgl/theorems.hpp"

namespace pgl {

// The per-group structured report. String fields hold "n/a" or
// "scope-exceeded" where a quantity does not apply, so that rendering is a
// plain dump with a fixed key order.
struct InvariantReport {
  std::string name;
  int p = 0;
  int n = 0;
  uint64_t order = 0;
  bool abelian = false;
  int nilpotency_class = 0;
  int rank = 0;
  uint64_t z_order = 0;
  std::vector<uint64_t> lower_orders;  // |gamma_1|, |gamma_2|, ...
  std::vector<uint64_t> upper_orders;  // |Z_0|, |Z_1|, ...
  uint64_t frattini_order = 0;
  uint64_t omega_order = 0;
  uint64_t agemo_order = 0;
  std::string type_g_mod_gamma2;  // "9 3" style, or type of G when abelian
  std::string type_z;
  std::string regular;             // yes | no | scope-exceeded
  std::string purely_nonabelian;   // yes-z-in-frattini | yes-exhaustive | no | n/a | undecided
  std::string autz_order;          // number | n/a | scope-exceeded
  std::string autz_formula;        // number | n/a
  std::string zinn_order;
  std::string equality;            // yes | no | n/a
  std::string containment;         // yes | no | n/a
  std::vector<TheoremVerdict> verdicts;
};

InvariantReport build_report(const CatalogEntry& entry);
InvariantReport build_report(const std::string& name, const std::string& provenance,
                             const GroupAnalysis& a);

// Deterministic single-document rendering (golden-file friendly).
std::string render_text(const InvariantReport& r);

// Summary-table CSV: header + one row per report.
std::string csv_header();
std::string csv_row(const InvariantReport& r);

std::string verdict_cell(const TheoremVerdict& v);

}  // namespace pgl
