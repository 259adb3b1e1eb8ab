#include "pgl/report.hpp"

#include <sstream>

namespace pgl {

namespace {

std::string type_string(const AbelianType& t) {
  std::string s;
  for (size_t i = 0; i < t.factors.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(t.factors[i]);
  }
  return s.empty() ? "1" : s;
}

std::string pna_string(const std::optional<Pna>& p, bool abelian) {
  if (abelian) return "n/a";
  if (!p) return "undecided";
  switch (*p) {
    case Pna::kFalse: return "no";
    case Pna::kTrue: return "yes-exhaustive";
    case Pna::kTrueZInFrattini: return "yes-z-in-frattini";
  }
  return "?";
}

}  // namespace

InvariantReport build_report(const std::string& name, const std::string& provenance,
                             const GroupAnalysis& a) {
  (void)provenance;
  InvariantReport r;
  r.name = name;
  r.p = a.prime();
  r.n = a.G->num_gens();
  r.order = a.order();
  r.abelian = a.abelian;
  r.nilpotency_class = a.nilpotency_class;
  r.rank = a.rank;
  r.z_order = a.Z.order();
  for (const auto& s : a.lower.chain) r.lower_orders.push_back(s.order());
  for (const auto& s : a.upper.chain) r.upper_orders.push_back(s.order());
  r.frattini_order = a.phi.order();
  r.omega_order = a.omega.order();
  r.agemo_order = a.agemo.order();
  if (a.abelian) {
    r.type_g_mod_gamma2 = type_string(*a.type_g);
    r.type_z = type_string(*a.type_g);
  } else {
    r.type_g_mod_gamma2 = type_string(*a.type_g_mod_gamma2);
    r.type_z = type_string(*a.type_z);
  }
  r.regular = a.regular ? (*a.regular ? "yes" : "no") : "scope-exceeded";
  r.purely_nonabelian = pna_string(a.pna, a.abelian);
  if (a.abelian) {
    r.autz_order = "n/a";
    r.autz_formula = "n/a";
    r.zinn_order = "n/a";
    r.equality = "n/a";
    r.containment = "n/a";
  } else if (!a.eq) {
    r.autz_order = "scope-exceeded";
    r.autz_formula = "n/a";
    r.zinn_order = "scope-exceeded";
    r.equality = "n/a";
    r.containment = "n/a";
  } else {
    r.autz_order = std::to_string(a.eq->autz_enumerated);
    r.autz_formula = a.eq->autz_formula ? std::to_string(*a.eq->autz_formula) : "n/a";
    r.zinn_order = std::to_string(a.eq->z_inn);
    r.equality = a.eq->equal ? "yes" : "no";
    r.containment = a.eq->containment_witness ? "yes" : "no";
  }
  r.verdicts = check_all_theorems(a);
  return r;
}

InvariantReport build_report(const CatalogEntry& entry) {
  GroupAnalysis a = analyze_group(entry.group);
  return build_report(entry.name, entry.provenance, a);
}

std::string verdict_cell(const TheoremVerdict& v) {
  if (!v.applicable) return "inapplicable(" + v.failed_hypothesis + ")";
  return v.pass ? "pass" : "FAIL";
}

std::string render_text(const InvariantReport& r) {
  std::ostringstream os;
  auto chain = [](const std::vector<uint64_t>& c) {
    std::string s;
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i]);
    }
    return s;
  };
  os << "group              " << r.name << '\n';
  os << "p                  " << r.p << '\n';
  os << "n                  " << r.n << '\n';
  os << "order              " << r.order << '\n';
  os << "abelian            " << (r.abelian ? "yes" : "no") << '\n';
  os << "class              " << r.nilpotency_class << '\n';
  os << "rank               " << r.rank << '\n';
  os << "order-center       " << r.z_order << '\n';
  os << "lower-central      " << chain(r.lower_orders) << '\n';
  os << "upper-central      " << chain(r.upper_orders) << '\n';
  os << "order-frattini     " << r.frattini_order << '\n';
  os << "order-omega1       " << r.omega_order << '\n';
  os << "order-agemo1       " << r.agemo_order << '\n';
  os << "type-g-mod-gamma2  " << r.type_g_mod_gamma2 << '\n';
  os << "type-center        " << r.type_z << '\n';
  os << "regular            " << r.regular << '\n';
  os << "purely-nonabelian  " << r.purely_nonabelian << '\n';
  os << "autz-order         " << r.autz_order << '\n';
  os << "autz-formula       " << r.autz_formula << '\n';
  os << "zinn-order         " << r.zinn_order << '\n';
  os << "autz-equals-zinn   " << r.equality << '\n';
  os << "containment-ok     " << r.containment << '\n';
  os << "theorems\n";
  for (const auto& v : r.verdicts)
    os << "  " << theorem_id_name(v.id) << "  " << verdict_cell(v) << '\n';
  return os.str();
}

std::string csv_header() {
  return "name,p,n,order,class,rank,z,frattini,omega1,agemo1,regular,"
         "purely_nonabelian,autz,autz_formula,zinn,equality,containment\n";
}

std::string csv_row(const InvariantReport& r) {
  std::ostringstream os;
  os << r.name << ',' << r.p << ',' << r.n << ',' << r.order << ','
     << r.nilpotency_class << ',' << r.rank << ',' << r.z_order << ','
     << r.frattini_order << ',' << r.omega_order << ',' << r.agemo_order << ','
     << r.regular << ',' << r.purely_nonabelian << ',' << r.autz_order << ','
     << r.autz_formula << ',' << r.zinn_order << ',' << r.equality << ','
     << r.containment << '\n';
  return os.str();
}

}  // namespace pgl
