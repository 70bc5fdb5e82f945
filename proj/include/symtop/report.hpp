#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "bottcycles.hpp"
#include "csring.hpp"
#include "geodesics.hpp"
#include "products.hpp"
#include "space.hpp"
#include "spectrum.hpp"
#include "weyl.hpp"

namespace symtop {

namespace detail {

inline std::string pad(const std::string& s, size_t w) {
  std::string out = s;
  while (out.size() < w) out += ' ';
  return out;
}

/// Renders rows of equal arity as a table with two-space gutters.
inline std::string table(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return "";
  std::vector<size_t> width(rows[0].size(), 0);
  for (const auto& row : rows)
    for (size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (size_t j = 0; j < row.size(); ++j) {
      line += j + 1 == row.size() ? row[j] : pad(row[j], width[j] + 2);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

inline std::string yesno(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

inline std::string render_validation(const ValidationReport& rep) {
  std::ostringstream os;
  for (const auto& c : rep.checks) {
    os << "check " << c.name << ": " << (c.pass ? "pass" : "FAIL");
    if (!c.pass && !c.detail.empty()) os << " (" << c.detail << ")";
    os << '\n';
  }
  os << "overall: " << (rep.ok() ? "pass" : "FAIL") << '\n';
  return os.str();
}

inline std::string render_space_info(const SymmetricSpaceData& s) {
  std::ostringstream os;
  os << "space " << s.name << '\n';
  os << "rank " << s.rank << "  dim " << s.dim_n << '\n';
  os << "z2_orientable_cycles " << (s.z2_orientable_cycles ? "true" : "false") << '\n';
  os << "positive roots (" << s.positive_roots.size() << "):\n";
  for (size_t i = 0; i < s.positive_roots.size(); ++i)
    os << "  [" << i << "] " << vec_str(s.positive_roots[i].functional) << "  m="
       << s.positive_roots[i].multiplicity << '\n';
  std::vector<int> simples = simple_root_indices(s);
  os << "simple roots:";
  for (int i : simples) os << " [" << i << "]";
  os << '\n';
  os << "lattice basis:\n";
  for (const auto& b : s.lattice.basis) os << "  " << vec_str(b) << '\n';
  os << "weyl group order " << generate_group(s).order() << '\n';
  return os.str();
}

inline std::string render_geodesic_report(const SymmetricSpaceData& s,
                                          const GeodesicReport& rep) {
  std::ostringstream os;
  os << "space " << s.name << '\n';
  os << "H " << vec_str(rep.H) << '\n';
  os << "energy " << rep.energy.str() << '\n';
  os << "prime " << detail::yesno(rep.prime) << "  primitive " << vec_str(rep.primitive)
     << "  k " << rep.iterate_k << '\n';
  os << "mu " << rep.mu << '\n';
  os << "index " << rep.index << '\n';
  os << "nullity " << rep.nullity << '\n';
  os << "conjugate times (" << rep.conjugate_times.size() << "):\n";
  for (const auto& ct : rep.conjugate_times) {
    os << "  t " << ct.t.str() << "  mult " << ct.multiplicity << "  from";
    for (auto [ri, lvl] : ct.contributing_roots) os << " [" << ri << "]@" << lvl;
    os << '\n';
  }
  return os.str();
}

inline std::string render_ledger(const SymmetricSpaceData& s, const MorseLedger& ledger,
                                 const Rational& bound, bool machine) {
  std::ostringstream os;
  if (machine) {
    os << "space name=" << s.name << " rank=" << s.rank << " dim=" << s.dim_n
       << " bound=" << bound.str() << " constant_index=" << ledger.constant_stratum_index
       << " constant_dim=" << ledger.constant_stratum_dim << '\n';
    for (const auto& e : ledger.entries) {
      os << "entry H=" << vec_str(e.H_dom) << " E=" << e.energy.str() << " ind=" << e.index
         << " null=" << e.dim_sigma << " dim_sigma=" << e.dim_sigma
         << " prime=" << (e.prime ? 1 : 0) << " primitive=" << vec_str(e.primitive)
         << " k=" << e.iterate_k << " wclass_degree=" << e.w_class_degree
         << " wclass_trivial=" << (e.w_class_coproduct_trivial ? 1 : 0) << '\n';
    }
    return os.str();
  }
  os << "# space " << s.name << "  rank " << s.rank << "  dim " << s.dim_n << '\n';
  os << "# energy bound " << bound.str() << '\n';
  os << "# constant stratum: index " << ledger.constant_stratum_index << "  dim "
     << ledger.constant_stratum_dim << '\n';
  os << "# critical manifolds: " << ledger.entries.size() << '\n';
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"H", "E", "ind", "null", "prime", "primitive", "k", "wclass"});
  for (const auto& e : ledger.entries)
    rows.push_back({vec_str(e.H_dom), e.energy.str(), std::to_string(e.index),
                    std::to_string(e.dim_sigma), detail::yesno(e.prime), vec_str(e.primitive),
                    std::to_string(e.iterate_k),
                    e.w_class_coproduct_trivial ? "trivial" : "unknown"});
  os << detail::table(rows);
  return os.str();
}

inline std::string render_iterate_check(const IterateCheck& chk) {
  std::ostringstream os;
  os << "k " << chk.k << '\n';
  os << "index(primitive) " << chk.index_primitive << "  mu " << chk.mu_value << '\n';
  os << "index(iterate): enumerated " << chk.index_iterate << "  formula " << chk.index_formula
     << "  " << (chk.index_ok() ? "equal" : "MISMATCH") << '\n';
  os << "index+nullity(iterate): enumerated " << chk.index_plus_nullity << "  formula "
     << chk.index_plus_nullity_formula << "  " << (chk.sum_ok() ? "equal" : "MISMATCH") << '\n';
  return os.str();
}

inline std::string render_class(const CompletingClass& c) {
  std::ostringstream os;
  os << "(primitive " << vec_str(c.primitive) << ", k " << c.iterate_k << ", sigma";
  for (int i : c.sigma_elt) os << ' ' << c.ring.basis[static_cast<size_t>(i)].label;
  os << ", degree " << c.degree << ")";
  return os.str();
}

inline std::string render_product_verdict(const ProductVerdict& v) {
  std::ostringstream os;
  os << "status " << product_status_name(v.status) << '\n';
  os << "degree " << v.degree << '\n';
  if (v.leading)
    os << "leading " << render_class(*v.leading) << '\n';
  else
    os << "leading zero (sigma parts multiply to zero; nothing is asserted)\n";
  return os.str();
}

inline std::string render_power_report(const CompletingClass& c,
                                       const std::vector<PowerEntry>& entries) {
  std::ostringstream os;
  os << "base " << render_class(c) << '\n';
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"k", "degree", "verdict"});
  for (const auto& e : entries)
    rows.push_back({std::to_string(e.k), std::to_string(e.degree),
                    e.nonzero ? "nonzero" : "unknown"});
  os << detail::table(rows);
  return os.str();
}

inline std::string render_bott_verdict(const SymmetricSpaceData& s, const PlaneFamily& family,
                                       const CoproductVerdict& v) {
  std::ostringstream os;
  os << "space " << s.name << '\n';
  os << "family (" << family.planes.size() << "):";
  for (const auto& p : family.planes) os << " [" << p.root_index << "]@" << p.level;
  os << '\n';
  os << "gamma_dim " << v.gamma_dim << '\n';
  os << "int_multiplicity "
     << (v.int_multiplicity == IntCert::One ? "1" : "unknown") << '\n';
  os << "based_coproduct "
     << (v.based_coproduct == BasedCoproduct::Trivial ? "trivial" : "unknown") << '\n';
  return os.str();
}

inline std::string render_factor_check(const SymmetricSpaceData& s1,
                                       const SymmetricSpaceData& s2, const RatVec& H1,
                                       const RatVec& H2, const FactorCheck& chk) {
  std::ostringstream os;
  os << "product " << s1.name << " x " << s2.name << '\n';
  os << "H1 " << vec_str(H1) << "  H2 " << vec_str(H2) << '\n';
  os << "conjugate times: product " << chk.product_times.size() << "  merged components "
     << chk.merged_times.size() << "  " << (chk.times_match ? "equal" : "MISMATCH") << '\n';
  os << "index: " << chk.index_product << " = " << chk.index_left << " + " << chk.index_right
     << "  " << (chk.index_additive ? "equal" : "MISMATCH") << '\n';
  os << "mu: " << chk.mu_product << " = " << chk.mu_left << " + " << chk.mu_right << "  "
     << (chk.mu_additive ? "equal" : "MISMATCH") << '\n';
  os << "energy: " << chk.energy_product.str() << " = " << chk.energy_left.str() << " + "
     << chk.energy_right.str() << "  " << (chk.energy_additive ? "equal" : "MISMATCH") << '\n';
  return os.str();
}

inline std::string render_coproduct_vanishing(const CoproductVanishingReport& rep) {
  std::ostringstream os;
  os << "verdict " << rep.verdict << '\n';
  os << "critical manifold: index " << rep.index_total << "  dim " << rep.dim_sigma_total
     << '\n';
  os << "kunneth summands:\n";
  for (const auto& sm : rep.summands)
    os << "  " << sm.name << ": " << sm.coproduct_status << '\n';
  return os.str();
}

}  // namespace symtop
