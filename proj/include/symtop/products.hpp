#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "geodesics.hpp"
#include "space.hpp"

namespace symtop {

/// Records how a product space splits into its two factors.
struct ProductTag {
  std::string left;
  std::string right;
  int64_t split = 0;  // rank of the left factor

  friend bool operator==(const ProductTag&, const ProductTag&) = default;
};

struct ProductSpace {
  SymmetricSpaceData space;
  ProductTag tag;
};

/// Block assembly of two spaces: coordinates of s1 first, then s2; each
/// root extends by zeros on the other block.
inline ProductSpace compose(const SymmetricSpaceData& s1, const SymmetricSpaceData& s2) {
  size_t r1 = static_cast<size_t>(s1.rank), r2 = static_cast<size_t>(s2.rank);
  ProductSpace out;
  SymmetricSpaceData& s = out.space;
  s.name = s1.name + " x " + s2.name;
  s.rank = s1.rank + s2.rank;
  s.dim_n = s1.dim_n + s2.dim_n;
  s.z2_orientable_cycles = s1.z2_orientable_cycles && s2.z2_orientable_cycles;
  s.gram = RatMat(r1 + r2, r1 + r2);
  for (size_t i = 0; i < r1; ++i)
    for (size_t j = 0; j < r1; ++j) s.gram.at(i, j) = s1.gram.at(i, j);
  for (size_t i = 0; i < r2; ++i)
    for (size_t j = 0; j < r2; ++j) s.gram.at(r1 + i, r1 + j) = s2.gram.at(i, j);
  auto embed = [&](const RatVec& v, bool left) {
    RatVec w(r1 + r2);
    for (size_t i = 0; i < v.size(); ++i) w[left ? i : r1 + i] = v[i];
    return w;
  };
  for (const auto& rt : s1.positive_roots)
    s.positive_roots.push_back({embed(rt.functional, true), rt.multiplicity});
  for (const auto& rt : s2.positive_roots)
    s.positive_roots.push_back({embed(rt.functional, false), rt.multiplicity});
  for (const auto& b : s1.lattice.basis) s.lattice.basis.push_back(embed(b, true));
  for (const auto& b : s2.lattice.basis) s.lattice.basis.push_back(embed(b, false));
  out.tag = {s1.name, s2.name, s1.rank};
  return out;
}

/// Catalog lookup extended to products: factors separated by 'x' or '*',
/// e.g. "sphere2 x sphere3". Composition folds left.
inline SymmetricSpaceData resolve_space_name(std::string_view name) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : name) {
    if (ch == 'x' || ch == '*') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  auto trim = [](std::string t) {
    size_t b = t.find_first_not_of(" \t");
    size_t e = t.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
  };
  SymmetricSpaceData acc;
  bool first = true;
  for (auto& p : parts) {
    std::string t = trim(p);
    if (t.empty()) fail(Errc::NotInCatalog, "empty factor in '" + std::string(name) + "'");
    SymmetricSpaceData factor = catalog(t);
    acc = first ? factor : compose(acc, factor).space;
    first = false;
  }
  return acc;
}

inline RatVec concat_vec(const RatVec& a, const RatVec& b) {
  RatVec v = a;
  v.insert(v.end(), b.begin(), b.end());
  return v;
}

/// Data-level factorization check for a closed geodesic (H1, H2) of a
/// product: both sides of every identity are enumerated independently.
struct FactorCheck {
  std::vector<ConjugateTime> product_times;
  std::vector<ConjugateTime> merged_times;
  bool times_match = false;
  int64_t index_product = 0, index_left = 0, index_right = 0;
  bool index_additive = false;
  int64_t mu_product = 0, mu_left = 0, mu_right = 0;
  bool mu_additive = false;
  Rational energy_product, energy_left, energy_right;
  bool energy_additive = false;

  bool ok() const { return times_match && index_additive && mu_additive && energy_additive; }
};

inline FactorCheck factor_check(const SymmetricSpaceData& s1, const SymmetricSpaceData& s2,
                                const RatVec& H1, const RatVec& H2) {
  if (!in_lattice(s1, H1)) fail(Errc::NotClosed, "H1 is not a lattice point of the left factor");
  if (!in_lattice(s2, H2)) fail(Errc::NotClosed, "H2 is not a lattice point of the right factor");
  if (is_zero_vec(H1) && is_zero_vec(H2))
    fail(Errc::ZeroDirection, "both factors are constant");

  SymmetricSpaceData prod = compose(s1, s2).space;
  RatVec H = concat_vec(H1, H2);

  FactorCheck chk;
  chk.product_times = crossing_times(prod, H);

  // Merge the component crossing lists, shifting right-factor root indices.
  std::map<Rational, ConjugateTime> merged;
  auto absorb = [&](const std::vector<ConjugateTime>& times, int shift) {
    for (const auto& ct : times) {
      auto& slot = merged[ct.t];
      slot.t = ct.t;
      slot.multiplicity += ct.multiplicity;
      for (auto [ri, lvl] : ct.contributing_roots)
        slot.contributing_roots.emplace_back(ri + shift, lvl);
    }
  };
  if (!is_zero_vec(H1)) absorb(crossing_times(s1, H1), 0);
  if (!is_zero_vec(H2)) absorb(crossing_times(s2, H2), static_cast<int>(s1.positive_roots.size()));
  for (auto& [t, ct] : merged) {
    std::sort(ct.contributing_roots.begin(), ct.contributing_roots.end());
    chk.merged_times.push_back(ct);
  }
  auto same = [](const std::vector<ConjugateTime>& a, const std::vector<ConjugateTime>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
      auto ca = a[i].contributing_roots, cb = b[i].contributing_roots;
      std::sort(ca.begin(), ca.end());
      std::sort(cb.begin(), cb.end());
      if (a[i].t != b[i].t || a[i].multiplicity != b[i].multiplicity || ca != cb) return false;
    }
    return true;
  };
  chk.times_match = same(chk.product_times, chk.merged_times);

  chk.index_product = morse_index(prod, H);
  chk.index_left = is_zero_vec(H1) ? 0 : morse_index(s1, H1);
  chk.index_right = is_zero_vec(H2) ? 0 : morse_index(s2, H2);
  chk.index_additive = chk.index_product == chk.index_left + chk.index_right;

  chk.mu_product = mu(prod, H);
  chk.mu_left = is_zero_vec(H1) ? 0 : mu(s1, H1);
  chk.mu_right = is_zero_vec(H2) ? 0 : mu(s2, H2);
  chk.mu_additive = chk.mu_product == chk.mu_left + chk.mu_right;

  chk.energy_product = energy(prod, H);
  chk.energy_left = energy(s1, H1);
  chk.energy_right = energy(s2, H2);
  chk.energy_additive = chk.energy_product == chk.energy_left + chk.energy_right;
  return chk;
}

/// Kunneth bookkeeping for the coproduct on a product space. Only classes
/// pushed from a product of two non-constant critical manifolds get a
/// vanishing verdict; the mixed summands stay undetermined.
struct KunnethSummand {
  std::string name;
  std::string coproduct_status;  // "Trivial" or "Unknown"
};

struct CoproductVanishingReport {
  std::string verdict;  // "CoproductTrivial"
  std::array<KunnethSummand, 3> summands;
  int64_t index_total = 0;
  int64_t dim_sigma_total = 0;
};

inline CoproductVanishingReport coproduct_vanishing_report(const ProductSpace& ps,
                                                           const RatVec& H1, const RatVec& H2) {
  if (is_zero_vec(H1) || is_zero_vec(H2))
    fail(Errc::NotApplicable,
         "the vanishing statement needs both factors non-constant");
  size_t r1 = static_cast<size_t>(ps.tag.split);
  if (H1.size() != r1 || H2.size() != ps.space.lattice.basis.size() - r1)
    fail(Errc::InvalidArgument, "component directions do not match the product split");
  RatVec H = concat_vec(H1, H2);
  if (!in_lattice(ps.space, H)) fail(Errc::NotClosed, "(H1, H2) is not a lattice point");

  CoproductVanishingReport rep;
  rep.verdict = "CoproductTrivial";
  rep.summands = {{{"(" + ps.tag.left + " loops rel) x (" + ps.tag.right + " loops rel)",
                    "Trivial"},
                   {"(" + ps.tag.left + " loops rel) x " + ps.tag.right, "Unknown"},
                   {ps.tag.left + " x (" + ps.tag.right + " loops rel)", "Unknown"}}};
  rep.index_total = morse_index(ps.space, H);
  rep.dim_sigma_total = ps.space.dim_n + mu(ps.space, H);
  return rep;
}

}  // namespace symtop
