#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "errors.hpp"
#include "geodesics.hpp"
#include "space.hpp"
#include "weyl.hpp"

namespace symtop {

/// One critical manifold of the energy functional, keyed by its dominant
/// lattice point.
struct CriticalEntry {
  RatVec H_dom;
  std::vector<int64_t> coords;  // lattice coordinates of H_dom
  Rational energy;
  int64_t index = 0;
  int64_t dim_sigma = 0;  // n + mu, also the nullity
  bool prime = false;
  RatVec primitive;
  int64_t iterate_k = 1;
  int64_t w_class_degree = 0;          // degree of the associated W-class (= index)
  bool w_class_coproduct_trivial = false;
};

/// Energy-sorted list of critical manifolds up to a bound. The constant
/// loops form their own stratum (index 0, dimension n), reported separately.
struct MorseLedger {
  std::vector<CriticalEntry> entries;
  int64_t constant_stratum_index = 0;
  int64_t constant_stratum_dim = 0;

  /// Per entry the summand H_{*-index}(Sigma) split off the sublevel
  /// homology, recorded as (index, dim Sigma).
  std::vector<std::pair<int64_t, int64_t>> splitting_trace() const {
    std::vector<std::pair<int64_t, int64_t>> tr;
    tr.reserve(entries.size());
    for (const auto& e : entries) tr.emplace_back(e.index, e.dim_sigma);
    return tr;
  }
};

/// True iff the lattice coordinates of H have gcd 1, i.e. H is not a proper
/// iterate of a shorter lattice direction.
inline bool is_prime(const SymmetricSpaceData& s, const RatVec& H) {
  return primitive_decomposition(s, H).iterate_k == 1;
}

namespace detail {

inline int64_t isqrt64(int64_t v) {
  if (v <= 0) return 0;
  auto r = static_cast<int64_t>(std::sqrt(static_cast<long double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace detail

/// All critical manifolds with 0 < E <= energy_bound: lattice points are
/// walked inside the exact energy ellipsoid through a per-coordinate
/// bounding box and filtered to the closed positive chamber, which meets
/// every Weyl orbit exactly once.
inline MorseLedger enumerate_critical(const SymmetricSpaceData& s, const Rational& energy_bound) {
  if (energy_bound.sign() <= 0) fail(Errc::InvalidArgument, "energy bound must be positive");
  size_t r = static_cast<size_t>(s.rank);
  RatMat B = basis_matrix(s);
  RatMat Q = mul(transpose(B), mul(s.gram, B));  // energy form in lattice coordinates
  RatMat Qinv = inverse(Q);
  Rational C = Rational(2) * energy_bound;  // k^T Q k <= C

  std::vector<int64_t> kmax(r);
  for (size_t i = 0; i < r; ++i)
    kmax[i] = detail::isqrt64((C * Qinv.at(i, i)).floor());

  MorseLedger ledger;
  ledger.constant_stratum_dim = s.dim_n;

  std::vector<int64_t> k(r);
  for (size_t i = 0; i < r; ++i) k[i] = -kmax[i];
  for (;;) {
    bool all_zero = true;
    for (int64_t v : k)
      if (v != 0) {
        all_zero = false;
        break;
      }
    if (!all_zero) {
      Rational q;  // k^T Q k
      for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j)
          q += Rational(k[i]) * Q.at(i, j) * Rational(k[j]);
      if (q <= C) {
        RatVec H(r);
        for (size_t i = 0; i < r; ++i)
          for (size_t j = 0; j < r; ++j) H[i] += B.at(i, j) * Rational(k[j]);
        if (is_dominant(s, H)) {
          CriticalEntry e;
          e.H_dom = H;
          e.coords = k;
          e.energy = q / Rational(2);
          e.index = morse_index(s, H);
          e.dim_sigma = s.dim_n + mu(s, H);
          int64_t g = 0;
          for (int64_t v : k) g = std::gcd(g, v < 0 ? -v : v);
          e.iterate_k = g;
          e.prime = g == 1;
          e.primitive = scaled(H, Rational(1, g));
          e.w_class_degree = e.index;
          e.w_class_coproduct_trivial = s.rank >= 2;
          ledger.entries.push_back(std::move(e));
        }
      }
    }
    // odometer over the box, lexicographic
    size_t pos = r;
    while (pos > 0) {
      --pos;
      if (k[pos] < kmax[pos]) {
        ++k[pos];
        for (size_t j = pos + 1; j < r; ++j) k[j] = -kmax[j];
        break;
      }
      if (pos == 0) {
        pos = r + 1;  // done
        break;
      }
    }
    if (pos == r + 1 || r == 0) break;
  }

  std::stable_sort(ledger.entries.begin(), ledger.entries.end(),
                   [](const CriticalEntry& a, const CriticalEntry& b) {
                     return a.energy < b.energy;
                   });
  return ledger;
}

inline int64_t count_prime(const SymmetricSpaceData& s, const Rational& energy_bound) {
  int64_t n = 0;
  for (const auto& e : enumerate_critical(s, energy_bound).entries)
    if (e.prime) ++n;
  return n;
}

}  // namespace symtop
