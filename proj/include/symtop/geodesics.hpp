#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "space.hpp"

namespace symtop {

/// One interior conjugate point along t |-> t*H, t in (0,1): the time, the
/// summed multiplicity, and the (root index, integer level) pairs that hit it.
struct ConjugateTime {
  Rational t;
  int64_t multiplicity = 0;
  std::vector<std::pair<int, int64_t>> contributing_roots;
};

/// All t in (0,1) with alpha(tH) a nonzero integer for some positive root;
/// coincident crossings merge into one entry with summed multiplicity.
inline std::vector<ConjugateTime> crossing_times(const SymmetricSpaceData& s, const RatVec& H) {
  if (is_zero_vec(H)) fail(Errc::ZeroDirection, "zero direction has no geodesic ray");
  std::map<Rational, ConjugateTime> merged;
  for (size_t i = 0; i < s.positive_roots.size(); ++i) {
    Rational a = root_value(s, i, H);
    if (a.is_zero()) continue;
    int64_t m = s.positive_roots[i].multiplicity;
    auto record = [&](int64_t level) {
      Rational t = Rational(level) / a;
      auto& ct = merged[t];
      ct.t = t;
      ct.multiplicity += m;
      ct.contributing_roots.emplace_back(static_cast<int>(i), level);
    };
    if (a.sign() > 0) {
      int64_t top = a.is_integer() ? a.num() - 1 : a.floor();
      for (int64_t n = 1; n <= top; ++n) record(n);
    } else {
      int64_t bot = a.is_integer() ? a.num() + 1 : a.ceil();
      for (int64_t n = -1; n >= bot; --n) record(n);
    }
  }
  std::vector<ConjugateTime> out;
  out.reserve(merged.size());
  for (auto& [t, ct] : merged) out.push_back(std::move(ct));
  return out;
}

/// Morse index of the closed geodesic with direction H: sum of interior
/// conjugate-point multiplicities.
inline int64_t morse_index(const SymmetricSpaceData& s, const RatVec& H) {
  if (!is_zero_vec(H) && !in_lattice(s, H))
    fail(Errc::NotClosed, "H is not a lattice point");
  int64_t sum = 0;
  for (const auto& ct : crossing_times(s, H)) sum += ct.multiplicity;
  return sum;
}

/// Dimension of the orbit of the initial velocity: sum of multiplicities of
/// the roots not vanishing on H.
inline int64_t mu(const SymmetricSpaceData& s, const RatVec& H) {
  if (is_zero_vec(H)) fail(Errc::ZeroDirection, "mu undefined for the zero direction");
  int64_t sum = 0;
  for (size_t i = 0; i < s.positive_roots.size(); ++i)
    if (!root_value(s, i, H).is_zero()) sum += s.positive_roots[i].multiplicity;
  return sum;
}

/// Nullity of the closed geodesic: dim of its critical manifold, n + mu.
inline int64_t nullity(const SymmetricSpaceData& s, const RatVec& H) {
  if (!is_zero_vec(H) && !in_lattice(s, H))
    fail(Errc::NotClosed, "H is not a lattice point");
  return s.dim_n + mu(s, H);
}

/// E(H) = (1/2) H^T G H, matching loops parametrized on [0,1].
inline Rational energy(const SymmetricSpaceData& s, const RatVec& H) {
  return Rational(1, 2) * dot(H, matvec(s.gram, H));
}

struct GeodesicReport {
  RatVec H;
  std::vector<ConjugateTime> conjugate_times;
  int64_t index = 0;
  int64_t mu = 0;
  int64_t nullity = 0;
  Rational energy;
  bool prime = false;
  RatVec primitive;
  int64_t iterate_k = 1;
};

inline GeodesicReport geodesic_report(const SymmetricSpaceData& s, const RatVec& H) {
  PrimitiveDecomposition pd = primitive_decomposition(s, H);
  GeodesicReport rep;
  rep.H = H;
  rep.conjugate_times = crossing_times(s, H);
  for (const auto& ct : rep.conjugate_times) rep.index += ct.multiplicity;
  rep.mu = mu(s, H);
  rep.nullity = s.dim_n + rep.mu;
  rep.energy = energy(s, H);
  rep.iterate_k = pd.iterate_k;
  rep.primitive = pd.primitive;
  rep.prime = pd.iterate_k == 1;
  return rep;
}

/// Both sides of the iteration identities for the k-th iterate of a
/// primitive closed geodesic, each computed independently.
struct IterateCheck {
  int64_t k = 1;
  int64_t index_primitive = 0;
  int64_t mu_value = 0;
  int64_t index_iterate = 0;        // enumerated on k*H
  int64_t index_formula = 0;        // k*ind + (k-1)*mu
  int64_t index_plus_nullity = 0;   // enumerated on k*H
  int64_t index_plus_nullity_formula = 0;  // k*ind + k*mu + n

  bool index_ok() const { return index_iterate == index_formula; }
  bool sum_ok() const { return index_plus_nullity == index_plus_nullity_formula; }
  bool ok() const { return index_ok() && sum_ok(); }
};

inline IterateCheck iterate_check(const SymmetricSpaceData& s, const RatVec& H_primitive,
                                  int64_t k) {
  if (k < 1) fail(Errc::InvalidArgument, "iterate count must be >= 1");
  PrimitiveDecomposition pd = primitive_decomposition(s, H_primitive);
  if (pd.iterate_k != 1)
    fail(Errc::NotPrimitive,
         "H is the " + std::to_string(pd.iterate_k) + "-fold iterate of a shorter geodesic");
  IterateCheck chk;
  chk.k = k;
  chk.index_primitive = morse_index(s, H_primitive);
  chk.mu_value = mu(s, H_primitive);
  RatVec kH = scaled(H_primitive, Rational(k));
  chk.index_iterate = morse_index(s, kH);
  chk.index_formula = k * chk.index_primitive + (k - 1) * chk.mu_value;
  chk.index_plus_nullity = chk.index_iterate + nullity(s, kH);
  chk.index_plus_nullity_formula = k * chk.index_primitive + k * chk.mu_value + s.dim_n;
  return chk;
}

}  // namespace symtop
