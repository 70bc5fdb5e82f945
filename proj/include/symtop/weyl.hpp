#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "errors.hpp"
#include "space.hpp"

namespace symtop {

/// Finite reflection group generated by the root reflections. Elements are
/// matrices acting on column vectors of the ambient space; the list is
/// deduplicated and sorted, so equal spaces give byte-identical groups.
struct WeylGroup {
  std::vector<RatMat> elements;
  std::vector<RatMat> generators;

  size_t order() const { return elements.size(); }
};

struct ChamberPosition {
  RatVec point;
  bool dominant = false;
  std::vector<int> stabilizing_walls;  // indices of positive roots vanishing at the point
};

inline RatVec reflect(const SymmetricSpaceData& s, size_t root_index, const RatVec& H) {
  if (root_index >= s.positive_roots.size())
    fail(Errc::InvalidArgument, "root index out of range");
  return matvec(reflection_matrix(s, root_index), H);
}

/// Simple roots chosen as the positive roots not expressible as a sum of
/// two positive roots.
inline std::vector<int> simple_root_indices(const SymmetricSpaceData& s) {
  std::vector<int> out;
  size_t p = s.positive_roots.size();
  for (size_t i = 0; i < p; ++i) {
    bool sum = false;
    for (size_t j = 0; j < p && !sum; ++j)
      for (size_t k = 0; k < p; ++k)
        if (add(s.positive_roots[j].functional, s.positive_roots[k].functional) ==
            s.positive_roots[i].functional) {
          sum = true;
          break;
        }
    if (!sum) out.push_back(static_cast<int>(i));
  }
  return out;
}

/// Dominance in the closed positive chamber: alpha(H) >= 0 on every simple
/// root. Points on walls count as dominant.
inline bool is_dominant(const SymmetricSpaceData& s, const RatVec& H) {
  for (int i : simple_root_indices(s))
    if (root_value(s, static_cast<size_t>(i), H).sign() < 0) return false;
  return true;
}

inline ChamberPosition chamber_position(const SymmetricSpaceData& s, const RatVec& H) {
  ChamberPosition cp;
  cp.point = H;
  cp.dominant = is_dominant(s, H);
  for (size_t i = 0; i < s.positive_roots.size(); ++i)
    if (root_value(s, i, H).is_zero()) cp.stabilizing_walls.push_back(static_cast<int>(i));
  return cp;
}

/// Closure of the generating reflections under composition. Aborts with
/// CapExceeded when the element count passes `cap`, which signals malformed
/// root data rather than a genuine finite group.
inline WeylGroup generate_group(const SymmetricSpaceData& s, size_t cap = 1000000) {
  WeylGroup g;
  for (size_t i = 0; i < s.positive_roots.size(); ++i)
    g.generators.push_back(reflection_matrix(s, i));

  std::vector<RatMat> elems = {RatMat::identity(static_cast<size_t>(s.rank))};
  auto known = [&](const RatMat& m) {
    for (const auto& e : elems)
      if (e == m) return true;
    return false;
  };
  size_t frontier_begin = 0;
  while (frontier_begin < elems.size()) {
    size_t frontier_end = elems.size();
    for (size_t i = frontier_begin; i < frontier_end; ++i)
      for (const auto& gen : g.generators) {
        RatMat next = mul(gen, elems[i]);
        if (!known(next)) {
          elems.push_back(std::move(next));
          if (elems.size() > cap)
            fail(Errc::CapExceeded, "reflection group exceeds cap of " + std::to_string(cap));
        }
      }
    frontier_begin = frontier_end;
  }
  std::sort(elems.begin(), elems.end(), mat_less);
  g.elements = std::move(elems);
  return g;
}

struct Canonicalized {
  RatVec dominant;
  std::vector<int> word;  // root indices; applying them to the input, left to right, gives `dominant`
};

/// Unique Weyl-orbit representative in the closed positive chamber, found
/// by descending along simple reflections. Idempotent on dominant inputs.
inline Canonicalized canonicalize(const SymmetricSpaceData& s, const RatVec& H) {
  Canonicalized out;
  out.dominant = H;
  std::vector<int> simples = simple_root_indices(s);
  size_t steps = 0;
  for (;;) {
    int neg = -1;
    for (int i : simples)
      if (root_value(s, static_cast<size_t>(i), out.dominant).sign() < 0) {
        neg = i;
        break;
      }
    if (neg < 0) break;
    out.dominant = reflect(s, static_cast<size_t>(neg), out.dominant);
    out.word.push_back(neg);
    if (++steps > 1000000)
      fail(Errc::CapExceeded, "canonicalization does not terminate; malformed root data");
  }
  return out;
}

/// Full orbit of H, sorted and deduplicated.
inline std::vector<RatVec> orbit(const WeylGroup& g, const RatVec& H) {
  std::vector<RatVec> out;
  out.reserve(g.elements.size());
  for (const auto& e : g.elements) out.push_back(matvec(e, H));
  std::sort(out.begin(), out.end(), vec_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace symtop
