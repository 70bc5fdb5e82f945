#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "geodesics.hpp"
#include "space.hpp"
#include "spectrum.hpp"

namespace symtop {

/// Z2 combination of ring basis elements, kept as a sorted set of indices.
using Z2Elt = std::vector<int>;

inline Z2Elt z2_add(const Z2Elt& a, const Z2Elt& b) {
  Z2Elt out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return out;
}

struct RingBasisElt {
  std::string label;
  int64_t degree = 0;

  friend bool operator==(const RingBasisElt&, const RingBasisElt&) = default;
};

/// Mod-2 intersection ring of a closed manifold Sigma, given by a basis
/// with degrees and structure constants for the degree-(i+j-dim) product.
/// The table is stored symmetrically; the fundamental class is the unit.
struct IntersectionRing {
  int64_t dim_sigma = 0;
  std::vector<RingBasisElt> basis;
  int fundamental = -1;
  int point = -1;
  std::map<std::pair<int, int>, Z2Elt> products;  // key (i,j) with i <= j

  int find(const std::string& label) const {
    for (size_t i = 0; i < basis.size(); ++i)
      if (basis[i].label == label) return static_cast<int>(i);
    return -1;
  }

  friend bool operator==(const IntersectionRing&, const IntersectionRing&) = default;
};

inline Z2Elt ring_mult(const IntersectionRing& ring, const Z2Elt& a, const Z2Elt& b) {
  Z2Elt out;
  for (int i : a)
    for (int j : b) {
      auto key = std::make_pair(std::min(i, j), std::max(i, j));
      auto it = ring.products.find(key);
      if (it != ring.products.end()) out = z2_add(out, it->second);
    }
  return out;
}

/// Degree of a homogeneous element; empty or mixed-degree input is rejected.
inline int64_t elt_degree(const IntersectionRing& ring, const Z2Elt& a) {
  if (a.empty()) fail(Errc::ZeroClass, "the zero class has no degree");
  int64_t d = ring.basis[static_cast<size_t>(a[0])].degree;
  for (int i : a)
    if (ring.basis[static_cast<size_t>(i)].degree != d)
      fail(Errc::InvalidArgument, "class is not homogeneous");
  return d;
}

/// Exhaustive validation of the ring axioms; throws on the first violation.
inline void ring_check(const IntersectionRing& ring) {
  auto bad = [](const std::string& msg) { fail(Errc::InvalidArgument, "ring: " + msg); };
  if (ring.basis.empty()) bad("empty basis");
  int n = static_cast<int>(ring.basis.size());
  for (int i = 0; i < n; ++i) {
    if (ring.basis[i].label.empty()) bad("empty label");
    for (int j = i + 1; j < n; ++j)
      if (ring.basis[i].label == ring.basis[j].label)
        bad("duplicate label '" + ring.basis[i].label + "'");
    if (ring.basis[i].degree < 0 || ring.basis[i].degree > ring.dim_sigma)
      bad("degree of '" + ring.basis[i].label + "' outside [0, dim]");
  }
  if (ring.fundamental < 0 || ring.fundamental >= n) bad("fundamental class not set");
  if (ring.point < 0 || ring.point >= n) bad("point class not set");
  if (ring.basis[ring.fundamental].degree != ring.dim_sigma)
    bad("fundamental class must have degree dim");
  if (ring.basis[ring.point].degree != 0) bad("point class must have degree 0");
  for (const auto& [key, val] : ring.products) {
    auto [i, j] = key;
    if (i < 0 || j < i || j >= n) bad("product entry with bad indices");
    int64_t expect = ring.basis[i].degree + ring.basis[j].degree - ring.dim_sigma;
    for (int k : val) {
      if (k < 0 || k >= n) bad("product entry with bad target index");
      if (ring.basis[k].degree != expect)
        bad("product " + ring.basis[i].label + " * " + ring.basis[j].label +
            " violates the grading");
    }
  }
  for (int i = 0; i < n; ++i) {
    Z2Elt unit_prod = ring_mult(ring, {ring.fundamental}, {i});
    if (unit_prod != Z2Elt{i})
      bad("fundamental class is not a unit on '" + ring.basis[i].label + "'");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Z2Elt left = ring_mult(ring, ring_mult(ring, {i}, {j}), {k});
        Z2Elt right = ring_mult(ring, {i}, ring_mult(ring, {j}, {k}));
        if (left != right)
          bad("associativity fails on (" + ring.basis[i].label + ", " +
              ring.basis[j].label + ", " + ring.basis[k].label + ")");
      }
}

/// The conservative two-class ring {point, fundamental}: valid for any
/// Sigma of the given dimension; every product not forced by the unit law
/// is truncated to zero.
inline IntersectionRing two_class_ring(int64_t dim_sigma) {
  IntersectionRing r;
  r.dim_sigma = dim_sigma;
  r.basis = {{"pt", 0}, {"fund", dim_sigma}};
  r.point = 0;
  r.fundamental = 1;
  r.products[{0, 1}] = {0};
  r.products[{1, 1}] = {1};
  if (dim_sigma == 0) {
    // pt = fund in dimension 0; keep the two labels distinct but give pt
    // the unit behaviour as well.
    r.products[{0, 0}] = {0};
  }
  ring_check(r);
  return r;
}

/// Intersection ring of S2 x S3 (the unit tangent bundle of the 3-sphere):
/// basis pt, s2, s3, fund in degrees 0, 2, 3, 5; s2 * s3 = pt.
inline IntersectionRing unit_tangent_s3_ring() {
  IntersectionRing r;
  r.dim_sigma = 5;
  r.basis = {{"pt", 0}, {"s2", 2}, {"s3", 3}, {"fund", 5}};
  r.point = 0;
  r.fundamental = 3;
  r.products[{0, 3}] = {0};
  r.products[{1, 3}] = {1};
  r.products[{2, 3}] = {2};
  r.products[{3, 3}] = {3};
  r.products[{1, 2}] = {0};
  ring_check(r);
  return r;
}

/// Ring-table file: lines `basis <label> <degree>`, `fundamental <label>`,
/// `point <label>`, `product <i> <j> <k>` (labels; c^k_{ij} = 1 over Z2).
/// '#' starts a comment. The loader validates before returning.
inline IntersectionRing load_ring(std::istream& in) {
  IntersectionRing r;
  std::string line;
  int lineno = 0;
  std::string fund_label, point_label;
  std::vector<std::array<std::string, 3>> triples;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string tok;
    while (is >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    std::string ctx = "ring file line " + std::to_string(lineno);
    if (toks[0] == "basis" && toks.size() == 3) {
      auto deg = Rational::try_parse(toks[2]);
      if (!deg || !deg->is_integer()) fail(Errc::ParseError, ctx + ": bad degree");
      r.basis.push_back({toks[1], deg->num()});
    } else if (toks[0] == "fundamental" && toks.size() == 2) {
      fund_label = toks[1];
    } else if (toks[0] == "point" && toks.size() == 2) {
      point_label = toks[1];
    } else if (toks[0] == "product" && toks.size() == 4) {
      triples.push_back({toks[1], toks[2], toks[3]});
    } else {
      fail(Errc::ParseError, ctx + ": unknown or malformed entry '" + toks[0] + "'");
    }
  }
  auto need = [&](const std::string& label) {
    int i = r.find(label);
    if (i < 0) fail(Errc::ParseError, "ring file: unknown label '" + label + "'");
    return i;
  };
  if (fund_label.empty()) fail(Errc::ParseError, "ring file: missing fundamental");
  if (point_label.empty()) fail(Errc::ParseError, "ring file: missing point");
  r.fundamental = need(fund_label);
  r.point = need(point_label);
  r.dim_sigma = r.basis[r.fundamental].degree;
  for (const auto& t : triples) {
    int i = need(t[0]), j = need(t[1]), k = need(t[2]);
    auto key = std::make_pair(std::min(i, j), std::max(i, j));
    r.products[key] = z2_add(r.products[key], {k});
  }
  ring_check(r);
  return r;
}

inline IntersectionRing load_ring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open ring file '" + path + "'");
  return load_ring(in);
}

/// Ledger element modeling the image of a ring class under the completing
/// manifold of the k-th iterate of a prime direction.
struct CompletingClass {
  SymmetricSpaceData space;
  IntersectionRing ring;
  RatVec primitive;
  int64_t iterate_k = 1;
  Z2Elt sigma_elt;
  int64_t degree = 0;

  friend bool operator==(const CompletingClass&, const CompletingClass&) = default;
};

inline CompletingClass make_class(const SymmetricSpaceData& space, const IntersectionRing& ring,
                                  const RatVec& primitive, int64_t k, const Z2Elt& sigma_elt) {
  if (k < 1) fail(Errc::InvalidArgument, "iterate count must be >= 1");
  if (sigma_elt.empty()) fail(Errc::ZeroClass, "sigma part must be nonzero");
  for (int i : sigma_elt)
    if (i < 0 || static_cast<size_t>(i) >= ring.basis.size())
      fail(Errc::InvalidArgument, "sigma part references an unknown basis element");
  if (!is_prime(space, primitive))
    fail(Errc::NotPrimitive, "direction is not a prime lattice point");
  int64_t dim_sigma = space.dim_n + mu(space, primitive);
  if (ring.dim_sigma != dim_sigma)
    fail(Errc::RingMismatch, "ring has dim " + std::to_string(ring.dim_sigma) +
                                 " but the critical manifold has dim " +
                                 std::to_string(dim_sigma));
  CompletingClass c;
  c.space = space;
  c.ring = ring;
  c.primitive = primitive;
  c.iterate_k = k;
  c.sigma_elt = sigma_elt;
  c.degree = morse_index(space, scaled(primitive, Rational(k))) + elt_degree(ring, sigma_elt);
  return c;
}

enum class ProductStatus { ExactlyEqual, NonzeroWithLeadingTerm, Indeterminate };

inline const char* product_status_name(ProductStatus st) {
  switch (st) {
    case ProductStatus::ExactlyEqual: return "ExactlyEqual";
    case ProductStatus::NonzeroWithLeadingTerm: return "NonzeroWithLeadingTerm";
    case ProductStatus::Indeterminate: return "Indeterminate";
  }
  return "?";
}

/// Outcome of a loop product of two ledger classes. `leading` is the
/// completing-manifold part; the undetermined remainder is carried by the
/// status alone, never by invented values.
struct ProductVerdict {
  ProductStatus status = ProductStatus::Indeterminate;
  std::optional<CompletingClass> leading;
  int64_t degree = 0;  // always deg c1 + deg c2 - n
};

inline ProductVerdict cs_product(const CompletingClass& c1, const CompletingClass& c2) {
  if (!(c1.space == c2.space))
    fail(Errc::Unsupported, "product of classes over different spaces");
  if (!(c1.ring == c2.ring))
    fail(Errc::Unsupported, "product of classes over different rings");
  if (c1.primitive != c2.primitive)
    fail(Errc::Unsupported, "product across different prime directions is not determined");
  ProductVerdict v;
  v.degree = c1.degree + c2.degree - c1.space.dim_n;
  Z2Elt ab = ring_mult(c1.ring, c1.sigma_elt, c2.sigma_elt);
  if (ab.empty()) {
    v.status = ProductStatus::Indeterminate;
    return v;
  }
  v.leading = make_class(c1.space, c1.ring, c1.primitive, c1.iterate_k + c2.iterate_k, ab);
  Z2Elt fund = {c1.ring.fundamental};
  v.status = (c1.sigma_elt == fund || c2.sigma_elt == fund)
                 ? ProductStatus::ExactlyEqual
                 : ProductStatus::NonzeroWithLeadingTerm;
  return v;
}

struct PowerEntry {
  int64_t k = 1;
  int64_t degree = 0;
  bool nonzero = true;
};

/// Powers of a fundamental-class ledger element: each k-fold product is the
/// fundamental class over the k-th iterate, hence nonzero.
inline std::vector<PowerEntry> power_report(const CompletingClass& c, int64_t k_max) {
  if (c.sigma_elt != Z2Elt{c.ring.fundamental})
    fail(Errc::Unsupported, "power report requires the fundamental sigma part");
  if (c.iterate_k != 1)
    fail(Errc::Unsupported, "power report requires a prime (k = 1) class");
  std::vector<PowerEntry> out;
  for (int64_t k = 1; k <= k_max; ++k) {
    PowerEntry e;
    e.k = k;
    e.degree = morse_index(c.space, scaled(c.primitive, Rational(k))) + c.ring.dim_sigma;
    e.nonzero = true;
    out.push_back(e);
  }
  return out;
}

}  // namespace symtop
