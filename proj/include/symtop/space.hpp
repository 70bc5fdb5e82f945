#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"

namespace symtop {

/// Positive restricted root: the linear form alpha as a coordinate row
/// (alpha(H) = sum_i functional[i] * H[i]) together with its multiplicity.
struct RootDatum {
  RatVec functional;
  int64_t multiplicity = 1;

  friend bool operator==(const RootDatum&, const RootDatum&) = default;
};

/// Unit lattice, given by a basis X_1,...,X_r of the ambient space.
struct Lattice {
  std::vector<RatVec> basis;

  friend bool operator==(const Lattice&, const Lattice&) = default;
};

/// A compact symmetric space reduced to its restricted-root data. This is
/// the single source of truth every other module computes from.
struct SymmetricSpaceData {
  std::string name;
  int64_t rank = 0;
  std::vector<RootDatum> positive_roots;
  RatMat gram;
  Lattice lattice;
  int64_t dim_n = 0;
  bool z2_orientable_cycles = false;

  friend bool operator==(const SymmetricSpaceData&, const SymmetricSpaceData&) = default;
};

inline Rational root_value(const SymmetricSpaceData& s, size_t root_index, const RatVec& H) {
  return dot(s.positive_roots[root_index].functional, H);
}

/// Column matrix of the lattice basis vectors.
inline RatMat basis_matrix(const SymmetricSpaceData& s) {
  size_t r = static_cast<size_t>(s.rank);
  RatMat m(r, r);
  for (size_t j = 0; j < s.lattice.basis.size() && j < r; ++j)
    for (size_t i = 0; i < r; ++i) m.at(i, j) = s.lattice.basis[j][i];
  return m;
}

/// Coordinates of H in the lattice basis (rational; integral iff H is a
/// lattice point).
inline RatVec lattice_coords(const SymmetricSpaceData& s, const RatVec& H) {
  return solve(basis_matrix(s), H);
}

inline bool in_lattice(const SymmetricSpaceData& s, const RatVec& H) {
  for (const auto& c : lattice_coords(s, H))
    if (!c.is_integer()) return false;
  return true;
}

/// H = iterate_k * primitive with primitive a lattice point whose
/// coordinates have gcd 1.
struct PrimitiveDecomposition {
  RatVec primitive;
  int64_t iterate_k = 1;
  std::vector<int64_t> coords;  // lattice coordinates of H
};

inline PrimitiveDecomposition primitive_decomposition(const SymmetricSpaceData& s,
                                                      const RatVec& H) {
  if (is_zero_vec(H)) fail(Errc::ZeroDirection, "zero lattice direction");
  RatVec c = lattice_coords(s, H);
  std::vector<int64_t> k(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    if (!c[i].is_integer())
      fail(Errc::NotClosed, "H is not a lattice point (coordinate " +
                                std::to_string(i) + " = " + c[i].str() + ")");
    k[i] = c[i].num();
  }
  int64_t g = 0;
  for (int64_t v : k) g = std::gcd(g, v < 0 ? -v : v);
  PrimitiveDecomposition out;
  out.iterate_k = g;
  out.primitive = scaled(H, Rational(1, g));
  out.coords = std::move(k);
  return out;
}

/// Gram-orthogonal reflection in the wall alpha = 0 of the given root:
/// H |-> H - 2 alpha(H)/alpha(a) * a with a the Gram-dual vector of alpha.
inline RatMat reflection_matrix(const SymmetricSpaceData& s, size_t root_index) {
  size_t r = static_cast<size_t>(s.rank);
  const RatVec& c = s.positive_roots[root_index].functional;
  RatVec a = solve(s.gram, c);  // Gram-dual vector of the functional
  Rational norm = dot(c, a);
  if (norm.is_zero()) fail(Errc::InvalidArgument, "root with zero Gram norm");
  RatMat m = RatMat::identity(r);
  Rational f = Rational(2) / norm;
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) m.at(i, j) -= f * a[i] * c[j];
  return m;
}

struct ValidationCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace detail {

inline bool space_well_formed(const SymmetricSpaceData& s, std::string& why) {
  if (s.rank < 1) {
    why = "rank must be positive";
    return false;
  }
  size_t r = static_cast<size_t>(s.rank);
  if (s.gram.rows != r || s.gram.cols != r) {
    why = "gram matrix is not rank x rank";
    return false;
  }
  if (s.positive_roots.empty()) {
    why = "no positive roots";
    return false;
  }
  for (size_t i = 0; i < s.positive_roots.size(); ++i) {
    const auto& rt = s.positive_roots[i];
    if (rt.functional.size() != r) {
      why = "root " + std::to_string(i) + " has wrong length";
      return false;
    }
    if (is_zero_vec(rt.functional)) {
      why = "root " + std::to_string(i) + " is the zero functional";
      return false;
    }
    if (rt.multiplicity < 1) {
      why = "root " + std::to_string(i) + " has multiplicity < 1";
      return false;
    }
  }
  if (s.lattice.basis.size() != r) {
    why = "lattice basis must have rank vectors";
    return false;
  }
  for (const auto& b : s.lattice.basis)
    if (b.size() != r) {
      why = "lattice basis vector has wrong length";
      return false;
    }
  return true;
}

}  // namespace detail

/// Report-style validation of every space invariant. `strict` additionally
/// requires the root set to be closed under its own reflections.
inline ValidationReport validate(const SymmetricSpaceData& s, bool strict = false) {
  ValidationReport rep;
  std::string why;
  bool formed = detail::space_well_formed(s, why);
  rep.checks.push_back({"well_formed", formed, formed ? "" : why});
  if (!formed) return rep;

  size_t r = static_cast<size_t>(s.rank);

  bool symm = true;
  for (size_t i = 0; i < r && symm; ++i)
    for (size_t j = i + 1; j < r; ++j)
      if (s.gram.at(i, j) != s.gram.at(j, i)) {
        symm = false;
        break;
      }
  rep.checks.push_back({"gram_symmetric", symm, symm ? "" : "gram is not symmetric"});

  // Sylvester criterion on leading principal minors.
  bool posdef = symm;
  if (symm) {
    for (size_t k = 1; k <= r; ++k) {
      RatMat mk(k, k);
      for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) mk.at(i, j) = s.gram.at(i, j);
      if (det(mk).sign() <= 0) {
        posdef = false;
        break;
      }
    }
  }
  rep.checks.push_back(
      {"gram_positive_definite", posdef, posdef ? "" : "gram is not positive definite"});

  Rational bd = det(basis_matrix(s));
  bool indep = !bd.is_zero();
  rep.checks.push_back(
      {"lattice_basis_independent", indep, indep ? "" : "lattice basis is dependent"});

  int64_t msum = 0;
  for (const auto& rt : s.positive_roots) msum += rt.multiplicity;
  bool dim_ok = s.dim_n == s.rank + msum;
  rep.checks.push_back({"dimension_consistent", dim_ok,
                        "dim_n = " + std::to_string(s.dim_n) + ", rank + sum m = " +
                            std::to_string(s.rank + msum)});

  bool integral = true;
  std::string idetail;
  for (size_t i = 0; i < s.positive_roots.size() && integral; ++i)
    for (size_t j = 0; j < s.lattice.basis.size(); ++j) {
      Rational v = root_value(s, i, s.lattice.basis[j]);
      if (!v.is_integer()) {
        integral = false;
        idetail = "root " + std::to_string(i) + " on basis vector " + std::to_string(j) +
                  " = " + v.str();
        break;
      }
    }
  rep.checks.push_back({"roots_integral_on_lattice", integral, idetail});

  bool preserved = indep && posdef;
  std::string pdetail;
  if (preserved) {
    for (size_t i = 0; i < s.positive_roots.size() && preserved; ++i) {
      RatMat refl = reflection_matrix(s, i);
      for (size_t j = 0; j < s.lattice.basis.size(); ++j) {
        RatVec img = matvec(refl, s.lattice.basis[j]);
        if (!in_lattice(s, img)) {
          preserved = false;
          pdetail = "reflection " + std::to_string(i) + " moves basis vector " +
                    std::to_string(j) + " off the lattice";
          break;
        }
      }
    }
  } else {
    pdetail = "skipped (needs independent basis and positive definite gram)";
  }
  rep.checks.push_back({"reflections_preserve_lattice", preserved, pdetail});

  if (strict) {
    bool closed = posdef;
    std::string cdetail;
    if (closed) {
      for (size_t i = 0; i < s.positive_roots.size() && closed; ++i) {
        RatMat refl = transpose(reflection_matrix(s, i));
        for (size_t j = 0; j < s.positive_roots.size(); ++j) {
          // Action on functionals: (s_a b)(H) = b(s_a H), i.e. coords go
          // through the transposed reflection.
          RatVec img = matvec(refl, s.positive_roots[j].functional);
          bool found = false;
          for (const auto& rt : s.positive_roots)
            if (rt.functional == img || rt.functional == neg(img)) {
              found = true;
              break;
            }
          if (!found) {
            closed = false;
            cdetail = "s_" + std::to_string(i) + " maps root " + std::to_string(j) +
                      " outside the system";
            break;
          }
        }
      }
    }
    rep.checks.push_back({"root_system_closed", closed, cdetail});
  }

  return rep;
}

namespace detail {

inline bool parse_suffix_int(std::string_view name, std::string_view prefix, int64_t& out) {
  if (name.substr(0, prefix.size()) != prefix) return false;
  std::string_view rest = name.substr(prefix.size());
  bool paren = !rest.empty() && rest.front() == '(';
  if (paren) {
    if (rest.back() != ')') return false;
    rest = rest.substr(1, rest.size() - 2);
  }
  if (rest.empty()) return false;
  int64_t v = 0;
  for (char ch : rest) {
    if (ch < '0' || ch > '9') return false;
    v = v * 10 + (ch - '0');
    if (v > 1000000) return false;
  }
  out = v;
  return true;
}

}  // namespace detail

/// Built-in data for the round sphere, complex projective space and the
/// rank-2 complex Grassmannian. Accepts "sphere(3)"/"sphere3",
/// "cpn(2)"/"cpn2" and "gr2c4".
inline SymmetricSpaceData catalog(std::string_view name) {
  SymmetricSpaceData s;
  int64_t n = 0;
  if (detail::parse_suffix_int(name, "sphere", n)) {
    if (n < 2) fail(Errc::NotInCatalog, "sphere(n) requires n >= 2");
    s.name = "sphere(" + std::to_string(n) + ")";
    s.rank = 1;
    s.positive_roots = {{{Rational(1)}, n - 1}};
    s.gram = RatMat::identity(1);
    s.lattice.basis = {{Rational(2)}};
    s.dim_n = n;
    s.z2_orientable_cycles = true;
    return s;
  }
  if (detail::parse_suffix_int(name, "cpn", n)) {
    if (n < 1) fail(Errc::NotInCatalog, "cpn(n) requires n >= 1");
    s.name = "cpn(" + std::to_string(n) + ")";
    s.rank = 1;
    if (n == 1)
      s.positive_roots = {{{Rational(2)}, 1}};
    else
      s.positive_roots = {{{Rational(1)}, 2 * n - 2}, {{Rational(2)}, 1}};
    s.gram = RatMat::identity(1);
    s.lattice.basis = {{Rational(1)}};
    s.dim_n = 2 * n;
    s.z2_orientable_cycles = true;
    return s;
  }
  if (name == "gr2c4") {
    s.name = "gr2c4";
    s.rank = 2;
    s.positive_roots = {{{Rational(1), Rational(-1)}, 2},
                        {{Rational(1), Rational(1)}, 2},
                        {{Rational(2), Rational(0)}, 1},
                        {{Rational(0), Rational(2)}, 1}};
    s.gram = RatMat::identity(2);
    s.lattice.basis = {{Rational(1), Rational(0)}, {Rational(1, 2), Rational(1, 2)}};
    s.dim_n = 8;
    s.z2_orientable_cycles = true;
    return s;
  }
  fail(Errc::NotInCatalog, "unknown catalog space '" + std::string(name) + "'");
}

}  // namespace symtop
