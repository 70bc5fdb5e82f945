#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rational.hpp"

namespace symtop {

/// Point of the ambient rational vector space, or coordinate row of a
/// linear form; length always equals the rank of the space at hand.
using RatVec = std::vector<Rational>;

inline RatVec add(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline RatVec scaled(const RatVec& a, const Rational& c) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

inline RatVec neg(const RatVec& a) { return scaled(a, Rational(-1)); }

inline Rational dot(const RatVec& a, const RatVec& b) {
  Rational s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero_vec(const RatVec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

inline RatVec zero_vec(size_t n) { return RatVec(n); }

/// Strict lexicographic order; used wherever a deterministic vector order
/// is required.
inline bool vec_less(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

inline std::string vec_str(const RatVec& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].str();
  }
  return s;
}

/// Parses "a,b,c" with rational entries. Returns nullopt on malformed input.
inline std::optional<RatVec> try_parse_vec(std::string_view s) {
  RatVec v;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string_view tok =
        s.substr(pos, comma == std::string_view::npos ? s.size() - pos : comma - pos);
    auto r = Rational::try_parse(tok);
    if (!r) return std::nullopt;
    v.push_back(*r);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (v.empty()) return std::nullopt;
  return v;
}

/// Dense rational matrix, row-major.
struct RatMat {
  size_t rows = 0, cols = 0;
  std::vector<Rational> a;

  RatMat() = default;
  RatMat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}

  Rational& at(size_t i, size_t j) { return a[i * cols + j]; }
  const Rational& at(size_t i, size_t j) const { return a[i * cols + j]; }

  static RatMat identity(size_t n) {
    RatMat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
  }

  friend bool operator==(const RatMat&, const RatMat&) = default;
};

inline RatVec matvec(const RatMat& m, const RatVec& v) {
  RatVec r(m.rows);
  for (size_t i = 0; i < m.rows; ++i) {
    Rational s;
    for (size_t j = 0; j < m.cols; ++j) s += m.at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

inline RatMat mul(const RatMat& x, const RatMat& y) {
  RatMat r(x.rows, y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t k = 0; k < x.cols; ++k) {
      if (x.at(i, k).is_zero()) continue;
      for (size_t j = 0; j < y.cols; ++j)
        r.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return r;
}

inline RatMat transpose(const RatMat& m) {
  RatMat r(m.cols, m.rows);
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
  return r;
}

inline bool mat_less(const RatMat& x, const RatMat& y) {
  if (x.rows != y.rows) return x.rows < y.rows;
  if (x.cols != y.cols) return x.cols < y.cols;
  for (size_t i = 0; i < x.a.size(); ++i) {
    if (x.a[i] < y.a[i]) return true;
    if (y.a[i] < x.a[i]) return false;
  }
  return false;
}

inline Rational det(RatMat m) {
  if (m.rows != m.cols) throw std::domain_error("det: non-square matrix");
  size_t n = m.rows;
  Rational d(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m.at(piv, col).is_zero()) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      for (size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
      d = -d;
    }
    d *= m.at(col, col);
    for (size_t i = col + 1; i < n; ++i) {
      if (m.at(i, col).is_zero()) continue;
      Rational f = m.at(i, col) / m.at(col, col);
      for (size_t j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return d;
}

/// Gauss-Jordan inverse; throws domain_error on a singular input.
inline RatMat inverse(const RatMat& in) {
  if (in.rows != in.cols) throw std::domain_error("inverse: non-square matrix");
  size_t n = in.rows;
  RatMat m = in;
  RatMat inv = RatMat::identity(n);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m.at(piv, col).is_zero()) ++piv;
    if (piv == n) throw std::domain_error("inverse: singular matrix");
    if (piv != col)
      for (size_t j = 0; j < n; ++j) {
        std::swap(m.at(piv, j), m.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    Rational p = m.at(col, col);
    for (size_t j = 0; j < n; ++j) {
      m.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == col || m.at(i, col).is_zero()) continue;
      Rational f = m.at(i, col);
      for (size_t j = 0; j < n; ++j) {
        m.at(i, j) -= f * m.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

inline RatVec solve(const RatMat& m, const RatVec& b) {
  return matvec(inverse(m), b);
}

}  // namespace symtop
