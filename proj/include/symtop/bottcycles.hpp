#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "geodesics.hpp"
#include "rng.hpp"
#include "space.hpp"

namespace symtop {

/// Affine hyperplane alpha(H) = level. level = 0 (a wall) is permitted.
struct SingularPlane {
  int root_index = 0;
  int64_t level = 0;

  friend bool operator==(const SingularPlane&, const SingularPlane&) = default;
};

/// Ordered family of singular planes; repetition is allowed (iterates need
/// repeated planes) and the empty family is the basepoint class.
struct PlaneFamily {
  std::vector<SingularPlane> planes;

  friend bool operator==(const PlaneFamily&, const PlaneFamily&) = default;
};

/// Multiplicity attached to one singular plane: proportional positive roots
/// beta = c * alpha contribute m_beta when c * level is an integer. For
/// level != 0 this is exactly the conjugate-point multiplicity of a
/// crossing of the plane; for level = 0 every proportional root counts.
inline int64_t plane_mult(const SymmetricSpaceData& s, const SingularPlane& p) {
  if (p.root_index < 0 || static_cast<size_t>(p.root_index) >= s.positive_roots.size())
    fail(Errc::InvalidArgument, "plane references an invalid root");
  const RatVec& alpha = s.positive_roots[static_cast<size_t>(p.root_index)].functional;
  size_t pivot = 0;
  while (pivot < alpha.size() && alpha[pivot].is_zero()) ++pivot;
  int64_t total = 0;
  for (const auto& rt : s.positive_roots) {
    const RatVec& beta = rt.functional;
    if (beta[pivot].is_zero()) continue;
    Rational c = beta[pivot] / alpha[pivot];
    if (c.sign() <= 0 || beta != scaled(alpha, c)) continue;
    if ((c * Rational(p.level)).is_integer()) total += rt.multiplicity;
  }
  return total;
}

/// Dimension of the cycle attached to an ordered plane family; additive
/// under concatenation. The empty family has dimension 0.
inline int64_t gamma_dim(const SymmetricSpaceData& s, const PlaneFamily& family) {
  int64_t total = 0;
  for (const auto& p : family.planes) total += plane_mult(s, p);
  return total;
}

/// Ordered family of polygons (vertex chains) witnessing that the plane
/// family admits a lattice-nonintersecting representative. Chain i-1 ends
/// and chain i starts at the junction q_i on plane p_i; the whole chain
/// meets the lattice only at the start of the first and the end of the
/// last polygon.
struct PolygonCertificate {
  PlaneFamily family;
  std::vector<std::vector<RatVec>> polygons;  // m+1 chains
  std::vector<RatVec> junctions;              // m shared endpoints

  friend bool operator==(const PolygonCertificate&, const PolygonCertificate&) = default;
};

/// All t in [0,1] with A + t(B - A) on the lattice, solved exactly in
/// lattice coordinates. A degenerate segment (A = B) reports t = 0 iff the
/// point itself is a lattice point.
inline std::vector<Rational> segment_lattice_hits(const SymmetricSpaceData& s, const RatVec& A,
                                                  const RatVec& B) {
  RatVec a = lattice_coords(s, A);
  RatVec b = lattice_coords(s, B);
  RatVec d = sub(b, a);
  size_t r = a.size();
  if (is_zero_vec(d)) {
    for (const auto& x : a)
      if (!x.is_integer()) return {};
    return {Rational(0)};
  }
  // A coordinate that never moves must already be integral.
  size_t pivot = r;
  for (size_t i = 0; i < r; ++i) {
    if (d[i].is_zero()) {
      if (!a[i].is_integer()) return {};
    } else if (pivot == r ||
               abs(d[i]) < abs(d[pivot])) {
      pivot = i;
    }
  }
  Rational lo = std::min(a[pivot], b[pivot]);
  Rational hi = std::max(a[pivot], b[pivot]);
  std::vector<Rational> hits;
  for (int64_t m = lo.ceil(); m <= hi.floor(); ++m) {
    Rational t = (Rational(m) - a[pivot]) / d[pivot];
    if (t.sign() < 0 || t > Rational(1)) continue;
    bool all = true;
    for (size_t i = 0; i < r; ++i)
      if (!(a[i] + t * d[i]).is_integer()) {
        all = false;
        break;
      }
    if (all) hits.push_back(t);
  }
  std::sort(hits.begin(), hits.end());
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
  return hits;
}

struct VerifyReport {
  bool valid = true;
  std::vector<std::string> problems;

  void problem(const std::string& msg) {
    valid = false;
    problems.push_back(msg);
  }
};

/// Exact verification of every certificate invariant.
inline VerifyReport verify_certificate_report(const SymmetricSpaceData& s,
                                              const PolygonCertificate& cert) {
  VerifyReport rep;
  size_t r = static_cast<size_t>(s.rank);
  size_t m = cert.family.planes.size();
  for (const auto& p : cert.family.planes)
    if (p.root_index < 0 || static_cast<size_t>(p.root_index) >= s.positive_roots.size()) {
      rep.problem("family references an invalid root index");
      return rep;
    }
  if (cert.polygons.size() != m + 1) {
    rep.problem("expected " + std::to_string(m + 1) + " polygons, found " +
                std::to_string(cert.polygons.size()));
    return rep;
  }
  if (cert.junctions.size() != m) {
    rep.problem("expected " + std::to_string(m) + " junctions, found " +
                std::to_string(cert.junctions.size()));
    return rep;
  }
  for (const auto& chain : cert.polygons) {
    if (chain.empty()) {
      rep.problem("empty polygon chain");
      return rep;
    }
    for (const auto& v : chain)
      if (v.size() != r) {
        rep.problem("polygon vertex of wrong dimension");
        return rep;
      }
  }
  for (const auto& v : cert.junctions)
    if (v.size() != r) {
      rep.problem("junction of wrong dimension");
      return rep;
    }

  if (!is_zero_vec(cert.polygons.front().front()))
    rep.problem("first polygon does not start at the origin");
  if (!is_zero_vec(cert.polygons.back().back()))
    rep.problem("last polygon does not end at the origin");
  for (size_t i = 0; i < m; ++i) {
    const RatVec& q = cert.junctions[i];
    if (cert.polygons[i].back() != q)
      rep.problem("polygon " + std::to_string(i) + " does not end at junction " +
                  std::to_string(i + 1));
    if (cert.polygons[i + 1].front() != q)
      rep.problem("polygon " + std::to_string(i + 1) + " does not start at junction " +
                  std::to_string(i + 1));
    const auto& p = cert.family.planes[i];
    if (root_value(s, static_cast<size_t>(p.root_index), q) != Rational(p.level))
      rep.problem("junction " + std::to_string(i + 1) + " is not on its singular plane");
  }

  // Lattice-nonintersection: the only permitted lattice contacts are the
  // start of the first polygon and the end of the last one.
  for (size_t pi = 0; pi < cert.polygons.size(); ++pi) {
    const auto& chain = cert.polygons[pi];
    if (chain.size() == 1) {
      if (in_lattice(s, chain[0]) && !(pi == 0 || pi == m))
        rep.problem("polygon " + std::to_string(pi) + " sits on the lattice");
      continue;
    }
    for (size_t si = 0; si + 1 < chain.size(); ++si) {
      for (const Rational& t : segment_lattice_hits(s, chain[si], chain[si + 1])) {
        bool allowed_start = pi == 0 && si == 0 && t.is_zero();
        bool allowed_end = pi == m && si + 2 == chain.size() && t == Rational(1);
        if (!allowed_start && !allowed_end)
          rep.problem("polygon " + std::to_string(pi) + " segment " + std::to_string(si) +
                      " meets the lattice at t = " + t.str());
      }
    }
  }
  return rep;
}

inline bool verify_certificate(const SymmetricSpaceData& s, const PolygonCertificate& cert) {
  return verify_certificate_report(s, cert).valid;
}

/// Result of a seeded construction attempt. Infeasibility is a value, not
/// an error: rank-1 planes are single points and may be pinned to the
/// lattice.
struct ConstructOutcome {
  std::optional<PolygonCertificate> certificate;
  std::string infeasible_reason;

  bool ok() const { return certificate.has_value(); }
};

struct ConstructOptions {
  int retries = 64;
  int64_t denom_bound = 256;
};

inline ConstructOutcome construct_polygons(const SymmetricSpaceData& s, const PlaneFamily& family,
                                           uint64_t seed,
                                           const ConstructOptions& opts = {}) {
  size_t r = static_cast<size_t>(s.rank);
  size_t m = family.planes.size();
  ConstructOutcome out;

  if (m == 0) {
    PolygonCertificate cert;
    cert.family = family;
    cert.polygons = {{zero_vec(r)}};
    out.certificate = std::move(cert);
    return out;
  }

  // Base point and in-plane directions for each plane.
  std::vector<RatVec> base(m);
  std::vector<std::vector<RatVec>> kernel(m);
  for (size_t i = 0; i < m; ++i) {
    const auto& p = family.planes[i];
    if (p.root_index < 0 || static_cast<size_t>(p.root_index) >= s.positive_roots.size())
      fail(Errc::InvalidArgument, "plane references an invalid root");
    const RatVec& alpha = s.positive_roots[static_cast<size_t>(p.root_index)].functional;
    size_t pivot = 0;
    while (pivot < r && alpha[pivot].is_zero()) ++pivot;
    RatVec q0 = zero_vec(r);
    q0[pivot] = Rational(p.level) / alpha[pivot];
    base[i] = q0;
    for (size_t j = 0; j < r; ++j) {
      if (j == pivot) continue;
      RatVec v = zero_vec(r);
      v[j] = Rational(1);
      v[pivot] = -alpha[j] / alpha[pivot];
      kernel[i].push_back(std::move(v));
    }
    if (kernel[i].empty() && in_lattice(s, q0)) {
      out.infeasible_reason = "junction on plane " + std::to_string(i + 1) +
                              " is the single point " + vec_str(q0) +
                              ", which lies on the lattice";
      return out;
    }
  }

  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < opts.retries; ++attempt) {
    std::vector<RatVec> junctions(m);
    for (size_t i = 0; i < m; ++i) {
      RatVec q = base[i];
      for (const auto& dir : kernel[i]) q = add(q, scaled(dir, rng.offset(opts.denom_bound)));
      junctions[i] = std::move(q);
    }
    PolygonCertificate cert;
    cert.family = family;
    cert.junctions = junctions;
    cert.polygons.resize(m + 1);
    cert.polygons[0] = {zero_vec(r), junctions[0]};
    for (size_t i = 1; i < m; ++i) cert.polygons[i] = {junctions[i - 1], junctions[i]};
    cert.polygons[m] = {junctions[m - 1], zero_vec(r)};
    if (verify_certificate(s, cert)) {
      out.certificate = std::move(cert);
      return out;
    }
  }
  out.infeasible_reason = "no lattice-nonintersecting polygon family found in " +
                          std::to_string(opts.retries) + " attempts";
  return out;
}

enum class IntCert { One, Unknown };
enum class BasedCoproduct { Trivial, Unknown };

/// Verdict for the class of one plane family: a valid certificate on a
/// space of rank >= 2 pins the intersection multiplicity to 1 and makes
/// the based coproduct of the class trivial.
struct CoproductVerdict {
  IntCert int_multiplicity = IntCert::Unknown;
  BasedCoproduct based_coproduct = BasedCoproduct::Unknown;
  int64_t gamma_dim = 0;
  std::optional<PolygonCertificate> witness;
};

inline CoproductVerdict coproduct_verdict(const SymmetricSpaceData& s, const PlaneFamily& family,
                                          uint64_t seed,
                                          const ConstructOptions& opts = {}) {
  CoproductVerdict v;
  v.gamma_dim = gamma_dim(s, family);
  if (s.rank < 2) return v;
  ConstructOutcome outcome = construct_polygons(s, family, seed, opts);
  if (outcome.ok()) {
    v.int_multiplicity = IntCert::One;
    v.based_coproduct = BasedCoproduct::Trivial;
    v.witness = std::move(outcome.certificate);
  }
  return v;
}

/// Certificate file: `plane <root_index> <level>` per plane (in order),
/// `polygon <v0> <v1> ...` per chain, `junction <v>` per junction; vertices
/// as comma-separated rationals.
inline std::string save_certificate(const PolygonCertificate& cert) {
  std::ostringstream os;
  for (const auto& p : cert.family.planes)
    os << "plane " << p.root_index << ' ' << p.level << '\n';
  for (const auto& chain : cert.polygons) {
    os << "polygon";
    for (const auto& v : chain) os << ' ' << vec_str(v);
    os << '\n';
  }
  for (const auto& q : cert.junctions) os << "junction " << vec_str(q) << '\n';
  return os.str();
}

inline PolygonCertificate load_certificate(std::istream& in) {
  PolygonCertificate cert;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string tok;
    while (is >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    std::string ctx = "certificate line " + std::to_string(lineno);
    auto vec_of = [&](const std::string& t) {
      auto v = try_parse_vec(t);
      if (!v) fail(Errc::ParseError, ctx + ": bad vertex '" + t + "'");
      return *v;
    };
    if (toks[0] == "plane" && toks.size() == 3) {
      auto idx = Rational::try_parse(toks[1]);
      auto lvl = Rational::try_parse(toks[2]);
      if (!idx || !idx->is_integer() || !lvl || !lvl->is_integer())
        fail(Errc::ParseError, ctx + ": bad plane entry");
      cert.family.planes.push_back({static_cast<int>(idx->num()), lvl->num()});
    } else if (toks[0] == "polygon" && toks.size() >= 2) {
      std::vector<RatVec> chain;
      for (size_t i = 1; i < toks.size(); ++i) chain.push_back(vec_of(toks[i]));
      cert.polygons.push_back(std::move(chain));
    } else if (toks[0] == "junction" && toks.size() == 2) {
      cert.junctions.push_back(vec_of(toks[1]));
    } else {
      fail(Errc::ParseError, ctx + ": unknown or malformed entry");
    }
  }
  return cert;
}

inline PolygonCertificate load_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open certificate file '" + path + "'");
  return load_certificate(in);
}

}  // namespace symtop
