#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "geodesics.hpp"
#include "space.hpp"
#include "weyl.hpp"

namespace symtop {

/// Figure description for a rank-2 space: singular planes, lattice dots,
/// shaded closed positive chamber and one geodesic ray with its conjugate
/// points marked.
struct PlotSpec {
  Rational xmin = Rational(-3), xmax = Rational(3);
  Rational ymin = Rational(-3), ymax = Rational(3);
  std::map<int, std::string> plane_style;  // root index -> stroke-dasharray ("" = solid)
  Rational dot_radius = Rational(4);       // pixels
  bool shade_chamber = true;
  RatVec H;
  std::string out_path;
};

namespace detail {

/// Exact fixed-point rendering with 6 decimals; rounds half away from zero.
/// All geometry stays rational until this final formatting step, so output
/// bytes are stable across platforms.
inline std::string fmt6(const Rational& r) {
  i128 scaled = i128(r.num()) * 1000000;
  i128 q = r.den();
  i128 v = scaled / q;
  i128 rem = scaled % q;
  if (rem < 0) rem = -rem;
  if (2 * rem >= q) v += (scaled < 0 ? -1 : 1);
  bool negative = v < 0;
  if (negative) v = -v;
  i128 ip = v / 1000000;
  i128 fp = v % 1000000;
  std::string frac = std::to_string(static_cast<long long>(fp));
  frac.insert(frac.begin(), 6 - frac.size(), '0');
  std::string out = std::to_string(static_cast<long long>(ip)) + "." + frac;
  if (negative && v != 0) out = "-" + out;
  return out;
}

struct Mapper {
  Rational xmin, ymax, scale;
  std::string x(const Rational& wx) const { return fmt6((wx - xmin) * scale); }
  std::string y(const Rational& wy) const { return fmt6((ymax - wy) * scale); }
};

inline const char* kDashCycle[] = {"", "8,4", "2,4", "8,4,2,4", "1,3", "12,4"};

}  // namespace detail

/// Renders the figure as SVG 1.1. Only rank-2 spaces can be drawn.
inline std::string emit_svg(const SymmetricSpaceData& s, const PlotSpec& spec) {
  if (s.rank != 2) fail(Errc::Unsupported, "plotting is 2-D only (rank 2 required)");
  if (!(spec.xmin < spec.xmax) || !(spec.ymin < spec.ymax))
    fail(Errc::InvalidArgument, "empty bounding box");
  if (spec.H.size() != 2) fail(Errc::InvalidArgument, "H must have 2 coordinates");
  if (is_zero_vec(spec.H)) fail(Errc::ZeroDirection, "ray direction must be nonzero");
  if (spec.H[0] < spec.xmin || spec.H[0] > spec.xmax || spec.H[1] < spec.ymin ||
      spec.H[1] > spec.ymax)
    fail(Errc::InvalidArgument, "H lies outside the bounding box");

  const Rational scale(100);
  detail::Mapper mp{spec.xmin, spec.ymax, scale};
  Rational wpx = (spec.xmax - spec.xmin) * scale;
  Rational hpx = (spec.ymax - spec.ymin) * scale;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << detail::fmt6(wpx) << "\" height=\"" << detail::fmt6(hpx) << "\" viewBox=\"0 0 "
     << detail::fmt6(wpx) << " " << detail::fmt6(hpx) << "\">\n";
  os << "<rect class=\"bg\" x=\"0\" y=\"0\" width=\"" << detail::fmt6(wpx) << "\" height=\""
     << detail::fmt6(hpx) << "\" fill=\"#ffffff\"/>\n";

  std::vector<RatVec> box = {{spec.xmin, spec.ymin},
                             {spec.xmax, spec.ymin},
                             {spec.xmax, spec.ymax},
                             {spec.xmin, spec.ymax}};

  // Closed positive chamber clipped to the box (Sutherland-Hodgman).
  if (spec.shade_chamber) {
    std::vector<RatVec> poly = box;
    for (int si : simple_root_indices(s)) {
      const RatVec& alpha = s.positive_roots[static_cast<size_t>(si)].functional;
      std::vector<RatVec> next;
      for (size_t i = 0; i < poly.size(); ++i) {
        const RatVec& P = poly[i];
        const RatVec& Q = poly[(i + 1) % poly.size()];
        Rational vp = dot(alpha, P), vq = dot(alpha, Q);
        bool inP = vp.sign() >= 0, inQ = vq.sign() >= 0;
        if (inP) next.push_back(P);
        if (inP != inQ) {
          Rational t = vp / (vp - vq);
          next.push_back(add(P, scaled(sub(Q, P), t)));
        }
      }
      poly = std::move(next);
      if (poly.empty()) break;
    }
    if (poly.size() >= 3) {
      os << "<polygon class=\"chamber\" points=\"";
      for (size_t i = 0; i < poly.size(); ++i) {
        if (i) os << ' ';
        os << mp.x(poly[i][0]) << ',' << mp.y(poly[i][1]);
      }
      os << "\" fill=\"#e8e8f2\" stroke=\"none\"/>\n";
    }
  }

  // Singular planes (alpha, n) meeting the box, every integer level
  // including the walls n = 0.
  for (size_t ri = 0; ri < s.positive_roots.size(); ++ri) {
    const RatVec& alpha = s.positive_roots[ri].functional;
    Rational lo = dot(alpha, box[0]), hi = lo;
    for (const auto& corner : box) {
      Rational v = dot(alpha, corner);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    std::string dash;
    auto it = spec.plane_style.find(static_cast<int>(ri));
    if (it != spec.plane_style.end())
      dash = it->second;
    else
      dash = detail::kDashCycle[ri % 6];
    for (int64_t n = lo.ceil(); n <= hi.floor(); ++n) {
      // Intersect alpha(H) = n with the four box edges.
      std::vector<RatVec> pts;
      for (size_t i = 0; i < 4; ++i) {
        const RatVec& P = box[i];
        const RatVec& Q = box[(i + 1) % 4];
        Rational vp = dot(alpha, P) - Rational(n);
        Rational vq = dot(alpha, Q) - Rational(n);
        if (vp.is_zero()) pts.push_back(P);
        if (vp.sign() * vq.sign() < 0) {
          Rational t = vp / (vp - vq);
          pts.push_back(add(P, scaled(sub(Q, P), t)));
        }
      }
      std::sort(pts.begin(), pts.end(), vec_less);
      pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
      if (pts.size() < 2) continue;
      const RatVec& A = pts.front();
      const RatVec& B = pts.back();
      os << "<line class=\"plane r" << ri << "\" x1=\"" << mp.x(A[0]) << "\" y1=\""
         << mp.y(A[1]) << "\" x2=\"" << mp.x(B[0]) << "\" y2=\"" << mp.y(B[1])
         << "\" stroke=\"#606060\" stroke-width=\"1\"";
      if (!dash.empty()) os << " stroke-dasharray=\"" << dash << "\"";
      os << "/>\n";
    }
  }

  // Lattice points inside the box.
  {
    RatMat Binv = inverse(basis_matrix(s));
    std::vector<RatVec> kcorners;
    for (const auto& corner : box) kcorners.push_back(matvec(Binv, corner));
    int64_t k0lo = kcorners[0][0].floor(), k0hi = k0lo;
    int64_t k1lo = kcorners[0][1].floor(), k1hi = k1lo;
    for (const auto& kc : kcorners) {
      k0lo = std::min(k0lo, kc[0].floor());
      k0hi = std::max(k0hi, kc[0].ceil());
      k1lo = std::min(k1lo, kc[1].floor());
      k1hi = std::max(k1hi, kc[1].ceil());
    }
    RatMat B = basis_matrix(s);
    std::vector<RatVec> dots;
    for (int64_t k0 = k0lo; k0 <= k0hi; ++k0)
      for (int64_t k1 = k1lo; k1 <= k1hi; ++k1) {
        RatVec H = matvec(B, {Rational(k0), Rational(k1)});
        if (H[0] < spec.xmin || H[0] > spec.xmax || H[1] < spec.ymin || H[1] > spec.ymax)
          continue;
        dots.push_back(H);
      }
    std::sort(dots.begin(), dots.end(), vec_less);
    for (const auto& d : dots)
      os << "<circle class=\"lattice\" cx=\"" << mp.x(d[0]) << "\" cy=\"" << mp.y(d[1])
         << "\" r=\"" << detail::fmt6(spec.dot_radius) << "\" fill=\"#202020\"/>\n";
  }

  // The ray 0 -> H and its interior conjugate points.
  RatVec origin = zero_vec(2);
  os << "<line class=\"ray\" x1=\"" << mp.x(origin[0]) << "\" y1=\"" << mp.y(origin[1])
     << "\" x2=\"" << mp.x(spec.H[0]) << "\" y2=\"" << mp.y(spec.H[1])
     << "\" stroke=\"#c02020\" stroke-width=\"2\"/>\n";
  for (const auto& ct : crossing_times(s, spec.H)) {
    RatVec p = scaled(spec.H, ct.t);
    os << "<circle class=\"conjugate\" cx=\"" << mp.x(p[0]) << "\" cy=\"" << mp.y(p[1])
       << "\" r=\"" << detail::fmt6(spec.dot_radius * Rational(3, 2))
       << "\" fill=\"none\" stroke=\"#c02020\" stroke-width=\"2\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace symtop
