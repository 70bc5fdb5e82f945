#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bottcycles.hpp"
#include "csring.hpp"
#include "errors.hpp"
#include "geodesics.hpp"
#include "products.hpp"
#include "report.hpp"
#include "space.hpp"
#include "space_io.hpp"
#include "spectrum.hpp"
#include "svg.hpp"
#include "weyl.hpp"

namespace symtop::cli {

namespace detail {

struct SpaceArgs {
  std::string name;
  std::string file;
  std::string product;

  void attach(CLI::App* cmd) {
    auto* a = cmd->add_option("--space", name, "catalog space (sphere(n), cpn(n), gr2c4)");
    auto* b = cmd->add_option("--space-file", file, "space-definition file");
    auto* c = cmd->add_option("--product", product, "product of catalog spaces, e.g. sphere2,sphere3");
    a->excludes(b)->excludes(c);
    b->excludes(c);
  }

  SymmetricSpaceData resolve() const {
    if (!file.empty()) return load_space_file(file);
    if (!product.empty()) {
      std::string expr = product;
      for (char& ch : expr)
        if (ch == ',') ch = 'x';
      return resolve_space_name(expr);
    }
    if (!name.empty()) return resolve_space_name(name);
    fail(Errc::InvalidArgument, "no space given (use --space, --space-file or --product)");
  }
};

inline RatVec parse_vec_arg(const std::string& s, const std::string& flag) {
  auto v = try_parse_vec(s);
  if (!v) fail(Errc::ParseError, flag + ": bad vector '" + s + "'");
  return *v;
}

inline Rational parse_rat_arg(const std::string& s, const std::string& flag) {
  auto v = Rational::try_parse(s);
  if (!v) fail(Errc::ParseError, flag + ": bad rational '" + s + "'");
  return *v;
}

inline PlaneFamily parse_planes(const std::string& s) {
  PlaneFamily fam;
  if (s.empty()) return fam;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, ',')) {
    size_t colon = item.find(':');
    if (colon == std::string::npos)
      fail(Errc::ParseError, "--planes: expected root:level, got '" + item + "'");
    auto idx = Rational::try_parse(item.substr(0, colon));
    auto lvl = Rational::try_parse(item.substr(colon + 1));
    if (!idx || !idx->is_integer() || !lvl || !lvl->is_integer())
      fail(Errc::ParseError, "--planes: bad entry '" + item + "'");
    fam.planes.push_back({static_cast<int>(idx->num()), lvl->num()});
  }
  return fam;
}

inline IntersectionRing resolve_ring(const std::string& spec, const SymmetricSpaceData& space,
                                     const RatVec& primitive) {
  if (spec == "two-class") return two_class_ring(space.dim_n + mu(space, primitive));
  if (spec == "ut-s3") return unit_tangent_s3_ring();
  return load_ring_file(spec);
}

inline Z2Elt parse_sigma(const IntersectionRing& ring, const std::string& s) {
  Z2Elt elt;
  std::istringstream is(s);
  std::string label;
  while (std::getline(is, label, ',')) {
    int i = ring.find(label);
    if (i < 0) fail(Errc::InvalidArgument, "unknown ring basis label '" + label + "'");
    elt.push_back(i);
  }
  std::sort(elt.begin(), elt.end());
  elt.erase(std::unique(elt.begin(), elt.end()), elt.end());
  return elt;
}

inline void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(Errc::InvalidArgument, "cannot write to '" + path + "'");
  f << bytes;
}

}  // namespace detail

/// Runs one CLI invocation. Exit codes: 0 success, 1 domain error or failed
/// validation/verification, 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"closed-geodesic and loop-product calculator for compact symmetric spaces"};
  app.require_subcommand(1);
  int rc = 0;

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "check every space invariant");
  auto validate_space = std::make_shared<detail::SpaceArgs>();
  validate_space->attach(validate_cmd);
  auto strict = std::make_shared<bool>(false);
  validate_cmd->add_flag("--strict", *strict, "also require root-system closure under reflections");
  validate_cmd->callback([&, validate_space, strict] {
    SymmetricSpaceData s = validate_space->resolve();
    ValidationReport rep = validate(s, *strict);
    out << render_validation(rep);
    if (!rep.ok()) rc = 1;
  });

  // info
  auto* info_cmd = app.add_subcommand("info", "print space summary");
  auto info_space = std::make_shared<detail::SpaceArgs>();
  info_space->attach(info_cmd);
  info_cmd->callback([&, info_space] { out << render_space_info(info_space->resolve()); });

  // geodesic
  auto* geo_cmd = app.add_subcommand("geodesic", "conjugate points, index and nullity of a closed geodesic");
  auto geo_space = std::make_shared<detail::SpaceArgs>();
  geo_space->attach(geo_cmd);
  auto geo_h = std::make_shared<std::string>();
  geo_cmd->add_option("--H", *geo_h, "lattice direction, e.g. 2,1")->required();
  geo_cmd->callback([&, geo_space, geo_h] {
    SymmetricSpaceData s = geo_space->resolve();
    RatVec H = detail::parse_vec_arg(*geo_h, "--H");
    out << render_geodesic_report(s, geodesic_report(s, H));
  });

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "critical manifolds up to an energy bound");
  auto enum_space = std::make_shared<detail::SpaceArgs>();
  enum_space->attach(enum_cmd);
  auto enum_bound = std::make_shared<std::string>();
  auto enum_machine = std::make_shared<bool>(false);
  enum_cmd->add_option("--energy", *enum_bound, "energy bound (rational)")->required();
  enum_cmd->add_flag("--machine", *enum_machine, "line-delimited machine-readable records");
  enum_cmd->callback([&, enum_space, enum_bound, enum_machine] {
    SymmetricSpaceData s = enum_space->resolve();
    Rational bound = detail::parse_rat_arg(*enum_bound, "--energy");
    MorseLedger ledger = enumerate_critical(s, bound);
    out << render_ledger(s, ledger, bound, *enum_machine);
  });

  // cs-product
  auto* cs_cmd = app.add_subcommand("cs-product", "loop product of two ledger classes over one prime direction");
  auto cs_space = std::make_shared<detail::SpaceArgs>();
  cs_space->attach(cs_cmd);
  auto cs_ring = std::make_shared<std::string>();
  auto cs_prim = std::make_shared<std::string>();
  auto cs_k1 = std::make_shared<int64_t>(1);
  auto cs_k2 = std::make_shared<int64_t>(1);
  auto cs_a = std::make_shared<std::string>("fund");
  auto cs_b = std::make_shared<std::string>("fund");
  cs_cmd->add_option("--ring", *cs_ring, "ring file, or builtin: two-class, ut-s3")->required();
  cs_cmd->add_option("--primitive", *cs_prim, "prime lattice direction")->required();
  cs_cmd->add_option("--k1", *cs_k1, "iterate count of the first class");
  cs_cmd->add_option("--k2", *cs_k2, "iterate count of the second class");
  cs_cmd->add_option("--a", *cs_a, "sigma part of the first class (comma-separated labels)");
  cs_cmd->add_option("--b", *cs_b, "sigma part of the second class");
  cs_cmd->callback([&, cs_space, cs_ring, cs_prim, cs_k1, cs_k2, cs_a, cs_b] {
    SymmetricSpaceData s = cs_space->resolve();
    RatVec prim = detail::parse_vec_arg(*cs_prim, "--primitive");
    IntersectionRing ring = detail::resolve_ring(*cs_ring, s, prim);
    CompletingClass c1 = make_class(s, ring, prim, *cs_k1, detail::parse_sigma(ring, *cs_a));
    CompletingClass c2 = make_class(s, ring, prim, *cs_k2, detail::parse_sigma(ring, *cs_b));
    out << "c1 " << render_class(c1) << '\n';
    out << "c2 " << render_class(c2) << '\n';
    out << render_product_verdict(cs_product(c1, c2));
  });

  // power
  auto* pow_cmd = app.add_subcommand("power", "powers of the fundamental ledger class of a prime direction");
  auto pow_space = std::make_shared<detail::SpaceArgs>();
  pow_space->attach(pow_cmd);
  auto pow_ring = std::make_shared<std::string>();
  auto pow_prim = std::make_shared<std::string>();
  auto pow_kmax = std::make_shared<int64_t>(10);
  pow_cmd->add_option("--ring", *pow_ring, "ring file, or builtin: two-class, ut-s3")->required();
  pow_cmd->add_option("--primitive", *pow_prim, "prime lattice direction")->required();
  pow_cmd->add_option("--kmax", *pow_kmax, "largest power to report");
  pow_cmd->callback([&, pow_space, pow_ring, pow_prim, pow_kmax] {
    SymmetricSpaceData s = pow_space->resolve();
    RatVec prim = detail::parse_vec_arg(*pow_prim, "--primitive");
    IntersectionRing ring = detail::resolve_ring(*pow_ring, s, prim);
    CompletingClass c = make_class(s, ring, prim, 1, {ring.fundamental});
    out << render_power_report(c, power_report(c, *pow_kmax));
  });

  // bott
  auto* bott_cmd = app.add_subcommand("bott", "construct a lattice-nonintersecting polygon certificate");
  auto bott_space = std::make_shared<detail::SpaceArgs>();
  bott_space->attach(bott_cmd);
  auto bott_planes = std::make_shared<std::string>();
  auto bott_seed = std::make_shared<uint64_t>(0);
  auto bott_out = std::make_shared<std::string>();
  bott_cmd->add_option("--planes", *bott_planes, "ordered family, e.g. 1:1,2:1 (empty = basepoint class)");
  bott_cmd->add_option("--seed", *bott_seed, "seed for the junction sampler");
  bott_cmd->add_option("--out", *bott_out, "write the certificate to this file");
  bott_cmd->callback([&, bott_space, bott_planes, bott_seed, bott_out] {
    SymmetricSpaceData s = bott_space->resolve();
    PlaneFamily fam = detail::parse_planes(*bott_planes);
    CoproductVerdict v;
    v.gamma_dim = gamma_dim(s, fam);
    std::string reason;
    if (s.rank >= 2) {
      ConstructOutcome outcome = construct_polygons(s, fam, *bott_seed);
      if (outcome.ok()) {
        v.int_multiplicity = IntCert::One;
        v.based_coproduct = BasedCoproduct::Trivial;
        v.witness = std::move(outcome.certificate);
      } else {
        reason = outcome.infeasible_reason;
      }
    } else {
      reason = "rank < 2: the triviality criterion does not apply";
    }
    out << render_bott_verdict(s, fam, v);
    if (!reason.empty()) out << "infeasible " << reason << '\n';
    if (v.witness && !bott_out->empty()) {
      detail::write_file(*bott_out, save_certificate(*v.witness));
      out << "certificate written to " << *bott_out << '\n';
    }
  });

  // verify-cert
  auto* ver_cmd = app.add_subcommand("verify-cert", "independently verify a polygon certificate");
  auto ver_space = std::make_shared<detail::SpaceArgs>();
  ver_space->attach(ver_cmd);
  auto ver_path = std::make_shared<std::string>();
  ver_cmd->add_option("--cert", *ver_path, "certificate file")->required();
  ver_cmd->callback([&, ver_space, ver_path] {
    SymmetricSpaceData s = ver_space->resolve();
    PolygonCertificate cert = load_certificate_file(*ver_path);
    VerifyReport rep = verify_certificate_report(s, cert);
    if (rep.valid) {
      out << "certificate VALID\n";
    } else {
      out << "certificate INVALID\n";
      for (const auto& p : rep.problems) out << "  " << p << '\n';
      rc = 1;
    }
  });

  // product
  auto* prod_cmd = app.add_subcommand("product", "compose two spaces and check the factorization identities");
  auto prod_s1 = std::make_shared<std::string>();
  auto prod_s2 = std::make_shared<std::string>();
  auto prod_h1 = std::make_shared<std::string>();
  auto prod_h2 = std::make_shared<std::string>();
  prod_cmd->add_option("--s1", *prod_s1, "left factor (catalog name or file path)")->required();
  prod_cmd->add_option("--s2", *prod_s2, "right factor")->required();
  prod_cmd->add_option("--H1", *prod_h1, "lattice direction in the left factor");
  prod_cmd->add_option("--H2", *prod_h2, "lattice direction in the right factor");
  prod_cmd->callback([&, prod_s1, prod_s2, prod_h1, prod_h2] {
    auto resolve_one = [](const std::string& spec) {
      std::ifstream probe(spec);
      if (probe.good()) return load_space_file(spec);
      return resolve_space_name(spec);
    };
    SymmetricSpaceData s1 = resolve_one(*prod_s1);
    SymmetricSpaceData s2 = resolve_one(*prod_s2);
    ProductSpace ps = compose(s1, s2);
    out << render_space_info(ps.space);
    if (prod_h1->empty() != prod_h2->empty())
      fail(Errc::InvalidArgument, "--H1 and --H2 must be given together");
    if (!prod_h1->empty()) {
      RatVec H1 = detail::parse_vec_arg(*prod_h1, "--H1");
      RatVec H2 = detail::parse_vec_arg(*prod_h2, "--H2");
      FactorCheck chk = factor_check(s1, s2, H1, H2);
      out << render_factor_check(s1, s2, H1, H2, chk);
      if (!chk.ok()) rc = 1;
      if (!is_zero_vec(H1) && !is_zero_vec(H2))
        out << render_coproduct_vanishing(coproduct_vanishing_report(ps, H1, H2));
      else
        out << "coproduct verdict: NotApplicable (a factor is constant)\n";
    }
  });

  // plot
  auto* plot_cmd = app.add_subcommand("plot", "draw planes, lattice, chamber and one ray as SVG (rank 2)");
  auto plot_space = std::make_shared<detail::SpaceArgs>();
  plot_space->attach(plot_cmd);
  auto plot_h = std::make_shared<std::string>();
  auto plot_out = std::make_shared<std::string>();
  auto plot_box = std::make_shared<std::string>("-3,3,-3,3");
  auto plot_nochamber = std::make_shared<bool>(false);
  auto plot_radius = std::make_shared<std::string>("4");
  plot_cmd->add_option("--H", *plot_h, "ray direction")->required();
  plot_cmd->add_option("--out", *plot_out, "output SVG path")->required();
  plot_cmd->add_option("--box", *plot_box, "bounding box xmin,xmax,ymin,ymax");
  plot_cmd->add_flag("--no-chamber", *plot_nochamber, "skip chamber shading");
  plot_cmd->add_option("--dot-radius", *plot_radius, "lattice dot radius in px");
  plot_cmd->callback([&, plot_space, plot_h, plot_out, plot_box, plot_nochamber, plot_radius] {
    SymmetricSpaceData s = plot_space->resolve();
    PlotSpec spec;
    RatVec box = detail::parse_vec_arg(*plot_box, "--box");
    if (box.size() != 4) fail(Errc::ParseError, "--box needs 4 rationals");
    spec.xmin = box[0];
    spec.xmax = box[1];
    spec.ymin = box[2];
    spec.ymax = box[3];
    spec.H = detail::parse_vec_arg(*plot_h, "--H");
    spec.shade_chamber = !*plot_nochamber;
    spec.dot_radius = detail::parse_rat_arg(*plot_radius, "--dot-radius");
    spec.out_path = *plot_out;
    detail::write_file(spec.out_path, emit_svg(s, spec));
    out << "svg written to " << spec.out_path << '\n';
  });

  std::vector<const char*> argv;
  argv.push_back("symtop");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands()[0];
    out << sub->help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: Internal: " << e.what() << '\n';
    return 1;
  }
  return rc;
}

}  // namespace symtop::cli
