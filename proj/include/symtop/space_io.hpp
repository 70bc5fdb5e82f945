#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "space.hpp"

namespace symtop {

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

inline Rational need_rational(const std::string& tok, const std::string& ctx) {
  auto r = Rational::try_parse(tok);
  if (!r) fail(Errc::ParseError, ctx + ": bad rational '" + tok + "'");
  return *r;
}

inline RatVec need_vec(const std::string& tok, const std::string& ctx) {
  auto v = try_parse_vec(tok);
  if (!v) fail(Errc::ParseError, ctx + ": bad vector '" + tok + "'");
  return *v;
}

inline int64_t need_int(const std::string& tok, const std::string& ctx) {
  Rational r = need_rational(tok, ctx);
  if (!r.is_integer()) fail(Errc::ParseError, ctx + ": expected integer, got '" + tok + "'");
  return r.num();
}

}  // namespace detail

/// Space-definition file. One "key value..." entry per line, '#' starts a
/// comment. Keys: name, rank, gram (rank*rank rationals, row-major),
/// root (coords multiplicity), lattice_basis (coords), dim_n,
/// z2_orientable_cycles. Unknown keys are rejected.
inline SymmetricSpaceData load_space(std::istream& in) {
  SymmetricSpaceData s;
  std::vector<Rational> gram_entries;
  bool have_name = false, have_rank = false, have_gram = false, have_dim = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto toks = detail::split_ws(line);
    if (toks.empty()) continue;
    std::string ctx = "space file line " + std::to_string(lineno);
    const std::string& key = toks[0];
    if (key == "name") {
      if (toks.size() != 2) fail(Errc::ParseError, ctx + ": name takes one token");
      s.name = toks[1];
      have_name = true;
    } else if (key == "rank") {
      if (toks.size() != 2) fail(Errc::ParseError, ctx + ": rank takes one integer");
      s.rank = detail::need_int(toks[1], ctx);
      have_rank = true;
    } else if (key == "gram") {
      for (size_t i = 1; i < toks.size(); ++i)
        gram_entries.push_back(detail::need_rational(toks[i], ctx));
      have_gram = true;
    } else if (key == "root") {
      if (toks.size() != 3) fail(Errc::ParseError, ctx + ": root takes coords and multiplicity");
      RootDatum rd;
      rd.functional = detail::need_vec(toks[1], ctx);
      rd.multiplicity = detail::need_int(toks[2], ctx);
      s.positive_roots.push_back(std::move(rd));
    } else if (key == "lattice_basis") {
      if (toks.size() != 2) fail(Errc::ParseError, ctx + ": lattice_basis takes coords");
      s.lattice.basis.push_back(detail::need_vec(toks[1], ctx));
    } else if (key == "dim_n") {
      if (toks.size() != 2) fail(Errc::ParseError, ctx + ": dim_n takes one integer");
      s.dim_n = detail::need_int(toks[1], ctx);
      have_dim = true;
    } else if (key == "z2_orientable_cycles") {
      if (toks.size() != 2 || (toks[1] != "true" && toks[1] != "false"))
        fail(Errc::ParseError, ctx + ": z2_orientable_cycles takes true or false");
      s.z2_orientable_cycles = toks[1] == "true";
    } else {
      fail(Errc::ParseError, ctx + ": unknown key '" + key + "'");
    }
  }
  if (!have_name) fail(Errc::ParseError, "space file: missing name");
  if (!have_rank) fail(Errc::ParseError, "space file: missing rank");
  if (!have_gram) fail(Errc::ParseError, "space file: missing gram");
  size_t r = static_cast<size_t>(s.rank);
  if (s.rank < 1) fail(Errc::ParseError, "space file: rank must be positive");
  if (gram_entries.size() != r * r)
    fail(Errc::ParseError, "space file: gram needs rank*rank entries, got " +
                               std::to_string(gram_entries.size()));
  s.gram = RatMat(r, r);
  s.gram.a = std::move(gram_entries);
  if (!have_dim) {
    int64_t msum = 0;
    for (const auto& rt : s.positive_roots) msum += rt.multiplicity;
    s.dim_n = s.rank + msum;
  }
  return s;
}

inline SymmetricSpaceData load_space_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open space file '" + path + "'");
  return load_space(in);
}

}  // namespace symtop
