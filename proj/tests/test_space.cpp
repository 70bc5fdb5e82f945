#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include <symtop/space.hpp>
#include <symtop/space_io.hpp>

using namespace symtop;

TEST_CASE("catalog sphere entries") {
  SymmetricSpaceData s3 = catalog("sphere(3)");
  CHECK(s3.rank == 1);
  CHECK(s3.dim_n == 3);
  REQUIRE(s3.positive_roots.size() == 1);
  CHECK(s3.positive_roots[0].multiplicity == 2);
  CHECK(s3.lattice.basis == std::vector<RatVec>{{Rational(2)}});
  CHECK(validate(s3).ok());
  CHECK(validate(s3, true).ok());

  CHECK(catalog("sphere3") == s3);
  CHECK_THROWS_AS(catalog("sphere(1)"), DomainError);
}

TEST_CASE("catalog projective spaces") {
  SymmetricSpaceData c2 = catalog("cpn(2)");
  CHECK(c2.dim_n == 4);
  REQUIRE(c2.positive_roots.size() == 2);
  CHECK(c2.positive_roots[0].multiplicity == 2);
  CHECK(c2.positive_roots[1].multiplicity == 1);
  CHECK(validate(c2, true).ok());

  SymmetricSpaceData c1 = catalog("cpn(1)");
  CHECK(c1.dim_n == 2);
  REQUIRE(c1.positive_roots.size() == 1);
  CHECK(validate(c1, true).ok());
}

TEST_CASE("catalog rank-2 grassmannian") {
  SymmetricSpaceData g = catalog("gr2c4");
  CHECK(g.rank == 2);
  CHECK(g.dim_n == 8);
  CHECK(g.positive_roots.size() == 4);
  int64_t msum = 0;
  for (const auto& rt : g.positive_roots) msum += rt.multiplicity;
  CHECK(msum == 6);
  CHECK(validate(g).ok());
  CHECK(validate(g, true).ok());
}

TEST_CASE("every catalog entry passes validation and the dimension identity") {
  std::vector<std::string> names = {"sphere(2)", "sphere(3)", "sphere(4)", "sphere(5)",
                                    "sphere(6)", "cpn(1)",    "cpn(2)",    "cpn(3)",
                                    "gr2c4"};
  for (const auto& name : names) {
    SymmetricSpaceData s = catalog(name);
    INFO(name);
    CHECK(validate(s, true).ok());
    int64_t msum = 0;
    for (const auto& rt : s.positive_roots) msum += rt.multiplicity;
    CHECK(s.dim_n - s.rank == msum);
    for (size_t i = 0; i < s.positive_roots.size(); ++i)
      for (const auto& b : s.lattice.basis) CHECK(root_value(s, i, b).is_integer());
  }
}

TEST_CASE("validation flags a forced dimension inconsistency") {
  SymmetricSpaceData s = catalog("sphere(3)");  // rank + sum m = 3
  s.dim_n = 5;
  ValidationReport rep = validate(s);
  CHECK(!rep.ok());
  bool found = false;
  for (const auto& c : rep.checks)
    if (c.name == "dimension_consistent") {
      found = true;
      CHECK(!c.pass);
    }
  CHECK(found);
}

TEST_CASE("validation flags a lattice that roots do not see integrally") {
  SymmetricSpaceData s = catalog("sphere(3)");
  s.lattice.basis = {{Rational(1, 3)}};
  ValidationReport rep = validate(s);
  CHECK(!rep.ok());
}

TEST_CASE("strict validation flags a root set not closed under reflections") {
  SymmetricSpaceData s = catalog("gr2c4");
  s.positive_roots.push_back({{Rational(1), Rational(-3)}, 1});
  s.dim_n += 1;
  CHECK(validate(s).ok());          // non-strict checks still pass
  CHECK(!validate(s, true).ok());   // closure fails
}

TEST_CASE("lattice coordinates and primitive decomposition") {
  SymmetricSpaceData g = catalog("gr2c4");
  RatVec H = {Rational(2), Rational(1)};
  CHECK(lattice_coords(g, H) == RatVec({Rational(1), Rational(2)}));
  CHECK(in_lattice(g, H));
  PrimitiveDecomposition pd = primitive_decomposition(g, H);
  CHECK(pd.iterate_k == 1);
  CHECK(pd.primitive == H);

  RatVec H2 = {Rational(4), Rational(2)};
  PrimitiveDecomposition pd2 = primitive_decomposition(g, H2);
  CHECK(pd2.iterate_k == 2);
  CHECK(pd2.primitive == H);

  CHECK(!in_lattice(g, {Rational(1, 3), Rational(0)}));
  CHECK_THROWS_AS(primitive_decomposition(g, {Rational(1, 3), Rational(0)}), DomainError);
  CHECK_THROWS_AS(primitive_decomposition(g, zero_vec(2)), DomainError);

  SymmetricSpaceData s3 = catalog("sphere(3)");
  PrimitiveDecomposition pd3 = primitive_decomposition(s3, {Rational(4)});
  CHECK(pd3.iterate_k == 2);
  CHECK(pd3.primitive == RatVec({Rational(2)}));
}

static const char* kGr2c4File = R"(# rank-2 complex grassmannian
name gr2c4
rank 2
gram 1 0 0 1
root 1,-1 2
root 1,1 2
root 2,0 1
root 0,2 1
lattice_basis 1,0
lattice_basis 1/2,1/2
dim_n 8
z2_orientable_cycles true
)";

TEST_CASE("space file loads and matches the catalog entry") {
  std::istringstream in(kGr2c4File);
  SymmetricSpaceData s = load_space(in);
  CHECK(s == catalog("gr2c4"));
}

TEST_CASE("space file parser rejects malformed input") {
  auto loads = [](const std::string& text) {
    std::istringstream in(text);
    return load_space(in);
  };
  CHECK_THROWS_AS(loads("name x\nrank 1\ngram 1\nshape round\n"), DomainError);  // unknown key
  CHECK_THROWS_AS(loads("rank 1\ngram 1\n"), DomainError);                       // missing name
  CHECK_THROWS_AS(loads("name x\ngram 1\n"), DomainError);                       // missing rank
  CHECK_THROWS_AS(loads("name x\nrank 2\ngram 1 0 1\n"), DomainError);           // bad gram size
  CHECK_THROWS_AS(loads("name x\nrank 1\ngram 1\nroot 1\n"), DomainError);       // root arity
  CHECK_THROWS_AS(loads("name x\nrank 1\ngram q\n"), DomainError);               // bad rational
}

TEST_CASE("space file dim_n defaults to rank plus multiplicity sum") {
  std::istringstream in("name t\nrank 1\ngram 1\nroot 1 2\nlattice_basis 2\n");
  SymmetricSpaceData s = load_space(in);
  CHECK(s.dim_n == 3);
  CHECK(validate(s).ok());
}
