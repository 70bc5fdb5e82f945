#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include <symtop/products.hpp>
#include <symtop/rng.hpp>
#include <symtop/space.hpp>
#include <symtop/weyl.hpp>

using namespace symtop;

TEST_CASE("reflections on catalog spaces") {
  SymmetricSpaceData g = catalog("gr2c4");
  // root 0 is e1 - e2: swaps coordinates
  CHECK(reflect(g, 0, {Rational(2), Rational(1)}) == RatVec({Rational(1), Rational(2)}));
  // wall points are fixed
  CHECK(reflect(g, 0, {Rational(1), Rational(1)}) == RatVec({Rational(1), Rational(1)}));

  SymmetricSpaceData s3 = catalog("sphere(3)");
  CHECK(reflect(s3, 0, {Rational(2)}) == RatVec({Rational(-2)}));
}

TEST_CASE("reflections are involutions fixing their wall") {
  SymmetricSpaceData g = catalog("gr2c4");
  SplitMix64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    RatVec H = {Rational(rng.range(-9, 9), rng.range(1, 4)),
                Rational(rng.range(-9, 9), rng.range(1, 4))};
    for (size_t i = 0; i < g.positive_roots.size(); ++i) {
      RatVec r = reflect(g, i, H);
      CHECK(reflect(g, i, r) == H);
      CHECK(root_value(g, i, r) == -root_value(g, i, H));
    }
  }
}

TEST_CASE("simple roots by the not-a-sum criterion") {
  SymmetricSpaceData g = catalog("gr2c4");
  CHECK(simple_root_indices(g) == std::vector<int>({0, 3}));  // e1-e2 and 2e2
  SymmetricSpaceData s3 = catalog("sphere(3)");
  CHECK(simple_root_indices(s3) == std::vector<int>({0}));
  SymmetricSpaceData c2 = catalog("cpn(2)");
  CHECK(simple_root_indices(c2) == std::vector<int>({0}));  // 2a = a + a
}

TEST_CASE("group orders of catalog spaces") {
  CHECK(generate_group(catalog("sphere(3)")).order() == 2);
  CHECK(generate_group(catalog("cpn(2)")).order() == 2);
  CHECK(generate_group(catalog("gr2c4")).order() == 8);
  SymmetricSpaceData prod = compose(catalog("sphere(2)"), catalog("sphere(3)")).space;
  CHECK(generate_group(prod).order() == 4);
}

TEST_CASE("group elements map the lattice into itself") {
  for (const char* name : {"sphere(3)", "cpn(2)", "gr2c4"}) {
    SymmetricSpaceData s = catalog(name);
    WeylGroup w = generate_group(s);
    for (const auto& e : w.elements)
      for (const auto& b : s.lattice.basis) CHECK(in_lattice(s, matvec(e, b)));
  }
}

TEST_CASE("canonicalization lands in the closed chamber") {
  SymmetricSpaceData g = catalog("gr2c4");
  Canonicalized c = canonicalize(g, {Rational(-1), Rational(3)});
  CHECK(c.dominant == RatVec({Rational(3), Rational(1)}));

  Canonicalized fixed = canonicalize(g, {Rational(2), Rational(1)});
  CHECK(fixed.dominant == RatVec({Rational(2), Rational(1)}));
  CHECK(fixed.word.empty());

  SymmetricSpaceData s3 = catalog("sphere(3)");
  CHECK(canonicalize(s3, {Rational(-4)}).dominant == RatVec({Rational(4)}));
}

TEST_CASE("canonicalization word reproduces the dominant representative") {
  SymmetricSpaceData g = catalog("gr2c4");
  SplitMix64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    RatVec H = {Rational(rng.range(-12, 12), rng.range(1, 5)),
                Rational(rng.range(-12, 12), rng.range(1, 5))};
    Canonicalized c = canonicalize(g, H);
    RatVec replay = H;
    for (int i : c.word) replay = reflect(g, static_cast<size_t>(i), replay);
    CHECK(replay == c.dominant);
    CHECK(is_dominant(g, c.dominant));
    // idempotence
    CHECK(canonicalize(g, c.dominant).dominant == c.dominant);
  }
}

TEST_CASE("the dominant representative is the unique one in the orbit") {
  SymmetricSpaceData g = catalog("gr2c4");
  WeylGroup w = generate_group(g);
  SplitMix64 rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    RatVec H = {Rational(rng.range(-10, 10), rng.range(1, 3)),
                Rational(rng.range(-10, 10), rng.range(1, 3))};
    Canonicalized c = canonicalize(g, H);
    std::vector<RatVec> orb = orbit(w, H);
    // orbit-stabilizer: orbit size divides the group order
    CHECK(w.order() % orb.size() == 0);
    int dominant_count = 0;
    for (const auto& p : orb) {
      CHECK(canonicalize(g, p).dominant == c.dominant);
      if (is_dominant(g, p)) ++dominant_count;
    }
    CHECK(dominant_count == 1);
    CHECK(std::find(orb.begin(), orb.end(), c.dominant) != orb.end());
  }
}

TEST_CASE("chamber position reports walls") {
  SymmetricSpaceData g = catalog("gr2c4");
  ChamberPosition cp = chamber_position(g, {Rational(1), Rational(1)});
  CHECK(cp.dominant);
  CHECK(cp.stabilizing_walls == std::vector<int>({0}));  // e1 - e2 vanishes
  ChamberPosition interior = chamber_position(g, {Rational(2), Rational(1)});
  CHECK(interior.dominant);
  CHECK(interior.stabilizing_walls.empty());
  ChamberPosition outside = chamber_position(g, {Rational(-1), Rational(2)});
  CHECK(!outside.dominant);
}

TEST_CASE("group generation caps on malformed data") {
  // A "root" pair with an irrational-angle-like rational approximation does
  // not close into a finite group; the cap must fire rather than loop.
  SymmetricSpaceData s;
  s.name = "bad";
  s.rank = 2;
  s.gram = RatMat::identity(2);
  s.positive_roots = {{{Rational(1), Rational(0)}, 1}, {{Rational(3), Rational(1)}, 1}};
  s.lattice.basis = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  s.dim_n = 4;
  CHECK_THROWS_AS(generate_group(s, 500), DomainError);
}
