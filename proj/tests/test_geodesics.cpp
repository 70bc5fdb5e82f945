#include <catch2/catch_amalgamated.hpp>

#include <symtop/geodesics.hpp>
#include <symtop/rng.hpp>
#include <symtop/space.hpp>
#include <symtop/weyl.hpp>

using namespace symtop;

// Test-side oracle: for dominant H, each root with a = alpha(H) > 0 crosses
// its integer levels 1..a-1, so the index is sum m_alpha * (alpha(H) - 1).
// Kept independent of the crossing enumeration it checks.
static int64_t closed_form_index(const SymmetricSpaceData& s, const RatVec& H) {
  int64_t sum = 0;
  for (size_t i = 0; i < s.positive_roots.size(); ++i) {
    Rational a = root_value(s, i, H);
    if (a.is_zero()) continue;
    if (!a.is_integer()) throw std::logic_error("oracle expects a lattice point");
    int64_t v = a.num();
    sum += s.positive_roots[i].multiplicity * ((v < 0 ? -v : v) - 1);
  }
  return sum;
}

TEST_CASE("gr2c4 ray (2,1): five interior conjugate points") {
  SymmetricSpaceData g = catalog("gr2c4");
  RatVec H = {Rational(2), Rational(1)};
  auto times = crossing_times(g, H);
  REQUIRE(times.size() == 5);
  CHECK(times[0].t == Rational(1, 4));
  CHECK(times[1].t == Rational(1, 3));
  CHECK(times[2].t == Rational(1, 2));
  CHECK(times[3].t == Rational(2, 3));
  CHECK(times[4].t == Rational(3, 4));
  CHECK(times[0].multiplicity == 1);
  CHECK(times[1].multiplicity == 2);
  CHECK(times[2].multiplicity == 2);
  CHECK(times[3].multiplicity == 2);
  CHECK(times[4].multiplicity == 1);

  CHECK(morse_index(g, H) == 8);
  CHECK(mu(g, H) == 6);
  CHECK(nullity(g, H) == 14);
  CHECK(energy(g, H) == Rational(5, 2));

  GeodesicReport rep = geodesic_report(g, H);
  CHECK(rep.prime);
  CHECK(rep.iterate_k == 1);
  CHECK(rep.index == 8);
}

TEST_CASE("sphere crossing times") {
  SymmetricSpaceData s3 = catalog("sphere(3)");
  auto times = crossing_times(s3, {Rational(2)});
  REQUIRE(times.size() == 1);
  CHECK(times[0].t == Rational(1, 2));
  CHECK(times[0].multiplicity == 2);
  CHECK(morse_index(s3, {Rational(2)}) == 2);

  for (int64_t n = 2; n <= 6; ++n) {
    SymmetricSpaceData s = catalog("sphere(" + std::to_string(n) + ")");
    CHECK(morse_index(s, {Rational(2)}) == n - 1);
    CHECK(mu(s, {Rational(2)}) == n - 1);
    CHECK(nullity(s, {Rational(2)}) == 2 * n - 1);
  }
}

TEST_CASE("a lattice point with all root values in {0,1} has no crossings") {
  SymmetricSpaceData g = catalog("gr2c4");
  RatVec H = {Rational(1, 2), Rational(1, 2)};
  REQUIRE(in_lattice(g, H));
  for (size_t i = 0; i < g.positive_roots.size(); ++i) {
    Rational v = root_value(g, i, H);
    CHECK((v == Rational(0) || v == Rational(1)));
  }
  CHECK(crossing_times(g, H).empty());
  CHECK(morse_index(g, H) == 0);
}

TEST_CASE("error paths of the geodesic operations") {
  SymmetricSpaceData g = catalog("gr2c4");
  CHECK_THROWS_AS(crossing_times(g, zero_vec(2)), DomainError);
  CHECK_THROWS_AS(morse_index(g, zero_vec(2)), DomainError);
  CHECK_THROWS_AS(morse_index(g, {Rational(1, 3), Rational(0)}), DomainError);
  CHECK_THROWS_AS(mu(g, zero_vec(2)), DomainError);
  CHECK_THROWS_AS(nullity(g, {Rational(1, 3), Rational(0)}), DomainError);
  try {
    morse_index(g, {Rational(1, 3), Rational(0)});
    FAIL("expected NotClosed");
  } catch (const DomainError& e) {
    CHECK(e.code() == Errc::NotClosed);
  }
}

TEST_CASE("mu on walls and projective spaces") {
  SymmetricSpaceData g = catalog("gr2c4");
  CHECK(mu(g, {Rational(1), Rational(1)}) == 4);  // e1-e2 vanishes
  SymmetricSpaceData c2 = catalog("cpn(2)");
  CHECK(mu(c2, {Rational(1)}) == 3);
  CHECK(nullity(c2, {Rational(1)}) == 7);
  CHECK(morse_index(c2, {Rational(1)}) == 1);
}

TEST_CASE("iteration identities hold by independent enumeration") {
  SymmetricSpaceData s3 = catalog("sphere(3)");
  IterateCheck c3 = iterate_check(s3, {Rational(2)}, 3);
  CHECK(c3.index_iterate == 10);
  CHECK(c3.index_formula == 10);
  CHECK(c3.ok());

  SymmetricSpaceData g = catalog("gr2c4");
  IterateCheck c2 = iterate_check(g, {Rational(2), Rational(1)}, 2);
  CHECK(c2.index_iterate == 22);
  CHECK(c2.ok());

  IterateCheck c1 = iterate_check(g, {Rational(2), Rational(1)}, 1);
  CHECK(c1.index_iterate == c1.index_primitive);
  CHECK(c1.ok());

  CHECK_THROWS_AS(iterate_check(s3, {Rational(4)}, 2), DomainError);
  try {
    iterate_check(s3, {Rational(4)}, 2);
  } catch (const DomainError& e) {
    CHECK(e.code() == Errc::NotPrimitive);
  }
}

TEST_CASE("closed-form index oracle equals crossing enumeration") {
  SplitMix64 rng(77);
  for (const char* name : {"sphere(3)", "cpn(2)", "gr2c4"}) {
    SymmetricSpaceData s = catalog(name);
    int checked = 0;
    while (checked < 200) {
      RatVec k(static_cast<size_t>(s.rank));
      bool zero = true;
      for (auto& e : k) {
        int64_t v = rng.range(-12, 12);
        e = Rational(v);
        if (v != 0) zero = false;
      }
      if (zero) continue;
      RatVec H = matvec(basis_matrix(s), k);
      RatVec dom = canonicalize(s, H).dominant;
      CHECK(closed_form_index(s, dom) == morse_index(s, dom));
      ++checked;
    }
  }
}

TEST_CASE("crossing times are strictly increasing interior rationals") {
  SymmetricSpaceData g = catalog("gr2c4");
  SplitMix64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    RatVec H = {Rational(rng.range(-10, 10), rng.range(1, 3)),
                Rational(rng.range(-10, 10), rng.range(1, 3))};
    if (is_zero_vec(H)) continue;
    auto times = crossing_times(g, H);
    for (size_t i = 0; i < times.size(); ++i) {
      CHECK(times[i].t > Rational(0));
      CHECK(times[i].t < Rational(1));
      if (i) CHECK(times[i - 1].t < times[i].t);
      int64_t msum = 0;
      for (auto [ri, lvl] : times[i].contributing_roots)
        msum += g.positive_roots[static_cast<size_t>(ri)].multiplicity;
      CHECK(msum == times[i].multiplicity);
    }
  }
}

TEST_CASE("multiplicity at a lattice-point crossing equals mu") {
  SymmetricSpaceData g = catalog("gr2c4");
  SplitMix64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<int64_t> kv = {rng.range(-4, 4), rng.range(-4, 4)};
    if (kv[0] == 0 && kv[1] == 0) continue;
    RatVec prim = matvec(basis_matrix(g), {Rational(kv[0]), Rational(kv[1])});
    if (primitive_decomposition(g, prim).iterate_k != 1) continue;
    int64_t k = rng.range(2, 4);
    RatVec H = scaled(prim, Rational(k));
    int64_t mu_h = mu(g, H);
    auto times = crossing_times(g, H);
    // interior times j/k, j = 1..k-1, land on lattice points
    for (int64_t j = 1; j < k; ++j) {
      Rational t(j, k);
      bool found = false;
      for (const auto& ct : times)
        if (ct.t == t) {
          found = true;
          CHECK(ct.multiplicity == mu_h);
        }
      CHECK(found);
    }
  }
}

TEST_CASE("index and mu are Weyl invariant") {
  SymmetricSpaceData g = catalog("gr2c4");
  WeylGroup w = generate_group(g);
  for (const RatVec& H :
       {RatVec{Rational(2), Rational(1)}, RatVec{Rational(1), Rational(1)},
        RatVec{Rational(3), Rational(0)}}) {
    int64_t ind = morse_index(g, H);
    int64_t m = mu(g, H);
    for (const auto& e : w.elements) {
      RatVec wh = matvec(e, H);
      CHECK(morse_index(g, wh) == ind);
      CHECK(mu(g, wh) == m);
    }
  }
}

TEST_CASE("energy follows the half-norm convention") {
  SymmetricSpaceData g = catalog("gr2c4");
  CHECK(energy(g, {Rational(2), Rational(0)}) == Rational(2));
  CHECK(energy(g, {Rational(1), Rational(1)}) == Rational(1));
  SymmetricSpaceData s3 = catalog("sphere(3)");
  CHECK(energy(s3, {Rational(2)}) == Rational(2));
  CHECK(energy(s3, {Rational(6)}) == Rational(18));
}
