#include <doctest.h>

#include "nilalg/catalog.hpp"
#include "test_support.hpp"

using namespace nilalg;
using nilalg::testing::make_algebra;
using nilalg::testing::random_anticommutative;
using nilalg::testing::random_invertible;

namespace {
const FieldSpec Q = FieldSpec::rational();
}

TEST_CASE("bracket on basis and vectors") {
  Algebra l32 = build_entry("L_3_2", Q);  // [e1,e2] = e3
  CHECK(l32.bracket_basis(0, 1) == unit_vec(Q, 3, 2));
  CHECK(l32.bracket_basis(1, 0) == scale(Scalar::integer(Q, -1), unit_vec(Q, 3, 2)));

  Algebra b63 = build_entry("B_6_3", Q);
  CHECK(b63.bracket_basis(3, 4) == unit_vec(Q, 6, 5));  // [e4,e5] = e6

  Rng rng(kDefaultSeed ^ 0xb0);
  for (int k = 0; k < 100; ++k) {
    Vec x = rng.vector(Q, 6), y = rng.vector(Q, 6);
    CHECK(is_zero_vec(b63.bracket(x, x)));
    CHECK(b63.bracket(x, y) == scale(Scalar::integer(Q, -1), b63.bracket(y, x)));
  }
}

TEST_CASE("jacobian examples and alternation") {
  Algebra m51 = build_entry("M_5_1", Q);
  // J(e1,e2,e4) = [[e1,e2],e4] = [e3,e4] = e5; the other two terms vanish.
  Vec j = jacobian(m51, unit_vec(Q, 5, 0), unit_vec(Q, 5, 1), unit_vec(Q, 5, 3));
  CHECK(j == unit_vec(Q, 5, 4));

  Algebra l43 = build_entry("L_4_3", Q);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k)
      for (std::size_t l = 0; l < 4; ++l)
        CHECK(is_zero_vec(jacobian(l43, unit_vec(Q, 4, i), unit_vec(Q, 4, k), unit_vec(Q, 4, l))));

  Algebra abelian = build_entry("L_4_1", Q);
  CHECK(is_zero_vec(jacobian(abelian, unit_vec(Q, 4, 0), unit_vec(Q, 4, 1), unit_vec(Q, 4, 2))));

  for (FieldSpec f : {Q, FieldSpec::prime(5)}) {
    Rng rng(kDefaultSeed ^ 0x1ac);
    for (int k = 0; k < 250; ++k) {
      Algebra a = random_anticommutative(rng, f, 4);
      Vec x = rng.vector(f, 4), y = rng.vector(f, 4), z = rng.vector(f, 4);
      Vec jxyz = jacobian(a, x, y, z);
      CHECK(jxyz == scale(Scalar::integer(f, -1), jacobian(a, y, x, z)));
      CHECK(jxyz == scale(Scalar::integer(f, -1), jacobian(a, x, z, y)));
    }
  }
}

TEST_CASE("identity checks against the classification") {
  CHECK(check_identity(build_entry("g_6", Q), IdentityKind::Lie).holds);
  CHECK_FALSE(check_identity(build_entry("B_6_3", Q), IdentityKind::Malcev).holds);
  CHECK(check_identity(build_entry("B_6_1", {{"alpha", Scalar::one(Q)}}, Q), IdentityKind::CD)
            .holds);
  CHECK_FALSE(check_identity(build_entry("B_6_2", Q), IdentityKind::CD).holds);
  CHECK(check_identity(build_entry("L_5_8", Q), IdentityKind::CD).holds);

  IdentityResult bad = check_identity(build_entry("B_6_2", Q), IdentityKind::Malcev);
  CHECK_FALSE(bad.holds);
  CHECK(bad.witness.size() == 4);
}

TEST_CASE("implication chain Lie => Malcev => BinaryLie on random tensors") {
  Rng rng(kDefaultSeed ^ 0xc4a);
  FieldSpec F3 = FieldSpec::prime(3);
  int lie_seen = 0, malcev_seen = 0;
  for (int k = 0; k < 1000; ++k) {
    Algebra a = random_anticommutative(rng, F3, 3);
    if (check_identity(a, IdentityKind::Lie).holds) {
      ++lie_seen;
      CHECK(check_identity(a, IdentityKind::Malcev).holds);
    }
    if (check_identity(a, IdentityKind::Malcev).holds) {
      ++malcev_seen;
      CHECK(check_identity(a, IdentityKind::BinaryLie).holds);
    }
  }
  CHECK(lie_seen > 0);
  CHECK(malcev_seen >= lie_seen);
}

TEST_CASE("power filtration") {
  PowerFiltration ab = power_filtration(build_entry("L_4_1", Q));
  CHECK(ab.nilpotent);
  CHECK(ab.nilindex == 2);
  CHECK(ab.dims() == std::vector<std::size_t>{4, 0});

  PowerFiltration b62 = power_filtration(build_entry("B_6_2", Q));
  CHECK(b62.dims() == std::vector<std::size_t>{6, 3, 2, 1, 0});
  CHECK(b62.nilpotent);
  CHECK(b62.nilindex == 5);
  // A^2 = <e3,e5,e6>, A^3 = <e5,e6> exactly
  CHECK(b62.terms[1] ==
        Subspace::span(Q, 6, {unit_vec(Q, 6, 2), unit_vec(Q, 6, 4), unit_vec(Q, 6, 5)}));
  CHECK(b62.terms[2] == Subspace::span(Q, 6, {unit_vec(Q, 6, 4), unit_vec(Q, 6, 5)}));

  // B_6_1 plateaus at A^3 = A^4 = <e6> before reaching zero.
  PowerFiltration b61 = power_filtration(build_entry("B_6_1", {{"alpha", Scalar::one(Q)}}, Q));
  CHECK(b61.dims() == std::vector<std::size_t>{6, 3, 1, 1, 0});
  CHECK(b61.nilpotent);

  PowerFiltration g6 = power_filtration(build_entry("g_6", Q));
  CHECK(g6.nilpotent);
  CHECK(g6.terms[4].dim() > 0);  // A^5 != 0
  CHECK(g6.nilindex == 6);

  // Non-nilpotent input: sl2-like [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2.
  Algebra sl2ish = make_algebra(Q, 3, {{1, 2, 3, 1}, {2, 3, 1, 1}, {1, 3, 2, -1}});
  CHECK_FALSE(power_filtration(sl2ish).nilpotent);
}

TEST_CASE("annihilator") {
  CHECK(annihilator(build_entry("L_4_3", Q)) == Subspace::span(Q, 4, {unit_vec(Q, 4, 3)}));
  CHECK(annihilator(build_entry("M_5_1", Q)) == Subspace::span(Q, 5, {unit_vec(Q, 5, 4)}));
  CHECK(annihilator(build_entry("L_5_1", Q)) == Subspace::full(Q, 5));
}

TEST_CASE("derivations") {
  CHECK(derivations(build_entry("B_6_3", Q)).dim == 8);
  CHECK(derivations(build_entry("g_6", Q)).dim == 8);
  CHECK(derivations(build_entry("L_4_1", Q)).dim == 16);  // every map, dim n^2

  // Every returned basis map satisfies the Leibniz condition exactly.
  for (const char* name : {"L_5_6", "M_5_1", "B_6_2"}) {
    Algebra a = build_entry(name, Q);
    DerivationSpace ds = derivations(a);
    for (const LinearMap& d : ds.basis)
      for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j) {
          Vec lhs = d.apply(a.bracket_basis(i, j));
          Vec rhs = add(a.bracket(d.apply(unit_vec(Q, a.dim(), i)), unit_vec(Q, a.dim(), j)),
                        a.bracket(unit_vec(Q, a.dim(), i), d.apply(unit_vec(Q, a.dim(), j))));
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("transport and is_isomorphism") {
  Algebra b611 = build_entry("B_6_1", {{"alpha", Scalar::one(Q)}}, Q);
  CHECK(transport(b611, LinearMap{Matrix::identity(Q, 6)}) == b611);

  // diag(lambda,1,1,lambda,lambda,lambda^2) sends B_6_1^alpha to the
  // alpha/lambda^2 member of the family.
  Scalar lam = Scalar::integer(Q, 2);
  Matrix diag(Q, 6, 6);
  diag.at(0, 0) = lam;
  diag.at(1, 1) = Scalar::one(Q);
  diag.at(2, 2) = Scalar::one(Q);
  diag.at(3, 3) = lam;
  diag.at(4, 4) = lam;
  diag.at(5, 5) = lam * lam;
  Algebra b614 = build_entry("B_6_1", {{"alpha", Scalar::integer(Q, 4)}}, Q);
  CHECK(transport(b614, LinearMap{diag}) == b611);
  CHECK(is_isomorphism(LinearMap{diag}, b614, b611));

  Rng rng(kDefaultSeed ^ 0x15);
  for (int k = 0; k < 50; ++k) {
    Algebra a = random_anticommutative(rng, Q, 4);
    LinearMap p = random_invertible(rng, Q, 4);
    CHECK(is_isomorphism(p, a, transport(a, p)));
  }
  Matrix singular(Q, 6, 6);
  CHECK_THROWS_AS(transport(b611, LinearMap{singular}), Error);  // SingularMap
}

TEST_CASE("fingerprint separates and is transport-invariant") {
  Fingerprint f2 = fingerprint(build_entry("B_6_2", Q));
  Fingerprint f3 = fingerprint(build_entry("B_6_3", Q));
  CHECK(f2 != f3);
  CHECK(f2.der_dim != f3.der_dim);  // 10 vs 8, the separating invariant
  CHECK(fingerprint(build_entry("L_5_8", Q)).ann_dim == 2);

  Rng rng(kDefaultSeed ^ 0xf9);
  FieldSpec F3 = FieldSpec::prime(3);
  for (const char* name : {"L_4_3", "L_5_8", "M_5_1"}) {
    Algebra a = build_entry(name, F3);
    Fingerprint base = fingerprint(a);
    for (int k = 0; k < 5; ++k) {
      LinearMap p = random_invertible(rng, F3, a.dim());
      CHECK(fingerprint(transport(a, p)) == base);
    }
  }
}

TEST_CASE("brute_iso finds maps and certifies their absence") {
  FieldSpec F3 = FieldSpec::prime(3);
  // Two presentations of the Heisenberg algebra differing by a permutation.
  Algebra h1 = make_algebra(F3, 3, {{1, 2, 3, 1}});
  Algebra h2 = make_algebra(F3, 3, {{1, 3, 2, 1}});
  auto found = brute_iso(h1, h2);
  REQUIRE(found.has_value());
  CHECK(is_isomorphism(*found, h1, h2));

  CHECK_FALSE(brute_iso(build_entry("L_4_2", F3), build_entry("L_4_3", F3)).has_value());

  Algebra b611 = build_entry("B_6_1", {{"alpha", Scalar::residue(1, 3)}}, F3);
  Algebra b612 = build_entry("B_6_1", {{"alpha", Scalar::residue(2, 3)}}, F3);
  CHECK_FALSE(brute_iso(b611, b612).has_value());
  // ... consistent with 2 being a nonsquare in F_3, and the scaling map
  // realizing the square case: 4 = 2^2 * 1 = 1 in F_3.
  CHECK_FALSE(is_square(Scalar::residue(2, 3)));

  CHECK_THROWS_AS(brute_iso(build_entry("L_3_2", Q), build_entry("L_3_2", Q)), Error);
  CHECK_THROWS_AS(brute_iso(b611, b612, /*budget=*/1), Error);  // SearchSpaceTooLarge
}
