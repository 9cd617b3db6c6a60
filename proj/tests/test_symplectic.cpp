#include <doctest.h>

#include <random>

#include "spmet/symplectic.hpp"

using namespace spmet;

namespace {

SpElement b(int i, int j) { return SpElement::basis(BasisIndex::b(i, j)); }
SpElement c(int i, int j) { return SpElement::basis(BasisIndex::c(i, j)); }
SpElement a(int i, int j) { return SpElement::basis(BasisIndex::a(i, j)); }

}  // namespace

TEST_CASE("symmetric index normalization") {
  CHECK(BasisIndex::b(2, 1) == BasisIndex::b(1, 2));
  CHECK(BasisIndex::c(3, 1) == BasisIndex::c(1, 3));
  CHECK(BasisIndex::a(2, 1) != BasisIndex::a(1, 2));
  CHECK_THROWS_AS(BasisIndex::a(0, 1), std::out_of_range);
}

TEST_CASE("basis order and positions") {
  PrimeContext ctx(3, 2);
  auto basis = sp_basis(ctx);
  REQUIRE(basis.size() == 10);
  CHECK(basis[0] == BasisIndex::a(1, 1));
  CHECK(basis[3] == BasisIndex::a(2, 2));
  CHECK(basis[4] == BasisIndex::b(1, 1));
  CHECK(basis[6] == BasisIndex::b(2, 2));
  CHECK(basis[7] == BasisIndex::c(1, 1));
  CHECK(basis[9] == BasisIndex::c(2, 2));
  for (std::size_t k = 0; k < basis.size(); ++k)
    CHECK(basis_position(basis[k], ctx) == static_cast<int>(k));
  PrimeContext ctx3(3, 3);
  auto basis3 = sp_basis(ctx3);
  REQUIRE(basis3.size() == 21);
  for (std::size_t k = 0; k < basis3.size(); ++k)
    CHECK(basis_position(basis3[k], ctx3) == static_cast<int>(k));
}

TEST_CASE("basis matrices") {
  PrimeContext ctx(3, 2);
  MatrixForm m = basis_matrix(BasisIndex::a(1, 1), ctx);
  for (int r = 0; r < 4; ++r)
    for (int q = 0; q < 4; ++q) {
      Rational want = r == q ? (r == 0 ? 1 : (r == 2 ? -1 : 0)) : Rational(0);
      CHECK(m.at(r, q) == want);
    }
  MatrixForm mb = basis_matrix(BasisIndex::b(1, 1), ctx);
  CHECK(mb.at(0, 2) == 2);  // e_{1,3} + e_{1,3}
  Rational total(0);
  for (int r = 0; r < 4; ++r)
    for (int q = 0; q < 4; ++q) total += mb.at(r, q) * mb.at(r, q);
  CHECK(total == 4);
  MatrixForm mc = basis_matrix(BasisIndex::c(1, 2), ctx);
  CHECK(mc.at(2, 1) == 1);
  CHECK(mc.at(3, 0) == 1);
  CHECK_THROWS_AS(basis_matrix(BasisIndex::a(1, 3), ctx), std::out_of_range);
}

TEST_CASE("structure bracket examples") {
  CHECK(bracket_structure(a(1, 2), b(2, 2)) == b(1, 2) * Rational(2));
  CHECK(bracket_structure(b(1, 1), b(1, 2)).is_zero());
  CHECK(bracket_structure(b(1, 1), c(1, 1)) == a(1, 1) * Rational(4));
  CHECK(bracket_structure(a(1, 2), a(2, 1)) == a(1, 1) - a(2, 2));
}

TEST_CASE("matrix bracket examples") {
  PrimeContext ctx(3, 2);
  CHECK(bracket_matrix(a(1, 2), a(1, 2), ctx).is_zero());
  CHECK(bracket_matrix(a(1, 2), a(2, 1), ctx) == a(1, 1) - a(2, 2));
  CHECK(bracket_matrix(b(1, 1), c(1, 1), ctx) == a(1, 1) * Rational(4));
}

TEST_CASE("two bracket routes agree on every pair") {
  for (int n : {2, 3}) {
    PrimeContext ctx(3, n);
    for (BasisIndex u : sp_basis(ctx))
      for (BasisIndex v : sp_basis(ctx)) {
        SpElement su = SpElement::basis(u), sv = SpElement::basis(v);
        CHECK(bracket_structure(su, sv) == bracket_matrix(su, sv, ctx));
      }
  }
}

TEST_CASE("antisymmetry and abelian families") {
  PrimeContext ctx(3, 2);
  for (BasisIndex u : sp_basis(ctx))
    for (BasisIndex v : sp_basis(ctx)) {
      SpElement su = SpElement::basis(u), sv = SpElement::basis(v);
      CHECK((bracket_structure(su, sv) + bracket_structure(sv, su)).is_zero());
    }
  for (const char* fam : {"b", "c"})
    for (BasisIndex u : subalgebra(fam, ctx))
      for (BasisIndex v : subalgebra(fam, ctx))
        CHECK(bracket_structure(SpElement::basis(u), SpElement::basis(v))
                  .is_zero());
}

TEST_CASE("jacobi identity on sampled triples") {
  PrimeContext ctx(3, 2);
  auto basis = sp_basis(ctx);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  for (int t = 0; t < 200; ++t) {
    SpElement x = SpElement::basis(basis[pick(rng)]);
    SpElement y = SpElement::basis(basis[pick(rng)]);
    SpElement z = SpElement::basis(basis[pick(rng)]);
    SpElement sum = bracket_structure(x, bracket_structure(y, z)) +
                    bracket_structure(y, bracket_structure(z, x)) +
                    bracket_structure(z, bracket_structure(x, y));
    CHECK(sum.is_zero());
  }
}

TEST_CASE("matrix decomposition roundtrip and rejection") {
  PrimeContext ctx(3, 2);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coeff(-5, 5);
  auto basis = sp_basis(ctx);
  for (int t = 0; t < 50; ++t) {
    SpElement x;
    for (BasisIndex idx : basis) x.add_term(idx, coeff(rng));
    CHECK(matrix_to_sp(sp_to_matrix(x, ctx), ctx) == x);
  }
  MatrixForm bad(4, 4);
  bad.at(0, 0) = 1;  // trace block without the compensating -A^T block
  CHECK_THROWS_AS(matrix_to_sp(bad, ctx), std::domain_error);
}

TEST_CASE("subalgebra catalogue") {
  PrimeContext ctx(3, 2);
  using IL = std::vector<BasisIndex>;
  CHECK(subalgebra("c^1", ctx) == IL{BasisIndex::c(1, 1), BasisIndex::c(1, 2)});
  CHECK(subalgebra("a0", ctx) == IL{BasisIndex::a(1, 1), BasisIndex::a(2, 2)});
  CHECK(subalgebra("s", ctx).size() == 7);
  CHECK(subalgebra("t", ctx).size() == 7);
  CHECK(subalgebra("c+^2", ctx) ==
        IL{BasisIndex::c(1, 1), BasisIndex::a(2, 1), BasisIndex::b(2, 2)});
  CHECK(subalgebra("c-^2", ctx) ==
        IL{BasisIndex::b(1, 1), BasisIndex::a(1, 2), BasisIndex::c(2, 2)});
  CHECK(subalgebra("a_1", ctx) == subalgebra("a0", ctx));
  CHECK(subalgebra("b_2", ctx) == IL{BasisIndex::b(1, 2)});
  // apm_2 = a_1 (a11, a22) + b_2 (b12) + c_2 (c12)
  CHECK(subalgebra("apm_2", ctx).size() == 4);

  PrimeContext ctx3(3, 3);
  CHECK(subalgebra("c~+^2", ctx3) ==
        IL{BasisIndex::a(2, 1), BasisIndex::a(3, 1), BasisIndex::b(2, 2)});
  CHECK(subalgebra("c~^2", ctx3) ==
        IL{BasisIndex::c(1, 2), BasisIndex::c(2, 2), BasisIndex::c(1, 3)});

  CHECK_THROWS_AS(subalgebra("q", ctx), std::invalid_argument);
  CHECK_THROWS_AS(subalgebra("c^5", ctx), std::out_of_range);
  CHECK_THROWS_AS(subalgebra("a+^1", ctx), std::out_of_range);
  CHECK_THROWS_AS(subalgebra("c^x", ctx), std::invalid_argument);
}

TEST_CASE("catalogued subalgebras are bracket closed") {
  for (int n : {2, 3}) {
    PrimeContext ctx(3, n);
    for (const std::string& spec : subalgebra_catalog(ctx)) {
      auto gens = subalgebra(spec, ctx);
      SpanBasis span(ctx.d);
      for (BasisIndex g : gens)
        span.insert(SpElement::basis(g).coordinates(ctx));
      for (BasisIndex u : gens)
        for (BasisIndex v : gens) {
          SpElement br =
              bracket_structure(SpElement::basis(u), SpElement::basis(v));
          CHECK_MESSAGE(span.contains(br.coordinates(ctx)),
                        (spec + ": [" + u.str() + "," + v.str() + "]"));
        }
    }
  }
}
