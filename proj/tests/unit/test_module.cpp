#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "helpers.hpp"

using namespace redcor;
using redcor::testing::cyclic;
using redcor::testing::ideal;
using redcor::testing::inv;
using redcor::testing::parse_matrix;
using redcor::testing::strs;

namespace {

const Ring Z = Ring::integers();

// Images t of the generator of Z/a inside Z/b with a*t = 0 mod b.
std::vector<long> cyclic_hom_images(long a, long b) {
  std::vector<long> out;
  for (long t = 0; t < b; ++t)
    if ((a * t) % b == 0) out.push_back(t);
  return out;
}

}  // namespace

TEST(Syzygies, ColumnOverIntegers) {
  Matrix a = parse_matrix(Z, 1, {{"2"}, {"3"}});
  Matrix k = syzygies(Z, a);
  ASSERT_EQ(k.rows(), 1u);
  Vector row = k.row(0);
  // generated by (3, -2) up to sign
  EXPECT_TRUE((row == Vector{Z.from_int(3), Z.from_int(-2)}) ||
              (row == Vector{Z.from_int(-3), Z.from_int(2)}));
  EXPECT_TRUE(mat::is_zero(Z, mat::mul(Z, k, a)));
}

TEST(Syzygies, IdentityHasZeroKernel) {
  Ring q = Ring::rationals_poly({"x"});
  EXPECT_EQ(syzygies(Z, Matrix::identity(Z, 3)).rows(), 0u);
  EXPECT_EQ(syzygies(q, Matrix::identity(q, 2)).rows(), 0u);
}

TEST(Syzygies, OverZmod4) {
  Ring z4 = Ring::modular(4);
  Matrix k = syzygies(z4, parse_matrix(z4, 1, {{"2"}}));
  ASSERT_EQ(k.rows(), 1u);
  EXPECT_EQ(k(0, 0), z4.from_int(2));
}

TEST(Syzygies, PolynomialKoszulRelation) {
  Ring r = Ring::rationals_poly({"x", "y"});
  Matrix a = parse_matrix(r, 1, {{"x"}, {"y"}});
  Matrix k = syzygies(r, a);
  ASSERT_EQ(k.rows(), 1u);
  EXPECT_TRUE(mat::is_zero(r, mat::mul(r, k, a)));
}

TEST(MapAnalyze, Examples) {
  Ring z4 = Ring::integers();
  Presentation m4 = cyclic(z4, 4), m2 = cyclic(z4, 2);
  auto id = map_analyze(ModuleMap::identity(m4));
  EXPECT_TRUE(id.well_defined && id.injective && id.surjective && id.iso);

  auto twice = map_analyze(multiplication_map(m4, Z.from_int(2)));
  EXPECT_TRUE(twice.well_defined);
  EXPECT_FALSE(twice.injective);
  EXPECT_FALSE(twice.surjective);
  EXPECT_FALSE(twice.iso);

  auto inc = map_analyze(ModuleMap(m2, m4, parse_matrix(Z, 1, {{"2"}})));
  EXPECT_TRUE(inc.well_defined && inc.injective);
  EXPECT_FALSE(inc.surjective || inc.iso);
}

TEST(ModuleMap, IllDefinedMapThrows) {
  try {
    ModuleMap(cyclic(Z, 2), cyclic(Z, 4), parse_matrix(Z, 1, {{"1"}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotWellDefined);
  }
  EXPECT_FALSE(try_module_map(cyclic(Z, 2), cyclic(Z, 4), parse_matrix(Z, 1, {{"1"}})));
}

TEST(ModuleMap, DimensionMismatchIsIllFormed) {
  try {
    ModuleMap(cyclic(Z, 2), cyclic(Z, 4), parse_matrix(Z, 2, {{"1", "0"}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IllFormed);
  }
}

TEST(HomModule, CyclicOverIntegers) {
  HomModule h = hom_module(cyclic(Z, 4), cyclic(Z, 6));
  EXPECT_EQ(inv(h.module()), strs({"2"}));
  EXPECT_EQ(cyclic_hom_images(4, 6), (std::vector<long>{0, 3}));
  ASSERT_EQ(h.module().gens(), 1u);
  EXPECT_EQ(h.realize(0).matrix()(0, 0), Z.from_int(3));

  Presentation m6 = cyclic(Z, 6);
  HomModule free_source = hom_module(Presentation::free(Z, 1), m6);
  EXPECT_TRUE(isomorphic(free_source.module(), m6));

  HomModule to_free = hom_module(cyclic(Z, 2), Presentation::free(Z, 1));
  EXPECT_EQ(to_free.module().gens(), 0u);
}

TEST(HomModule, OrderMatchesEnumerationOverIntegerCyclics) {
  for (long a = 1; a <= 12; ++a)
    for (long b = 1; b <= 12; ++b) {
      HomModule h = hom_module(cyclic(Z, a), cyclic(Z, b));
      auto order = module_order(h.module());
      ASSERT_TRUE(order.has_value());
      EXPECT_EQ(*order, static_cast<long>(cyclic_hom_images(a, b).size())) << a << " " << b;
      for (std::size_t j = 0; j < h.module().gens(); ++j)
        EXPECT_TRUE(map_analyze(h.realize(j)).well_defined);
    }
}

TEST(HomModule, CoordinatesRoundTrip) {
  Ring z12 = Ring::modular(12);
  Presentation m(z12, 2, parse_matrix(z12, 2, {{"4", "0"}, {"0", "6"}}));
  Presentation n(z12, 2, parse_matrix(z12, 2, {{"2", "2"}}));
  HomModule h = hom_module(m, n);
  for (std::size_t j = 0; j < h.module().gens(); ++j) {
    Vector c = h.coordinates(h.realize(j).matrix());
    EXPECT_TRUE(maps_equal(h.map_of(c), h.realize(j)));
  }
}

TEST(HomModule, PolynomialSocle) {
  Ring r = Ring::rationals_poly({"x", "y"});
  Presentation k = Presentation::cyclic(ideal(r, {"x", "y"}));
  Presentation a = Presentation::cyclic(ideal(r, {"x^2", "x*y", "y^2"}));
  HomModule h = hom_module(k, a);
  auto basis = standard_basis(h.module());
  ASSERT_TRUE(basis.has_value());
  EXPECT_EQ(basis->size(), 2u);
}

TEST(Tensor, Examples) {
  EXPECT_EQ(inv(tensor_product(cyclic(Z, 4), cyclic(Z, 6))), strs({"2"}));
  Presentation m6 = cyclic(Z, 6);
  EXPECT_TRUE(isomorphic(tensor_product(Presentation::free(Z, 1), m6), m6));
  EXPECT_TRUE(tensor_product(cyclic(Z, 2), cyclic(Z, 3)).is_zero());
}

TEST(Colon, Examples) {
  Submodule s = colon_annihilator(cyclic(Z, 4), ideal(Z, {"2"}));
  EXPECT_EQ(inv(s.module), strs({"2"}));
  EXPECT_TRUE(map_analyze(s.include).injective);
  ASSERT_EQ(s.module.gens(), 1u);
  EXPECT_EQ(s.include.matrix()(0, 0), Z.from_int(2));

  EXPECT_EQ(colon_annihilator(Presentation::free(Z, 1), ideal(Z, {"2"})).module.gens(), 0u);

  Ring r = Ring::rationals_poly({"x", "y"});
  Presentation a = Presentation::cyclic(ideal(r, {"x^2", "x*y", "y^2"}));
  Submodule socle = colon_annihilator(a, ideal(r, {"x", "y"}));
  auto basis = standard_basis(socle.module);
  ASSERT_TRUE(basis.has_value());
  EXPECT_EQ(basis->size(), 2u);
  EXPECT_TRUE(map_analyze(socle.include).injective);
  EXPECT_TRUE(same_submodule(a, socle.include.matrix(), parse_matrix(r, 1, {{"x"}, {"y"}})));
}

TEST(Scalar, Examples) {
  Ring z = Ring::integers();
  ScalarSubmodule s = scalar_submodule(cyclic(z, 6), ideal(z, {"2"}));
  EXPECT_EQ(inv(s.submodule), strs({"3"}));
  EXPECT_EQ(inv(s.quotient), strs({"2"}));
  EXPECT_TRUE(map_analyze(s.project).surjective);
  EXPECT_TRUE(map_analyze(s.include).injective);

  ScalarSubmodule all = scalar_submodule(Presentation::free(z, 1), ideal(z, {"1"}));
  EXPECT_TRUE(map_analyze(all.include).iso);
  EXPECT_TRUE(all.quotient.is_zero());

  Ring q = Ring::rationals_poly({"x"});
  ScalarSubmodule t = scalar_submodule(Presentation::cyclic(ideal(q, {"x^2"})), ideal(q, {"x"}));
  EXPECT_EQ(inv(t.submodule), strs({"dim 1"}));
  EXPECT_EQ(inv(t.quotient), strs({"dim 1"}));
}

TEST(Smith, Examples) {
  SmithForm s = smith_form(Z, parse_matrix(Z, 2, {{"2", "0"}, {"0", "3"}}));
  EXPECT_EQ(s.invariants, (std::vector<Elem>{Z.from_int(1), Z.from_int(6)}));
  EXPECT_EQ(mat::mul(Z, mat::mul(Z, s.U, parse_matrix(Z, 2, {{"2", "0"}, {"0", "3"}})), s.V), s.D);

  SmithForm free = smith_invariants(Presentation(Z, 1, parse_matrix(Z, 1, {{"0"}})));
  EXPECT_EQ(free.free_rank, 1u);
  EXPECT_TRUE(free.invariants.empty());

  Ring z6 = Ring::modular(6);
  SmithForm f6 = smith_invariants(Presentation::free(z6, 1));
  EXPECT_EQ(f6.free_rank, 1u);
  EXPECT_EQ(module_invariants(Presentation::free(z6, 1)), std::vector<Integer>{6});

  EXPECT_THROW(smith_invariants(Presentation::free(Ring::rationals_poly({"x"}), 1)), Error);
}

TEST(Smith, ModularAssociates) {
  Ring z12 = Ring::modular(12);
  Matrix a = parse_matrix(z12, 2, {{"10", "0"}, {"0", "9"}});
  SmithForm s = smith_form(z12, a);
  EXPECT_EQ(mat::mul(z12, mat::mul(z12, s.U, a), s.V), s.D);
  EXPECT_EQ(s.invariants, (std::vector<Elem>{z12.from_int(1), z12.from_int(6)}));
}

TEST(DirectSum, Examples) {
  EXPECT_EQ(inv(direct_sum(cyclic(Z, 2), cyclic(Z, 3))), strs({"6"}));
  Presentation m = cyclic(Z, 4);
  EXPECT_TRUE(isomorphic(direct_sum(m, Presentation::zero(Z)), m));
  EXPECT_EQ(inv(direct_sum(Presentation::free(Z, 1), Presentation::free(Z, 1))), strs({"0", "0"}));
}

TEST(ModuleProperties, HomTensorAdjunctionInvariants) {
  std::mt19937 rng(3);
  for (long n : {4, 6, 8, 12}) {
    Ring zn = Ring::modular(n);
    std::uniform_int_distribution<long> e(0, n - 1);
    for (int trial = 0; trial < 6; ++trial) {
      auto random_module = [&] {
        return Presentation(zn, 2,
                            Matrix::from_rows(2, {{zn.from_int(e(rng)), zn.from_int(e(rng))},
                                                  {zn.from_int(0), zn.from_int(e(rng))}}));
      };
      Presentation m = random_module(), n2 = random_module(), p = random_module();
      Presentation lhs = hom_module(tensor_product(m, n2), p).module();
      Presentation rhs = hom_module(m, hom_module(n2, p).module()).module();
      EXPECT_EQ(module_invariants(lhs), module_invariants(rhs));
    }
  }
}

TEST(ModuleProperties, SmithReconstructionAndDivisibility) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> e(-20, 20), dim(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
    Matrix a = Matrix::zero(Z, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = Z.from_int(e(rng));
    SmithForm s = smith_form(Z, a);
    EXPECT_EQ(mat::mul(Z, mat::mul(Z, s.U, a), s.V), s.D);
    for (std::size_t k = 0; k + 1 < s.invariants.size(); ++k)
      EXPECT_TRUE(mpz_divisible_p(Z.as_integer(s.invariants[k + 1]).get_mpz_t(),
                                  Z.as_integer(s.invariants[k]).get_mpz_t()));
  }
}

TEST(ModuleProperties, ColonPowersAreNested) {
  for (long n : {8, 12, 18}) {
    Ring zn = Ring::modular(n);
    Presentation m(zn, 2, Matrix::from_rows(2, {{zn.from_int(2), zn.from_int(1)}}));
    for (long a = 1; a < n; ++a) {
      Ideal i(zn, {zn.from_int(a)});
      Submodule c1 = colon_annihilator(m, i);
      Submodule c1b = colon_annihilator(m, ideal_power(i, 1));
      Submodule c2 = colon_annihilator(m, ideal_power(i, 2));
      EXPECT_TRUE(same_submodule(m, c1.include.matrix(), c1b.include.matrix()));
      EXPECT_TRUE(submodule_contains(m, c2.include.matrix(), c1.include.matrix()));
      auto nested = factor_through_injection(c1.include, c2.include);
      ASSERT_TRUE(nested.has_value());
      EXPECT_TRUE(map_analyze(*nested).injective);
    }
  }
}

TEST(ModuleProperties, ZeroModuleIsCanonical) {
  Subquotient sq = subquotient(cyclic(Z, 3), parse_matrix(Z, 1, {{"3"}}),
                               Matrix::from_rows(1, {}));
  EXPECT_EQ(sq.module.gens(), 0u);
  EXPECT_EQ(hom_module(cyclic(Z, 2), cyclic(Z, 3)).module().gens(), 0u);
}
