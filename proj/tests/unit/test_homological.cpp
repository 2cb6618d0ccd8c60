#include <gtest/gtest.h>

#include <numeric>

#include "battery.hpp"
#include "helpers.hpp"
#include "redcor/homological.hpp"
#include "redcor/torsion.hpp"

using namespace redcor;
using redcor::testing::cyclic;
using redcor::testing::ideal;
using redcor::testing::inv;
using redcor::testing::parse_matrix;
using redcor::testing::strs;

namespace {

const Ring Z = Ring::integers();

std::vector<Elem> seq(const Ring& ring, std::initializer_list<const char*> xs) {
  std::vector<Elem> out;
  for (const char* s : xs) out.push_back(ring.parse(s));
  return out;
}

}  // namespace

TEST(Koszul, RankOne) {
  Ring q = Ring::rationals_poly({"x"});
  ChainComplex k = koszul_complex(q, seq(q, {"x"}));
  EXPECT_EQ(k.lo(), -1);
  EXPECT_EQ(k.hi(), 0);
  EXPECT_EQ(k.differential(-1).matrix(), parse_matrix(q, 1, {{"x"}}));
}

TEST(Koszul, TwoElementsSignConvention) {
  Ring r = Ring::rationals_poly({"x", "y"});
  ChainComplex k = koszul_complex(r, seq(r, {"x", "y"}));
  EXPECT_EQ(k.term(-2).gens(), 1u);
  EXPECT_EQ(k.term(-1).gens(), 2u);
  EXPECT_EQ(k.term(0).gens(), 1u);
  EXPECT_EQ(k.differential(-2).matrix(), parse_matrix(r, 2, {{"y", "-x"}}));
  EXPECT_EQ(k.differential(-1).matrix(), parse_matrix(r, 1, {{"x"}, {"y"}}));
  EXPECT_TRUE(k.is_complex());
}

TEST(Koszul, ModularRankOne) {
  Ring z4 = Ring::modular(4);
  ChainComplex k = koszul_complex(z4, seq(z4, {"2"}));
  EXPECT_EQ(k.differential(-1).matrix(), parse_matrix(z4, 1, {{"2"}}));
}

TEST(Koszul, EmptySequence) {
  try {
    koszul_complex(Z, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptySequence);
  }
}

TEST(Koszul, DifferentialsSquareToZeroOnLongerSequences) {
  Ring r = Ring::rationals_poly({"x", "y", "z", "w"});
  for (auto s : {seq(r, {"x", "y", "z"}), seq(r, {"x", "y", "z", "w"}), seq(r, {"x^2", "x*y", "y+z"})}) {
    ChainComplex k = koszul_complex(r, s);
    EXPECT_TRUE(k.is_complex());
  }
  Ring z12 = Ring::modular(12);
  EXPECT_TRUE(koszul_complex(z12, seq(z12, {"2", "3", "4"})).is_complex());
}

TEST(Cohomology, Examples) {
  Ring q = Ring::rationals_poly({"x"});
  EXPECT_TRUE(cohomology(koszul_complex(q, seq(q, {"x"})), -1).module.is_zero());

  Ring z4 = Ring::modular(4);
  Subquotient h = cohomology(koszul_complex(z4, seq(z4, {"2"})), -1);
  EXPECT_EQ(inv(h.module), strs({"2"}));

  Ring r = Ring::rationals_poly({"x", "y"});
  Subquotient h0 = cohomology(koszul_complex(r, seq(r, {"x", "y"})), 0);
  EXPECT_EQ(inv(h0.module), strs({"dim 1"}));

  try {
    cohomology(koszul_complex(r, seq(r, {"x", "y"})), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutOfRange);
  }
}

TEST(Cohomology, TopDegreeIsResidueRing) {
  Ring r = Ring::rationals_poly({"x", "y"});
  std::vector<std::vector<Elem>> seqs{seq(r, {"x", "y"}), seq(r, {"x^2", "x*y"}), seq(r, {"x+y"})};
  for (const auto& s : seqs) {
    Subquotient h0 = cohomology(koszul_complex(r, s), 0);
    Presentation quot = Presentation::cyclic(Ideal(r, s));
    // canonical map R/(r) -> H^0 sending 1 to the class of e_∅
    ModuleMap canon(quot, h0.module, Matrix::identity(r, 1));
    EXPECT_TRUE(map_analyze(canon).iso);
  }
}

TEST(KoszulTransition, Examples) {
  Ring z4 = Ring::modular(4);
  ChainMap t = koszul_transition(z4, seq(z4, {"2"}), 1, 3);
  EXPECT_EQ(t.component(-1).matrix(), parse_matrix(z4, 1, {{"0"}}));
  EXPECT_TRUE(t.commutes());

  Ring r = Ring::rationals_poly({"x", "y"});
  ChainMap same = koszul_transition(r, seq(r, {"x", "y"}), 2, 2);
  for (int p = -2; p <= 0; ++p) EXPECT_TRUE(map_analyze(same.component(p)).iso);
  EXPECT_EQ(same.component(-1).matrix(), Matrix::identity(r, 2));

  ChainMap xy = koszul_transition(r, seq(r, {"x", "y"}), 1, 2);
  EXPECT_EQ(xy.component(-2).matrix(), parse_matrix(r, 1, {{"x*y"}}));
  EXPECT_TRUE(xy.commutes());

  EXPECT_THROW(koszul_transition(r, seq(r, {"x"}), 3, 2), Error);
}

TEST(WeakProregularity, Examples) {
  Ring r = Ring::rationals_poly({"x", "y"});
  ProZeroVerdict v = weak_proregularity_check(r, seq(r, {"x", "y"}), 3, 6);
  EXPECT_TRUE(v.pro_zero);

  Ring z4 = Ring::modular(4);
  ProZeroVerdict w = weak_proregularity_check(z4, seq(z4, {"2"}), 2, 4);
  EXPECT_TRUE(w.pro_zero);
  EXPECT_EQ(w.witnesses.at({1u, -1}), 3u);

  Ring q = Ring::rationals_poly({"x"});
  EXPECT_TRUE(weak_proregularity_check(q, seq(q, {"x"}), 1, 1).pro_zero);
}

TEST(WeakProregularity, TooSmallBoundIsInconclusive) {
  Ring z4 = Ring::modular(4);
  ProZeroVerdict w = weak_proregularity_check(z4, seq(z4, {"2"}), 1, 2);
  EXPECT_FALSE(w.pro_zero);
  EXPECT_EQ(w.failed_i, 1u);
  EXPECT_EQ(w.failed_p, -1);
}

TEST(FreeResolution, Examples) {
  ChainComplex f = free_resolution(cyclic(Z, 6), 2);
  EXPECT_EQ(f.term(0).gens(), 1u);
  EXPECT_EQ(f.term(-1).gens(), 1u);
  EXPECT_EQ(f.term(-2).gens(), 0u);
  EXPECT_EQ(f.differential(-1).matrix(), parse_matrix(Z, 1, {{"6"}}));

  Ring z4 = Ring::modular(4);
  ChainComplex p = free_resolution(cyclic(z4, 2), 3);
  for (int d = -3; d < 0; ++d) {
    EXPECT_EQ(p.term(d).gens(), 1u);
    EXPECT_EQ(p.differential(d).matrix(), parse_matrix(z4, 1, {{"2"}}));
  }
  EXPECT_TRUE(p.is_complex());

  ChainComplex free = free_resolution(Presentation::free(Z, 2), 3);
  for (int d = -3; d < 0; ++d) EXPECT_EQ(free.term(d).gens(), 0u);
}

TEST(FreeResolution, ExactInInteriorDegrees) {
  Ring r = Ring::rationals_poly({"x", "y", "z"});
  Presentation m = Presentation::cyclic(ideal(r, {"x*y", "y*z", "x*z"}));
  ChainComplex f = free_resolution(m, 4);
  EXPECT_TRUE(f.is_complex());
  for (int d = -3; d < 0; ++d) EXPECT_TRUE(cohomology(f, d).module.is_zero()) << d;
  Ring z12 = Ring::modular(12);
  ChainComplex g = free_resolution(Presentation(z12, 2, parse_matrix(z12, 2, {{"2", "4"}, {"0", "6"}})), 4);
  for (int d = -3; d < 0; ++d) EXPECT_TRUE(cohomology(g, d).module.is_zero()) << d;
}

TEST(Tor, Examples) {
  EXPECT_EQ(inv(tor(cyclic(Z, 6), cyclic(Z, 4), 1)), strs({"2"}));
  Ring z4 = Ring::modular(4);
  EXPECT_EQ(inv(tor(cyclic(z4, 2), cyclic(z4, 2), 1)), strs({"2"}));
  Presentation n(Z, 2, parse_matrix(Z, 2, {{"2", "4"}}));
  EXPECT_TRUE(isomorphic(tor(Presentation::free(Z, 1), n, 0), n));
}

TEST(Tor, ZeroIsTensor) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    Presentation m = redcor::testing::random_finite_integer_module(rng, 2, 12);
    Presentation n = redcor::testing::random_finite_integer_module(rng, 2, 12);
    EXPECT_EQ(module_invariants(tor(m, n, 0)), module_invariants(tensor_product(m, n)));
  }
}

TEST(Tor, GcdLawOverIntegers) {
  for (long a = 1; a <= 30; a += 3)
    for (long b = 1; b <= 30; b += 2) {
      auto t = module_invariants(tor(cyclic(Z, a), cyclic(Z, b), 1));
      long g = std::gcd(a, b);
      if (g == 1)
        EXPECT_TRUE(t.empty());
      else
        EXPECT_EQ(t, std::vector<Integer>{g});
    }
}

TEST(Tor, SymmetryOnBattery) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    Presentation m = redcor::testing::random_finite_integer_module(rng, 2, 12);
    Presentation n = redcor::testing::random_finite_integer_module(rng, 2, 12);
    EXPECT_EQ(module_invariants(tor(m, n, 1)), module_invariants(tor(n, m, 1)));
  }
}

TEST(StrongIdempotence, Examples) {
  Ring z6 = Ring::modular(6);
  auto a = strongly_idempotent_check(ideal(z6, {"3"}), 3);
  EXPECT_TRUE(a.holds);
  EXPECT_EQ(a.bound, 3u);
  Ring z4 = Ring::modular(4);
  auto b = strongly_idempotent_check(ideal(z4, {"2"}), 1);
  EXPECT_FALSE(b.holds);
  EXPECT_EQ(b.failed_at, 1u);
  EXPECT_TRUE(strongly_idempotent_check(ideal(Z, {"1"}), 4).holds);
}

TEST(StrongIdempotence, ImpliesIdempotentOnFiniteRings) {
  for (long n = 2; n <= 30; ++n) {
    Ring zn = Ring::modular(n);
    for (const auto& i : cyclic_ideals(zn)) {
      bool idempotent = ideal_equal(i, ideal_power(i, 2));
      auto v = strongly_idempotent_check(i, 2);
      if (v.holds) EXPECT_TRUE(idempotent) << n;
      if (idempotent) {
        EXPECT_TRUE(v.holds) << n;
        std::vector<Elem> gens = i.basis().empty() ? std::vector<Elem>{zn.zero()} : i.basis();
        EXPECT_TRUE(weak_proregularity_check(zn, gens, 2, 4).pro_zero) << n;
      }
    }
  }
}
