#include <gtest/gtest.h>

#include "skewalg/field_ring.hpp"
#include "skewalg/torus.hpp"
#include "test_util.hpp"

using namespace skewalg;
using skewalg::testing::Rng;

namespace {

// Test-only oracle: multiply torus monomials by bubble-sorting the free word
// of signed letters, picking up q^(sigma*tau) whenever z3^sigma moves left
// past z1^tau or z2^tau.
struct OracleLetter {
  int gen;   // 1, 2, 3
  int sign;  // +1 or -1
};

std::pair<int, ExpVec> oracle_monomial_mul(ExpVec u, ExpVec v) {
  std::vector<OracleLetter> word;
  auto emit = [&](ExpVec e) {
    for (int i = 0; i < std::abs(e.a); ++i) word.push_back({1, e.a > 0 ? 1 : -1});
    for (int i = 0; i < std::abs(e.b); ++i) word.push_back({2, e.b > 0 ? 1 : -1});
    for (int i = 0; i < std::abs(e.c); ++i) word.push_back({3, e.c > 0 ? 1 : -1});
  };
  emit(u);
  emit(v);
  int qpow = 0;
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i].gen > word[i + 1].gen) {
        if (word[i].gen == 3) qpow += word[i].sign * word[i + 1].sign;
        std::swap(word[i], word[i + 1]);
        moved = true;
      }
    }
  }
  ExpVec out{0, 0, 0};
  for (auto& l : word) {
    if (l.gen == 1) out.a += l.sign;
    if (l.gen == 2) out.b += l.sign;
    if (l.gen == 3) out.c += l.sign;
  }
  return {qpow, out};
}

TorusRing generic_ring() { return TorusRing::generic(); }

}  // namespace

TEST(Torus, DefiningRelationRearranged) {
  TorusRing R = generic_ring();
  // z3 * z1 = q * z1 z3
  TorusElement lhs = R.mul(R.gen(3), R.gen(1));
  TorusElement rhs = R.monomial(ParamScalar::q_gen(), {1, 0, 1});
  EXPECT_TRUE(R.equal(lhs, rhs));
  EXPECT_TRUE(R.equal(R.mul(R.gen(1), R.gen(2)), R.mul(R.gen(2), R.gen(1))));
}

TEST(Torus, OneIsNeutral) {
  TorusRing R = generic_ring();
  Rng rng(201);
  for (int i = 0; i < 50; ++i) {
    TorusElement u = rng.torus(R);
    EXPECT_TRUE(R.equal(R.mul(R.one(), u), u));
    EXPECT_TRUE(R.equal(R.mul(u, R.one()), u));
  }
}

TEST(Torus, FourSwapExample) {
  TorusRing R = generic_ring();
  // z3^2 * z1 z2 = q^4 z1 z2 z3^2, by four letter swaps
  auto [qpow, e] = oracle_monomial_mul({0, 0, 2}, {1, 1, 0});
  EXPECT_EQ(qpow, 4);
  EXPECT_EQ(e, (ExpVec{1, 1, 2}));
  TorusElement lhs = R.mul(R.gen(3, 2), R.mul(R.gen(1), R.gen(2)));
  TorusElement rhs = R.monomial(ParamScalar::q_gen().pow(4), {1, 1, 2});
  EXPECT_TRUE(R.equal(lhs, rhs));
}

TEST(Torus, MonomialMulAgreesWithWordOracle) {
  TorusRing R = generic_ring();
  Rng rng(202);
  for (int i = 0; i < 300; ++i) {
    ExpVec u{rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)};
    ExpVec v{rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)};
    auto [qpow, e] = oracle_monomial_mul(u, v);
    TorusElement got = R.mul(R.monomial(ParamScalar::laurent(Rat(1)), u),
                             R.monomial(ParamScalar::laurent(Rat(1)), v));
    TorusElement want = R.monomial(ParamScalar::q_gen().pow(qpow), e);
    ASSERT_TRUE(R.equal(got, want));
  }
}

TEST(Torus, EndoExamples) {
  TorusRing R = generic_ring();
  // tau1 interchanges z1 and z2
  TorusElement u = R.monomial(ParamScalar::laurent(Rat(1)), {2, 1, -1});
  TorusElement swapped = R.monomial(ParamScalar::laurent(Rat(1)), {1, 2, -1});
  EXPECT_TRUE(R.equal(R.apply_endo(EndoName::tau1(), u), swapped));
  // tau2 fixes z3
  EXPECT_TRUE(R.equal(R.apply_endo(EndoName::tau2(), R.gen(3)), R.gen(3)));
  // tau2^2 (z1) = q^-1 z1
  EndoName tau2sq = EndoName::tau2().compose(EndoName::tau2());
  TorusElement want = R.monomial(ParamScalar::q_gen().pow(-1), {1, 0, 0});
  EXPECT_TRUE(R.equal(R.apply_endo(tau2sq, R.gen(1)), want));
}

TEST(Torus, EndoInversesAndInvolution) {
  TorusRing R = generic_ring();
  Rng rng(203);
  EndoName t2 = EndoName::tau2(), t2i = EndoName::tau2_inv();
  EndoName t1 = EndoName::tau1();
  for (int i = 0; i < 200; ++i) {
    TorusElement u = rng.torus(R);
    EXPECT_TRUE(R.equal(R.apply_endo(t1, R.apply_endo(t1, u)), u));
    EXPECT_TRUE(R.equal(R.apply_endo(t2i, R.apply_endo(t2, u)), u));
    EXPECT_TRUE(R.equal(R.apply_endo(t2, R.apply_endo(t2i, u)), u));
  }
}

TEST(Torus, EndosAreRingHomomorphisms) {
  TorusRing R = generic_ring();
  Rng rng(204);
  for (EndoName e : {EndoName::tau1(), EndoName::tau2(), EndoName::tau2_inv()}) {
    for (int i = 0; i < 200; ++i) {
      TorusElement u = rng.torus(R, 3, 2), v = rng.torus(R, 3, 2);
      ASSERT_TRUE(R.equal(R.apply_endo(e, R.mul(u, v)),
                          R.mul(R.apply_endo(e, u), R.apply_endo(e, v))));
    }
  }
}

TEST(Torus, MulAssociativityAndDomain) {
  TorusRing R = generic_ring();
  Rng rng(205);
  for (int i = 0; i < 200; ++i) {
    TorusElement u = rng.torus(R, 3, 2), v = rng.torus(R, 3, 2), w = rng.torus(R, 3, 2);
    ASSERT_TRUE(R.equal(R.mul(R.mul(u, v), w), R.mul(u, R.mul(v, w))));
  }
  // generic q: the lex-leading coefficient of a product of nonzero elements
  // is the product of leading data, hence nonzero
  for (int i = 0; i < 200; ++i) {
    TorusElement u = rng.torus_nonzero(R, 3, 2), v = rng.torus_nonzero(R, 3, 2);
    TorusElement p = R.mul(u, v);
    ASSERT_FALSE(R.is_zero(p));
    ExpVec lu = u.terms.rbegin()->first, lv = v.terms.rbegin()->first;
    ExpVec sum{lu.a + lv.a, lu.b + lv.b, lu.c + lv.c};
    ASSERT_EQ(p.terms.rbegin()->first, sum);
    ASSERT_FALSE(p.terms.rbegin()->second.is_zero());
  }
}

TEST(Torus, Delta1Examples) {
  TorusRing R = generic_ring();
  ParamScalar alpha = R.alpha();
  // tau1-fixed elements are killed
  EXPECT_TRUE(R.is_zero(R.delta1(R.gen(3, 5))));
  EXPECT_TRUE(R.is_zero(R.delta1(R.mul(R.gen(1), R.gen(2)))));
  // delta1(z1) = -alpha (z1 + z2)
  TorusElement want = R.scalar_mul(-alpha, R.add(R.gen(1), R.gen(2)));
  EXPECT_TRUE(R.equal(R.delta1(R.gen(1)), want));
  // delta1(z1^-1) = alpha (z1^-1 + z2^-1)
  TorusElement want2 = R.scalar_mul(alpha, R.add(R.gen(1, -1), R.gen(2, -1)));
  EXPECT_TRUE(R.equal(R.delta1(R.gen(1, -1)), want2));
}

TEST(Torus, Delta2IsZero) {
  TorusRing R = generic_ring();
  TorusElement u = R.mul(R.gen(1), R.mul(R.gen(2), R.gen(3)));
  EXPECT_TRUE(R.is_zero(R.apply_delta(DeltaName::Delta2, u)));
}

TEST(Torus, Delta1TwistedLeibniz) {
  TorusRing R = generic_ring();
  Rng rng(206);
  EndoName t1 = EndoName::tau1();
  for (int i = 0; i < 200; ++i) {
    TorusElement u = rng.torus(R, 4, 3), v = rng.torus(R, 4, 3);
    TorusElement lhs = R.delta1(R.mul(u, v));
    TorusElement rhs =
        R.add(R.mul(R.apply_endo(t1, u), R.delta1(v)), R.mul(R.delta1(u), v));
    ASSERT_TRUE(R.equal(lhs, rhs));
  }
}

TEST(Torus, Delta1OnSpecializedFlavors) {
  TorusRing R7 = TorusRing::specialized(ParamScalar::prime_field(7, 3),
                                        ParamScalar::prime_field(7, 2));
  Rng rng(207);
  EndoName t1 = EndoName::tau1();
  for (int i = 0; i < 100; ++i) {
    TorusElement u = rng.torus(R7, 3, 2), v = rng.torus(R7, 3, 2);
    TorusElement lhs = R7.delta1(R7.mul(u, v));
    TorusElement rhs =
        R7.add(R7.mul(R7.apply_endo(t1, u), R7.delta1(v)), R7.mul(R7.delta1(u), v));
    ASSERT_TRUE(R7.equal(lhs, rhs));
  }
}

TEST(Torus, SpecializedCharTwoRejected) {
  EXPECT_THROW(TorusRing::specialized(ParamScalar::prime_field(2, 1),
                                      ParamScalar::prime_field(2, 1)),
               math_error);
}

TEST(Torus, UnitsInvert) {
  TorusRing R = generic_ring();
  Rng rng(208);
  for (int i = 0; i < 100; ++i) {
    TorusElement m = R.monomial(ParamScalar::laurent(rng.rat_nonzero(), rng.uniform(-2, 2),
                                                     rng.uniform(-2, 2)),
                                {rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)});
    EXPECT_TRUE(R.equal(R.mul(m, R.invert(m)), R.one()));
    EXPECT_TRUE(R.equal(R.mul(R.invert(m), m), R.one()));
  }
  EXPECT_THROW(R.invert(R.add(R.gen(1), R.gen(2))), math_error);
}

TEST(Torus, CanonicalText) {
  TorusRing R = generic_ring();
  TorusElement u = R.monomial(ParamScalar::q_gen().pow(-1), {2, 1, -1});
  EXPECT_EQ(R.to_string(u), "q^-1*z1^2*z2*z3^-1");
  EXPECT_EQ(R.to_string(R.mul(R.gen(3), R.gen(1))), "q*z1*z3");
  EXPECT_EQ(R.to_string(R.zero()), "0");
}

TEST(EndoNames, AlternatingCompositeAndParity) {
  TorusRing R = generic_ring();
  EXPECT_TRUE(tau_alt(0).is_identity());
  // tau^(2) = tau1 tau2, outermost-first: tau^(2)(z1) = tau1(z2) = z1
  EXPECT_TRUE(R.equal(R.apply_endo(tau_alt(2), R.gen(1)), R.gen(1)));
  EXPECT_EQ(parity_selector(3), 1);
  EXPECT_EQ(parity_selector(4), 2);
  // composing a name with its inverse yields the identity on generators
  EndoName e = tau_alt(3);
  for (const auto& g : R.check_generators())
    EXPECT_TRUE(R.equal(R.apply_endo(e.inverse().compose(e), g), g));
}

TEST(FieldPresets, ConstructAndValidate) {
  FieldRing f1 = FieldRing::qs_order2();
  FieldRing f2 = FieldRing::f2s_dds();
  EXPECT_EQ(f1.name(), "QS-order2");
  EXPECT_EQ(f2.name(), "F2S-dds");
  // tau: s -> -s has order 2
  ParamScalar s = f1.s();
  EXPECT_EQ(f1.apply_endo(EndoName::tau1(), f1.apply_endo(EndoName::tau1(), s)), s);
  // preset d/ds applied to s^2 over F2(s) is 0; over Q(s) the same op is 2s
  EXPECT_TRUE(f2.apply_delta(DeltaName::Delta1, f2.mul(f2.s(), f2.s())).is_zero());
  FieldRing fq("QS-dds", KField{0}, FieldAutomorphismSpec::identity(KField{0}),
               FieldAutomorphismSpec::identity(KField{0}), DerivationSpec::dds(),
               DerivationSpec::dds());
  ParamScalar two_s = ParamScalar::ratfunc(KField{0}, Poly{Rat(0), Rat(2)}, Poly{Rat(1)});
  EXPECT_EQ(fq.apply_delta(DeltaName::Delta1, fq.mul(fq.s(), fq.s())), two_s);
}

TEST(FieldPresets, InnerDetection) {
  FieldRing f2 = FieldRing::f2s_dds();
  auto inner1 = f2.delta_is_inner(DeltaName::Delta1);
  ASSERT_TRUE(inner1.has_value());
  EXPECT_FALSE(*inner1);  // tau = id and delta != 0: not inner
  FieldRing fz = FieldRing::f2s_inner_variant();
  auto innerz = fz.delta_is_inner(DeltaName::Delta1);
  ASSERT_TRUE(innerz.has_value());
  EXPECT_TRUE(*innerz);  // the zero derivation is inner
}
