#include "skewalg/scalar.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace skewalg;
using skewalg::testing::Rng;

namespace {

const FlavorSpec kRationalSpec{Flavor::Rational, 0, {}};
const FlavorSpec kLaurentSpec{Flavor::ParamLaurent, 0, {}};
const KField kQ{0};
const KField kF2{2};

ParamScalar alpha_generic() {
  return (ParamScalar::h_gen() - ParamScalar::h_gen().pow(-1)) /
         ParamScalar::embed_int(kLaurentSpec, 2);
}

ParamScalar beta_generic() {
  return (ParamScalar::h_gen() + ParamScalar::h_gen().pow(-1)) /
         ParamScalar::embed_int(kLaurentSpec, 2);
}

}  // namespace

TEST(Scalars, LaurentInversePair) {
  ParamScalar q = ParamScalar::q_gen();
  EXPECT_TRUE((q * q.pow(-1)).is_one());
}

TEST(Scalars, Char2Doubling) {
  // 1/s + 1/s over F_2(s) is 0
  ParamScalar inv_s = ParamScalar::ratfunc(kF2, Poly{Rat(1)}, Poly{Rat(0), Rat(1)});
  EXPECT_TRUE((inv_s + inv_s).is_zero());
}

// Expand both squares by hand and freeze the expansions:
//   ((h+h^-1)/2)^2 = (1/4)h^-2 + 1/2 + (1/4)h^2
//   ((h-h^-1)/2)^2 = (1/4)h^-2 - 1/2 + (1/4)h^2
// so the difference is exactly 1.
TEST(Scalars, BetaSquaredMinusAlphaSquared) {
  ParamScalar beta2_expected = ParamScalar::laurent(Rat(1, 4), 0, -2) +
                               ParamScalar::laurent(Rat(1, 2)) +
                               ParamScalar::laurent(Rat(1, 4), 0, 2);
  ParamScalar alpha2_expected = ParamScalar::laurent(Rat(1, 4), 0, -2) +
                                ParamScalar::laurent(Rat(-1, 2)) +
                                ParamScalar::laurent(Rat(1, 4), 0, 2);
  ParamScalar beta2 = beta_generic() * beta_generic();
  ParamScalar alpha2 = alpha_generic() * alpha_generic();
  EXPECT_EQ(beta2, beta2_expected);
  EXPECT_EQ(alpha2, alpha2_expected);
  EXPECT_TRUE((beta2 - alpha2).is_one());
}

TEST(Scalars, DeriveExamples) {
  auto dds = DerivationSpec::dds();
  auto idQ = FieldAutomorphismSpec::identity(kQ);
  auto idF2 = FieldAutomorphismSpec::identity(kF2);

  ParamScalar s2_q = ParamScalar::ratfunc(kQ, Poly{Rat(0), Rat(0), Rat(1)}, Poly{Rat(1)});
  ParamScalar two_s = ParamScalar::ratfunc(kQ, Poly{Rat(0), Rat(2)}, Poly{Rat(1)});
  EXPECT_EQ(derive(dds, s2_q, idQ), two_s);

  // 2s vanishes mod 2
  ParamScalar s2_f2 = ParamScalar::ratfunc(kF2, Poly{Rat(0), Rat(0), Rat(1)}, Poly{Rat(1)});
  EXPECT_TRUE(derive(dds, s2_f2, idF2).is_zero());

  // d/ds(1/s) = -1/s^2 = 1/s^2 over F_2
  ParamScalar inv_s = ParamScalar::ratfunc(kF2, Poly{Rat(1)}, Poly{Rat(0), Rat(1)});
  ParamScalar inv_s2 = ParamScalar::ratfunc(kF2, Poly{Rat(1)}, Poly{Rat(0), Rat(0), Rat(1)});
  EXPECT_EQ(derive(dds, inv_s, idF2), inv_s2);
}

TEST(Scalars, SpecializeExamples) {
  std::map<std::string, ParamScalar> at2{{"q", ParamScalar::rational(2)}};
  EXPECT_EQ(specialize(ParamScalar::q_gen(), at2), ParamScalar::rational(2));

  std::map<std::string, ParamScalar> h3{{"h", ParamScalar::rational(3)}};
  EXPECT_EQ(specialize(alpha_generic(), h3), ParamScalar::rational(4, 3));

  std::map<std::string, ParamScalar> ones{{"q", ParamScalar::rational(1)},
                                          {"h", ParamScalar::rational(1)}};
  ParamScalar f = ParamScalar::q_gen().pow(-1) * ParamScalar::h_gen().pow(2);
  EXPECT_TRUE(specialize(f, ones).is_one());
}

TEST(Scalars, SpecializeRejectsZero) {
  std::map<std::string, ParamScalar> bad{{"q", ParamScalar::rational(1)},
                                         {"h", ParamScalar::rational(0)}};
  EXPECT_THROW(specialize(ParamScalar::h_gen(), bad), math_error);
}

TEST(Scalars, FlavorMixingIsAnError) {
  EXPECT_THROW(ParamScalar::rational(1) + ParamScalar::q_gen(), flavor_error);
  EXPECT_THROW(ParamScalar::prime_field(5, 1) * ParamScalar::prime_field(7, 1), flavor_error);
}

TEST(Scalars, DivisionByZero) {
  EXPECT_THROW(ParamScalar::rational(1) / ParamScalar::rational(0), math_error);
  EXPECT_THROW(ParamScalar::q_gen() / ParamScalar::laurent(Rat(0)), math_error);
}

TEST(Scalars, LaurentExactDivision) {
  // (h^2 - 1) / (h - 1)... not in the ring as written, but (h^2-1)/(h+1) = h-1
  ParamScalar h = ParamScalar::h_gen();
  ParamScalar one = ParamScalar::embed_int(kLaurentSpec, 1);
  EXPECT_EQ((h * h - one) / (h + one), h - one);
  EXPECT_THROW((h + one) / (h * h - one), math_error);
}

// --- properties ------------------------------------------------------------

template <class Gen>
void check_field_axioms(Rng& rng, Gen gen, bool field_inverses, int iters = 200) {
  for (int i = 0; i < iters; ++i) {
    ParamScalar a = gen(rng), b = gen(rng), c = gen(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a + (-a), ParamScalar::zero(a.spec()));
    if (field_inverses && !b.is_zero()) {
      EXPECT_TRUE(((a / b) * b) == a);
      EXPECT_TRUE((b * b.inv()).is_one());
    }
  }
}

TEST(ScalarProperties, RationalFieldAxioms) {
  Rng rng(101);
  check_field_axioms(rng, [](Rng& r) { return r.rational(); }, true);
}

TEST(ScalarProperties, PrimeFieldAxioms) {
  Rng rng(102);
  check_field_axioms(rng, [](Rng& r) { return r.prime_field(7); }, true);
}

TEST(ScalarProperties, LaurentRingAxiomsAndUnitInverses) {
  Rng rng(103);
  check_field_axioms(rng, [](Rng& r) { return r.laurent(); }, false);
  // units are the monomials
  for (int i = 0; i < 200; ++i) {
    ParamScalar m = ParamScalar::laurent(rng.rat_nonzero(), rng.uniform(-3, 3),
                                         rng.uniform(-3, 3));
    EXPECT_TRUE((m * m.inv()).is_one());
  }
}

TEST(ScalarProperties, RatFuncFieldAxioms) {
  Rng rng(104);
  check_field_axioms(rng, [](Rng& r) { return r.ratfunc(kQ); }, true);
  Rng rng2(105);
  check_field_axioms(rng2, [](Rng& r) { return r.ratfunc(kF2); }, true);
}

TEST(ScalarProperties, DeriveLeibniz) {
  auto dds = DerivationSpec::dds();
  for (auto k : {kQ, kF2}) {
    auto id = FieldAutomorphismSpec::identity(k);
    Rng rng(106);
    for (int i = 0; i < 200; ++i) {
      ParamScalar f = rng.ratfunc(k), g = rng.ratfunc(k);
      ParamScalar lhs = derive(dds, f * g, id);
      ParamScalar rhs = f * derive(dds, g, id) + derive(dds, f, id) * g;
      ASSERT_EQ(lhs, rhs);
    }
  }
}

TEST(ScalarProperties, SpecializeIsARingHom) {
  Rng rng(107);
  for (int i = 0; i < 200; ++i) {
    ParamScalar f = rng.laurent(), g = rng.laurent();
    std::map<std::string, ParamScalar> at{
        {"q", ParamScalar::rational(rng.rat_nonzero())},
        {"h", ParamScalar::rational(rng.rat_nonzero())}};
    EXPECT_EQ(specialize(f * g, at), specialize(f, at) * specialize(g, at));
    EXPECT_EQ(specialize(f + g, at), specialize(f, at) + specialize(g, at));
  }
  // and over F_7
  Rng rng7(108);
  for (int i = 0; i < 200; ++i) {
    ParamScalar f = rng7.laurent(), g = rng7.laurent();
    std::map<std::string, ParamScalar> at{
        {"q", ParamScalar::prime_field(7, rng7.uniform(1, 6))},
        {"h", ParamScalar::prime_field(7, rng7.uniform(1, 6))}};
    EXPECT_EQ(specialize(f * g, at), specialize(f, at) * specialize(g, at));
  }
}

TEST(ScalarProperties, CanonicalIdempotence) {
  Rng rng(109);
  for (int i = 0; i < 200; ++i) {
    for (ParamScalar v : {rng.rational(), rng.prime_field(5), rng.laurent(), rng.ratfunc(kQ)}) {
      EXPECT_EQ(v.canonicalized(), v);
    }
  }
}

TEST(ScalarProperties, ParsePrintRoundTrip) {
  Rng rng(110);
  FlavorSpec rq{Flavor::RatFunc, 0, kQ};
  FlavorSpec rf2{Flavor::RatFunc, 0, kF2};
  FlavorSpec f7{Flavor::PrimeField, 7, {}};
  for (int i = 0; i < 200; ++i) {
    ParamScalar a = rng.rational();
    EXPECT_EQ(ParamScalar::parse(a.to_string(), kRationalSpec), a);
    ParamScalar b = rng.laurent();
    EXPECT_EQ(ParamScalar::parse(b.to_string(), kLaurentSpec), b);
    ParamScalar c = rng.ratfunc(kQ);
    EXPECT_EQ(ParamScalar::parse(c.to_string(), rq), c);
    ParamScalar d = rng.ratfunc(kF2);
    EXPECT_EQ(ParamScalar::parse(d.to_string(), rf2), d);
    ParamScalar e = rng.prime_field(7);
    EXPECT_EQ(ParamScalar::parse(e.to_string(), f7), e);
  }
  // pinned canonical forms
  ParamScalar v = ParamScalar::laurent(Rat(3, 2), -1, 2);
  EXPECT_EQ(v.to_string(), "(3/2)*q^-1*h^2");
  EXPECT_EQ(ParamScalar::parse("(3/2)*q^-1*h^2", kLaurentSpec), v);
  ParamScalar w = ParamScalar::ratfunc(kQ, Poly{Rat(1), Rat(0), Rat(1)},
                                       Poly{Rat(0), Rat(0), Rat(0), Rat(1)});
  EXPECT_EQ(w.to_string(), "(s^2+1)/(s^3)");
  EXPECT_EQ(ParamScalar::parse(w.to_string(), rq), w);
}

TEST(Scalars, AutomorphismInverseIsVerified) {
  FieldAutomorphismSpec good = FieldAutomorphismSpec::negate_s(kQ);
  EXPECT_NO_THROW(good.verify_invertible());
  FieldAutomorphismSpec bad{"s->s^2",
                            ParamScalar::ratfunc(kQ, Poly{Rat(0), Rat(0), Rat(1)}, Poly{Rat(1)}),
                            ParamScalar::ratfunc_s(kQ)};
  EXPECT_THROW(bad.verify_invertible(), math_error);
}

TEST(Scalars, InnerDerivationSatisfiesLeibniz) {
  auto tau = FieldAutomorphismSpec::negate_s(kQ);
  auto d = DerivationSpec::inner(ParamScalar::ratfunc_s(kQ));
  std::vector<ParamScalar> probes{ParamScalar::ratfunc_s(kQ),
                                  ParamScalar::ratfunc_const(kQ, Rat(2)),
                                  ParamScalar::ratfunc(kQ, Poly{Rat(1), Rat(1)}, Poly{Rat(1)})};
  EXPECT_NO_THROW(d.verify_leibniz(tau, probes));
}
