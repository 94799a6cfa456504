#include "skewalg/word_algebra.hpp"

#include <gtest/gtest.h>

#include "skewalg/skew_poly.hpp"
#include "skewalg/torus.hpp"
#include "test_util.hpp"

using namespace skewalg;
using skewalg::testing::Rng;

namespace {

using WElem = WordElement<TorusRing>;

struct Fixture {
  TorusRing R = TorusRing::generic();
  WordContext<TorusRing> ctx{&R,
                             LetterMaps{EndoName::tau1(), EndoName::tau2(),
                                        DeltaName::Delta1, DeltaName::Delta2}};

  WElem term(TorusElement c, Word w) const { return WElem::from_term(ctx, std::move(c), std::move(w)); }

  WElem random_element(Rng& rng, int max_terms = 3, int max_len = 3) const {
    WElem e = WElem::zero(ctx);
    int n = rng.uniform(1, max_terms);
    for (int i = 0; i < n; ++i) {
      Word w;
      int len = rng.uniform(0, max_len);
      for (int j = 0; j < len; ++j)
        w.push_back(rng.uniform(0, 1) == 0 ? Letter::X : Letter::Y);
      e.add_term(w, rng.torus(R, 2, 2));
    }
    return e;
  }
};

Word make_word(std::initializer_list<Letter> ls) { return Word(ls); }

}  // namespace

TEST(WordOrder, LengthThenAlphabetical) {
  Word x = make_word({Letter::X});
  Word yx = make_word({Letter::Y, Letter::X});
  Word xy = make_word({Letter::X, Letter::Y});
  EXPECT_EQ(word_order_cmp(x, yx), std::strong_ordering::less);
  EXPECT_EQ(word_order_cmp(yx, yx), std::strong_ordering::equal);
  EXPECT_EQ(word_order_cmp(xy, yx), std::strong_ordering::less);
  EXPECT_EQ(word_order_cmp(yx, xy), std::strong_ordering::greater);
}

TEST(WordMul, PushThroughFixedCoefficient) {
  Fixture F;
  // x * (z3 y) = z3 x y: tau1 fixes z3 and delta1 kills it
  WElem lhs = word_mul(F.term(F.R.one(), make_word({Letter::X})),
                       F.term(F.R.gen(3), make_word({Letter::Y})));
  WElem want = F.term(F.R.gen(3), make_word({Letter::X, Letter::Y}));
  EXPECT_TRUE(word_equal(lhs, want));
}

TEST(WordMul, OneIsNeutral) {
  Fixture F;
  Rng rng(401);
  WElem one = WElem::one(F.ctx);
  for (int i = 0; i < 50; ++i) {
    WElem f = F.random_element(rng);
    EXPECT_TRUE(word_equal(word_mul(one, f), f));
    EXPECT_TRUE(word_equal(word_mul(f, one), f));
  }
}

TEST(WordMul, CommutationMatchesSkewRing) {
  Fixture F;
  // x * z1 = z2 x - alpha(z1+z2), viewed in S
  WElem lhs = word_mul(F.term(F.R.one(), make_word({Letter::X})),
                       F.term(F.R.gen(1), {}));
  WElem want = F.term(F.R.gen(2), make_word({Letter::X}));
  want.add_term({}, F.R.scalar_mul(-F.R.alpha(), F.R.add(F.R.gen(1), F.R.gen(2))));
  EXPECT_TRUE(word_equal(lhs, want));
}

TEST(WordMul, Associativity) {
  Fixture F;
  Rng rng(402);
  for (int i = 0; i < 150; ++i) {
    WElem f = F.random_element(rng), g = F.random_element(rng), h = F.random_element(rng);
    ASSERT_TRUE(word_equal(word_mul(word_mul(f, g), h), word_mul(f, word_mul(g, h))));
  }
}

TEST(Leading, Extraction) {
  Fixture F;
  WElem e = F.term(F.R.gen(1), make_word({Letter::X, Letter::Y}));
  e.add_term(make_word({Letter::X}), F.R.gen(2));
  auto [c, w] = leading(e);
  EXPECT_TRUE(F.R.equal(c, F.R.gen(1)));
  EXPECT_EQ(word_order_cmp(w, make_word({Letter::X, Letter::Y})), std::strong_ordering::equal);

  WElem r = F.term(F.R.gen(3), {});
  auto [c2, w2] = leading(r);
  EXPECT_TRUE(F.R.equal(c2, F.R.gen(3)));
  EXPECT_TRUE(w2.empty());

  EXPECT_THROW(leading(WElem::zero(F.ctx)), math_error);
}

// Leading-term law: for monomial-leading f and g, the product's leading term
// is (r_I tau^j(r_J), w_I w_J) with tau^j read off from the letters of w_I.
TEST(Leading, LeadingTermLaw) {
  Fixture F;
  Rng rng(403);
  for (int i = 0; i < 200; ++i) {
    WElem f = F.random_element(rng), g = F.random_element(rng);
    if (f.is_zero() || g.is_zero()) continue;
    auto [rI, wI] = leading(f);
    auto [rJ, wJ] = leading(g);
    WElem prod = word_mul(f, g);
    ASSERT_FALSE(prod.is_zero());
    auto [rp, wp] = leading(prod);
    Word concat = wI;
    concat.insert(concat.end(), wJ.begin(), wJ.end());
    ASSERT_EQ(word_order_cmp(wp, concat), std::strong_ordering::equal);
    TorusElement want = F.R.mul(rI, F.R.apply_endo(endo_from_word(wI), rJ));
    ASSERT_FALSE(F.R.is_zero(want));
    ASSERT_TRUE(F.R.equal(rp, want));
  }
}

// The injections of the two skew-polynomial factors into S are ring maps
// that agree on R.
TEST(Embedding, FactorsEmbedAsRings) {
  Fixture F;
  Rng rng(404);
  SkewContext<TorusRing> c1{&F.R, EndoName::tau1(), DeltaName::Delta1};
  SkewContext<TorusRing> c2{&F.R, EndoName::tau2(), DeltaName::Delta2};

  auto embed = [&](const SkewPoly<TorusRing>& p, Letter l) {
    WElem e = WElem::zero(F.ctx);
    for (size_t i = 0; i < p.coeffs.size(); ++i)
      e.add_term(Word(i, l), p.coeffs[i]);
    return e;
  };

  for (int i = 0; i < 100; ++i) {
    for (Letter l : {Letter::X, Letter::Y}) {
      const auto& ctx = (l == Letter::X) ? c1 : c2;
      SkewPoly<TorusRing> f{ctx, {}}, g{ctx, {}};
      int df = rng.uniform(0, 2), dg = rng.uniform(0, 2);
      for (int j = 0; j <= df; ++j) f.coeffs.push_back(rng.torus(F.R, 2, 2));
      for (int j = 0; j <= dg; ++j) g.coeffs.push_back(rng.torus(F.R, 2, 2));
      f.trim();
      g.trim();
      WElem lhs = embed(skew_mul(f, g), l);
      WElem rhs = word_mul(embed(f, l), embed(g, l));
      ASSERT_TRUE(word_equal(lhs, rhs));
    }
  }
  // both embeddings restrict to the identity on R
  TorusElement r = rng.torus(F.R);
  WElem viaX = embed(SkewPoly<TorusRing>::constant(c1, r), Letter::X);
  WElem viaY = embed(SkewPoly<TorusRing>::constant(c2, r), Letter::Y);
  EXPECT_TRUE(word_equal(viaX, viaY));
}

TEST(WordText, CanonicalForm) {
  Fixture F;
  WElem e = F.term(F.R.gen(1), make_word({Letter::X, Letter::Y, Letter::X}));
  e.add_term(make_word({Letter::Y}), F.R.gen(2));
  EXPECT_EQ(word_element_to_string(e), "(z2)*y + (z1)*x*y*x");
}
