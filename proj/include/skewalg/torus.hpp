#pragma once

// The three-generator quantum torus: Laurent monomials z1^a z2^b z3^c with
// left coefficients, subject to z1 z2 = z2 z1 and z_i z3 = q^-1 z3 z_i.
// Carries the swap automorphism tau1, the automorphism tau2
// (z1 -> z2, z2 -> q^-1 z1, z3 -> z3), and the divided-difference
// tau1-derivation delta1.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skewalg/endo.hpp"
#include "skewalg/scalar.hpp"

namespace skewalg {

struct ExpVec {
  int a = 0, b = 0, c = 0;
  auto operator<=>(const ExpVec&) const = default;
};

class TorusElement {
 public:
  std::map<ExpVec, ParamScalar> terms;  // no zero coefficients

  bool is_zero() const { return terms.empty(); }

  friend bool operator==(const TorusElement& u, const TorusElement& v) {
    return u.terms == v.terms;
  }
};

class TorusRing {
 public:
  using Elem = TorusElement;

  TorusRing(FlavorSpec flavor, ParamScalar qval, std::optional<ParamScalar> alpha)
      : flavor_(flavor), q_(std::move(qval)), alpha_(std::move(alpha)) {
    if (q_.is_zero()) throw math_error("quantum parameter must be nonzero");
  }

  // Generic coefficients: q, h indeterminate over Q, alpha = (h - h^-1)/2.
  static TorusRing generic() {
    FlavorSpec fs{Flavor::ParamLaurent, 0, {}};
    ParamScalar two = ParamScalar::embed_int(fs, 2);
    ParamScalar alpha = (ParamScalar::h_gen() - ParamScalar::h_gen().pow(-1)) / two;
    return TorusRing(fs, ParamScalar::q_gen(), alpha);
  }

  // Specialized coefficients; q and h nonzero, char != 2 required for alpha.
  static TorusRing specialized(const ParamScalar& qv, const ParamScalar& hv) {
    if (qv.is_zero() || hv.is_zero())
      throw math_error("specialization requires nonzero q and h");
    qv.check_same(hv);
    FlavorSpec fs = qv.spec();
    if (fs.flavor == Flavor::PrimeField && fs.p == 2)
      throw math_error("char(k) = 2 is not allowed here");
    ParamScalar two = ParamScalar::embed_int(fs, 2);
    ParamScalar alpha = (hv - hv.inv()) / two;
    return TorusRing(fs, qv, alpha);
  }

  const FlavorSpec& flavor() const { return flavor_; }
  const ParamScalar& q_value() const { return q_; }
  const ParamScalar& alpha() const {
    if (!alpha_) throw math_error("this coefficient flavor has no alpha");
    return *alpha_;
  }
  bool has_alpha() const { return alpha_.has_value(); }

  // (h + h^-1)/2; defined whenever alpha is.
  ParamScalar beta() const {
    if (flavor_.flavor == Flavor::ParamLaurent) {
      ParamScalar two = ParamScalar::embed_int(flavor_, 2);
      return (ParamScalar::h_gen() + ParamScalar::h_gen().pow(-1)) / two;
    }
    // alpha = (h - 1/h)/2 was built from a concrete h; recover beta via
    // beta^2 = alpha^2 + 1.
    throw math_error("beta is derived from h; use beta_from(h)");
  }

  static ParamScalar beta_from(const ParamScalar& hv) {
    ParamScalar two = ParamScalar::embed_int(hv.spec(), 2);
    return (hv + hv.inv()) / two;
  }

  bool same_context(const TorusRing& o) const { return flavor_ == o.flavor_ && q_ == o.q_; }

  Elem zero() const { return {}; }

  Elem one() const { return monomial(ParamScalar::one(flavor_), {0, 0, 0}); }

  Elem from_int(long n) const { return monomial(ParamScalar::embed_int(flavor_, n), {0, 0, 0}); }

  Elem monomial(const ParamScalar& coeff, ExpVec e) const {
    Elem r;
    if (!coeff.is_zero()) r.terms.emplace(e, coeff);
    return r;
  }

  Elem scalar(const ParamScalar& c) const { return monomial(c, {0, 0, 0}); }

  Elem gen(int i, int exp = 1) const {
    ExpVec e;
    if (i == 1) e.a = exp;
    else if (i == 2) e.b = exp;
    else if (i == 3) e.c = exp;
    else throw error("torus generator index must be 1..3");
    return monomial(ParamScalar::one(flavor_), e);
  }

  bool is_zero(const Elem& u) const { return u.terms.empty(); }
  bool equal(const Elem& u, const Elem& v) const { return u.terms == v.terms; }

  Elem add(const Elem& u, const Elem& v) const {
    Elem r = u;
    for (const auto& [e, c] : v.terms) add_term(r, e, c);
    return r;
  }

  Elem neg(const Elem& u) const {
    Elem r;
    for (const auto& [e, c] : u.terms) r.terms.emplace(e, -c);
    return r;
  }

  Elem sub(const Elem& u, const Elem& v) const { return add(u, neg(v)); }

  Elem scalar_mul(const ParamScalar& c, const Elem& u) const {
    Elem r;
    if (c.is_zero()) return r;
    for (const auto& [e, k] : u.terms) {
      ParamScalar ck = c * k;
      if (!ck.is_zero()) r.terms.emplace(e, ck);
    }
    return r;
  }

  // Monomial rule: (a,b,c)*(a',b',c') = q^{c(a'+b')} (a+a', b+b', c+c'),
  // from moving z3^c left past z1^{a'} z2^{b'}.
  Elem mul(const Elem& u, const Elem& v) const {
    Elem r;
    for (const auto& [e1, c1] : u.terms)
      for (const auto& [e2, c2] : v.terms) {
        ExpVec e{e1.a + e2.a, e1.b + e2.b, e1.c + e2.c};
        ParamScalar c = c1 * c2;
        long twist = static_cast<long>(e1.c) * (e2.a + e2.b);
        if (twist != 0) c = c * q_.pow(static_cast<int>(twist));
        add_term(r, e, c);
      }
    return r;
  }

  Elem pow(const Elem& u, int n) const {
    if (n < 0) return pow(invert(u), -n);
    Elem r = one();
    Elem base = u;
    for (; n > 0; n >>= 1) {
      if (n & 1) r = mul(r, base);
      if (n > 1) base = mul(base, base);
    }
    return r;
  }

  // Units are the single-term elements with unit coefficient.
  bool is_unit(const Elem& u) const {
    return u.terms.size() == 1 && u.terms.begin()->second.is_unit();
  }

  Elem invert(const Elem& u) const {
    if (!is_unit(u)) throw math_error("torus element is not a unit: " + to_string(u));
    const auto& [e, c] = *u.terms.begin();
    // (c m)^-1 = m^-1 c^-1; commuting c^-1 (a scalar) is free, and the
    // q-twist from m m^-1 must be cancelled.
    ExpVec ei{-e.a, -e.b, -e.c};
    long twist = static_cast<long>(e.c) * (ei.a + ei.b);
    ParamScalar coeff = c.inv();
    if (twist != 0) coeff = coeff * q_.pow(static_cast<int>(-twist));
    return monomial(coeff, ei);
  }

  bool is_division_ring() const { return false; }

  // --- endomorphisms ------------------------------------------------------

  Elem apply_endo(const EndoName& e, const Elem& u) const {
    Elem r = u;
    for (auto it = e.atoms.rbegin(); it != e.atoms.rend(); ++it) r = apply_atom(*it, r);
    return r;
  }

  Elem apply_delta(DeltaName d, const Elem& u) const {
    switch (d) {
      case DeltaName::Zero:
      case DeltaName::Delta2: return zero();
      case DeltaName::Delta1: return delta1(u);
    }
    throw error("undefined delta name");
  }

  // delta1 = -alpha (z1+z2)(z1-z2)^{-1} (1 - tau1): apply (1 - tau1), divide
  // the antisymmetric (z1,z2)-slice exactly by (z1 - z2) inside the
  // commutative Laurent subring, multiply by (z1+z2), scale by -alpha.
  Elem delta1(const Elem& u) const {
    const ParamScalar& a = alpha();  // throws when the flavor lacks alpha
    Elem w = sub(u, apply_endo(EndoName::tau1(), u));
    // Slice by z3-exponent.
    std::map<int, std::map<std::pair<int, int>, ParamScalar>> slices;
    for (const auto& [e, c] : w.terms) slices[e.c][{e.a, e.b}] = c;
    Elem out;
    for (auto& [cexp, slice] : slices) {
      auto quot = divide_by_z1_minus_z2(slice);
      // multiply by (z1 + z2) in the commutative subring
      std::map<std::pair<int, int>, ParamScalar> prod;
      for (const auto& [e, c] : quot) {
        accumulate(prod, {e.first + 1, e.second}, c);
        accumulate(prod, {e.first, e.second + 1}, c);
      }
      for (const auto& [e, c] : prod) {
        ParamScalar v = -(a * c);
        if (!v.is_zero()) add_term(out, ExpVec{e.first, e.second, cexp}, v);
      }
    }
    return out;
  }

  // --- text ---------------------------------------------------------------

  std::string to_string(const Elem& u) const {
    if (u.terms.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : u.terms) {
      if (!out.empty()) out += " + ";
      std::string mono;
      auto app = [&](const char* g, int exp) {
        if (exp == 0) return;
        if (!mono.empty()) mono += "*";
        mono += g;
        if (exp != 1) mono += "^" + std::to_string(exp);
      };
      app("z1", e.a);
      app("z2", e.b);
      app("z3", e.c);
      std::string cs = coeff_factor_string(c);
      if (mono.empty()) {
        out += cs.empty() ? "1" : cs;
      } else if (cs.empty()) {
        out += mono;
      } else {
        out += cs + "*" + mono;
      }
    }
    return out;
  }

  // The coefficient as a product factor: "" when it prints as 1; a bare
  // monomial like q^-1 when the coefficient is a monic Laurent monomial;
  // otherwise parenthesized.
  std::string coeff_factor_string(const ParamScalar& c) const {
    if (c.is_one()) return "";
    if (c.flavor() == Flavor::ParamLaurent) {
      const auto& t = c.laurent_payload().terms;
      if (t.size() == 1 && t.begin()->second == 1) return c.to_string();
    }
    return paren_wrap(c.to_string());
  }

  // Generator set used by compatibility and homomorphism checks.
  std::vector<Elem> check_generators() const {
    std::vector<Elem> g;
    for (int i = 1; i <= 3; ++i) {
      g.push_back(gen(i, 1));
      g.push_back(gen(i, -1));
    }
    return g;
  }

 private:
  void add_term(Elem& r, ExpVec e, const ParamScalar& c) const {
    if (c.is_zero()) return;
    auto it = r.terms.find(e);
    if (it == r.terms.end()) {
      r.terms.emplace(e, c);
    } else {
      ParamScalar s = it->second + c;
      if (s.is_zero())
        r.terms.erase(it);
      else
        it->second = std::move(s);
    }
  }

  static void accumulate(std::map<std::pair<int, int>, ParamScalar>& m, std::pair<int, int> e,
                         const ParamScalar& c) {
    auto it = m.find(e);
    if (it == m.end()) {
      if (!c.is_zero()) m.emplace(e, c);
    } else {
      ParamScalar s = it->second + c;
      if (s.is_zero())
        m.erase(it);
      else
        it->second = std::move(s);
    }
  }

  // Images of z1, z2, z3 (index 0..2) under one atom.
  std::array<Elem, 3> atom_images(EndoAtom a) const {
    ParamScalar one_c = ParamScalar::one(flavor_);
    switch (a) {
      case EndoAtom::T1:
      case EndoAtom::T1Inv:  // tau1 is an involution
        return {monomial(one_c, {0, 1, 0}), monomial(one_c, {1, 0, 0}),
                monomial(one_c, {0, 0, 1})};
      case EndoAtom::T2:
        return {monomial(one_c, {0, 1, 0}), monomial(q_.pow(-1), {1, 0, 0}),
                monomial(one_c, {0, 0, 1})};
      case EndoAtom::T2Inv:
        return {monomial(q_, {0, 1, 0}), monomial(one_c, {1, 0, 0}),
                monomial(one_c, {0, 0, 1})};
    }
    throw error("bad endo atom");
  }

  // Apply one atom termwise from the generator images; the q-power
  // bookkeeping falls out of the monomial products.
  Elem apply_atom(EndoAtom a, const Elem& u) const {
    auto img = atom_images(a);
    Elem r;
    for (const auto& [e, c] : u.terms) {
      Elem t = scalar(c);
      if (e.a != 0) t = mul(t, pow(img[0], e.a));
      if (e.b != 0) t = mul(t, pow(img[1], e.b));
      if (e.c != 0) t = mul(t, pow(img[2], e.c));
      for (const auto& [te, tc] : t.terms) add_term(r, te, tc);
    }
    return r;
  }

  // Exact division of an antisymmetric commutative Laurent slice by (z1-z2).
  std::map<std::pair<int, int>, ParamScalar> divide_by_z1_minus_z2(
      const std::map<std::pair<int, int>, ParamScalar>& slice) const {
    if (slice.empty()) return {};
    int mina = 0, minb = 0;
    for (const auto& [e, c] : slice) {
      mina = std::min(mina, e.first);
      minb = std::min(minb, e.second);
    }
    // shift to polynomial support
    std::map<std::pair<int, int>, ParamScalar> rem;
    for (const auto& [e, c] : slice) rem[{e.first - mina, e.second - minb}] = c;
    std::map<std::pair<int, int>, ParamScalar> quot;
    while (!rem.empty()) {
      auto lead = rem.rbegin();  // lex max: highest z1-degree first
      auto [ea, eb] = lead->first;
      ParamScalar c = lead->second;
      if (ea == 0)
        throw math_error("internal: slice not divisible by z1 - z2");
      accumulate(quot, {ea - 1 + mina, eb + minb}, c);
      rem.erase(std::prev(rem.end()));
      accumulate(rem, {ea - 1, eb + 1}, c);
    }
    return quot;
  }

  FlavorSpec flavor_;
  ParamScalar q_;
  std::optional<ParamScalar> alpha_;
};

}  // namespace skewalg
