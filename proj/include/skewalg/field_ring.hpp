#pragma once

// Division-ring base presets: a rational-function field K(s) together with a
// declared automorphism pair (tau1, tau2) and derivation pair (delta1, delta2).
// These feed the one-sided and two-sided ideal theorems.

#include <string>
#include <vector>

#include "skewalg/endo.hpp"
#include "skewalg/scalar.hpp"

namespace skewalg {

class FieldRing {
 public:
  using Elem = ParamScalar;

  FieldRing(std::string name, KField k, FieldAutomorphismSpec tau1, FieldAutomorphismSpec tau2,
            DerivationSpec delta1, DerivationSpec delta2)
      : name_(std::move(name)),
        k_(k),
        tau1_(std::move(tau1)),
        tau2_(std::move(tau2)),
        d1_(std::move(delta1)),
        d2_(std::move(delta2)) {
    flavor_ = FlavorSpec{Flavor::RatFunc, 0, k_};
    tau1_.verify_invertible();
    tau2_.verify_invertible();
    auto probes = check_generators();
    probes.push_back(invert(ParamScalar::ratfunc_s(k_)));
    d1_.verify_leibniz(tau1_, probes);
    d2_.verify_leibniz(tau2_, probes);
  }

  // Q(s) with tau: s -> -s of order 2 and zero derivations.
  static FieldRing qs_order2() {
    KField k{0};
    return FieldRing("QS-order2", k, FieldAutomorphismSpec::negate_s(k),
                     FieldAutomorphismSpec::negate_s(k), DerivationSpec::zero(),
                     DerivationSpec::zero());
  }

  // F_2(s) with tau = id and delta = d/ds (non-inner since tau = id over a
  // commutative field makes every inner derivation zero).
  static FieldRing f2s_dds() {
    KField k{2};
    return FieldRing("F2S-dds", k, FieldAutomorphismSpec::identity(k),
                     FieldAutomorphismSpec::identity(k), DerivationSpec::dds(),
                     DerivationSpec::dds());
  }

  // F2S with the derivations zeroed out: every ideal hypothesis check must
  // reject it (a zero derivation is inner).
  static FieldRing f2s_inner_variant() {
    KField k{2};
    return FieldRing("F2S-zero", k, FieldAutomorphismSpec::identity(k),
                     FieldAutomorphismSpec::identity(k), DerivationSpec::zero(),
                     DerivationSpec::zero());
  }

  const std::string& name() const { return name_; }
  const FlavorSpec& flavor() const { return flavor_; }
  const KField& field() const { return k_; }
  const FieldAutomorphismSpec& tau_spec(int i) const { return i == 1 ? tau1_ : tau2_; }
  const DerivationSpec& delta_spec(int i) const { return i == 1 ? d1_ : d2_; }

  bool same_context(const FieldRing& o) const {
    return name_ == o.name_ && k_ == o.k_;
  }

  Elem zero() const { return ParamScalar::ratfunc_const(k_, Rat(0)); }
  Elem one() const { return ParamScalar::ratfunc_const(k_, Rat(1)); }
  Elem from_int(long n) const { return ParamScalar::ratfunc_const(k_, Rat(n)); }
  Elem s() const { return ParamScalar::ratfunc_s(k_); }

  bool is_zero(const Elem& u) const { return u.is_zero(); }
  bool equal(const Elem& u, const Elem& v) const { return u == v; }

  Elem add(const Elem& u, const Elem& v) const { return u + v; }
  Elem sub(const Elem& u, const Elem& v) const { return u - v; }
  Elem neg(const Elem& u) const { return -u; }
  Elem mul(const Elem& u, const Elem& v) const { return u * v; }
  Elem scalar_mul(const Elem& c, const Elem& u) const { return c * u; }

  bool is_unit(const Elem& u) const { return !u.is_zero(); }
  Elem invert(const Elem& u) const {
    if (u.is_zero()) throw math_error("division by zero");
    return u.inv();
  }
  bool is_division_ring() const { return true; }

  Elem apply_endo(const EndoName& e, const Elem& u) const {
    Elem r = u;
    for (auto it = e.atoms.rbegin(); it != e.atoms.rend(); ++it) {
      switch (*it) {
        case EndoAtom::T1: r = tau1_.apply(r); break;
        case EndoAtom::T2: r = tau2_.apply(r); break;
        case EndoAtom::T1Inv: r = tau1_.apply_inverse(r); break;
        case EndoAtom::T2Inv: r = tau2_.apply_inverse(r); break;
      }
    }
    return r;
  }

  Elem apply_delta(DeltaName d, const Elem& u) const {
    switch (d) {
      case DeltaName::Zero: return zero();
      case DeltaName::Delta1: return d1_.apply(u, tau1_);
      case DeltaName::Delta2: return d2_.apply(u, tau2_);
    }
    throw error("undefined delta name");
  }

  bool delta_is_zero_map(DeltaName d) const {
    switch (d) {
      case DeltaName::Zero: return true;
      case DeltaName::Delta1: return d1_.is_zero_map();
      case DeltaName::Delta2: return d2_.is_zero_map();
    }
    return true;
  }

  // Is the delta named d an inner tau-derivation?  Decidable for the shipped
  // presets: with tau = id over a commutative field, inner means zero.
  // Returns no value when undecided.
  std::optional<bool> delta_is_inner(DeltaName d) const {
    if (delta_is_zero_map(d)) return true;  // delta = 0 is inner (s0 = 0)
    const DerivationSpec& spec = (d == DeltaName::Delta1) ? d1_ : d2_;
    const FieldAutomorphismSpec& tau = (d == DeltaName::Delta1) ? tau1_ : tau2_;
    if (spec.kind == DerivationSpec::Kind::Inner) return true;
    if (tau.apply(s()) == s()) return false;  // tau = id, delta != 0
    return std::nullopt;
  }

  std::string to_string(const Elem& u) const { return u.to_string(); }

  std::vector<Elem> check_generators() const {
    return {s(), from_int(1), ParamScalar::ratfunc(k_, Poly{Rat(1), Rat(1)}, Poly{Rat(1)})};
  }

 private:
  std::string name_;
  KField k_;
  FlavorSpec flavor_;
  FieldAutomorphismSpec tau1_, tau2_;
  DerivationSpec d1_, d2_;
};

}  // namespace skewalg
