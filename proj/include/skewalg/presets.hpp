#pragma once

// Ready-made amalgam instances: the DAHA instance over the quantum torus and
// the two division-ring presets for the ideal theorems.  A bundle owns its
// base ring, so it is pinned in place (the instance stores a pointer).

#include <memory>
#include <string>

#include "skewalg/amalgam.hpp"
#include "skewalg/field_ring.hpp"
#include "skewalg/torus.hpp"

namespace skewalg {

class DahaBundle {
 public:
  DahaBundle(TorusRing ring, ParamScalar alpha, ParamScalar beta)
      : ring_(std::move(ring)),
        alpha_(std::move(alpha)),
        beta_(std::move(beta)),
        inst_(&ring_,
              QuadraticData<TorusRing>{ring_.zero(), ring_.scalar(beta_ * beta_),
                                       EndoName::tau1(), DeltaName::Delta1},
              QuadraticData<TorusRing>{ring_.zero(), ring_.gen(3, -1), EndoName::tau2(),
                                       DeltaName::Delta2}) {}

  DahaBundle(const DahaBundle&) = delete;
  DahaBundle& operator=(const DahaBundle&) = delete;

  const TorusRing& ring() const { return ring_; }
  const AmalgamInstance<TorusRing>& inst() const { return inst_; }
  const ParamScalar& alpha() const { return alpha_; }
  const ParamScalar& beta() const { return beta_; }

 private:
  TorusRing ring_;
  ParamScalar alpha_, beta_;
  AmalgamInstance<TorusRing> inst_;
};

// Generic parameters q, h over Q; compatibility of both quadratics is
// machine-checked here, not assumed.
inline std::unique_ptr<DahaBundle> make_daha_generic() {
  TorusRing ring = TorusRing::generic();
  ParamScalar alpha = ring.alpha();
  ParamScalar beta = ring.beta();
  auto b = std::make_unique<DahaBundle>(std::move(ring), alpha, beta);
  CompatReport rep = b->inst().validate();
  if (!rep.pass) throw math_error("DAHA instance failed validation:\n" + rep.summary());
  return b;
}

inline std::unique_ptr<DahaBundle> make_daha_specialized(const ParamScalar& qv,
                                                         const ParamScalar& hv) {
  TorusRing ring = TorusRing::specialized(qv, hv);
  ParamScalar alpha = ring.alpha();
  ParamScalar beta = TorusRing::beta_from(hv);
  auto b = std::make_unique<DahaBundle>(std::move(ring), alpha, beta);
  CompatReport rep = b->inst().validate();
  if (!rep.pass) throw math_error("DAHA instance failed validation:\n" + rep.summary());
  return b;
}

class FieldBundle {
 public:
  FieldBundle(FieldRing ring, ParamScalar b, ParamScalar d)
      : ring_(std::move(ring)),
        inst_(&ring_,
              QuadraticData<FieldRing>{ring_.zero(), std::move(b), EndoName::tau1(),
                                       DeltaName::Delta1},
              QuadraticData<FieldRing>{ring_.zero(), std::move(d), EndoName::tau2(),
                                       DeltaName::Delta2}) {}

  FieldBundle(const FieldBundle&) = delete;
  FieldBundle& operator=(const FieldBundle&) = delete;

  const FieldRing& ring() const { return ring_; }
  const AmalgamInstance<FieldRing>& inst() const { return inst_; }

 private:
  FieldRing ring_;
  AmalgamInstance<FieldRing> inst_;
};

// x^2 = s^2 and y^2 = s^2 + 1 over the chosen base.
inline std::unique_ptr<FieldBundle> make_field_bundle(FieldRing ring) {
  ParamScalar s2 = ring.mul(ring.s(), ring.s());
  ParamScalar d = ring.add(s2, ring.one());
  auto b = std::make_unique<FieldBundle>(std::move(ring), s2, d);
  CompatReport rep = b->inst().validate();
  if (!rep.pass)
    throw math_error("field preset failed validation:\n" + rep.summary());
  return b;
}

inline std::unique_ptr<FieldBundle> make_f1() {
  return make_field_bundle(FieldRing::qs_order2());
}
inline std::unique_ptr<FieldBundle> make_f2() {
  return make_field_bundle(FieldRing::f2s_dds());
}
// The hypothesis-violating variant: same quadratics, zero derivations.
inline std::unique_ptr<FieldBundle> make_f2_inner_variant() {
  return make_field_bundle(FieldRing::f2s_inner_variant());
}

}  // namespace skewalg
