#pragma once

// Skew polynomials R[x; tau, delta] with left coefficients.  The commutation
// rule x r = tau(r) x + delta(r) drives multiplication, the normality checks
// for quadratic quotients, and reduction modulo x^2 - a x - b.

#include <string>
#include <vector>

#include "skewalg/endo.hpp"

namespace skewalg {

template <class R>
struct SkewContext {
  const R* ring = nullptr;
  EndoName tau;
  DeltaName delta = DeltaName::Zero;

  bool operator==(const SkewContext& o) const {
    return ring == o.ring && tau == o.tau && delta == o.delta;
  }
};

template <class R>
class SkewPoly {
 public:
  using Elem = typename R::Elem;

  SkewContext<R> ctx;
  std::vector<Elem> coeffs;  // coeffs[i] is the left coefficient of x^i

  static SkewPoly zero(const SkewContext<R>& c) { return SkewPoly{c, {}}; }

  static SkewPoly constant(const SkewContext<R>& c, Elem r) {
    SkewPoly f{c, {std::move(r)}};
    f.trim();
    return f;
  }

  static SkewPoly monomial(const SkewContext<R>& c, Elem r, int degree) {
    SkewPoly f{c, {}};
    if (!c.ring->is_zero(r)) {
      f.coeffs.assign(degree + 1, c.ring->zero());
      f.coeffs.back() = std::move(r);
    }
    return f;
  }

  static SkewPoly x(const SkewContext<R>& c) { return monomial(c, c.ring->one(), 1); }

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }

  void trim() {
    while (!coeffs.empty() && ctx.ring->is_zero(coeffs.back())) coeffs.pop_back();
  }

  void check_ctx(const SkewPoly& g) const {
    if (!(ctx == g.ctx)) throw context_error("skew polynomial context mismatch");
  }
};

template <class R>
SkewPoly<R> skew_add(const SkewPoly<R>& f, const SkewPoly<R>& g) {
  f.check_ctx(g);
  const R& ring = *f.ctx.ring;
  SkewPoly<R> r{f.ctx, {}};
  size_t n = std::max(f.coeffs.size(), g.coeffs.size());
  r.coeffs.assign(n, ring.zero());
  for (size_t i = 0; i < f.coeffs.size(); ++i) r.coeffs[i] = f.coeffs[i];
  for (size_t i = 0; i < g.coeffs.size(); ++i) r.coeffs[i] = ring.add(r.coeffs[i], g.coeffs[i]);
  r.trim();
  return r;
}

template <class R>
SkewPoly<R> skew_neg(const SkewPoly<R>& f) {
  const R& ring = *f.ctx.ring;
  SkewPoly<R> r = f;
  for (auto& c : r.coeffs) c = ring.neg(c);
  return r;
}

template <class R>
SkewPoly<R> skew_sub(const SkewPoly<R>& f, const SkewPoly<R>& g) {
  return skew_add(f, skew_neg(g));
}

// x * f, one application of the commutation rule per coefficient.
template <class R>
SkewPoly<R> skew_x_times(const SkewPoly<R>& f) {
  const R& ring = *f.ctx.ring;
  if (f.is_zero()) return f;
  SkewPoly<R> r{f.ctx, {}};
  r.coeffs.assign(f.coeffs.size() + 1, ring.zero());
  for (size_t i = 0; i < f.coeffs.size(); ++i) {
    r.coeffs[i + 1] = ring.add(r.coeffs[i + 1], ring.apply_endo(f.ctx.tau, f.coeffs[i]));
    r.coeffs[i] = ring.add(r.coeffs[i], ring.apply_delta(f.ctx.delta, f.coeffs[i]));
  }
  r.trim();
  return r;
}

template <class R>
SkewPoly<R> skew_scalar_mul(const typename R::Elem& c, const SkewPoly<R>& f) {
  const R& ring = *f.ctx.ring;
  SkewPoly<R> r{f.ctx, {}};
  r.coeffs.reserve(f.coeffs.size());
  for (const auto& a : f.coeffs) r.coeffs.push_back(ring.mul(c, a));
  r.trim();
  return r;
}

template <class R>
SkewPoly<R> skew_mul(const SkewPoly<R>& f, const SkewPoly<R>& g) {
  f.check_ctx(g);
  SkewPoly<R> acc = SkewPoly<R>::zero(f.ctx);
  // f * g = sum_i f_i * (x^i * g)
  SkewPoly<R> shifted = g;
  for (size_t i = 0; i < f.coeffs.size(); ++i) {
    acc = skew_add(acc, skew_scalar_mul<R>(f.coeffs[i], shifted));
    if (i + 1 < f.coeffs.size()) shifted = skew_x_times(shifted);
  }
  return acc;
}

template <class R>
bool skew_equal(const SkewPoly<R>& f, const SkewPoly<R>& g) {
  f.check_ctx(g);
  if (f.coeffs.size() != g.coeffs.size()) return false;
  for (size_t i = 0; i < f.coeffs.size(); ++i)
    if (!f.ctx.ring->equal(f.coeffs[i], g.coeffs[i])) return false;
  return true;
}

template <class R>
std::string skew_to_string(const SkewPoly<R>& f) {
  const R& ring = *f.ctx.ring;
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    if (ring.is_zero(f.coeffs[i])) continue;
    if (!out.empty()) out += " + ";
    out += "(" + ring.to_string(f.coeffs[i]) + ")";
    if (i >= 1) out += "*x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quadratic data and the normality (compatibility) conditions.

template <class R>
struct QuadraticData {
  typename R::Elem a;
  typename R::Elem b;
  EndoName tau;
  DeltaName delta = DeltaName::Zero;
};

struct CompatCheck {
  std::string label;
  bool pass = false;
  std::string lhs, rhs;
};

struct CompatReport {
  bool pass = true;
  std::vector<CompatCheck> checks;

  void record(std::string label, bool ok, std::string lhs, std::string rhs) {
    pass = pass && ok;
    checks.push_back({std::move(label), ok, std::move(lhs), std::move(rhs)});
  }

  std::string summary() const {
    std::string s;
    for (const auto& c : checks) {
      s += (c.pass ? "pass  " : "FAIL  ") + c.label;
      if (!c.pass) s += "\n      lhs = " + c.lhs + "\n      rhs = " + c.rhs;
      s += "\n";
    }
    return s;
  }
};

// Checks, inside R[x;tau,delta], that N = x^2 - a x - b satisfies
//   N r = tau^2(r) N           for each check generator r, and
//   N x = (x + tau(a) - a) N.
// The generator-level check suffices: {r : N r = tau^2(r) N} is closed under
// ring operations (and inverses), so it contains the ring the generators
// produce.
template <class R>
CompatReport quadratic_compat_check(const R& ring, const QuadraticData<R>& qd) {
  SkewContext<R> ctx{&ring, qd.tau, qd.delta};
  SkewPoly<R> N = skew_sub(
      skew_sub(SkewPoly<R>::monomial(ctx, ring.one(), 2),
               SkewPoly<R>::monomial(ctx, qd.a, 1)),
      SkewPoly<R>::constant(ctx, qd.b));
  CompatReport rep;
  EndoName tau2 = qd.tau.compose(qd.tau);
  int idx = 0;
  for (const auto& r : ring.check_generators()) {
    SkewPoly<R> lhs = skew_mul(N, SkewPoly<R>::constant(ctx, r));
    SkewPoly<R> rhs = skew_scalar_mul<R>(ring.apply_endo(tau2, r), N);
    bool ok = skew_equal(lhs, rhs);
    rep.record("N*r = tau^2(r)*N at generator #" + std::to_string(idx++) + " (" +
                   ring.to_string(r) + ")",
               ok, skew_to_string(lhs), skew_to_string(rhs));
  }
  SkewPoly<R> lhs = skew_mul(N, SkewPoly<R>::x(ctx));
  typename R::Elem shift = ring.sub(ring.apply_endo(qd.tau, qd.a), qd.a);
  SkewPoly<R> factor = skew_add(SkewPoly<R>::x(ctx), SkewPoly<R>::constant(ctx, shift));
  SkewPoly<R> rhs = skew_mul(factor, N);
  rep.record("N*x = (x + tau(a) - a)*N", skew_equal(lhs, rhs), skew_to_string(lhs),
             skew_to_string(rhs));
  return rep;
}

// The unique representative r0 + r1 x of f modulo <x^2 - a x - b>, by
// top-down substitution x^2 -> a x + b.
template <class R>
SkewPoly<R> quotient_reduce(const SkewPoly<R>& f, const QuadraticData<R>& qd) {
  const R& ring = *f.ctx.ring;
  SkewContext<R> ctx = f.ctx;
  SkewPoly<R> cur = f;
  while (cur.degree() >= 2) {
    int n = cur.degree();
    typename R::Elem lead = cur.coeffs.back();
    cur.coeffs.pop_back();
    cur.trim();
    // lead * x^n = lead * x^{n-2} * (a x + b)  (mod the relator)
    SkewPoly<R> ax_b = skew_add(SkewPoly<R>::monomial(ctx, qd.a, 1),
                                SkewPoly<R>::constant(ctx, qd.b));
    SkewPoly<R> repl = skew_mul(SkewPoly<R>::monomial(ctx, lead, n - 2), ax_b);
    cur = skew_add(cur, repl);
  }
  return cur;
}

}  // namespace skewalg
