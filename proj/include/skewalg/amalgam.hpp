#pragma once

// Q = Q1 *_R Q2 for quadratic extensions Q1 = R[x;tau1,delta1]/<x^2-ax-b>,
// Q2 = R[y;tau2,delta2]/<y^2-cy-d>, in alternating-word normal form
//   r0 + sum_i ( r_i x^(i) + r'_i y^(i) ),
// where x^(i) = xyxy... and y^(i) = yxyx... of length i.  Multiplication
// rewrites to this normal form: expand to coefficient-word terms, push
// interior coefficients left one commutation step at a time, contract every
// doubled letter via x^2 = ax + b, y^2 = cy + d, repeat to a fixpoint.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewalg/endo.hpp"
#include "skewalg/skew_poly.hpp"
#include "skewalg/word_algebra.hpp"

namespace skewalg {

// The alternating word of length `len` starting with `start`.
inline Word basis_word(Letter start, int len) {
  Word w;
  w.reserve(static_cast<size_t>(len));
  for (int i = 0; i < len; ++i)
    w.push_back((i % 2 == 0) == (start == Letter::X) ? Letter::X : Letter::Y);
  return w;
}

template <class R>
class AmalgamInstance {
 public:
  using Elem = typename R::Elem;

  AmalgamInstance(const R* ring, QuadraticData<R> q1, QuadraticData<R> q2)
      : ring_(ring), q1_(std::move(q1)), q2_(std::move(q2)) {
    maps_ = LetterMaps{q1_.tau, q2_.tau, q1_.delta, q2_.delta};
  }

  const R& ring() const { return *ring_; }
  const QuadraticData<R>& quad(Letter l) const { return l == Letter::X ? q1_ : q2_; }
  const QuadraticData<R>& quad1() const { return q1_; }
  const QuadraticData<R>& quad2() const { return q2_; }
  const LetterMaps& maps() const { return maps_; }

  // Both quadratics must pass the normality conditions and both taus must
  // have verified inverses on the check generators.
  CompatReport validate() const {
    CompatReport rep;
    for (const QuadraticData<R>* qd : {&q1_, &q2_}) {
      CompatReport one = quadratic_compat_check(*ring_, *qd);
      for (auto& c : one.checks) rep.record(c.label, c.pass, c.lhs, c.rhs);
    }
    EndoName taus[2] = {q1_.tau, q2_.tau};
    for (int i = 0; i < 2; ++i) {
      EndoName inv = taus[i].inverse();
      bool ok = true;
      for (const auto& g : ring_->check_generators()) {
        ok = ok && ring_->equal(ring_->apply_endo(inv, ring_->apply_endo(taus[i], g)), g);
        ok = ok && ring_->equal(ring_->apply_endo(taus[i], ring_->apply_endo(inv, g)), g);
      }
      rep.record(std::string("tau") + (i == 0 ? "1" : "2") + " invertible on generators", ok,
                 "", "");
    }
    return rep;
  }

  bool operator==(const AmalgamInstance& o) const {
    return ring_ == o.ring_ && maps_ == o.maps_ && ring_->equal(q1_.a, o.q1_.a) &&
           ring_->equal(q1_.b, o.q1_.b) && ring_->equal(q2_.a, o.q2_.a) &&
           ring_->equal(q2_.b, o.q2_.b);
  }

 private:
  const R* ring_;
  QuadraticData<R> q1_, q2_;
  LetterMaps maps_;
};

constexpr int kZeroDegree = -1;  // degree sentinel for the zero element

template <class R>
class AmalgamElement {
 public:
  using Elem = typename R::Elem;

  const AmalgamInstance<R>* inst = nullptr;
  Elem r0;
  // pairs[i-1] = (coefficient of x^(i), coefficient of y^(i)); no trailing
  // all-zero pair.
  std::vector<std::pair<Elem, Elem>> pairs;

  static AmalgamElement zero(const AmalgamInstance<R>& I) {
    return {&I, I.ring().zero(), {}};
  }
  static AmalgamElement embed(const AmalgamInstance<R>& I, Elem r) {
    return {&I, std::move(r), {}};
  }
  static AmalgamElement one(const AmalgamInstance<R>& I) { return embed(I, I.ring().one()); }

  // The basis element coeff * (alternating word of length len starting with l).
  static AmalgamElement basis(const AmalgamInstance<R>& I, Letter l, int len,
                              std::optional<Elem> coeff = std::nullopt) {
    const R& ring = I.ring();
    Elem c = coeff ? *coeff : ring.one();
    AmalgamElement e = zero(I);
    if (len == 0) {
      e.r0 = std::move(c);
      return e;
    }
    if (ring.is_zero(c)) return e;
    e.pairs.assign(static_cast<size_t>(len), {ring.zero(), ring.zero()});
    if (l == Letter::X)
      e.pairs.back().first = std::move(c);
    else
      e.pairs.back().second = std::move(c);
    return e;
  }

  static AmalgamElement x(const AmalgamInstance<R>& I) { return basis(I, Letter::X, 1); }
  static AmalgamElement y(const AmalgamInstance<R>& I) { return basis(I, Letter::Y, 1); }

  int degree() const {
    return pairs.empty() ? (inst->ring().is_zero(r0) ? kZeroDegree : 0)
                         : static_cast<int>(pairs.size());
  }

  bool is_zero() const { return degree() == kZeroDegree; }

  // Coefficient accessors (degree i >= 1).
  const Elem& coeff_x(int i) const { return pairs[static_cast<size_t>(i) - 1].first; }
  const Elem& coeff_y(int i) const { return pairs[static_cast<size_t>(i) - 1].second; }

  void trim() {
    const R& ring = inst->ring();
    while (!pairs.empty() && ring.is_zero(pairs.back().first) &&
           ring.is_zero(pairs.back().second))
      pairs.pop_back();
  }

  void add_term(const Word& w, const Elem& c) {
    const R& ring = inst->ring();
    if (ring.is_zero(c)) return;
    if (w.empty()) {
      r0 = ring.add(r0, c);
      return;
    }
    size_t len = w.size();
    if (pairs.size() < len) pairs.resize(len, {ring.zero(), ring.zero()});
    auto& slot = (w[0] == Letter::X) ? pairs[len - 1].first : pairs[len - 1].second;
    slot = ring.add(slot, c);
    trim();
  }

  void check_inst(const AmalgamElement& g) const {
    if (inst != g.inst && !(*inst == *g.inst))
      throw context_error("amalgam instance mismatch");
  }
};

template <class R>
AmalgamElement<R> amalgam_add(const AmalgamElement<R>& f, const AmalgamElement<R>& g) {
  f.check_inst(g);
  const R& ring = f.inst->ring();
  AmalgamElement<R> r = f;
  r.r0 = ring.add(r.r0, g.r0);
  if (r.pairs.size() < g.pairs.size()) r.pairs.resize(g.pairs.size(), {ring.zero(), ring.zero()});
  for (size_t i = 0; i < g.pairs.size(); ++i) {
    r.pairs[i].first = ring.add(r.pairs[i].first, g.pairs[i].first);
    r.pairs[i].second = ring.add(r.pairs[i].second, g.pairs[i].second);
  }
  r.trim();
  return r;
}

template <class R>
AmalgamElement<R> amalgam_neg(const AmalgamElement<R>& f) {
  const R& ring = f.inst->ring();
  AmalgamElement<R> r = f;
  r.r0 = ring.neg(r.r0);
  for (auto& [a, b] : r.pairs) {
    a = ring.neg(a);
    b = ring.neg(b);
  }
  return r;
}

template <class R>
AmalgamElement<R> amalgam_sub(const AmalgamElement<R>& f, const AmalgamElement<R>& g) {
  return amalgam_add(f, amalgam_neg(g));
}

// Left multiplication by a base-ring element.
template <class R>
AmalgamElement<R> amalgam_scalar_mul(const typename R::Elem& c, const AmalgamElement<R>& f) {
  const R& ring = f.inst->ring();
  AmalgamElement<R> r = AmalgamElement<R>::zero(*f.inst);
  r.r0 = ring.mul(c, f.r0);
  r.pairs.reserve(f.pairs.size());
  for (const auto& [a, b] : f.pairs) r.pairs.push_back({ring.mul(c, a), ring.mul(c, b)});
  r.trim();
  return r;
}

template <class R>
bool amalgam_equal(const AmalgamElement<R>& f, const AmalgamElement<R>& g) {
  f.check_inst(g);
  const R& ring = f.inst->ring();
  if (f.pairs.size() != g.pairs.size()) return false;
  if (!ring.equal(f.r0, g.r0)) return false;
  for (size_t i = 0; i < f.pairs.size(); ++i)
    if (!ring.equal(f.pairs[i].first, g.pairs[i].first) ||
        !ring.equal(f.pairs[i].second, g.pairs[i].second))
      return false;
  return true;
}

namespace detail {

// Rewrite raw (coefficient, word) terms to normal form.  Each contraction of
// a doubled letter strictly shortens every spawned word, so this terminates.
template <class R>
void reduce_terms_into(const AmalgamInstance<R>& I,
                       std::vector<std::pair<typename R::Elem, Word>>&& work,
                       AmalgamElement<R>& acc) {
  using Elem = typename R::Elem;
  const R& ring = I.ring();
  while (!work.empty()) {
    auto [coeff, w] = std::move(work.back());
    work.pop_back();
    if (ring.is_zero(coeff)) continue;
    size_t dbl = w.size();
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == w[i + 1]) {
        dbl = i;
        break;
      }
    }
    if (dbl == w.size()) {
      acc.add_term(w, coeff);
      continue;
    }
    Letter l = w[dbl];
    const QuadraticData<R>& qd = I.quad(l);
    Word prefix(w.begin(), w.begin() + dbl);
    Word suffix(w.begin() + dbl + 2, w.end());
    // u ll v -> u a l v + u b v, then push a (resp. b) left through u.
    if (!ring.is_zero(qd.a)) {
      for (auto& [c2, u2] : push_coeff_left(ring, I.maps(), prefix, qd.a)) {
        Word nw = u2;
        nw.push_back(l);
        nw.insert(nw.end(), suffix.begin(), suffix.end());
        work.emplace_back(ring.mul(coeff, c2), std::move(nw));
      }
    }
    if (!ring.is_zero(qd.b)) {
      for (auto& [c2, u2] : push_coeff_left(ring, I.maps(), prefix, qd.b)) {
        Word nw = u2;
        nw.insert(nw.end(), suffix.begin(), suffix.end());
        work.emplace_back(ring.mul(coeff, c2), std::move(nw));
      }
    }
  }
}

}  // namespace detail

template <class R>
AmalgamElement<R> amalgam_mul(const AmalgamElement<R>& f, const AmalgamElement<R>& g) {
  f.check_inst(g);
  using Elem = typename R::Elem;
  const R& ring = f.inst->ring();
  const AmalgamInstance<R>& I = *f.inst;

  // enumerate basis terms of an element
  auto for_terms = [&](const AmalgamElement<R>& e, auto&& fn) {
    if (!ring.is_zero(e.r0)) fn(e.r0, Word{});
    for (size_t i = 0; i < e.pairs.size(); ++i) {
      int len = static_cast<int>(i) + 1;
      if (!ring.is_zero(e.pairs[i].first)) fn(e.pairs[i].first, basis_word(Letter::X, len));
      if (!ring.is_zero(e.pairs[i].second)) fn(e.pairs[i].second, basis_word(Letter::Y, len));
    }
  };

  AmalgamElement<R> acc = AmalgamElement<R>::zero(I);
  std::vector<std::pair<Elem, Word>> work;
  for_terms(f, [&](const Elem& rI, const Word& wI) {
    for_terms(g, [&](const Elem& rJ, const Word& wJ) {
      // (rI wI)(rJ wJ): push rJ left through wI, then concatenate with wJ.
      for (auto& [c, mid] : push_coeff_left(ring, I.maps(), wI, rJ)) {
        Word w = mid;
        w.insert(w.end(), wJ.begin(), wJ.end());
        work.emplace_back(ring.mul(rI, c), std::move(w));
      }
    });
  });
  detail::reduce_terms_into(I, std::move(work), acc);
  return acc;
}

template <class R>
AmalgamElement<R> amalgam_pow(const AmalgamElement<R>& f, int n) {
  if (n < 0) throw math_error("negative power of an amalgam element");
  AmalgamElement<R> r = AmalgamElement<R>::one(*f.inst);
  for (int i = 0; i < n; ++i) r = amalgam_mul(r, f);
  return r;
}

// ---------------------------------------------------------------------------
// Degree and leading pair.

template <class R>
struct DegreeLeading {
  int degree = kZeroDegree;
  typename R::Elem lead_x;  // coefficient of x^(n)
  typename R::Elem lead_y;  // coefficient of y^(n)
};

template <class R>
DegreeLeading<R> degree_leading(const AmalgamElement<R>& f) {
  const R& ring = f.inst->ring();
  DegreeLeading<R> d{kZeroDegree, ring.zero(), ring.zero()};
  int n = f.degree();
  d.degree = n;
  if (n > 0) {
    d.lead_x = f.pairs.back().first;
    d.lead_y = f.pairs.back().second;
  } else if (n == 0) {
    d.lead_x = f.r0;
  }
  return d;
}

// Leading pair in the hatted basis {1, xh^(i), yh^(i)}: the word x^(n) ends
// with x when n is odd (so it is xh^(n)) and with y when n is even (yh^(n)).
template <class R>
std::pair<typename R::Elem, typename R::Elem> hat_leading_pair(const AmalgamElement<R>& f) {
  const R& ring = f.inst->ring();
  int n = f.degree();
  if (n <= 0) return {f.r0, ring.zero()};
  if (n % 2 == 1) return {f.pairs.back().first, f.pairs.back().second};
  return {f.pairs.back().second, f.pairs.back().first};
}

// ---------------------------------------------------------------------------
// Word factors: the unique alternating completion words.

enum class WordKind { X, Y, XHat, YHat };

// The unique alternating word w with x^(n) w = x^(m) (kind X), y^(n) w =
// y^(m) (kind Y), w xh^(n) = xh^(m) (kind XHat), or w yh^(n) = yh^(m).
inline Word word_factor_word(WordKind kind, int n, int m) {
  if (n < 0 || m < n) throw math_error("word_factor requires 0 <= n <= m");
  if (m == n) return {};
  Letter start;
  switch (kind) {
    case WordKind::X: start = (n % 2 == 0) ? Letter::X : Letter::Y; break;
    case WordKind::Y: start = (n % 2 == 0) ? Letter::Y : Letter::X; break;
    case WordKind::XHat: start = (m % 2 == 1) ? Letter::X : Letter::Y; break;
    case WordKind::YHat: start = (m % 2 == 1) ? Letter::Y : Letter::X; break;
  }
  return basis_word(start, m - n);
}

template <class R>
AmalgamElement<R> word_factor(const AmalgamInstance<R>& I, WordKind kind, int n, int m) {
  Word w = word_factor_word(kind, n, m);
  if (w.empty()) return AmalgamElement<R>::one(I);
  return AmalgamElement<R>::basis(I, w[0], static_cast<int>(w.size()));
}

// ---------------------------------------------------------------------------
// Right-coefficient form on the hatted basis {1, xh^(i), yh^(i)}.

template <class R>
class AmalgamRight {
 public:
  using Elem = typename R::Elem;

  const AmalgamInstance<R>* inst = nullptr;
  Elem r0;
  // pairs[i-1] = (right coefficient of xh^(i), of yh^(i))
  std::vector<std::pair<Elem, Elem>> pairs;

  static AmalgamRight zero(const AmalgamInstance<R>& I) {
    return {&I, I.ring().zero(), {}};
  }

  void trim() {
    const R& ring = inst->ring();
    while (!pairs.empty() && ring.is_zero(pairs.back().first) &&
           ring.is_zero(pairs.back().second))
      pairs.pop_back();
  }
};

// The hatted basis word xh^(n) / yh^(n) as a plain word.
inline Word hat_basis_word(WordKind kind, int n) {
  if (kind == WordKind::XHat) return basis_word(n % 2 == 1 ? Letter::X : Letter::Y, n);
  return basis_word(n % 2 == 1 ? Letter::Y : Letter::X, n);
}

template <class R>
AmalgamElement<R> to_left_form(const AmalgamRight<R>& f) {
  const AmalgamInstance<R>& I = *f.inst;
  const R& ring = I.ring();
  AmalgamElement<R> acc = AmalgamElement<R>::embed(I, f.r0);
  for (size_t i = 0; i < f.pairs.size(); ++i) {
    int n = static_cast<int>(i) + 1;
    if (!ring.is_zero(f.pairs[i].first)) {
      Word w = hat_basis_word(WordKind::XHat, n);
      AmalgamElement<R> word_el = AmalgamElement<R>::basis(I, w[0], n);
      acc = amalgam_add(acc,
                        amalgam_mul(word_el, AmalgamElement<R>::embed(I, f.pairs[i].first)));
    }
    if (!ring.is_zero(f.pairs[i].second)) {
      Word w = hat_basis_word(WordKind::YHat, n);
      AmalgamElement<R> word_el = AmalgamElement<R>::basis(I, w[0], n);
      acc = amalgam_add(acc,
                        amalgam_mul(word_el, AmalgamElement<R>::embed(I, f.pairs[i].second)));
    }
  }
  return acc;
}

// Exact change of basis by degree descent: at each degree the left leading
// coefficient r on a word w corresponds to the right coefficient
// tau_w^{-1}(r), since w * c = tau_w(c) w + [lower].
template <class R>
AmalgamRight<R> to_right_form(const AmalgamElement<R>& f) {
  const AmalgamInstance<R>& I = *f.inst;
  const R& ring = I.ring();
  AmalgamRight<R> out = AmalgamRight<R>::zero(I);
  AmalgamElement<R> g = f;
  while (g.degree() >= 1) {
    int n = g.degree();
    if (static_cast<int>(out.pairs.size()) < n)
      out.pairs.resize(static_cast<size_t>(n), {ring.zero(), ring.zero()});
    AmalgamElement<R> sub = AmalgamElement<R>::zero(I);
    for (Letter start : {Letter::X, Letter::Y}) {
      const typename R::Elem& lead =
          (start == Letter::X) ? g.pairs.back().first : g.pairs.back().second;
      if (ring.is_zero(lead)) continue;
      Word w = basis_word(start, n);
      EndoName tw = endo_from_word(w);
      typename R::Elem c = ring.apply_endo(tw.inverse(), lead);
      // hatted slot: w ends with x -> xh^(n), with y -> yh^(n)
      bool ends_x = (w.back() == Letter::X);
      auto& slot = ends_x ? out.pairs[static_cast<size_t>(n) - 1].first
                          : out.pairs[static_cast<size_t>(n) - 1].second;
      slot = ring.add(slot, c);
      sub = amalgam_add(sub, amalgam_mul(AmalgamElement<R>::basis(I, start, n),
                                         AmalgamElement<R>::embed(I, c)));
    }
    AmalgamElement<R> next = amalgam_sub(g, sub);
    if (next.degree() >= n)
      throw math_error("internal: right-form descent did not reduce degree");
    g = std::move(next);
  }
  out.r0 = g.r0;
  out.trim();
  return out;
}

// ---------------------------------------------------------------------------
// Printing.

enum class AmalgamNotation { IndexedBasis, LetterProducts };

template <class R>
std::string amalgam_to_string(const AmalgamElement<R>& f,
                              AmalgamNotation notation = AmalgamNotation::IndexedBasis) {
  const R& ring = f.inst->ring();
  if (f.is_zero()) return "0";
  if (f.degree() == 0) return ring.to_string(f.r0);
  std::string out;
  auto emit = [&](const typename R::Elem& c, const std::string& word_str) {
    if (ring.is_zero(c)) return;
    if (!out.empty()) out += " + ";
    if (word_str.empty()) {
      out += paren_wrap(ring.to_string(c));
    } else if (ring.equal(c, ring.one())) {
      out += word_str;
    } else {
      out += paren_wrap(ring.to_string(c)) + "*" + word_str;
    }
  };
  emit(f.r0, "");
  for (size_t i = 0; i < f.pairs.size(); ++i) {
    int n = static_cast<int>(i) + 1;
    std::string xs, ys;
    if (notation == AmalgamNotation::IndexedBasis) {
      xs = "X" + std::to_string(n);
      ys = "Y" + std::to_string(n);
    } else {
      xs = word_to_string(basis_word(Letter::X, n));
      ys = word_to_string(basis_word(Letter::Y, n));
    }
    emit(f.pairs[i].first, xs);
    emit(f.pairs[i].second, ys);
  }
  return out;
}

template <class R>
std::string amalgam_right_to_string(const AmalgamRight<R>& f) {
  const R& ring = f.inst->ring();
  std::string out;
  auto emit = [&](const std::string& word_str, const typename R::Elem& c) {
    if (ring.is_zero(c)) return;
    if (!out.empty()) out += " + ";
    if (word_str.empty())
      out += paren_wrap(ring.to_string(c));
    else
      out += word_str + "*" + paren_wrap(ring.to_string(c));
  };
  emit("", f.r0);
  for (size_t i = 0; i < f.pairs.size(); ++i) {
    int n = static_cast<int>(i) + 1;
    emit(word_to_string(hat_basis_word(WordKind::XHat, n)), f.pairs[i].first);
    emit(word_to_string(hat_basis_word(WordKind::YHat, n)), f.pairs[i].second);
  }
  return out.empty() ? "0" : out;
}

}  // namespace skewalg
