#pragma once

// The amalgamated product S = R[x;tau1,delta1] *_R R[y;tau2,delta2] on its
// free word basis: words in {x,y} never contract, coefficients commute left
// through letters one commutation step at a time.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skewalg/endo.hpp"

namespace skewalg {

// Total order: first by length, then alphabetically with x < y.
inline std::strong_ordering word_order_cmp(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() <=> v.size();
  for (size_t i = 0; i < u.size(); ++i)
    if (u[i] != v[i]) return static_cast<int>(u[i]) <=> static_cast<int>(v[i]);
  return std::strong_ordering::equal;
}

struct WordLess {
  bool operator()(const Word& u, const Word& v) const {
    return word_order_cmp(u, v) == std::strong_ordering::less;
  }
};

inline std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (Letter l : w) {
    if (!s.empty()) s += "*";
    s += letter_char(l);
  }
  return s;
}

// Which (tau, delta) each letter carries.
struct LetterMaps {
  EndoName tau_x, tau_y;
  DeltaName delta_x = DeltaName::Zero, delta_y = DeltaName::Zero;

  const EndoName& tau(Letter l) const { return l == Letter::X ? tau_x : tau_y; }
  DeltaName delta(Letter l) const { return l == Letter::X ? delta_x : delta_y; }

  bool operator==(const LetterMaps& o) const {
    return tau_x == o.tau_x && tau_y == o.tau_y && delta_x == o.delta_x && delta_y == o.delta_y;
  }
};

// Terms of w * s with the coefficient moved all the way left: processing the
// word right to left, each letter splits a term via l*s = tau_l(s) l + delta_l(s).
template <class R>
std::vector<std::pair<typename R::Elem, Word>> push_coeff_left(const R& ring,
                                                               const LetterMaps& maps,
                                                               const Word& w,
                                                               const typename R::Elem& s) {
  using Elem = typename R::Elem;
  std::vector<std::pair<Elem, Word>> out;
  if (ring.is_zero(s)) return out;
  // worklist entries: coefficient sitting after the first `take` letters of w
  struct Item {
    Elem coeff;
    size_t take;  // prefix length of w still to traverse
    Word tail;    // letters already emitted to the right of the coefficient
  };
  std::vector<Item> work;
  work.push_back({s, w.size(), {}});
  while (!work.empty()) {
    Item it = std::move(work.back());
    work.pop_back();
    if (ring.is_zero(it.coeff)) continue;
    if (it.take == 0) {
      Word full = it.tail;  // tail already in left-to-right order
      out.emplace_back(std::move(it.coeff), std::move(full));
      continue;
    }
    Letter l = w[it.take - 1];
    // l * c = tau_l(c) l + delta_l(c)
    Elem tc = ring.apply_endo(maps.tau(l), it.coeff);
    if (!ring.is_zero(tc)) {
      Word t;
      t.reserve(it.tail.size() + 1);
      t.push_back(l);
      t.insert(t.end(), it.tail.begin(), it.tail.end());
      work.push_back({std::move(tc), it.take - 1, std::move(t)});
    }
    Elem dc = ring.apply_delta(maps.delta(l), it.coeff);
    if (!ring.is_zero(dc)) work.push_back({std::move(dc), it.take - 1, it.tail});
  }
  return out;
}

// ---------------------------------------------------------------------------

template <class R>
struct WordContext {
  const R* ring = nullptr;
  LetterMaps maps;

  bool operator==(const WordContext& o) const { return ring == o.ring && maps == o.maps; }
};

template <class R>
class WordElement {
 public:
  using Elem = typename R::Elem;

  WordContext<R> ctx;
  std::map<Word, Elem, WordLess> terms;  // no zero coefficients

  static WordElement zero(const WordContext<R>& c) { return {c, {}}; }

  static WordElement from_term(const WordContext<R>& c, Elem coeff, Word w) {
    WordElement e{c, {}};
    if (!c.ring->is_zero(coeff)) e.terms.emplace(std::move(w), std::move(coeff));
    return e;
  }

  static WordElement one(const WordContext<R>& c) {
    return from_term(c, c.ring->one(), {});
  }

  bool is_zero() const { return terms.empty(); }

  void add_term(const Word& w, const Elem& c) {
    const R& ring = *ctx.ring;
    if (ring.is_zero(c)) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
      terms.emplace(w, c);
    } else {
      Elem s = ring.add(it->second, c);
      if (ring.is_zero(s))
        terms.erase(it);
      else
        it->second = std::move(s);
    }
  }

  void check_ctx(const WordElement& g) const {
    if (!(ctx == g.ctx)) throw context_error("word algebra context mismatch");
  }
};

template <class R>
WordElement<R> word_add(const WordElement<R>& f, const WordElement<R>& g) {
  f.check_ctx(g);
  WordElement<R> r = f;
  for (const auto& [w, c] : g.terms) r.add_term(w, c);
  return r;
}

template <class R>
WordElement<R> word_neg(const WordElement<R>& f) {
  WordElement<R> r{f.ctx, {}};
  for (const auto& [w, c] : f.terms) r.terms.emplace(w, f.ctx.ring->neg(c));
  return r;
}

template <class R>
WordElement<R> word_sub(const WordElement<R>& f, const WordElement<R>& g) {
  return word_add(f, word_neg(g));
}

// Concatenate words freely; push each right-hand coefficient left through the
// left-hand word letter by letter.
template <class R>
WordElement<R> word_mul(const WordElement<R>& f, const WordElement<R>& g) {
  f.check_ctx(g);
  const R& ring = *f.ctx.ring;
  WordElement<R> out{f.ctx, {}};
  for (const auto& [wI, rI] : f.terms)
    for (const auto& [wJ, rJ] : g.terms) {
      for (auto& [c, mid] : push_coeff_left(ring, f.ctx.maps, wI, rJ)) {
        Word w = mid;
        w.insert(w.end(), wJ.begin(), wJ.end());
        out.add_term(w, ring.mul(rI, c));
      }
    }
  return out;
}

template <class R>
bool word_equal(const WordElement<R>& f, const WordElement<R>& g) {
  f.check_ctx(g);
  if (f.terms.size() != g.terms.size()) return false;
  auto it = f.terms.begin();
  auto jt = g.terms.begin();
  for (; it != f.terms.end(); ++it, ++jt) {
    if (word_order_cmp(it->first, jt->first) != std::strong_ordering::equal) return false;
    if (!f.ctx.ring->equal(it->second, jt->second)) return false;
  }
  return true;
}

// Leading term under the length-then-alphabetical order.
template <class R>
std::pair<typename R::Elem, Word> leading(const WordElement<R>& f) {
  if (f.is_zero()) throw math_error("leading term of zero");
  auto it = std::prev(f.terms.end());
  return {it->second, it->first};
}

template <class R>
std::string word_element_to_string(const WordElement<R>& f) {
  if (f.is_zero()) return "0";
  const R& ring = *f.ctx.ring;
  std::string out;
  for (const auto& [w, c] : f.terms) {
    if (!out.empty()) out += " + ";
    if (w.empty()) {
      out += "(" + ring.to_string(c) + ")";
    } else {
      out += "(" + ring.to_string(c) + ")*" + word_to_string(w);
    }
  }
  return out;
}

}  // namespace skewalg
