#pragma once

// Constructive ideal reduction over the division-ring presets: division with
// remainder against a generator set, reduction of one-sided generating sets
// to at most two generators, reduction of two-sided ideals to a single
// generator when the derivations are not inner, and an independent
// bounded-degree membership oracle via exact linear algebra over the base
// field.  Every reduction is certified by recorded cofactors that multiply
// out exactly.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewalg/amalgam.hpp"
#include "skewalg/field_ring.hpp"

namespace skewalg {

struct hypothesis_error : math_error {
  using math_error::math_error;
};

enum class Side { Left, Right, TwoSided };

inline const char* side_name(Side s) {
  switch (s) {
    case Side::Left: return "left";
    case Side::Right: return "right";
    case Side::TwoSided: return "two-sided";
  }
  return "?";
}

using FEl = AmalgamElement<FieldRing>;
using FInst = AmalgamInstance<FieldRing>;

struct GeneratorSet {
  const FInst* inst = nullptr;
  Side side = Side::Left;
  std::vector<FEl> gens;

  GeneratorSet(const FInst& I, Side s, std::vector<FEl> g)
      : inst(&I), side(s), gens(std::move(g)) {
    if (!inst->ring().is_division_ring())
      throw math_error("ideal engine requires a division-ring base");
    std::vector<FEl> keep;
    for (auto& e : gens)
      if (!e.is_zero()) keep.push_back(std::move(e));
    gens = std::move(keep);
  }

  bool empty() const { return gens.empty(); }
};

// One summand  left * g_index * right  of a cofactor combination.
struct CofactorTerm {
  FEl left;
  size_t input = 0;
  FEl right;
};

struct Combo {
  std::vector<CofactorTerm> terms;

  static Combo unit(const FInst& I, size_t index) {
    return Combo{{CofactorTerm{FEl::one(I), index, FEl::one(I)}}};
  }

  void scale_left(const ParamScalar& c) {
    for (auto& t : terms) t.left = amalgam_scalar_mul(c, t.left);
  }
  void mul_left(const FEl& e) {
    for (auto& t : terms) t.left = amalgam_mul(e, t.left);
  }
  void mul_right(const FEl& e) {
    for (auto& t : terms) t.right = amalgam_mul(t.right, e);
  }
  void subtract(Combo other) {
    for (auto& t : other.terms) {
      t.left = amalgam_neg(t.left);
      terms.push_back(std::move(t));
    }
  }
  void add(Combo other) {
    for (auto& t : other.terms) terms.push_back(std::move(t));
  }

  // Merge summands that share the generator and the right factor.
  void compress() {
    std::vector<CofactorTerm> merged;
    for (auto& t : terms) {
      if (t.left.is_zero()) continue;
      bool hit = false;
      for (auto& m : merged) {
        if (m.input == t.input && amalgam_equal(m.right, t.right)) {
          m.left = amalgam_add(m.left, t.left);
          hit = true;
          break;
        }
      }
      if (!hit) merged.push_back(std::move(t));
    }
    std::vector<CofactorTerm> out;
    for (auto& m : merged)
      if (!m.left.is_zero()) out.push_back(std::move(m));
    terms = std::move(out);
  }

  FEl evaluate(const FInst& I, const std::vector<FEl>& base) const {
    FEl acc = FEl::zero(I);
    for (const auto& t : terms)
      acc = amalgam_add(acc, amalgam_mul(amalgam_mul(t.left, base[t.input]), t.right));
    return acc;
  }
};

// Cofactor expressions writing each output as a combination of inputs and
// each input as a combination of outputs; verified by exact multiplication.
struct ReductionCertificate {
  Side side = Side::Left;
  const FInst* inst = nullptr;
  std::vector<FEl> inputs;
  std::vector<FEl> outputs;
  std::vector<Combo> outputs_from_inputs;  // indexed like outputs, over inputs
  std::vector<Combo> inputs_from_outputs;  // indexed like inputs, over outputs
  bool hypothesis_unverified = false;

  bool verify() const {
    if (outputs.size() != outputs_from_inputs.size()) return false;
    if (inputs.size() != inputs_from_outputs.size()) return false;
    for (size_t k = 0; k < outputs.size(); ++k)
      if (!amalgam_equal(outputs_from_inputs[k].evaluate(*inst, inputs), outputs[k]))
        return false;
    for (size_t i = 0; i < inputs.size(); ++i)
      if (!amalgam_equal(inputs_from_outputs[i].evaluate(*inst, outputs), inputs[i]))
        return false;
    return true;
  }
};

namespace detail_ideal {

struct Working {
  FEl val;
  Combo combo;  // over the engine's inputs
};

// The leading pair of f in the basis the side works with: hatted words with
// left coefficients for left ideals, plain words for two-sided reduction.
inline std::pair<ParamScalar, ParamScalar> lead_pair(const FEl& f, bool hatted) {
  if (hatted) return hat_leading_pair(f);
  auto dl = degree_leading(f);
  return {dl.lead_x, dl.lead_y};
}

// An achievable leading vector at the working degree, materialized lazily:
// the vector is predictable from tau alone, so the costly products are only
// computed for the directions the solver actually uses.
struct Direction {
  ParamScalar vx, vy;
  const Working* gen = nullptr;
  Word factor;  // empty: lambda*gen; else word multiple on the working side

  FEl materialize(const FInst& I, bool hatted) const {
    if (factor.empty()) return gen->val;
    FEl w = FEl::basis(I, factor[0], static_cast<int>(factor.size()));
    return hatted ? amalgam_mul(w, gen->val) : amalgam_mul(gen->val, w);
  }
  Combo materialize_combo(const FInst& I, bool hatted) const {
    Combo c = gen->combo;
    if (!factor.empty()) {
      FEl w = FEl::basis(I, factor[0], static_cast<int>(factor.size()));
      if (hatted)
        c.mul_left(w);
      else
        c.mul_right(w);
    }
    return c;
  }
};

// One full division pass of f against gens; left ideals subtract
// (coefficient * hatted-word-factor) * g, two-sided reduction subtracts
// coefficient * g * word-factor.  Stops when the leading pair is outside
// the span achievable at its degree.
inline std::pair<Working, Combo> reduce_working(const FInst& I, const Working& f0,
                                                const std::vector<const Working*>& gens,
                                                Side side) {
  const FieldRing& ring = I.ring();
  bool hatted = (side == Side::Left);
  Working f = f0;
  Combo used;  // over the engine inputs (diagnostic; callers mostly use f.combo)
  while (!f.val.is_zero()) {
    int m = f.val.degree();
    auto [s, t] = lead_pair(f.val, hatted);
    std::vector<Direction> dirs;
    // same-degree directions first, then the degree-raising word multiples;
    // within each class, generator order decides ties
    for (const Working* gp : gens) {
      const FEl& g = gp->val;
      if (g.degree() != m) continue;
      auto [u, v] = lead_pair(g, hatted);
      dirs.push_back({u, v, gp, {}});
    }
    for (const Working* gp : gens) {
      const FEl& g = gp->val;
      int n = g.degree();
      if (n < 0 || n >= m) continue;
      auto [u, v] = lead_pair(g, hatted);
      if (n == 0) v = u;  // the empty word extends in both directions
      if (!u.is_zero()) {
        // left side: w xh^(n) = xh^(m) and the coefficient twists through w;
        // two-sided: g x_{n,m} keeps the left coefficient as is
        Word w = word_factor_word(hatted ? WordKind::XHat : WordKind::X, n, m);
        ParamScalar lead = hatted ? ring.apply_endo(endo_from_word(w), u) : u;
        dirs.push_back({lead, ring.zero(), gp, std::move(w)});
      }
      if (!v.is_zero()) {
        Word w = word_factor_word(hatted ? WordKind::YHat : WordKind::Y, n, m);
        ParamScalar lead = hatted ? ring.apply_endo(endo_from_word(w), v) : v;
        dirs.push_back({ring.zero(), lead, gp, std::move(w)});
      }
    }
    // solve (s,t) = sum lambda_j (vx_j, vy_j) with first-nonzero pivoting
    int px = -1;
    for (size_t j = 0; j < dirs.size(); ++j)
      if (!dirs[j].vx.is_zero()) {
        px = static_cast<int>(j);
        break;
      }
    ParamScalar lam_px = ring.zero();
    ParamScalar t_res = t;
    if (!s.is_zero()) {
      if (px < 0) break;  // unachievable leading pair
      lam_px = s / dirs[px].vx;
      t_res = t - lam_px * dirs[px].vy;
    }
    int py = -1;
    ParamScalar eff_y = ring.zero();
    if (!t_res.is_zero()) {
      for (size_t j = 0; j < dirs.size(); ++j) {
        if (static_cast<int>(j) == px) continue;
        ParamScalar eff = dirs[j].vy;
        if (!dirs[j].vx.is_zero()) {
          if (px < 0) continue;  // cannot cancel its x-component
          eff = eff - dirs[j].vx * (dirs[px].vy / dirs[px].vx);
        }
        if (!eff.is_zero()) {
          py = static_cast<int>(j);
          eff_y = eff;
          break;
        }
      }
      if (py < 0) break;  // unachievable leading pair
    }
    ParamScalar lam_py = ring.zero();
    if (!t_res.is_zero()) {
      lam_py = t_res / eff_y;
      if (px >= 0 && !dirs[py].vx.is_zero())
        lam_px = lam_px - lam_py * (dirs[py].vx / dirs[px].vx);
    }
    bool any = false;
    for (auto& [lam, j] : {std::pair<ParamScalar, int>{lam_px, px}, {lam_py, py}}) {
      if (j < 0 || lam.is_zero()) continue;
      any = true;
      FEl pre = dirs[j].materialize(I, hatted);
      f.val = amalgam_sub(f.val, amalgam_scalar_mul(lam, pre));
      Combo c = dirs[j].materialize_combo(I, hatted);
      c.scale_left(lam);
      Combo u = c;
      f.combo.subtract(std::move(c));
      used.add(std::move(u));
    }
    if (!any) break;
    if (f.val.degree() >= m)
      throw math_error("internal: division step did not drop the degree");
  }
  f.combo.compress();
  used.compress();
  return {std::move(f), std::move(used)};
}

inline std::vector<const Working*> views_except(const std::vector<Working>& w, size_t skip) {
  std::vector<const Working*> v;
  for (size_t i = 0; i < w.size(); ++i)
    if (i != skip && !w[i].val.is_zero()) v.push_back(&w[i]);
  return v;
}

inline std::vector<const Working*> views(const std::vector<Working>& w) {
  return views_except(w, w.size());
}

// Saturate the working set: interreduce, then push letter multiples (and for
// two-sided runs, twist commutators) back through division until the leading
// data stops changing.
inline void saturate(const FInst& I, std::vector<Working>& W, Side side, int depth_cap) {
  const FieldRing& ring = I.ring();
  bool changed = true;
  while (changed) {
    changed = false;
    // interreduce
    for (size_t i = 0; i < W.size(); ++i) {
      if (W[i].val.is_zero()) continue;
      auto [red, used] = reduce_working(I, W[i], views_except(W, i), side);
      if (!amalgam_equal(red.val, W[i].val)) {
        W[i] = std::move(red);
        changed = true;
      }
    }
    std::erase_if(W, [](const Working& w) { return w.val.is_zero(); });
    // closure candidates
    std::vector<Working> candidates;
    for (const auto& w : W) {
      if (w.val.degree() >= depth_cap) continue;
      for (Letter l : {Letter::X, Letter::Y}) {
        FEl le = AmalgamElement<FieldRing>::basis(I, l, 1);
        {
          Working c{amalgam_mul(le, w.val), w.combo};
          c.combo.mul_left(le);
          candidates.push_back(std::move(c));
        }
        if (side == Side::TwoSided) {
          Working c{amalgam_mul(w.val, le), w.combo};
          c.combo.mul_right(le);
          candidates.push_back(std::move(c));
        }
      }
      if (side == Side::TwoSided) {
        int n = w.val.degree();
        EndoName tw = tau_alt(n);
        for (const auto& r : ring.check_generators()) {
          // w r - tau^(n)(r) w drops degree; it is the non-inner lever
          FEl re = FEl::embed(I, r);
          Working c{amalgam_sub(amalgam_mul(w.val, re),
                                amalgam_scalar_mul(ring.apply_endo(tw, r), w.val)),
                    w.combo};
          Combo right_part = w.combo;
          right_part.mul_right(re);
          Combo left_part = w.combo;
          left_part.scale_left(ring.apply_endo(tw, r));
          c.combo = std::move(right_part);
          c.combo.subtract(std::move(left_part));
          candidates.push_back(std::move(c));
        }
      }
    }
    for (auto& cand : candidates) {
      if (cand.val.is_zero()) continue;
      auto [red, used] = reduce_working(I, cand, views(W), side);
      if (!red.val.is_zero()) {
        red.combo.compress();
        W.push_back(std::move(red));
        changed = true;
      }
    }
  }
  // deterministic order: by degree, then insertion
  std::stable_sort(W.begin(), W.end(), [](const Working& a, const Working& b) {
    return a.val.degree() < b.val.degree();
  });
}

inline void monicize(const FInst& I, Working& w, bool hatted) {
  const FieldRing& ring = I.ring();
  auto [u, v] = lead_pair(w.val, hatted);
  const ParamScalar& lead = u.is_zero() ? v : u;
  ParamScalar c = ring.invert(lead);
  w.val = amalgam_scalar_mul(c, w.val);
  w.combo.scale_left(c);
}

}  // namespace detail_ideal

// ---------------------------------------------------------------------------
// Mirror support: the word-reversal anti-automorphism fixing R, x and y.
// Valid when tau_l^2 = id, delta_l tau_l + delta_l = 0, tau_l(a_l) = a_l and
// delta_l(a_l) = 0; both shipped presets qualify.  It swaps left and right
// ideals, with no coefficient arithmetic: the left normal form of f, read as
// a right form on the reversed (hatted) words, is psi(f).

inline bool mirror_supported(const FInst& I) {
  const FieldRing& ring = I.ring();
  for (Letter l : {Letter::X, Letter::Y}) {
    const auto& qd = I.quad(l);
    for (const auto& g : ring.check_generators()) {
      ParamScalar tg = ring.apply_endo(qd.tau, g);
      if (!(ring.apply_endo(qd.tau, tg) == g)) return false;
      ParamScalar dt = ring.apply_delta(qd.delta, tg);
      ParamScalar d = ring.apply_delta(qd.delta, g);
      if (!(dt + d).is_zero()) return false;
    }
    if (!(ring.apply_endo(qd.tau, qd.a) == qd.a)) return false;
    if (!ring.apply_delta(qd.delta, qd.a).is_zero()) return false;
  }
  return true;
}

inline FEl mirror_element(const FEl& f) {
  AmalgamRight<FieldRing> r;
  r.inst = f.inst;
  r.r0 = f.r0;
  r.pairs = f.pairs;
  r.trim();
  return to_left_form(r);
}

// ---------------------------------------------------------------------------
// reduce_mod: division with remainder against a generator set.

struct ReduceResult {
  FEl remainder;
  Combo cofactors;  // f = sum cofactors + remainder over G.gens
};

// Division is complete only against a generating set whose leading data is
// saturated (the doubly-generated theorem's Cases), so the public entry point
// saturates first; cofactors stay expressed over the given generators.
inline ReduceResult reduce_mod(const FEl& f, const GeneratorSet& G) {
  const FInst& I = *G.inst;
  if (G.side == Side::Right) {
    if (!mirror_supported(I))
      throw math_error("right-sided reduction unsupported for this instance");
    std::vector<FEl> mirrored;
    for (const auto& g : G.gens) mirrored.push_back(mirror_element(g));
    GeneratorSet GM(I, Side::Left, std::move(mirrored));
    ReduceResult res = reduce_mod(mirror_element(f), GM);
    ReduceResult out{mirror_element(res.remainder), {}};
    for (auto& t : res.cofactors.terms)
      out.cofactors.terms.push_back(
          {mirror_element(t.right), t.input, mirror_element(t.left)});
    return out;
  }
  std::vector<detail_ideal::Working> gens;
  int maxdeg = f.degree();
  for (size_t i = 0; i < G.gens.size(); ++i) {
    gens.push_back({G.gens[i], Combo::unit(I, i)});
    maxdeg = std::max(maxdeg, G.gens[i].degree());
  }
  if (!gens.empty()) detail_ideal::saturate(I, gens, G.side, maxdeg + 4);
  detail_ideal::Working start{f, Combo{}};
  auto [red, used] = detail_ideal::reduce_working(I, start, detail_ideal::views(gens), G.side);
  return {red.val, used};
}

// ---------------------------------------------------------------------------
// Bounded membership oracle: exact linear algebra over the base field.

namespace detail_ideal {

inline std::vector<FEl> words_up_to(const FInst& I, int bound) {
  std::vector<FEl> ws{FEl::one(I)};
  for (int len = 1; len <= bound; ++len) {
    ws.push_back(FEl::basis(I, Letter::X, len));
    ws.push_back(FEl::basis(I, Letter::Y, len));
  }
  return ws;
}

// slot index: 0 -> constant; degree d coefficient of x^(d) -> 2d-1, of
// y^(d) -> 2d
inline void scatter(const FEl& e, std::vector<ParamScalar>& col, size_t rows,
                    const FieldRing& ring) {
  col.assign(rows, ring.zero());
  auto put = [&](size_t slot, const ParamScalar& v) {
    if (slot < rows) col[slot] = v;
  };
  put(0, e.r0);
  for (size_t i = 0; i < e.pairs.size(); ++i) {
    put(2 * (i + 1) - 1, e.pairs[i].first);
    put(2 * (i + 1), e.pairs[i].second);
  }
}

// Solve consistency of A x = b over the field by row echelon.
inline bool linear_system_consistent(std::vector<std::vector<ParamScalar>>& cols,
                                     std::vector<ParamScalar>& rhs, const FieldRing& ring) {
  size_t rows = rhs.size();
  size_t rank_row = 0;
  for (size_t c = 0; c < cols.size() && rank_row < rows; ++c) {
    size_t pivot = rows;
    for (size_t r = rank_row; r < rows; ++r)
      if (!cols[c][r].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot == rows) continue;
    for (size_t cc = c; cc < cols.size(); ++cc) std::swap(cols[cc][pivot], cols[cc][rank_row]);
    std::swap(rhs[pivot], rhs[rank_row]);
    ParamScalar inv = ring.invert(cols[c][rank_row]);
    for (size_t r = rank_row + 1; r < rows; ++r) {
      if (cols[c][r].is_zero()) continue;
      ParamScalar factor = cols[c][r] * inv;
      for (size_t cc = c; cc < cols.size(); ++cc)
        cols[cc][r] = cols[cc][r] - factor * cols[cc][rank_row];
      rhs[r] = rhs[r] - factor * rhs[rank_row];
    }
    ++rank_row;
  }
  for (size_t r = rank_row; r < rows; ++r)
    if (!rhs[r].is_zero()) {
      // the row may still have nonzero A-entries in untouched columns; scan
      bool all_zero = true;
      for (const auto& col : cols)
        if (!col[r].is_zero()) {
          all_zero = false;
          break;
        }
      if (all_zero) return false;
    }
  return true;
}

inline bool is_member_left(const FEl& f, const std::vector<FEl>& gens, int bound) {
  const FInst& I = *f.inst;
  const FieldRing& ring = I.ring();
  std::vector<FEl> products;
  int maxdeg = f.degree();
  for (const auto& w : words_up_to(I, bound))
    for (const auto& g : gens) {
      FEl p = amalgam_mul(w, g);
      maxdeg = std::max(maxdeg, p.degree());
      products.push_back(std::move(p));
    }
  size_t rows = 2 * static_cast<size_t>(std::max(maxdeg, 0)) + 1;
  std::vector<std::vector<ParamScalar>> cols(products.size());
  for (size_t j = 0; j < products.size(); ++j) scatter(products[j], cols[j], rows, ring);
  std::vector<ParamScalar> rhs;
  scatter(f, rhs, rows, ring);
  return linear_system_consistent(cols, rhs, ring);
}

// Right multipliers {1, s} over the central subfield K(s^2) turn bounded
// two-sided combinations into bounded left combinations of g*w' and g*(s w').
inline bool central_subfield_ok(const FInst& I) {
  const FieldRing& ring = I.ring();
  ParamScalar s2 = ring.mul(ring.s(), ring.s());
  for (Letter l : {Letter::X, Letter::Y}) {
    const auto& qd = I.quad(l);
    if (!(ring.apply_endo(qd.tau, s2) == s2)) return false;
    if (!ring.apply_delta(qd.delta, s2).is_zero()) return false;
  }
  return true;
}

}  // namespace detail_ideal

inline bool is_member(const FEl& f, const GeneratorSet& G, int degree_bound) {
  if (degree_bound < 0) throw math_error("negative degree bound");
  const FInst& I = *G.inst;
  if (f.is_zero()) return true;
  switch (G.side) {
    case Side::Left:
      return detail_ideal::is_member_left(f, G.gens, degree_bound);
    case Side::Right: {
      if (!mirror_supported(I))
        throw math_error("right-sided membership unsupported for this instance");
      std::vector<FEl> mirrored;
      for (const auto& g : G.gens) mirrored.push_back(mirror_element(g));
      return detail_ideal::is_member_left(mirror_element(f), mirrored, degree_bound);
    }
    case Side::TwoSided: {
      if (!detail_ideal::central_subfield_ok(I))
        throw math_error("two-sided membership needs s^2 central in the instance");
      std::vector<FEl> family;
      FEl s_el = FEl::embed(I, I.ring().s());
      for (const auto& w : detail_ideal::words_up_to(I, degree_bound))
        for (const auto& g : G.gens) {
          family.push_back(amalgam_mul(g, w));
          family.push_back(amalgam_mul(g, amalgam_mul(s_el, w)));
        }
      return detail_ideal::is_member_left(f, family, degree_bound);
    }
  }
  throw error("bad side");
}

// ---------------------------------------------------------------------------
// minimize_one_sided: at most two generators present the same one-sided ideal.

inline ReductionCertificate minimize_one_sided(const GeneratorSet& G) {
  const FInst& I = *G.inst;
  if (G.empty()) throw math_error("empty or all-zero generating set");
  if (G.side == Side::TwoSided)
    throw math_error("minimize_one_sided expects a one-sided set");
  if (G.side == Side::Right) {
    if (!mirror_supported(I))
      throw math_error("right-sided minimization unsupported for this instance");
    std::vector<FEl> mirrored;
    for (const auto& g : G.gens) mirrored.push_back(mirror_element(g));
    GeneratorSet GM(I, Side::Left, std::move(mirrored));
    ReductionCertificate cert = minimize_one_sided(GM);
    ReductionCertificate out;
    out.side = Side::Right;
    out.inst = &I;
    out.inputs = G.gens;
    for (const auto& p : cert.outputs) out.outputs.push_back(mirror_element(p));
    auto mirror_combo = [](const Combo& c) {
      Combo m;
      for (const auto& t : c.terms)
        m.terms.push_back({mirror_element(t.right), t.input, mirror_element(t.left)});
      return m;
    };
    for (const auto& c : cert.outputs_from_inputs)
      out.outputs_from_inputs.push_back(mirror_combo(c));
    for (const auto& c : cert.inputs_from_outputs)
      out.inputs_from_outputs.push_back(mirror_combo(c));
    if (!out.verify()) throw math_error("internal: mirrored certificate failed to verify");
    return out;
  }

  // a single generator already presents its own ideal
  if (G.gens.size() == 1) {
    ReductionCertificate cert;
    cert.side = G.side;
    cert.inst = &I;
    cert.inputs = G.gens;
    cert.outputs = G.gens;
    cert.outputs_from_inputs = {Combo::unit(I, 0)};
    cert.inputs_from_outputs = {Combo::unit(I, 0)};
    return cert;
  }

  using detail_ideal::Working;
  std::vector<Working> W;
  int maxdeg = 0;
  for (size_t i = 0; i < G.gens.size(); ++i) {
    W.push_back({G.gens[i], Combo::unit(I, i)});
    maxdeg = std::max(maxdeg, G.gens[i].degree());
  }
  int depth = maxdeg + 4;

  for (int attempt = 0; attempt < 2; ++attempt) {
    std::vector<Working> S = W;
    detail_ideal::saturate(I, S, Side::Left, depth);
    if (S.empty()) throw math_error("internal: saturation emptied a nonzero ideal");

    // selection: minimal degree, preferring an element with both hatted
    // leading coordinates nonzero
    size_t best = 0;
    for (size_t i = 0; i < S.size(); ++i) {
      if (S[i].val.degree() < S[best].val.degree()) best = i;
    }
    for (size_t i = 0; i < S.size(); ++i) {
      if (S[i].val.degree() != S[best].val.degree()) continue;
      auto [u, v] = detail_ideal::lead_pair(S[i].val, true);
      if (!u.is_zero() && !v.is_zero()) {
        best = i;
        break;
      }
    }
    std::vector<Working> outs{S[best]};
    detail_ideal::monicize(I, outs[0], true);

    auto reduce_against = [&](const Working& w) {
      std::vector<const Working*> v;
      for (const auto& o : outs) v.push_back(&o);
      Working probe{w.val, Combo{}};
      return detail_ideal::reduce_working(I, probe, v, Side::Left);
    };

    bool ok = true;
    for (const auto& w : S) {
      auto [red, used] = reduce_against(w);
      if (red.val.is_zero()) continue;
      if (outs.size() >= 2) {
        ok = false;
        break;
      }
      // remainder of an ideal element with unreachable leading structure:
      // take it as the second generator; `used` is already expressed over the
      // engine inputs, so p2 = w - used
      Working p2{red.val, w.combo};
      p2.combo.subtract(used);
      p2.combo.compress();
      detail_ideal::monicize(I, p2, true);
      outs.push_back(std::move(p2));
    }
    if (ok) {
      // every input must reduce to zero against the outputs
      ReductionCertificate cert;
      cert.side = Side::Left;
      cert.inst = &I;
      cert.inputs = G.gens;
      for (auto& o : outs) {
        o.combo.compress();
        cert.outputs.push_back(o.val);
        cert.outputs_from_inputs.push_back(o.combo);
      }
      bool inputs_ok = true;
      // cofactors over the OUTPUTS this time
      std::vector<Working> out_as_inputs;
      for (size_t k = 0; k < outs.size(); ++k)
        out_as_inputs.push_back({outs[k].val, Combo::unit(I, k)});
      std::vector<const Working*> vv;
      for (const auto& o : out_as_inputs) vv.push_back(&o);
      for (const auto& g : G.gens) {
        Working probe{g, Combo{}};
        auto [red, used] = detail_ideal::reduce_working(I, probe, vv, Side::Left);
        if (!red.val.is_zero()) {
          inputs_ok = false;
          break;
        }
        Combo c = used;
        c.compress();
        cert.inputs_from_outputs.push_back(std::move(c));
      }
      if (inputs_ok) {
        if (!cert.verify())
          throw math_error("internal: one-sided certificate failed to verify");
        return cert;
      }
    }
    depth += 2;  // raise the depth once, then report honestly
  }
  throw math_error("one-sided minimization did not stabilize at the saturation depth");
}

// ---------------------------------------------------------------------------
// minimize_two_sided: a single generator, under the non-inner hypothesis.

inline ReductionCertificate minimize_two_sided(const GeneratorSet& G) {
  const FInst& I = *G.inst;
  const FieldRing& ring = I.ring();
  if (G.empty()) throw math_error("empty or all-zero generating set");
  if (G.side != Side::TwoSided) throw math_error("minimize_two_sided expects side=2");

  bool unverified = false;
  for (DeltaName d : {I.quad1().delta, I.quad2().delta}) {
    std::optional<bool> inner = ring.delta_is_inner(d);
    if (inner.has_value() && *inner)
      throw hypothesis_error(
          "two-sided reduction refused: a derivation of this instance is inner "
          "(the principal-ideal hypothesis fails)");
    if (!inner.has_value()) unverified = true;
  }

  using detail_ideal::Working;
  std::vector<Working> W;
  int maxdeg = 0;
  for (size_t i = 0; i < G.gens.size(); ++i) {
    W.push_back({G.gens[i], Combo::unit(I, i)});
    maxdeg = std::max(maxdeg, G.gens[i].degree());
  }
  int depth = maxdeg + 4;

  for (int attempt = 0; attempt < 2; ++attempt) {
    std::vector<Working> S = W;
    detail_ideal::saturate(I, S, Side::TwoSided, depth);
    if (S.empty()) throw math_error("internal: saturation emptied a nonzero ideal");

    size_t best = 0;
    for (size_t i = 0; i < S.size(); ++i)
      if (S[i].val.degree() < S[best].val.degree()) best = i;
    Working p = S[best];
    detail_ideal::monicize(I, p, false);
    p.combo.compress();

    std::vector<Working> out_as_inputs{{p.val, Combo::unit(I, 0)}};
    std::vector<const Working*> vv{&out_as_inputs[0]};
    bool ok = true;
    ReductionCertificate cert;
    cert.side = Side::TwoSided;
    cert.inst = &I;
    cert.inputs = G.gens;
    cert.outputs.push_back(p.val);
    cert.outputs_from_inputs.push_back(p.combo);
    cert.hypothesis_unverified = unverified;
    for (const auto& w : S) {
      Working probe{w.val, Combo{}};
      auto [red, used] = detail_ideal::reduce_working(I, probe, vv, Side::TwoSided);
      if (!red.val.is_zero()) {
        ok = false;
        break;
      }
    }
    if (ok) {
      for (const auto& g : G.gens) {
        Working probe{g, Combo{}};
        auto [red, used] = detail_ideal::reduce_working(I, probe, vv, Side::TwoSided);
        if (!red.val.is_zero()) {
          ok = false;
          break;
        }
        Combo c = used;
        c.compress();
        cert.inputs_from_outputs.push_back(std::move(c));
      }
    }
    if (ok) {
      if (!cert.verify())
        throw math_error("internal: two-sided certificate failed to verify");
      return cert;
    }
    depth += 2;
  }
  throw math_error("two-sided minimization did not stabilize at the saturation depth");
}

}  // namespace skewalg
