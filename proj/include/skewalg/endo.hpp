#pragma once

// Names for the two distinguished endomorphisms, their inverses, and finite
// composites.  Atoms are listed outermost-first: apply() evaluates the last
// atom first, so {T1, T2} names the map r -> tau1(tau2(r)).

#include <string>
#include <vector>

#include "skewalg/scalar.hpp"

namespace skewalg {

enum class Letter : unsigned char { X = 0, Y = 1 };

using Word = std::vector<Letter>;

inline char letter_char(Letter l) { return l == Letter::X ? 'x' : 'y'; }

enum class EndoAtom : unsigned char { T1, T2, T1Inv, T2Inv };

inline EndoAtom atom_inverse(EndoAtom a) {
  switch (a) {
    case EndoAtom::T1: return EndoAtom::T1Inv;
    case EndoAtom::T2: return EndoAtom::T2Inv;
    case EndoAtom::T1Inv: return EndoAtom::T1;
    case EndoAtom::T2Inv: return EndoAtom::T2;
  }
  return EndoAtom::T1;
}

struct EndoName {
  std::vector<EndoAtom> atoms;  // outermost first

  static EndoName identity() { return {}; }
  static EndoName tau1() { return {{EndoAtom::T1}}; }
  static EndoName tau2() { return {{EndoAtom::T2}}; }
  static EndoName tau1_inv() { return {{EndoAtom::T1Inv}}; }
  static EndoName tau2_inv() { return {{EndoAtom::T2Inv}}; }

  bool is_identity() const { return atoms.empty(); }

  EndoName then_outer(EndoAtom a) const {
    EndoName r;
    r.atoms.reserve(atoms.size() + 1);
    r.atoms.push_back(a);
    r.atoms.insert(r.atoms.end(), atoms.begin(), atoms.end());
    return r;
  }

  // Composition: (f.compose(g))(r) = f(g(r)).
  EndoName compose(const EndoName& g) const {
    EndoName r = *this;
    r.atoms.insert(r.atoms.end(), g.atoms.begin(), g.atoms.end());
    return r;
  }

  EndoName inverse() const {
    EndoName r;
    r.atoms.reserve(atoms.size());
    for (auto it = atoms.rbegin(); it != atoms.rend(); ++it)
      r.atoms.push_back(atom_inverse(*it));
    return r;
  }

  bool operator==(const EndoName&) const = default;

  std::string to_string() const {
    if (atoms.empty()) return "id";
    std::string s;
    for (auto a : atoms) {
      if (!s.empty()) s += ".";
      switch (a) {
        case EndoAtom::T1: s += "t1"; break;
        case EndoAtom::T2: s += "t2"; break;
        case EndoAtom::T1Inv: s += "t1^-1"; break;
        case EndoAtom::T2Inv: s += "t2^-1"; break;
      }
    }
    return s;
  }
};

// The alternating composite tau_1 tau_2 tau_1 ... with i factors,
// outermost-first (tau_1 is applied last).
inline EndoName tau_alt(int i) {
  if (i < 0) throw error("tau_alt: negative index");
  EndoName r;
  r.atoms.reserve(static_cast<size_t>(i));
  for (int k = 0; k < i; ++k)
    r.atoms.push_back(k % 2 == 0 ? EndoAtom::T1 : EndoAtom::T2);
  return r;
}

// [[n]]: 1 when n is odd, 2 when n is even.
inline int parity_selector(long n) { return (n % 2 != 0) ? 1 : 2; }

// The composite a coefficient picks up when commuted left through a word,
// reading the word left to right, outermost first.
inline EndoName endo_from_word(const Word& w) {
  EndoName r;
  r.atoms.reserve(w.size());
  for (Letter l : w)
    r.atoms.push_back(l == Letter::X ? EndoAtom::T1 : EndoAtom::T2);
  return r;
}

enum class DeltaName : unsigned char { Zero, Delta1, Delta2 };

inline std::string delta_name_string(DeltaName d) {
  switch (d) {
    case DeltaName::Zero: return "0";
    case DeltaName::Delta1: return "d1";
    case DeltaName::Delta2: return "d2";
  }
  return "?";
}

}  // namespace skewalg
