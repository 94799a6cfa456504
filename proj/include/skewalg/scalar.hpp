#pragma once

// Exact coefficient arithmetic: arbitrary-precision rationals, prime fields,
// the commutative parameter Laurent ring Q[q^+-1, h^+-1], and univariate
// rational-function fields K(s) with declared automorphisms and derivations.
// All values are immutable after construction and every operation is pure.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace skewalg {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Mixing coefficient flavors is reported, never coerced.
struct flavor_error : error {
  using error::error;
};
struct math_error : error {
  using error::error;
};
struct context_error : error {
  using error::error;
};
struct parse_error : error {
  using error::error;
};

// ---------------------------------------------------------------------------
// Base field selector for polynomial / rational-function coefficients.
// p == 0 means Q; p > 0 means the prime field F_p.

struct KField {
  std::int64_t p = 0;
  bool operator==(const KField&) const = default;
};

inline std::int64_t mod_pos(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

inline std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  a = mod_pos(a, p);
  if (a == 0) throw math_error("division by zero in F_p");
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::swap(t -= q * new_t, new_t);
    std::swap(r -= q * new_r, new_r);
  }
  return mod_pos(t, p);
}

// Normalize a rational into K: identity over Q, residue lift over F_p.
inline Rat k_norm(const KField& k, const Rat& v) {
  if (k.p == 0) return v;
  BigInt num = boost::multiprecision::numerator(v);
  BigInt den = boost::multiprecision::denominator(v);
  BigInt p(k.p);
  BigInt num_r = num % p;
  if (num_r < 0) num_r += p;
  BigInt den_r = den % p;
  if (den_r == 0) throw math_error("denominator vanishes mod p");
  std::int64_t inv = mod_inv(den_r.convert_to<std::int64_t>(), k.p);
  return Rat((num_r * inv) % p);
}

inline Rat k_inv(const KField& k, const Rat& v) {
  if (v == 0) throw math_error("division by zero");
  if (k.p == 0) return Rat(1) / v;
  return Rat(mod_inv(boost::multiprecision::numerator(v).convert_to<std::int64_t>(), k.p));
}

// ---------------------------------------------------------------------------
// Dense univariate polynomials over K.  poly[i] is the coefficient of s^i;
// no trailing zeros; the zero polynomial is the empty vector.

using Poly = std::vector<Rat>;

inline void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int poly_deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

inline Poly poly_const(const KField& k, const Rat& c) {
  Rat v = k_norm(k, c);
  if (v == 0) return {};
  return {v};
}

inline Poly poly_add(const KField& k, const Poly& f, const Poly& g) {
  Poly r(std::max(f.size(), g.size()), Rat(0));
  for (size_t i = 0; i < f.size(); ++i) r[i] = f[i];
  for (size_t i = 0; i < g.size(); ++i) r[i] = k_norm(k, r[i] + g[i]);
  poly_trim(r);
  return r;
}

inline Poly poly_neg(const KField& k, const Poly& f) {
  Poly r = f;
  for (auto& c : r) c = k_norm(k, -c);
  return r;
}

inline Poly poly_sub(const KField& k, const Poly& f, const Poly& g) {
  return poly_add(k, f, poly_neg(k, g));
}

inline Poly poly_mul(const KField& k, const Poly& f, const Poly& g) {
  if (f.empty() || g.empty()) return {};
  Poly r(f.size() + g.size() - 1, Rat(0));
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j) r[i + j] += f[i] * g[j];
  for (auto& c : r) c = k_norm(k, c);
  poly_trim(r);
  return r;
}

inline Poly poly_scale(const KField& k, const Poly& f, const Rat& c) {
  Poly r;
  r.reserve(f.size());
  for (auto& a : f) r.push_back(k_norm(k, a * c));
  poly_trim(r);
  return r;
}

inline std::pair<Poly, Poly> poly_divmod(const KField& k, Poly f, const Poly& g) {
  if (g.empty()) throw math_error("polynomial division by zero");
  Poly q(f.size() > g.size() - 1 ? f.size() - g.size() + 1 : 0, Rat(0));
  Rat lead_inv = k_inv(k, g.back());
  while (poly_deg(f) >= poly_deg(g)) {
    int shift = poly_deg(f) - poly_deg(g);
    Rat c = k_norm(k, f.back() * lead_inv);
    q[shift] = c;
    for (size_t i = 0; i < g.size(); ++i)
      f[shift + i] = k_norm(k, f[shift + i] - c * g[i]);
    poly_trim(f);
  }
  poly_trim(q);
  return {q, f};
}

namespace detail {

// Primitive pseudo-remainder sequence over Z: plain Euclid over Q suffers
// exponential coefficient growth.
using ZPoly = std::vector<BigInt>;

inline void zpoly_trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline BigInt zpoly_content(const ZPoly& f) {
  BigInt c = 0;
  for (const auto& a : f) c = boost::multiprecision::gcd(c, a);
  return c;
}

inline void zpoly_primitive(ZPoly& f) {
  BigInt c = zpoly_content(f);
  if (c > 1)
    for (auto& a : f) a /= c;
}

inline ZPoly zpoly_prem(ZPoly f, const ZPoly& g) {
  while (f.size() >= g.size() && !f.empty()) {
    BigInt lf = f.back();
    BigInt lg = g.back();
    size_t shift = f.size() - g.size();
    for (auto& a : f) a *= lg;
    for (size_t i = 0; i < g.size(); ++i) f[shift + i] -= lf * g[i];
    zpoly_trim(f);
  }
  return f;
}

}  // namespace detail

inline Poly poly_gcd(const KField& k, Poly f, Poly g) {
  if (k.p != 0) {
    while (!g.empty()) {
      Poly r = poly_divmod(k, f, g).second;
      f = std::move(g);
      g = std::move(r);
    }
    if (!f.empty()) f = poly_scale(k, f, k_inv(k, f.back()));  // monic
    return f;
  }
  if (f.empty()) g.swap(f);
  if (g.empty()) {
    if (!f.empty()) f = poly_scale(k, f, k_inv(k, f.back()));
    return f;
  }
  // clear denominators, then a primitive pseudo-remainder sequence
  auto to_z = [](const Poly& p) {
    BigInt lcm = 1;
    for (const auto& c : p)
      lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(c));
    detail::ZPoly z;
    z.reserve(p.size());
    for (const auto& c : p)
      z.push_back(boost::multiprecision::numerator(c) *
                  (lcm / boost::multiprecision::denominator(c)));
    return z;
  };
  detail::ZPoly F = to_z(f), G = to_z(g);
  detail::zpoly_primitive(F);
  detail::zpoly_primitive(G);
  while (!G.empty()) {
    detail::ZPoly R = detail::zpoly_prem(F, G);
    detail::zpoly_primitive(R);
    F = std::move(G);
    G = std::move(R);
  }
  Poly out;
  out.reserve(F.size());
  for (const auto& a : F) out.push_back(Rat(a));
  if (!out.empty()) out = poly_scale(k, out, k_inv(k, out.back()));  // monic
  return out;
}

inline Poly poly_derivative(const KField& k, const Poly& f) {
  if (f.size() <= 1) return {};
  Poly r(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i) r[i - 1] = k_norm(k, f[i] * Rat(i));
  poly_trim(r);
  return r;
}

inline bool poly_is_one(const Poly& f) { return f.size() == 1 && f[0] == 1; }

inline std::string rat_to_string(const Rat& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// Wrap in parentheses unless the string is already one whole paren group.
inline std::string paren_wrap(const std::string& s) {
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    int depth = 0;
    bool whole = true;
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      else if (s[i] == ')') {
        --depth;
        if (depth == 0 && i + 1 != s.size()) {
          whole = false;
          break;
        }
      }
    }
    if (whole) return s;
  }
  return "(" + s + ")";
}

inline std::string poly_to_string(const Poly& f, const std::string& var = "s") {
  if (f.empty()) return "0";
  std::string out;
  for (int i = poly_deg(f); i >= 0; --i) {
    if (f[i] == 0) continue;
    Rat c = f[i];
    bool neg = c < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    Rat a = neg ? Rat(-c) : c;
    bool frac = boost::multiprecision::denominator(a) != 1;
    std::string cs = frac ? "(" + rat_to_string(a) + ")" : rat_to_string(a);
    if (i == 0) {
      out += cs;
    } else {
      if (a != 1) out += cs + "*";
      out += var;
      if (i != 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// ParamScalar: the tagged exact scalar.

enum class Flavor { Rational, PrimeField, ParamLaurent, RatFunc };

inline const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Rational: return "rational";
    case Flavor::PrimeField: return "prime-field";
    case Flavor::ParamLaurent: return "param-laurent";
    case Flavor::RatFunc: return "ratfunc";
  }
  return "?";
}

// Which concrete scalar domain a value (or a whole ring) lives in.
struct FlavorSpec {
  Flavor flavor = Flavor::Rational;
  std::int64_t p = 0;  // PrimeField modulus
  KField field{};      // RatFunc inner field
  bool operator==(const FlavorSpec&) const = default;
};

struct QHExp {
  int q = 0;
  int h = 0;
  auto operator<=>(const QHExp&) const = default;
};

struct FpPayload {
  std::int64_t p = 0;
  std::int64_t r = 0;
  bool operator==(const FpPayload&) const = default;
};

// Finite map from (q-degree, h-degree) to nonzero rationals.
struct LaurentPayload {
  std::map<QHExp, Rat> terms;
  bool operator==(const LaurentPayload&) const = default;
};

// Reduced fraction of polynomials, denominator monic and nonzero.
struct RatFuncPayload {
  KField k;
  Poly num;
  Poly den{Rat(1)};
  bool operator==(const RatFuncPayload&) const = default;
};

class ParamScalar {
 public:
  ParamScalar() = default;

  static ParamScalar rational(Rat v) { return ParamScalar(std::move(v)); }
  static ParamScalar rational(long n, long d = 1) { return ParamScalar(Rat(n, d)); }

  static ParamScalar prime_field(std::int64_t p, std::int64_t v) {
    if (p < 2) throw math_error("prime modulus must be >= 2");
    return ParamScalar(FpPayload{p, mod_pos(v, p)});
  }

  // Laurent monomial c * q^qe * h^he.
  static ParamScalar laurent(const Rat& c, int qe = 0, int he = 0) {
    LaurentPayload pl;
    if (c != 0) pl.terms[{qe, he}] = c;
    return ParamScalar(std::move(pl));
  }
  static ParamScalar q_gen() { return laurent(Rat(1), 1, 0); }
  static ParamScalar h_gen() { return laurent(Rat(1), 0, 1); }

  static ParamScalar ratfunc(KField k, Poly num, Poly den) {
    RatFuncPayload pl{k, std::move(num), std::move(den)};
    normalize_ratfunc(pl);
    return ParamScalar(std::move(pl));
  }
  static ParamScalar ratfunc_s(KField k) { return ratfunc(k, Poly{Rat(0), Rat(1)}, Poly{Rat(1)}); }
  static ParamScalar ratfunc_const(KField k, const Rat& c) {
    return ratfunc(k, poly_const(k, c), Poly{Rat(1)});
  }

  static ParamScalar zero(const FlavorSpec& fs) { return embed_int(fs, 0); }
  static ParamScalar one(const FlavorSpec& fs) { return embed_int(fs, 1); }

  static ParamScalar embed_int(const FlavorSpec& fs, long v) {
    return embed_rational(fs, Rat(v));
  }

  static ParamScalar embed_rational(const FlavorSpec& fs, const Rat& v) {
    switch (fs.flavor) {
      case Flavor::Rational: return rational(v);
      case Flavor::PrimeField: {
        Rat r = k_norm(KField{fs.p}, v);
        return prime_field(fs.p, boost::multiprecision::numerator(r).convert_to<std::int64_t>());
      }
      case Flavor::ParamLaurent: return laurent(v);
      case Flavor::RatFunc: return ratfunc_const(fs.field, v);
    }
    throw flavor_error("bad flavor");
  }

  Flavor flavor() const { return flavor_; }

  FlavorSpec spec() const {
    FlavorSpec fs;
    fs.flavor = flavor_;
    if (flavor_ == Flavor::PrimeField) fs.p = std::get<FpPayload>(v_).p;
    if (flavor_ == Flavor::RatFunc) fs.field = std::get<RatFuncPayload>(v_).k;
    return fs;
  }

  bool is_zero() const {
    switch (flavor_) {
      case Flavor::Rational: return std::get<Rat>(v_) == 0;
      case Flavor::PrimeField: return std::get<FpPayload>(v_).r == 0;
      case Flavor::ParamLaurent: return std::get<LaurentPayload>(v_).terms.empty();
      case Flavor::RatFunc: return std::get<RatFuncPayload>(v_).num.empty();
    }
    return true;
  }

  bool is_one() const {
    switch (flavor_) {
      case Flavor::Rational: return std::get<Rat>(v_) == 1;
      case Flavor::PrimeField: return std::get<FpPayload>(v_).r == 1;
      case Flavor::ParamLaurent: {
        const auto& t = std::get<LaurentPayload>(v_).terms;
        return t.size() == 1 && t.begin()->first == QHExp{0, 0} && t.begin()->second == 1;
      }
      case Flavor::RatFunc: {
        const auto& f = std::get<RatFuncPayload>(v_);
        return poly_is_one(f.num) && poly_is_one(f.den);
      }
    }
    return false;
  }

  friend bool operator==(const ParamScalar& a, const ParamScalar& b) {
    return a.flavor_ == b.flavor_ && a.v_ == b.v_;
  }

  friend ParamScalar operator+(const ParamScalar& a, const ParamScalar& b) {
    a.check_same(b);
    switch (a.flavor_) {
      case Flavor::Rational: return rational(std::get<Rat>(a.v_) + std::get<Rat>(b.v_));
      case Flavor::PrimeField: {
        const auto& x = std::get<FpPayload>(a.v_);
        const auto& y = std::get<FpPayload>(b.v_);
        return prime_field(x.p, x.r + y.r);
      }
      case Flavor::ParamLaurent: {
        LaurentPayload r = std::get<LaurentPayload>(a.v_);
        for (const auto& [e, c] : std::get<LaurentPayload>(b.v_).terms) {
          auto it = r.terms.find(e);
          if (it == r.terms.end()) {
            r.terms.emplace(e, c);
          } else {
            it->second += c;
            if (it->second == 0) r.terms.erase(it);
          }
        }
        return ParamScalar(std::move(r));
      }
      case Flavor::RatFunc: {
        const auto& x = std::get<RatFuncPayload>(a.v_);
        const auto& y = std::get<RatFuncPayload>(b.v_);
        Poly num = poly_add(x.k, poly_mul(x.k, x.num, y.den), poly_mul(x.k, y.num, x.den));
        return ratfunc(x.k, std::move(num), poly_mul(x.k, x.den, y.den));
      }
    }
    throw flavor_error("bad flavor");
  }

  ParamScalar operator-() const {
    switch (flavor_) {
      case Flavor::Rational: return rational(-std::get<Rat>(v_));
      case Flavor::PrimeField: {
        const auto& x = std::get<FpPayload>(v_);
        return prime_field(x.p, -x.r);
      }
      case Flavor::ParamLaurent: {
        LaurentPayload r = std::get<LaurentPayload>(v_);
        for (auto& [e, c] : r.terms) c = -c;
        return ParamScalar(std::move(r));
      }
      case Flavor::RatFunc: {
        const auto& x = std::get<RatFuncPayload>(v_);
        return ratfunc(x.k, poly_neg(x.k, x.num), x.den);
      }
    }
    throw flavor_error("bad flavor");
  }

  friend ParamScalar operator-(const ParamScalar& a, const ParamScalar& b) { return a + (-b); }

  friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
    a.check_same(b);
    switch (a.flavor_) {
      case Flavor::Rational: return rational(std::get<Rat>(a.v_) * std::get<Rat>(b.v_));
      case Flavor::PrimeField: {
        const auto& x = std::get<FpPayload>(a.v_);
        const auto& y = std::get<FpPayload>(b.v_);
        return prime_field(x.p, mod_pos((x.r % x.p) * (y.r % x.p), x.p));
      }
      case Flavor::ParamLaurent: {
        LaurentPayload r;
        for (const auto& [e1, c1] : std::get<LaurentPayload>(a.v_).terms)
          for (const auto& [e2, c2] : std::get<LaurentPayload>(b.v_).terms) {
            QHExp e{e1.q + e2.q, e1.h + e2.h};
            auto it = r.terms.find(e);
            if (it == r.terms.end()) {
              Rat c = c1 * c2;
              if (c != 0) r.terms.emplace(e, std::move(c));
            } else {
              it->second += c1 * c2;
              if (it->second == 0) r.terms.erase(it);
            }
          }
        return ParamScalar(std::move(r));
      }
      case Flavor::RatFunc: {
        const auto& x = std::get<RatFuncPayload>(a.v_);
        const auto& y = std::get<RatFuncPayload>(b.v_);
        return ratfunc(x.k, poly_mul(x.k, x.num, y.num), poly_mul(x.k, x.den, y.den));
      }
    }
    throw flavor_error("bad flavor");
  }

  // Exact division.  Fields divide freely; the Laurent ring divides only
  // when the quotient stays in the ring.
  friend ParamScalar operator/(const ParamScalar& a, const ParamScalar& b) {
    a.check_same(b);
    if (b.is_zero()) throw math_error("division by zero");
    switch (a.flavor_) {
      case Flavor::Rational: return rational(std::get<Rat>(a.v_) / std::get<Rat>(b.v_));
      case Flavor::PrimeField: {
        const auto& y = std::get<FpPayload>(b.v_);
        return a * prime_field(y.p, mod_inv(y.r, y.p));
      }
      case Flavor::ParamLaurent: return laurent_exact_div(a, b);
      case Flavor::RatFunc: {
        const auto& x = std::get<RatFuncPayload>(a.v_);
        const auto& y = std::get<RatFuncPayload>(b.v_);
        return ratfunc(x.k, poly_mul(x.k, x.num, y.den), poly_mul(x.k, x.den, y.num));
      }
    }
    throw flavor_error("bad flavor");
  }

  bool is_unit() const {
    switch (flavor_) {
      case Flavor::Rational:
      case Flavor::PrimeField:
      case Flavor::RatFunc: return !is_zero();
      case Flavor::ParamLaurent: return std::get<LaurentPayload>(v_).terms.size() == 1;
    }
    return false;
  }

  ParamScalar inv() const {
    if (!is_unit()) throw math_error("not a unit: " + to_string());
    return one(spec()) / *this;
  }

  ParamScalar pow(int n) const {
    if (n < 0) return inv().pow(-n);
    ParamScalar r = one(spec());
    ParamScalar base = *this;
    for (; n > 0; n >>= 1) {
      if (n & 1) r = r * base;
      if (n > 1) base = base * base;
    }
    return r;
  }

  const LaurentPayload& laurent_payload() const { return std::get<LaurentPayload>(v_); }
  const RatFuncPayload& ratfunc_payload() const { return std::get<RatFuncPayload>(v_); }
  const Rat& rational_payload() const { return std::get<Rat>(v_); }
  const FpPayload& fp_payload() const { return std::get<FpPayload>(v_); }

  void check_same(const ParamScalar& b) const {
    if (flavor_ != b.flavor_) {
      throw flavor_error(std::string("flavor mismatch: ") + flavor_name(flavor_) + " vs " +
                         flavor_name(b.flavor_));
    }
    if (flavor_ == Flavor::PrimeField &&
        std::get<FpPayload>(v_).p != std::get<FpPayload>(b.v_).p)
      throw flavor_error("prime-field modulus mismatch");
    if (flavor_ == Flavor::RatFunc &&
        !(std::get<RatFuncPayload>(v_).k == std::get<RatFuncPayload>(b.v_).k))
      throw flavor_error("ratfunc base-field mismatch");
  }

  // Re-run canonicalization; canonical values are fixed points.
  ParamScalar canonicalized() const {
    switch (flavor_) {
      case Flavor::Rational: return rational(std::get<Rat>(v_));
      case Flavor::PrimeField: {
        const auto& x = std::get<FpPayload>(v_);
        return prime_field(x.p, x.r);
      }
      case Flavor::ParamLaurent: {
        LaurentPayload r;
        for (const auto& [e, c] : std::get<LaurentPayload>(v_).terms)
          if (c != 0) r.terms.emplace(e, c);
        return ParamScalar(std::move(r));
      }
      case Flavor::RatFunc: {
        const auto& x = std::get<RatFuncPayload>(v_);
        return ratfunc(x.k, x.num, x.den);
      }
    }
    throw flavor_error("bad flavor");
  }

  std::string to_string() const;

  static ParamScalar parse(const std::string& text, const FlavorSpec& fs);

 private:
  explicit ParamScalar(Rat v) : flavor_(Flavor::Rational), v_(std::move(v)) {}
  explicit ParamScalar(FpPayload v) : flavor_(Flavor::PrimeField), v_(std::move(v)) {}
  explicit ParamScalar(LaurentPayload v) : flavor_(Flavor::ParamLaurent), v_(std::move(v)) {}
  explicit ParamScalar(RatFuncPayload v) : flavor_(Flavor::RatFunc), v_(std::move(v)) {}

  static void normalize_ratfunc(RatFuncPayload& f) {
    for (auto& c : f.num) c = k_norm(f.k, c);
    for (auto& c : f.den) c = k_norm(f.k, c);
    poly_trim(f.num);
    poly_trim(f.den);
    if (f.den.empty()) throw math_error("zero denominator");
    if (f.num.empty()) {
      f.den = {Rat(1)};
      return;
    }
    Poly g = poly_gcd(f.k, f.num, f.den);
    if (!poly_is_one(g)) {
      f.num = poly_divmod(f.k, f.num, g).first;
      f.den = poly_divmod(f.k, f.den, g).first;
    }
    Rat lead = f.den.back();
    if (lead != 1) {
      Rat inv = k_inv(f.k, lead);
      f.num = poly_scale(f.k, f.num, inv);
      f.den = poly_scale(f.k, f.den, inv);
    }
  }

  // Exact division in the Laurent ring.  After shifting both operands to
  // minimal polynomial support the quotient is again a polynomial (minimal
  // q- and h-degrees are additive in a domain), so ordinary division as
  // polynomials in q over Q[h] decides exactness.
  static ParamScalar laurent_exact_div(const ParamScalar& a, const ParamScalar& b) {
    const auto& A = std::get<LaurentPayload>(a.v_).terms;
    const auto& B = std::get<LaurentPayload>(b.v_).terms;
    if (A.empty()) return laurent(Rat(0));
    auto min_exps = [](const std::map<QHExp, Rat>& m) {
      int q = m.begin()->first.q, h = m.begin()->first.h;
      for (const auto& [e, c] : m) {
        q = std::min(q, e.q);
        h = std::min(h, e.h);
      }
      return QHExp{q, h};
    };
    QHExp am = min_exps(A), bm = min_exps(B);
    // rows indexed by q-degree, entries are polynomials in h
    auto to_rows = [](const std::map<QHExp, Rat>& m, QHExp base) {
      std::vector<Poly> rows;
      for (const auto& [e, c] : m) {
        size_t qi = static_cast<size_t>(e.q - base.q);
        size_t hi = static_cast<size_t>(e.h - base.h);
        if (rows.size() <= qi) rows.resize(qi + 1);
        if (rows[qi].size() <= hi) rows[qi].resize(hi + 1, Rat(0));
        rows[qi][hi] = c;
      }
      for (auto& r : rows) poly_trim(r);
      return rows;
    };
    KField k{0};
    std::vector<Poly> F = to_rows(A, am), G = to_rows(B, bm);
    while (!G.empty() && G.back().empty()) G.pop_back();
    int dg = static_cast<int>(G.size()) - 1;
    std::vector<Poly> U(F.size() > G.size() - 1 ? F.size() - G.size() + 1 : 0);
    while (true) {
      while (!F.empty() && F.back().empty()) F.pop_back();
      int df = static_cast<int>(F.size()) - 1;
      if (df < dg) break;
      auto [u, rem] = poly_divmod(k, F[df], G[dg]);
      if (!rem.empty()) throw math_error("laurent division is not exact");
      U[df - dg] = u;
      for (int j = 0; j <= dg; ++j)
        F[df - dg + j] = poly_sub(k, F[df - dg + j], poly_mul(k, u, G[j]));
    }
    for (const auto& row : F)
      if (!row.empty()) throw math_error("laurent division is not exact");
    LaurentPayload quot;
    for (size_t qi = 0; qi < U.size(); ++qi)
      for (size_t hi = 0; hi < U[qi].size(); ++hi)
        if (U[qi][hi] != 0)
          quot.terms[{static_cast<int>(qi) + am.q - bm.q,
                      static_cast<int>(hi) + am.h - bm.h}] = U[qi][hi];
    return ParamScalar(std::move(quot));
  }

  Flavor flavor_ = Flavor::Rational;
  std::variant<Rat, FpPayload, LaurentPayload, RatFuncPayload> v_;
};

// ---------------------------------------------------------------------------
// Printing.  Canonical forms re-parse to the same value.

inline std::string ParamScalar::to_string() const {
  switch (flavor_) {
    case Flavor::Rational: return rat_to_string(std::get<Rat>(v_));
    case Flavor::PrimeField: return std::to_string(std::get<FpPayload>(v_).r);
    case Flavor::ParamLaurent: {
      const auto& t = std::get<LaurentPayload>(v_).terms;
      if (t.empty()) return "0";
      std::string out;
      for (const auto& [e, c] : t) {
        if (!out.empty()) out += " + ";
        std::string mono;
        if (e.q != 0) mono += (e.q == 1) ? "q" : "q^" + std::to_string(e.q);
        if (e.h != 0) {
          if (!mono.empty()) mono += "*";
          mono += (e.h == 1) ? "h" : "h^" + std::to_string(e.h);
        }
        if (mono.empty()) {
          out += "(" + rat_to_string(c) + ")";
        } else if (c == 1) {
          out += mono;
        } else {
          out += "(" + rat_to_string(c) + ")*" + mono;
        }
      }
      return out;
    }
    case Flavor::RatFunc: {
      const auto& f = std::get<RatFuncPayload>(v_);
      if (f.num.empty()) return "0";
      if (poly_is_one(f.den)) return poly_to_string(f.num);
      return "(" + poly_to_string(f.num) + ")/(" + poly_to_string(f.den) + ")";
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Scalar expression parser: numbers (int or int/int), the flavor's symbols
// (q,h or s), operators + - * / ^ and parentheses.  Accepts a superset of
// the canonical print form.

namespace detail {

struct ScalarParser {
  const std::string& s;
  size_t i = 0;
  const FlavorSpec& fs;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw parse_error("scalar parse error at offset " + std::to_string(i) + ": " + msg);
  }

  ParamScalar parse_sum() {
    skip();
    ParamScalar acc = parse_term();
    for (;;) {
      skip();
      if (eat('+')) {
        acc = acc + parse_term();
      } else if (i < s.size() && s[i] == '-') {
        ++i;
        acc = acc - parse_term();
      } else {
        return acc;
      }
    }
  }

  ParamScalar parse_term() {
    ParamScalar acc = parse_factor();
    for (;;) {
      skip();
      if (eat('*')) {
        acc = acc * parse_factor();
      } else if (eat('/')) {
        acc = acc / parse_factor();
      } else {
        return acc;
      }
    }
  }

  ParamScalar parse_factor() {
    skip();
    bool neg = false;
    while (eat('-')) neg = !neg;
    ParamScalar base = parse_atom();
    skip();
    if (eat('^')) {
      int e = parse_int();
      base = base.pow(e);
    }
    return neg ? -base : base;
  }

  int parse_int() {
    skip();
    bool neg = eat('-');
    skip();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected integer");
    long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      v = v * 10 + (s[i++] - '0');
    return static_cast<int>(neg ? -v : v);
  }

  ParamScalar parse_atom() {
    skip();
    if (i >= s.size()) fail("unexpected end");
    char c = s[i];
    if (c == '(') {
      ++i;
      ParamScalar v = parse_sum();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt num = parse_bigint();
      if (i < s.size() && s[i] == '/') {
        size_t save = i;
        ++i;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
          BigInt den = parse_bigint();
          return ParamScalar::embed_rational(fs, Rat(num, den));
        }
        i = save;
      }
      return ParamScalar::embed_rational(fs, Rat(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++i;
      if (fs.flavor == Flavor::ParamLaurent) {
        if (c == 'q') return ParamScalar::q_gen();
        if (c == 'h') return ParamScalar::h_gen();
        if (c == 't') return ParamScalar::h_gen().pow(2);
      }
      if (fs.flavor == Flavor::RatFunc && c == 's') return ParamScalar::ratfunc_s(fs.field);
      fail(std::string("unknown symbol '") + c + "' for flavor " + flavor_name(fs.flavor));
    }
    fail("unexpected character");
  }

  BigInt parse_bigint() {
    BigInt v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      ++i;
    }
    return v;
  }
};

}  // namespace detail

inline ParamScalar ParamScalar::parse(const std::string& text, const FlavorSpec& fs) {
  detail::ScalarParser p{text, 0, fs};
  ParamScalar v = p.parse_sum();
  p.skip();
  if (p.i != text.size()) p.fail("trailing input");
  return v;
}

// ---------------------------------------------------------------------------
// specialize: evaluate a generic parameter-Laurent value at a (q,h) point.

inline ParamScalar specialize(const ParamScalar& f,
                              const std::map<std::string, ParamScalar>& assignment) {
  if (f.flavor() != Flavor::ParamLaurent)
    throw flavor_error("specialize expects a param-laurent value");
  std::optional<ParamScalar> qv, hv;
  if (auto it = assignment.find("q"); it != assignment.end()) qv = it->second;
  if (auto it = assignment.find("h"); it != assignment.end()) hv = it->second;
  std::optional<FlavorSpec> target;
  for (const auto& [name, v] : assignment) {
    if (name != "q" && name != "h") throw error("unknown parameter: " + name);
    if (v.is_zero()) throw math_error("zero assigned to an inverted parameter");
    if (target && !(v.spec() == *target)) throw flavor_error("assignment flavors disagree");
    target = v.spec();
  }
  if (!target) throw error("empty specialization");
  ParamScalar acc = ParamScalar::zero(*target);
  for (const auto& [e, c] : f.laurent_payload().terms) {
    ParamScalar term = ParamScalar::embed_rational(*target, c);
    if (e.q != 0) {
      if (!qv) throw error("q occurs but is not assigned");
      term = term * qv->pow(e.q);
    }
    if (e.h != 0) {
      if (!hv) throw error("h occurs but is not assigned");
      term = term * hv->pow(e.h);
    }
    acc = acc + term;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Declared automorphisms and derivations of rational-function fields.

// Substitute a ratfunc value for s in f.
inline ParamScalar ratfunc_subst(const ParamScalar& f, const ParamScalar& image) {
  const auto& fp = f.ratfunc_payload();
  const auto& k = fp.k;
  auto horner = [&](const Poly& p) {
    ParamScalar acc = ParamScalar::ratfunc_const(k, Rat(0));
    for (int i = poly_deg(p); i >= 0; --i)
      acc = acc * image + ParamScalar::ratfunc_const(k, p[i]);
    return acc;
  };
  return horner(fp.num) / horner(fp.den);
}

struct FieldAutomorphismSpec {
  std::string name;
  ParamScalar image_of_s;          // ratfunc flavor
  ParamScalar inverse_image_of_s;  // ratfunc flavor

  ParamScalar apply(const ParamScalar& f) const { return ratfunc_subst(f, image_of_s); }
  ParamScalar apply_inverse(const ParamScalar& f) const {
    return ratfunc_subst(f, inverse_image_of_s);
  }

  // Invertibility must be witnessed, not assumed.
  void verify_invertible() const {
    ParamScalar s = ParamScalar::ratfunc_s(image_of_s.ratfunc_payload().k);
    if (!(apply(inverse_image_of_s) == s) || !(apply_inverse(image_of_s) == s))
      throw math_error("automorphism '" + name + "': inverse check failed on s");
  }

  static FieldAutomorphismSpec identity(KField k) {
    ParamScalar s = ParamScalar::ratfunc_s(k);
    return {"id", s, s};
  }
  static FieldAutomorphismSpec negate_s(KField k) {
    ParamScalar ms = -ParamScalar::ratfunc_s(k);
    return {"s->-s", ms, ms};
  }
};

struct DerivationSpec {
  enum class Kind { Zero, Dds, Inner };
  std::string name;
  Kind kind = Kind::Zero;
  // Inner: delta(r) = tau(r)*s0 - s0*r for this fixed element.
  std::optional<ParamScalar> s0;

  bool is_zero_map() const { return kind == Kind::Zero; }

  ParamScalar apply(const ParamScalar& f, const FieldAutomorphismSpec& tau) const {
    switch (kind) {
      case Kind::Zero: {
        return ParamScalar::ratfunc_const(f.ratfunc_payload().k, Rat(0));
      }
      case Kind::Dds: {
        const auto& fp = f.ratfunc_payload();
        const auto& k = fp.k;
        Poly dn = poly_derivative(k, fp.num);
        Poly dd = poly_derivative(k, fp.den);
        Poly num = poly_sub(k, poly_mul(k, dn, fp.den), poly_mul(k, fp.num, dd));
        return ParamScalar::ratfunc(k, std::move(num), poly_mul(k, fp.den, fp.den));
      }
      case Kind::Inner: {
        return tau.apply(f) * *s0 - *s0 * f;
      }
    }
    throw error("bad derivation kind");
  }

  // Twisted Leibniz law on a finite probe set.
  void verify_leibniz(const FieldAutomorphismSpec& tau, const std::vector<ParamScalar>& probes) const {
    for (const auto& r : probes)
      for (const auto& t : probes) {
        ParamScalar lhs = apply(r * t, tau);
        ParamScalar rhs = tau.apply(r) * apply(t, tau) + apply(r, tau) * t;
        if (!(lhs == rhs))
          throw math_error("derivation '" + name + "' fails the twisted Leibniz law");
      }
  }

  static DerivationSpec zero() { return {"0", Kind::Zero, std::nullopt}; }
  static DerivationSpec dds() { return {"d/ds", Kind::Dds, std::nullopt}; }
  static DerivationSpec inner(ParamScalar s0_) {
    return {"inner", Kind::Inner, std::move(s0_)};
  }
};

// derive: the standalone entry point used by ring presets.
inline ParamScalar derive(const DerivationSpec& d, const ParamScalar& f,
                          const FieldAutomorphismSpec& tau) {
  if (f.flavor() != Flavor::RatFunc) throw flavor_error("derive expects a ratfunc value");
  return d.apply(f, tau);
}

}  // namespace skewalg
