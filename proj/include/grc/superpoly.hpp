#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "grc/rational.hpp"

namespace grc {

enum class Parity : std::uint8_t { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) & 1);
}
inline int bit(Parity p) { return static_cast<int>(p); }
// (-1)^{p(a) p(b)}
inline int koszul(Parity a, Parity b) { return (bit(a) & bit(b)) ? -1 : 1; }

// Coordinate names of the (1|1) superstring. The contact chapter uses (t, th),
// the general one (x, xi); the algebra of functions is the same.
enum class Coords : std::uint8_t { contact, vect };

// t^deg * th^odd
struct Mono {
  unsigned deg = 0;
  unsigned odd = 0;
  auto operator<=>(const Mono&) const = default;
};

// Polynomial in one even and one odd variable with rational coefficients.
// The odd variable squares to zero, so odd <= 1 in every stored term.
class SuperPoly {
 public:
  using Terms = std::map<Mono, Rat>;

  SuperPoly() = default;
  explicit SuperPoly(const Rat& c) { add_term({0, 0}, c); }
  SuperPoly(Mono m, const Rat& c) { add_term(m, c); }

  static SuperPoly mono(unsigned deg, unsigned odd) { return SuperPoly({deg, odd}, Rat(1)); }
  static SuperPoly one() { return mono(0, 0); }
  static SuperPoly even_var() { return mono(1, 0); }
  static SuperPoly odd_var() { return mono(0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rat coeff(Mono m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void add_term(Mono m, const Rat& c) {
    if (m.odd > 1) return;
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // Parity of a homogeneous element; nullopt for mixed sums. Zero counts as even.
  std::optional<Parity> parity() const {
    if (terms_.empty()) return Parity::even;
    unsigned first = terms_.begin()->first.odd;
    for (const auto& [m, c] : terms_)
      if (m.odd != first) return std::nullopt;
    return first ? Parity::odd : Parity::even;
  }

  Parity require_parity(const char* where) const {
    auto p = parity();
    if (!p) throw Error(std::string(where) + ": mixed-parity input");
    return *p;
  }

  // Largest t-degree + odd-degree among terms; -1 for zero.
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.deg + m.odd));
    return d;
  }

  SuperPoly& operator+=(const SuperPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  SuperPoly& operator-=(const SuperPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  SuperPoly& operator*=(const Rat& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend SuperPoly operator+(SuperPoly a, const SuperPoly& b) { return a += b; }
  friend SuperPoly operator-(SuperPoly a, const SuperPoly& b) { return a -= b; }
  friend SuperPoly operator-(SuperPoly a) { return a *= Rat(-1); }
  friend SuperPoly operator*(SuperPoly a, const Rat& s) { return a *= s; }
  friend SuperPoly operator*(const Rat& s, SuperPoly a) { return a *= s; }

  // The even variable is central and the odd one squares to zero, so the
  // product needs no sign: t^a th^e * t^b th^f = t^{a+b} th^{e+f}.
  friend SuperPoly operator*(const SuperPoly& p, const SuperPoly& q) {
    SuperPoly r;
    for (const auto& [m1, c1] : p.terms_)
      for (const auto& [m2, c2] : q.terms_) {
        if (m1.odd + m2.odd > 1) continue;
        r.add_term({m1.deg + m2.deg, m1.odd + m2.odd}, c1 * c2);
      }
    return r;
  }

  friend bool operator==(const SuperPoly&, const SuperPoly&) = default;

  std::string str(Coords coords = Coords::contact) const;

 private:
  Terms terms_;
};

// d/dt (even derivation)
inline SuperPoly d_even(const SuperPoly& p) {
  SuperPoly r;
  for (const auto& [m, c] : p.terms())
    if (m.deg > 0) r.add_term({m.deg - 1, m.odd}, c * m.deg);
  return r;
}

// d/dth (odd derivation, acting from the left)
inline SuperPoly d_odd(const SuperPoly& p) {
  SuperPoly r;
  for (const auto& [m, c] : p.terms())
    if (m.odd == 1) r.add_term({m.deg, 0}, c);
  return r;
}

// Odd-degree counting operator E = th d/dth.
inline SuperPoly euler_odd(const SuperPoly& p) {
  SuperPoly r;
  for (const auto& [m, c] : p.terms())
    if (m.odd == 1) r.add_term(m, c);
  return r;
}

// Canonical text form: terms sorted by descending (deg, odd), e.g. "3/2*t^2*th + 1".
inline std::string SuperPoly::str(Coords coords) const {
  if (terms_.empty()) return "0";
  const char* ev = coords == Coords::contact ? "t" : "x";
  const char* od = coords == Coords::contact ? "th" : "xi";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string factors;
    if (m.deg == 1) factors = ev;
    if (m.deg > 1) factors = std::string(ev) + "^" + std::to_string(m.deg);
    if (m.odd) factors += (factors.empty() ? "" : "*") + std::string(od);
    if (factors.empty()) {
      os << to_string(mag);
    } else if (mag == 1) {
      os << factors;
    } else {
      os << to_string(mag) << "*" << factors;
    }
  }
  return os.str();
}

}  // namespace grc
