#pragma once

#include <optional>
#include <string>

#include "grc/superpoly.hpp"

namespace grc {

// X = even_part * d/dt + odd_part * d/dth
struct VField {
  SuperPoly even_part;
  SuperPoly odd_part;

  // Declared parity p requires even_part of parity p and odd_part of parity 1-p.
  std::optional<Parity> parity() const {
    auto pe = even_part.parity();
    auto po = odd_part.parity();
    if (!pe || !po) return std::nullopt;
    if (even_part.is_zero() && odd_part.is_zero()) return Parity::even;
    if (even_part.is_zero()) return *po + Parity::odd;
    if (odd_part.is_zero()) return *pe;
    if (*pe == *po) return std::nullopt;
    return *pe;
  }

  Parity require_parity(const char* where) const {
    auto p = parity();
    if (!p) throw Error(std::string(where) + ": mixed-parity vector field");
    return *p;
  }

  bool is_zero() const { return even_part.is_zero() && odd_part.is_zero(); }

  friend bool operator==(const VField&, const VField&) = default;
  friend VField operator+(const VField& a, const VField& b) {
    return {a.even_part + b.even_part, a.odd_part + b.odd_part};
  }
  friend VField operator*(const Rat& s, const VField& a) { return {s * a.even_part, s * a.odd_part}; }

  std::string str(Coords coords = Coords::contact) const {
    const char* de = coords == Coords::contact ? "d_t" : "d_x";
    const char* dd = coords == Coords::contact ? "d_th" : "d_xi";
    if (is_zero()) return "0";
    std::string out;
    if (!even_part.is_zero()) out += "(" + even_part.str(coords) + ")*" + de;
    if (!odd_part.is_zero()) {
      if (!out.empty()) out += " + ";
      out += "(" + odd_part.str(coords) + ")*" + dd;
    }
    return out;
  }
};

// Named fields on the (1|1) superstring (names follow the vect coordinates).
namespace fields {
inline VField d_even() { return {SuperPoly::one(), {}}; }
inline VField d_odd() { return {{}, SuperPoly::one()}; }
inline VField monomial(unsigned deg, unsigned odd, bool along_odd) {
  return along_odd ? VField{{}, SuperPoly::mono(deg, odd)} : VField{SuperPoly::mono(deg, odd), {}};
}
}  // namespace fields

// X(p). The coefficients sit to the left of the derivations, so no sign
// arises: X(p) = f * dp/dt + g * dp/dth.
inline SuperPoly apply_vfield(const VField& x, const SuperPoly& p) {
  return x.even_part * d_even(p) + x.odd_part * d_odd(p);
}

// Super commutator [X, Y] = XY - (-1)^{p(X)p(Y)} YX of homogeneous fields.
inline VField vfield_bracket(const VField& x, const VField& y) {
  Parity px = x.require_parity("vfield_bracket");
  Parity py = y.require_parity("vfield_bracket");
  Rat s(koszul(px, py));
  return {apply_vfield(x, y.even_part) - s * apply_vfield(y, x.even_part),
          apply_vfield(x, y.odd_part) - s * apply_vfield(y, x.odd_part)};
}

// (2 - E)(f)
inline SuperPoly two_minus_euler(const SuperPoly& f) { return Rat(2) * f - euler_odd(f); }

// K_f = (2-E)(f) d_t - (-1)^{p(f)} (d_th f - th d_t f) d_th
inline VField contact_field(const SuperPoly& f) {
  Parity pf = f.require_parity("contact_field");
  SuperPoly inner = d_odd(f) - SuperPoly::odd_var() * d_even(f);
  Rat sign(pf == Parity::odd ? 1 : -1);
  return {two_minus_euler(f), sign * inner};
}

// {f, g} = (2-E)(f) d_t g - d_t f (2-E)(g) - (-1)^{p(f)} d_th f d_th g
inline SuperPoly contact_bracket(const SuperPoly& f, const SuperPoly& g) {
  Parity pf = f.require_parity("contact_bracket");
  g.require_parity("contact_bracket");
  Rat sign(pf == Parity::odd ? 1 : -1);
  return two_minus_euler(f) * d_even(g) - d_even(f) * two_minus_euler(g) + sign * (d_odd(f) * d_odd(g));
}

// Div(f d + g delta) = df/dx + (-1)^{p(g)} dg/dxi
inline SuperPoly divergence(const VField& x) {
  Parity px = x.require_parity("divergence");
  Parity pg = px + Parity::odd;
  Rat s(pg == Parity::odd ? -1 : 1);
  return d_even(x.even_part) + s * d_odd(x.odd_part);
}

// D_th = th d_t - d_th
inline SuperPoly d_theta(const SuperPoly& p) { return SuperPoly::odd_var() * d_even(p) - d_odd(p); }

enum class DensityConvention : std::uint8_t { vvol_power, contact_half_power };

// coefficient * vvol^weight, or coefficient * alpha_1^{weight/2}.
struct Density {
  SuperPoly coefficient;
  Rat weight;
  DensityConvention convention = DensityConvention::vvol_power;

  friend bool operator==(const Density&, const Density&) = default;
};

// alpha_1^{mu/2} and vvol^w transform alike under k(1|1) exactly when w = mu;
// the calibration tests in the brackets module check this dictionary.
inline Density to_vvol(const Density& d) {
  return {d.coefficient, d.weight, DensityConvention::vvol_power};
}

// L_X(f vvol^w) = (X(f) + w f Div X) vvol^w
inline Density lie_derivative(const VField& x, const Density& d) {
  if (d.convention != DensityConvention::vvol_power)
    return lie_derivative(x, to_vvol(d));
  x.require_parity("lie_derivative");
  SuperPoly out = apply_vfield(x, d.coefficient);
  if (d.weight != 0) out += d.weight * (d.coefficient * divergence(x));
  return {std::move(out), d.weight, DensityConvention::vvol_power};
}

inline SuperPoly lie_derivative(const VField& x, const Rat& weight, const SuperPoly& f) {
  return lie_derivative(x, Density{f, weight}).coefficient;
}

}  // namespace grc
