#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "grc/singular.hpp"
#include "grc/supercalc.hpp"

namespace grc {

// How a PBW monomial of the tensor product turns into a differential
// operator. Even lowering generators (K_1, d) become alpha * d/dt; the odd
// ones become D_th (contact) or d/dxi (vect). beta scales the four odd-flag
// patterns; with koszul set, an odd operator applied to the second argument
// picks up (-1)^{p(f)}.
struct DualConvention {
  Rat alpha = 1;
  Rat beta10 = 1;
  Rat beta01 = 1;
  Rat beta11 = 1;
  bool koszul = true;

  Rat beta(unsigned e1, unsigned e2) const {
    if (e1 && e2) return beta11;
    if (e1) return beta10;
    if (e2) return beta01;
    return 1;
  }
  friend bool operator==(const DualConvention&, const DualConvention&) = default;

  std::string str() const {
    return "alpha=" + to_string(alpha) + " beta10=" + to_string(beta10) + " beta01=" + to_string(beta01) +
           " beta11=" + to_string(beta11) + " koszul=" + (koszul ? "1" : "0");
  }
};

// Frozen after calibration; the brackets tests re-derive both.
inline DualConvention frozen_convention(Algebra a) {
  if (a == Algebra::contact) return {1, 1, 1, Rat(-1, 2), true};
  return {1, 1, 1, 1, true};
}

// Source weight of the density dual to the generator weight mu.
inline Rat source_weight(Algebra a, const Rat& mu) { return a == Algebra::contact ? Rat(-mu) : Rat(-mu / 2); }

struct BilinOp {
  Algebra algebra = Algebra::contact;
  unsigned order = 0;  // level of the singular vector
  Parity parity = Parity::even;
  std::map<TensorMonomial, Rat> terms;
  Rat lambda1;
  Rat lambda2;
  // contact: target density weight; vect: eigenvalue of x d on the value at 0
  Rat lambda;
  // vect only: eigenvalue of xi delta on the value at 0
  Rat chi2;
  DualConvention convention;

  std::string formula() const;
};

inline SuperPoly odd_operator(Algebra a, const SuperPoly& p) { return a == Algebra::contact ? d_theta(p) : d_odd(p); }

inline SuperPoly apply_raw(const BilinOp& b, const SuperPoly& phi, const SuperPoly& psi) {
  SuperPoly out;
  bool phi_odd = !phi.is_zero() && phi.require_parity("apply_bracket") == Parity::odd;
  for (const auto& [m, c] : b.terms) {
    Rat k = c * b.convention.beta(m.left.odd_flag, m.right.odd_flag);
    for (unsigned s = 0; s < m.left.even_power + m.right.even_power; ++s) k *= b.convention.alpha;
    if (b.convention.koszul && m.right.odd_flag && phi_odd) k = -k;
    if (k == 0) continue;
    SuperPoly f = phi, g = psi;
    for (unsigned s = 0; s < m.left.even_power; ++s) f = d_even(f);
    if (m.left.odd_flag) f = odd_operator(b.algebra, f);
    for (unsigned s = 0; s < m.right.even_power; ++s) g = d_even(g);
    if (m.right.odd_flag) g = odd_operator(b.algebra, g);
    out += k * (f * g);
  }
  return out;
}

// Splits into parity-homogeneous parts and applies bilinearly.
inline SuperPoly apply_poly(const BilinOp& b, const SuperPoly& phi, const SuperPoly& psi) {
  SuperPoly out;
  for (unsigned odd = 0; odd <= 1; ++odd) {
    SuperPoly part;
    for (const auto& [m, c] : phi.terms())
      if (m.odd == odd) part.add_term(m, c);
    if (!part.is_zero()) out += apply_raw(b, part, psi);
  }
  return out;
}

inline Density apply_bracket(const BilinOp& b, const Density& d1, const Density& d2) {
  Density a = to_vvol(d1), c = to_vvol(d2);
  if (a.weight != b.lambda1 || c.weight != b.lambda2)
    throw Error("apply_bracket: density weights (" + to_string(a.weight) + ", " + to_string(c.weight) +
                ") do not match the source weights (" + to_string(b.lambda1) + ", " + to_string(b.lambda2) + ")");
  return {apply_poly(b, a.coefficient, c.coefficient), b.lambda, DensityConvention::vvol_power};
}

inline std::string derivative_str(const char* name, unsigned k) {
  std::string s = name;
  if (k == 0) return s;
  if (k <= 2) return s + std::string(k, '\'');
  return s + "^(" + std::to_string(k) + ")";
}

inline std::string BilinOp::formula() const {
  if (terms.empty()) return "0";
  const char* odd_name = algebra == Algebra::contact ? "Dth" : "dxi";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rat k = c * convention.beta(m.left.odd_flag, m.right.odd_flag);
    for (unsigned s = 0; s < m.left.even_power + m.right.even_power; ++s) k *= convention.alpha;
    if (k == 0) continue;
    std::string f = derivative_str("f", m.left.even_power);
    std::string g = derivative_str("g", m.right.even_power);
    if (m.left.odd_flag) f = std::string(odd_name) + "(" + f + ")";
    if (m.right.odd_flag) g = std::string(odd_name) + "(" + g + ")";
    std::string body = f + "*" + g;
    if (convention.koszul && m.right.odd_flag) body = "(-1)^p(f)*" + body;
    if (first) {
      out += k < 0 ? "-" : "";
    } else {
      out += k < 0 ? " - " : " + ";
    }
    first = false;
    Rat mag = abs(k);
    out += (mag == 1 ? "" : to_string(mag) + "*") + body;
  }
  return out.empty() ? "0" : out;
}

// Coefficients of v turned into an operator without the singularity check.
inline BilinOp bracket_from_vector(const ModVec& v, const DualConvention& conv) {
  BilinOp b;
  b.algebra = v.algebra;
  b.convention = conv;
  b.terms = v.terms;
  b.lambda1 = source_weight(v.algebra, v.mu1);
  b.lambda2 = source_weight(v.algebra, v.mu2);
  if (!v.is_zero()) {
    auto [lvl, par] = v.homogeneity();
    b.order = lvl;
    b.parity = par;
  }
  if (v.algebra == Algebra::contact) {
    b.lambda = b.lambda1 + b.lambda2 + b.order;
  } else {
    unsigned k = 0, e = 0;
    if (!v.is_zero()) {
      const auto& m = v.terms.begin()->first;
      k = m.left.even_power + m.right.even_power;
      e = m.left.odd_flag + m.right.odd_flag;
    }
    b.lambda = Rat(k) + b.lambda1 + b.lambda2;
    b.chi2 = Rat(e) - b.lambda1 - b.lambda2;
  }
  return b;
}

inline BilinOp bracket_from_singular(const ModVec& v) {
  if (v.is_zero() || !annihilated(v, classification_raisers(v.algebra)))
    throw Error("bracket_from_singular: input is not a singular vector");
  v.homogeneity();
  return bracket_from_vector(v, frozen_convention(v.algebra));
}

inline BilinOp dtheta_pencil(const Rat& a, const Rat& b) {
  if (a == 0 && b == 0) throw Error("dtheta_pencil: (a, b) = (0, 0)");
  ModVec v{Algebra::contact, 0, 0, {}};
  v.add({{0, 1}, {0, 0}}, a);
  v.add({{0, 0}, {0, 1}}, b);
  return bracket_from_singular(v);
}

// ---------------------------------------------------------------------------
// Equivariance oracle.

enum class Subalgebra : std::uint8_t { osp12, pgl21, k11_full, vect11_full };

inline std::string_view subalgebra_name(Subalgebra s) {
  switch (s) {
    case Subalgebra::osp12: return "osp12";
    case Subalgebra::pgl21: return "pgl21";
    case Subalgebra::k11_full: return "k11-full";
    case Subalgebra::vect11_full: return "vect11-full";
  }
  return "?";
}

inline Subalgebra parse_subalgebra(std::string_view s) {
  if (s == "osp12") return Subalgebra::osp12;
  if (s == "pgl21") return Subalgebra::pgl21;
  if (s == "k11-full") return Subalgebra::k11_full;
  if (s == "vect11-full") return Subalgebra::vect11_full;
  throw Error("unknown subalgebra '" + std::string(s) + "'");
}

inline Algebra subalgebra_algebra(Subalgebra s) {
  return (s == Subalgebra::osp12 || s == Subalgebra::k11_full) ? Algebra::contact : Algebra::vect;
}

// How a generator's condition is checked on vect targets:
//   full     - translations: the value transforms like a function;
//   at_zero  - field vanishing at 0: the value at 0 is an eigenvector (H1, H2)
//              or is killed.
enum class CheckKind : std::uint8_t { full, character1, character2, kills };

struct OracleGenerator {
  std::string name;
  VField field;
  CheckKind kind = CheckKind::full;
};

inline std::string vfield_name(Algebra a, Gen g) {
  if (a == Algebra::contact) return "K(" + SuperPoly::mono(g.deg, g.odd).str(Coords::contact) + ")";
  return "(" + SuperPoly::mono(g.deg, g.odd).str(Coords::vect) + ")*" + (g.along_odd ? "d_xi" : "d_x");
}

inline std::vector<OracleGenerator> oracle_generators(Subalgebra s, unsigned degree_bound) {
  std::vector<OracleGenerator> out;
  switch (s) {
    case Subalgebra::osp12:
      for (Gen g : {gens::k_one, gens::k_theta, gens::k_t, gens::k_t_theta})
        out.push_back({vfield_name(Algebra::contact, g), realize(Algebra::contact, g), CheckKind::full});
      break;
    case Subalgebra::k11_full:
      for (unsigned d = 0; d <= degree_bound; ++d)
        for (unsigned e = 0; e <= 1 && d + e <= degree_bound; ++e)
          out.push_back({vfield_name(Algebra::contact, {d, e, 0}), realize(Algebra::contact, {d, e, 0}), CheckKind::full});
      break;
    case Subalgebra::pgl21:
    case Subalgebra::vect11_full: {
      out.push_back({"d_x", fields::d_even(), CheckKind::full});
      out.push_back({"d_xi", fields::d_odd(), CheckKind::full});
      out.push_back({"x*d_x", realize(Algebra::vect, gens::h1), CheckKind::character1});
      out.push_back({"xi*d_xi", realize(Algebra::vect, gens::h2), CheckKind::character2});
      out.push_back({"x*d_xi", realize(Algebra::vect, gens::x_plus), CheckKind::kills});
      if (s == Subalgebra::pgl21) {
        out.push_back({"x*xi*d_x", realize(Algebra::vect, gens::s_xi), CheckKind::kills});
        out.push_back({"x^2*d_x + x*xi*d_xi", VField{SuperPoly::mono(2, 0), SuperPoly::mono(1, 1)}, CheckKind::kills});
      } else {
        for (unsigned d = 0; d <= degree_bound; ++d)
          for (unsigned e = 0; e <= 1; ++e)
            for (unsigned along = 0; along <= 1; ++along) {
              Gen g{d, e, along};
              if (gen_grade(Algebra::vect, g) < 1 || d + e > degree_bound) continue;
              out.push_back({vfield_name(Algebra::vect, g), realize(Algebra::vect, g), CheckKind::kills});
            }
      }
      break;
    }
  }
  return out;
}

struct OracleFailure {
  std::string generator;
  std::string phi;
  std::string psi;
  std::string defect;
  auto operator<=>(const OracleFailure&) const = default;
};

struct EquivarianceReport {
  Subalgebra subalgebra = Subalgebra::osp12;
  unsigned degree_bound = 0;
  std::size_t checks = 0;
  std::vector<OracleFailure> failures;
  bool pass() const { return failures.empty(); }
};

inline std::vector<SuperPoly> monomial_densities(unsigned degree_bound) {
  std::vector<SuperPoly> out;
  for (unsigned d = 0; d <= degree_bound; ++d)
    for (unsigned e = 0; e <= 1 && d + e <= degree_bound; ++e) out.push_back(SuperPoly::mono(d, e));
  return out;
}

inline Rat value_at_zero(const SuperPoly& p) { return p.coeff({0, 0}); }

// Weights used by the oracle, kept apart from the operator so that the
// calibration can vary them.
struct OracleWeights {
  Rat lambda1;
  Rat lambda2;
  Rat lambda;
  Rat chi2;
};

inline OracleWeights weights_of(const BilinOp& b) { return {b.lambda1, b.lambda2, b.lambda, b.chi2}; }

// The defect of one (X, phi, psi) triple. contact:
//   L_X B(phi, psi) - (-1)^{p(X)p(B)} [B(L_X phi, psi) + (-1)^{p(X)p(phi)} B(phi, L_X psi)].
// vect: the same with the left side replaced according to the check kind.
inline SuperPoly oracle_defect(const BilinOp& b, const OracleGenerator& x, const SuperPoly& phi,
                               const SuperPoly& psi, const OracleWeights& w) {
  Parity px = x.field.require_parity("oracle");
  Parity pphi = phi.require_parity("oracle");
  SuperPoly rhs = apply_raw(b, lie_derivative(x.field, w.lambda1, phi), psi) +
                  Rat(koszul(px, pphi)) * apply_raw(b, phi, lie_derivative(x.field, w.lambda2, psi));
  rhs *= Rat(koszul(px, b.parity));
  SuperPoly val = apply_raw(b, phi, psi);
  if (b.algebra == Algebra::contact) return lie_derivative(x.field, w.lambda, val) - rhs;
  switch (x.kind) {
    case CheckKind::full: return apply_vfield(x.field, val) - rhs;
    case CheckKind::character1: return SuperPoly(w.lambda * value_at_zero(val) - value_at_zero(rhs));
    case CheckKind::character2: return SuperPoly(w.chi2 * value_at_zero(val) - value_at_zero(rhs));
    case CheckKind::kills: return SuperPoly(-value_at_zero(rhs));
  }
  return {};
}

inline EquivarianceReport equivariance_report(const BilinOp& b, Subalgebra s, unsigned degree_bound,
                                              const OracleWeights& w, std::size_t max_failures = SIZE_MAX) {
  if (subalgebra_algebra(s) != b.algebra)
    throw Error("subalgebra " + std::string(subalgebra_name(s)) + " does not act on " +
                std::string(algebra_name(b.algebra)) + " operators");
  EquivarianceReport r{s, degree_bound, 0, {}};
  Coords co = coords_of(b.algebra);
  auto dens = monomial_densities(degree_bound);
  for (const auto& x : oracle_generators(s, degree_bound))
    for (const auto& phi : dens)
      for (const auto& psi : dens) {
        ++r.checks;
        SuperPoly d = oracle_defect(b, x, phi, psi, w);
        if (d.is_zero()) continue;
        if (r.failures.size() < max_failures) r.failures.push_back({x.name, phi.str(co), psi.str(co), d.str(co)});
      }
  std::sort(r.failures.begin(), r.failures.end());
  return r;
}

inline EquivarianceReport equivariance_report(const BilinOp& b, Subalgebra s, unsigned degree_bound) {
  if (degree_bound < b.order + 2) throw Error("equivariance_report: degree bound must be at least order + 2");
  return equivariance_report(b, s, degree_bound, weights_of(b));
}

inline Subalgebra classification_subalgebra(Algebra a) {
  return a == Algebra::contact ? Subalgebra::osp12 : Subalgebra::pgl21;
}

inline bool oracle_passes(const BilinOp& b, Subalgebra s, unsigned degree_bound) {
  return equivariance_report(b, s, degree_bound, weights_of(b), 1).pass();
}

// Solution space of the classification oracle among level-n coefficient
// vectors of one parity, solved directly: the defect is linear in the
// coefficients once the weights are fixed. vect weights depend on the numbers
// of even and odd derivatives, so each such block is solved separately.
inline std::vector<ModVec> oracle_solutions(Algebra a, const Rat& mu1, const Rat& mu2, unsigned n, Parity sector,
                                            unsigned degree_bound) {
  auto basis = level_basis(a, n, sector);
  std::map<std::pair<unsigned, unsigned>, std::vector<TensorMonomial>> blocks;
  for (const auto& m : basis) {
    auto key = a == Algebra::contact ? std::pair{0u, 0u}
                                     : std::pair{m.left.even_power + m.right.even_power, m.left.odd_flag + m.right.odd_flag};
    blocks[key].push_back(m);
  }
  Subalgebra s = classification_subalgebra(a);
  auto gens = oracle_generators(s, degree_bound);
  auto dens = monomial_densities(degree_bound);
  std::vector<ModVec> out;
  for (const auto& [key, cols] : blocks) {
    using Key = std::tuple<std::size_t, std::size_t, std::size_t, Mono>;
    std::map<Key, RatVec> rows;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      ModVec v{a, mu1, mu2, {}};
      v.add(cols[c], 1);
      BilinOp b = bracket_from_vector(v, frozen_convention(a));
      OracleWeights w = weights_of(b);
      for (std::size_t g = 0; g < gens.size(); ++g)
        for (std::size_t i = 0; i < dens.size(); ++i)
          for (std::size_t j = 0; j < dens.size(); ++j) {
            SuperPoly d = oracle_defect(b, gens[g], dens[i], dens[j], w);
            for (const auto& [m, coef] : d.terms()) {
              auto [it, fresh] = rows.try_emplace(Key{g, i, j, m}, RatVec(cols.size()));
              it->second[c] = coef;
            }
          }
    }
    RatMatrix mat(0, cols.size());
    for (const auto& [k, row] : rows) mat.append_row(row);
    for (const auto& x : nullspace(mat)) out.push_back(from_coords(a, mu1, mu2, cols, x));
  }
  return out;
}

struct BijectionCheck {
  std::size_t kernel_vectors = 0;
  std::size_t kernel_failures = 0;     // kernel vectors the oracle rejects
  std::size_t complement_vectors = 0;
  std::size_t complement_passes = 0;   // complement vectors the oracle accepts
  bool solution_spaces_equal = true;   // oracle solutions span the kernel, per parity

  bool ok() const { return kernel_failures == 0 && complement_passes == 0 && solution_spaces_equal; }
};

// Kernel vectors against the oracle in both directions: every kernel basis
// vector passes, every unit vector extending the kernel basis fails, and the
// oracle's own solution space equals the kernel.
inline BijectionCheck oracle_kernel_bijection(Algebra a, const Rat& mu1, const Rat& mu2, unsigned n,
                                              unsigned degree_bound) {
  BijectionCheck out;
  Subalgebra sub = classification_subalgebra(a);
  SingularSpace s = singular_space(a, mu1, mu2, n);
  for (auto p : {Parity::even, Parity::odd}) {
    auto basis = level_basis(a, n, p);
    auto ker = coordinates(s.basis(p), basis);
    for (const auto& v : s.basis(p)) {
      ++out.kernel_vectors;
      if (!equivariance_report(bracket_from_singular(v), sub, degree_bound).pass()) ++out.kernel_failures;
    }
    auto grown = ker;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      RatVec e(basis.size());
      e[j] = 1;
      if (in_span(e, grown)) continue;
      grown.push_back(e);
      ++out.complement_vectors;
      BilinOp b = bracket_from_vector(from_coords(a, mu1, mu2, basis, e), frozen_convention(a));
      if (oracle_passes(b, sub, degree_bound)) ++out.complement_passes;
    }
    auto sol = coordinates(oracle_solutions(a, mu1, mu2, n, p, degree_bound), basis);
    if (!same_span(sol, ker)) out.solution_spaces_equal = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Calibration.

struct WeightCalibration {
  bool consistent = false;
  bool unique = false;
  // contact: {lambda1, lambda2, lambda}; vect: {lambda1, lambda2, chi1, chi2}
  std::vector<Rat> values;
  std::size_t free_directions = 0;
};

// The oracle defect is affine in the weights, so sampling it at the origin
// and at each unit vector gives a linear system for the weights. Optional
// fixed source weights pin lambda1 and lambda2.
inline WeightCalibration calibrate_weights(const BilinOp& shape, unsigned degree_bound,
                                           std::optional<std::pair<Rat, Rat>> fixed_sources = std::nullopt) {
  Subalgebra s = classification_subalgebra(shape.algebra);
  std::size_t nw = shape.algebra == Algebra::contact ? 3 : 4;
  auto pack = [&](const std::vector<Rat>& x) {
    OracleWeights w{x[0], x[1], x[2], nw == 4 ? x[3] : Rat(0)};
    return w;
  };
  using Key = std::tuple<std::size_t, std::size_t, std::size_t, Mono>;
  auto sample = [&](const std::vector<Rat>& x) {
    std::map<Key, Rat> out;
    auto gens = oracle_generators(s, degree_bound);
    auto dens = monomial_densities(degree_bound);
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (std::size_t i = 0; i < dens.size(); ++i)
        for (std::size_t j = 0; j < dens.size(); ++j) {
          SuperPoly d = oracle_defect(shape, gens[g], dens[i], dens[j], pack(x));
          for (const auto& [m, c] : d.terms()) out[{g, i, j, m}] = c;
        }
    return out;
  };
  std::vector<Rat> zero(nw);
  auto base = sample(zero);
  std::vector<std::map<Key, Rat>> slopes;
  for (std::size_t k = 0; k < nw; ++k) {
    auto x = zero;
    x[k] = 1;
    slopes.push_back(sample(x));
  }
  std::set<Key> keys;
  for (const auto& [k, c] : base) keys.insert(k);
  for (const auto& s2 : slopes)
    for (const auto& [k, c] : s2) keys.insert(k);
  // rows: sum_k (slope_k - base) x_k = -base
  RatMatrix m(0, nw + 1);
  for (const auto& key : keys) {
    auto get = [&key](const std::map<Key, Rat>& mp) {
      auto it = mp.find(key);
      return it == mp.end() ? Rat(0) : it->second;
    };
    RatVec row(nw + 1);
    Rat b0 = get(base);
    for (std::size_t k = 0; k < nw; ++k) row[k] = get(slopes[k]) - b0;
    row[nw] = -b0;
    m.append_row(row);
  }
  if (fixed_sources) {
    for (std::size_t k = 0; k < 2; ++k) {
      RatVec row(nw + 1);
      row[k] = 1;
      row[nw] = k == 0 ? fixed_sources->first : fixed_sources->second;
      m.append_row(row);
    }
  }
  WeightCalibration out;
  Echelon e = rref(m);
  if (!e.pivots.empty() && e.pivots.back() == nw) return out;
  out.consistent = true;
  out.free_directions = nw - e.pivots.size();
  out.unique = out.free_directions == 0;
  if (out.unique) {
    out.values.assign(nw, 0);
    for (std::size_t k = 0; k < e.pivots.size(); ++k) out.values[e.pivots[k]] = e.reduced(k, nw);
  }
  return out;
}

// Candidate dualization conventions.
inline std::vector<DualConvention> convention_candidates() {
  std::vector<DualConvention> out;
  for (int alpha : {1, -1})
    for (int b10 : {1, -1})
      for (int b01 : {1, -1})
        for (Rat b11 : {Rat(1), Rat(-1), Rat(1, 2), Rat(-1, 2)})
          for (bool k : {true, false}) out.push_back({alpha, b10, b01, b11, k});
  return out;
}

struct ReferenceCell {
  Rat mu1;
  Rat mu2;
  unsigned level;
};

inline std::vector<ReferenceCell> reference_cells(Algebra a) {
  if (a == Algebra::contact)
    return {{Rat(1, 3), Rat(2, 5), 1}, {Rat(1, 3), Rat(2, 5), 2}, {Rat(1, 3), Rat(2, 5), 3}, {Rat(1, 3), Rat(2, 5), 4},
            {Rat(0), Rat(0), 1}, {Rat(1), Rat(1), 4}};
  return {{Rat(1, 3), Rat(2, 5), 1}, {Rat(1, 3), Rat(2, 5), 2}, {Rat(0), Rat(0), 2},
          {Rat(2), Rat(0), 3},       {Rat(3, 2), Rat(1, 3), 3}, {Rat(2), Rat(2), 3}};
}

// Every candidate convention under which all kernel vectors of the reference
// cells pass the classification oracle.
inline std::vector<DualConvention> calibrate_dualization(Algebra a) {
  std::vector<DualConvention> out;
  auto cells = reference_cells(a);
  std::vector<ModVec> vectors;
  for (const auto& c : cells) {
    auto s = singular_space(a, c.mu1, c.mu2, c.level);
    for (const auto* b : {&s.even_basis, &s.odd_basis}) vectors.insert(vectors.end(), b->begin(), b->end());
  }
  Subalgebra sub = classification_subalgebra(a);
  for (const auto& conv : convention_candidates()) {
    bool ok = true;
    for (const auto& v : vectors) {
      BilinOp b = bracket_from_vector(v, conv);
      if (!oracle_passes(b, sub, b.order + 3)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(conv);
  }
  return out;
}

}  // namespace grc
