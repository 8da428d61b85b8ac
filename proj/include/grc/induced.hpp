#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grc/linalg.hpp"
#include "grc/supercalc.hpp"

namespace grc {

// k(1|1): contact fields with deg t = 2, deg th = 1.
// vect(1|1): all fields with the standard grading deg x = deg xi = 1.
enum class Algebra : std::uint8_t { contact, vect };

inline std::string_view algebra_name(Algebra a) { return a == Algebra::contact ? "k11" : "vect11"; }

inline Algebra parse_algebra(std::string_view s) {
  if (s == "k11" || s == "contact") return Algebra::contact;
  if (s == "vect11" || s == "vect") return Algebra::vect;
  throw Error("unknown algebra '" + std::string(s) + "'");
}

inline Coords coords_of(Algebra a) { return a == Algebra::contact ? Coords::contact : Coords::vect; }

// Monomial basis element of the Lie superalgebra.
//   contact: K_f with f = t^deg th^odd (along_odd unused)
//   vect:    x^deg xi^odd d_x, or x^deg xi^odd d_xi when along_odd
struct Gen {
  unsigned deg = 0;
  unsigned odd = 0;
  unsigned along_odd = 0;
  auto operator<=>(const Gen&) const = default;
};

using GenComb = std::map<Gen, Rat>;

inline Parity gen_parity(Algebra a, Gen g) {
  unsigned p = a == Algebra::contact ? g.odd : (g.odd + g.along_odd);
  return (p & 1) ? Parity::odd : Parity::even;
}

// Z-grading degree.
inline int gen_grade(Algebra a, Gen g) {
  if (a == Algebra::contact) return 2 * static_cast<int>(g.deg) + static_cast<int>(g.odd) - 2;
  return static_cast<int>(g.deg + g.odd) - 1;
}

inline VField realize(Algebra a, Gen g) {
  if (a == Algebra::contact) return contact_field(SuperPoly::mono(g.deg, g.odd));
  return fields::monomial(g.deg, g.odd, g.along_odd != 0);
}

// Structure constants, read off from the function-level brackets.
inline GenComb gen_bracket(Algebra a, Gen x, Gen y) {
  GenComb out;
  auto put = [&out](Gen g, const Rat& c) {
    if (c == 0) return;
    auto& slot = out[g];
    slot += c;
    if (slot == 0) out.erase(g);
  };
  if (a == Algebra::contact) {
    SuperPoly b = contact_bracket(SuperPoly::mono(x.deg, x.odd), SuperPoly::mono(y.deg, y.odd));
    for (const auto& [m, c] : b.terms()) put({m.deg, m.odd, 0}, c);
  } else {
    VField b = vfield_bracket(realize(a, x), realize(a, y));
    for (const auto& [m, c] : b.even_part.terms()) put({m.deg, m.odd, 0}, c);
    for (const auto& [m, c] : b.odd_part.terms()) put({m.deg, m.odd, 1}, c);
  }
  return out;
}

namespace gens {
// contact
inline constexpr Gen k_one{0, 0, 0};        // K_1
inline constexpr Gen k_theta{0, 1, 0};      // K_th, the lowering odd generator
inline constexpr Gen k_t{1, 0, 0};          // K_t, grading element
inline constexpr Gen k_t_theta{1, 1, 0};    // K_{t th}
inline constexpr Gen k_t2_theta{2, 1, 0};   // K_{t^2 th}
// vect
inline constexpr Gen d_x{0, 0, 0};
inline constexpr Gen d_xi{0, 0, 1};
inline constexpr Gen h1{1, 0, 0};        // x d
inline constexpr Gen h2{0, 1, 1};        // xi delta
inline constexpr Gen x_minus{0, 1, 0};   // xi d
inline constexpr Gen x_plus{1, 0, 1};    // x delta
inline constexpr Gen s_xi{1, 1, 0};      // x xi d
}  // namespace gens

// contact: K_1^even_power K_th^odd_flag v     (level 2*even_power + odd_flag)
// vect:    d^even_power delta^odd_flag v      (level even_power + odd_flag)
struct PBWMonomial {
  unsigned even_power = 0;
  unsigned odd_flag = 0;
  auto operator<=>(const PBWMonomial&) const = default;

  unsigned level(Algebra a) const { return (a == Algebra::contact ? 2 : 1) * even_power + odd_flag; }
  Parity parity() const { return odd_flag ? Parity::odd : Parity::even; }
};

using PBWComb = std::map<PBWMonomial, Rat>;

struct TensorMonomial {
  PBWMonomial left;
  PBWMonomial right;
  auto operator<=>(const TensorMonomial&) const = default;

  unsigned level(Algebra a) const { return left.level(a) + right.level(a); }
  Parity parity() const { return left.parity() + right.parity(); }
};

// Finite combination of tensor monomials in I(V1) (x) I(V2).
struct ModVec {
  Algebra algebra = Algebra::contact;
  Rat mu1;
  Rat mu2;
  std::map<TensorMonomial, Rat> terms;

  bool is_zero() const { return terms.empty(); }

  void add(const TensorMonomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  Rat coeff(const TensorMonomial& m) const {
    auto it = terms.find(m);
    return it == terms.end() ? Rat(0) : it->second;
  }

  friend bool operator==(const ModVec&, const ModVec&) = default;

  // Homogeneous: single level and single parity. Returns {level, parity}.
  std::pair<unsigned, Parity> homogeneity() const {
    if (terms.empty()) throw Error("homogeneity of the zero vector is undefined");
    auto first = terms.begin()->first;
    for (const auto& [m, c] : terms)
      if (m.level(algebra) != first.level(algebra) || m.parity() != first.parity())
        throw Error("ModVec is not homogeneous");
    return {first.level(algebra), first.parity()};
  }

  std::string str() const;
};

inline std::string pbw_str(Algebra a, PBWMonomial m, const char* prime, const char* gen) {
  std::string out;
  const char* ev = a == Algebra::contact ? "K1" : "d";
  const char* od = a == Algebra::contact ? "Kth" : "delta";
  if (m.even_power > 0) {
    out += std::string(ev) + prime;
    if (m.even_power > 1) out += "^" + std::to_string(m.even_power);
  }
  if (m.odd_flag) out += (out.empty() ? "" : "*") + std::string(od) + prime;
  return out.empty() ? std::string(gen) : out + "*" + gen;
}

inline std::string ModVec::str() const {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    if (!first) out += " + ";
    first = false;
    out += "(" + to_string(c) + ")*" + pbw_str(algebra, m.left, "'", "v") + "(x)" +
           pbw_str(algebra, m.right, "''", "w");
  }
  return out;
}

// All tensor monomials of total level n, lexicographic on
// (left even power, left odd flag, right even power, right odd flag).
inline std::vector<TensorMonomial> level_basis(Algebra a, unsigned n) {
  std::vector<TensorMonomial> out;
  unsigned step = a == Algebra::contact ? 2 : 1;
  for (unsigned i1 = 0; step * i1 <= n; ++i1)
    for (unsigned e1 = 0; e1 <= 1; ++e1)
      for (unsigned i2 = 0; step * i2 <= n; ++i2)
        for (unsigned e2 = 0; e2 <= 1; ++e2) {
          TensorMonomial m{{i1, e1}, {i2, e2}};
          if (m.level(a) == n) out.push_back(m);
        }
  return out;
}

inline std::vector<TensorMonomial> level_basis(Algebra a, unsigned n, Parity sector) {
  std::vector<TensorMonomial> out;
  for (const auto& m : level_basis(a, n))
    if (m.parity() == sector) out.push_back(m);
  return out;
}

inline ModVec from_coords(Algebra a, const Rat& mu1, const Rat& mu2,
                          const std::vector<TensorMonomial>& basis, const RatVec& coords) {
  ModVec v{a, mu1, mu2, {}};
  for (std::size_t k = 0; k < basis.size(); ++k) v.add(basis[k], coords[k]);
  return v;
}

inline RatVec to_coords(const ModVec& v, const std::vector<TensorMonomial>& basis) {
  RatVec out(basis.size());
  std::size_t hit = 0;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    out[k] = v.coeff(basis[k]);
    if (out[k] != 0) ++hit;
  }
  if (hit != v.terms.size()) throw Error("to_coords: vector has terms outside the basis");
  return out;
}

// Induced module U(g) (x)_{U(g>=0)} V for a one-dimensional V.
//   contact: K_t v = mu v.
//   vect: V = V^{0;mu}, i.e. H1 v = (mu/2) v, H2 v = -(mu/2) v, X+- v = 0.
// The action of an arbitrary basis element is computed by commuting it to the
// right through the PBW word, using only gen_bracket. Results are memoized per
// instance; an instance must not be shared between threads.
class InducedModule {
 public:
  InducedModule(Algebra a, Rat mu) : algebra_(a), mu_(std::move(mu)) {}

  Algebra algebra() const { return algebra_; }
  const Rat& mu() const { return mu_; }

  const PBWComb& act(Gen x, PBWMonomial m) const {
    auto key = std::make_pair(x, m);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    PBWComb r = compute(x, m);
    return cache_.emplace(key, std::move(r)).first->second;
  }

  PBWComb act(const GenComb& x, PBWMonomial m) const {
    PBWComb out;
    for (const auto& [g, c] : x) accumulate(out, act(g, m), c);
    return out;
  }

  // Scalar by which a grade-0 element acts on the generator.
  Rat generator_weight(Gen x) const {
    if (algebra_ == Algebra::contact) return x == gens::k_t ? mu_ : Rat(0);
    if (x == gens::h1) return mu_ / 2;
    if (x == gens::h2) return -mu_ / 2;
    return 0;
  }

  // Left multiplication by a lowering generator, kept in normal form.
  static PBWComb lower(Algebra a, Gen z, PBWMonomial m) {
    PBWComb out;
    bool even_gen = a == Algebra::contact ? z == gens::k_one : z == gens::d_x;
    bool odd_gen = a == Algebra::contact ? z == gens::k_theta : z == gens::d_xi;
    if (even_gen) {
      out[{m.even_power + 1, m.odd_flag}] = 1;
    } else if (odd_gen) {
      if (m.odd_flag == 0) {
        out[{m.even_power, 1}] = 1;
      } else if (a == Algebra::contact) {
        // K_th^2 = (1/2)[K_th, K_th] = (1/2) K_1
        out[{m.even_power + 1, 0}] = Rat(1, 2);
      }
      // delta^2 = 0
    } else {
      throw Error("lower: not a lowering generator");
    }
    return out;
  }

 private:
  static void accumulate(PBWComb& out, const PBWComb& in, const Rat& scale) {
    for (const auto& [m, c] : in) {
      auto& slot = out[m];
      slot += c * scale;
      if (slot == 0) out.erase(m);
    }
  }

  PBWComb compute(Gen x, PBWMonomial m) const {
    const int grade = gen_grade(algebra_, x);
    if (grade < 0) return lower(algebra_, x, m);
    if (m.even_power == 0 && m.odd_flag == 0) {
      PBWComb out;
      if (grade == 0) {
        Rat w = generator_weight(x);
        if (w != 0) out[m] = w;
      }
      return out;
    }
    // m = y * rest with y the leftmost lowering factor.
    Gen y;
    PBWMonomial rest;
    if (m.even_power > 0) {
      y = algebra_ == Algebra::contact ? gens::k_one : gens::d_x;
      rest = {m.even_power - 1, m.odd_flag};
    } else {
      y = algebra_ == Algebra::contact ? gens::k_theta : gens::d_xi;
      rest = {0, 0};
    }
    // x y rest = [x, y] rest + (-1)^{p(x)p(y)} y (x rest)
    PBWComb out;
    for (const auto& [z, c] : gen_bracket(algebra_, x, y)) accumulate(out, act(z, rest), c);
    Rat sign(koszul(gen_parity(algebra_, x), gen_parity(algebra_, y)));
    for (const auto& [mm, c] : act(x, rest)) accumulate(out, lower(algebra_, y, mm), c * sign);
    return out;
  }

  Algebra algebra_;
  Rat mu_;
  mutable std::map<std::pair<Gen, PBWMonomial>, PBWComb> cache_;
};

enum class RaiserId : std::uint8_t { nabla_plus, x_plus, s_xi, s_x, k_t2theta };

inline std::string_view raiser_name(RaiserId r) {
  switch (r) {
    case RaiserId::nabla_plus: return "nabla-plus";
    case RaiserId::x_plus: return "x-plus";
    case RaiserId::s_xi: return "s-xi";
    case RaiserId::s_x: return "s-x";
    case RaiserId::k_t2theta: return "k-t2theta";
  }
  return "?";
}

inline Algebra raiser_algebra(RaiserId r) {
  return (r == RaiserId::nabla_plus || r == RaiserId::k_t2theta) ? Algebra::contact : Algebra::vect;
}

inline GenComb raiser_element(RaiserId r) {
  switch (r) {
    case RaiserId::nabla_plus: return {{gens::k_t_theta, 1}};
    case RaiserId::k_t2theta: return {{gens::k_t2_theta, 1}};
    case RaiserId::x_plus: return {{gens::x_plus, 1}};
    case RaiserId::s_xi: return {{gens::s_xi, 1}};
    case RaiserId::s_x: return {{Gen{2, 0, 0}, 1}, {Gen{1, 1, 1}, 1}};  // x E = x^2 d + x xi delta
  }
  return {};
}

// Number of levels the raiser lowers by.
inline unsigned raiser_level_drop(RaiserId r) {
  switch (r) {
    case RaiserId::nabla_plus: return 1;
    case RaiserId::k_t2theta: return 3;
    case RaiserId::x_plus: return 0;
    case RaiserId::s_xi:
    case RaiserId::s_x: return 1;
  }
  return 0;
}

// Classification raisers: contact -> {nabla+}, vect -> {X+, s_xi}.
inline std::vector<RaiserId> classification_raisers(Algebra a) {
  if (a == Algebra::contact) return {RaiserId::nabla_plus};
  return {RaiserId::x_plus, RaiserId::s_xi};
}

// I(V1) (x) I(V2) with Delta(r)(x (x) y) = rx (x) y + (-1)^{p(r)p(x)} x (x) ry.
class TensorModule {
 public:
  TensorModule(Algebra a, const Rat& mu1, const Rat& mu2) : left_(a, mu1), right_(a, mu2) {}

  Algebra algebra() const { return left_.algebra(); }
  const Rat& mu1() const { return left_.mu(); }
  const Rat& mu2() const { return right_.mu(); }

  ModVec act(Gen x, const ModVec& v) const {
    check(v);
    ModVec out{algebra(), mu1(), mu2(), {}};
    Parity px = gen_parity(algebra(), x);
    for (const auto& [m, c] : v.terms) {
      for (const auto& [l, d] : left_.act(x, m.left)) out.add({l, m.right}, c * d);
      Rat s(koszul(px, m.left.parity()));
      for (const auto& [r, d] : right_.act(x, m.right)) out.add({m.left, r}, s * c * d);
    }
    return out;
  }

  ModVec act(const GenComb& x, const ModVec& v) const {
    ModVec out{algebra(), mu1(), mu2(), {}};
    for (const auto& [g, c] : x)
      for (const auto& [m, d] : act(g, v).terms) out.add(m, c * d);
    return out;
  }

  ModVec raise(RaiserId r, const ModVec& v) const {
    if (raiser_algebra(r) != algebra()) throw Error("raiser " + std::string(raiser_name(r)) + " does not act on " +
                                                    std::string(algebra_name(algebra())));
    return act(raiser_element(r), v);
  }

  ModVec basis_vector(const TensorMonomial& m) const {
    ModVec v{algebra(), mu1(), mu2(), {}};
    v.add(m, 1);
    return v;
  }

 private:
  void check(const ModVec& v) const {
    if (v.algebra != algebra() || v.mu1 != mu1() || v.mu2 != mu2())
      throw Error("ModVec does not belong to this tensor module");
  }

  InducedModule left_;
  InducedModule right_;
};

// One-shot form of TensorModule::raise.
inline ModVec raise(RaiserId r, const ModVec& v) { return TensorModule(v.algebra, v.mu1, v.mu2).raise(r, v); }

struct WeightData {
  // contact: {K_t eigenvalue}; vect: {H1, H2 eigenvalues}
  std::vector<Rat> eigenvalues;
};

// Eigenvalues of the grading elements on a homogeneous vector, computed by
// straightening each term and requiring the terms to agree.
inline WeightData weight_check(const ModVec& v) {
  v.homogeneity();
  TensorModule tm(v.algebra, v.mu1, v.mu2);
  std::vector<Gen> grading = v.algebra == Algebra::contact ? std::vector<Gen>{gens::k_t}
                                                           : std::vector<Gen>{gens::h1, gens::h2};
  WeightData out;
  for (Gen g : grading) {
    std::optional<Rat> eig;
    for (const auto& [m, c] : v.terms) {
      ModVec image = tm.act(g, tm.basis_vector(m));
      Rat e = image.coeff(m);
      if (image.terms.size() > 1 || (image.terms.size() == 1 && image.terms.begin()->first != m))
        throw Error("weight_check: monomial is not a weight vector");
      if (eig && *eig != e) throw Error("weight_check: vector is not a weight vector");
      eig = e;
    }
    out.eigenvalues.push_back(*eig);
  }
  return out;
}

}  // namespace grc
