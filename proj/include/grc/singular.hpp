#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grc/induced.hpp"
#include "grc/linalg.hpp"

namespace grc {

inline Parity raiser_parity(RaiserId r) { return r == RaiserId::s_x ? Parity::even : Parity::odd; }

// Rows are (raiser, image monomial) pairs, stacked raiser by raiser.
struct ConstraintMatrix {
  std::vector<TensorMonomial> cols;
  std::vector<std::pair<RaiserId, TensorMonomial>> rows;
  RatMatrix entries;
};

inline ConstraintMatrix constraint_matrix(Algebra a, const Rat& mu1, const Rat& mu2, unsigned n, Parity sector,
                                          const std::vector<RaiserId>& raisers) {
  ConstraintMatrix cm;
  cm.cols = level_basis(a, n, sector);
  cm.entries = RatMatrix(0, cm.cols.size());
  TensorModule tm(a, mu1, mu2);
  for (RaiserId r : raisers) {
    unsigned drop = raiser_level_drop(r);
    if (drop > n) continue;
    auto image_basis = level_basis(a, n - drop, sector + raiser_parity(r));
    if (image_basis.empty()) continue;
    std::vector<ModVec> images;
    images.reserve(cm.cols.size());
    for (const auto& c : cm.cols) images.push_back(tm.raise(r, tm.basis_vector(c)));
    for (const auto& row : image_basis) {
      RatVec values(cm.cols.size());
      for (std::size_t j = 0; j < cm.cols.size(); ++j) values[j] = images[j].coeff(row);
      cm.rows.emplace_back(r, row);
      cm.entries.append_row(values);
    }
    for (const auto& img : images)
      for (const auto& [m, c] : img.terms)
        if (std::find(image_basis.begin(), image_basis.end(), m) == image_basis.end())
          throw Error("constraint_matrix: raise left the expected level/parity sector");
  }
  return cm;
}

inline ConstraintMatrix constraint_matrix(Algebra a, const Rat& mu1, const Rat& mu2, unsigned n, Parity sector) {
  return constraint_matrix(a, mu1, mu2, n, sector, classification_raisers(a));
}

// Reduced echelon kernel basis, leading coordinate 1.
inline std::vector<RatVec> rational_kernel(const RatMatrix& m) {
  if (m.cols() == 0) return {};
  std::vector<RatVec> basis;
  if (m.rows() == 0) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      RatVec v(m.cols());
      v[j] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  basis = echelon_basis(nullspace(m));
  for (const auto& v : basis)
    for (const auto& y : m.apply(v))
      if (y != 0) throw Error("rational_kernel: verification failed");
  return basis;
}

inline std::vector<RatVec> rational_kernel(const ConstraintMatrix& cm) {
  RatMatrix m = cm.entries;
  if (m.cols() != cm.cols.size()) m = RatMatrix(0, cm.cols.size());
  return rational_kernel(m);
}

struct SingularSpace {
  Algebra algebra = Algebra::contact;
  Rat mu1;
  Rat mu2;
  unsigned level = 0;
  std::vector<ModVec> even_basis;
  std::vector<ModVec> odd_basis;

  std::size_t dim_even() const { return even_basis.size(); }
  std::size_t dim_odd() const { return odd_basis.size(); }
  const std::vector<ModVec>& basis(Parity p) const { return p == Parity::even ? even_basis : odd_basis; }
};

inline bool annihilated(const ModVec& v, const std::vector<RaiserId>& raisers) {
  TensorModule tm(v.algebra, v.mu1, v.mu2);
  for (RaiserId r : raisers)
    if (!tm.raise(r, v).is_zero()) return false;
  return true;
}

inline std::vector<ModVec> kernel_vectors(Algebra a, const Rat& mu1, const Rat& mu2, unsigned n, Parity sector,
                                          const std::vector<RaiserId>& raisers) {
  auto cm = constraint_matrix(a, mu1, mu2, n, sector, raisers);
  std::vector<ModVec> out;
  TensorModule tm(a, mu1, mu2);
  for (const auto& x : rational_kernel(cm)) {
    ModVec v = from_coords(a, mu1, mu2, cm.cols, x);
    for (RaiserId r : raisers)
      if (!tm.raise(r, v).is_zero()) throw Error("singular_space: kernel vector is not annihilated");
    out.push_back(std::move(v));
  }
  return out;
}

// n is the level (contact: 2*half-order or 2*half-order + 1).
inline SingularSpace singular_space(Algebra a, const Rat& mu1, const Rat& mu2, unsigned n,
                                    const std::vector<RaiserId>& raisers) {
  SingularSpace s{a, mu1, mu2, n, {}, {}};
  s.even_basis = kernel_vectors(a, mu1, mu2, n, Parity::even, raisers);
  s.odd_basis = kernel_vectors(a, mu1, mu2, n, Parity::odd, raisers);
  return s;
}

inline SingularSpace singular_space(Algebra a, const Rat& mu1, const Rat& mu2, unsigned n) {
  return singular_space(a, mu1, mu2, n, classification_raisers(a));
}

// ---------------------------------------------------------------------------
// Closed-form families.

enum class FamilyKind : std::uint8_t { contact_even, contact_odd, vect_d, vect_bc };

inline std::string_view family_kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::contact_even: return "contact-even";
    case FamilyKind::contact_odd: return "contact-odd";
    case FamilyKind::vect_d: return "vect-D";
    case FamilyKind::vect_bc: return "vect-BC";
  }
  return "?";
}

using NamedCoeffs = std::vector<std::pair<std::string, Rat>>;

// One basis vector of a closed-form solution family: the value of every
// coefficient for one choice of the free parameters.
struct CoefficientFamily {
  FamilyKind kind = FamilyKind::contact_even;
  std::string label;
  std::string parameter;   // the free parameter set to 1
  unsigned half_order = 0; // contact: the n of levels 2n / 2n+1; vect: the level
  NamedCoeffs coefficients;
  ModVec vector;
};

inline Rat factorial(unsigned k) {
  mpz_class f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return Rat(f);
}

inline std::string indexed(const char* name, unsigned i) { return name + std::to_string(i); }

// c_i / (i!(n-i)!) on K1'^i v (x) K1''^{n-i} w; e_i / (i!(n-1-i)!) on
// Kth'K1'^i v (x) Kth''K1''^{n-1-i} w.
inline ModVec contact_even_vector(const Rat& mu1, const Rat& mu2, unsigned n, const std::vector<Rat>& c,
                                  const std::vector<Rat>& e) {
  ModVec v{Algebra::contact, mu1, mu2, {}};
  for (unsigned i = 0; i <= n; ++i) v.add({{i, 0}, {n - i, 0}}, c[i] / (factorial(i) * factorial(n - i)));
  for (unsigned i = 0; i + 1 <= n; ++i)
    v.add({{i, 1}, {n - 1 - i, 1}}, e[i] / (factorial(i) * factorial(n - 1 - i)));
  return v;
}

// a_i on Kth'K1'^i v (x) K1''^{n-i} w; b_i on K1'^i v (x) Kth''K1''^{n-i} w.
inline ModVec contact_odd_vector(const Rat& mu1, const Rat& mu2, unsigned n, const std::vector<Rat>& a,
                                 const std::vector<Rat>& b) {
  ModVec v{Algebra::contact, mu1, mu2, {}};
  for (unsigned i = 0; i <= n; ++i) {
    v.add({{i, 1}, {n - i, 0}}, a[i]);
    v.add({{i, 0}, {n - i, 1}}, b[i]);
  }
  return v;
}

inline CoefficientFamily make_contact_even(const Rat& mu1, const Rat& mu2, unsigned n, std::string label,
                                           std::string parameter, const std::vector<Rat>& c,
                                           const std::vector<Rat>& e) {
  CoefficientFamily f{FamilyKind::contact_even, std::move(label), std::move(parameter), n, {}, {}};
  for (unsigned i = 0; i <= n; ++i) f.coefficients.emplace_back(indexed("c", i), c[i]);
  for (unsigned i = 0; i < n; ++i) f.coefficients.emplace_back(indexed("e", i), e[i]);
  f.vector = contact_even_vector(mu1, mu2, n, c, e);
  return f;
}

inline CoefficientFamily make_contact_odd(const Rat& mu1, const Rat& mu2, unsigned n, std::string label,
                                          std::string parameter, const std::vector<Rat>& a,
                                          const std::vector<Rat>& b) {
  CoefficientFamily f{FamilyKind::contact_odd, std::move(label), std::move(parameter), n, {}, {}};
  for (unsigned i = 0; i <= n; ++i) f.coefficients.emplace_back(indexed("a", i), a[i]);
  for (unsigned i = 0; i <= n; ++i) f.coefficients.emplace_back(indexed("b", i), b[i]);
  f.vector = contact_odd_vector(mu1, mu2, n, a, b);
  return f;
}

// Contact case analysis in closed form (even: A_i = 3(n+i+1) - mu2, B_i = (i+1) - mu1).
struct ContactCase {
  std::string label;
  std::optional<unsigned> index;  // j (even) or k (odd)
  std::optional<unsigned> t;      // odd-3 only
};

inline ContactCase contact_even_case(const Rat& mu1, const Rat& mu2, unsigned n) {
  for (unsigned j = 0; j < n; ++j)
    if (mu2 == Rat(3 * (n + j + 1)) && mu1 == Rat(j + 1)) return {"even-exceptional", j, {}};
  return {"even-generic", {}, {}};
}

inline ContactCase contact_odd_case(const Rat& mu1, const Rat& mu2, unsigned n) {
  for (unsigned k = 0; k < n; ++k) {
    if (mu2 - n + k != 0) continue;
    for (unsigned t = 0; t < k; ++t)
      if (mu1 == Rat(t)) return {"odd-3", k, t};
    return {"odd-2", k, {}};
  }
  return {"odd-1", {}, {}};
}

// The closed-form families evaluated literally. Coefficients the case analysis
// leaves unstated are filled from the two-line relation between c and e
// (c_i = (mu1-i) e_i / 2 for i < n, c_n = (6n - mu2) e_{n-1} / 2).
inline std::vector<CoefficientFamily> closed_form_contact(const Rat& mu1, const Rat& mu2, unsigned n, Parity parity) {
  std::vector<CoefficientFamily> out;
  if (parity == Parity::even) {
    auto cs = contact_even_case(mu1, mu2, n);
    auto fill_c = [&](const std::vector<Rat>& e, std::vector<Rat>& c, const std::vector<bool>& given) {
      for (unsigned i = 0; i < n; ++i)
        if (!given[i]) c[i] = (mu1 - i) * e[i] / 2;
      if (n > 0 && !given[n]) c[n] = (Rat(6 * n) - mu2) * e[n - 1] / 2;
    };
    if (n == 0) {
      out.push_back(make_contact_even(mu1, mu2, 0, cs.label, "c0", {Rat(1)}, {}));
      return out;
    }
    if (cs.label == "even-generic") {
      std::vector<Rat> e(n), c(n + 1);
      for (unsigned i = 0; i < n; ++i) {
        Rat p = 1;
        for (unsigned k = i; k < n; ++k) p *= (mu1 - (k + 1)) / (Rat(3 * (n + k + 1)) - mu2);
        e[i] = p;
      }
      fill_c(e, c, std::vector<bool>(n + 1, false));
      out.push_back(make_contact_even(mu1, mu2, n, cs.label, indexed("e", n), c, e));
      return out;
    }
    unsigned j = *cs.index;
    {
      std::vector<Rat> e(n), c(n + 1);
      std::vector<bool> given(n + 1, false);
      Rat pw = 1;
      e[j] = 1;
      for (unsigned i = j; i-- > 0;) {
        pw /= -3;
        e[i] = pw;
        c[i] = Rat(j - i + 1) / 2 * pw;
        given[i] = true;
      }
      fill_c(e, c, given);
      out.push_back(make_contact_even(mu1, mu2, n, cs.label, indexed("e", j), c, e));
    }
    {
      std::vector<Rat> e(n), c(n + 1);
      std::vector<bool> given(n + 1, false);
      for (unsigned l = j + 1; l < n; ++l) {
        Rat pw = 1;
        for (unsigned s = l; s < n; ++s) pw /= -3;
        e[l] = pw;
        c[l] = Rat(n - l + 1) / 2 * pw;
        given[l] = true;
      }
      fill_c(e, c, given);
      out.push_back(make_contact_even(mu1, mu2, n, cs.label, indexed("e", n), c, e));
    }
    return out;
  }

  auto cs = contact_odd_case(mu1, mu2, n);
  auto top = [&] {
    std::vector<Rat> a(n + 1), b(n + 1);
    a[n] = 1;
    out.push_back(make_contact_odd(mu1, mu2, n, cs.label, indexed("a", n), a, b));
  };
  // b_i and a_i for lo <= i < k from the product formulas, b_k = 1.
  auto chain = [&](unsigned lo, unsigned k) {
    std::vector<Rat> a(n + 1), b(n + 1);
    b[k] = 1;
    auto prod = [&](unsigned from) {
      Rat p = 1;
      for (unsigned s = from; s < k; ++s)
        p *= (Rat(s) - mu1) * (s + 1) / (Rat(static_cast<long>(s) - static_cast<long>(k)) * (n - s));
      return p;
    };
    for (unsigned i = lo; i < k; ++i) {
      b[i] = prod(i);
      a[i] = Rat(i + 1, n - i) * prod(i + 1);
    }
    out.push_back(make_contact_odd(mu1, mu2, n, cs.label, indexed("b", k), a, b));
  };
  if (cs.label == "odd-1") {
    if (mu1 == Rat(n)) top();
  } else if (cs.label == "odd-2") {
    chain(0, *cs.index);
    if (mu1 == Rat(n)) top();
  } else {
    unsigned t = *cs.t;
    std::vector<Rat> a(n + 1), b(n + 1);
    a[t] = 1;
    out.push_back(make_contact_odd(mu1, mu2, n, cs.label, indexed("a", t), a, b));
    chain(t + 1, *cs.index);
  }
  return out;
}

// Families solved from the reduced systems that the straightening engine
// actually produces:
//   even: c_i = (mu1-i) e_i / 2 (i < n), c_n = -mu2 e_{n-1} / 2,
//         (n-i-1-mu2) e_i + (i+1-mu1) e_{i+1} = 0 for i = 0..n-2;
//   odd:  (mu1-i) a_i + (mu2-n+i) b_i = 0 for i = 0..n,
//         a_i = (i+1)/(n-i) b_{i+1} for i = 0..n-1.
inline std::vector<CoefficientFamily> corrected_contact(const Rat& mu1, const Rat& mu2, unsigned n, Parity parity) {
  std::vector<CoefficientFamily> out;
  if (parity == Parity::even) {
    if (n == 0) {
      out.push_back(make_contact_even(mu1, mu2, 0, "corrected-even", "c0", {Rat(1)}, {}));
      return out;
    }
    RatMatrix m(n - 1, n);
    for (unsigned i = 0; i + 1 < n; ++i) {
      m(i, i) = Rat(n - i - 1) - mu2;
      m(i, i + 1) = Rat(i + 1) - mu1;
    }
    for (const auto& e : rational_kernel(m)) {
      std::vector<Rat> c(n + 1);
      for (unsigned i = 0; i < n; ++i) c[i] = (mu1 - i) * e[i] / 2;
      c[n] = -mu2 * e[n - 1] / 2;
      unsigned lead = 0;
      while (e[lead] == 0) ++lead;
      out.push_back(make_contact_even(mu1, mu2, n, "corrected-even", indexed("e", lead), c, e));
    }
    return out;
  }
  // unknowns a_0..a_n, b_0..b_n
  RatMatrix m(2 * n + 1, 2 * n + 2);
  for (unsigned i = 0; i <= n; ++i) {
    m(i, i) = mu1 - i;
    m(i, n + 1 + i) = mu2 - n + i;
  }
  for (unsigned i = 0; i < n; ++i) {
    m(n + 1 + i, i) = n - i;
    m(n + 1 + i, n + 2 + i) = -Rat(i + 1);
  }
  for (const auto& x : rational_kernel(m)) {
    std::vector<Rat> a(x.begin(), x.begin() + n + 1), b(x.begin() + n + 1, x.end());
    unsigned lead = 0;
    while (x[lead] == 0) ++lead;
    std::string p = lead <= n ? indexed("a", lead) : indexed("b", lead - n - 1);
    out.push_back(make_contact_odd(mu1, mu2, n, "corrected-odd", p, a, b));
  }
  return out;
}

// A_i = (n-i)(mu2 - 2(n-i-1)), B_i = (i+1)(mu1 - 2i).
inline Rat vect_a(const Rat& mu2, unsigned n, unsigned i) { return Rat(n - i) * (mu2 - 2 * (Rat(n) - i - 1)); }
inline Rat vect_b(const Rat& mu1, unsigned i) { return Rat(i + 1) * (mu1 - 2 * Rat(i)); }

// k d'^{k-1} d''^{n-k} delta' u + (n-k) d'^k d''^{n-k-1} delta'' u
inline ModVec vect_bc_element(const Rat& mu1, const Rat& mu2, unsigned n, unsigned k) {
  ModVec v{Algebra::vect, mu1, mu2, {}};
  if (k > 0) v.add({{k - 1, 1}, {n - k, 0}}, Rat(k));
  if (k < n) v.add({{k, 0}, {n - k - 1, 1}}, Rat(n - k));
  return v;
}

inline CoefficientFamily make_vect_bc(const Rat& mu1, const Rat& mu2, unsigned n, std::string label,
                                      std::string parameter, const std::vector<Rat>& b) {
  CoefficientFamily f{FamilyKind::vect_bc, std::move(label), std::move(parameter), n, {}, {Algebra::vect, mu1, mu2, {}}};
  for (unsigned m = 0; m <= n; ++m) {
    f.coefficients.emplace_back(indexed("b", m), b[m]);
    if (b[m] == 0) continue;
    for (const auto& [mono, c] : vect_bc_element(mu1, mu2, n, m).terms) f.vector.add(mono, b[m] * c);
  }
  return f;
}

inline int alt_sign(unsigned m) { return (m & 1) ? -1 : 1; }

inline std::vector<CoefficientFamily> closed_form_vect(const Rat& mu1, const Rat& mu2, unsigned n, Parity parity) {
  std::vector<CoefficientFamily> out;
  if (parity == Parity::even) {
    if (n < 2) return out;
    for (unsigned k = 0; k + 2 <= n; ++k) {
      if (mu1 != Rat(2 * k) || mu2 != Rat(2 * n) - 4 - 2 * Rat(k)) continue;
      CoefficientFamily f{FamilyKind::vect_d, "vect-even-D", indexed("D", k), n, {}, {Algebra::vect, mu1, mu2, {}}};
      for (unsigned i = 0; i + 2 <= n; ++i) f.coefficients.emplace_back(indexed("D", i), Rat(i == k ? 1 : 0));
      f.vector.add({{k, 1}, {n - k - 2, 1}}, 1);
      out.push_back(std::move(f));
    }
    return out;
  }
  if (n == 0) return out;
  std::optional<unsigned> ia, jb;
  for (unsigned i = 0; i < n; ++i) {
    if (!ia && vect_a(mu2, n, i) == 0) ia = i;
    if (!jb && vect_b(mu1, i) == 0) jb = i;
  }
  auto a_prod = [&](unsigned from, unsigned to) {
    Rat p = 1;
    for (unsigned k = from; k < to; ++k) p *= vect_a(mu2, n, k);
    return p;
  };
  auto b_prod = [&](unsigned from, unsigned to) {
    Rat p = 1;
    for (unsigned k = from; k < to; ++k) p *= vect_b(mu1, k);
    return p;
  };
  if (ia && jb && *jb >= *ia) {
    unsigned i = *ia, j = *jb;
    std::vector<Rat> b1(n + 1), b2(n + 1);
    for (unsigned m = 0; m <= i; ++m) b1[m] = alt_sign(m) * a_prod(0, m) * b_prod(m, i);
    for (unsigned m = j + 1; m <= n; ++m) b2[m] = alt_sign(m) * a_prod(j + 1, m) * b_prod(m, n);
    out.push_back(make_vect_bc(mu1, mu2, n, "vect-odd-first", "b-low", b1));
    out.push_back(make_vect_bc(mu1, mu2, n, "vect-odd-second", "b-high", b2));
    return out;
  }
  std::vector<Rat> b(n + 1);
  for (unsigned m = 0; m <= n; ++m) b[m] = alt_sign(m) * a_prod(0, m) * b_prod(m, n);
  out.push_back(make_vect_bc(mu1, mu2, n, "vect-odd-generic", "b", b));
  return out;
}

// Coefficient matrix of s_xi on the X+-kernel basis of the odd sector:
// column k is s_xi(element k) expressed on d'^k d''^{n-k-1} u, k = 0..n-1.
inline RatMatrix vect_bc_reduced_matrix(const Rat& mu1, const Rat& mu2, unsigned n) {
  TensorModule tm(Algebra::vect, mu1, mu2);
  RatMatrix m(n, n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    ModVec el = vect_bc_element(mu1, mu2, n, k);
    if (!tm.raise(RaiserId::x_plus, el).is_zero()) throw Error("BC basis element is not killed by X+");
    ModVec img = tm.raise(RaiserId::s_xi, el);
    for (unsigned r = 0; r < n; ++r) {
      TensorMonomial row{{r, 0}, {n - r - 1, 0}};
      m(r, k) = img.coeff(row);
      img.terms.erase(row);
    }
    if (!img.is_zero()) throw Error("s_xi image of a BC element leaves the A-type sector");
  }
  return m;
}

// Odd kernel through the reduced basis, expressed on raw monomials.
inline std::vector<ModVec> vect_bc_reduced_kernel(const Rat& mu1, const Rat& mu2, unsigned n) {
  std::vector<ModVec> out;
  if (n == 0) return out;
  RatMatrix m = vect_bc_reduced_matrix(mu1, mu2, n);
  for (const auto& b : rational_kernel(m)) {
    ModVec v{Algebra::vect, mu1, mu2, {}};
    for (unsigned k = 0; k <= n; ++k)
      for (const auto& [mono, c] : vect_bc_element(mu1, mu2, n, k).terms) v.add(mono, b[k] * c);
    out.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Predictions and comparison.

struct Prediction {
  std::size_t even = 0;
  std::size_t odd = 0;
  std::string label;
  friend bool operator==(const Prediction&, const Prediction&) = default;
};

inline Prediction predict_dimension(Algebra a, const Rat& mu1, const Rat& mu2, unsigned n) {
  if (a == Algebra::vect) {
    if (n == 0) return {1, 0, "vect-level-0"};
    bool even1 = is_nonneg_even(mu1), even2 = is_nonneg_even(mu2);
    Rat top(2 * static_cast<long>(n) - 2);
    if (even1 && even2 && mu1 + mu2 == top - 2) return {1, 1, "vect-i"};
    if (even1 && even2 && mu1 <= top && mu2 <= top && mu1 + mu2 >= top) return {0, 2, "vect-ii"};
    return {0, 1, "vect-iii"};
  }
  unsigned half = n / 2;
  if (n % 2 == 0) {
    auto cs = contact_even_case(mu1, mu2, half);
    return {cs.label == "even-generic" ? 1u : 2u, 0, cs.label};
  }
  auto cs = contact_odd_case(mu1, mu2, half);
  bool top = mu1 == Rat(half);
  if (cs.label == "odd-1") return {0, top ? 1u : 0u, cs.label};
  if (cs.label == "odd-2") return {0, top ? 2u : 1u, cs.label};
  return {0, 2, cs.label};
}

inline std::vector<CoefficientFamily> closed_forms(Algebra a, const Rat& mu1, const Rat& mu2, unsigned n, Parity p) {
  if (a == Algebra::vect) return closed_form_vect(mu1, mu2, n, p);
  if ((n % 2 == 1) != (p == Parity::odd)) return {};
  return closed_form_contact(mu1, mu2, n / 2, p);
}

struct FamilyCheck {
  std::string label;
  std::string parameter;
  bool nonzero = false;
  bool in_kernel = false;
};

struct SectorComparison {
  Parity sector = Parity::even;
  std::size_t kernel_dim = 0;
  std::size_t predicted_dim = 0;
  std::vector<FamilyCheck> families;
  bool families_span = false;
  bool dims_match() const { return kernel_dim == predicted_dim; }
  bool families_ok() const {
    if (!families_span) return false;
    return std::all_of(families.begin(), families.end(), [](const FamilyCheck& f) { return f.in_kernel; });
  }
};

struct Discrepancy {
  std::string kind;
  std::string detail;
};

enum class ClosedStatus : std::uint8_t { pass, fail, not_applicable };

inline std::string_view closed_status_name(ClosedStatus s) {
  switch (s) {
    case ClosedStatus::pass: return "pass";
    case ClosedStatus::fail: return "fail";
    case ClosedStatus::not_applicable: return "not-applicable";
  }
  return "?";
}

inline ClosedStatus parse_closed_status(std::string_view s) {
  if (s == "pass") return ClosedStatus::pass;
  if (s == "fail") return ClosedStatus::fail;
  if (s == "not-applicable") return ClosedStatus::not_applicable;
  throw Error("unknown closed-form status '" + std::string(s) + "'");
}

struct ComparisonReport {
  Algebra algebra = Algebra::contact;
  Rat mu1;
  Rat mu2;
  unsigned level = 0;
  std::string case_label;
  SectorComparison even;
  SectorComparison odd;
  std::vector<Discrepancy> discrepancies;

  bool all_match() const { return discrepancies.empty(); }
  ClosedStatus closed_status() const {
    if (even.families.empty() && odd.families.empty() && even.kernel_dim == 0 && odd.kernel_dim == 0)
      return ClosedStatus::not_applicable;
    return even.families_ok() && odd.families_ok() ? ClosedStatus::pass : ClosedStatus::fail;
  }
};

inline std::vector<RatVec> coordinates(const std::vector<ModVec>& vs, const std::vector<TensorMonomial>& basis) {
  std::vector<RatVec> out;
  for (const auto& v : vs) out.push_back(to_coords(v, basis));
  return out;
}

inline SectorComparison compare_sector(const SingularSpace& s, Parity p, std::size_t predicted,
                                       const std::vector<CoefficientFamily>& fams) {
  SectorComparison out;
  out.sector = p;
  out.kernel_dim = s.basis(p).size();
  out.predicted_dim = predicted;
  auto basis = level_basis(s.algebra, s.level, p);
  auto kernel = coordinates(s.basis(p), basis);
  std::vector<RatVec> fam_coords;
  for (const auto& f : fams) {
    FamilyCheck fc{f.label, f.parameter, !f.vector.is_zero(), false};
    bool in_sector = true;
    for (const auto& [m, c] : f.vector.terms)
      if (m.level(s.algebra) != s.level || m.parity() != p) in_sector = false;
    if (in_sector) {
      RatVec x = to_coords(f.vector, basis);
      fc.in_kernel = in_span(x, kernel);
      fam_coords.push_back(std::move(x));
    }
    out.families.push_back(std::move(fc));
  }
  out.families_span = same_span(fam_coords, kernel);
  return out;
}

inline std::string dims_str(std::size_t e, std::size_t o) { return std::to_string(e) + "|" + std::to_string(o); }

inline ComparisonReport compare_closed_vs_kernel(const SingularSpace& s) {
  ComparisonReport r;
  r.algebra = s.algebra;
  r.mu1 = s.mu1;
  r.mu2 = s.mu2;
  r.level = s.level;
  Prediction pred = predict_dimension(s.algebra, s.mu1, s.mu2, s.level);
  r.case_label = pred.label;
  r.even = compare_sector(s, Parity::even, pred.even, closed_forms(s.algebra, s.mu1, s.mu2, s.level, Parity::even));
  r.odd = compare_sector(s, Parity::odd, pred.odd, closed_forms(s.algebra, s.mu1, s.mu2, s.level, Parity::odd));
  if (!r.even.dims_match() || !r.odd.dims_match())
    r.discrepancies.push_back({"dimension", "kernel " + dims_str(r.even.kernel_dim, r.odd.kernel_dim) +
                                                ", predicted " + dims_str(pred.even, pred.odd) + " (" +
                                                pred.label + ")"});
  for (const auto* sec : {&r.even, &r.odd}) {
    const char* name = sec->sector == Parity::even ? "even" : "odd";
    for (const auto& f : sec->families)
      if (!f.in_kernel)
        r.discrepancies.push_back({"family-not-in-kernel", std::string(name) + " family " + f.label + " (" +
                                                               f.parameter + "=1) is not annihilated"});
    if (!sec->families_span)
      r.discrepancies.push_back({"families-do-not-span", std::string(name) + " sector: closed forms do not span "
                                                                             "the kernel"});
  }
  return r;
}

inline ComparisonReport compare_closed_vs_kernel(Algebra a, const Rat& mu1, const Rat& mu2, unsigned n) {
  return compare_closed_vs_kernel(singular_space(a, mu1, mu2, n));
}

// ---------------------------------------------------------------------------
// Reference nabla+ action formulas, checked against straightening.

struct DisplayCheck {
  std::string id;
  std::string coefficient;  // the coefficient under test
  bool matches = true;
  std::size_t monomials_checked = 0;
  std::size_t mismatches = 0;
  std::string corrected;    // empty when matches
};

// Checks every monomial shape of the four displays on levels <= max_level at
// each sampled weight pair. The second display is tested in both stated
// versions, X = 3(n-i-1) and X = 3(n+i+1).
inline std::vector<DisplayCheck> nabla_display_checks(unsigned max_level,
                                                      const std::vector<std::pair<Rat, Rat>>& weights) {
  DisplayCheck d1{"nabla-1", "-2i, -2(n-i)", true, 0, 0, ""};
  DisplayCheck d2a{"nabla-2-standalone", "-mu2+3(n-i-1)", true, 0, 0, ""};
  DisplayCheck d2b{"nabla-2-expanded", "-mu2+3(n+i+1)", true, 0, 0, ""};
  DisplayCheck d3{"nabla-3", "mu1-i, 2(n-i)", true, 0, 0, ""};
  DisplayCheck d4{"nabla-4", "-2i, mu2-(n-i)", true, 0, 0, ""};
  auto record = [](DisplayCheck& d, bool ok) {
    ++d.monomials_checked;
    if (!ok) {
      ++d.mismatches;
      d.matches = false;
    }
  };
  for (const auto& [mu1, mu2] : weights) {
    TensorModule tm(Algebra::contact, mu1, mu2);
    auto act = [&](TensorMonomial m) { return tm.raise(RaiserId::nabla_plus, tm.basis_vector(m)); };
    for (unsigned level = 0; level <= max_level; ++level) {
      unsigned n = level / 2;
      if (level % 2 == 0) {
        for (unsigned i = 0; i <= n; ++i) {
          ModVec expect{Algebra::contact, mu1, mu2, {}};
          if (i > 0) expect.add({{i - 1, 1}, {n - i, 0}}, -2 * Rat(i));
          if (i < n) expect.add({{i, 0}, {n - i - 1, 1}}, -2 * Rat(n - i));
          record(d1, act({{i, 0}, {n - i, 0}}) == expect);
        }
        for (unsigned i = 0; i + 1 <= n; ++i) {
          ModVec got = act({{i, 1}, {n - i - 1, 1}});
          for (auto [d, x] : {std::pair{&d2a, Rat(3 * (n - i - 1))}, std::pair{&d2b, Rat(3 * (n + i + 1))}}) {
            ModVec expect{Algebra::contact, mu1, mu2, {}};
            expect.add({{i, 0}, {n - i - 1, 1}}, mu1 - i);
            expect.add({{i, 1}, {n - i - 1, 0}}, -mu2 + x);
            record(*d, got == expect);
          }
        }
      } else {
        for (unsigned i = 0; i <= n; ++i) {
          ModVec e3{Algebra::contact, mu1, mu2, {}};
          e3.add({{i, 0}, {n - i, 0}}, mu1 - i);
          if (i < n) e3.add({{i, 1}, {n - i - 1, 1}}, 2 * Rat(n - i));
          record(d3, act({{i, 1}, {n - i, 0}}) == e3);
          ModVec e4{Algebra::contact, mu1, mu2, {}};
          if (i > 0) e4.add({{i - 1, 1}, {n - i, 1}}, -2 * Rat(i));
          e4.add({{i, 0}, {n - i, 0}}, mu2 - (Rat(n) - i));
          record(d4, act({{i, 0}, {n - i, 1}}) == e4);
        }
      }
    }
  }
  // The corrected second display, derived once more from straightening.
  DisplayCheck corrected{"nabla-2-straightened", "-mu2+(n-i-1)", true, 0, 0, ""};
  for (const auto& [mu1, mu2] : weights) {
    TensorModule tm(Algebra::contact, mu1, mu2);
    for (unsigned n = 1; 2 * n <= max_level; ++n)
      for (unsigned i = 0; i < n; ++i) {
        ModVec got = tm.raise(RaiserId::nabla_plus, tm.basis_vector({{i, 1}, {n - i - 1, 1}}));
        ModVec expect{Algebra::contact, mu1, mu2, {}};
        expect.add({{i, 0}, {n - i - 1, 1}}, mu1 - i);
        expect.add({{i, 1}, {n - i - 1, 0}}, -mu2 + Rat(n - i - 1));
        record(corrected, got == expect);
      }
  }
  for (auto* d : {&d1, &d2a, &d2b, &d3, &d4})
    if (!d->matches) d->corrected = d == &d2a || d == &d2b ? corrected.coefficient : "see straightening";
  std::vector<DisplayCheck> out{d1, d2a, d2b, d3, d4};
  if (!corrected.matches) corrected.corrected = "unresolved";
  out.push_back(corrected);
  return out;
}

inline std::vector<std::pair<Rat, Rat>> default_display_weights() {
  return {{Rat(7, 3), Rat(5, 2)}, {Rat(0), Rat(0)}, {Rat(1), Rat(2)}, {Rat(-3, 4), Rat(11, 5)}};
}

}  // namespace grc
