#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "grc/linalg.hpp"
#include "grc/superpoly.hpp"

namespace grc {

// gl(1|1) with X- = xi d, H1 = x d, H2 = xi delta, X+ = x delta.
// [X+, X-] = H1 + H2, [H1, X-] = -X-, [H2, X-] = X-.
enum class GlOp : std::uint8_t { x_minus, x_plus, h1, h2 };

inline Parity gl_parity(GlOp op) { return (op == GlOp::x_minus || op == GlOp::x_plus) ? Parity::odd : Parity::even; }

// M^{lambda;mu}: basis {v, X- v} with H1 v = a v, H2 v = b v, X+ v = 0,
// where lambda = a + b and mu = a - b.
struct Gl11Module {
  Rat lambda;
  Rat mu;
  Parity generator = Parity::even;

  Rat a() const { return (lambda + mu) / 2; }
  Rat b() const { return (lambda - mu) / 2; }
  Parity parity_of(unsigned i) const { return i ? generator + Parity::odd : generator; }

  // op applied to basis vector i (0 = v, 1 = X- v); nullopt when zero.
  std::optional<std::pair<unsigned, Rat>> act(GlOp op, unsigned i) const {
    switch (op) {
      case GlOp::x_minus:
        if (i == 0) return std::pair{1u, Rat(1)};
        return std::nullopt;  // X-^2 = (1/2)[X-, X-] = 0
      case GlOp::x_plus:
        if (i == 1 && lambda != 0) return std::pair{0u, lambda};
        return std::nullopt;
      case GlOp::h1: {
        Rat w = i ? a() - 1 : a();
        if (w == 0) return std::nullopt;
        return std::pair{i, w};
      }
      case GlOp::h2: {
        Rat w = i ? b() + 1 : b();
        if (w == 0) return std::nullopt;
        return std::pair{i, w};
      }
    }
    return std::nullopt;
  }
};

// Vectors of V1 (x) V2 in the basis v(x)w, X-v(x)w, v(x)X-w, X-v(x)X-w.
using TensorVec4 = std::array<Rat, 4>;

inline unsigned tindex(unsigned i, unsigned j) { return i + 2 * j; }

inline TensorVec4 tensor_act(GlOp op, const Gl11Module& m1, const Gl11Module& m2, const TensorVec4& x) {
  TensorVec4 out{};
  for (unsigned i = 0; i < 2; ++i)
    for (unsigned j = 0; j < 2; ++j) {
      const Rat& c = x[tindex(i, j)];
      if (c == 0) continue;
      if (auto r = m1.act(op, i)) out[tindex(r->first, j)] += c * r->second;
      if (auto r = m2.act(op, j)) out[tindex(i, r->first)] += Rat(koszul(gl_parity(op), m1.parity_of(i))) * c * r->second;
    }
  return out;
}

inline TensorVec4 tvec(std::initializer_list<std::pair<unsigned, Rat>> entries) {
  TensorVec4 v{};
  for (const auto& [k, c] : entries) v[k] += c;
  return v;
}

inline bool is_zero(const TensorVec4& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& c) { return c == 0; });
}

struct Summand {
  Rat lambda;
  Rat mu;
  Parity parity = Parity::even;
  unsigned dimension = 0;
};

struct Arrow {
  std::string op;
  std::string from;
  std::string to;
  Rat coefficient;
};

enum class CaseKind : std::uint8_t { case_i, case_ii, case_iii, case_iv };

inline std::string_view case_name(CaseKind k) {
  switch (k) {
    case CaseKind::case_i: return "case-i";
    case CaseKind::case_ii: return "case-ii";
    case CaseKind::case_iii: return "case-iii";
    case CaseKind::case_iv: return "case-iv";
  }
  return "?";
}

struct CaseId {
  CaseKind kind = CaseKind::case_i;
  std::vector<Summand> summands;  // irreducible pieces (cases i-iii)
  std::vector<std::string> layers;  // case iv, top to bottom
  std::vector<Arrow> arrows;        // case iv
};

// Named vectors of the case-iv diagram.
struct NamedVec {
  std::string name;
  TensorVec4 vec;
};

inline std::vector<NamedVec> adjoint_layers() {
  return {{"v(x)w", tvec({{0, 1}})},
          {"X-v(x)w+v(x)X-w", tvec({{1, 1}, {2, 1}})},
          {"X-v(x)w-v(x)X-w", tvec({{1, 1}, {2, -1}})},
          {"X-v(x)X-w", tvec({{3, 1}})}};
}

// Expresses y as a multiple of one of the named vectors, if possible.
inline std::optional<std::pair<std::string, Rat>> as_multiple(const TensorVec4& y, const std::vector<NamedVec>& named) {
  for (const auto& n : named) {
    std::optional<Rat> ratio;
    bool ok = true;
    for (unsigned k = 0; k < 4 && ok; ++k) {
      if (n.vec[k] == 0) {
        ok = y[k] == 0;
      } else {
        Rat r = y[k] / n.vec[k];
        if (ratio && *ratio != r) ok = false;
        ratio = r;
      }
    }
    if (ok && ratio && *ratio != 0) return std::pair{n.name, *ratio};
  }
  return std::nullopt;
}

inline CaseId tensor_case(const Rat& lambda, const Rat& mu, const Rat& sigma, const Rat& rho,
                          Parity p1 = Parity::even, Parity p2 = Parity::even) {
  CaseId out;
  Parity p = p1 + p2;
  if (lambda == 0 && sigma == 0) {
    out.kind = CaseKind::case_i;
    out.summands.push_back({0, mu + rho, p, 1});
  } else if (lambda == 0 || sigma == 0) {
    out.kind = CaseKind::case_ii;
    out.summands.push_back({lambda + sigma, mu + rho, p, 2});
  } else if (lambda + sigma != 0) {
    out.kind = CaseKind::case_iii;
    out.summands.push_back({lambda + sigma, mu + rho, p, 2});
    out.summands.push_back({lambda + sigma, mu + rho - 2, p + Parity::odd, 2});
  } else {
    out.kind = CaseKind::case_iv;
    Gl11Module m1{lambda, mu, p1}, m2{sigma, rho, p2};
    auto named = adjoint_layers();
    for (const auto& n : named) out.layers.push_back(n.name);
    for (const auto& n : named)
      for (auto [op, name] : {std::pair{GlOp::x_plus, "X+"}, std::pair{GlOp::x_minus, "X-"}}) {
        TensorVec4 y = tensor_act(op, m1, m2, n.vec);
        if (is_zero(y)) continue;
        auto hit = as_multiple(y, named);
        if (!hit) throw Error("tensor_case: arrow target outside the diagram");
        out.arrows.push_back({name, n.name, hit->first, hit->second});
      }
  }
  return out;
}

// Coefficients (x, y) of x X-v(x)w + y v(x)X-w killed by X+.
inline std::vector<std::pair<Rat, Rat>> level1_highest(const Rat& lambda, const Rat& mu, const Rat& sigma,
                                                       const Rat& rho) {
  Gl11Module m1{lambda, mu}, m2{sigma, rho};
  RatMatrix m(4, 2);
  for (unsigned c = 0; c < 2; ++c) {
    TensorVec4 y = tensor_act(GlOp::x_plus, m1, m2, c == 0 ? tvec({{1, 1}}) : tvec({{2, 1}}));
    for (unsigned r = 0; r < 4; ++r) m(r, c) = y[r];
  }
  std::vector<std::pair<Rat, Rat>> out;
  Echelon e = rref(m);
  std::vector<bool> pivot(2, false);
  for (auto c : e.pivots) pivot[c] = true;
  for (unsigned f = 0; f < 2; ++f) {
    if (pivot[f]) continue;
    RatVec v(2);
    v[f] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced(k, f);
    out.emplace_back(v[0], v[1]);
  }
  return out;
}

inline std::optional<RatMatrix> inverse(const RatMatrix& m) {
  std::size_t n = m.rows();
  if (m.cols() != n) throw Error("inverse: matrix is not square");
  RatMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  Echelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

inline RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw Error("multiply: dimension mismatch");
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

inline RatMatrix op_matrix(GlOp op, const Gl11Module& m1, const Gl11Module& m2) {
  RatMatrix m(4, 4);
  for (unsigned c = 0; c < 4; ++c) {
    TensorVec4 e{};
    e[c] = 1;
    TensorVec4 y = tensor_act(op, m1, m2, e);
    for (unsigned r = 0; r < 4; ++r) m(r, c) = y[r];
  }
  return m;
}

// Projections of V1 (x) V2 onto the two summands of case iii: the submodule
// generated by v(x)w and the one generated by sigma X-v(x)w - lambda v(x)X-w.
struct CaseIIIProjections {
  RatMatrix even;
  RatMatrix odd;
};

inline CaseIIIProjections case_iii_projections(const Rat& lambda, const Rat& mu, const Rat& sigma, const Rat& rho) {
  if (tensor_case(lambda, mu, sigma, rho).kind != CaseKind::case_iii)
    throw Error("case_iii_projections: weights are not in case iii");
  Gl11Module m1{lambda, mu}, m2{sigma, rho};
  TensorVec4 top = tvec({{0, 1}});
  TensorVec4 h = tvec({{1, sigma}, {2, -lambda}});
  std::array<TensorVec4, 4> cols{top, tensor_act(GlOp::x_minus, m1, m2, top), h, tensor_act(GlOp::x_minus, m1, m2, h)};
  RatMatrix p(4, 4);
  for (unsigned c = 0; c < 4; ++c)
    for (unsigned r = 0; r < 4; ++r) p(r, c) = cols[c][r];
  auto pinv = inverse(p);
  if (!pinv) throw Error("case_iii_projections: summands do not span");
  CaseIIIProjections out{RatMatrix(4, 4), RatMatrix(4, 4)};
  for (unsigned half = 0; half < 2; ++half) {
    RatMatrix d(4, 4);
    d(2 * half, 2 * half) = 1;
    d(2 * half + 1, 2 * half + 1) = 1;
    (half == 0 ? out.even : out.odd) = multiply(multiply(p, d), *pinv);
  }
  return out;
}

}  // namespace grc
