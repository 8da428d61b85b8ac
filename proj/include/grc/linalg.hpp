#pragma once

#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "grc/rational.hpp"

namespace grc {

using RatVec = std::vector<Rat>;

// Dense row-major rational matrix.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rat> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Rat> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw Error("append_row: column count mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  // Stacks `other` below this matrix.
  void stack(const RatMatrix& other) {
    if (other.rows_ == 0) return;
    for (std::size_t r = 0; r < other.rows_; ++r) append_row(other.row(r));
  }

  RatVec apply(std::span<const Rat> x) const {
    if (x.size() != cols_) throw Error("apply: dimension mismatch");
    RatVec y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (x[c] != 0 && (*this)(r, c) != 0) y[r] += (*this)(r, c) * x[c];
    return y;
  }

  std::string debug_dump() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_ << "\n";
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << to_string((*this)(r, c));
      os << "\n";
    }
    return os.str();
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

struct Echelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;
};

// Gauss-Jordan elimination to reduced row echelon form.
inline Echelon rref(RatMatrix m) {
  Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t k = 0; k < m.cols(); ++k) swap(m(p, k), m(r, k));
    Rat inv = 1 / m(r, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(r, k) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (m(r, k) != 0) m(i, k) -= f * m(r, k);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

inline std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

// Nullspace basis, one vector per free column, with the free coordinate = 1.
// Every vector is re-checked against m.
inline std::vector<RatVec> nullspace(const RatMatrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVec v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced(k, f);
    basis.push_back(std::move(v));
  }
  for (const auto& v : basis)
    for (const auto& y : m.apply(v))
      if (y != 0) throw Error("nullspace: verification failed");
  return basis;
}

// Reduced echelon basis of span(vectors): leading coordinate 1, pivots
// increasing, zero in other vectors' pivot positions.
inline std::vector<RatVec> echelon_basis(const std::vector<RatVec>& vectors) {
  RatMatrix m;
  for (const auto& v : vectors) m.append_row(v);
  if (m.rows() == 0) return {};
  Echelon e = rref(m);
  std::vector<RatVec> out;
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    auto r = e.reduced.row(k);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

inline std::size_t span_rank(const std::vector<RatVec>& vectors) {
  RatMatrix m;
  for (const auto& v : vectors) m.append_row(v);
  return m.rows() == 0 ? 0 : rank(m);
}

// True when span(a) == span(b).
inline bool same_span(const std::vector<RatVec>& a, const std::vector<RatVec>& b) {
  std::size_t ra = span_rank(a), rb = span_rank(b);
  if (ra != rb) return false;
  std::vector<RatVec> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return span_rank(both) == ra;
}

inline bool in_span(const RatVec& v, const std::vector<RatVec>& basis) {
  std::vector<RatVec> both = basis;
  both.push_back(v);
  return span_rank(both) == span_rank(basis);
}

}  // namespace grc
