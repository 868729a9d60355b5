#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "bqarrow/errors.hpp"

namespace bqarrow {

// Dense row-major matrix with entries kept as residues mod m.
class ModMatrix {
 public:
  ModMatrix(std::size_t rows, std::size_t cols, std::int64_t modulus)
      : rows_(rows), cols_(cols), m_(modulus), data_(rows * cols, 0) {
    if (modulus < 1) throw ModulusError("modulus must be at least 1");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t modulus() const { return m_; }

  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t v) { data_[r * cols_ + c] = reduce(v); }
  void add(std::size_t r, std::size_t c, std::int64_t v) { set(r, c, (*this)(r, c) + reduce(v)); }

  std::int64_t reduce(std::int64_t v) const {
    v %= m_;
    return v < 0 ? v + m_ : v;
  }

  // row r <- a*row r + b*row s ; row s <- c*row r + d*row s
  void mix_rows(std::size_t r, std::size_t s, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const std::int64_t x = (*this)(r, j), y = (*this)(s, j);
      set(r, j, mulmod(a, x) + mulmod(b, y));
      set(s, j, mulmod(c, x) + mulmod(d, y));
    }
  }
  // col r <- a*col r + b*col s ; col s <- c*col r + d*col s
  void mix_cols(std::size_t r, std::size_t s, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    for (std::size_t i = 0; i < rows_; ++i) {
      const std::int64_t x = (*this)(i, r), y = (*this)(i, s);
      set(i, r, mulmod(a, x) + mulmod(b, y));
      set(i, s, mulmod(c, x) + mulmod(d, y));
    }
  }
  void swap_rows(std::size_t r, std::size_t s) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap(data_[r * cols_ + j], data_[s * cols_ + j]);
  }
  void swap_cols(std::size_t r, std::size_t s) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap(data_[i * cols_ + r], data_[i * cols_ + s]);
  }

  static ModMatrix identity(std::size_t n, std::int64_t modulus) {
    ModMatrix id(n, n, modulus);
    for (std::size_t i = 0; i < n; ++i) id.set(i, i, 1);
    return id;
  }

 private:
  std::int64_t mulmod(std::int64_t a, std::int64_t b) const {
    return static_cast<std::int64_t>((static_cast<__int128>(reduce(a)) * b) % m_);
  }

  std::size_t rows_, cols_;
  std::int64_t m_;
  std::vector<std::int64_t> data_;
};

namespace detail {

// g = p*a + q*b with g = gcd(a, b) >= 0
inline std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& p, std::int64_t& q) {
  std::int64_t p0 = 1, q0 = 0, p1 = 0, q1 = 1;
  while (b != 0) {
    const std::int64_t k = a / b;
    std::tie(a, b) = std::make_pair(b, a - k * b);
    std::tie(p0, p1) = std::make_pair(p1, p0 - k * p1);
    std::tie(q0, q1) = std::make_pair(q1, q0 - k * q1);
  }
  p = p0;
  q = q0;
  return a;
}

struct Bezout {
  std::int64_t p, q, g;
};

// Coefficients for a unimodular 2x2 transform taking (x, y) to (g, 0).
// When x already divides y the transform is a plain elimination.
inline Bezout bezout(std::int64_t x, std::int64_t y) {
  if (y % x == 0) return {1, 0, x};
  std::int64_t p, q;
  const std::int64_t g = ext_gcd(x, y, p, q);
  return {p, q, g};
}

}  // namespace detail

// Solution module of A x = 0 over Z_m.
//
// A is brought to diagonal form D = P A Q with P, Q invertible over Z_m, using
// only 2x2 unimodular integer transforms, so no coefficient growth occurs.
// With y = Q^{-1} x the system decouples into d_i y_i = 0, whose solutions are
// the multiples of m/gcd(d_i, m). Each such coordinate contributes a cyclic
// factor of order gcd(d_i, m).
class ModularKernel {
 public:
  explicit ModularKernel(ModMatrix a) : m_(a.modulus()), n_(a.cols()), q_(ModMatrix::identity(n_, m_)),
                                        q_inv_(ModMatrix::identity(n_, m_)) {
    diagonalize(a);
  }

  std::int64_t modulus() const { return m_; }
  std::size_t unknowns() const { return n_; }

  // Generators of the solution module with order > 1 and their orders.
  std::vector<std::vector<std::int64_t>> generators() const {
    std::vector<std::vector<std::int64_t>> out;
    for (std::size_t i = 0; i < n_; ++i) {
      if (order_[i] == 1) continue;
      const std::int64_t scale = m_ / order_[i];
      std::vector<std::int64_t> g(n_);
      for (std::size_t r = 0; r < n_; ++r) g[r] = q_.reduce(q_(r, i) * scale);
      out.push_back(std::move(g));
    }
    return out;
  }
  std::vector<std::int64_t> orders() const {
    std::vector<std::int64_t> out;
    for (std::int64_t o : order_)
      if (o != 1) out.push_back(o);
    return out;
  }

  // Coefficients of x over generators(), or nullopt when x is not a solution.
  std::optional<std::vector<std::int64_t>> coordinates(const std::vector<std::int64_t>& x) const {
    if (x.size() != n_) throw DimensionError("vector length does not match the number of unknowns");
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < n_; ++i) {
      std::int64_t y = 0;
      for (std::size_t j = 0; j < n_; ++j) y = q_inv_.reduce(y + static_cast<std::int64_t>(
                                                   (static_cast<__int128>(q_inv_(i, j)) * q_inv_.reduce(x[j])) % m_));
      const std::int64_t step = m_ / order_[i];
      if (y % step != 0) return std::nullopt;
      if (order_[i] != 1) out.push_back(y / step);
    }
    return out;
  }

 private:
  void diagonalize(ModMatrix& a) {
    const std::size_t rows = a.rows();
    std::size_t r = 0;
    for (; r < std::min(rows, n_); ++r) {
      if (!move_pivot(a, r)) break;
      // Each pass that leaves fill-in behind strictly lowers the pivot, so
      // the loop terminates.
      for (;;) {
        for (std::size_t i = r + 1; i < rows; ++i) {
          if (a(i, r) == 0) continue;
          const auto [p, q, g] = detail::bezout(a(r, r), a(i, r));
          const std::int64_t x = a(r, r), y = a(i, r);
          a.mix_rows(r, i, p, q, -(y / g), x / g);
        }
        bool row_clear = true;
        for (std::size_t j = r + 1; j < n_; ++j) {
          if (a(r, j) == 0) continue;
          row_clear = false;
          const auto [p, q, g] = detail::bezout(a(r, r), a(r, j));
          const std::int64_t x = a(r, r), y = a(r, j);
          a.mix_cols(r, j, p, q, -(y / g), x / g);
          q_.mix_cols(r, j, p, q, -(y / g), x / g);
          q_inv_.mix_rows(r, j, x / g, y / g, -q, p);
        }
        if (row_clear) break;
        bool col_clear = true;
        for (std::size_t i = r + 1; i < rows && col_clear; ++i) col_clear = a(i, r) == 0;
        if (col_clear) break;
      }
    }
    order_.assign(n_, m_);
    for (std::size_t i = 0; i < r; ++i) order_[i] = std::gcd(a(i, i), m_);
  }

  bool move_pivot(ModMatrix& a, std::size_t r) {
    for (std::size_t i = r; i < a.rows(); ++i)
      for (std::size_t j = r; j < n_; ++j)
        if (a(i, j) != 0) {
          a.swap_rows(r, i);
          a.swap_cols(r, j);
          q_.swap_cols(r, j);
          q_inv_.swap_rows(r, j);
          return true;
        }
    return false;
  }

  std::int64_t m_;
  std::size_t n_;
  ModMatrix q_;
  ModMatrix q_inv_;
  std::vector<std::int64_t> order_;
};

}  // namespace bqarrow
