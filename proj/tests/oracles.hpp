#pragma once

// Reference computations for the tests: cofactor expansion, plain
// elimination, exhaustive integer grids.

#include <functional>
#include <vector>

#include "cartankit/field.hpp"
#include "cartankit/liealg.hpp"
#include "cartankit/linalg.hpp"

namespace oracle {

using cartankit::Mat;
using cartankit::Poly;
using cartankit::Scalar;
using cartankit::Vec;

using PolyMat = std::vector<std::vector<Poly>>;

/// Laplace expansion along the first row.
inline Poly cofactor_det(const PolyMat& m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly::constant(1);
  if (n == 1) return m[0][0];
  Poly total;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    PolyMat minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Poly> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(row);
    }
    Poly term = m[0][j] * cofactor_det(minor);
    total = j % 2 == 0 ? total + term : total - term;
  }
  return total;
}

/// det(t id - M) by cofactor expansion.
inline Poly char_poly(const Mat& m) {
  const std::size_t n = m.rows();
  PolyMat tm(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      tm[i][j] = Poly::constant(-m(i, j));
      if (i == j) tm[i][j] = tm[i][j] + Poly::monomial(1, 1);
    }
  }
  return cofactor_det(tm);
}

/// p(t + 1) by direct binomial expansion.
inline std::vector<Scalar> shift_by_one(const Poly& p) {
  const auto& c = p.coeffs();
  std::vector<Scalar> out(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    Scalar binom(1);
    for (std::size_t j = 0; j <= k; ++j) {
      out[j] += c[k] * binom;
      binom = binom * Scalar(static_cast<long>(k - j)) / Scalar(static_cast<long>(j + 1));
    }
  }
  return out;
}

/// rank by forward elimination without any library echelon code.
inline std::size_t rank(Mat a) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t p = r;
    while (p < a.rows() && a(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(p, k), a(r, k));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, col).is_zero()) continue;
      Scalar f = a(i, col) / a(r, col);
      for (std::size_t k = col; k < a.cols(); ++k) a(i, k) -= f * a(r, k);
    }
    ++r;
  }
  return r;
}

inline Mat multiply(const Mat& a, const Mat& b) {
  Mat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      for (std::size_t k = 0; k < a.cols(); ++k) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

inline std::size_t nullity_of_power(const Mat& m) {
  Mat p = Mat::identity(m.rows());
  for (std::size_t k = 0; k < m.rows(); ++k) p = multiply(p, m);
  return m.rows() - rank(p);
}

/// min over X in {-r..r}^dim \ {0} of dim ker ad(X)^dim, i.e. the rank.
inline std::size_t grid_rank(const cartankit::LieAlgebra& l, long r) {
  const std::size_t d = l.dim();
  std::size_t best = d;
  std::vector<long> c(d, -r);
  for (;;) {
    bool nonzero = false;
    Vec x(d);
    for (std::size_t k = 0; k < d; ++k) {
      x[k] = Scalar(c[k]);
      nonzero = nonzero || c[k] != 0;
    }
    if (nonzero) best = std::min(best, nullity_of_power(l.ad(x)));
    std::size_t k = 0;
    while (k < d && c[k] == r) c[k++] = -r;
    if (k == d) break;
    ++c[k];
  }
  return best;
}

/// Ad(g) on sl2 = {[[a, b], [c, -a]]} with coordinates (a, b, c).
inline Mat sl2_adjoint(const Mat& g) {
  Scalar det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
  Mat gi = Mat::from_rows({{g(1, 1) / det, -g(0, 1) / det}, {-g(1, 0) / det, g(0, 0) / det}});
  const Mat basis[3] = {Mat::diag({1, -1}), Mat::unit(2, 0, 1), Mat::unit(2, 1, 0)};
  Mat out(3, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    Mat y = multiply(multiply(g, basis[j]), gi);
    out(0, j) = y(0, 0);
    out(1, j) = y(0, 1);
    out(2, j) = y(1, 0);
  }
  return out;
}

}  // namespace oracle
