#include "cartankit/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "cartankit/error.hpp"

namespace cartankit {

// ---------------------------------------------------------------------------
// Mat

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Mat Mat::diag(const Vec& d) {
  Mat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Mat Mat::unit(std::size_t n, std::size_t i, std::size_t j) {
  Mat m(n, n);
  m(i, j) = Scalar(1);
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return {};
  Mat m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw InputError("ragged matrix rows");
    std::copy(rows[i].begin(), rows[i].end(), m.a_.begin() + static_cast<long>(i * m.cols_));
  }
  return m;
}

Mat Mat::column(const Vec& v) {
  Mat m(v.size(), 1);
  m.a_ = v;
  return m;
}

Mat Mat::unflatten(const Vec& v, std::size_t n) {
  if (v.size() != n * n) throw InputError("vector length is not " + std::to_string(n * n));
  Mat m(n, n);
  m.a_ = v;
  return m;
}

Vec Mat::col_vec(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Scalar Mat::trace() const {
  Scalar t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool Mat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Mat::is_real() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_real(); });
}

Vec Mat::apply(const Vec& v) const {
  if (v.size() != cols_) throw InputError("dimension mismatch in matrix-vector product");
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Scalar acc;
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& a = (*this)(i, j);
      if (!a.is_zero() && !v[j].is_zero()) acc += a * v[j];
    }
    out[i] = std::move(acc);
  }
  return out;
}

Mat& Mat::operator+=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("dimension mismatch in matrix sum");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("dimension mismatch in matrix difference");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

Mat operator-(const Mat& a) {
  Mat r = a;
  for (auto& x : r.a_) x = -x;
  return r;
}

Mat operator*(const Scalar& s, const Mat& m) {
  Mat r = m;
  for (auto& x : r.a_) x *= s;
  return r;
}

namespace {

void multiply_row(const Mat& a, const Mat& b, Mat& out, std::size_t i) {
  for (std::size_t j = 0; j < b.cols(); ++j) {
    Scalar acc;
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      const Scalar& y = b(k, j);
      if (!y.is_zero()) acc += x * y;
    }
    out(i, j) = std::move(acc);
  }
}

void check_product(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw InputError("dimension mismatch in matrix product");
}

}  // namespace

namespace kernels {

Mat matmul_serial(const Mat& a, const Mat& b) {
  check_product(a, b);
  Mat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) multiply_row(a, b, out, i);
  return out;
}

Mat matmul_parallel(const Mat& a, const Mat& b) {
  check_product(a, b);
  Mat out(a.rows(), b.cols());
  const auto rows = static_cast<long long>(a.rows());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < rows; ++i) multiply_row(a, b, out, static_cast<std::size_t>(i));
  return out;
}

}  // namespace kernels

Mat operator*(const Mat& a, const Mat& b) {
  if (a.rows() >= kernels::kParallelRows) return kernels::matmul_parallel(a, b);
  return kernels::matmul_serial(a, b);
}

Mat power(const Mat& m, unsigned k) {
  Mat result = Mat::identity(m.rows());
  Mat base = m;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

Mat evaluate(const Poly& p, const Mat& m) {
  Mat acc(m.rows(), m.cols());
  const Mat id = Mat::identity(m.rows());
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * m + (*it) * id;
  return acc;
}

Vec axpy(const Vec& x, const Scalar& a, const Vec& y) {
  Vec r = x;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!y[i].is_zero()) r[i] += a * y[i];
  }
  return r;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

// ---------------------------------------------------------------------------
// Echelon forms

Echelon reduced_row_echelon(Mat m) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    Scalar inv = Scalar(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.rref = std::move(m);
  return e;
}

std::size_t rank_of(const Mat& m) { return reduced_row_echelon(m).pivots.size(); }

Scalar determinant(const Mat& m) {
  if (!m.square()) throw InputError("determinant of a non-square matrix");
  Mat a = m;
  const std::size_t n = a.rows();
  Scalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Scalar();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    Scalar inv = Scalar(1) / a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Scalar f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

Mat inverse(const Mat& m) {
  if (!m.square()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar(1);
  }
  Echelon e = reduced_row_echelon(std::move(aug));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) {
    throw std::domain_error("matrix is singular");
  }
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rref(i, n + j);
  }
  return inv;
}

bool is_invertible(const Mat& m) { return m.square() && rank_of(m) == m.rows(); }

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::whole(std::size_t n) { return row_space(Mat::identity(n)); }

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
  if (vectors.empty()) return Subspace(ambient);
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw InputError("vector length does not match ambient dimension");
  }
  return row_space(Mat::from_rows(vectors));
}

Subspace Subspace::row_space(const Mat& m) {
  Echelon e = reduced_row_echelon(m);
  Subspace s(m.cols());
  const std::size_t d = e.pivots.size();
  s.basis_ = Mat(d, m.cols());
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) s.basis_(i, j) = e.rref(i, j);
  }
  s.pivots_ = std::move(e.pivots);
  return s;
}

std::vector<Vec> Subspace::vectors() const {
  std::vector<Vec> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(vector(i));
  return out;
}

bool Subspace::coordinates(const Vec& v, Vec& out) const {
  if (v.size() != ambient_) throw InputError("vector length does not match ambient dimension");
  Vec c(dim());
  Vec rest = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    c[i] = v[pivots_[i]];
    if (c[i].is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (!basis_(i, j).is_zero()) rest[j] -= c[i] * basis_(i, j);
    }
  }
  if (!is_zero(rest)) return false;
  out = std::move(c);
  return true;
}

bool Subspace::contains(const Vec& v) const {
  Vec c;
  return coordinates(v, c);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.vector(i))) return false;
  }
  return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw InputError("subspace sum across different ambient spaces");
  auto vs = vectors();
  for (auto& v : other.vectors()) vs.push_back(std::move(v));
  return span(ambient_, vs);
}

Subspace Subspace::annihilator() const {
  if (dim() == 0) return whole(ambient_);
  return kernel(basis_);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw InputError("subspace intersection across different ambient spaces");
  return (annihilator() + other.annihilator()).annihilator();
}

Subspace Subspace::image(const Mat& m) const {
  if (m.cols() != ambient_) throw InputError("map does not act on this subspace's ambient space");
  std::vector<Vec> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(m.apply(vector(i)));
  return span(m.rows(), out);
}

Subspace kernel(const Mat& m) {
  const std::size_t n = m.cols();
  if (m.rows() == 0) return Subspace::whole(n);
  Echelon e = reduced_row_echelon(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n);
    v[f] = Scalar(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rref(i, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(n, basis);
}

Subspace image(const Mat& m) { return Subspace::row_space(m.transpose()); }

RrefKernel rref_kernel(const Mat& m) { return {reduced_row_echelon(m).rref, kernel(m)}; }

// ---------------------------------------------------------------------------
// Characteristic polynomial and primary components

Poly char_poly(const Mat& m) {
  if (!m.square()) throw InputError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Scalar> c(n + 1);
  c[n] = Scalar(1);
  Mat mk(n, n);
  const Mat id = Mat::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + c[n - k + 1] * id;
    c[n - k] = -(m * mk).trace() / Scalar(k);
  }
  return Poly(std::move(c));
}

Subspace primary_component(const Mat& m, const Scalar& s) {
  if (!m.square()) throw InputError("primary component of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Subspace(0);
  Mat shifted = m - s * Mat::identity(n);
  return kernel(power(shifted, static_cast<unsigned>(n)));
}

Fitting fitting_decomposition(const Mat& m) {
  if (!m.square()) throw InputError("Fitting decomposition of a non-square matrix");
  return {primary_component(m, Scalar()), image(power(m, static_cast<unsigned>(m.rows())))};
}

SplitResult<JordanChevalley> jordan_chevalley(const Mat& m) {
  if (!m.square()) throw InputError("Jordan-Chevalley decomposition of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return JordanChevalley{m, m};
  const Poly q = squarefree_part(char_poly(m));
  const Poly dq = q.derivative();
  Mat x = m;
  // Quadratic convergence: q(x)^(2^k) = 0 after k steps, so ceil(log2 n) + 1
  // iterations suffice. The cap only guards against a broken invariant.
  for (int step = 0; step < 64; ++step) {
    Mat qx = evaluate(q, x);
    if (qx.is_zero()) break;
    Mat dqx = evaluate(dq, x);
    if (!is_invertible(dqx)) return SplitFailure{q, "Newton step hit a singular q'(x)"};
    x = x - qx * inverse(dqx);
  }
  Mat nil = m - x;
  bool certified = evaluate(q, x).is_zero() && power(nil, static_cast<unsigned>(n)).is_zero() &&
                   x * nil == nil * x;
  if (!certified) return SplitFailure{q, "semisimple part could not be certified"};
  return JordanChevalley{std::move(x), std::move(nil)};
}

Mat restrict_to(const Mat& m, const Subspace& v) {
  if (!m.square() || m.rows() != v.ambient_dim()) throw InputError("restriction: dimension mismatch");
  const std::size_t d = v.dim();
  Mat r(d, d);
  Vec coords;
  for (std::size_t j = 0; j < d; ++j) {
    if (!v.coordinates(m.apply(v.vector(j)), coords)) {
      throw InconsistencyError("restriction to a subspace that is not invariant");
    }
    for (std::size_t i = 0; i < d; ++i) r(i, j) = coords[i];
  }
  return r;
}

Mat induced_on_quotient(const Mat& m, const Subspace& v) {
  (void)restrict_to(m, v);
  const std::size_t n = v.ambient_dim();
  std::vector<bool> is_pivot(n, false);
  for (auto p : v.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < n; ++j) {
    if (!is_pivot[j]) free.push_back(j);
  }
  Mat q(free.size(), free.size());
  for (std::size_t b = 0; b < free.size(); ++b) {
    Vec w = m.col_vec(free[b]);
    for (std::size_t i = 0; i < v.dim(); ++i) {
      Scalar c = w[v.pivots()[i]];
      if (!c.is_zero()) w = axpy(w, -c, v.vector(i));
    }
    for (std::size_t a = 0; a < free.size(); ++a) q(a, b) = w[free[a]];
  }
  return q;
}

SplitResult<std::vector<PrimaryBlock>> simultaneous_primary_decomposition(std::span<const Mat> maps) {
  if (maps.empty()) throw InputError("simultaneous decomposition needs at least one map");
  const std::size_t n = maps.front().rows();
  for (const auto& m : maps) {
    if (!m.square() || m.rows() != n) throw InputError("simultaneous decomposition: maps differ in size");
  }
  std::vector<PrimaryBlock> blocks{{{}, Subspace::whole(n)}};
  if (n == 0) blocks.front().labels.assign(maps.size(), Scalar());
  for (std::size_t k = 0; k < maps.size() && n > 0; ++k) {
    std::vector<PrimaryBlock> refined;
    for (const auto& block : blocks) {
      Mat r = restrict_to(maps[k], block.space);
      auto roots = gaussian_roots(char_poly(r));
      if (!split_ok(roots)) {
        auto failure = std::get<SplitFailure>(std::move(roots));
        failure.context = "map " + std::to_string(k);
        return failure;
      }
      std::size_t total = 0;
      for (const auto& root : std::get<std::vector<Root>>(roots)) {
        Subspace local = primary_component(r, root.value);
        std::vector<Vec> lifted;
        for (std::size_t i = 0; i < local.dim(); ++i) {
          Vec w(n);
          Vec c = local.vector(i);
          for (std::size_t j = 0; j < c.size(); ++j) {
            if (!c[j].is_zero()) w = axpy(w, c[j], block.space.vector(j));
          }
          lifted.push_back(std::move(w));
        }
        total += local.dim();
        Vec labels = block.labels;
        labels.push_back(root.value);
        refined.push_back({std::move(labels), Subspace::span(n, lifted)});
      }
      if (total != block.space.dim()) {
        throw InconsistencyError("primary components do not fill the block");
      }
    }
    blocks = std::move(refined);
  }
  std::sort(blocks.begin(), blocks.end(), [](const PrimaryBlock& a, const PrimaryBlock& b) {
    return std::lexicographical_compare(a.labels.begin(), a.labels.end(), b.labels.begin(), b.labels.end(),
                                        [](const Scalar& x, const Scalar& y) { return canonical_less(x, y); });
  });
  return blocks;
}

}  // namespace cartankit
