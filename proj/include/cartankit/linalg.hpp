#pragma once

// Exact dense linear algebra over Q(i): echelon forms, kernels, subspaces,
// characteristic polynomials, primary decomposition and the Jordan-Chevalley
// decomposition.

#include <cstddef>
#include <span>
#include <vector>

#include "cartankit/field.hpp"

namespace cartankit {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix. Acts on column vectors.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Mat identity(std::size_t n);
  static Mat diag(const Vec& d);
  /// e_ij: 1 at (i, j), zero elsewhere.
  static Mat unit(std::size_t n, std::size_t i, std::size_t j);
  /// Throws InputError on ragged rows.
  static Mat from_rows(const std::vector<Vec>& rows);
  static Mat column(const Vec& v);
  /// The n x n matrix whose row-major flattening is v.
  static Mat unflatten(const Vec& v, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::span<const Scalar> row(std::size_t i) const { return {a_.data() + i * cols_, cols_}; }
  Vec row_vec(std::size_t i) const { return {a_.begin() + static_cast<long>(i * cols_), a_.begin() + static_cast<long>((i + 1) * cols_)}; }
  Vec col_vec(std::size_t j) const;
  const Vec& flatten() const { return a_; }

  Mat transpose() const;
  Scalar trace() const;
  bool is_zero() const;
  bool is_real() const;
  /// M v
  Vec apply(const Vec& v) const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator-(const Mat& a);
  friend Mat operator*(const Scalar& s, const Mat& m);
  friend Mat operator*(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec a_;
};

namespace kernels {
/// Reference product, one thread.
Mat matmul_serial(const Mat& a, const Mat& b);
/// Row-parallel product; identical entries to matmul_serial.
Mat matmul_parallel(const Mat& a, const Mat& b);
/// Products with at least this many output rows go through matmul_parallel.
inline constexpr std::size_t kParallelRows = 24;
}  // namespace kernels

Mat power(const Mat& m, unsigned k);
Mat commutator(const Mat& a, const Mat& b);
/// p(M) by Horner.
Mat evaluate(const Poly& p, const Mat& m);
Scalar determinant(const Mat& m);
/// Throws std::domain_error when singular, InputError when not square.
Mat inverse(const Mat& m);
bool is_invertible(const Mat& m);

Vec axpy(const Vec& x, const Scalar& a, const Vec& y);  // x + a*y
bool is_zero(const Vec& v);

struct Echelon {
  Mat rref;                         // reduced row echelon form, zero rows kept
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};
/// Pivots chosen by lowest column index.
Echelon reduced_row_echelon(Mat m);
std::size_t rank_of(const Mat& m);

/// A linear subspace of K^n, stored as its reduced row echelon basis with no
/// zero rows. Two subspaces are equal iff the stored matrices are equal.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of K^n.
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace whole(std::size_t n);
  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
  /// Span of the rows of m.
  static Subspace row_space(const Mat& m);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vec vector(std::size_t i) const { return basis_.row_vec(i); }
  std::vector<Vec> vectors() const;

  /// Coordinates of v in the stored basis; false when v is not in the span.
  bool coordinates(const Vec& v, Vec& out) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// {a : a . v = 0 for all v}, bilinear (no conjugation).
  Subspace annihilator() const;
  /// Image under M (M acts on column vectors of length ambient).
  Subspace image(const Mat& m) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : M v = 0}
Subspace kernel(const Mat& m);
/// Column space of M.
Subspace image(const Mat& m);

struct RrefKernel {
  Mat rref;
  Subspace kernel;
};
RrefKernel rref_kernel(const Mat& m);

/// det(t id - M) by the Faddeev-LeVerrier recursion. Throws InputError when
/// M is not square.
Poly char_poly(const Mat& m);

/// ker (M - s id)^n with n the size of M.
Subspace primary_component(const Mat& m, const Scalar& s);

struct Fitting {
  Subspace null_part;        // ker M^n
  Subspace invertible_part;  // im M^n
};
Fitting fitting_decomposition(const Mat& m);

struct JordanChevalley {
  Mat semisimple;
  Mat nilpotent;
};
/// M = S + N with S semisimple, N nilpotent, SN = NS, via Newton iteration
/// on the squarefree part of the characteristic polynomial.
SplitResult<JordanChevalley> jordan_chevalley(const Mat& m);

/// Matrix of M restricted to the M-invariant subspace V, in the coordinates
/// of V's stored basis. Throws InconsistencyError if V is not invariant.
Mat restrict_to(const Mat& m, const Subspace& v);
/// Matrix of the map induced by M on K^n / V, in the coordinates given by
/// the unit vectors at V's non-pivot columns. V must be M-invariant.
Mat induced_on_quotient(const Mat& m, const Subspace& v);

struct PrimaryBlock {
  Vec labels;  // one eigenvalue per input map
  Subspace space;
};
/// Joint refinement of K^n by the primary components of each map in turn.
/// The maps must leave each other's primary components invariant (true for
/// ad of a nilpotent subalgebra). Blocks come out in canonical label order.
SplitResult<std::vector<PrimaryBlock>> simultaneous_primary_decomposition(std::span<const Mat> maps);

}  // namespace cartankit
