#pragma once

// Matrix Lie algebras over Q(i). Elements are handled in coordinates with
// respect to the basis; subalgebras are Subspaces of that coordinate space.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cartankit/field.hpp"
#include "cartankit/linalg.hpp"

namespace cartankit {

class LieAlgebra {
 public:
  LieAlgebra() = default;

  /// Takes the basis as given. Throws InputError unless it is linearly
  /// independent and closed under the commutator.
  static LieAlgebra from_basis(std::size_t ambient, std::vector<Mat> basis);
  /// Smallest matrix Lie algebra containing the gens: the independent gens
  /// in order, followed by brackets added round by round until closed.
  static LieAlgebra from_matrices(std::size_t ambient, const std::vector<Mat>& gens);
  /// Subalgebra of gl(ambient) given by flattened matrices.
  static LieAlgebra from_subspace(std::size_t ambient, const Subspace& flat);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Mat>& basis() const { return basis_; }

  /// c_ijk with [b_i, b_j] = sum_k c_ijk b_k
  const Scalar& sc(std::size_t i, std::size_t j, std::size_t k) const {
    return sc_[(i * dim() + j) * dim() + k];
  }

  /// Coordinates of a matrix in the span of the basis; false if outside.
  bool try_coordinates(const Mat& x, Vec& out) const;
  /// Throws InputError when x lies outside the algebra.
  Vec coordinates(const Mat& x) const;
  Mat element(const Vec& coords) const;

  Vec bracket(const Vec& x, const Vec& y) const;
  /// Matrix of ad(x) on the basis: column j holds [x, b_j].
  Mat ad(const Vec& x) const;
  Vec unit(std::size_t i) const;

 private:
  void build(std::size_t ambient, std::vector<Mat> basis);

  std::size_t ambient_ = 0;
  std::vector<Mat> basis_;
  Vec sc_;
  // Flattened basis B (dim x ambient^2), its row echelon form R and the
  // transform T with T B = R. Coordinates of v are T^t (v at R's pivots).
  Subspace span_;
  Mat to_basis_;
};

/// span{[u, w] : u in U, w in W}
Subspace bracket_span(const LieAlgebra& l, const Subspace& u, const Subspace& w);

/// L = C^0, C^1 = [L, L], C^{m+1} = [L, C^m], listed until a term repeats.
std::vector<Subspace> lower_central_series(const LieAlgebra& l);
/// L = D^0, D^{m+1} = [D^m, D^m], listed until a term repeats.
std::vector<Subspace> derived_series(const LieAlgebra& l);
/// Lower central series of the subalgebra h (terms inside h).
std::vector<Subspace> lower_central_series(const LieAlgebra& l, const Subspace& h);

bool is_nilpotent(const LieAlgebra& l);
bool is_solvable(const LieAlgebra& l);
bool is_subalgebra(const LieAlgebra& l, const Subspace& h);
bool is_nilpotent_subalgebra(const LieAlgebra& l, const Subspace& h);
/// [L, h] in h
bool is_ideal(const LieAlgebra& l, const Subspace& h);

Subspace center(const LieAlgebra& l);
/// {X : [X, h] in h}
Subspace normalizer(const LieAlgebra& l, const Subspace& h);
/// {X : [X, h] = 0}
Subspace centralizer(const LieAlgebra& l, const Subspace& h);

/// Joint 0-primary component of ad(h). Throws InputError unless h is a
/// nilpotent subalgebra; throws InconsistencyError if the result fails the
/// nilpotency certificate.
Subspace g0_of(const LieAlgebra& l, const Subspace& h);

/// h is a nilpotent subalgebra with g0(h) = h.
bool is_cartan(const LieAlgebra& l, const Subspace& h);

/// A Cartan subalgebra found by seeded search over integer combinations of
/// the basis, certified by is_cartan.
Subspace cartan_subalgebra(const LieAlgebra& l, std::uint64_t seed);
std::size_t rank(const LieAlgebra& l, std::uint64_t seed);

/// Coefficient box doublings before cartan_subalgebra gives up.
inline constexpr int kCartanEscalations = 8;

struct RootSpace {
  Vec values;  // lambda(Z_1), ..., lambda(Z_k) on the h-basis
  Subspace space;
};

struct RootDatum {
  std::vector<Vec> h_basis;  // rows of h's echelon basis, in g-coordinates
  std::vector<RootSpace> roots;

  /// Index of the root with the given tuple, or roots.size().
  std::size_t find(const Vec& values) const;
};

/// Root space decomposition of g_K relative to the nilpotent subalgebra h.
SplitResult<RootDatum> roots(const LieAlgebra& l, const Subspace& h);

/// Smallest algebraic subalgebra of gl(ambient) containing X, as a subspace
/// of flattened ambient x ambient matrices.
SplitResult<Subspace> algebraic_hull_single(std::size_t ambient, const Mat& x);

}  // namespace cartankit
