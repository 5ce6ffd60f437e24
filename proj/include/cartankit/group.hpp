#pragma once

// Group-side computations for a matrix group G presented by its Lie algebra:
// Ad, the shifted characteristic coefficients a_j, r(g), g^1(Ad(g)),
// regularity, and membership in N_G(h), Z_G(h) and C(h).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cartankit/field.hpp"
#include "cartankit/liealg.hpp"
#include "cartankit/linalg.hpp"
#include "cartankit/rng.hpp"

namespace cartankit {

enum class MembershipHint { None, Det1, UnipotentUpper, Diagonal, InvertibleUpper };

std::string to_string(MembershipHint hint);
/// Throws InputError on unknown names.
MembershipHint parse_hint(const std::string& name);

/// Rational local parametrization used to sample elements and neighbours.
enum class Chart {
  None,
  General,        // GL_n with det > 0, additive perturbation
  Special2,       // SL_2 via [[a, b], [c, (1 + bc)/a]]
  Upper,          // invertible upper triangular, positive diagonal
  SpecialUpper2,  // [[a, b], [0, 1/a]], a > 0
  Unipotent,      // upper unitriangular
  Diagonal,       // positive diagonal
};

class GroupContext {
 public:
  GroupContext(std::string name, LieAlgebra lie, MembershipHint hint, Chart chart = Chart::None);

  const std::string& name() const { return name_; }
  std::size_t ambient() const { return lie_.ambient(); }
  const LieAlgebra& lie() const { return lie_; }
  MembershipHint hint() const { return hint_; }
  Chart chart() const { return chart_; }
  bool has_sampler() const { return chart_ != Chart::None; }

  /// Element drawn through the chart with small random rational coordinates.
  Mat sample(Rng& rng) const;
  /// Element whose eigenvalues lie in Q(i): conjugates of torus elements
  /// and of rational rotations.
  Mat sample_split(Rng& rng) const;
  /// Chart neighbour of g with every coordinate moved by at most radius.
  Mat neighbor(const Mat& g, const Rational& radius, Rng& rng) const;

 private:
  std::string name_;
  LieAlgebra lie_;
  MembershipHint hint_;
  Chart chart_;
};

struct Validation {
  bool ok = true;
  std::string reason;  // empty when ok
};

Validation validate(const GroupContext& g, const Mat& x);
/// Throws InputError with the rejection reason.
void require_valid(const GroupContext& g, const Mat& x);

/// Matrix of X -> g X g^-1 on the basis of the Lie algebra.
Mat Ad(const GroupContext& g, const Mat& x);

/// Coefficients of det((T+1) id - Ad(g)), lowest degree first; last entry 1.
std::vector<Scalar> a_coeffs(const GroupContext& g, const Mat& x);
/// min { j : a_j(g) != 0 }
std::size_t r_of(const GroupContext& g, const Mat& x);
/// Generalized 1-eigenspace of Ad(g), in Lie algebra coordinates.
Subspace g1_of(const GroupContext& g, const Mat& x);

struct GroupRank {
  std::size_t rank = 0;
  bool witnessed = false;  // some sample attained dim g^1 = rank
  std::size_t samples = 0;
  std::size_t min_observed = 0;
};
/// rank of the Lie algebra, cross-checked against sampled dim g^1(Ad(g)).
/// Throws InconsistencyError if a sample goes below the rank.
GroupRank group_rank(const GroupContext& g, std::uint64_t seed, std::size_t samples = 32);

struct Regularity {
  bool by_rank = false;    // dim g^1(Ad(g)) = rk g
  bool by_cartan = false;  // g^1(Ad(g)) is a Cartan subalgebra
};
/// Both characterizations, without cross-checking.
Regularity regularity(const GroupContext& g, const Mat& x, std::size_t lie_rank);
/// Throws InconsistencyError if the two characterizations disagree.
bool is_regular(const GroupContext& g, const Mat& x, std::uint64_t seed);
bool is_regular_with_rank(const GroupContext& g, const Mat& x, std::size_t lie_rank);

bool in_NG_h(const GroupContext& g, const Mat& x, const Subspace& h);
bool in_ZG_h(const GroupContext& g, const Mat& x, const Subspace& h);

struct CMembership {
  bool by_roots = false;       // g in N_G(h) and lambda o Ad(g)|h = lambda for every root
  bool by_semisimple = false;  // g in N_G(h) and Ad(g) commutes with ad(X)_s on h
};
/// Throws InputError unless h is a Cartan subalgebra and SplitError when
/// its roots leave Q(i).
CMembership c_membership(const GroupContext& g, const Mat& x, const Subspace& h, std::uint64_t seed);
/// Throws InconsistencyError when the two characterizations disagree.
bool in_C_h(const GroupContext& g, const Mat& x, const Subspace& h, std::uint64_t seed);

/// perm[i] is the index of the root lambda_i o Ad(g)|h. Throws InputError
/// when g does not normalize h.
std::vector<std::size_t> root_action(const GroupContext& g, const Mat& x, const Subspace& h);

struct SequenceDims {
  std::size_t kernel_part = 0;    // dim of the kernel-side 1-eigenspace
  std::size_t total = 0;          // dim g^1(Ad(g))
  std::size_t quotient_part = 0;  // dim of the image-side 1-eigenspace
};

/// 0 -> k^1(Ad(g)|k) -> g^1(Ad(g)) -> (g/k)^1(induced) -> 0 for an ideal k.
/// Throws InputError if k is not an ideal, InconsistencyError if the
/// dimensions are not additive.
SequenceDims sequence_dims_ideal(const GroupContext& g, const Subspace& ideal, const Mat& x);
/// 0 -> z(g) -> g^1(Ad(g)) -> ad(g)^1(conjugation by Ad(g)) -> 0, with the
/// image side computed on the matrix algebra ad(g) itself.
SequenceDims sequence_dims_center(const GroupContext& g, const Mat& x);

}  // namespace cartankit
