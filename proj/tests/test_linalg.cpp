#include <doctest.h>

#include "cartankit/error.hpp"
#include "cartankit/linalg.hpp"
#include "cartankit/rng.hpp"
#include "oracles.hpp"

using namespace cartankit;

namespace {

Mat random_mat(Rng& rng, std::size_t n, bool complex = false) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = Scalar(rng.rational(3, 2), complex && rng.coin() ? rng.rational(2, 2) : Rational(0));
    }
  }
  return m;
}

/// P D P^-1 + small nilpotent coupling, so the spectrum stays in Q(i).
Mat split_mat(Rng& rng, std::size_t n) {
  Mat d(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    d(i, i) = Scalar(rng.uniform(-2, 2));
    if (i + 1 < n && rng.coin()) d(i, i + 1) = Scalar(rng.uniform(-2, 2));
  }
  Mat p;
  do {
    p = random_mat(rng, n);
  } while (!is_invertible(p));
  return p * d * inverse(p);
}

bool nilpotent(const Mat& n) { return power(n, static_cast<unsigned>(n.rows())).is_zero(); }

}  // namespace

TEST_CASE("matrix basics") {
  Mat a = Mat::from_rows({{1, 2}, {3, 4}});
  CHECK(a * Mat::identity(2) == a);
  CHECK(determinant(a) == Scalar(-2));
  CHECK(a * inverse(a) == Mat::identity(2));
  CHECK(a.transpose()(0, 1) == Scalar(3));
  CHECK(a.trace() == Scalar(5));
  CHECK(commutator(a, a).is_zero());
  CHECK_THROWS_AS(inverse(Mat::from_rows({{1, 2}, {2, 4}})), std::domain_error);
  CHECK_THROWS_AS(Mat::from_rows({{1, 2}, {3}}), InputError);
  CHECK(Mat::unflatten(a.flatten(), 2) == a);
}

TEST_CASE("rref and kernel") {
  Mat m = Mat::from_rows({{0, 2, 4, 2}, {0, 1, 2, 1}, {1, 0, 1, 0}});
  auto rk = rref_kernel(m);
  CHECK(rk.kernel.dim() == 2);
  CHECK(rank_of(m) == 2);
  for (const auto& v : rk.kernel.vectors()) CHECK(is_zero(m.apply(v)));
  CHECK(oracle::rank(m) == 2);
  Echelon e = reduced_row_echelon(m);
  CHECK(e.pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("subspace algebra") {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 5;
    std::vector<Vec> u, w;
    for (long k = rng.uniform(0, 3); k > 0; --k) u.push_back(random_mat(rng, 1 * n).row_vec(0));
    for (long k = rng.uniform(0, 3); k > 0; --k) w.push_back(random_mat(rng, n).row_vec(1));
    if (!u.empty() && rng.coin()) w.push_back(u[0]);
    Subspace U = Subspace::span(n, u), W = Subspace::span(n, w);
    Subspace S = U + W, I = U.intersect(W);
    CHECK(S.dim() + I.dim() == U.dim() + W.dim());
    CHECK(U.contains(I));
    CHECK(W.contains(I));
    CHECK(S.contains(U));
    CHECK(U.annihilator().dim() == n - U.dim());
    Vec coords;
    for (const auto& v : u) {
      REQUIRE(U.coordinates(v, coords));
      Vec back(n);
      for (std::size_t k = 0; k < U.dim(); ++k) back = axpy(back, coords[k], U.vector(k));
      CHECK(back == v);
    }
  }
  CHECK(Subspace(3) == Subspace::span(3, {}));
  CHECK(Subspace::whole(3).dim() == 3);
}

TEST_CASE("char poly agrees with cofactor expansion") {
  Rng rng(11);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      Mat m = random_mat(rng, n, trial % 2 == 1);
      Poly p = char_poly(m);
      CHECK(p == oracle::char_poly(m));
      CHECK(evaluate(p, m).is_zero());  // Cayley-Hamilton
    }
  }
  CHECK(char_poly(Mat::from_rows({{0, 1, 0}, {0, 0, 0}, {0, 0, 1}})) ==
        Poly({0, 0, -1, 1}));  // t^2 (t - 1)
  CHECK_THROWS_AS(char_poly(Mat(2, 3)), InputError);
}

TEST_CASE("primary and Fitting decompositions") {
  Mat m = Mat::from_rows({{0, 1, 0}, {0, 0, 0}, {0, 0, 1}});
  CHECK(primary_component(m, Scalar()).dim() == 2);
  CHECK(primary_component(m, Scalar(1)).dim() == 1);
  CHECK(primary_component(m, Scalar(2)).dim() == 0);
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    Mat a = split_mat(rng, 4);
    Fitting f = fitting_decomposition(a);
    CHECK(f.null_part.dim() + f.invertible_part.dim() == 4);
    CHECK(f.null_part.intersect(f.invertible_part).dim() == 0);
    CHECK(f.null_part.dim() == oracle::nullity_of_power(a));
    CHECK(f.invertible_part.contains(f.invertible_part.image(a)));
  }
}

TEST_CASE("Jordan-Chevalley") {
  SUBCASE("worked example") {
    auto r = jordan_chevalley(Mat::from_rows({{0, 1, 0}, {0, 0, 0}, {0, 0, 1}}));
    REQUIRE(split_ok(r));
    const auto& jc = std::get<JordanChevalley>(r);
    CHECK(jc.semisimple == Mat::diag({0, 0, 1}));
    CHECK(jc.nilpotent == Mat::unit(3, 0, 1));
  }
  SUBCASE("random split and non-split inputs") {
    Rng rng(9);
    for (int trial = 0; trial < 25; ++trial) {
      Mat m = trial % 3 == 0 ? random_mat(rng, 4, true) : split_mat(rng, 4);
      auto r = jordan_chevalley(m);
      REQUIRE(split_ok(r));
      const auto& jc = std::get<JordanChevalley>(r);
      CHECK(jc.semisimple + jc.nilpotent == m);
      CHECK(jc.semisimple * jc.nilpotent == jc.nilpotent * jc.semisimple);
      CHECK(nilpotent(jc.nilpotent));
      // semisimple: the squarefree part of its char poly annihilates it
      CHECK(evaluate(squarefree_part(oracle::char_poly(jc.semisimple)), jc.semisimple).is_zero());
    }
  }
}

TEST_CASE("restriction and quotient") {
  Mat m = Mat::from_rows({{1, 1, 0}, {0, 1, 0}, {0, 0, 2}});
  Subspace v = Subspace::span(3, {{1, 0, 0}});
  CHECK(restrict_to(m, v) == Mat::from_rows({{1}}));
  Mat q = induced_on_quotient(m, v);
  CHECK(oracle::char_poly(q) * Poly::linear(Scalar(1)) == oracle::char_poly(m));
  CHECK_THROWS_AS(restrict_to(m, Subspace::span(3, {{0, 1, 0}})), InconsistencyError);
}

TEST_CASE("simultaneous primary decomposition") {
  // commuting diag(1,1,2) and diag(3,4,4)
  std::vector<Mat> maps{Mat::diag({1, 1, 2}), Mat::diag({3, 4, 4})};
  auto r = simultaneous_primary_decomposition(maps);
  REQUIRE(split_ok(r));
  const auto& blocks = std::get<0>(r);
  REQUIRE(blocks.size() == 3);
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.space.dim();
  CHECK(total == 3);
  CHECK(blocks[0].labels == Vec{1, 3});
  std::vector<Mat> rot{Mat::from_rows({{0, -1}, {2, 0}})};
  auto bad = simultaneous_primary_decomposition(rot);
  REQUIRE_FALSE(split_ok(bad));
  CHECK(std::get<SplitFailure>(bad).context.find("map 0") != std::string::npos);
  CHECK_THROWS_AS(simultaneous_primary_decomposition(std::span<const Mat>{}), InputError);
}
