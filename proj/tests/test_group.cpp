#include <doctest.h>

#include "cartankit/corpus.hpp"
#include "cartankit/error.hpp"
#include "cartankit/group.hpp"
#include "oracles.hpp"

using namespace cartankit;

namespace {

const Mat kDiag2 = Mat::diag({2, Scalar(Rational(1, 2))});
const Mat kW = Mat::from_rows({{0, 1}, {-1, 0}});
const Mat kU = Mat::from_rows({{1, 1}, {0, 1}});

}  // namespace

TEST_CASE("Ad and the a_j coefficients") {
  GroupContext sl2 = corpus::group("sl2");
  CHECK(Ad(sl2, kDiag2) == Mat::diag({1, 4, Scalar(Rational(1, 4))}));
  CHECK(Ad(sl2, kDiag2) == oracle::sl2_adjoint(kDiag2));
  CHECK(Ad(sl2, kW) == oracle::sl2_adjoint(kW));

  std::vector<Scalar> a = a_coeffs(sl2, kDiag2);
  CHECK(a == std::vector<Scalar>{0, Scalar(Rational(-9, 4)), Scalar(Rational(-9, 4)), 1});
  CHECK(a == oracle::shift_by_one(oracle::char_poly(oracle::sl2_adjoint(kDiag2))));
  CHECK(a_coeffs(sl2, kW) == std::vector<Scalar>{0, 4, 4, 1});
  CHECK(a_coeffs(sl2, kW) == oracle::shift_by_one(oracle::char_poly(oracle::sl2_adjoint(kW))));

  CHECK(r_of(sl2, kDiag2) == 1);
  CHECK(r_of(sl2, kW) == 1);
  CHECK(r_of(sl2, kU) == 3);
  CHECK(g1_of(sl2, kDiag2) == Subspace::span(3, {{1, 0, 0}}));
  CHECK(g1_of(sl2, kW) == Subspace::span(3, {{0, 1, -1}}));
  // Ad(u)H = H - 2E
  CHECK(Ad(sl2, kU).col_vec(0) == Vec{1, -2, 0});
}

TEST_CASE("r(g) equals dim g1 on samples") {
  for (const auto& name : corpus::names()) {
    GroupContext g = corpus::group(name);
    Rng rng(21);
    for (int k = 0; k < 25; ++k) {
      Mat x = g.sample(rng);
      REQUIRE(validate(g, x).ok);
      CHECK(r_of(g, x) == g1_of(g, x).dim());
      CHECK(r_of(g, x) == oracle::nullity_of_power(Ad(g, x) - Mat::identity(g.lie().dim())));
    }
  }
}

TEST_CASE("validation") {
  GroupContext torus = corpus::group("torus2");
  Validation v = validate(torus, kW);
  CHECK_FALSE(v.ok);
  CHECK(v.reason.find("diagonal") != std::string::npos);
  CHECK(validate(torus, Mat::diag({2, 3})).ok);

  GroupContext sl2 = corpus::group("sl2");
  CHECK_FALSE(validate(sl2, Mat::diag({2, 2})).ok);
  CHECK_FALSE(validate(sl2, Mat::from_rows({{1, 1}, {1, 1}})).ok);
  CHECK_FALSE(validate(sl2, Mat::identity(3)).ok);
  CHECK_THROWS_AS(Ad(sl2, Mat::diag({2, 2})), InputError);

  GroupContext sb2 = corpus::group("sb2");
  Validation lower = validate(sb2, kW);
  CHECK_FALSE(lower.ok);
  CHECK(lower.reason.find("outside the Lie algebra") != std::string::npos);

  GroupContext heis = corpus::group("heis3");
  CHECK_FALSE(validate(heis, Mat::diag({1, 2, 1})).ok);
  CHECK(parse_hint("unipotent-upper") == MembershipHint::UnipotentUpper);
  CHECK_THROWS_AS(parse_hint("bogus"), InputError);
}

TEST_CASE("rank and regularity") {
  GroupContext sl2 = corpus::group("sl2");
  GroupRank gr = group_rank(sl2, 1, 16);
  CHECK(gr.rank == 1);
  CHECK(gr.witnessed);
  CHECK(group_rank(corpus::group("heis3"), 1).rank == 3);
  CHECK(is_regular(sl2, kDiag2, 0));
  CHECK(is_regular(sl2, kW, 0));
  CHECK_FALSE(is_regular(sl2, kU, 0));
  CHECK_FALSE(is_regular(sl2, Mat::identity(2), 0));
  Regularity r = regularity(sl2, kU, 1);
  CHECK(r.by_rank == r.by_cartan);
}

TEST_CASE("normalizer, centralizer and C(h)") {
  GroupContext sl2 = corpus::group("sl2");
  Subspace hH = Subspace::span(3, {{1, 0, 0}});
  Subspace hJ = Subspace::span(3, {{0, 1, -1}});
  CHECK(in_NG_h(sl2, kW, hH));
  CHECK_FALSE(in_ZG_h(sl2, kW, hH));
  CHECK(in_ZG_h(sl2, kDiag2, hH));
  CHECK_FALSE(in_NG_h(sl2, kU, hH));

  CHECK_FALSE(in_C_h(sl2, kW, hH, 0));
  CHECK(in_C_h(sl2, kW, hJ, 0));
  CHECK(in_C_h(sl2, kDiag2, hH, 0));
  CHECK_FALSE(in_C_h(sl2, kDiag2, hJ, 0));
  CMembership m = c_membership(sl2, kW, hH, 0);
  CHECK(m.by_roots == m.by_semisimple);
  CHECK_THROWS_AS(in_C_h(sl2, kW, Subspace::span(3, {{0, 1, 0}}), 0), InputError);

  // the Weyl element swaps the roots +-2 of span H
  auto perm = root_action(sl2, kW, hH);
  REQUIRE(perm.size() == 3);
  CHECK(perm[0] == 2);
  CHECK(perm[1] == 1);
  CHECK(perm[2] == 0);
  CHECK_THROWS_AS(root_action(sl2, kU, hH), InputError);

  GroupContext gl2 = corpus::group("gl2");
  Subspace diag = corpus::known_cartans("gl2")[0];
  CHECK_FALSE(in_C_h(gl2, Mat::from_rows({{0, 1}, {1, 0}}), diag, 0));
  CHECK(in_C_h(gl2, Mat::diag({3, 5}), diag, 0));
}

TEST_CASE("exact sequences") {
  GroupContext sb2 = corpus::group("sb2");
  Subspace n = Subspace::span(2, {{0, 1}});
  SequenceDims d = sequence_dims_ideal(sb2, n, kU);
  CHECK(d.kernel_part == 1);
  CHECK(d.total == 2);
  CHECK(d.quotient_part == 1);
  CHECK_THROWS_AS(sequence_dims_ideal(sb2, Subspace::span(2, {{1, 0}}), kU), InputError);

  GroupContext b2 = corpus::group("b2");
  SequenceDims e = sequence_dims_ideal(b2, Subspace::span(3, {{0, 1, 0}}), Mat::from_rows({{2, 1}, {0, 3}}));
  CHECK(e.kernel_part + e.quotient_part == e.total);

  GroupContext gl2 = corpus::group("gl2");
  SequenceDims c = sequence_dims_center(gl2, Mat::from_rows({{2, 1}, {1, 1}}));
  CHECK(c.kernel_part == 1);
  CHECK(c.total == 2);
  CHECK(c.quotient_part == 1);
  SequenceDims h = sequence_dims_center(corpus::group("heis3"), Mat::from_rows({{1, 2, 3}, {0, 1, 4}, {0, 0, 1}}));
  CHECK(h.kernel_part == 1);
  CHECK(h.total == 3);
  CHECK(h.quotient_part == 2);
}

TEST_CASE("samplers stay in the group") {
  for (const auto& name : corpus::names()) {
    GroupContext g = corpus::group(name);
    Rng rng(8);
    for (int k = 0; k < 20; ++k) {
      Mat x = g.sample(rng);
      CHECK(validate(g, x).ok);
      Mat s = g.sample_split(rng);
      CHECK(validate(g, s).ok);
      CHECK(split_ok(gaussian_roots(char_poly(s))));
      Mat nb = g.neighbor(x, Rational(1, 8), rng);
      CHECK(validate(g, nb).ok);
    }
  }
  CHECK_THROWS_AS(GroupContext("x", corpus::group("heis3").lie(), MembershipHint::None, Chart::Special2), InputError);
}
