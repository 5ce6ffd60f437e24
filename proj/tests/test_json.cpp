#include <doctest.h>

#include "cartankit/corpus.hpp"
#include "cartankit/error.hpp"
#include "cartankit/json_io.hpp"

using namespace cartankit;
using io::json;

TEST_CASE("scalar forms") {
  Scalar s(Rational(-3, 4), 2);
  json j = io::to_json(s);
  CHECK(j.dump() == R"({"im":"2","re":"-3/4"})");
  CHECK(io::scalar_from_json(j) == s);
  CHECK(io::to_json(Scalar(5), {true}) == json("5"));
  CHECK(io::to_json(Scalar::i(), {true}).is_object());
  CHECK(io::scalar_from_json(json("7/2")) == Scalar(Rational(7, 2)));
  CHECK(io::scalar_from_json(json{{"re", "1"}}) == Scalar(1));
  CHECK_THROWS_AS(io::scalar_from_json(json(1.5)), InputError);
  CHECK_THROWS_AS(io::scalar_from_json(json{{"im", "1"}}), InputError);
  CHECK_THROWS_AS(io::scalar_from_json(json{{"re", "x"}}), InputError);
}

TEST_CASE("matrix and subspace round trips") {
  Mat m = Mat::from_rows({{1, Scalar(0, 1)}, {Scalar(Rational(1, 3)), -2}});
  CHECK(io::mat_from_json(io::to_json(m)) == m);
  CHECK(io::mat_from_json(io::to_json(m, {true})) == m);
  Subspace s = Subspace::span(3, {{1, 2, 3}, {0, 1, Scalar(0, 1)}});
  CHECK(io::subspace_from_json(io::to_json(s)) == s);
  CHECK(io::subspace_from_json(io::to_json(Subspace(4))) == Subspace(4));

  json bad = io::to_json(m);
  bad["entries"][1] = json::array({"1"});
  CHECK_THROWS_AS(io::mat_from_json(bad), InputError);
  bad = io::to_json(m);
  bad.erase("rows");
  CHECK_THROWS_AS(io::mat_from_json(bad), InputError);
}

TEST_CASE("algebras and groups round trip") {
  for (const auto& name : corpus::names()) {
    GroupContext g = corpus::group(name);
    LieAlgebra l = io::lie_from_json(io::to_json(g.lie()));
    CHECK(l.basis() == g.lie().basis());
    GroupContext back = io::group_from_json(io::to_json(g));
    CHECK(back.name() == name);
    CHECK(back.hint() == g.hint());
    CHECK(back.lie().basis() == g.lie().basis());
  }
  json j = io::to_json(corpus::group("sl2").lie());
  j["basis"][0]["rows"] = 3;
  CHECK_THROWS_AS(io::lie_from_json(j), InputError);
}

TEST_CASE("subalgebra arguments") {
  LieAlgebra l = corpus::group("sl2").lie();
  CHECK(io::subalgebra_from_json(json{{"indices", {0}}}, l) == Subspace::span(3, {{1, 0, 0}}));
  CHECK(io::subalgebra_from_json(json{{"vectors", {{"0", "1", "-1"}}}}, l) == Subspace::span(3, {{0, 1, -1}}));
  CHECK_THROWS_AS(io::subalgebra_from_json(json{{"indices", {3}}}, l), InputError);
  CHECK_THROWS_AS(io::subalgebra_from_json(json{{"vectors", {{"1"}}}}, l), InputError);
  CHECK_THROWS_AS(io::subalgebra_from_json(json::array(), l), InputError);
}

TEST_CASE("split failure report") {
  SplitFailure f{Poly({2, 0, 1}), "ad of h-basis element 0"};
  json j = io::to_json(f, {true});
  CHECK(j["error"] == "split_failure");
  CHECK(j["factor_coeffs"] == json::array({"2", "0", "1"}));
  CHECK(j["context"] == "ad of h-basis element 0");
}
