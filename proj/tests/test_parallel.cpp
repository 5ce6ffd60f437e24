#include <doctest.h>

#include <stdexcept>

#include "cartankit/corpus.hpp"
#include "cartankit/group.hpp"
#include "cartankit/parallel.hpp"

using namespace cartankit;

TEST_CASE("map_parallel matches map_serial") {
  GroupContext g = corpus::group("gl2");
  Rng rng(4);
  std::vector<Mat> xs;
  for (int k = 0; k < 64; ++k) xs.push_back(g.sample(rng));
  auto fn = [&](std::size_t i) { return a_coeffs(g, xs[i]); };
  CHECK(kernels::map_serial(xs.size(), fn) == kernels::map_parallel(xs.size(), fn));
  CHECK(kernels::map_parallel(0, fn).empty());
}

TEST_CASE("map_parallel rethrows the first failure in index order") {
  auto fn = [](std::size_t i) -> int {
    if (i == 7) throw std::runtime_error("seven");
    if (i == 30) throw std::logic_error("thirty");
    return static_cast<int>(i);
  };
  try {
    kernels::map_parallel(40, fn);
    FAIL("expected an exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()) == "seven");
  }
}

TEST_CASE("parallel matmul is exact") {
  Rng rng(12);
  for (std::size_t n : {1u, 5u, 30u}) {
    Mat a(n, n + 1), b(n + 1, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j <= n; ++j) {
        a(i, j) = Scalar(rng.rational(5, 3), rng.rational(2, 2));
        b(j, i) = Scalar(rng.rational(5, 3));
      }
    }
    CHECK(kernels::matmul_serial(a, b) == kernels::matmul_parallel(a, b));
    CHECK(a * b == kernels::matmul_serial(a, b));
  }
}
