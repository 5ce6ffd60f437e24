// Serial vs OpenMP timings for the batch kernels.
//
//   bench_kernels [samples] [matmul_size]

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "cartankit/corpus.hpp"
#include "cartankit/group.hpp"
#include "cartankit/parallel.hpp"
#include "cartankit/rng.hpp"

using namespace cartankit;

namespace {

template <class Fn>
double time_ms(Fn&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void report(const std::string& what, double serial, double parallel, bool same) {
  std::cout << what << "  serial " << serial << " ms  parallel " << parallel << " ms  speedup "
            << (parallel > 0 ? serial / parallel : 0.0) << "  identical " << (same ? "yes" : "NO") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t samples = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 400;
  const std::size_t n = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 48;
  std::cout << "threads " << kernels::max_threads() << "\n";

  for (const auto& name : corpus::names()) {
    GroupContext g = corpus::group(name);
    Rng rng(7);
    std::vector<Mat> xs;
    for (std::size_t i = 0; i < samples; ++i) xs.push_back(g.sample(rng));
    auto fn = [&](std::size_t i) { return g1_of(g, xs[i]).dim(); };
    std::vector<std::size_t> a, b;
    double ts = time_ms([&] { a = kernels::map_serial(xs.size(), fn); });
    double tp = time_ms([&] { b = kernels::map_parallel(xs.size(), fn); });
    report("g1_of " + name + " x" + std::to_string(samples), ts, tp, a == b);
  }

  Rng rng(11);
  Mat x(n, n), y(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      x(i, j) = Scalar(rng.rational(9, 7), rng.rational(9, 7));
      y(i, j) = Scalar(rng.rational(9, 7));
    }
  }
  Mat p, q;
  double ts = time_ms([&] { p = kernels::matmul_serial(x, y); });
  double tp = time_ms([&] { q = kernels::matmul_parallel(x, y); });
  report("matmul " + std::to_string(n) + "x" + std::to_string(n), ts, tp, p == q);
  return 0;
}
