// Acceptance criteria, one PASS/FAIL line each. Exit status is nonzero if
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "cartankit/corpus.hpp"
#include "cartankit/group.hpp"
#include "cartankit/liealg.hpp"
#include "cartankit/verify.hpp"
#include "oracles.hpp"

using namespace cartankit;

namespace {

struct Result {
  bool ok = true;
  std::ostringstream detail;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int failures = 0;

void criterion(int n, const std::string& title, const std::function<void(Result&)>& body) {
  Result r;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.ok = false;
    r.detail << " [exception: " << e.what() << "]";
  }
  char time[32];
  std::snprintf(time, sizeof time, "%.2fs", seconds_since(t0));
  std::cout << (r.ok ? "PASS" : "FAIL") << " " << n << " " << title << " (" << time << ")" << r.detail.str() << "\n";
  failures += !r.ok;
}

const Scalar kQuarter(Rational(1, 4));

}  // namespace

int main() {
  criterion(1, "exact a_j, r and g1 values on sl2", [](Result& r) {
    auto t0 = std::chrono::steady_clock::now();
    GroupContext sl2 = corpus::group("sl2");
    Mat d = Mat::diag({2, Scalar(Rational(1, 2))});
    Mat w = Mat::from_rows({{0, 1}, {-1, 0}});
    std::vector<Scalar> ad = a_coeffs(sl2, d), aw = a_coeffs(sl2, w);
    r.expect(ad == std::vector<Scalar>{0, -9 * kQuarter, -9 * kQuarter, 1}, "a(diag(2,1/2))");
    r.expect(aw == std::vector<Scalar>{0, 4, 4, 1}, "a(w)");
    r.expect(ad == oracle::shift_by_one(oracle::char_poly(oracle::sl2_adjoint(d))), "oracle a(diag)");
    r.expect(aw == oracle::shift_by_one(oracle::char_poly(oracle::sl2_adjoint(w))), "oracle a(w)");
    r.expect(r_of(sl2, d) == 1 && r_of(sl2, w) == 1, "r values");
    r.expect(g1_of(sl2, d) == Subspace::span(3, {{1, 0, 0}}), "g1(diag) = span H");
    r.expect(g1_of(sl2, w) == Subspace::span(3, {{0, 1, -1}}), "g1(w) = span J");
    r.expect(seconds_since(t0) < 1.0, "under 1 s");
    r.detail << " a(diag)=(0,-9/4,-9/4,1) a(w)=(0,4,4,1)";
  });

  criterion(2, "ranks certified and matched by the grid oracle", [](Result& r) {
    auto t0 = std::chrono::steady_clock::now();
    const std::pair<const char*, std::size_t> expected[] = {{"sl2", 1}, {"gl2", 2}, {"heis3", 3}, {"b2", 2}};
    for (const auto& [name, rk] : expected) {
      LieAlgebra l = corpus::group(name).lie();
      Subspace h = cartan_subalgebra(l, 0);
      r.expect(h.dim() == rk, std::string("rank ") + name);
      r.expect(is_cartan(l, h), std::string("is_cartan ") + name);
      r.detail << " " << name << "=" << h.dim();
    }
    for (const char* name : {"sl2", "gl2"}) {
      LieAlgebra l = corpus::group(name).lie();
      r.expect(oracle::grid_rank(l, 2) == rank(l, 0), std::string("grid oracle ") + name);
    }
    r.expect(seconds_since(t0) < 5.0, "under 5 s");
  });

  criterion(3, "verify --all --seed 42: no fail, deterministic, under 60 s", [](Result& r) {
    auto t0 = std::chrono::steady_clock::now();
    auto first = verify::run_all(42);
    double elapsed = seconds_since(t0);
    auto second = verify::run_all(42);
    r.expect(first.size() == 12, "12 reports");
    std::size_t flagged = 0;
    for (std::size_t k = 0; k < first.size(); ++k) {
      r.expect(first[k].outcome != verify::Outcome::Fail, first[k].check + " failed");
      flagged += first[k].outcome == verify::Outcome::Flagged;
      r.expect(verify::to_json(first[k], false).dump() == verify::to_json(second[k], false).dump(),
               first[k].check + " byte-identical");
    }
    r.expect(elapsed < 60.0, "under 60 s");
    r.detail << " flagged=" << flagged << " suite=" << static_cast<int>(elapsed * 1000) << "ms";
  });

  criterion(4, "regularity characterizations agree on 200 samples per group", [](Result& r) {
    for (const auto& name : corpus::names()) {
      GroupContext g = corpus::group(name);
      const std::size_t rk = rank(g.lie(), 42);
      Rng rng(42);
      std::size_t regular = 0;
      for (int k = 0; k < 200; ++k) {
        Mat x = g.sample(rng);
        if (!validate(g, x).ok) throw std::logic_error("sampler left the group " + name);
        Regularity reg = regularity(g, x, rk);
        if (reg.by_rank != reg.by_cartan) throw std::logic_error("regularity disagreement in " + name);
        regular += reg.by_rank;
      }
      r.detail << " " << name << ":" << regular << "/200";
    }
  });

  criterion(5, "C(h) definitions agree on at least 100 pairs per group", [](Result& r) {
    auto t0 = std::chrono::steady_clock::now();
    verify::CheckReport rep = verify::run_check("C10", 42, 100);
    r.expect(rep.outcome != verify::Outcome::Fail, "no disagreement");
    for (const auto& w : rep.witnesses) {
      if (!w.contains("values") || !w["values"].contains("agreeing_pairs")) continue;
      std::size_t pairs = w["values"]["agreeing_pairs"];
      r.expect(pairs >= 100, "100 pairs in " + w["input"]["group"].get<std::string>());
      r.detail << " " << w["input"]["group"].get<std::string>() << ":" << pairs;
    }
    r.expect(seconds_since(t0) < 10.0, "under 10 s");
  });

  criterion(6, "exact sequence additivity, including (1,2,1) on the Borel", [](Result& r) {
    GroupContext sb2 = corpus::group("sb2");
    SequenceDims d = sequence_dims_ideal(sb2, Subspace::span(2, {{0, 1}}), Mat::from_rows({{1, 3}, {0, 1}}));
    r.expect(d.kernel_part == 1 && d.total == 2 && d.quotient_part == 1, "(1,2,1)");
    r.expect(verify::run_check("C6", 42).outcome == verify::Outcome::Pass, "C6");
    r.expect(verify::run_check("C7", 42).outcome == verify::Outcome::Pass, "C7");
    r.detail << " sb2 unipotent: (" << d.kernel_part << "," << d.total << "," << d.quotient_part << ")";
  });

  criterion(7, "hull rank formula", [](Result& r) {
    auto check = [&](const std::string& label, const Mat& x, std::size_t dim_hull) {
      const std::size_t n = x.rows();
      auto hull = algebraic_hull_single(n, x);
      if (!split_ok(hull)) throw std::logic_error(label + " does not split");
      LieAlgebra a = LieAlgebra::from_subspace(n, std::get<Subspace>(hull));
      LieAlgebra g = LieAlgebra::from_matrices(n, {x});
      std::size_t rk_a = rank(a, 0), rk_g = rank(g, 0);
      r.expect(a.dim() == dim_hull, label + " hull dimension");
      r.expect(rk_a + g.dim() == rk_g + a.dim(), label + " formula");
      r.detail << " " << label << ": " << rk_a << "=" << rk_g << "+" << a.dim() << "-" << g.dim();
    };
    check("[[1,1],[0,1]]", Mat::from_rows({{1, 1}, {0, 1}}), 2);
    check("e12", Mat::unit(2, 0, 1), 1);
    check("diag(1,2)", Mat::diag({1, 2}), 1);
  });

  criterion(8, "regular fraction at least 9/10 on sl2 and gl2 (seed 42)", [](Result& r) {
    verify::CheckReport rep = verify::run_check("C3", 42);
    r.expect(rep.outcome != verify::Outcome::Fail, "C3 not failed");
    for (const auto& w : rep.witnesses) {
      std::string name = w["input"]["group"];
      if (name != "sl2" && name != "gl2") continue;
      bool below = w["values"]["below_threshold"];
      r.expect(!below, name + " below threshold (flagged)");
      r.detail << " " << name << ":" << w["values"]["fraction"].get<std::string>();
    }
  });

  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
