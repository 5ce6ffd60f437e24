#include "cartankit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <utility>

#include "cartankit/corpus.hpp"
#include "cartankit/error.hpp"
#include "cartankit/group.hpp"
#include "cartankit/liealg.hpp"
#include "cartankit/parallel.hpp"
#include "cartankit/rng.hpp"

namespace cartankit::verify {

using io::json;

namespace {

constexpr std::size_t kMaxCounterexamples = 5;
constexpr std::size_t kCartanSeeds = 10;
constexpr int kMaxHalvings = 10;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e37'79b9'7f4a'7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58'476d'1ce4'e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d0'49bb'1331'11ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf2'9ce4'8422'2325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100'0000'01b3ULL;
  }
  return h;
}

/// Seed for the (check, group, k) stream.
std::uint64_t stream(std::uint64_t seed, const std::string& check, const std::string& group, std::uint64_t k = 0) {
  return splitmix(seed ^ splitmix(fnv1a(check) ^ splitmix(fnv1a(group) + k)));
}

std::string ratio(std::size_t num, std::size_t den) {
  if (den == 0) return "0";
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return cartankit::to_string(q);
}

json elem_input(const std::string& group, const Mat& x) { return {{"element", io::to_json(x)}, {"group", group}}; }

class Ctx {
 public:
  Ctx(std::string id, std::uint64_t seed, std::size_t samples) : id(std::move(id)), seed(seed), samples(samples) {}

  void note(json input, json values) {
    witnesses.push_back({{"input", std::move(input)}, {"values", std::move(values)}});
  }
  void fail(json input, json values, const std::string& reason) {
    if (failures++ < kMaxCounterexamples) {
      witnesses.push_back(
          {{"counterexample", true}, {"input", std::move(input)}, {"reason", reason}, {"values", std::move(values)}});
    }
  }
  void flag() { flagged = true; }

  std::uint64_t stream_seed(const std::string& group, std::uint64_t k = 0) const { return stream(seed, id, group, k); }

  std::vector<Mat> draw(const GroupContext& g, bool split, std::size_t n, std::uint64_t k = 0) const {
    Rng rng(stream_seed(g.name(), k));
    std::vector<Mat> xs;
    xs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) xs.push_back(split ? g.sample_split(rng) : g.sample(rng));
    return xs;
  }

  std::string id;
  std::uint64_t seed;
  std::size_t samples;
  json witnesses = json::array();
  std::size_t failures = 0;
  bool flagged = false;
};

template <class R>
struct Eval {
  R value{};
  std::string error;  // empty on success
};

/// fn over every sample on the OpenMP pool, exceptions captured per sample.
template <class R, class Fn>
std::vector<Eval<R>> evaluate(std::size_t n, Fn fn) {
  return kernels::map_parallel(n, [&](std::size_t i) {
    Eval<R> e;
    try {
      e.value = fn(i);
    } catch (const std::exception& ex) {
      e.error = ex.what();
    }
    return e;
  });
}

// --- C1 --------------------------------------------------------------------

void equal_cartan_dim(Ctx& c) {
  for (const auto& name : corpus::names()) {
    GroupContext g = corpus::group(name);
    const LieAlgebra& l = g.lie();
    std::vector<std::size_t> seed_dims;
    Subspace h0;
    for (std::size_t k = 0; k < kCartanSeeds; ++k) {
      Subspace h = cartan_subalgebra(l, c.stream_seed(name, k));
      if (k == 0) h0 = h;
      seed_dims.push_back(h.dim());
      if (!is_cartan(l, h) || h.dim() != seed_dims.front()) {
        c.fail({{"group", name}, {"seed_index", k}}, {{"cartan", io::to_json(h)}, {"dims", seed_dims}},
               "Cartan subalgebras from different seeds differ in dimension");
      }
    }
    auto xs = c.draw(g, false, c.samples, kCartanSeeds);
    struct Conj {
      std::size_t dim = 0;
      bool cartan = false;
    };
    auto res = evaluate<Conj>(xs.size(), [&](std::size_t i) {
      Subspace h = h0.image(Ad(g, xs[i]));
      return Conj{h.dim(), is_cartan(l, h)};
    });
    std::set<std::size_t> conj_dims;
    for (std::size_t i = 0; i < res.size(); ++i) {
      const auto& r = res[i];
      if (!r.error.empty()) {
        c.fail(elem_input(name, xs[i]), {}, r.error);
        continue;
      }
      conj_dims.insert(r.value.dim);
      if (!r.value.cartan || r.value.dim != seed_dims.front()) {
        c.fail(elem_input(name, xs[i]), {{"conjugate_dim", r.value.dim}, {"is_cartan", r.value.cartan}},
               "Ad(g) h is not a Cartan subalgebra of the same dimension");
      }
    }
    c.note({{"group", name}},
           {{"conjugate_dims", conj_dims}, {"conjugates", xs.size()}, {"dims_by_seed", seed_dims}});
  }
}

// --- C2 --------------------------------------------------------------------

void g0_self_normalizing(Ctx& c) {
  for (const auto& name : corpus::names()) {
    GroupContext g = corpus::group(name);
    const LieAlgebra& l = g.lie();
    auto hs = corpus::nilpotent_subalgebras(name);
    const std::size_t known = corpus::known_cartans(name).size();
    hs.push_back(cartan_subalgebra(l, c.stream_seed(name)));
    for (std::size_t k = 0; k < hs.size(); ++k) {
      const Subspace& h = hs[k];
      Subspace g0 = g0_of(l, h);
      Subspace n = normalizer(l, g0);
      bool must_be_cartan = k < known || k + 1 == hs.size();
      bool cartan = is_cartan(l, h);
      json input{{"group", name}, {"h", io::to_json(h)}};
      json values{{"dim_g0", g0.dim()}, {"dim_h", h.dim()}, {"dim_normalizer", n.dim()}, {"is_cartan", cartan}};
      if (!(n == g0)) c.fail(input, values, "normalizer of g0(h) is larger than g0(h)");
      if (must_be_cartan && !cartan) c.fail(input, values, "corpus Cartan subalgebra fails is_cartan");
      c.note(std::move(input), std::move(values));
    }
  }
}

// --- C3 --------------------------------------------------------------------

void regular_dense(Ctx& c) {
  for (const auto& name : corpus::names()) {
    GroupContext g = corpus::group(name);
    const std::size_t rk = rank(g.lie(), c.seed);
    auto xs = c.draw(g, false, c.samples);
    auto res = evaluate<bool>(xs.size(), [&](std::size_t i) { return is_regular_with_rank(g, xs[i], rk); });
    std::size_t regular = 0;
    for (std::size_t i = 0; i < res.size(); ++i) {
      if (!res[i].error.empty()) {
        c.fail(elem_input(name, xs[i]), {}, res[i].error);
      } else if (res[i].value) {
        ++regular;
      }
    }
    bool below = regular * kRegularDen < kRegularNum * xs.size();
    if (below) c.flag();
    c.note({{"group", name}, {"sampler", "generic"}},
           {{"below_threshold", below},
            {"fraction", ratio(regular, xs.size())},
            {"rank", rk},
            {"regular", regular},
            {"threshold", ratio(kRegularNum, kRegularDen)}});
  }
}

// --- C4 / C5 ---------------------------------------------------------------

void reg_in_C(Ctx& c) {
  for (const auto& name : corpus::names()) {
    GroupContext g = corpus::group(name);
    const std::size_t rk = rank(g.lie(), c.seed);
    const std::uint64_t probe = c.stream_seed(name, 1);
    auto xs = c.draw(g, true, c.samples);
    struct R {
      bool regular = false;
      bool in_c = false;
      bool nonsplit = false;
    };
    auto res = evaluate<R>(xs.size(), [&](std::size_t i) {
      R r;
      r.regular = is_regular_with_rank(g, xs[i], rk);
      if (!r.regular) return r;
      try {
        r.in_c = in_C_h(g, xs[i], g1_of(g, xs[i]), probe);
      } catch (const SplitError&) {
        r.nonsplit = true;
      }
      return r;
    });
    std::size_t regular = 0, in_c = 0, nonsplit = 0;
    for (std::size_t i = 0; i < res.size(); ++i) {
      const auto& r = res[i];
      if (!r.error.empty()) {
        c.fail(elem_input(name, xs[i]), {}, r.error);
        continue;
      }
      regular += r.value.regular;
      in_c += r.value.in_c;
      nonsplit += r.value.nonsplit;
      if (r.value.regular && !r.value.nonsplit && !r.value.in_c) {
        c.fail(elem_input(name, xs[i]), {{"g1", io::to_json(g1_of(g, xs[i]))}}, "regular g is not in C(g1(Ad(g)))");
      }
    }
    if (nonsplit > 0) c.flag();
    c.note({{"group", name}, {"sampler", "split"}},
           {{"in_c", in_c}, {"nonsplit", nonsplit}, {"regular", regular}, {"samples", xs.size()}});
  }
}

void unique_cartan(Ctx& c) {
  for (const auto& name : corpus::names()) {
    GroupContext g = corpus::group(name);
    const std::size_t rk = rank(g.lie(), c.seed);
    const std::uint64_t probe = c.stream_seed(name, 1);
    const auto known = corpus::known_cartans(name);
    auto xs = c.draw(g, true, c.samples);
    struct R {
      bool regular = false;
      std::size_t tested = 0;
      std::size_t equal = 0;
      std::size_t nonsplit = 0;
      std::vector<std::size_t> violations;
    };
    auto res = evaluate<R>(xs.size(), [&](std::size_t i) {
      R r;
      r.regular = is_regular_with_rank(g, xs[i], rk);
      if (!r.regular) return r;
      Subspace g1 = g1_of(g, xs[i]);
      for (std::size_t k = 0; k < known.size(); ++k) {
        if (known[k] == g1) {
          ++r.equal;
          continue;
        }
        try {
          if (in_C_h(g, xs[i], known[k], probe)) r.violations.push_back(k);
          ++r.tested;
        } catch (const SplitError&) {
          ++r.nonsplit;
        }
      }
      return r;
    });
    std::size_t regular = 0, tested = 0, equal = 0, nonsplit = 0;
    for (std::size_t i = 0; i < res.size(); ++i) {
      const auto& r = res[i];
      if (!r.error.empty()) {
        c.fail(elem_input(name, xs[i]), {}, r.error);
        continue;
      }
      regular += r.value.regular;
      tested += r.value.tested;
      equal += r.value.equal;
      nonsplit += r.value.nonsplit;
      for (std::size_t k : r.value.violations) {
        c.fail(elem_input(name, xs[i]), {{"g1", io::to_json(g1_of(g, xs[i]))}, {"h_alt", io::to_json(known[k])}},
               "regular g lies in C(h') for a Cartan h' other than g1(Ad(g))");
      }
    }
    if (nonsplit > 0) c.flag();
    c.note({{"group", name}, {"known_cartans", known.size()}},
           {{"alternatives_tested", tested}, {"g1_equal_known", equal}, {"nonsplit", nonsplit}, {"regular", regular}});
  }
}

// --- C6 / C7 ---------------------------------------------------------------

std::string triple(const SequenceDims& d) {
  return std::to_string(d.kernel_part) + "," + std::to_string(d.total) + "," + std::to_string(d.quotient_part);
}

void center_sequence(Ctx& c) {
  for (std::string name : {"gl2", "heis3", "b2"}) {
    GroupContext g = corpus::group(name);
    auto xs = c.draw(g, false, c.samples);
    auto res = evaluate<SequenceDims>(xs.size(), [&](std::size_t i) { return sequence_dims_center(g, xs[i]); });
    std::map<std::string, std::size_t> histogram;
    for (std::size_t i = 0; i < res.size(); ++i) {
      if (!res[i].error.empty()) {
        c.fail(elem_input(name, xs[i]), {}, res[i].error);
        continue;
      }
      ++histogram[triple(res[i].value)];
    }
    c.note({{"group", name}, {"sequence", "0 -> z -> g1 -> ad(g)^1 -> 0"}}, {{"dims_histogram", histogram}});
  }
}

void ideal_sequence(Ctx& c) {
  struct Instance {
    std::string group;
    std::vector<Vec> ideal;
    bool unipotent;
    std::string expected;  // empty when only additivity is asserted
  };
  const std::vector<Instance> instances{
      {"sb2", {{0, 1}}, true, "1,2,1"},
      {"b2", {{0, 1, 0}}, true, "1,3,2"},
      {"sb2", {{0, 1}}, false, ""},
      {"b2", {{0, 1, 0}}, false, ""},
      {"heis3", {{0, 0, 1}}, false, "1,3,2"},
  };
  for (std::size_t idx = 0; idx < instances.size(); ++idx) {
    const auto& inst = instances[idx];
    GroupContext g = corpus::group(inst.group);
    Subspace k = Subspace::span(g.lie().dim(), inst.ideal);
    std::vector<Mat> xs;
    if (inst.unipotent) {
      Rng rng(c.stream_seed(inst.group, idx));
      for (std::size_t i = 0; i < c.samples; ++i) {
        xs.push_back(Mat::from_rows({{1, Scalar(rng.rational(16, 9))}, {0, 1}}));
      }
    } else {
      xs = c.draw(g, false, c.samples, idx);
    }
    auto res = evaluate<SequenceDims>(xs.size(), [&](std::size_t i) { return sequence_dims_ideal(g, k, xs[i]); });
    std::map<std::string, std::size_t> histogram;
    json input{{"group", inst.group}, {"ideal", io::to_json(k)}, {"sampler", inst.unipotent ? "unipotent" : "generic"}};
    for (std::size_t i = 0; i < res.size(); ++i) {
      if (!res[i].error.empty()) {
        c.fail(elem_input(inst.group, xs[i]), {{"ideal", io::to_json(k)}}, res[i].error);
        continue;
      }
      std::string t = triple(res[i].value);
      ++histogram[t];
      if (!inst.expected.empty() && t != inst.expected) {
        c.fail(elem_input(inst.group, xs[i]), {{"dims", t}, {"expected", inst.expected}, {"ideal", io::to_json(k)}},
               "sequence dimensions differ from the hand-derived values");
      }
    }
    json values{{"dims_histogram", histogram}};
    if (!inst.expected.empty()) values["expected"] = inst.expected;
    c.note(std::move(input), std::move(values));
  }
}

// --- C8 --------------------------------------------------------------------

void hull_rank_formula(Ctx& c) {
  struct Example {
    std::string label;
    Mat x;
    std::size_t expected_dim;  // 0 when not hand-derived
  };
  const Scalar i = Scalar::i();
  const std::vector<Example> examples{
      {"e12", Mat::unit(2, 0, 1), 1},
      {"diag(1,2)", Mat::diag({1, 2}), 1},
      {"[[1,1],[0,1]]", Mat::from_rows({{1, 1}, {0, 1}}), 2},
      {"diag(1,i)", Mat::diag({1, i}), 2},
      {"diag(1,2,3)", Mat::diag({1, 2, 3}), 1},
      {"diag(1,-1)", Mat::diag({1, -1}), 1},
      {"[[2,1],[0,2]]", Mat::from_rows({{2, 1}, {0, 2}}), 2},
      {"H+E", corpus::H() + corpus::E(), 1},
      {"J", corpus::J(), 1},
      {"e12+e23", Mat::unit(3, 0, 1) + Mat::unit(3, 1, 2), 1},
      {"diag(1,2)+e34", [] {
         Mat m = Mat::diag({1, 2, 0, 0});
         m(2, 3) = 1;
         return m;
       }(), 2},
  };
  for (const auto& ex : examples) {
    const std::size_t n = ex.x.rows();
    json input{{"label", ex.label}, {"x", io::to_json(ex.x)}};
    auto hull = algebraic_hull_single(n, ex.x);
    if (!split_ok(hull)) {
      c.fail(input, io::to_json(std::get<SplitFailure>(hull)), "hull example does not split");
      continue;
    }
    const Subspace& flat = std::get<Subspace>(hull);
    LieAlgebra a = LieAlgebra::from_subspace(n, flat);
    LieAlgebra gx = LieAlgebra::from_matrices(n, {ex.x});
    std::size_t rk_a = rank(a, c.seed);
    std::size_t rk_g = rank(gx, c.seed);
    json values{{"dim_g", gx.dim()}, {"dim_hull", a.dim()}, {"rank_g", rk_g}, {"rank_hull", rk_a}};
    if (!flat.contains(ex.x.flatten())) {
      c.fail(input, values, "hull does not contain X");
    }
    if (rk_a + gx.dim() != rk_g + a.dim()) c.fail(input, values, "rk a(g) != rk g + dim a(g) - dim g");
    if (ex.expected_dim != 0 && a.dim() != ex.expected_dim) {
      values["expected_dim_hull"] = ex.expected_dim;
      c.fail(input, values, "hull dimension differs from the hand-derived value");
    }
    c.note(std::move(input), std::move(values));
  }
}

// --- C9 --------------------------------------------------------------------

void root_sum(Ctx& c) {
  for (const auto& name : corpus::names()) {
    GroupContext g = corpus::group(name);
    const LieAlgebra& l = g.lie();
    auto hs = corpus::known_cartans(name);
    const std::size_t known = hs.size();
    hs.push_back(cartan_subalgebra(l, c.stream_seed(name)));
    for (std::size_t k = 0; k < hs.size(); ++k) {
      json input{{"group", name}, {"h", io::to_json(hs[k])}, {"source", k < known ? "corpus" : "search"}};
      auto r = roots(l, hs[k]);
      if (!split_ok(r)) {
        if (k < known) {
          c.fail(input, io::to_json(std::get<SplitFailure>(r)), "corpus Cartan does not split");
        } else {
          c.note(std::move(input), {{"nonsplit", io::to_json(std::get<SplitFailure>(r))}});
        }
        continue;
      }
      const auto& datum = std::get<RootDatum>(r);
      json table = json::array();
      std::size_t total = 0;
      for (const auto& rs : datum.roots) {
        table.push_back({{"dim", rs.space.dim()}, {"values", io::to_json(rs.values)}});
        total += rs.space.dim();
      }
      json values{{"dim_g", l.dim()}, {"root_spaces", table}, {"sum", total}};
      if (total != l.dim()) c.fail(input, values, "root space dimensions do not sum to dim g");
      c.note(std::move(input), std::move(values));
    }
  }
}

// --- C10 -------------------------------------------------------------------

void c_h_two_definitions(Ctx& c) {
  for (const auto& name : corpus::names()) {
    GroupContext g = corpus::group(name);
    const std::size_t rk = rank(g.lie(), c.seed);
    const std::uint64_t probe = c.stream_seed(name, 1);
    const auto known = corpus::known_cartans(name);
    const auto weyl = corpus::weyl_witnesses(name);
    auto xs = c.draw(g, true, c.samples);
    struct Pair {
      Mat x;
      Subspace h;
      CMembership m;
    };
    struct R {
      std::size_t pairs = 0;
      std::size_t normalizing = 0;
      std::size_t in_c = 0;
      std::size_t nonsplit = 0;
      std::vector<Pair> disagreements;
    };
    auto res = evaluate<R>(xs.size(), [&](std::size_t i) {
      R r;
      auto test = [&](const Mat& x, const Subspace& h) {
        try {
          CMembership m = c_membership(g, x, h, probe);
          ++r.pairs;
          r.normalizing += in_NG_h(g, x, h);
          r.in_c += m.by_roots && m.by_semisimple;
          if (m.by_roots != m.by_semisimple) r.disagreements.push_back({x, h, m});
        } catch (const SplitError&) {
          ++r.nonsplit;
        }
      };
      const Mat& x = xs[i];
      if (is_regular_with_rank(g, x, rk)) test(x, g1_of(g, x));
      for (std::size_t k = 0; k < known.size(); ++k) {
        test(x, known[k]);
        for (const auto& w : weyl[k]) test(w * x, known[k]);
      }
      return r;
    });
    std::size_t pairs = 0, normalizing = 0, in_c = 0, nonsplit = 0;
    for (std::size_t i = 0; i < res.size(); ++i) {
      const auto& r = res[i];
      if (!r.error.empty()) {
        c.fail(elem_input(name, xs[i]), {}, r.error);
        continue;
      }
      pairs += r.value.pairs;
      normalizing += r.value.normalizing;
      in_c += r.value.in_c;
      nonsplit += r.value.nonsplit;
      for (const auto& d : r.value.disagreements) {
        c.fail({{"element", io::to_json(d.x)}, {"group", name}, {"h", io::to_json(d.h)}},
               {{"by_roots", d.m.by_roots}, {"by_semisimple", d.m.by_semisimple}},
               "the two C(h) membership tests disagree");
      }
    }
    if (nonsplit > 0) c.flag();
    c.note({{"group", name}},
           {{"agreeing_pairs", pairs}, {"in_c", in_c}, {"nonsplit", nonsplit}, {"normalizing", normalizing}});
  }
}

// --- C11 -------------------------------------------------------------------

void local_constancy(Ctx& c) {
  for (const auto& name : corpus::names()) {
    GroupContext g = corpus::group(name);
    const std::size_t rk = rank(g.lie(), c.seed);
    auto xs = c.draw(g, false, c.samples);
    struct R {
      bool regular = false;
      bool constant = false;
      int halvings = 0;
    };
    auto res = evaluate<R>(xs.size(), [&](std::size_t i) {
      R r;
      if (r_of(g, xs[i]) != rk) return r;
      r.regular = true;
      Rng rng(c.stream_seed(name, i + 1));
      Rational radius(1, 16);
      for (; r.halvings <= kMaxHalvings; ++r.halvings, radius /= 2) {
        bool all = true;
        for (std::size_t k = 0; k < kNeighbors && all; ++k) all = r_of(g, g.neighbor(xs[i], radius, rng)) == rk;
        if (all) {
          r.constant = true;
          return r;
        }
      }
      return r;
    });
    std::size_t regular = 0;
    int max_halvings = 0;
    for (std::size_t i = 0; i < res.size(); ++i) {
      const auto& r = res[i];
      if (!r.error.empty()) {
        c.fail(elem_input(name, xs[i]), {}, r.error);
        continue;
      }
      if (!r.value.regular) continue;
      ++regular;
      max_halvings = std::max(max_halvings, r.value.halvings);
      if (!r.value.constant) {
        c.fail(elem_input(name, xs[i]), {{"r", rk}}, "r is not constant on any sampled neighbourhood");
      }
    }
    Rational smallest(1, 16);
    smallest /= Rational(1L << max_halvings);
    c.note({{"group", name}, {"neighbors", kNeighbors}},
           {{"regular", regular}, {"smallest_radius", cartankit::to_string(smallest)}, {"rank", rk}});
  }
}

// --- C12 -------------------------------------------------------------------

bool unipotent(const Mat& m) {
  Poly p = char_poly(m);
  Poly u = Poly::constant(1);
  for (std::size_t k = 0; k < m.rows(); ++k) u = u * Poly::linear(Scalar(1));
  return p == u;
}

void nilpotency_transfer(Ctx& c) {
  for (const auto& name : corpus::names()) {
    GroupContext g = corpus::group(name);
    const LieAlgebra& l = g.lie();
    corpus::Structure expected = corpus::known_structure(name);
    corpus::Structure got{center(l) == Subspace::whole(l.dim()), is_nilpotent(l), is_solvable(l)};
    json input{{"group", name}};
    json values{{"abelian", got.abelian}, {"nilpotent", got.nilpotent}, {"solvable", got.solvable}};
    if (got.abelian != expected.abelian || got.nilpotent != expected.nilpotent || got.solvable != expected.solvable) {
      c.fail(input, values, "Lie algebra structure differs from the known group structure");
    }
    auto xs = c.draw(g, false, 3 * c.samples);
    std::size_t commuting = 0, unipotent_commutators = 0, class_two = 0;
    for (std::size_t s = 0; s < c.samples; ++s) {
      const Mat& a = xs[3 * s];
      const Mat& b = xs[3 * s + 1];
      const Mat& d = xs[3 * s + 2];
      Mat k = a * b * inverse(a) * inverse(b);
      Mat k2 = k * d * inverse(k) * inverse(d);
      const Mat id = Mat::identity(g.ambient());
      commuting += k == id;
      unipotent_commutators += unipotent(k);
      class_two += k2 == id;
      json ex = {{"a", io::to_json(a)}, {"b", io::to_json(b)}, {"c", io::to_json(d)}, {"group", name}};
      if (expected.abelian && !(k == id)) c.fail(ex, {}, "abelian group has a nontrivial commutator");
      if (expected.nilpotent && !(k2 == id)) c.fail(ex, {}, "nilpotent group fails [[a,b],c] = 1");
      if (expected.solvable && !unipotent(k)) c.fail(ex, {}, "commutator in a triangular group is not unipotent");
    }
    values["commuting_pairs"] = commuting;
    values["trivial_double_commutators"] = class_two;
    values["unipotent_commutators"] = unipotent_commutators;
    c.note(std::move(input), std::move(values));
  }
}

struct Entry {
  std::string id;
  std::string name;
  std::size_t samples;
  std::function<void(Ctx&)> run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> all{
      {"C1", "equal_cartan_dim", 20, equal_cartan_dim},
      {"C2", "g0_self_normalizing", 0, g0_self_normalizing},
      {"C3", "regular_dense", 200, regular_dense},
      {"C4", "reg_in_C", 200, reg_in_C},
      {"C5", "unique_cartan", 200, unique_cartan},
      {"C6", "center_sequence", 200, center_sequence},
      {"C7", "ideal_sequence", 200, ideal_sequence},
      {"C8", "hull_rank_formula", 0, hull_rank_formula},
      {"C9", "root_sum", 0, root_sum},
      {"C10", "c_h_two_definitions", 200, c_h_two_definitions},
      {"C11", "local_constancy", 200, local_constancy},
      {"C12", "nilpotency_transfer", 32, nilpotency_transfer},
  };
  return all;
}

const Entry& entry(const std::string& id) {
  for (const auto& e : registry()) {
    if (e.id == id) return e;
  }
  throw InputError("unknown check '" + id + "'");
}

}  // namespace

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Flagged: return "flagged";
  }
  return "fail";
}

json to_json(const CheckReport& r, bool include_timing) {
  json j{{"check", r.check},
         {"outcome", to_string(r.outcome)},
         {"samples", r.samples},
         {"seed", r.seed},
         {"witnesses", r.witnesses}};
  if (include_timing) j["runtime_ms"] = r.runtime_ms;
  return j;
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.push_back(e.id);
    return out;
  }();
  return ids;
}

bool is_check(const std::string& id) { return std::ranges::find(check_ids(), id) != check_ids().end(); }

const std::string& check_name(const std::string& id) { return entry(id).name; }

std::size_t default_samples(const std::string& id) { return entry(id).samples; }

CheckReport run_check(const std::string& id, std::uint64_t seed, std::size_t samples) {
  const Entry& e = entry(id);
  auto start = std::chrono::steady_clock::now();
  Ctx c(id, seed, samples);
  try {
    e.run(c);
  } catch (const std::exception& ex) {
    c.fail({{"check", id}}, {}, ex.what());
  }
  CheckReport r;
  r.check = id;
  r.seed = seed;
  r.samples = samples;
  r.outcome = c.failures > 0 ? Outcome::Fail : c.flagged ? Outcome::Flagged : Outcome::Pass;
  if (c.failures > kMaxCounterexamples) {
    c.witnesses.push_back({{"input", {{"check", id}}}, {"values", {{"failures", c.failures}}}});
  }
  r.witnesses = std::move(c.witnesses);
  r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

CheckReport run_check(const std::string& id, std::uint64_t seed) { return run_check(id, seed, default_samples(id)); }

std::vector<CheckReport> run_all(std::uint64_t seed) {
  std::vector<CheckReport> out;
  for (const auto& id : check_ids()) out.push_back(run_check(id, seed));
  return out;
}

bool any_failed(const std::vector<CheckReport>& reports) {
  return std::ranges::any_of(reports, [](const CheckReport& r) { return r.outcome == Outcome::Fail; });
}

}  // namespace cartankit::verify
