#include "cartankit/group.hpp"

#include <algorithm>
#include <utility>

#include "cartankit/error.hpp"

namespace cartankit {

std::string to_string(MembershipHint hint) {
  switch (hint) {
    case MembershipHint::None: return "none";
    case MembershipHint::Det1: return "det1";
    case MembershipHint::UnipotentUpper: return "unipotent-upper";
    case MembershipHint::Diagonal: return "diagonal";
    case MembershipHint::InvertibleUpper: return "invertible-upper";
  }
  return "none";
}

MembershipHint parse_hint(const std::string& name) {
  for (auto h : {MembershipHint::None, MembershipHint::Det1, MembershipHint::UnipotentUpper,
                 MembershipHint::Diagonal, MembershipHint::InvertibleUpper}) {
    if (to_string(h) == name) return h;
  }
  throw InputError("unknown membership hint '" + name + "'");
}

GroupContext::GroupContext(std::string name, LieAlgebra lie, MembershipHint hint, Chart chart)
    : name_(std::move(name)), lie_(std::move(lie)), hint_(hint), chart_(chart) {
  bool two_by_two = chart == Chart::Special2 || chart == Chart::SpecialUpper2;
  if (two_by_two && lie_.ambient() != 2) throw InputError("chart needs 2x2 matrices");
}

// ---------------------------------------------------------------------------
// Sampling

namespace {

constexpr long kNum = 16;
constexpr long kDen = 9;
constexpr long kSteps = 64;

bool positive(const Scalar& s) { return s.is_real() && sgn(s.re()) > 0; }

Scalar signed_positive(Rng& rng) {
  Scalar a(rng.positive(kNum, kDen));
  return rng.coin() ? a : -a;
}

Scalar jitter(Rng& rng, const Rational& radius) {
  return Scalar(Rational(radius * Rational(rng.uniform(-kSteps, kSteps), kSteps)));
}

Mat sl2_from_chart(const Scalar& a, const Scalar& b, const Scalar& c) {
  Mat m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = (Scalar(1) + b * c) / a;
  return m;
}

/// [[m^2 - n^2, -2mn], [2mn, m^2 - n^2]] / (m^2 + n^2)
Mat pythagorean_rotation(Rng& rng) {
  long m = 0;
  long n = 0;
  while (m == 0 && n == 0) {
    m = rng.uniform(0, 4);
    n = rng.uniform(-4, 4);
  }
  Scalar denom(m * m + n * n);
  Scalar c = Scalar(m * m - n * n) / denom;
  Scalar s = Scalar(2 * m * n) / denom;
  return Mat::from_rows({{c, -s}, {s, c}});
}

}  // namespace

Mat GroupContext::sample(Rng& rng) const {
  const std::size_t n = ambient();
  switch (chart_) {
    case Chart::None:
      throw InputError("group '" + name_ + "' has no sampler");
    case Chart::General:
      for (;;) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(rng.rational(kNum, kDen));
        }
        if (positive(determinant(m))) return m;
      }
    case Chart::Special2:
      return sl2_from_chart(signed_positive(rng), Scalar(rng.rational(kNum, kDen)),
                            Scalar(rng.rational(kNum, kDen)));
    case Chart::Upper:
    case Chart::Unipotent:
    case Chart::Diagonal: {
      Mat m(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = chart_ == Chart::Unipotent ? Scalar(1) : Scalar(rng.positive(kNum, kDen));
        if (chart_ == Chart::Diagonal) continue;
        for (std::size_t j = i + 1; j < n; ++j) m(i, j) = Scalar(rng.rational(kNum, kDen));
      }
      return m;
    }
    case Chart::SpecialUpper2: {
      Scalar a(rng.positive(kNum, kDen));
      return Mat::from_rows({{a, Scalar(rng.rational(kNum, kDen))}, {Scalar(), Scalar(1) / a}});
    }
  }
  throw InputError("unknown chart");
}

Mat GroupContext::sample_split(Rng& rng) const {
  const std::size_t n = ambient();
  if (chart_ != Chart::General && chart_ != Chart::Special2) return sample(rng);
  Mat core(n, n);
  if (chart_ == Chart::Special2) {
    if (rng.coin()) {
      Scalar a = signed_positive(rng);
      core = Mat::diag({a, Scalar(1) / a});
    } else {
      core = pythagorean_rotation(rng);
    }
  } else if (n == 2 && rng.coin()) {
    Scalar x(rng.rational(kNum, kDen));
    Scalar y(rng.positive(kNum, kDen));
    core = Mat::from_rows({{x, -y}, {y, x}});
  } else {
    Vec d(n);
    for (auto& di : d) di = Scalar(rng.positive(kNum, kDen));
    core = Mat::diag(d);
  }
  if (rng.uniform(0, 2) == 0) return core;
  Mat p = sample(rng);
  return p * core * inverse(p);
}

Mat GroupContext::neighbor(const Mat& g, const Rational& radius, Rng& rng) const {
  const std::size_t n = ambient();
  switch (chart_) {
    case Chart::None:
      throw InputError("group '" + name_ + "' has no chart");
    case Chart::General:
      for (;;) {
        Mat m = g;
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) m(i, j) += jitter(rng, radius);
        }
        if (positive(determinant(m))) return m;
      }
    case Chart::Special2: {
      // Two charts: a != 0 solves for d, otherwise b != 0 solves for c.
      if (!g(0, 0).is_zero()) {
        for (;;) {
          Scalar a = g(0, 0) + jitter(rng, radius);
          if (a.is_zero()) continue;
          return sl2_from_chart(a, g(0, 1) + jitter(rng, radius), g(1, 0) + jitter(rng, radius));
        }
      }
      for (;;) {
        Scalar b = g(0, 1) + jitter(rng, radius);
        if (b.is_zero()) continue;
        Scalar a = jitter(rng, radius);
        Scalar d = g(1, 1) + jitter(rng, radius);
        return Mat::from_rows({{a, b}, {(a * d - Scalar(1)) / b, d}});
      }
    }
    case Chart::Upper:
    case Chart::Unipotent:
    case Chart::Diagonal:
      for (;;) {
        Mat m = g;
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i) {
          if (chart_ != Chart::Unipotent) {
            m(i, i) += jitter(rng, radius);
            ok = ok && positive(m(i, i));
          }
          if (chart_ == Chart::Diagonal) continue;
          for (std::size_t j = i + 1; j < n; ++j) m(i, j) += jitter(rng, radius);
        }
        if (ok) return m;
      }
    case Chart::SpecialUpper2:
      for (;;) {
        Scalar a = g(0, 0) + jitter(rng, radius);
        if (!positive(a)) continue;
        return Mat::from_rows({{a, g(0, 1) + jitter(rng, radius)}, {Scalar(), Scalar(1) / a}});
      }
  }
  throw InputError("unknown chart");
}

// ---------------------------------------------------------------------------
// Membership and Ad

namespace {

std::string hint_violation(MembershipHint hint, const Mat& x) {
  const std::size_t n = x.rows();
  auto below_zero = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (!x(i, j).is_zero()) return false;
      }
    }
    return true;
  };
  switch (hint) {
    case MembershipHint::None:
      return {};
    case MembershipHint::Det1: {
      Scalar d = determinant(x);
      return d.is_one() ? std::string() : "determinant is " + d.to_string() + ", not 1";
    }
    case MembershipHint::Diagonal:
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i != j && !x(i, j).is_zero()) return "not diagonal";
        }
      }
      return {};
    case MembershipHint::InvertibleUpper:
      return below_zero() ? std::string() : "not upper triangular";
    case MembershipHint::UnipotentUpper:
      if (!below_zero()) return "not upper triangular";
      for (std::size_t i = 0; i < n; ++i) {
        if (!x(i, i).is_one()) return "diagonal entry " + std::to_string(i) + " is not 1";
      }
      return {};
  }
  return {};
}

/// Ad(x) for an element already known to be valid.
Mat adjoint(const LieAlgebra& l, const Mat& x, const Mat& x_inv) {
  const std::size_t k = l.dim();
  Mat a(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    Vec c = l.coordinates(x * l.basis()[j] * x_inv);
    for (std::size_t i = 0; i < k; ++i) a(i, j) = c[i];
  }
  return a;
}

Mat checked_adjoint(const GroupContext& g, const Mat& x) {
  require_valid(g, x);
  return adjoint(g.lie(), x, inverse(x));
}

std::size_t first_nonzero(const std::vector<Scalar>& a) {
  std::size_t j = 0;
  while (j < a.size() && a[j].is_zero()) ++j;
  return j;
}

}  // namespace

Validation validate(const GroupContext& g, const Mat& x) {
  const std::size_t n = g.ambient();
  if (x.rows() != n || x.cols() != n) {
    return {false, "element is " + std::to_string(x.rows()) + "x" + std::to_string(x.cols()) + ", expected " +
                       std::to_string(n) + "x" + std::to_string(n)};
  }
  if (!is_invertible(x)) return {false, "element is not invertible"};
  if (auto why = hint_violation(g.hint(), x); !why.empty()) {
    return {false, "membership hint '" + to_string(g.hint()) + "' fails: " + why};
  }
  Mat x_inv = inverse(x);
  Vec c;
  for (std::size_t i = 0; i < g.lie().dim(); ++i) {
    if (!g.lie().try_coordinates(x * g.lie().basis()[i] * x_inv, c)) {
      return {false, "conjugation sends basis element " + std::to_string(i) + " outside the Lie algebra"};
    }
  }
  return {};
}

void require_valid(const GroupContext& g, const Mat& x) {
  auto v = validate(g, x);
  if (!v.ok) throw InputError("element rejected by '" + g.name() + "': " + v.reason);
}

Mat Ad(const GroupContext& g, const Mat& x) { return checked_adjoint(g, x); }

std::vector<Scalar> a_coeffs(const GroupContext& g, const Mat& x) {
  Poly shifted = char_poly(checked_adjoint(g, x)).shifted(Scalar(1));
  std::vector<Scalar> a = shifted.coeffs();
  a.resize(g.lie().dim() + 1);
  return a;
}

std::size_t r_of(const GroupContext& g, const Mat& x) { return first_nonzero(a_coeffs(g, x)); }

Subspace g1_of(const GroupContext& g, const Mat& x) { return primary_component(checked_adjoint(g, x), Scalar(1)); }

GroupRank group_rank(const GroupContext& g, std::uint64_t seed, std::size_t samples) {
  GroupRank out;
  out.rank = rank(g.lie(), seed);
  out.min_observed = g.lie().dim();
  if (!g.has_sampler()) return out;
  Rng rng(seed ^ 0x9e37'79b9'7f4a'7c15ULL);
  for (std::size_t s = 0; s < samples; ++s) {
    Mat x = g.sample(rng);
    std::size_t d = g1_of(g, x).dim();
    if (d < out.rank) throw InconsistencyError("sampled element with dim g^1 below the rank");
    out.min_observed = std::min(out.min_observed, d);
  }
  out.samples = samples;
  out.witnessed = out.min_observed == out.rank;
  return out;
}

Regularity regularity(const GroupContext& g, const Mat& x, std::size_t lie_rank) {
  Subspace g1 = g1_of(g, x);
  return {g1.dim() == lie_rank, is_cartan(g.lie(), g1)};
}

bool is_regular_with_rank(const GroupContext& g, const Mat& x, std::size_t lie_rank) {
  Regularity r = regularity(g, x, lie_rank);
  if (r.by_rank != r.by_cartan) {
    throw InconsistencyError("regularity characterizations disagree: dim g^1 = rank is " +
                             std::string(r.by_rank ? "true" : "false") + ", g^1 Cartan is " +
                             std::string(r.by_cartan ? "true" : "false"));
  }
  return r.by_rank;
}

bool is_regular(const GroupContext& g, const Mat& x, std::uint64_t seed) {
  return is_regular_with_rank(g, x, rank(g.lie(), seed));
}

bool in_NG_h(const GroupContext& g, const Mat& x, const Subspace& h) {
  return h.contains(h.image(checked_adjoint(g, x)));
}

bool in_ZG_h(const GroupContext& g, const Mat& x, const Subspace& h) {
  Mat a = checked_adjoint(g, x);
  for (std::size_t i = 0; i < h.dim(); ++i) {
    Vec v = h.vector(i);
    if (a.apply(v) != v) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// C(h)

namespace {

RootDatum require_roots(const LieAlgebra& l, const Subspace& h) {
  if (!is_cartan(l, h)) throw InputError("h is not a Cartan subalgebra");
  auto r = roots(l, h);
  if (!split_ok(r)) throw SplitError(std::get<SplitFailure>(std::move(r)));
  return std::get<RootDatum>(std::move(r));
}

/// lambda o A|h as a tuple on the h-basis, where column j of a_on_h holds
/// the coordinates of A z_j.
Vec pull_back(const Vec& lambda, const Mat& a_on_h) {
  Vec mu(lambda.size());
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    for (std::size_t i = 0; i < lambda.size(); ++i) {
      if (!a_on_h(i, j).is_zero()) mu[j] += a_on_h(i, j) * lambda[i];
    }
  }
  return mu;
}

}  // namespace

CMembership c_membership(const GroupContext& g, const Mat& x, const Subspace& h, std::uint64_t seed) {
  Mat a = checked_adjoint(g, x);
  RootDatum datum = require_roots(g.lie(), h);
  CMembership out;
  if (!h.contains(h.image(a))) return out;

  Mat a_on_h = restrict_to(a, h);
  out.by_roots = std::all_of(datum.roots.begin(), datum.roots.end(),
                             [&](const RootSpace& r) { return pull_back(r.values, a_on_h) == r.values; });

  std::vector<Vec> probes = datum.h_basis;
  if (h.dim() > 1) {
    Rng rng(seed);
    Vec z(g.lie().dim());
    for (const auto& b : datum.h_basis) z = axpy(z, Scalar(rng.uniform(-7, 7)), b);
    probes.push_back(std::move(z));
  }
  out.by_semisimple = true;
  for (const auto& z : probes) {
    auto jc = jordan_chevalley(g.lie().ad(z));
    if (!split_ok(jc)) throw SplitError(std::get<SplitFailure>(std::move(jc)));
    const Mat& s = std::get<JordanChevalley>(jc).semisimple;
    if (!(a * s == s * a)) {
      out.by_semisimple = false;
      break;
    }
  }
  return out;
}

bool in_C_h(const GroupContext& g, const Mat& x, const Subspace& h, std::uint64_t seed) {
  CMembership m = c_membership(g, x, h, seed);
  if (m.by_roots != m.by_semisimple) {
    throw InconsistencyError("C(h) characterizations disagree: root-fixing is " +
                             std::string(m.by_roots ? "true" : "false") + ", commuting with ad(X)_s is " +
                             std::string(m.by_semisimple ? "true" : "false"));
  }
  return m.by_roots;
}

std::vector<std::size_t> root_action(const GroupContext& g, const Mat& x, const Subspace& h) {
  Mat a = checked_adjoint(g, x);
  if (!h.contains(h.image(a))) throw InputError("element does not normalize h");
  if (!is_nilpotent_subalgebra(g.lie(), h)) throw InputError("h is not a nilpotent subalgebra");
  auto r = roots(g.lie(), h);
  if (!split_ok(r)) throw SplitError(std::get<SplitFailure>(std::move(r)));
  const auto& datum = std::get<RootDatum>(r);
  Mat a_on_h = restrict_to(a, h);
  std::vector<std::size_t> perm;
  for (const auto& root : datum.roots) {
    std::size_t j = datum.find(pull_back(root.values, a_on_h));
    if (j == datum.roots.size()) throw InconsistencyError("lambda o Ad(g) is not a root");
    perm.push_back(j);
  }
  auto sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InconsistencyError("root action is not a bijection");
  }
  return perm;
}

// ---------------------------------------------------------------------------
// Exact sequences

namespace {

void check_additive(const SequenceDims& d, const char* which) {
  if (d.total != d.kernel_part + d.quotient_part) {
    throw InconsistencyError(std::string(which) + " sequence is not additive: " + std::to_string(d.total) +
                             " != " + std::to_string(d.kernel_part) + " + " + std::to_string(d.quotient_part));
  }
}

}  // namespace

SequenceDims sequence_dims_ideal(const GroupContext& g, const Subspace& ideal, const Mat& x) {
  const LieAlgebra& l = g.lie();
  if (ideal.ambient_dim() != l.dim()) throw InputError("ideal does not live in the algebra's coordinates");
  if (!is_ideal(l, ideal)) throw InputError("subspace is not an ideal");
  Mat a = checked_adjoint(g, x);
  if (!ideal.contains(ideal.image(a))) throw InputError("ideal is not stable under Ad(g)");
  SequenceDims d;
  d.kernel_part = primary_component(restrict_to(a, ideal), Scalar(1)).dim();
  d.total = primary_component(a, Scalar(1)).dim();
  d.quotient_part = primary_component(induced_on_quotient(a, ideal), Scalar(1)).dim();
  check_additive(d, "ideal");
  return d;
}

SequenceDims sequence_dims_center(const GroupContext& g, const Mat& x) {
  const LieAlgebra& l = g.lie();
  Mat a = checked_adjoint(g, x);
  Subspace z = center(l);
  Subspace g1 = primary_component(a, Scalar(1));

  std::vector<Mat> ads;
  for (std::size_t i = 0; i < l.dim(); ++i) ads.push_back(l.ad(l.unit(i)));
  LieAlgebra image = LieAlgebra::from_matrices(l.dim(), ads);
  Mat a_inv = inverse(a);
  Mat conj(image.dim(), image.dim());
  for (std::size_t j = 0; j < image.dim(); ++j) {
    Vec c = image.coordinates(a * image.basis()[j] * a_inv);
    for (std::size_t i = 0; i < image.dim(); ++i) conj(i, j) = c[i];
  }

  SequenceDims d;
  d.kernel_part = z.intersect(g1).dim();
  d.total = g1.dim();
  d.quotient_part = primary_component(conj, Scalar(1)).dim();
  if (d.kernel_part != z.dim()) throw InconsistencyError("center is not inside g^1(Ad(g))");
  check_additive(d, "center");
  return d;
}

}  // namespace cartankit
