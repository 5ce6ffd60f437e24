#include "cartankit/liealg.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "cartankit/error.hpp"
#include "cartankit/rng.hpp"

namespace cartankit {

namespace {

Mat flat_rows(const std::vector<Mat>& mats, std::size_t ambient) {
  Mat b(mats.size(), ambient * ambient);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    const Vec& f = mats[i].flatten();
    for (std::size_t j = 0; j < f.size(); ++j) b(i, j) = f[j];
  }
  return b;
}

void check_square(const Mat& m, std::size_t ambient) {
  if (m.rows() != ambient || m.cols() != ambient) {
    throw InputError("basis matrix is not " + std::to_string(ambient) + "x" + std::to_string(ambient));
  }
}

constexpr std::uint64_t kCertificateSeed = 0x5eed'ce27;

}  // namespace

// ---------------------------------------------------------------------------
// LieAlgebra

void LieAlgebra::build(std::size_t ambient, std::vector<Mat> basis) {
  ambient_ = ambient;
  basis_ = std::move(basis);
  const std::size_t k = basis_.size();
  const std::size_t m = ambient * ambient;
  Mat flat = flat_rows(basis_, ambient);

  Mat aug(k, m + k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < m; ++j) aug(i, j) = flat(i, j);
    aug(i, m + i) = Scalar(1);
  }
  Echelon e = reduced_row_echelon(std::move(aug));
  if (e.pivots.size() < k || (k > 0 && e.pivots[k - 1] >= m)) {
    throw InputError("basis matrices are linearly dependent");
  }
  span_ = Subspace::row_space(flat);
  to_basis_ = Mat(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) to_basis_(i, j) = e.rref(i, m + j);
  }

  sc_.assign(k * k * k, Scalar());
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      Vec c;
      if (!try_coordinates(commutator(basis_[i], basis_[j]), c)) {
        throw InputError("basis is not closed under the bracket: [b" + std::to_string(i) + ", b" +
                         std::to_string(j) + "] leaves the span");
      }
      for (std::size_t l = 0; l < k; ++l) {
        sc_[(i * k + j) * k + l] = c[l];
        sc_[(j * k + i) * k + l] = -c[l];
      }
    }
  }
}

LieAlgebra LieAlgebra::from_basis(std::size_t ambient, std::vector<Mat> basis) {
  for (const auto& b : basis) check_square(b, ambient);
  LieAlgebra l;
  l.build(ambient, std::move(basis));
  return l;
}

LieAlgebra LieAlgebra::from_matrices(std::size_t ambient, const std::vector<Mat>& gens) {
  std::vector<Mat> basis;
  Subspace span(ambient * ambient);
  auto absorb = [&](const Mat& x) {
    if (span.contains(x.flatten())) return false;
    basis.push_back(x);
    span = span + Subspace::span(ambient * ambient, {x.flatten()});
    return true;
  };
  for (const auto& g : gens) {
    check_square(g, ambient);
    absorb(g);
  }
  // Dimension is bounded by ambient^2 and grows every productive round.
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t k = basis.size();
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) grew = absorb(commutator(basis[i], basis[j])) || grew;
    }
  }
  LieAlgebra l;
  l.build(ambient, std::move(basis));
  return l;
}

LieAlgebra LieAlgebra::from_subspace(std::size_t ambient, const Subspace& flat) {
  if (flat.ambient_dim() != ambient * ambient) throw InputError("subspace is not inside gl(ambient)");
  std::vector<Mat> basis;
  for (std::size_t i = 0; i < flat.dim(); ++i) basis.push_back(Mat::unflatten(flat.vector(i), ambient));
  return from_basis(ambient, std::move(basis));
}

bool LieAlgebra::try_coordinates(const Mat& x, Vec& out) const {
  check_square(x, ambient_);
  Vec echelon_coords;
  if (!span_.coordinates(x.flatten(), echelon_coords)) return false;
  out = to_basis_.transpose().apply(echelon_coords);
  return true;
}

Vec LieAlgebra::coordinates(const Mat& x) const {
  Vec c;
  if (!try_coordinates(x, c)) throw InputError("matrix lies outside the Lie algebra");
  return c;
}

Mat LieAlgebra::element(const Vec& coords) const {
  if (coords.size() != dim()) throw InputError("coordinate vector has wrong length");
  Mat x(ambient_, ambient_);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!coords[i].is_zero()) x += coords[i] * basis_[i];
  }
  return x;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  const std::size_t k = dim();
  if (x.size() != k || y.size() != k) throw InputError("coordinate vector has wrong length");
  Vec out(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (y[j].is_zero() || i == j) continue;
      Scalar f = x[i] * y[j];
      for (std::size_t l = 0; l < k; ++l) {
        const Scalar& c = sc(i, j, l);
        if (!c.is_zero()) out[l] += f * c;
      }
    }
  }
  return out;
}

Mat LieAlgebra::ad(const Vec& x) const {
  const std::size_t k = dim();
  Mat m(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    Vec col = bracket(x, unit(j));
    for (std::size_t i = 0; i < k; ++i) m(i, j) = col[i];
  }
  return m;
}

Vec LieAlgebra::unit(std::size_t i) const {
  Vec v(dim());
  v.at(i) = Scalar(1);
  return v;
}

// ---------------------------------------------------------------------------
// Series and predicates

Subspace bracket_span(const LieAlgebra& l, const Subspace& u, const Subspace& w) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    Vec x = u.vector(i);
    for (std::size_t j = 0; j < w.dim(); ++j) {
      Vec b = l.bracket(x, w.vector(j));
      if (!is_zero(b)) out.push_back(std::move(b));
    }
  }
  return Subspace::span(l.dim(), out);
}

namespace {

template <class Step>
std::vector<Subspace> iterate_series(Subspace first, Step step) {
  std::vector<Subspace> series{std::move(first)};
  for (;;) {
    Subspace next = step(series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

}  // namespace

std::vector<Subspace> lower_central_series(const LieAlgebra& l, const Subspace& h) {
  return iterate_series(h, [&](const Subspace& c) { return bracket_span(l, h, c); });
}

std::vector<Subspace> lower_central_series(const LieAlgebra& l) {
  return lower_central_series(l, Subspace::whole(l.dim()));
}

std::vector<Subspace> derived_series(const LieAlgebra& l) {
  return iterate_series(Subspace::whole(l.dim()), [&](const Subspace& d) { return bracket_span(l, d, d); });
}

bool is_nilpotent(const LieAlgebra& l) { return lower_central_series(l).back().dim() == 0; }

bool is_solvable(const LieAlgebra& l) { return derived_series(l).back().dim() == 0; }

bool is_subalgebra(const LieAlgebra& l, const Subspace& h) { return h.contains(bracket_span(l, h, h)); }

bool is_nilpotent_subalgebra(const LieAlgebra& l, const Subspace& h) {
  return is_subalgebra(l, h) && lower_central_series(l, h).back().dim() == 0;
}

bool is_ideal(const LieAlgebra& l, const Subspace& h) {
  return h.contains(bracket_span(l, Subspace::whole(l.dim()), h));
}

Subspace normalizer(const LieAlgebra& l, const Subspace& h) {
  if (h.ambient_dim() != l.dim()) throw InputError("subspace does not live in the algebra's coordinates");
  Subspace ann = h.annihilator();
  std::vector<Vec> conditions;
  for (std::size_t j = 0; j < h.dim(); ++j) {
    // [X, h_j] = -ad(h_j) X must lie in h.
    Mat cond = ann.basis() * l.ad(h.vector(j));
    for (std::size_t r = 0; r < cond.rows(); ++r) conditions.push_back(cond.row_vec(r));
  }
  if (conditions.empty()) return Subspace::whole(l.dim());
  return kernel(Mat::from_rows(conditions));
}

Subspace centralizer(const LieAlgebra& l, const Subspace& h) {
  if (h.ambient_dim() != l.dim()) throw InputError("subspace does not live in the algebra's coordinates");
  std::vector<Vec> conditions;
  for (std::size_t j = 0; j < h.dim(); ++j) {
    Mat a = l.ad(h.vector(j));
    for (std::size_t r = 0; r < a.rows(); ++r) conditions.push_back(a.row_vec(r));
  }
  if (conditions.empty()) return Subspace::whole(l.dim());
  return kernel(Mat::from_rows(conditions));
}

Subspace center(const LieAlgebra& l) { return centralizer(l, Subspace::whole(l.dim())); }

// ---------------------------------------------------------------------------
// Cartan subalgebras

namespace {

Vec random_combination(const Subspace& h, Rng& rng, long box) {
  Vec z(h.ambient_dim());
  for (std::size_t i = 0; i < h.dim(); ++i) {
    long c = rng.uniform(-box, box);
    if (c != 0) z = axpy(z, Scalar(c), h.vector(i));
  }
  return z;
}

bool nilpotent_on(const Mat& ad, const Subspace& v) {
  Mat r = restrict_to(ad, v);
  return power(r, static_cast<unsigned>(r.rows())).is_zero();
}

Subspace joint_null_component(const LieAlgebra& l, const Subspace& h) {
  Subspace out = Subspace::whole(l.dim());
  for (std::size_t i = 0; i < h.dim(); ++i) out = out.intersect(primary_component(l.ad(h.vector(i)), Scalar()));
  return out;
}

}  // namespace

Subspace g0_of(const LieAlgebra& l, const Subspace& h) {
  if (h.ambient_dim() != l.dim()) throw InputError("subspace does not live in the algebra's coordinates");
  if (!is_subalgebra(l, h)) throw InputError("g0: h is not closed under the bracket");
  if (!is_nilpotent_subalgebra(l, h)) throw InputError("g0: h is not nilpotent");
  Subspace g0 = joint_null_component(l, h);
  if (!g0.contains(h)) throw InconsistencyError("g0 does not contain h");
  Rng rng(kCertificateSeed);
  std::vector<Vec> probes = h.vectors();
  if (h.dim() > 1) probes.push_back(random_combination(h, rng, 5));
  for (const auto& z : probes) {
    if (!nilpotent_on(l.ad(z), g0)) throw InconsistencyError("ad(h) is not nilpotent on the computed g0");
  }
  return g0;
}

bool is_cartan(const LieAlgebra& l, const Subspace& h) {
  if (h.ambient_dim() != l.dim()) return false;
  if (!is_nilpotent_subalgebra(l, h)) return false;
  return g0_of(l, h) == h;
}

namespace {

bool splits(const Mat& m) {
  try {
    return split_ok(gaussian_roots(char_poly(m)));
  } catch (const SearchLimitError&) {
    return false;
  }
}

struct Candidate {
  bool split;
  Subspace g0;
};

}  // namespace

Subspace cartan_subalgebra(const LieAlgebra& l, std::uint64_t seed) {
  const std::size_t k = l.dim();
  if (k == 0) return Subspace(0);
  if (is_nilpotent(l)) return Subspace::whole(k);
  constexpr int kCandidatesPerRound = 12;
  Rng rng(seed);
  Subspace best = Subspace::whole(k);
  long box = 1;
  for (int round = 0; round <= kCartanEscalations; ++round, box *= 2) {
    std::vector<Candidate> cands;
    for (int c = 0; c < kCandidatesPerRound; ++c) {
      Vec x(k);
      for (auto& xi : x) xi = Scalar(rng.uniform(-box, box));
      if (is_zero(x)) continue;
      Mat adx = l.ad(x);
      cands.push_back({splits(adx), primary_component(adx, Scalar())});
    }
    std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
      if (a.split != b.split) return a.split;
      return a.g0.dim() < b.g0.dim();
    });
    for (const auto& c : cands) {
      if (c.g0.dim() < best.dim()) best = c.g0;
      if (is_cartan(l, c.g0)) return c.g0;
    }
  }
  throw InputError("no certified Cartan subalgebra after " + std::to_string(kCartanEscalations) +
                   " escalations; best candidate has dimension " + std::to_string(best.dim()));
}

std::size_t rank(const LieAlgebra& l, std::uint64_t seed) { return cartan_subalgebra(l, seed).dim(); }

// ---------------------------------------------------------------------------
// Roots

std::size_t RootDatum::find(const Vec& values) const {
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (roots[i].values == values) return i;
  }
  return roots.size();
}

SplitResult<RootDatum> roots(const LieAlgebra& l, const Subspace& h) {
  Subspace g0 = g0_of(l, h);
  RootDatum datum;
  datum.h_basis = h.vectors();
  if (h.dim() == 0) {
    datum.roots.push_back({{}, Subspace::whole(l.dim())});
    return datum;
  }
  std::vector<Mat> maps;
  for (const auto& z : datum.h_basis) maps.push_back(l.ad(z));
  auto blocks = simultaneous_primary_decomposition(maps);
  if (!split_ok(blocks)) {
    auto failure = std::get<SplitFailure>(std::move(blocks));
    failure.context = "ad of h-basis element " + failure.context.substr(failure.context.find(' ') + 1);
    return failure;
  }
  std::size_t total = 0;
  bool saw_zero = false;
  for (auto& b : std::get<std::vector<PrimaryBlock>>(blocks)) {
    total += b.space.dim();
    bool zero = std::all_of(b.labels.begin(), b.labels.end(), [](const Scalar& s) { return s.is_zero(); });
    if (zero) {
      saw_zero = true;
      if (!(b.space == g0)) throw InconsistencyError("zero root space differs from g0(h)");
    }
    datum.roots.push_back({std::move(b.labels), std::move(b.space)});
  }
  if (!saw_zero || total != l.dim()) throw InconsistencyError("root spaces do not decompose the algebra");
  return datum;
}

// ---------------------------------------------------------------------------
// Algebraic hull of a single matrix

SplitResult<Subspace> algebraic_hull_single(std::size_t ambient, const Mat& x) {
  if (x.rows() != ambient || x.cols() != ambient) throw InputError("hull: matrix has the wrong size");
  auto jc = jordan_chevalley(x);
  if (!split_ok(jc)) return std::get<SplitFailure>(std::move(jc));
  const auto& [s, n] = std::get<JordanChevalley>(jc);
  auto eig = gaussian_roots(char_poly(s));
  if (!split_ok(eig)) {
    auto failure = std::get<SplitFailure>(std::move(eig));
    failure.context = "characteristic polynomial of the hull generator";
    return failure;
  }
  const auto& rts = std::get<std::vector<Root>>(eig);
  const std::size_t m = rts.size();

  // Spectral projections of S, each a polynomial in S.
  std::vector<Mat> proj;
  const Mat id = Mat::identity(ambient);
  for (std::size_t a = 0; a < m; ++a) {
    Mat p = id;
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) continue;
      p = p * ((Scalar(1) / (rts[a].value - rts[b].value)) * (s - rts[b].value * id));
    }
    proj.push_back(std::move(p));
  }

  // Q-linear relations among the eigenvalues, real and imaginary parts apart.
  Mat parts(2, m);
  for (std::size_t a = 0; a < m; ++a) {
    parts(0, a) = Scalar(rts[a].value.re());
    parts(1, a) = Scalar(rts[a].value.im());
  }
  Subspace relations = kernel(parts);
  Subspace values = relations.dim() == 0 ? Subspace::whole(m) : kernel(relations.basis());

  std::vector<Vec> gens;
  for (std::size_t i = 0; i < values.dim(); ++i) {
    Vec y = values.vector(i);
    Mat elem(ambient, ambient);
    for (std::size_t a = 0; a < m; ++a) {
      if (!y[a].is_zero()) elem += y[a] * proj[a];
    }
    gens.push_back(elem.flatten());
  }
  if (!n.is_zero()) gens.push_back(n.flatten());
  return Subspace::span(ambient * ambient, gens);
}

}  // namespace cartankit
