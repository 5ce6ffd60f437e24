#include "cartankit/field.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "cartankit/error.hpp"

namespace cartankit {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class d(std::string(den), 10);
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational q(mpz_class(std::string(num), 10), d);
  q.canonicalize();
  if (text.front() == '-') q = -q;
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Scalar Scalar::parse(std::string_view re, std::string_view im) {
  return {parse_rational(re), parse_rational(im)};
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero in Q(i)");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  Rational n = o.norm();
  Rational re = (re_ * o.re_ + im_ * o.im_) / n;
  Rational im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string Scalar::to_string() const {
  if (sgn(im_) == 0) return cartankit::to_string(re_);
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = cartankit::to_string(im_) + "i";
  }
  if (sgn(re_) == 0) return imag;
  return cartankit::to_string(re_) + (sgn(im_) > 0 ? "+" : "") + imag;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn;
  mpz_class rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

}  // namespace

bool gaussian_sqrt(const Scalar& z, Scalar& out) {
  if (z.is_zero()) {
    out = Scalar();
    return true;
  }
  auto modulus = rational_sqrt(z.norm());
  if (!modulus) return false;
  Rational half(1, 2);
  auto x = rational_sqrt(Rational((z.re() + *modulus) * half));
  auto y = rational_sqrt(Rational((*modulus - z.re()) * half));
  if (!x || !y) return false;
  Scalar w(*x, sgn(z.im()) < 0 ? Rational(-*y) : *y);
  if (w * w != z) return false;
  out = w;
  return true;
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(Scalar c, std::size_t degree) {
  std::vector<Scalar> v(degree + 1);
  v[degree] = std::move(c);
  return Poly(std::move(v));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Scalar> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Scalar(k);
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Scalar inv = Scalar(1) / leading();
  return inv * *this;
}

Poly Poly::shifted(const Scalar& a) const {
  // Horner in the ring Q(i)[t]: p(t + a) = (...(c_n (t+a) + c_{n-1})(t+a) ...)
  Poly step({a, Scalar(1)});
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * step + Poly::constant(*it);
  return acc;
}

Scalar Poly::operator()(const Scalar& x) const {
  Scalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) + b.coeff(k);
  return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) - b.coeff(k);
  return Poly(std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(r));
}

Poly operator*(const Scalar& s, const Poly& p) {
  std::vector<Scalar> r = p.c_;
  for (auto& c : r) c *= s;
  return Poly(std::move(r));
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Scalar& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    bool bare = k > 0 && c.is_one();
    if (!bare) os << (c.is_real() ? c.to_string() : "(" + c.to_string() + ")");
    if (k > 0) os << (bare ? "" : "*") << "t" << (k > 1 ? "^" + std::to_string(k) : "");
  }
  return os.str();
}

PolyDivision divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Scalar> rem = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<Scalar> quo(static_cast<std::size_t>(a.degree() - db + 1));
  Scalar lead_inv = Scalar(1) / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    Scalar f = rem[static_cast<std::size_t>(k)] * lead_inv;
    if (f.is_zero()) continue;
    quo[static_cast<std::size_t>(k - db)] = f;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw InputError("squarefree part of the zero polynomial");
  if (p.degree() == 0) return Poly::constant(Scalar(1));
  Poly g = gcd(p, p.derivative());
  return divmod(p, g).quotient.monic();
}

// ---------------------------------------------------------------------------
// Root extraction over Q(i).
//
// After stripping the root 0 and passing to the squarefree part, degree <= 2
// is solved in closed form. Higher degrees use the rational root theorem in
// the UFD Z[i]: clear denominators, then every root u/v has u | a_0 and
// v | a_n. Divisors come from factoring the norms over Z.

namespace {

struct GaussInt {
  mpz_class re;
  mpz_class im;
};

GaussInt gmul(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

mpz_class gnorm(const GaussInt& a) { return a.re * a.re + a.im * a.im; }

/// a / b when exact.
std::optional<GaussInt> gdiv_exact(const GaussInt& a, const GaussInt& b) {
  mpz_class n = gnorm(b);
  mpz_class re = a.re * b.re + a.im * b.im;
  mpz_class im = a.im * b.re - a.re * b.im;
  if (!mpz_divisible_p(re.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(im.get_mpz_t(), n.get_mpz_t())) {
    return std::nullopt;
  }
  return GaussInt{re / n, im / n};
}

constexpr unsigned long kTrialBound = 2'000'000;

/// Prime factorization of n > 0 over Z.
std::vector<std::pair<mpz_class, unsigned>> factor_integer(mpz_class n) {
  std::vector<std::pair<mpz_class, unsigned>> out;
  auto pull = [&](const mpz_class& p) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  pull(mpz_class(2));
  for (unsigned long p = 3; p <= kTrialBound; p += 2) {
    mpz_class pp(p);
    if (pp * pp > n) break;
    pull(pp);
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) {
      throw SearchLimitError("cannot factor " + n.get_str() + " within the trial-division bound");
    }
    out.emplace_back(n, 1);
  }
  return out;
}

/// x with x^2 + y^2 = p for a prime p = 1 mod 4 (Hermite-Serret descent).
GaussInt sum_of_two_squares(const mpz_class& p) {
  mpz_class e = (p - 1) / 4;
  mpz_class t;
  for (unsigned long c = 2;; ++c) {
    mpz_class base(c);
    mpz_powm(t.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    if ((t * t + 1) % p == 0) break;
  }
  mpz_class a = p;
  mpz_class b = t;
  while (b * b > p) {
    mpz_class r = a % b;
    a = b;
    b = r;
  }
  mpz_class rest = p - b * b;
  mpz_class y;
  mpz_sqrt(y.get_mpz_t(), rest.get_mpz_t());
  return {b, y};
}

/// Gaussian primes (up to associates) dividing a, with exponents.
std::vector<std::pair<GaussInt, unsigned>> factor_gaussian(GaussInt a) {
  std::vector<std::pair<GaussInt, unsigned>> out;
  std::vector<GaussInt> primes;
  for (const auto& [p, e] : factor_integer(gnorm(a))) {
    (void)e;
    if (p == 2) {
      primes.push_back({1, 1});
    } else if (p % 4 == 3) {
      primes.push_back({p, 0});
    } else {
      GaussInt pi = sum_of_two_squares(p);
      primes.push_back(pi);
      primes.push_back({pi.re, -pi.im});
    }
  }
  for (const auto& pi : primes) {
    unsigned e = 0;
    while (auto q = gdiv_exact(a, pi)) {
      a = *q;
      ++e;
    }
    if (e > 0) out.emplace_back(pi, e);
  }
  return out;
}

std::vector<GaussInt> divisors(const GaussInt& a) {
  std::vector<GaussInt> out{{1, 0}};
  for (const auto& [pi, e] : factor_gaussian(a)) {
    std::vector<GaussInt> next;
    for (const auto& d : out) {
      GaussInt acc = d;
      next.push_back(acc);
      for (unsigned k = 0; k < e; ++k) {
        acc = gmul(acc, pi);
        next.push_back(acc);
      }
    }
    out = std::move(next);
  }
  return out;
}

/// Roots in Q(i) of a squarefree polynomial with nonzero constant term, found
/// by candidate enumeration. Returns what it finds; the caller checks degrees.
std::vector<Scalar> candidate_roots(const Poly& p) {
  mpz_class lcm_den(1);
  for (const auto& c : p.coeffs()) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.re().get_den_mpz_t());
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.im().get_den_mpz_t());
  }
  auto to_gauss = [&](const Scalar& c) {
    Rational re = c.re() * lcm_den;
    Rational im = c.im() * lcm_den;
    return GaussInt{re.get_num(), im.get_num()};
  };
  GaussInt a0 = to_gauss(p.coeffs().front());
  GaussInt an = to_gauss(p.leading());
  const std::vector<GaussInt> units{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

  std::vector<Scalar> found;
  auto seen = [&](const Scalar& s) { return std::find(found.begin(), found.end(), s) != found.end(); };
  auto num_divs = divisors(a0);
  auto den_divs = divisors(an);
  for (const auto& u0 : num_divs) {
    for (const auto& unit : units) {
      GaussInt u = gmul(u0, unit);
      Scalar su(Rational(u.re), Rational(u.im));
      for (const auto& v : den_divs) {
        Scalar cand = su / Scalar(Rational(v.re), Rational(v.im));
        if (seen(cand)) continue;
        if (p(cand).is_zero()) {
          found.push_back(cand);
          if (static_cast<int>(found.size()) == p.degree()) return found;
        }
      }
    }
  }
  return found;
}

}  // namespace

SplitResult<std::vector<Root>> gaussian_roots(const Poly& p) {
  if (p.is_zero()) throw InputError("roots of the zero polynomial");
  std::vector<Scalar> distinct;
  Poly rest = squarefree_part(p);
  if (rest.coeff(0).is_zero()) {
    distinct.emplace_back();
    rest = divmod(rest, Poly::linear(Scalar())).quotient;
  }
  if (rest.degree() > 2) {
    for (auto& r : candidate_roots(rest)) {
      rest = divmod(rest, Poly::linear(r)).quotient;
      distinct.push_back(std::move(r));
    }
  }
  if (rest.degree() == 2) {
    Poly m = rest.monic();
    const Scalar& b = m.coeffs()[1];
    const Scalar& c = m.coeffs()[0];
    Scalar disc = b * b - Scalar(4) * c;
    Scalar root;
    if (!gaussian_sqrt(disc, root)) return SplitFailure{m, {}};
    Scalar half(Rational(1, 2));
    distinct.push_back((-b + root) * half);
    distinct.push_back((-b - root) * half);
    rest = Poly::constant(Scalar(1));
  } else if (rest.degree() == 1) {
    Poly m = rest.monic();
    distinct.push_back(-m.coeffs()[0]);
    rest = Poly::constant(Scalar(1));
  }
  if (rest.degree() > 0) return SplitFailure{rest.monic(), {}};

  std::vector<Root> roots;
  for (auto& r : distinct) {
    int mult = 0;
    Poly q = p;
    Poly lin = Poly::linear(r);
    for (;;) {
      auto [quo, rem] = divmod(q, lin);
      if (!rem.is_zero()) break;
      q = std::move(quo);
      ++mult;
    }
    roots.push_back({std::move(r), mult});
  }
  std::sort(roots.begin(), roots.end(),
            [](const Root& a, const Root& b) { return canonical_less(a.value, b.value); });
  return roots;
}

}  // namespace cartankit
