#pragma once

// Exact arithmetic in Q(i) and univariate polynomials over it.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cartankit {

using Rational = mpq_class;

/// Parse the RAT grammar: '-'? digits ('/' digits)?. Throws InputError.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Gaussian rational re + im*i. Both parts are kept in lowest terms with a
/// positive denominator, so equality is structural.
class Scalar {
 public:
  Scalar() = default;
  template <std::integral I>
  Scalar(I value) : re_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }
  static Scalar parse(std::string_view re, std::string_view im = "0");

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Scalar conj() const { return {re_, -im_}; }
  /// re^2 + im^2
  Rational norm() const { return re_ * re_ + im_ * im_; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws std::domain_error on division by zero.
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Canonical total order (real part, then imaginary part). Used only to
  /// make outputs deterministic; it carries no field meaning.
  friend bool canonical_less(const Scalar& a, const Scalar& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

  /// Human-readable form such as "1/2", "-3i", "1/4+2i".
  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Exact square root in Q(i) when one exists.
bool gaussian_sqrt(const Scalar& z, Scalar& out);

/// Univariate polynomial, coefficients lowest degree first, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> coeffs);

  static Poly constant(Scalar c) { return Poly({std::move(c)}); }
  static Poly monomial(Scalar c, std::size_t degree);
  /// t - r
  static Poly linear(const Scalar& r) { return Poly({-r, Scalar(1)}); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(); }
  const Scalar& leading() const { return c_.back(); }

  Poly derivative() const;
  Poly monic() const;
  /// p(t + a)
  Poly shifted(const Scalar& a) const;
  Scalar operator()(const Scalar& x) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Scalar& s, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};
/// Throws std::domain_error when the divisor is zero.
PolyDivision divmod(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
/// p / gcd(p, p'), made monic. Throws InputError on the zero polynomial.
Poly squarefree_part(const Poly& p);

/// The polynomial does not split into linear factors over Q(i).
struct SplitFailure {
  Poly factor;          // a factor without roots in Q(i)
  std::string context;  // which input produced it
};

struct Root {
  Scalar value;
  int multiplicity = 0;
};

template <class T>
using SplitResult = std::variant<T, SplitFailure>;

template <class T>
bool split_ok(const SplitResult<T>& r) {
  return std::holds_alternative<T>(r);
}

/// A SplitFailure raised past an API boundary that has no value channel.
class SplitError : public std::runtime_error {
 public:
  explicit SplitError(SplitFailure f)
      : std::runtime_error("does not split over Q(i): " + f.factor.to_string() +
                           (f.context.empty() ? "" : " (" + f.context + ")")),
        failure_(std::move(f)) {}
  const SplitFailure& failure() const { return failure_; }

 private:
  SplitFailure failure_;
};

/// All roots of p in Q(i) with multiplicities (summing to deg p), sorted in
/// canonical order, or the first factor that has no root in Q(i).
SplitResult<std::vector<Root>> gaussian_roots(const Poly& p);

}  // namespace cartankit
