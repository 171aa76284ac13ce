#pragma once

// Exact coefficient ring: Laurent polynomials in the unimodular phase
// t = exp(i*pi*theta) with Gaussian-rational coefficients.

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nct {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string rational_to_string(const Rational& r);

bool is_integer(const Rational& r);

/// True when 2r is an integer.
bool is_half_integer(const Rational& r);

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im = 0);

  static GaussianRational imaginary_unit() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// e.g. "3", "-1/2i", "(1+2i)".
  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Finite sum  sum_k c_k t^k  with t = exp(i*pi*theta). Canonical form keeps
/// no zero coefficients, so structural equality is ring equality.
class PhaseScalar {
 public:
  using Terms = std::map<std::int64_t, GaussianRational>;

  PhaseScalar() = default;
  PhaseScalar(long v) : PhaseScalar(GaussianRational(v)) {}  // NOLINT(google-explicit-constructor)
  PhaseScalar(const GaussianRational& c);                    // NOLINT(google-explicit-constructor)

  /// c * t^k
  static PhaseScalar monomial(std::int64_t k, GaussianRational c = 1);
  static PhaseScalar t_power(std::int64_t k) { return monomial(k); }
  static PhaseScalar from_terms(const Terms& terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  /// Coefficient of t^k (zero when absent).
  GaussianRational coefficient(std::int64_t k) const;

  /// The value as a rational, when it is a real constant.
  std::optional<Rational> as_rational() const;

  PhaseScalar& operator+=(const PhaseScalar& o);
  PhaseScalar& operator-=(const PhaseScalar& o);
  PhaseScalar& operator*=(const PhaseScalar& o);

  friend PhaseScalar operator+(PhaseScalar a, const PhaseScalar& b) { return a += b; }
  friend PhaseScalar operator-(PhaseScalar a, const PhaseScalar& b) { return a -= b; }
  friend PhaseScalar operator*(const PhaseScalar& a, const PhaseScalar& b);
  PhaseScalar operator-() const;

  friend bool operator==(const PhaseScalar& a, const PhaseScalar& b) { return a.terms_ == b.terms_; }

  /// Multiplies by t^k (exponent shift).
  PhaseScalar shifted(std::int64_t k) const;

  /// t -> t^{-1}, i -> -i.
  PhaseScalar conj() const;

  /// sum_k c_k exp(i*pi*theta*k)
  std::complex<double> evaluate(double theta) const;

  std::string to_string() const;

 private:
  void add_term(std::int64_t k, const GaussianRational& c);

  Terms terms_;
};

}  // namespace nct
