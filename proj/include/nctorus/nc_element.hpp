#pragma once

// Finite Laurent polynomials sum a_{mn} U^m V^n over the phase ring, with the
// Heisenberg relation V U = t^2 U V  (t^2 = e(theta)).

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "nctorus/phase_ring.hpp"

namespace nct {

struct Monomial {
  std::int64_t m = 0;  // exponent of U
  std::int64_t n = 0;  // exponent of V
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Convention record shared by all elements that may be combined.
/// `commutation_exponent` is c in V U = t^c U V. The standard convention
/// t = exp(i*pi*theta) has c = 2; everything outside nc_algebra requires it.
struct Convention {
  int commutation_exponent = 2;
  friend bool operator==(const Convention&, const Convention&) = default;
};

class ContextMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NcElement {
 public:
  using Terms = std::map<Monomial, PhaseScalar>;

  NcElement() = default;
  explicit NcElement(Convention conv) : conv_(conv) {}
  NcElement(const PhaseScalar& scalar);  // NOLINT(google-explicit-constructor)
  NcElement(long v) : NcElement(PhaseScalar(v)) {}  // NOLINT(google-explicit-constructor)

  static NcElement monomial(std::int64_t m, std::int64_t n, const PhaseScalar& coeff = 1,
                            Convention conv = {});
  static NcElement U(std::int64_t power = 1) { return monomial(power, 0); }
  static NcElement V(std::int64_t power = 1) { return monomial(0, power); }

  const Terms& terms() const { return terms_; }
  const Convention& convention() const { return conv_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  PhaseScalar coefficient(std::int64_t m, std::int64_t n) const;

  /// Single term with coefficient exactly 1.
  bool is_unit_monomial() const;

  void add_term(Monomial mono, const PhaseScalar& coeff);

  NcElement& operator+=(const NcElement& o);
  NcElement& operator-=(const NcElement& o);
  NcElement& operator*=(const NcElement& o);
  friend NcElement operator+(NcElement a, const NcElement& b) { return a += b; }
  friend NcElement operator-(NcElement a, const NcElement& b) { return a -= b; }
  friend NcElement operator*(const NcElement& a, const NcElement& b);
  NcElement operator-() const;

  /// Scales every coefficient.
  NcElement scaled(const PhaseScalar& s) const;

  friend bool operator==(const NcElement& a, const NcElement& b) {
    return a.conv_ == b.conv_ && a.terms_ == b.terms_;
  }

  /// (a U^m V^n)^* = conj(a) t^{c m n} U^{-m} V^{-n}
  NcElement adjoint() const;

  /// Phi(U^m V^n) = U^{-m} V^{-n}
  NcElement flip() const;
  bool is_flip_invariant() const { return flip() == *this; }

  /// max(|m|, |n|) over the support; 0 for the zero element.
  std::int64_t support_radius() const;

  std::string to_string() const;

 private:
  void require_same_convention(const NcElement& o) const;

  Terms terms_;
  Convention conv_;
};

/// (U^k V^l)^p = t^{c k l p (p-1) / 2} U^{kp} V^{lp}; p may be negative.
/// Throws std::invalid_argument unless x is a single monomial with unit coefficient.
NcElement nc_power(const NcElement& x, std::int64_t p);

/// x^p by repeated multiplication (p >= 0) or of the adjoint (p < 0, x unitary).
NcElement repeated_power(const NcElement& x, std::int64_t p);

}  // namespace nct
