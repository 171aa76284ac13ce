#include "nctorus/nc_element.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace nct {

NcElement::NcElement(const PhaseScalar& scalar) {
  if (!scalar.is_zero()) terms_.emplace(Monomial{0, 0}, scalar);
}

NcElement NcElement::monomial(std::int64_t m, std::int64_t n, const PhaseScalar& coeff, Convention conv) {
  NcElement x(conv);
  x.add_term({m, n}, coeff);
  return x;
}

PhaseScalar NcElement::coefficient(std::int64_t m, std::int64_t n) const {
  auto it = terms_.find({m, n});
  return it == terms_.end() ? PhaseScalar{} : it->second;
}

bool NcElement::is_unit_monomial() const { return terms_.size() == 1 && terms_.begin()->second.is_one(); }

void NcElement::add_term(Monomial mono, const PhaseScalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void NcElement::require_same_convention(const NcElement& o) const {
  if (!(conv_ == o.conv_)) {
    throw ContextMismatch("elements use incompatible conventions (commutation exponents " +
                          std::to_string(conv_.commutation_exponent) + " and " +
                          std::to_string(o.conv_.commutation_exponent) + ")");
  }
}

NcElement& NcElement::operator+=(const NcElement& o) {
  require_same_convention(o);
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  return *this;
}

NcElement& NcElement::operator-=(const NcElement& o) {
  require_same_convention(o);
  for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
  return *this;
}

NcElement operator*(const NcElement& a, const NcElement& b) {
  a.require_same_convention(b);
  const std::int64_t c = a.conv_.commutation_exponent;
  NcElement out(a.conv_);
  // (U^m V^n)(U^p V^q) = t^{c n p} U^{m+p} V^{n+q}
  for (const auto& [x, cx] : a.terms_) {
    for (const auto& [y, cy] : b.terms_) {
      out.add_term({x.m + y.m, x.n + y.n}, (cx * cy).shifted(c * x.n * y.m));
    }
  }
  return out;
}

NcElement& NcElement::operator*=(const NcElement& o) {
  *this = *this * o;
  return *this;
}

NcElement NcElement::operator-() const {
  NcElement out(conv_);
  for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, -c);
  return out;
}

NcElement NcElement::scaled(const PhaseScalar& s) const {
  NcElement out(conv_);
  for (const auto& [mono, c] : terms_) out.add_term(mono, c * s);
  return out;
}

NcElement NcElement::adjoint() const {
  const std::int64_t c = conv_.commutation_exponent;
  NcElement out(conv_);
  for (const auto& [mono, coeff] : terms_) {
    out.add_term({-mono.m, -mono.n}, coeff.conj().shifted(c * mono.m * mono.n));
  }
  return out;
}

NcElement NcElement::flip() const {
  NcElement out(conv_);
  for (const auto& [mono, coeff] : terms_) out.terms_.emplace(Monomial{-mono.m, -mono.n}, coeff);
  return out;
}

std::int64_t NcElement::support_radius() const {
  std::int64_t r = 0;
  for (const auto& [mono, c] : terms_) r = std::max({r, std::abs(mono.m), std::abs(mono.n)});
  return r;
}

std::string NcElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    const bool bare = mono.m == 0 && mono.n == 0;
    if (bare || !c.is_one()) os << (c.terms().size() > 1 ? "(" + c.to_string() + ")" : c.to_string());
    if (bare) continue;
    if (!c.is_one()) os << " * ";
    if (mono.m != 0) os << "U^" << mono.m;
    if (mono.m != 0 && mono.n != 0) os << " ";
    if (mono.n != 0) os << "V^" << mono.n;
  }
  return os.str();
}

NcElement nc_power(const NcElement& x, std::int64_t p) {
  if (!x.is_unit_monomial()) {
    throw std::invalid_argument("nc_power expects a single monomial U^k V^l with unit coefficient");
  }
  const auto [k, l] = x.terms().begin()->first;
  const std::int64_t c = x.convention().commutation_exponent;
  // p (p - 1) is always even.
  const std::int64_t phase = c * k * l * (p * (p - 1) / 2);
  return NcElement::monomial(k * p, l * p, PhaseScalar::t_power(phase), x.convention());
}

NcElement repeated_power(const NcElement& x, std::int64_t p) {
  const NcElement base = p < 0 ? x.adjoint() : x;
  NcElement out = NcElement::monomial(0, 0, 1, x.convention());
  for (std::int64_t i = 0; i < std::abs(p); ++i) out = out * base;
  return out;
}

}  // namespace nct
