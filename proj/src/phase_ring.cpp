#include "nctorus/phase_ring.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace nct {

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) { return r.get_str(10); }

bool is_integer(const Rational& r) { return r.get_den() == 1; }

bool is_half_integer(const Rational& r) {
  Rational twice = r * 2;
  return is_integer(twice);
}

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussianRational::to_string() const {
  if (is_real()) return rational_to_string(re_);
  if (sgn(re_) == 0) return rational_to_string(im_) + "i";
  std::string out = "(" + rational_to_string(re_);
  out += sgn(im_) > 0 ? "+" : "";
  return out + rational_to_string(im_) + "i)";
}

PhaseScalar::PhaseScalar(const GaussianRational& c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

PhaseScalar PhaseScalar::monomial(std::int64_t k, GaussianRational c) {
  PhaseScalar s;
  if (!c.is_zero()) s.terms_.emplace(k, std::move(c));
  return s;
}

PhaseScalar PhaseScalar::from_terms(const Terms& terms) {
  PhaseScalar s;
  for (const auto& [k, c] : terms) s.add_term(k, c);
  return s;
}

bool PhaseScalar::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == GaussianRational(1);
}

GaussianRational PhaseScalar::coefficient(std::int64_t k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? GaussianRational{} : it->second;
}

std::optional<Rational> PhaseScalar::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() != 1) return std::nullopt;
  const auto& [k, c] = *terms_.begin();
  if (k != 0 || !c.is_real()) return std::nullopt;
  return c.re();
}

void PhaseScalar::add_term(std::int64_t k, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PhaseScalar& PhaseScalar::operator+=(const PhaseScalar& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

PhaseScalar& PhaseScalar::operator-=(const PhaseScalar& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

PhaseScalar operator*(const PhaseScalar& a, const PhaseScalar& b) {
  PhaseScalar out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
  }
  return out;
}

PhaseScalar& PhaseScalar::operator*=(const PhaseScalar& o) {
  *this = *this * o;
  return *this;
}

PhaseScalar PhaseScalar::operator-() const {
  PhaseScalar out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

PhaseScalar PhaseScalar::shifted(std::int64_t k) const {
  PhaseScalar out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

PhaseScalar PhaseScalar::conj() const {
  PhaseScalar out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(-k, c.conj());
  return out;
}

std::complex<double> PhaseScalar::evaluate(double theta) const {
  std::complex<double> sum{0.0, 0.0};
  for (const auto& [k, c] : terms_) {
    // Reduce theta*k mod 2 before scaling by pi to keep large exponents accurate.
    const double turns = std::fmod(theta * static_cast<double>(k), 2.0);
    sum += c.to_complex() * std::polar(1.0, std::numbers::pi * turns);
  }
  return sum;
}

std::string PhaseScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << c.to_string();
    } else {
      if (!(c == GaussianRational(1))) os << c.to_string() << "*";
      os << "t^" << k;
    }
  }
  return os.str();
}

}  // namespace nct
