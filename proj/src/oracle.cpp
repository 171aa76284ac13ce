#include "nctorus/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "nctorus/random_elements.hpp"
#include "nctorus/traces.hpp"

namespace nct {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t q) { return ((x % q) + q) % q; }

double deviation(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) { return (a - b).norm(); }

std::vector<AutomorphismSpec> default_specs() {
  std::vector<AutomorphismSpec> specs;
  for (auto m : {NamedMap::Identity, NamedMap::Sigma, NamedMap::Kappa, NamedMap::Flip, NamedMap::Gamma1,
                 NamedMap::Gamma2, NamedMap::Gamma3}) {
    specs.push_back(AutomorphismSpec::named(m));
  }
  for (const auto& mat : {ModularMatrix{1, 1, 0, 1}, ModularMatrix{2, 1, 1, 1}, ModularMatrix{3, -2, -1, 1},
                          ModularMatrix{-1, 3, 0, -1}, ModularMatrix{2, 5, 1, 3}}) {
    specs.push_back(AutomorphismSpec::modular(mat));
  }
  return specs;
}

struct Tracker {
  double max = 0.0;
  std::optional<std::string> witness;
  void record(double dev, double tol, const std::string& what) {
    if (dev > max) max = dev;
    if (dev > tol && !witness) witness = what;
  }
};

}  // namespace

ClockShift::ClockShift(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
  if (q < 1 || q > kMaxDimension) {
    throw std::invalid_argument("clock-shift dimension q must lie in [1, 512], got " + std::to_string(q));
  }
  if (std::gcd(p, q) != 1) {
    throw std::invalid_argument("p and q must be coprime, got " + std::to_string(p) + "/" + std::to_string(q));
  }
}

Eigen::MatrixXcd ClockShift::monomial(std::int64_t m, std::int64_t n) const {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(q_, q_);
  // U^m V^n e_j = w^{m (j-n)} e_{j-n}
  for (std::int64_t j = 0; j < q_; ++j) {
    const std::int64_t row = mod(j - n, q_);
    const std::int64_t k = mod(mod(p_ * m, q_) * row, q_);
    out(row, j) = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(q_));
  }
  return out;
}

Eigen::MatrixXcd ClockShift::represent(const NcElement& x) const {
  if (!(x.convention() == Convention{})) {
    throw ContextMismatch("clock-shift representation assumes the standard convention");
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(q_, q_);
  for (const auto& [mono, c] : x.terms()) out += c.evaluate(theta()) * monomial(mono.m, mono.n);
  return out;
}

std::complex<double> ClockShift::normalized_trace(const Eigen::MatrixXcd& m) const {
  return m.trace() / static_cast<double>(q_);
}

std::string oracle_identity_name(OracleIdentity id) {
  switch (id) {
    case OracleIdentity::Multiplication: return "multiplication";
    case OracleIdentity::Adjoint: return "adjoint";
    case OracleIdentity::AutomorphismRelation: return "automorphism_relation";
    case OracleIdentity::AutomorphismHomomorphism: return "automorphism_homomorphism";
    case OracleIdentity::Tau: return "tau";
  }
  return "?";
}

OracleReport oracle_verify(OracleIdentity identity, const SweepConfig& config) {
  const ClockShift rep(config.p, config.q);
  Rng rng(config.seed);
  Tracker track;
  const auto specs = config.specs.empty() ? default_specs() : config.specs;
  const std::complex<double> w = PhaseScalar::t_power(2).evaluate(rep.theta());

  for (int s = 0; s < config.samples; ++s) {
    switch (identity) {
      case OracleIdentity::Multiplication: {
        const auto x = random_element(rng, config.radius);
        const auto y = random_element(rng, config.radius);
        track.record(deviation(rep.represent(x * y), rep.represent(x) * rep.represent(y)), config.tolerance,
                     "x = " + x.to_string() + ", y = " + y.to_string());
        break;
      }
      case OracleIdentity::Adjoint: {
        const auto x = random_element(rng, config.radius);
        track.record(deviation(rep.represent(x.adjoint()), rep.represent(x).adjoint()), config.tolerance,
                     "x = " + x.to_string());
        break;
      }
      case OracleIdentity::AutomorphismRelation: {
        const auto& spec = specs[static_cast<std::size_t>(s) % specs.size()];
        const auto [u, v] = image_generators(spec);
        const auto mu = rep.represent(u);
        const auto mv = rep.represent(v);
        const auto id = Eigen::MatrixXcd::Identity(config.q, config.q);
        double dev = deviation(mv * mu, w * mu * mv);
        dev = std::max(dev, deviation(mu * mu.adjoint(), id));
        dev = std::max(dev, deviation(mv * mv.adjoint(), id));
        track.record(dev, config.tolerance, "spec = " + spec.to_string());
        break;
      }
      case OracleIdentity::AutomorphismHomomorphism: {
        const auto& spec = specs[static_cast<std::size_t>(s) % specs.size()];
        const auto x = random_element(rng, config.radius);
        const auto y = random_element(rng, config.radius);
        track.record(
            deviation(rep.represent(apply(spec, x * y)), rep.represent(apply(spec, x)) * rep.represent(apply(spec, y))),
            config.tolerance, "spec = " + spec.to_string() + ", x = " + x.to_string() + ", y = " + y.to_string());
        break;
      }
      case OracleIdentity::Tau: {
        // Support strictly inside (-q, q) so that U^q = 1 cannot alias a monomial onto the identity.
        const int radius = static_cast<int>(std::min<std::int64_t>(config.radius, config.q - 1));
        const auto x = random_element(rng, radius);
        const auto exact = tau(x).evaluate(rep.theta());
        track.record(std::abs(exact - rep.normalized_trace(rep.represent(x))), config.tolerance,
                     "x = " + x.to_string());
        break;
      }
    }
  }

  OracleReport report;
  report.identity = oracle_identity_name(identity);
  report.p = config.p;
  report.q = config.q;
  report.samples = config.samples;
  report.max_deviation = track.max;
  report.tolerance = config.tolerance;
  report.witness = track.witness;
  return report;
}

}  // namespace nct
