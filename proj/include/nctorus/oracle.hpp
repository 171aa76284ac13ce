#pragma once

// Numeric ground truth at rational theta = p/q: U is the q x q clock matrix
// diag(1, w, ..., w^{q-1}) with w = e^{2 pi i p/q}, V the cyclic shift
// V e_j = e_{j-1}, so that V U = w U V.
//
// The unbounded traces phi_jk have no matrix counterpart; the oracle covers
// ring structure, adjoints, automorphism images and tau only.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "nctorus/automorphism.hpp"
#include "nctorus/nc_element.hpp"

namespace nct {

class ClockShift {
 public:
  static constexpr std::int64_t kMaxDimension = 512;

  /// Throws std::invalid_argument unless q >= 1, q <= 512 and gcd(p, q) = 1.
  ClockShift(std::int64_t p, std::int64_t q);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  double theta() const { return static_cast<double>(p_) / static_cast<double>(q_); }

  Eigen::MatrixXcd clock() const { return monomial(1, 0); }
  Eigen::MatrixXcd shift() const { return monomial(0, 1); }

  /// Matrix of U^m V^n, built entrywise.
  Eigen::MatrixXcd monomial(std::int64_t m, std::int64_t n) const;

  /// Linear extension with coefficients evaluated at theta = p/q.
  Eigen::MatrixXcd represent(const NcElement& x) const;

  /// (1/q) trace; equals tau(x) when the support lies strictly inside (-q, q)^2.
  std::complex<double> normalized_trace(const Eigen::MatrixXcd& m) const;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

enum class OracleIdentity {
  Multiplication,           // rep(x y) = rep(x) rep(y)
  Adjoint,                  // rep(x*) = rep(x)^dagger
  AutomorphismRelation,     // rep(a(V)) rep(a(U)) = w rep(a(U)) rep(a(V)), unitarity
  AutomorphismHomomorphism, // rep(a(x y)) = rep(a(x)) rep(a(y))
  Tau,                      // tau(x) = (1/q) tr rep(x)
};

std::string oracle_identity_name(OracleIdentity id);

struct SweepConfig {
  std::int64_t p = 2;
  std::int64_t q = 5;
  int samples = 100;
  std::uint64_t seed = 1;
  int radius = 3;      // support radius of random elements (clamped below q for Tau)
  double tolerance = 1e-10;
  /// Automorphisms for the two automorphism identities; empty selects the
  /// named maps plus a fixed sample of modular matrices.
  std::vector<AutomorphismSpec> specs;
};

struct OracleReport {
  std::string identity;
  std::int64_t p = 0;
  std::int64_t q = 0;
  int samples = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  std::optional<std::string> witness;  // set when max_deviation exceeds tolerance
  bool passed() const { return max_deviation <= tolerance; }
};

OracleReport oracle_verify(OracleIdentity identity, const SweepConfig& config);

}  // namespace nct
