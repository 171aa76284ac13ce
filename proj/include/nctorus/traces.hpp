#pragma once

// Canonical trace tau, the four unbounded Phi-traces phi_jk, pullback tables
// phi_jk o alpha, the S3 classification of modular automorphisms and the
// 3x3 representation on span{phi01, phi10, phi11}.
//
//   phi_jk(U^m V^n) = t^{-mn} [m = j mod 2] [n = k mod 2],   tau(U^m V^n) = [m = n = 0].

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "nctorus/automorphism.hpp"
#include "nctorus/nc_element.hpp"
#include "nctorus/phase_ring.hpp"

namespace nct {

struct TraceId {
  enum class Kind { Tau, Phi };
  Kind kind = Kind::Tau;
  int j = 0;
  int k = 0;

  static TraceId tau() { return {}; }
  /// phi_{mn} for arbitrary integers, parities reduced mod 2.
  static TraceId phi(std::int64_t m, std::int64_t n);
  /// Basis index 2j + k of a phi trace (00 -> 0, 01 -> 1, 10 -> 2, 11 -> 3).
  int index() const { return 2 * j + k; }
  static TraceId from_index(int idx) { return phi(idx / 2, idx % 2); }

  std::string name() const;  // "tau", "phi01", ...
  friend bool operator==(const TraceId&, const TraceId&) = default;
};

/// Parity filter: 1 on even integers, 0 on odd.
inline int divisor_delta(std::int64_t n) { return n % 2 == 0 ? 1 : 0; }

PhaseScalar trace_value(const TraceId& id, const NcElement& x);
PhaseScalar tau(const NcElement& x);
PhaseScalar phi(int j, int k, const NcElement& x);

struct CharacterVector {
  PhaseScalar tau;
  std::array<PhaseScalar, 4> phi;  // basis order 00, 01, 10, 11
  friend bool operator==(const CharacterVector&, const CharacterVector&) = default;
};

/// (tau(x); phi00(x), phi01(x), phi10(x), phi11(x))
CharacterVector chern(const NcElement& x);

/// phi(x y) == phi(Phi(y) x), exactly.
bool phi_trace_identity_check(const TraceId& id, const NcElement& x, const NcElement& y);

class DecompositionError : public std::runtime_error {
 public:
  DecompositionError(const std::string& what, Monomial witness)
      : std::runtime_error(what), witness_(witness) {}
  Monomial witness() const { return witness_; }

 private:
  Monomial witness_;
};

/// Rows: phi_jk o alpha = sum_b rows[jk][b] phi_b, basis order 00, 01, 10, 11.
struct TraceTable {
  std::array<std::array<PhaseScalar, 4>, 4> rows;
  /// When every row is a single basis functional with coefficient 1, phi00 is
  /// fixed and {01, 10, 11} are permuted: permutation[i] is the basis index
  /// (1..3) of phi_{i+1} o alpha.
  std::optional<std::array<int, 3>> permutation;
  /// Monomials |m|, |n| <= checked_radius were used to confirm the rows (0 when
  /// the table was produced in closed form).
  int checked_radius = 0;

  friend bool operator==(const TraceTable& a, const TraceTable& b) { return a.rows == b.rows; }

  /// "01→10,10→01,11→11" or empty when not a permutation.
  std::string permutation_string() const;

  static TraceTable from_permutation(const std::array<int, 3>& perm);
};

/// Fills in `permutation` when the rows form one.
void detect_permutation(TraceTable& table);

/// Computes phi_jk o alpha on {1, V, U, UV}, reads off the basis coefficients
/// and verifies the decomposition on every monomial |m|, |n| <= radius.
/// Requires a flip-commuting spec (InvalidAutomorphism otherwise); throws
/// DecompositionError with the offending monomial when verification fails.
TraceTable decompose_phi_pullback(const AutomorphismSpec& spec, int radius = 5);

/// Closed-form table from the parities of (a, b, c, d). All applicable parity
/// cases are evaluated and must agree (std::logic_error otherwise).
TraceTable parity_table(const ModularMatrix& mat);

enum class S3Element { Identity, Sigma, Kappa, Kappa2, SigmaKappa, SigmaKappa2 };

inline constexpr std::array<S3Element, 6> kS3Elements = {S3Element::Identity, S3Element::Sigma,
                                                         S3Element::Kappa,    S3Element::Kappa2,
                                                         S3Element::SigmaKappa, S3Element::SigmaKappa2};

/// Spec-grammar name: "id", "sigma", "kappa", "kappa.kappa", "sigma.kappa", "sigma.kappa.kappa".
std::string s3_name(S3Element e);
AutomorphismSpec s3_spec(S3Element e);

/// The S3 element whose pullback permutation equals parity_table(mat)'s.
S3Element s3_representative(const ModularMatrix& mat);

class RepresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RepMatrix {
  std::array<std::array<Rational, 3>, 3> m3;  // basis (phi01, phi10, phi11)
  std::array<std::array<Rational, 4>, 4> m4;  // basis (phi00, phi01, phi10, phi11)
  Rational det3;
  bool half_integer_entries = true;
  bool has_non_integer_entry = false;
  bool phi00_fixed = true;         // row phi00 equals (1, 0, 0, 0)
  bool subspace_invariant = true;  // rows 01, 10, 11 have no phi00 component
};

/// M(beta) with rows phi_i o beta = sum_j M_ij phi_j. Throws RepresentationError
/// when an entry is not rational or the determinant is not +-1.
RepMatrix rep_matrix(const TraceTable& table);
RepMatrix rep_matrix(const AutomorphismSpec& spec);

std::array<std::array<Rational, 3>, 3> multiply(const std::array<std::array<Rational, 3>, 3>& x,
                                                const std::array<std::array<Rational, 3>, 3>& y);

}  // namespace nct
