#pragma once

// Automorphisms of the rotation algebra: modular maps from SL(2,Z), the named
// canonical maps, user-supplied generator images, and composites.
//
// Matrix layout. A modular matrix is written [a c; b d]: the FIRST COLUMN
// (a, b) is the exponent vector of the image of U and the SECOND COLUMN (c, d)
// that of V:
//     alpha(U) = t^{ab} U^a V^b,   alpha(V) = t^{cd} U^c V^d.
// Entries are passed to constructors in the order (a, b, c, d), never
// row-major.
//
// Composition. compose(outer, inner) applies inner first. For modular maps
// compose(mod(A), mod(B)) == mod(A * B) with the ordinary matrix product in
// the layout above.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nctorus/nc_element.hpp"

namespace nct {

class DeterminantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidAutomorphism : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ModularMatrix {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  /// Throws DeterminantError unless ad - bc = 1.
  static ModularMatrix make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
  static ModularMatrix identity() { return {}; }

  std::int64_t determinant() const { return a * d - b * c; }

  /// Exponent vector image of U^m V^n: (a m + c n, b m + d n).
  Monomial act(const Monomial& v) const { return {a * v.m + c * v.n, b * v.m + d * v.n}; }

  friend ModularMatrix operator*(const ModularMatrix& x, const ModularMatrix& y);
  friend bool operator==(const ModularMatrix&, const ModularMatrix&) = default;

  std::string to_string() const;
};

/// All SL(2,Z) matrices with entries in [-bound, bound], in lexicographic (a,b,c,d) order.
std::vector<ModularMatrix> sl2z_box(std::int64_t bound);

enum class NamedMap { Identity, Sigma, Kappa, Flip, Gamma1, Gamma2, Gamma3 };

std::string named_map_name(NamedMap m);

struct ValidationReport {
  bool ok = true;
  std::string failed_identity;  // empty when ok
};

/// Checks V'U' = t^2 U'V' and unitarity of both images, exactly.
ValidationReport validate_automorphism(const NcElement& image_u, const NcElement& image_v);

class AutomorphismSpec {
 public:
  struct Custom {
    NcElement image_u;
    NcElement image_v;
  };
  struct Composite {
    std::vector<AutomorphismSpec> parts;  // applied right to left
  };
  using Variant = std::variant<ModularMatrix, NamedMap, Custom, Composite>;

  AutomorphismSpec() : v_(NamedMap::Identity) {}

  /// Throws DeterminantError unless det = 1.
  static AutomorphismSpec modular(const ModularMatrix& mat) {
    return AutomorphismSpec(ModularMatrix::make(mat.a, mat.b, mat.c, mat.d));
  }
  static AutomorphismSpec modular(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return AutomorphismSpec(ModularMatrix::make(a, b, c, d));
  }
  static AutomorphismSpec named(NamedMap m) { return AutomorphismSpec(m); }
  /// Throws InvalidAutomorphism naming the violated identity.
  static AutomorphismSpec custom(NcElement image_u, NcElement image_v);
  static AutomorphismSpec composite(std::vector<AutomorphismSpec> parts);

  const Variant& variant() const { return v_; }

  /// The modular matrix when this spec is modular, or a named map / composite
  /// consisting only of modular pieces.
  std::optional<ModularMatrix> as_modular() const;

  /// Text form in the CLI grammar ("mod(a,b,c,d)", "sigma", "x.y", ...).
  std::string to_string() const;

 private:
  explicit AutomorphismSpec(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// The matrix of a named map, when it is modular (id, sigma, kappa, flip).
std::optional<ModularMatrix> named_matrix(NamedMap m);

/// (alpha(U), alpha(V)).
std::pair<NcElement, NcElement> image_generators(const AutomorphismSpec& spec);

/// Linear extension over terms. Modular maps use the closed form
///   alpha(U^m V^n) = t^{ab m^2 + cd n^2 + 2bc mn} U^{am+cn} V^{bm+dn}.
NcElement apply(const AutomorphismSpec& spec, const NcElement& x);

/// Closed-form image of a single monomial under a modular matrix.
NcElement apply_modular_monomial(const ModularMatrix& mat, const Monomial& v);

/// alpha(U)^m alpha(V)^n extended linearly, for any pair of unitary images.
NcElement apply_by_generators(const NcElement& image_u, const NcElement& image_v, const NcElement& x);

/// outer after inner.
AutomorphismSpec compose(const AutomorphismSpec& outer, const AutomorphismSpec& inner);

/// alpha(Phi(U)) == Phi(alpha(U)) and likewise for V.
bool commutes_with_flip(const AutomorphismSpec& spec);

}  // namespace nct
