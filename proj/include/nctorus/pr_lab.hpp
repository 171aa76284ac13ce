#pragma once

// Numeric Powers-Rieffel projections e = f_-(U) V^{-n} + f_0(U) + f_+(U) V^n.
//
// Functions of U are 1-periodic functions of x with U <-> e^{2 pi i x}. Then
// V^n f(U) V^{-n} = f(x + n theta), and with s = frac(n theta) the element e is
// a projection exactly when
//   (i)   f_+(x) f_+(x + s)                         = 0
//   (ii)  f_+(x) (f_0(x) + f_0(x + s) - 1)          = 0
//   (iii) f_0(x) - f_0(x)^2 - |f_+(x)|^2 - |f_+(x - s)|^2 = 0
// together with f_0 real and f_-(x) = conj(f_+(x - s)). Flip invariance is
// f_0(-x) = f_0(x) and f_-(x) = f_+(-x).

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace nct {

using CircleFunction = std::function<std::complex<double>(double)>;

/// Reduces x mod 1 into [-1/2, 1/2).
double wrap_circle(double x);

/// C-infinity step: 0 for u <= 0, 1 for u >= 1, psi(u) + psi(1 - u) = 1.
double smooth_step(double u);

/// sum_n c_n(U) V^n
struct CircleElement {
  std::map<std::int64_t, CircleFunction> coeffs;
};

/// Product in the crossed product: (f V^a)(g V^b) = f(x) g(x + a theta) V^{a+b}.
CircleElement multiply(const CircleElement& x, const CircleElement& y, double theta);

/// max_{k} |f(k / grid)| over all coefficients.
double max_abs_on_grid(const CircleElement& x, int grid);

class InfeasibleGeometry : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PRProjection {
  double theta = 0.0;
  double theta_prime = 0.0;
  int grid_size = 0;
  std::int64_t shift_power = 1;   // n: coefficients multiply V^{-n}, V^0, V^n
  double shift = 0.0;             // frac(n theta)
  double transition_width = 0.0;  // width of the smooth ramps
  CircleFunction f_minus;
  CircleFunction f_zero;
  CircleFunction f_plus;
  std::vector<std::complex<double>> samples_minus;
  std::vector<std::complex<double>> samples_zero;
  std::vector<std::complex<double>> samples_plus;

  static PRProjection from_functions(double theta, double theta_prime, int grid_size, std::int64_t shift_power,
                                     CircleFunction f_minus, CircleFunction f_zero, CircleFunction f_plus);

  CircleElement as_element() const;
  double grid_point(int k) const { return static_cast<double>(k) / grid_size; }
};

/// Builds a flip-invariant Powers-Rieffel projection with trace theta_prime.
/// theta_prime must lie in (0, 1/2) and equal frac(n theta) for some
/// 1 <= |n| <= 64 (InfeasibleGeometry otherwise); grid_size a power of two
/// >= 2^12 (std::invalid_argument otherwise).
PRProjection build_pr_projection(double theta, double theta_prime, int grid_size);

/// Smallest |n| <= 64 with frac(n theta) = target within 1e-9, or 0.
std::int64_t find_shift_power(double theta, double target);

/// 2 (3 theta' - 1), the trace of the auxiliary projection used alongside a
/// projection of trace theta'; requires 0 < 3 (3 theta' - 1) < 1.
double auxiliary_trace_target(double theta_prime);

struct ResidualReport {
  double isometry = 0.0;        // (i)
  double support_overlap = 0.0; // (ii)
  double quadratic = 0.0;       // (iii)
  double flip_symmetry = 0.0;
  double adjoint_symmetry = 0.0;
  double max() const;
};

ResidualReport check_projection_identities(const PRProjection& e);

struct NumericCharacter {
  double tau = 0.0;
  std::array<double, 4> phi{};  // basis order 00, 01, 10, 11
  double max_imaginary = 0.0;
};

/// tau = integral of f_0; V^0 parts in closed form (f_0(0) +- f_0(1/2)) / 2,
/// V^{+-n} parts from FFT Fourier coefficients. Throws std::runtime_error when
/// residuals exceed 1e-8 or an imaginary part exceeds 1e-8.
NumericCharacter pr_character(const PRProjection& e);

/// Every term by point evaluation: sum_{m = j mod 2} c^(m) e^{2 pi i m y}
/// = (c(y) + (-1)^j c(y + 1/2)) / 2 with y = -n theta / 2. No residual gate.
NumericCharacter pr_character_closed_form(const CircleElement& e, double theta, int grid);

/// |v - nearest half-integer|
double half_integer_distance(double v);

enum class Toral { Gamma1, Gamma2, Gamma3 };

/// gamma1: f(x) -> f(x + 1/2); gamma2: V^k coefficient times (-1)^k; gamma3 both.
PRProjection apply_toral(const PRProjection& e, Toral which);

struct OrthogonalSymmetrization {
  PRProjection g;                 // projection with g Phi(g) = 0 (not flip-invariant)
  PRProjection e;                 // g + Phi(g)
  double orthogonality_residual;  // max |g Phi(g)| and |Phi(g) g| on the grid
};

/// A small-trace projection g placed around x = 1/4 so that g Phi(g) = 0, and
/// its symmetrization. Uses the smallest |n| with frac(n theta) <= max_trace.
OrthogonalSymmetrization build_orthogonal_symmetrization(double theta, int grid_size, double max_trace = 0.1);

}  // namespace nct
