#include "nctorus/pr_lab.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include <fftw3.h>

namespace nct {

namespace {

constexpr int kMaxShiftPower = 64;

double frac(double x) { return x - std::floor(x); }

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Owns an in-place forward DFT of length n.
class ForwardDft {
 public:
  explicit ForwardDft(int n) : n_(n), data_(fftw_alloc_complex(static_cast<std::size_t>(n))) {
    plan_ = fftw_plan_dft_1d(n, data_, data_, FFTW_FORWARD, FFTW_ESTIMATE);
  }
  ~ForwardDft() {
    fftw_destroy_plan(plan_);
    fftw_free(data_);
  }
  ForwardDft(const ForwardDft&) = delete;
  ForwardDft& operator=(const ForwardDft&) = delete;

  /// Fourier coefficients c^(m) = (1/n) sum_k c(k/n) e^{-2 pi i m k / n}, indexed by m mod n.
  std::vector<std::complex<double>> coefficients(const std::vector<std::complex<double>>& samples) {
    for (int k = 0; k < n_; ++k) {
      data_[k][0] = samples[static_cast<std::size_t>(k)].real();
      data_[k][1] = samples[static_cast<std::size_t>(k)].imag();
    }
    fftw_execute(plan_);
    std::vector<std::complex<double>> out(static_cast<std::size_t>(n_));
    for (int k = 0; k < n_; ++k) out[static_cast<std::size_t>(k)] = {data_[k][0] / n_, data_[k][1] / n_};
    return out;
  }

 private:
  int n_;
  fftw_complex* data_;
  fftw_plan plan_;
};

std::vector<std::complex<double>> sample(const CircleFunction& f, int grid) {
  std::vector<std::complex<double>> out(static_cast<std::size_t>(grid));
  for (int k = 0; k < grid; ++k) out[static_cast<std::size_t>(k)] = f(static_cast<double>(k) / grid);
  return out;
}

struct StandardProfiles {
  CircleFunction f_minus, f_zero, f_plus;
};

// Flip-invariant profiles for shift s and ramp width eps: f_0 is 1 on
// |x| <= (s - eps)/2 and 0 beyond (s + eps)/2; f_+ is supported on
// |x + s/2| <= eps/2 and symmetric about -s/2.
StandardProfiles standard_profiles(double s, double eps) {
  auto ramp = [eps](double z) { return smooth_step(z / eps); };
  CircleFunction f_zero = [=](double x) -> std::complex<double> {
    return 1.0 - ramp(std::abs(wrap_circle(x)) - (s - eps) / 2);
  };
  CircleFunction f_plus = [=](double x) -> std::complex<double> {
    const double w = std::abs(wrap_circle(x + s / 2));
    if (w >= eps / 2) return 0.0;
    const double v = ramp(eps / 2 + w);
    return std::sqrt(std::max(0.0, v * (1.0 - v)));
  };
  CircleFunction f_minus = [f_plus](double x) { return f_plus(-x); };
  return {std::move(f_minus), std::move(f_zero), std::move(f_plus)};
}

double ramp_width(double s) { return std::min({0.05, s / 4, (1.0 - s) / 4}); }

CircleFunction translated(CircleFunction f, double a) {
  return [f = std::move(f), a](double x) { return f(x - a); };
}

CircleFunction reflected(CircleFunction f) {
  return [f = std::move(f)](double x) { return f(-x); };
}

CircleFunction sum(CircleFunction f, CircleFunction g) {
  return [f = std::move(f), g = std::move(g)](double x) { return f(x) + g(x); };
}

}  // namespace

double wrap_circle(double x) {
  double r = x - std::floor(x);  // [0, 1)
  return r >= 0.5 ? r - 1.0 : r;
}

double smooth_step(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / u);
  const double b = std::exp(-1.0 / (1.0 - u));
  return a / (a + b);
}

CircleElement multiply(const CircleElement& x, const CircleElement& y, double theta) {
  struct Piece {
    CircleFunction f, g;
    double shift;
  };
  std::map<std::int64_t, std::vector<Piece>> pieces;
  for (const auto& [a, f] : x.coeffs) {
    for (const auto& [b, g] : y.coeffs) pieces[a + b].push_back({f, g, static_cast<double>(a) * theta});
  }
  CircleElement out;
  for (auto& [power, list] : pieces) {
    out.coeffs[power] = [list = std::move(list)](double t) {
      std::complex<double> acc = 0.0;
      for (const auto& p : list) acc += p.f(t) * p.g(t + p.shift);
      return acc;
    };
  }
  return out;
}

double max_abs_on_grid(const CircleElement& x, int grid) {
  double m = 0.0;
  for (const auto& [power, f] : x.coeffs) {
    for (int k = 0; k < grid; ++k) m = std::max(m, std::abs(f(static_cast<double>(k) / grid)));
  }
  return m;
}

PRProjection PRProjection::from_functions(double theta, double theta_prime, int grid_size, std::int64_t shift_power,
                                          CircleFunction f_minus, CircleFunction f_zero, CircleFunction f_plus) {
  PRProjection e;
  e.theta = theta;
  e.theta_prime = theta_prime;
  e.grid_size = grid_size;
  e.shift_power = shift_power;
  e.shift = frac(static_cast<double>(shift_power) * theta);
  e.f_minus = std::move(f_minus);
  e.f_zero = std::move(f_zero);
  e.f_plus = std::move(f_plus);
  e.samples_minus = sample(e.f_minus, grid_size);
  e.samples_zero = sample(e.f_zero, grid_size);
  e.samples_plus = sample(e.f_plus, grid_size);
  return e;
}

CircleElement PRProjection::as_element() const {
  CircleElement x;
  x.coeffs[-shift_power] = f_minus;
  x.coeffs[0] = f_zero;
  x.coeffs[shift_power] = f_plus;
  return x;
}

std::int64_t find_shift_power(double theta, double target) {
  for (std::int64_t n = 1; n <= kMaxShiftPower; ++n) {
    for (std::int64_t sn : {n, -n}) {
      if (std::abs(frac(static_cast<double>(sn) * theta) - target) < 1e-9) return sn;
    }
  }
  return 0;
}

double auxiliary_trace_target(double theta_prime) {
  const double q = 3.0 * (3.0 * theta_prime - 1.0);
  if (!(q > 0.0 && q < 1.0)) {
    throw InfeasibleGeometry("auxiliary projection needs 0 < 3(3 theta' - 1) < 1, i.e. 1/3 < theta' < 4/9; got theta' = " +
                             std::to_string(theta_prime));
  }
  return 2.0 * (3.0 * theta_prime - 1.0);
}

PRProjection build_pr_projection(double theta, double theta_prime, int grid_size) {
  if (!(theta > 0.0 && theta < 1.0)) throw std::invalid_argument("theta must lie in (0, 1)");
  if (!is_power_of_two(grid_size) || grid_size < (1 << 12)) {
    throw std::invalid_argument("grid size must be a power of two >= 4096, got " + std::to_string(grid_size));
  }
  if (!(theta_prime > 0.0 && theta_prime < 0.5)) {
    throw InfeasibleGeometry("theta' must lie in (0, 1/2), got " + std::to_string(theta_prime));
  }
  const std::int64_t n = find_shift_power(theta, theta_prime);
  if (n == 0) {
    throw InfeasibleGeometry("theta' = " + std::to_string(theta_prime) +
                             " is not frac(n theta) for any 1 <= |n| <= 64; a three-term projection "
                             "f_-V^-n + f_0 + f_+V^n needs a ramp interval of length theta' matched by the V^n shift");
  }
  const double s = frac(static_cast<double>(n) * theta);
  const double eps = ramp_width(s);
  auto prof = standard_profiles(s, eps);
  auto e = PRProjection::from_functions(theta, theta_prime, grid_size, n, std::move(prof.f_minus),
                                        std::move(prof.f_zero), std::move(prof.f_plus));
  e.transition_width = eps;
  return e;
}

double ResidualReport::max() const {
  return std::max({isometry, support_overlap, quadratic, flip_symmetry, adjoint_symmetry});
}

ResidualReport check_projection_identities(const PRProjection& e) {
  ResidualReport r;
  const double s = e.shift;
  for (int k = 0; k < e.grid_size; ++k) {
    const double x = e.grid_point(k);
    const auto fp = e.f_plus(x);
    const auto f0 = e.f_zero(x);
    r.isometry = std::max(r.isometry, std::abs(fp * e.f_plus(x + s)));
    r.support_overlap = std::max(r.support_overlap, std::abs(fp * (f0 + e.f_zero(x + s) - 1.0)));
    r.quadratic =
        std::max(r.quadratic, std::abs(f0 - f0 * f0 - std::norm(fp) - std::norm(e.f_plus(x - s))));
    r.flip_symmetry = std::max({r.flip_symmetry, std::abs(e.f_zero(-x) - f0), std::abs(e.f_minus(x) - e.f_plus(-x))});
    r.adjoint_symmetry =
        std::max({r.adjoint_symmetry, std::abs(e.f_minus(x) - std::conj(e.f_plus(x - s))), std::abs(f0.imag())});
  }
  return r;
}

double half_integer_distance(double v) { return std::abs(v - std::round(2.0 * v) / 2.0); }

NumericCharacter pr_character_closed_form(const CircleElement& e, double theta, int grid) {
  NumericCharacter out;
  std::array<std::complex<double>, 4> phi{};
  std::complex<double> tau = 0.0;
  for (const auto& [power, c] : e.coeffs) {
    const int k = static_cast<int>(((power % 2) + 2) % 2);
    const double y = -static_cast<double>(power) * theta / 2.0;
    const auto a = c(y);
    const auto b = c(y + 0.5);
    phi[static_cast<std::size_t>(k)] += (a + b) / 2.0;       // j = 0
    phi[static_cast<std::size_t>(2 + k)] += (a - b) / 2.0;   // j = 1
    if (power == 0) {
      for (int i = 0; i < grid; ++i) tau += c(static_cast<double>(i) / grid);
      tau /= static_cast<double>(grid);
    }
  }
  out.tau = tau.real();
  out.max_imaginary = std::abs(tau.imag());
  for (int b = 0; b < 4; ++b) {
    out.phi[static_cast<std::size_t>(b)] = phi[static_cast<std::size_t>(b)].real();
    out.max_imaginary = std::max(out.max_imaginary, std::abs(phi[static_cast<std::size_t>(b)].imag()));
  }
  return out;
}

NumericCharacter pr_character(const PRProjection& e) {
  const auto residuals = check_projection_identities(e);
  if (residuals.max() > 1e-8) {
    throw std::runtime_error("projection identities fail (max residual " + std::to_string(residuals.max()) +
                             "); refusing to evaluate the character");
  }
  const int n = e.grid_size;
  std::array<std::complex<double>, 4> phi{};

  // V^0: sum over m = j mod 2 of f_0^(m) is (f_0(0) + (-1)^j f_0(1/2)) / 2; both are grid points.
  const auto z0 = e.samples_zero[0];
  const auto zh = e.samples_zero[static_cast<std::size_t>(n / 2)];
  phi[0] += (z0 + zh) / 2.0;
  phi[2] += (z0 - zh) / 2.0;

  // V^{+-p}: phi_{j, p mod 2} gets sum_{m = j} c^(m) t^{-m p} with t^{-mp} = e^{-i pi theta m p}.
  ForwardDft dft(n);
  auto add_term = [&](std::int64_t power, const std::vector<std::complex<double>>& samples) {
    const auto coeff = dft.coefficients(samples);
    const int k = static_cast<int>(((power % 2) + 2) % 2);
    for (int idx = 0; idx < n; ++idx) {
      const std::int64_t m = idx < n / 2 ? idx : idx - n;
      const double turns = std::fmod(-e.theta * static_cast<double>(m) * static_cast<double>(power), 2.0);
      const auto term = coeff[static_cast<std::size_t>(idx)] * std::polar(1.0, std::numbers::pi * turns);
      const int j = static_cast<int>(((m % 2) + 2) % 2);
      phi[static_cast<std::size_t>(2 * j + k)] += term;
    }
  };
  add_term(e.shift_power, e.samples_plus);
  add_term(-e.shift_power, e.samples_minus);

  NumericCharacter out;
  std::complex<double> tau = 0.0;
  for (const auto& v : e.samples_zero) tau += v;
  tau /= static_cast<double>(n);
  out.tau = tau.real();
  out.max_imaginary = std::abs(tau.imag());
  for (int b = 0; b < 4; ++b) {
    out.phi[static_cast<std::size_t>(b)] = phi[static_cast<std::size_t>(b)].real();
    out.max_imaginary = std::max(out.max_imaginary, std::abs(phi[static_cast<std::size_t>(b)].imag()));
  }
  if (out.max_imaginary > 1e-8) {
    throw std::runtime_error("character has imaginary part " + std::to_string(out.max_imaginary) +
                             "; element is not self-adjoint");
  }
  return out;
}

PRProjection apply_toral(const PRProjection& e, Toral which) {
  const bool shift_u = which == Toral::Gamma1 || which == Toral::Gamma3;
  const bool negate_v = (which == Toral::Gamma2 || which == Toral::Gamma3) && (e.shift_power % 2 != 0);
  auto transform = [&](const CircleFunction& f, bool is_v_term) -> CircleFunction {
    const double sign = (is_v_term && negate_v) ? -1.0 : 1.0;
    if (shift_u) return [f, sign](double x) { return sign * f(x + 0.5); };
    return [f, sign](double x) { return sign * f(x); };
  };
  auto out = PRProjection::from_functions(e.theta, e.theta_prime, e.grid_size, e.shift_power,
                                          transform(e.f_minus, true), transform(e.f_zero, false),
                                          transform(e.f_plus, true));
  out.transition_width = e.transition_width;
  return out;
}

OrthogonalSymmetrization build_orthogonal_symmetrization(double theta, int grid_size, double max_trace) {
  if (!(theta > 0.0 && theta < 1.0)) throw std::invalid_argument("theta must lie in (0, 1)");
  if (!is_power_of_two(grid_size) || grid_size < (1 << 12)) {
    throw std::invalid_argument("grid size must be a power of two >= 4096, got " + std::to_string(grid_size));
  }
  if (!(max_trace > 0.0 && max_trace <= 0.1)) {
    throw InfeasibleGeometry("orthogonal placement around x = 1/4 needs max_trace in (0, 0.1]");
  }
  std::int64_t n = 0;
  for (std::int64_t k = 1; k <= kMaxShiftPower && n == 0; ++k) {
    const double s = frac(static_cast<double>(k) * theta);
    if (s > 1e-6 && s <= max_trace) n = k;
  }
  if (n == 0) {
    throw InfeasibleGeometry("no 1 <= n <= 64 has 0 < frac(n theta) <= " + std::to_string(max_trace));
  }
  const double s = frac(static_cast<double>(n) * theta);
  const double eps = s / 4;
  const double a = 0.25;
  auto prof = standard_profiles(s, eps);

  auto g = PRProjection::from_functions(theta, s, grid_size, n, translated(prof.f_minus, a),
                                        translated(prof.f_zero, a), translated(prof.f_plus, a));
  g.transition_width = eps;

  // Phi(f(U) V^k) = f(U^{-1}) V^{-k}
  CircleElement flip_g;
  flip_g.coeffs[n] = reflected(g.f_minus);
  flip_g.coeffs[0] = reflected(g.f_zero);
  flip_g.coeffs[-n] = reflected(g.f_plus);

  const auto ge = g.as_element();
  const double residual = std::max(max_abs_on_grid(multiply(ge, flip_g, theta), grid_size),
                                   max_abs_on_grid(multiply(flip_g, ge, theta), grid_size));

  auto e = PRProjection::from_functions(theta, 2.0 * s, grid_size, n, sum(g.f_minus, flip_g.coeffs[-n]),
                                        sum(g.f_zero, flip_g.coeffs[0]), sum(g.f_plus, flip_g.coeffs[n]));
  e.transition_width = eps;
  return {std::move(g), std::move(e), residual};
}

}  // namespace nct
