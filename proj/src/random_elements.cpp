#include "nctorus/random_elements.hpp"

namespace nct {

namespace {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

}  // namespace

GaussianRational random_gaussian_rational(Rng& rng) {
  Rational re(static_cast<long>(uniform(rng, -5, 5)), static_cast<unsigned long>(uniform(rng, 1, 4)));
  Rational im(static_cast<long>(uniform(rng, -5, 5)), static_cast<unsigned long>(uniform(rng, 1, 4)));
  GaussianRational g(re, im);
  return g.is_zero() ? GaussianRational(1) : g;
}

PhaseScalar random_phase_scalar(Rng& rng) {
  PhaseScalar s;
  const int terms = static_cast<int>(uniform(rng, 1, 2));
  for (int i = 0; i < terms; ++i) s += PhaseScalar::monomial(uniform(rng, -3, 3), random_gaussian_rational(rng));
  return s.is_zero() ? PhaseScalar(1) : s;
}

NcElement random_element(Rng& rng, int radius, int max_terms) {
  NcElement x;
  const int terms = static_cast<int>(uniform(rng, 1, max_terms));
  for (int i = 0; i < terms; ++i) {
    x.add_term({uniform(rng, -radius, radius), uniform(rng, -radius, radius)}, random_phase_scalar(rng));
  }
  return x;
}

NcElement random_monomial(Rng& rng, int radius, bool unit) {
  const PhaseScalar c = unit ? PhaseScalar(1) : random_phase_scalar(rng);
  return NcElement::monomial(uniform(rng, -radius, radius), uniform(rng, -radius, radius), c);
}

NcElement random_flip_invariant(Rng& rng, int radius, int max_terms) {
  NcElement x = random_element(rng, radius, max_terms);
  return x + x.flip();
}

ModularMatrix random_modular(Rng& rng, std::int64_t bound) {
  static thread_local std::int64_t cached_bound = -1;
  static thread_local std::vector<ModularMatrix> box;
  if (cached_bound != bound) {
    box = sl2z_box(bound);
    cached_bound = bound;
  }
  return box[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(box.size()) - 1))];
}

}  // namespace nct
