#pragma once

// Seeded generators for property sweeps.

#include <cstdint>
#include <random>

#include "nctorus/automorphism.hpp"
#include "nctorus/nc_element.hpp"
#include "nctorus/phase_ring.hpp"

namespace nct {

using Rng = std::mt19937_64;

/// Small Gaussian rational (p1/q1) + (p2/q2) i, |p| <= 5, 1 <= q <= 4.
GaussianRational random_gaussian_rational(Rng& rng);

/// One or two terms c t^k with |k| <= 3.
PhaseScalar random_phase_scalar(Rng& rng);

/// Up to max_terms monomials with |m|, |n| <= radius and random coefficients.
NcElement random_element(Rng& rng, int radius = 3, int max_terms = 4);

/// c U^m V^n with |m|, |n| <= radius; unit coefficient when unit is set.
NcElement random_monomial(Rng& rng, int radius, bool unit = false);

/// x + Phi(x) for a random x.
NcElement random_flip_invariant(Rng& rng, int radius = 3, int max_terms = 3);

ModularMatrix random_modular(Rng& rng, std::int64_t bound = 5);

}  // namespace nct
