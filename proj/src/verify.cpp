#include "nctorus/verify.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "nctorus/automorphism.hpp"
#include "nctorus/oracle.hpp"
#include "nctorus/pr_lab.hpp"
#include "nctorus/random_elements.hpp"
#include "nctorus/traces.hpp"

namespace nct {

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

using Check = std::function<Outcome(Rng&)>;

Outcome fail(std::string detail) { return {false, std::move(detail)}; }

class Runner {
 public:
  Runner(std::string suite, std::uint64_t seed, std::vector<CheckResult>& out)
      : suite_(std::move(suite)), seed_(seed), out_(out) {}

  void run(const std::string& name, const Check& check) {
    Rng rng(seed_ ^ std::hash<std::string>{}(name));
    CheckResult r{suite_, name, false, {}};
    try {
      Outcome o = check(rng);
      r.passed = o.passed;
      r.detail = std::move(o.detail);
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    out_.push_back(std::move(r));
  }

 private:
  std::string suite_;
  std::uint64_t seed_;
  std::vector<CheckResult>& out_;
};

std::vector<AutomorphismSpec> named_specs() {
  std::vector<AutomorphismSpec> v;
  for (auto m : {NamedMap::Identity, NamedMap::Sigma, NamedMap::Kappa, NamedMap::Flip, NamedMap::Gamma1,
                 NamedMap::Gamma2, NamedMap::Gamma3}) {
    v.push_back(AutomorphismSpec::named(m));
  }
  return v;
}

bool agree_on_monomials(const AutomorphismSpec& x, const AutomorphismSpec& y, int radius, std::string* witness) {
  for (std::int64_t m = -radius; m <= radius; ++m)
    for (std::int64_t n = -radius; n <= radius; ++n) {
      const auto mono = NcElement::monomial(m, n);
      if (!(apply(x, mono) == apply(y, mono))) {
        if (witness) {
          *witness = x.to_string() + " vs " + y.to_string() + " differ on U^" + std::to_string(m) + " V^" +
                     std::to_string(n);
        }
        return false;
      }
    }
  return true;
}

void ring_suite(Runner& r) {
  r.run("phase eval is a ring homomorphism (10 theta, 100 pairs)", [](Rng& rng) -> Outcome {
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
      const double theta = 0.05 + 0.093 * t;
      for (int i = 0; i < 100; ++i) {
        const auto a = random_phase_scalar(rng);
        const auto b = random_phase_scalar(rng);
        worst = std::max(worst, std::abs((a * b).evaluate(theta) - a.evaluate(theta) * b.evaluate(theta)));
        worst = std::max(worst, std::abs((a + b).evaluate(theta) - a.evaluate(theta) - b.evaluate(theta)));
      }
    }
    if (worst > 1e-12) return fail("max deviation " + std::to_string(worst));
    return {true, "max deviation " + std::to_string(worst)};
  });
  r.run("phase conjugation is an involutive anti-automorphism", [](Rng& rng) -> Outcome {
    for (int i = 0; i < 200; ++i) {
      const auto a = random_phase_scalar(rng);
      const auto b = random_phase_scalar(rng);
      if (!(a.conj().conj() == a)) return fail("conj(conj(a)) != a for a = " + a.to_string());
      if (!((a * b).conj() == a.conj() * b.conj())) return fail("conj not multiplicative at a = " + a.to_string());
      if (!(a - a).is_zero()) return fail("a - a is not canonical zero");
    }
    return {};
  });
  r.run("associativity (100 triples, support [-3,3]^2)", [](Rng& rng) -> Outcome {
    for (int i = 0; i < 100; ++i) {
      const auto x = random_element(rng), y = random_element(rng), z = random_element(rng);
      if (!((x * y) * z == x * (y * z))) return fail("x = " + x.to_string());
    }
    return {};
  });
  r.run("V^n U^m = t^{2mn} U^m V^n for |m|,|n| <= 6", [](Rng&) -> Outcome {
    for (std::int64_t m = -6; m <= 6; ++m)
      for (std::int64_t n = -6; n <= 6; ++n)
        if (!(NcElement::V(n) * NcElement::U(m) == NcElement::monomial(m, n, PhaseScalar::t_power(2 * m * n))))
          return fail("m = " + std::to_string(m) + ", n = " + std::to_string(n));
    return {};
  });
  r.run("flip and adjoint are compatible involutions", [](Rng& rng) -> Outcome {
    for (int i = 0; i < 100; ++i) {
      const auto x = random_element(rng), y = random_element(rng);
      if (!(x.adjoint().adjoint() == x)) return fail("x** != x for " + x.to_string());
      if (!(x.flip().flip() == x)) return fail("Phi^2 != id for " + x.to_string());
      if (!((x * y).flip() == x.flip() * y.flip())) return fail("Phi not multiplicative at " + x.to_string());
      if (!(x.adjoint().flip() == x.flip().adjoint())) return fail("Phi(x*) != Phi(x)* at " + x.to_string());
      if (!((x * y).adjoint() == y.adjoint() * x.adjoint())) return fail("adjoint not anti-multiplicative");
    }
    return {};
  });
  r.run("closed-form monomial powers match repeated products", [](Rng&) -> Outcome {
    for (std::int64_t k = -3; k <= 3; ++k)
      for (std::int64_t l = -3; l <= 3; ++l)
        for (std::int64_t p = -4; p <= 4; ++p) {
          const auto x = NcElement::monomial(k, l);
          if (!(nc_power(x, p) == repeated_power(x, p)))
            return fail("(U^" + std::to_string(k) + " V^" + std::to_string(l) + ")^" + std::to_string(p));
        }
    return {};
  });
}

void auto_suite(Runner& r) {
  r.run("modular generator images are valid for all det-1 matrices in [-3,3]", [](Rng&) -> Outcome {
    const auto box = sl2z_box(3);
    for (const auto& m : box) {
      const auto [u, v] = image_generators(AutomorphismSpec::modular(m));
      if (auto rep = validate_automorphism(u, v); !rep.ok) return fail(m.to_string() + ": " + rep.failed_identity);
    }
    return {true, std::to_string(box.size()) + " matrices"};
  });
  r.run("closed form equals generator expansion on |m|,|n| <= 4", [](Rng&) -> Outcome {
    for (const auto& m : sl2z_box(2)) {
      const auto [u, v] = image_generators(AutomorphismSpec::modular(m));
      for (std::int64_t a = -4; a <= 4; ++a)
        for (std::int64_t b = -4; b <= 4; ++b)
          if (!(apply_modular_monomial(m, {a, b}) == apply_by_generators(u, v, NcElement::monomial(a, b))))
            return fail(m.to_string() + " at U^" + std::to_string(a) + " V^" + std::to_string(b));
    }
    return {};
  });
  r.run("homomorphism and *-preservation (named + 20 modular, 100 pairs each)", [](Rng& rng) -> Outcome {
    auto specs = named_specs();
    for (int i = 0; i < 20; ++i) specs.push_back(AutomorphismSpec::modular(random_modular(rng, 3)));
    for (const auto& spec : specs) {
      for (int i = 0; i < 100; ++i) {
        const auto x = random_element(rng, 2, 3), y = random_element(rng, 2, 3);
        if (!(apply(spec, x * y) == apply(spec, x) * apply(spec, y)))
          return fail(spec.to_string() + " not multiplicative at x = " + x.to_string());
        if (!(apply(spec, x.adjoint()) == apply(spec, x).adjoint()))
          return fail(spec.to_string() + " does not preserve * at x = " + x.to_string());
      }
    }
    return {};
  });
  r.run("action law: mod(A).mod(B) = mod(AB) on |m|,|n| <= 4, entries in [-2,2]", [](Rng&) -> Outcome {
    const auto box = sl2z_box(2);
    std::string witness;
    for (const auto& a : box)
      for (const auto& b : box)
        if (!agree_on_monomials(compose(AutomorphismSpec::modular(a), AutomorphismSpec::modular(b)),
                                AutomorphismSpec::modular(a * b), 4, &witness))
          return fail(witness);
    return {true, std::to_string(box.size() * box.size()) + " pairs"};
  });
  r.run("canonical relations: sigma^2 = flip, kappa^3 = id, gamma3 = gamma1 gamma2", [](Rng&) -> Outcome {
    const auto sigma = AutomorphismSpec::named(NamedMap::Sigma);
    const auto kappa = AutomorphismSpec::named(NamedMap::Kappa);
    std::string w;
    if (!agree_on_monomials(compose(sigma, sigma), AutomorphismSpec::named(NamedMap::Flip), 4, &w)) return fail(w);
    if (!agree_on_monomials(AutomorphismSpec::composite({kappa, kappa, kappa}),
                            AutomorphismSpec::named(NamedMap::Identity), 4, &w))
      return fail(w);
    if (!agree_on_monomials(AutomorphismSpec::named(NamedMap::Gamma3),
                            compose(AutomorphismSpec::named(NamedMap::Gamma1), AutomorphismSpec::named(NamedMap::Gamma2)),
                            4, &w))
      return fail(w);
    return {};
  });
  r.run("S3 relations on the phi-trace permutations", [](Rng&) -> Outcome {
    const auto sigma = AutomorphismSpec::named(NamedMap::Sigma);
    const auto kappa = AutomorphismSpec::named(NamedMap::Kappa);
    const auto id = decompose_phi_pullback(AutomorphismSpec::named(NamedMap::Identity));
    if (!(decompose_phi_pullback(compose(sigma, sigma)) == id)) return fail("sigma^2 moves a trace");
    if (!(decompose_phi_pullback(AutomorphismSpec::composite({kappa, kappa, kappa})) == id)) return fail("kappa^3 moves a trace");
    if (!(decompose_phi_pullback(compose(kappa, sigma)) ==
          decompose_phi_pullback(AutomorphismSpec::composite({sigma, kappa, kappa}))))
      return fail("kappa sigma and sigma kappa^2 pull traces back differently");
    return {};
  });
  // Exact equality of maps. KS and SK^2 differ in PSL(2,Z), so the last
  // relation only holds after reduction mod 2.
  r.run("S3 relations on 50 flip-invariant elements", [](Rng& rng) -> Outcome {
    const auto sigma = AutomorphismSpec::named(NamedMap::Sigma);
    const auto kappa = AutomorphismSpec::named(NamedMap::Kappa);
    for (int i = 0; i < 50; ++i) {
      const auto x = random_flip_invariant(rng);
      if (!(apply(compose(sigma, sigma), x) == x)) return fail("sigma^2 x != x at " + x.to_string());
      if (!(apply(AutomorphismSpec::composite({kappa, kappa, kappa}), x) == x)) return fail("kappa^3 x != x");
      if (!(apply(compose(kappa, sigma), x) == apply(AutomorphismSpec::composite({sigma, kappa, kappa}), x)))
        return fail("kappa sigma != sigma kappa^2 at " + x.to_string());
    }
    return {};
  });
  r.run("modular and named maps commute with the flip", [](Rng& rng) -> Outcome {
    auto specs = named_specs();
    for (const auto& m : sl2z_box(2)) specs.push_back(AutomorphismSpec::modular(m));
    for (const auto& spec : specs) {
      if (!commutes_with_flip(spec)) return fail(spec.to_string());
      for (int i = 0; i < 20; ++i) {
        const auto x = random_element(rng, 2, 3);
        if (!(apply(spec, x.flip()) == apply(spec, x).flip())) return fail(spec.to_string() + " at " + x.to_string());
      }
    }
    return {};
  });
}

void traces_suite(Runner& r) {
  r.run("Phi-trace identity phi(xy) = phi(Phi(y)x), 200 monomial pairs per trace", [](Rng& rng) -> Outcome {
    for (int b = 0; b < 4; ++b) {
      const auto id = TraceId::from_index(b);
      for (int i = 0; i < 200; ++i) {
        const auto x = random_monomial(rng, 4), y = random_monomial(rng, 4);
        if (!phi_trace_identity_check(id, x, y)) return fail(id.name() + " at x = " + x.to_string() + ", y = " + y.to_string());
      }
    }
    return {};
  });
  r.run("toral sign table on |m|,|n| <= 5", [](Rng&) -> Outcome {
    const NamedMap maps[3] = {NamedMap::Gamma1, NamedMap::Gamma2, NamedMap::Gamma3};
    for (int g = 0; g < 3; ++g) {
      const auto table = decompose_phi_pullback(AutomorphismSpec::named(maps[g]), 5);
      for (int row = 0; row < 4; ++row) {
        const int j = row / 2, k = row % 2;
        const int exponent = g == 0 ? j : g == 1 ? k : j + k;
        for (int b = 0; b < 4; ++b) {
          const PhaseScalar expected = b == row ? PhaseScalar(exponent % 2 ? -1 : 1) : PhaseScalar();
          if (!(table.rows[row][b] == expected)) return fail(named_map_name(maps[g]) + " row " + std::to_string(row));
        }
      }
    }
    return {};
  });
  r.run("the six S3 specs give six distinct permutations", [](Rng&) -> Outcome {
    std::vector<std::array<int, 3>> seen;
    for (auto e : kS3Elements) {
      const auto t = decompose_phi_pullback(s3_spec(e));
      if (!t.permutation) return fail(s3_name(e) + " is not a permutation");
      for (const auto& p : seen)
        if (p == *t.permutation) return fail(s3_name(e) + " repeats a permutation");
      seen.push_back(*t.permutation);
    }
    return {};
  });
  r.run("pullback rows are half-integer and phi00 is fixed", [](Rng&) -> Outcome {
    auto specs = named_specs();
    for (const auto& m : sl2z_box(3)) specs.push_back(AutomorphismSpec::modular(m));
    for (const auto& spec : specs) {
      const auto rep = rep_matrix(spec);
      if (!rep.half_integer_entries) return fail(spec.to_string() + " has a non-half-integer entry");
      if (!rep.phi00_fixed) return fail(spec.to_string() + " moves phi00");
    }
    return {true, std::to_string(specs.size()) + " specs"};
  });
  r.run("rep_matrix is multiplicative: M(a.b) = M(a) M(b)", [](Rng& rng) -> Outcome {
    for (int i = 0; i < 40; ++i) {
      const auto a = AutomorphismSpec::modular(random_modular(rng, 3));
      const auto b = i % 3 == 0 ? AutomorphismSpec::named(NamedMap::Gamma1) : AutomorphismSpec::modular(random_modular(rng, 3));
      if (!(rep_matrix(compose(a, b)).m3 == multiply(rep_matrix(a).m3, rep_matrix(b).m3)))
        return fail(a.to_string() + " . " + b.to_string());
    }
    return {};
  });
}

void parity_suite(Runner& r) {
  r.run("closed-form table equals symbolic pullback for entries in [-5,5]", [](Rng&) -> Outcome {
    const auto box = sl2z_box(5);
    for (const auto& m : box) {
      const auto closed = parity_table(m);
      const auto symbolic = decompose_phi_pullback(AutomorphismSpec::modular(m));
      if (!(closed == symbolic)) return fail(m.to_string());
      if (!(symbolic.rows[0][0].is_one())) return fail("phi00 moved by " + m.to_string());
      s3_representative(m);
    }
    return {true, std::to_string(box.size()) + " matrices"};
  });
}

void oracle_suite(Runner& r) {
  const std::pair<std::int64_t, std::int64_t> thetas[] = {{1, 2}, {2, 5}, {5, 12}};
  const OracleIdentity ids[] = {OracleIdentity::Multiplication, OracleIdentity::Adjoint,
                                OracleIdentity::AutomorphismRelation, OracleIdentity::AutomorphismHomomorphism,
                                OracleIdentity::Tau};
  for (const auto& [p, q] : thetas) {
    for (auto id : ids) {
      r.run(oracle_identity_name(id) + " at theta = " + std::to_string(p) + "/" + std::to_string(q),
            [p = p, q = q, id](Rng& rng) -> Outcome {
              SweepConfig cfg;
              cfg.p = p;
              cfg.q = q;
              cfg.seed = rng();
              const auto rep = oracle_verify(id, cfg);
              std::ostringstream os;
              os << "max deviation " << rep.max_deviation;
              if (rep.witness) os << "; witness " << *rep.witness;
              return {rep.passed(), os.str()};
            });
    }
  }
}

void pr_suite(Runner& r) {
  const double theta = std::sqrt(2.0) - 1.0;
  const int grid = 1 << 14;
  r.run("Powers-Rieffel projection at theta = sqrt2 - 1", [=](Rng&) -> Outcome {
    const auto e = build_pr_projection(theta, theta, grid);
    const auto res = check_projection_identities(e);
    if (res.max() > 1e-12) return fail("residual " + std::to_string(res.max()));
    const auto ch = pr_character(e);
    if (std::abs(ch.tau - theta) > 1e-8) return fail("tau = " + std::to_string(ch.tau));
    for (double v : ch.phi)
      if (half_integer_distance(v) > 1e-6) return fail("phi value " + std::to_string(v) + " not half-integer");
    std::ostringstream os;
    os << "character (" << ch.tau << "; " << ch.phi[0] << ", " << ch.phi[1] << ", " << ch.phi[2] << ", " << ch.phi[3] << ")";
    return {true, os.str()};
  });
  r.run("toral sign pattern on the character", [=](Rng&) -> Outcome {
    const auto e = build_pr_projection(theta, theta, grid);
    const auto base = pr_character(e);
    const Toral which[3] = {Toral::Gamma1, Toral::Gamma2, Toral::Gamma3};
    for (int g = 0; g < 3; ++g) {
      const auto ch = pr_character(apply_toral(e, which[g]));
      for (int b = 0; b < 4; ++b) {
        const int j = b / 2, k = b % 2;
        const int exponent = g == 0 ? j : g == 1 ? k : j + k;
        const double expected = (exponent % 2 ? -1.0 : 1.0) * base.phi[static_cast<std::size_t>(b)];
        if (std::abs(ch.phi[static_cast<std::size_t>(b)] - expected) > 1e-8)
          return fail("gamma" + std::to_string(g + 1) + " entry " + std::to_string(b));
      }
      if (std::abs(ch.tau - base.tau) > 1e-8) return fail("tau moved by gamma" + std::to_string(g + 1));
    }
    return {};
  });
  r.run("orthogonal symmetrization has vanishing Phi-traces", [=](Rng&) -> Outcome {
    const auto sym = build_orthogonal_symmetrization(theta, grid);
    if (sym.orthogonality_residual > 1e-12) return fail("g Phi(g) residual " + std::to_string(sym.orthogonality_residual));
    const auto ch = pr_character(sym.e);
    for (double v : ch.phi)
      if (std::abs(v) > 1e-6) return fail("phi value " + std::to_string(v));
    return {};
  });
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "ring") return Suite::Ring;
  if (name == "auto") return Suite::Auto;
  if (name == "traces") return Suite::Traces;
  if (name == "lemma21") return Suite::Parity;
  if (name == "oracle") return Suite::Oracle;
  if (name == "pr") return Suite::PR;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::Ring: return "ring";
    case Suite::Auto: return "auto";
    case Suite::Traces: return "traces";
    case Suite::Parity: return "lemma21";
    case Suite::Oracle: return "oracle";
    case Suite::PR: return "pr";
    case Suite::All: return "all";
  }
  return "?";
}

std::vector<CheckResult> run_suite(Suite suite, std::uint64_t seed) {
  std::vector<CheckResult> out;
  auto one = [&](Suite s, void (*fn)(Runner&)) {
    if (suite != Suite::All && suite != s) return;
    Runner r(suite_name(s), seed, out);
    fn(r);
  };
  one(Suite::Ring, ring_suite);
  one(Suite::Auto, auto_suite);
  one(Suite::Traces, traces_suite);
  one(Suite::Parity, parity_suite);
  one(Suite::Oracle, oracle_suite);
  one(Suite::PR, pr_suite);
  return out;
}

}  // namespace nct
