// Acceptance run: one PASS/FAIL line per criterion.

#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nctorus/automorphism.hpp"
#include "nctorus/oracle.hpp"
#include "nctorus/pr_lab.hpp"
#include "nctorus/random_elements.hpp"
#include "nctorus/traces.hpp"

using namespace nct;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

Verdict failed(std::string why) { return {false, std::move(why)}; }

NcElement mono(std::int64_t m, std::int64_t n) { return NcElement::monomial(m, n); }
AutomorphismSpec named(NamedMap m) { return AutomorphismSpec::named(m); }

bool agree(const AutomorphismSpec& x, const AutomorphismSpec& y, int radius, std::string& witness) {
  for (std::int64_t m = -radius; m <= radius; ++m)
    for (std::int64_t n = -radius; n <= radius; ++n)
      if (!(apply(x, mono(m, n)) == apply(y, mono(m, n)))) {
        witness = x.to_string() + " vs " + y.to_string() + " at U^" + std::to_string(m) + " V^" + std::to_string(n) +
                  ": " + apply(x, mono(m, n)).to_string() + " != " + apply(y, mono(m, n)).to_string();
        return false;
      }
  return true;
}

Verdict parity_table_exact() {
  const auto box = sl2z_box(5);
  for (const auto& mat : box) {
    const auto closed = parity_table(mat);
    const auto symbolic = decompose_phi_pullback(AutomorphismSpec::modular(mat), 5);
    if (!(closed == symbolic)) return failed("tables differ at " + mat.to_string());
  }
  return {true, std::to_string(box.size()) + " matrices"};
}

Verdict phi00_invariance() {
  const auto box = sl2z_box(5);
  for (const auto& mat : box) {
    const auto table = decompose_phi_pullback(AutomorphismSpec::modular(mat), 5);
    if (!table.rows[0][0].is_one()) return failed("phi00 coefficient moved by " + mat.to_string());
    for (int b = 1; b < 4; ++b)
      if (!table.rows[0][static_cast<std::size_t>(b)].is_zero()) return failed("phi00 row leaks at " + mat.to_string());
  }
  return {true, std::to_string(box.size()) + " matrices"};
}

Verdict s3_classification() {
  std::set<std::array<int, 3>> seen;
  for (auto e : kS3Elements) {
    const auto table = decompose_phi_pullback(s3_spec(e));
    if (!table.permutation) return failed(s3_name(e) + " does not permute the traces");
    seen.insert(*table.permutation);
  }
  if (seen.size() != 6) return failed("only " + std::to_string(seen.size()) + " distinct permutations");
  const auto box = sl2z_box(5);
  for (const auto& mat : box) {
    const auto rep = s3_representative(mat);
    if (decompose_phi_pullback(s3_spec(rep)).permutation != parity_table(mat).permutation)
      return failed(s3_name(rep) + " does not match " + mat.to_string());
  }
  return {true, "6 permutations, " + std::to_string(box.size()) + " matrices classified"};
}

Verdict action_law() {
  const auto box = sl2z_box(2);
  std::string witness;
  for (const auto& a : box)
    for (const auto& b : box)
      if (!agree(compose(AutomorphismSpec::modular(a), AutomorphismSpec::modular(b)), AutomorphismSpec::modular(a * b),
                 4, witness))
        return failed("counterexample " + witness);
  return {true, std::to_string(box.size() * box.size()) + " pairs"};
}

Verdict canonical_relations() {
  std::string witness;
  std::vector<std::string> problems;
  const auto sigma = named(NamedMap::Sigma);
  const auto kappa = named(NamedMap::Kappa);
  if (!agree(compose(sigma, sigma), named(NamedMap::Flip), 4, witness)) problems.push_back("sigma^2: " + witness);

  const auto k3 = AutomorphismSpec::composite({kappa, kappa, kappa});
  if (!(apply(k3, NcElement::U()) == NcElement::U()) || !(apply(k3, NcElement::V()) == NcElement::V()))
    problems.push_back("kappa^3 moves a generator");

  Rng rng(20240611);
  const auto lhs = compose(kappa, sigma);
  const auto rhs = AutomorphismSpec::composite({sigma, kappa, kappa});
  int mismatches = 0;
  std::string first;
  for (int i = 0; i < 50; ++i) {
    const auto x = random_flip_invariant(rng);
    if (!(apply(lhs, x) == apply(rhs, x))) {
      if (mismatches++ == 0) {
        first = "x = " + x.to_string() + ": " + apply(lhs, x).to_string() + " != " + apply(rhs, x).to_string();
      }
    }
  }
  if (mismatches > 0)
    problems.push_back("kappa sigma != sigma kappa^2 on " + std::to_string(mismatches) + "/50 flip-invariant elements, " +
                       first);

  if (!agree(named(NamedMap::Gamma3), compose(named(NamedMap::Gamma1), named(NamedMap::Gamma2)), 4, witness))
    problems.push_back("gamma3: " + witness);

  const NamedMap torals[3] = {NamedMap::Gamma1, NamedMap::Gamma2, NamedMap::Gamma3};
  for (int g = 0; g < 3; ++g) {
    for (std::int64_t m = -5; m <= 5; ++m)
      for (std::int64_t n = -5; n <= 5; ++n) {
        const auto x = mono(m, n);
        for (int b = 0; b < 4; ++b) {
          const auto id = TraceId::from_index(b);
          const int exponent = g == 0 ? id.j : g == 1 ? id.k : id.j + id.k;
          const PhaseScalar expected = exponent % 2 ? -trace_value(id, x) : trace_value(id, x);
          if (!(trace_value(id, apply(named(torals[g]), x)) == expected)) {
            problems.push_back("sign table: gamma" + std::to_string(g + 1) + " on " + id.name());
            m = n = 6;
            break;
          }
        }
      }
  }

  if (problems.empty()) return {true, "all relations exact"};
  std::string detail;
  for (const auto& p : problems) detail += (detail.empty() ? "" : "; ") + p;
  return failed(detail);
}

Verdict flip_trace_identity() {
  Rng rng(20240612);
  for (int b = 0; b < 4; ++b) {
    const auto id = TraceId::from_index(b);
    for (int i = 0; i < 200; ++i) {
      const auto x = random_monomial(rng, 4), y = random_monomial(rng, 4);
      if (!phi_trace_identity_check(id, x, y)) return failed(id.name() + " at x = " + x.to_string() + ", y = " + y.to_string());
    }
  }
  return {true, "800 pairs"};
}

Verdict representation_matrices() {
  using M3 = std::array<std::array<Rational, 3>, 3>;
  auto make = [](std::array<std::array<int, 3>, 3> v) {
    M3 out;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) out[i][j] = v[i][j];
    return out;
  };
  // a, d even; a even, d odd
  if (!(rep_matrix(AutomorphismSpec::modular(0, -1, 1, 0)).m3 == make({{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}})))
    return failed("transposition matrix differs");
  if (!(rep_matrix(AutomorphismSpec::modular(2, 1, 1, 1)).m3 == make({{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}})))
    return failed("cyclic matrix differs");
  if (!(rep_matrix(named(NamedMap::Gamma1)).m3 == make({{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}})))
    return failed("gamma1 matrix differs");

  std::vector<AutomorphismSpec> specs;
  for (auto m : {NamedMap::Identity, NamedMap::Sigma, NamedMap::Kappa, NamedMap::Flip, NamedMap::Gamma1,
                 NamedMap::Gamma2, NamedMap::Gamma3})
    specs.push_back(named(m));
  for (const auto& mat : sl2z_box(5)) specs.push_back(AutomorphismSpec::modular(mat));
  int non_integer = 0;
  for (const auto& spec : specs) {
    const auto rep = rep_matrix(spec);
    if (!(rep.det3 == 1 || rep.det3 == -1)) return failed("det " + rational_to_string(rep.det3) + " for " + spec.to_string());
    if (!rep.half_integer_entries) return failed("non-half-integer entry for " + spec.to_string());
    if (rep.has_non_integer_entry) ++non_integer;
  }
  return {true, std::to_string(specs.size()) + " matrices, " + std::to_string(non_integer) + " with non-integer entries"};
}

Verdict oracle_equivalence() {
  const std::pair<std::int64_t, std::int64_t> thetas[] = {{1, 2}, {2, 5}, {5, 12}};
  double worst = 0.0;
  for (const auto& [p, q] : thetas) {
    for (auto id : {OracleIdentity::Multiplication, OracleIdentity::Adjoint, OracleIdentity::AutomorphismRelation,
                    OracleIdentity::AutomorphismHomomorphism, OracleIdentity::Tau}) {
      SweepConfig cfg;
      cfg.p = p;
      cfg.q = q;
      cfg.samples = 100;
      cfg.tolerance = 1e-10;
      cfg.seed = static_cast<std::uint64_t>(1000 * p + q);
      const auto rep = oracle_verify(id, cfg);
      worst = std::max(worst, rep.max_deviation);
      if (!rep.passed()) {
        std::ostringstream os;
        os << oracle_identity_name(id) << " at " << p << "/" << q << " deviates by " << rep.max_deviation;
        if (rep.witness) os << " (" << *rep.witness << ")";
        return failed(os.str());
      }
    }
  }
  std::ostringstream os;
  os << "max deviation " << worst;
  return {true, os.str()};
}

Verdict pr_lab() {
  const double theta = std::sqrt(2.0) - 1.0;
  const int grid = 1 << 14;
  const auto e = build_pr_projection(theta, theta, grid);
  const auto res = check_projection_identities(e);
  if (res.max() >= 1e-12) return failed("projection residual " + std::to_string(res.max()));
  const auto ch = pr_character(e);
  if (std::abs(ch.tau - theta) > 1e-8) return failed("tau = " + std::to_string(ch.tau));
  for (double v : ch.phi)
    if (half_integer_distance(v) > 1e-6) return failed("phi value " + std::to_string(v) + " is not a half-integer");

  const Toral which[3] = {Toral::Gamma1, Toral::Gamma2, Toral::Gamma3};
  for (int g = 0; g < 3; ++g) {
    const auto gc = pr_character(apply_toral(e, which[g]));
    for (int b = 0; b < 4; ++b) {
      const int exponent = g == 0 ? b / 2 : g == 1 ? b % 2 : b / 2 + b % 2;
      const double expected = (exponent % 2 ? -1.0 : 1.0) * ch.phi[static_cast<std::size_t>(b)];
      if (std::abs(gc.phi[static_cast<std::size_t>(b)] - expected) > 1e-8)
        return failed("toral sign pattern broken by gamma" + std::to_string(g + 1));
    }
  }

  const auto sym = build_orthogonal_symmetrization(theta, grid);
  if (sym.orthogonality_residual >= 1e-12) return failed("g Phi(g) residual " + std::to_string(sym.orthogonality_residual));
  const auto sc = pr_character(sym.e);
  for (double v : sc.phi)
    if (std::abs(v) > 1e-6) return failed("symmetrized phi value " + std::to_string(v));

  std::ostringstream os;
  os.precision(10);
  os << "residual " << res.max() << ", character (" << ch.tau << "; " << ch.phi[0] << ", " << ch.phi[1] << ", "
     << ch.phi[2] << ", " << ch.phi[3] << ")";
  return {true, os.str()};
}

struct Criterion {
  int number;
  const char* title;
  double time_limit;  // seconds, 0 for none
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "trace pullback table, closed form vs symbolic, entries in [-5,5]", 60.0, parity_table_exact},
      {2, "phi00 invariance over the same sweep", 0.0, phi00_invariance},
      {3, "S3 exhaustion and classification", 0.0, s3_classification},
      {4, "modular action law, entries in [-2,2], |m|,|n| <= 4", 0.0, action_law},
      {5, "canonical relations", 0.0, canonical_relations},
      {6, "Phi-trace identity, 200 monomial pairs per trace", 0.0, flip_trace_identity},
      {7, "representation matrices", 0.0, representation_matrices},
      {8, "clock-shift oracle at 1/2, 2/5, 5/12", 30.0, oracle_equivalence},
      {9, "Powers-Rieffel lab at sqrt(2)-1, grid 2^14", 20.0, pr_lab},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = failed(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (v.ok && c.time_limit > 0 && secs >= c.time_limit) {
      v = failed("took " + std::to_string(secs) + " s, limit " + std::to_string(c.time_limit) + " s");
    }
    if (!v.ok) ++failures;
    std::ostringstream line;
    line.precision(3);
    line << std::fixed << (v.ok ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.title << " [" << secs
         << " s] -- " << v.detail;
    std::cout << line.str() << "\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
