#include "nctorus/traces.hpp"

#include <mutex>

namespace nct {

namespace {

int mod2(std::int64_t x) { return static_cast<int>(((x % 2) + 2) % 2); }

const char* kBasisLabel[4] = {"00", "01", "10", "11"};

Rational require_rational(const PhaseScalar& s, const char* what) {
  auto r = s.as_rational();
  if (!r) throw RepresentationError(std::string(what) + " has a non-rational entry " + s.to_string());
  return *r;
}

}  // namespace

TraceId TraceId::phi(std::int64_t m, std::int64_t n) { return {Kind::Phi, mod2(m), mod2(n)}; }

std::string TraceId::name() const {
  if (kind == Kind::Tau) return "tau";
  return std::string("phi") + kBasisLabel[index()];
}

PhaseScalar tau(const NcElement& x) { return x.coefficient(0, 0); }

PhaseScalar phi(int j, int k, const NcElement& x) {
  PhaseScalar out;
  for (const auto& [mono, c] : x.terms()) {
    if (divisor_delta(mono.m - j) && divisor_delta(mono.n - k)) out += c.shifted(-mono.m * mono.n);
  }
  return out;
}

PhaseScalar trace_value(const TraceId& id, const NcElement& x) {
  return id.kind == TraceId::Kind::Tau ? tau(x) : phi(id.j, id.k, x);
}

CharacterVector chern(const NcElement& x) {
  CharacterVector v;
  v.tau = tau(x);
  for (int b = 0; b < 4; ++b) v.phi[b] = phi(b / 2, b % 2, x);
  return v;
}

bool phi_trace_identity_check(const TraceId& id, const NcElement& x, const NcElement& y) {
  return trace_value(id, x * y) == trace_value(id, y.flip() * x);
}

std::string TraceTable::permutation_string() const {
  if (!permutation) return {};
  std::string out;
  for (int i = 0; i < 3; ++i) {
    if (i) out += ",";
    out += kBasisLabel[i + 1];
    out += "→";
    out += kBasisLabel[(*permutation)[i]];
  }
  return out;
}

TraceTable TraceTable::from_permutation(const std::array<int, 3>& perm) {
  TraceTable t;
  t.rows[0][0] = 1;
  for (int i = 0; i < 3; ++i) t.rows[i + 1][perm[i]] = 1;
  t.permutation = perm;
  return t;
}

void detect_permutation(TraceTable& table) {
  table.permutation.reset();
  auto single = [&](int row) -> int {
    int hit = -1;
    for (int b = 0; b < 4; ++b) {
      const auto& c = table.rows[row][b];
      if (c.is_zero()) continue;
      if (!c.is_one() || hit != -1) return -1;
      hit = b;
    }
    return hit;
  };
  if (single(0) != 0) return;
  std::array<int, 3> perm{};
  bool seen[4] = {true, false, false, false};
  for (int i = 0; i < 3; ++i) {
    const int target = single(i + 1);
    if (target <= 0 || seen[target]) return;
    seen[target] = true;
    perm[i] = target;
  }
  table.permutation = perm;
}

TraceTable decompose_phi_pullback(const AutomorphismSpec& spec, int radius) {
  if (!commutes_with_flip(spec)) {
    throw InvalidAutomorphism("pullback decomposition requires a flip-commuting automorphism: " + spec.to_string());
  }
  TraceTable table;
  // Coefficient of phi_{mn} in phi_jk o alpha is phi_jk(alpha(U^m V^n)) t^{mn}, (m,n) in {0,1}^2.
  for (int b = 0; b < 4; ++b) {
    const std::int64_t m = b / 2, n = b % 2;
    const NcElement image = apply(spec, NcElement::monomial(m, n));
    for (int row = 0; row < 4; ++row) table.rows[row][b] = phi(row / 2, row % 2, image).shifted(m * n);
  }
  for (std::int64_t m = -radius; m <= radius; ++m) {
    for (std::int64_t n = -radius; n <= radius; ++n) {
      const NcElement image = apply(spec, NcElement::monomial(m, n));
      const int b = 2 * mod2(m) + mod2(n);
      for (int row = 0; row < 4; ++row) {
        const PhaseScalar lhs = phi(row / 2, row % 2, image);
        const PhaseScalar rhs = table.rows[row][b].shifted(-m * n);
        if (!(lhs == rhs)) {
          throw DecompositionError("phi" + std::string(kBasisLabel[row]) + " o " + spec.to_string() +
                                       " is not in the span of the basic Phi-traces at U^" + std::to_string(m) +
                                       " V^" + std::to_string(n),
                                   {m, n});
        }
      }
    }
  }
  table.checked_radius = radius;
  detect_permutation(table);
  return table;
}

TraceTable parity_table(const ModularMatrix& mat) {
  const auto [a, b, c, d] = mat;
  std::optional<std::array<int, 3>> agreed;
  for (int which = 0; which < 4; ++which) {
    const std::int64_t entry = which == 0 ? a : which == 1 ? b : which == 2 ? c : d;
    if (!divisor_delta(entry)) continue;
    std::array<int, 3> perm{};
    for (int i = 0; i < 3; ++i) {
      const std::int64_t j = (i + 1) / 2, k = (i + 1) % 2;
      TraceId image;
      switch (which) {
        case 0: image = TraceId::phi(k - d * j, j); break;  // a even
        case 1: image = TraceId::phi(j - c * k, k); break;  // b even
        case 2: image = TraceId::phi(j, k - b * j); break;  // c even
        default: image = TraceId::phi(k, j - a * k); break; // d even
      }
      perm[i] = image.index();
    }
    if (agreed && *agreed != perm) {
      throw std::logic_error("parity cases disagree for " + mat.to_string());
    }
    agreed = perm;
  }
  if (!agreed) throw std::logic_error("no even entry in " + mat.to_string() + "; determinant cannot be 1");
  return TraceTable::from_permutation(*agreed);
}

std::string s3_name(S3Element e) {
  switch (e) {
    case S3Element::Identity: return "id";
    case S3Element::Sigma: return "sigma";
    case S3Element::Kappa: return "kappa";
    case S3Element::Kappa2: return "kappa.kappa";
    case S3Element::SigmaKappa: return "sigma.kappa";
    case S3Element::SigmaKappa2: return "sigma.kappa.kappa";
  }
  return "?";
}

AutomorphismSpec s3_spec(S3Element e) {
  const auto sigma = AutomorphismSpec::named(NamedMap::Sigma);
  const auto kappa = AutomorphismSpec::named(NamedMap::Kappa);
  switch (e) {
    case S3Element::Identity: return AutomorphismSpec::named(NamedMap::Identity);
    case S3Element::Sigma: return sigma;
    case S3Element::Kappa: return kappa;
    case S3Element::Kappa2: return AutomorphismSpec::composite({kappa, kappa});
    case S3Element::SigmaKappa: return AutomorphismSpec::composite({sigma, kappa});
    case S3Element::SigmaKappa2: return AutomorphismSpec::composite({sigma, kappa, kappa});
  }
  throw std::logic_error("unknown S3 element");
}

S3Element s3_representative(const ModularMatrix& mat) {
  static std::once_flag once;
  static std::array<std::array<int, 3>, 6> perms;
  std::call_once(once, [] {
    for (std::size_t i = 0; i < kS3Elements.size(); ++i) {
      auto table = decompose_phi_pullback(s3_spec(kS3Elements[i]));
      if (!table.permutation) throw std::logic_error("S3 element " + s3_name(kS3Elements[i]) + " is not a permutation");
      perms[i] = *table.permutation;
    }
  });
  const auto target = *parity_table(mat).permutation;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    if (perms[i] == target) return kS3Elements[i];
  }
  throw std::logic_error("no S3 representative matches " + mat.to_string());
}

std::array<std::array<Rational, 3>, 3> multiply(const std::array<std::array<Rational, 3>, 3>& x,
                                                const std::array<std::array<Rational, 3>, 3>& y) {
  std::array<std::array<Rational, 3>, 3> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rational s = 0;
      for (int k = 0; k < 3; ++k) s += x[i][k] * y[k][j];
      out[i][j] = s;
    }
  return out;
}

RepMatrix rep_matrix(const TraceTable& table) {
  RepMatrix rep;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      rep.m4[i][j] = require_rational(table.rows[i][j], "trace table");
      if (!is_half_integer(rep.m4[i][j])) rep.half_integer_entries = false;
      if (!is_integer(rep.m4[i][j])) rep.has_non_integer_entry = true;
    }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) rep.m3[i][j] = rep.m4[i + 1][j + 1];
  rep.phi00_fixed = rep.m4[0][0] == 1 && sgn(rep.m4[0][1]) == 0 && sgn(rep.m4[0][2]) == 0 && sgn(rep.m4[0][3]) == 0;
  rep.subspace_invariant = sgn(rep.m4[1][0]) == 0 && sgn(rep.m4[2][0]) == 0 && sgn(rep.m4[3][0]) == 0;
  const auto& m = rep.m3;
  rep.det3 = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
             m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  if (!(rep.det3 == 1 || rep.det3 == -1)) {
    throw RepresentationError("representation matrix has determinant " + rational_to_string(rep.det3) +
                              ", expected +-1");
  }
  return rep;
}

RepMatrix rep_matrix(const AutomorphismSpec& spec) { return rep_matrix(decompose_phi_pullback(spec)); }

}  // namespace nct
