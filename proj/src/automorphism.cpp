#include "nctorus/automorphism.hpp"

#include <sstream>

namespace nct {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::int64_t parity_sign(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

NcElement apply_toral(bool negate_u, bool negate_v, const NcElement& x) {
  NcElement out;
  for (const auto& [mono, c] : x.terms()) {
    std::int64_t sign = 1;
    if (negate_u) sign *= parity_sign(mono.m);
    if (negate_v) sign *= parity_sign(mono.n);
    out.add_term(mono, sign > 0 ? c : -c);
  }
  return out;
}

void require_standard(const NcElement& x) {
  if (!(x.convention() == Convention{})) {
    throw ContextMismatch("automorphisms are defined for the standard convention t = e(i pi theta) only");
  }
}

}  // namespace

ModularMatrix ModularMatrix::make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  ModularMatrix m{a, b, c, d};
  if (m.determinant() != 1) {
    throw DeterminantError("determinant must be 1 (got " + std::to_string(m.determinant()) + " for " +
                           m.to_string() + ")");
  }
  return m;
}

ModularMatrix operator*(const ModularMatrix& x, const ModularMatrix& y) {
  // [a c; b d] * [a' c'; b' d']
  return {x.a * y.a + x.c * y.b, x.b * y.a + x.d * y.b, x.a * y.c + x.c * y.d, x.b * y.c + x.d * y.d};
}

std::string ModularMatrix::to_string() const {
  std::ostringstream os;
  os << "mod(" << a << "," << b << "," << c << "," << d << ")";
  return os.str();
}

std::vector<ModularMatrix> sl2z_box(std::int64_t bound) {
  std::vector<ModularMatrix> out;
  for (std::int64_t a = -bound; a <= bound; ++a)
    for (std::int64_t b = -bound; b <= bound; ++b)
      for (std::int64_t c = -bound; c <= bound; ++c)
        for (std::int64_t d = -bound; d <= bound; ++d)
          if (a * d - b * c == 1) out.push_back({a, b, c, d});
  return out;
}

std::string named_map_name(NamedMap m) {
  switch (m) {
    case NamedMap::Identity: return "id";
    case NamedMap::Sigma: return "sigma";
    case NamedMap::Kappa: return "kappa";
    case NamedMap::Flip: return "flip";
    case NamedMap::Gamma1: return "gamma1";
    case NamedMap::Gamma2: return "gamma2";
    case NamedMap::Gamma3: return "gamma3";
  }
  return "?";
}

std::optional<ModularMatrix> named_matrix(NamedMap m) {
  switch (m) {
    case NamedMap::Identity: return ModularMatrix::identity();
    case NamedMap::Sigma: return ModularMatrix{0, -1, 1, 0};   // U -> V^{-1}, V -> U
    case NamedMap::Kappa: return ModularMatrix{-1, 1, -1, 0};  // U -> t^{-1} U^{-1} V, V -> U^{-1}
    case NamedMap::Flip: return ModularMatrix{-1, 0, 0, -1};
    default: return std::nullopt;
  }
}

ValidationReport validate_automorphism(const NcElement& image_u, const NcElement& image_v) {
  const NcElement one(1);
  if (!(image_v * image_u == (image_u * image_v).scaled(PhaseScalar::t_power(2)))) {
    return {false, "commutation V'U' = t^2 U'V' fails"};
  }
  if (!(image_u * image_u.adjoint() == one) || !(image_u.adjoint() * image_u == one)) {
    return {false, "image of U is not unitary"};
  }
  if (!(image_v * image_v.adjoint() == one) || !(image_v.adjoint() * image_v == one)) {
    return {false, "image of V is not unitary"};
  }
  return {};
}

AutomorphismSpec AutomorphismSpec::custom(NcElement image_u, NcElement image_v) {
  require_standard(image_u);
  require_standard(image_v);
  if (auto report = validate_automorphism(image_u, image_v); !report.ok) {
    throw InvalidAutomorphism("invalid generator images: " + report.failed_identity);
  }
  return AutomorphismSpec(Custom{std::move(image_u), std::move(image_v)});
}

AutomorphismSpec AutomorphismSpec::composite(std::vector<AutomorphismSpec> parts) {
  if (parts.empty()) return named(NamedMap::Identity);
  if (parts.size() == 1) return std::move(parts.front());
  // Flatten nested composites so the part list reads left to right as written.
  std::vector<AutomorphismSpec> flat;
  for (auto& p : parts) {
    if (const auto* comp = std::get_if<Composite>(&p.v_)) {
      flat.insert(flat.end(), comp->parts.begin(), comp->parts.end());
    } else {
      flat.push_back(std::move(p));
    }
  }
  return AutomorphismSpec(Composite{std::move(flat)});
}

std::optional<ModularMatrix> AutomorphismSpec::as_modular() const {
  return std::visit(Overloaded{
                        [](const ModularMatrix& m) -> std::optional<ModularMatrix> { return m; },
                        [](NamedMap m) { return named_matrix(m); },
                        [](const Custom&) -> std::optional<ModularMatrix> { return std::nullopt; },
                        [](const Composite& c) -> std::optional<ModularMatrix> {
                          ModularMatrix acc = ModularMatrix::identity();
                          for (const auto& p : c.parts) {
                            auto m = p.as_modular();
                            if (!m) return std::nullopt;
                            acc = acc * *m;
                          }
                          return acc;
                        },
                    },
                    v_);
}

std::string AutomorphismSpec::to_string() const {
  return std::visit(Overloaded{
                        [](const ModularMatrix& m) { return m.to_string(); },
                        [](NamedMap m) { return named_map_name(m); },
                        [](const Custom& c) {
                          return "custom(" + c.image_u.to_string() + "; " + c.image_v.to_string() + ")";
                        },
                        [](const Composite& c) {
                          std::string out;
                          for (const auto& p : c.parts) {
                            if (!out.empty()) out += ".";
                            out += p.to_string();
                          }
                          return out;
                        },
                    },
                    v_);
}

std::pair<NcElement, NcElement> image_generators(const AutomorphismSpec& spec) {
  return std::visit(
      Overloaded{
          [](const ModularMatrix& m) {
            return std::pair{NcElement::monomial(m.a, m.b, PhaseScalar::t_power(m.a * m.b)),
                             NcElement::monomial(m.c, m.d, PhaseScalar::t_power(m.c * m.d))};
          },
          [](NamedMap m) {
            switch (m) {
              case NamedMap::Identity: return std::pair{NcElement::U(), NcElement::V()};
              case NamedMap::Sigma: return std::pair{NcElement::V(-1), NcElement::U()};
              case NamedMap::Kappa:
                return std::pair{NcElement::monomial(-1, 1, PhaseScalar::t_power(-1)), NcElement::U(-1)};
              case NamedMap::Flip: return std::pair{NcElement::U(-1), NcElement::V(-1)};
              case NamedMap::Gamma1: return std::pair{-NcElement::U(), NcElement::V()};
              case NamedMap::Gamma2: return std::pair{NcElement::U(), -NcElement::V()};
              case NamedMap::Gamma3: return std::pair{-NcElement::U(), -NcElement::V()};
            }
            throw std::logic_error("unknown named map");
          },
          [](const AutomorphismSpec::Custom& c) { return std::pair{c.image_u, c.image_v}; },
          [](const AutomorphismSpec::Composite& c) {
            NcElement u = NcElement::U();
            NcElement v = NcElement::V();
            for (auto it = c.parts.rbegin(); it != c.parts.rend(); ++it) {
              u = apply(*it, u);
              v = apply(*it, v);
            }
            return std::pair{u, v};
          },
      },
      spec.variant());
}

NcElement apply_modular_monomial(const ModularMatrix& mat, const Monomial& v) {
  const auto [a, b, c, d] = mat;
  const std::int64_t phase = a * b * v.m * v.m + c * d * v.n * v.n + 2 * b * c * v.m * v.n;
  return NcElement::monomial(a * v.m + c * v.n, b * v.m + d * v.n, PhaseScalar::t_power(phase));
}

NcElement apply_by_generators(const NcElement& image_u, const NcElement& image_v, const NcElement& x) {
  NcElement out;
  for (const auto& [mono, coeff] : x.terms()) {
    NcElement pu = image_u.is_unit_monomial() ? nc_power(image_u, mono.m) : repeated_power(image_u, mono.m);
    NcElement pv = image_v.is_unit_monomial() ? nc_power(image_v, mono.n) : repeated_power(image_v, mono.n);
    out += (pu * pv).scaled(coeff);
  }
  return out;
}

NcElement apply(const AutomorphismSpec& spec, const NcElement& x) {
  require_standard(x);
  return std::visit(Overloaded{
                        [&](const ModularMatrix& m) {
                          NcElement out;
                          for (const auto& [mono, coeff] : x.terms()) {
                            out += apply_modular_monomial(m, mono).scaled(coeff);
                          }
                          return out;
                        },
                        [&](NamedMap m) {
                          switch (m) {
                            case NamedMap::Gamma1: return apply_toral(true, false, x);
                            case NamedMap::Gamma2: return apply_toral(false, true, x);
                            case NamedMap::Gamma3: return apply_toral(true, true, x);
                            default: return apply(AutomorphismSpec::modular(*named_matrix(m)), x);
                          }
                        },
                        [&](const AutomorphismSpec::Custom& c) {
                          return apply_by_generators(c.image_u, c.image_v, x);
                        },
                        [&](const AutomorphismSpec::Composite& c) {
                          NcElement out = x;
                          for (auto it = c.parts.rbegin(); it != c.parts.rend(); ++it) out = apply(*it, out);
                          return out;
                        },
                    },
                    spec.variant());
}

AutomorphismSpec compose(const AutomorphismSpec& outer, const AutomorphismSpec& inner) {
  return AutomorphismSpec::composite({outer, inner});
}

bool commutes_with_flip(const AutomorphismSpec& spec) {
  const auto [u, v] = image_generators(spec);
  // alpha(Phi(U)) = alpha(U^{-1}) = alpha(U)^*
  return u.adjoint() == u.flip() && v.adjoint() == v.flip();
}

}  // namespace nct
