#include "nctorus/serialize.hpp"

#include <stdexcept>

namespace nct {

namespace {

const char* kPhiKeys[4] = {"phi00", "phi01", "phi10", "phi11"};

Json complex_json(std::complex<double> z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

}  // namespace

Json to_json(const PhaseScalar& s) {
  Json arr = Json::array();
  for (const auto& [k, c] : s.terms()) {
    arr.push_back({{"k", k}, {"re", rational_to_string(c.re())}, {"im", rational_to_string(c.im())}});
  }
  return arr;
}

PhaseScalar phase_scalar_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("PhaseScalar JSON must be an array");
  PhaseScalar s;
  for (const auto& term : j) {
    s += PhaseScalar::monomial(term.at("k").get<std::int64_t>(),
                               GaussianRational(parse_rational(term.at("re").get<std::string>()),
                                                parse_rational(term.at("im").get<std::string>())));
  }
  return s;
}

Json to_json(const NcElement& x) {
  Json arr = Json::array();
  for (const auto& [mono, c] : x.terms()) arr.push_back({{"m", mono.m}, {"n", mono.n}, {"coeff", to_json(c)}});
  return arr;
}

NcElement element_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("element JSON must be an array");
  NcElement x;
  for (const auto& term : j) {
    x.add_term({term.at("m").get<std::int64_t>(), term.at("n").get<std::int64_t>()},
               phase_scalar_from_json(term.at("coeff")));
  }
  return x;
}

Json to_json(const TraceTable& table, const std::optional<std::string>& s3) {
  Json out;
  for (int row = 0; row < 4; ++row) {
    Json coeffs = Json::array();
    for (int b = 0; b < 4; ++b) coeffs.push_back(to_json(table.rows[row][b]));
    out[kPhiKeys[row]] = coeffs;
  }
  out["permutation"] = table.permutation ? Json(table.permutation_string()) : Json(nullptr);
  out["s3"] = s3 ? Json(*s3) : Json(nullptr);
  return out;
}

TraceTable trace_table_from_json(const Json& j) {
  TraceTable t;
  for (int row = 0; row < 4; ++row) {
    const auto& coeffs = j.at(kPhiKeys[row]);
    if (!coeffs.is_array() || coeffs.size() != 4) throw std::invalid_argument("trace table row needs 4 coefficients");
    for (int b = 0; b < 4; ++b) t.rows[row][b] = phase_scalar_from_json(coeffs[static_cast<std::size_t>(b)]);
  }
  detect_permutation(t);
  return t;
}

Json to_json(const CharacterVector& v, std::optional<double> theta) {
  Json out;
  out["tau"] = to_json(v.tau);
  for (int b = 0; b < 4; ++b) out[kPhiKeys[b]] = to_json(v.phi[b]);
  if (theta) {
    Json numeric;
    numeric["theta"] = *theta;
    numeric["tau"] = complex_json(v.tau.evaluate(*theta));
    for (int b = 0; b < 4; ++b) numeric[kPhiKeys[b]] = complex_json(v.phi[b].evaluate(*theta));
    out["numeric"] = numeric;
  }
  return out;
}

Json to_json(const RepMatrix& rep) {
  Json m3 = Json::array();
  for (const auto& row : rep.m3) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(rational_to_string(e));
    m3.push_back(r);
  }
  Json m4 = Json::array();
  for (const auto& row : rep.m4) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(rational_to_string(e));
    m4.push_back(r);
  }
  return Json{{"basis", {"phi01", "phi10", "phi11"}},
              {"matrix", m3},
              {"extended", m4},
              {"determinant", rational_to_string(rep.det3)},
              {"half_integer_entries", rep.half_integer_entries},
              {"has_non_integer_entry", rep.has_non_integer_entry},
              {"phi00_fixed", rep.phi00_fixed},
              {"subspace_invariant", rep.subspace_invariant}};
}

Json to_json(const OracleReport& report) {
  Json out{{"identity", report.identity},
           {"p", report.p},
           {"q", report.q},
           {"samples", report.samples},
           {"max_deviation", report.max_deviation}};
  if (report.witness) out["witness"] = *report.witness;
  return out;
}

Json pr_report_json(const PRProjection& e, const ResidualReport& residuals, const NumericCharacter& character) {
  Json out;
  out["theta"] = e.theta;
  out["theta_prime"] = e.theta_prime;
  out["grid_size"] = e.grid_size;
  out["shift_power"] = e.shift_power;
  out["residuals"] = {{"isometry", residuals.isometry},
                      {"support_overlap", residuals.support_overlap},
                      {"quadratic", residuals.quadratic},
                      {"flip_symmetry", residuals.flip_symmetry},
                      {"adjoint_symmetry", residuals.adjoint_symmetry}};
  Json ch{{"tau", character.tau}, {"max_imaginary", character.max_imaginary}};
  Json dist;
  for (int b = 0; b < 4; ++b) {
    ch[kPhiKeys[b]] = character.phi[static_cast<std::size_t>(b)];
    dist[kPhiKeys[b]] = half_integer_distance(character.phi[static_cast<std::size_t>(b)]);
  }
  out["character"] = ch;
  out["half_integer_distances"] = dist;
  return out;
}

}  // namespace nct
