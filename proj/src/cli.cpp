#include "nctorus/cli.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "nctorus/automorphism.hpp"
#include "nctorus/parse.hpp"
#include "nctorus/pr_lab.hpp"
#include "nctorus/serialize.hpp"
#include "nctorus/traces.hpp"
#include "nctorus/verify.hpp"

namespace nct {

namespace {

// Raised for failed checks that should exit with 1.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::optional<std::int64_t> a, b, c, d;
  std::optional<std::string> spec;
  std::optional<std::string> element;
  std::optional<double> theta;
  std::optional<double> theta_prime;
  int grid = 1 << 14;
  std::string suite = "all";
  std::optional<std::string> toral;
  bool aux = false;
  bool orthogonal = false;
  std::uint64_t seed = 20240611;
  bool json = false;
};

const char* kPhiNames[4] = {"phi00", "phi01", "phi10", "phi11"};

AutomorphismSpec automorphism_from(const Options& o) {
  const bool any_entry = o.a || o.b || o.c || o.d;
  if (any_entry && o.spec) throw UsageError("give either -a -b -c -d or --spec, not both");
  if (any_entry) {
    if (!(o.a && o.b && o.c && o.d)) throw UsageError("matrix needs all of -a -b -c -d");
    return AutomorphismSpec::modular(*o.a, *o.b, *o.c, *o.d);
  }
  if (o.spec) return parse_spec(*o.spec);
  throw UsageError("an automorphism is required (-a -b -c -d or --spec)");
}

NcElement element_from(const Options& o) {
  if (!o.element) throw UsageError("--element is required");
  return parse_element(*o.element);
}

std::optional<S3Element> match_s3(const TraceTable& table) {
  if (!table.permutation) return std::nullopt;
  for (auto e : kS3Elements) {
    const auto t = decompose_phi_pullback(s3_spec(e), 1);
    if (t.permutation == table.permutation) return e;
  }
  return std::nullopt;
}

TraceTable table_for(const AutomorphismSpec& spec) {
  if (auto mat = spec.as_modular()) return parity_table(*mat);
  return decompose_phi_pullback(spec);
}

std::string row_text(const std::array<PhaseScalar, 4>& row) {
  std::string s;
  for (int b = 0; b < 4; ++b) {
    if (row[static_cast<std::size_t>(b)].is_zero()) continue;
    if (!s.empty()) s += " + ";
    const auto& c = row[static_cast<std::size_t>(b)];
    s += c.is_one() ? std::string(kPhiNames[b]) : "(" + c.to_string() + ") " + kPhiNames[b];
  }
  return s.empty() ? "0" : s;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_table(const Options& o, std::ostream& out) {
  const auto spec = automorphism_from(o);
  const auto table = table_for(spec);
  const auto s3 = match_s3(table);
  std::optional<std::string> s3_label;
  if (s3) s3_label = s3_name(*s3);
  if (o.json) {
    emit_json(out, to_json(table, s3_label));
    return kExitOk;
  }
  out << "automorphism " << spec.to_string() << "\n";
  for (int row = 0; row < 4; ++row)
    out << "  " << kPhiNames[row] << " o alpha = " << row_text(table.rows[static_cast<std::size_t>(row)]) << "\n";
  out << "permutation " << (table.permutation ? table.permutation_string() : "none") << "\n";
  out << "s3 " << s3_label.value_or("none") << "\n";
  return kExitOk;
}

int cmd_s3(const Options& o, std::ostream& out) {
  const auto spec = automorphism_from(o);
  std::string label;
  TraceTable table;
  if (auto mat = spec.as_modular()) {
    table = parity_table(*mat);
    label = s3_name(s3_representative(*mat));
  } else {
    table = decompose_phi_pullback(spec);
    const auto s3 = match_s3(table);
    if (!s3) throw VerificationFailure("pullback of " + spec.to_string() + " is not an S3 permutation");
    label = s3_name(*s3);
  }
  if (o.json) {
    emit_json(out, Json{{"spec", spec.to_string()}, {"s3", label}, {"permutation", table.permutation_string()}});
  } else {
    out << spec.to_string() << " ~ " << label << "  (" << table.permutation_string() << ")\n";
  }
  return kExitOk;
}

int cmd_repmat(const Options& o, std::ostream& out) {
  const auto spec = automorphism_from(o);
  const auto rep = rep_matrix(spec);
  if (o.json) {
    emit_json(out, to_json(rep));
    return kExitOk;
  }
  out << "M(" << spec.to_string() << ") on (phi01, phi10, phi11):\n";
  for (const auto& row : rep.m3) {
    out << "  [";
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? ", " : "") << std::setw(4) << rational_to_string(row[i]);
    out << "]\n";
  }
  out << "det " << rational_to_string(rep.det3) << "\n";
  if (!rep.phi00_fixed) out << "note: phi00 is not fixed\n";
  if (rep.has_non_integer_entry) out << "note: non-integer entries present\n";
  return kExitOk;
}

int cmd_orbit(const Options& o, std::ostream& out) {
  const auto x = element_from(o);
  Json arr = Json::array();
  for (auto e : kS3Elements) {
    const auto image = apply(s3_spec(e), x);
    if (o.json) {
      arr.push_back(Json{{"spec", s3_name(e)}, {"image", to_json(image)}});
    } else {
      out << std::left << std::setw(18) << s3_name(e) << image.to_string() << "\n";
    }
  }
  if (o.json) emit_json(out, arr);
  return kExitOk;
}

int cmd_apply(const Options& o, std::ostream& out) {
  const auto spec = automorphism_from(o);
  const auto x = element_from(o);
  const auto y = apply(spec, x);
  if (o.json) {
    emit_json(out, Json{{"spec", spec.to_string()}, {"input", to_json(x)}, {"image", to_json(y)}});
  } else {
    out << y.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_chern(const Options& o, std::ostream& out) {
  const auto x = element_from(o);
  const auto ch = chern(x);
  if (o.json) {
    emit_json(out, to_json(ch, o.theta));
    return kExitOk;
  }
  out << "tau   = " << ch.tau.to_string();
  if (o.theta) out << "   ~ " << ch.tau.evaluate(*o.theta);
  out << "\n";
  for (int b = 0; b < 4; ++b) {
    out << kPhiNames[b] << " = " << ch.phi[static_cast<std::size_t>(b)].to_string();
    if (o.theta) out << "   ~ " << ch.phi[static_cast<std::size_t>(b)].evaluate(*o.theta);
    out << "\n";
  }
  return kExitOk;
}

std::optional<Toral> parse_toral(const std::string& s) {
  if (s == "gamma1") return Toral::Gamma1;
  if (s == "gamma2") return Toral::Gamma2;
  if (s == "gamma3") return Toral::Gamma3;
  return std::nullopt;
}

int cmd_pr(const Options& o, std::ostream& out) {
  const double theta = o.theta.value_or(std::sqrt(2.0) - 1.0);
  PRProjection e;
  std::optional<double> orth_residual;
  if (o.orthogonal) {
    if (o.theta_prime || o.aux) throw UsageError("--orthogonal picks its own trace; drop --theta-prime/--aux");
    auto sym = build_orthogonal_symmetrization(theta, o.grid);
    orth_residual = sym.orthogonality_residual;
    e = std::move(sym.e);
  } else {
    double target = o.theta_prime.value_or(theta);
    if (o.aux) target = auxiliary_trace_target(target);
    e = build_pr_projection(theta, target, o.grid);
  }
  if (o.toral) {
    const auto which = parse_toral(*o.toral);
    if (!which) throw UsageError("--toral must be gamma1, gamma2 or gamma3");
    e = apply_toral(e, *which);
  }
  const auto res = check_projection_identities(e);
  NumericCharacter ch;
  try {
    ch = pr_character(e);
  } catch (const std::runtime_error& ex) {
    throw VerificationFailure(ex.what());
  }
  if (o.json) {
    Json j = pr_report_json(e, res, ch);
    if (orth_residual) j["orthogonality_residual"] = *orth_residual;
    emit_json(out, j);
    return kExitOk;
  }
  out << std::setprecision(12);
  out << "theta " << e.theta << "  theta' " << e.theta_prime << "  grid " << e.grid_size << "  shift V^" << e.shift_power
      << "\n";
  out << "residuals: isometry " << res.isometry << ", overlap " << res.support_overlap << ", quadratic "
      << res.quadratic << ", flip " << res.flip_symmetry << ", adjoint " << res.adjoint_symmetry << "\n";
  if (orth_residual) out << "g Phi(g) residual " << *orth_residual << "\n";
  out << "character (" << ch.tau;
  for (double v : ch.phi) out << "; " << v;
  out << ")\n";
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto suite = parse_suite(o.suite);
  if (!suite) throw UsageError("unknown suite '" + o.suite + "'");
  const auto results = run_suite(*suite, o.seed);
  const bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
  if (o.json) {
    Json arr = Json::array();
    for (const auto& r : results)
      arr.push_back(Json{{"suite", r.suite}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    emit_json(out, Json{{"passed", ok}, {"checks", arr}});
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "ok   " : "FAIL ") << "[" << r.suite << "] " << r.name;
      if (!r.detail.empty()) out << " -- " << r.detail;
      out << "\n";
    }
    out << (ok ? "all checks passed" : "verification FAILED") << "\n";
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

void add_automorphism_flags(CLI::App* sub, Options& o) {
  sub->add_option("-a", o.a, "matrix entry a (image of U is U^a V^b)");
  sub->add_option("-b", o.b, "matrix entry b");
  sub->add_option("-c", o.c, "matrix entry c (image of V is U^c V^d)");
  sub->add_option("-d", o.d, "matrix entry d");
  sub->add_option("--spec", o.spec, "automorphism, e.g. mod(0,-1,1,0).kappa");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic and trace tables for the rotation algebra", "nctorus"};
  app.require_subcommand(1);
  Options o;

  auto* table = app.add_subcommand("table", "pullback table of the four phi traces");
  auto* s3 = app.add_subcommand("s3", "S3 class of an automorphism");
  auto* repmat = app.add_subcommand("repmat", "3x3 representation matrix");
  auto* orbit = app.add_subcommand("orbit", "the six S3 images of an element");
  auto* apply_cmd = app.add_subcommand("apply", "apply an automorphism to an element");
  auto* chern_cmd = app.add_subcommand("chern", "trace character of an element");
  auto* pr = app.add_subcommand("pr", "numerical Powers-Rieffel projection");
  auto* verify = app.add_subcommand("verify", "run property suites");

  for (auto* sub : {table, s3, repmat, apply_cmd}) add_automorphism_flags(sub, o);
  for (auto* sub : {orbit, apply_cmd, chern_cmd}) sub->add_option("--element", o.element, "element literal");
  chern_cmd->add_option("--theta", o.theta, "evaluate at this theta");
  pr->add_option("--theta", o.theta, "rotation angle (default sqrt(2)-1)");
  pr->add_option("--theta-prime", o.theta_prime, "target trace (default theta)");
  pr->add_option("--grid", o.grid, "sample count, a power of two >= 4096");
  pr->add_option("--toral", o.toral, "apply gamma1, gamma2 or gamma3 first");
  pr->add_flag("--aux", o.aux, "use the auxiliary trace 2(3 theta' - 1)");
  pr->add_flag("--orthogonal", o.orthogonal, "build g + Phi(g) with g Phi(g) = 0");
  verify->add_option("--suite", o.suite, "ring|auto|traces|lemma21|oracle|pr|all");
  verify->add_option("--seed", o.seed, "seed for random sweeps");
  for (auto* sub : {table, s3, repmat, orbit, apply_cmd, chern_cmd, pr, verify})
    sub->add_flag("--json", o.json, "JSON output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (table->parsed()) return cmd_table(o, out);
    if (s3->parsed()) return cmd_s3(o, out);
    if (repmat->parsed()) return cmd_repmat(o, out);
    if (orbit->parsed()) return cmd_orbit(o, out);
    if (apply_cmd->parsed()) return cmd_apply(o, out);
    if (chern_cmd->parsed()) return cmd_chern(o, out);
    if (pr->parsed()) return cmd_pr(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const DecompositionError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const RepresentationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const std::invalid_argument& e) {
    // ParseError, DeterminantError, InvalidAutomorphism, InfeasibleGeometry, UsageError
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitUsage;
}

}  // namespace nct
