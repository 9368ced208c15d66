#include "agc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "agc/feasibility.hpp"
#include "agc/galois_invariants.hpp"
#include "agc/local_models.hpp"
#include "agc/monodromy.hpp"
#include "agc/surface_invariants.hpp"

namespace agc::cli {

namespace {

using json = nlohmann::ordered_json;

json big_json(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json rat_json(const BigRational& q) {
  return json{{"num", big_json(q.get_num())}, {"den", big_json(q.get_den())}};
}

/// Integer fields that are rational only formally (N!-divisibility).
json int_or_rat_json(const BigRational& q) {
  if (is_integral(q)) return big_json(q.get_num());
  return rat_json(q);
}

std::string rat_str(const BigRational& q) {
  if (is_integral(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string json_value_str(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_object() && v.contains("num") && v.contains("den")) {
    const json& den = v.at("den");
    std::string num_s = v.at("num").is_string()
                            ? v.at("num").get<std::string>()
                            : v.at("num").dump();
    if (den.is_number_integer() && den.get<long long>() == 1) return num_s;
    return num_s + "/" + (den.is_string() ? den.get<std::string>() : den.dump());
  }
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void print_table(const json& obj, std::ostream& out) {
  size_t width = 0;
  for (const auto& [key, value] : obj.items()) width = std::max(width, key.size());
  for (const auto& [key, value] : obj.items()) {
    out << std::left << std::setw(static_cast<int>(width) + 2) << key
        << json_value_str(value) << "\n";
  }
}

void emit(const json& obj, const std::string& format, std::ostream& out) {
  if (format == "table") {
    print_table(obj, out);
  } else {
    out << obj.dump(2) << "\n";
  }
}

SingularProfile load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::ios_base::failure("cannot open profile file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return profile_from_json_text(buffer.str());
}

int require_valid(const SingularProfile& p, std::ostream& err) {
  const auto violations = validate_profile(p);
  if (violations.empty()) return kExitOk;
  err << "invalid profile:";
  for (const auto& v : violations) err << " " << v;
  err << "\n";
  return kExitValidation;
}

json invariant_report_json(const InvariantReport& r) {
  json j;
  j["genus_B"] = big_json(r.genus_B);
  j["dual_degree"] = big_json(r.dual_degree);
  j["R_square"] = big_json(r.R_square);
  j["K_square"] = big_json(r.K_square);
  j["euler_X"] = big_json(r.euler_X);
  j["chi_OX"] = rat_json(r.chi_OX);
  j["chi_integral"] = r.chi_integral;
  j["noether_ok"] = r.noether_ok;
  j["hodge_bound"] = r.hodge_bound ? rat_json(*r.hodge_bound) : json(nullptr);
  j["hodge_ok"] = r.hodge_ok ? json(*r.hodge_ok) : json(nullptr);
  return j;
}

json galois_report_json(const GaloisReport& r) {
  json j;
  j["S_sing"] = int_or_rat_json(r.S_sing);
  j["M_printed"] = int_or_rat_json(r.M_printed);
  j["M_chain"] = int_or_rat_json(r.M_chain);
  j["e_presing_printed"] = rat_json(r.e_presing_printed);
  j["e_presing_chain"] = rat_json(r.e_presing_chain);
  j["KZ_square"] = big_json(r.KZ_square);
  j["eZ_closed"] = rat_json(r.eZ_closed);
  j["eZ_assembled"] = rat_json(r.eZ_assembled);
  j["chiZ_from_assembled"] = rat_json(r.chiZ_from_assembled);
  j["chiZ_from_assembled_integral"] = r.chiZ_from_assembled_integral;
  j["chiZ_from_closed"] = rat_json(r.chiZ_from_closed);
  j["chiZ_from_closed_integral"] = r.chiZ_from_closed_integral;
  j["discrepancy_flags"] = r.discrepancy_flags;
  return j;
}

json constraint_report_json(const ConstraintReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back(
        json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return json{{"admissible", r.admissible()}, {"checks", checks}};
}

json poly_json(const BivariatePolynomial& p) {
  return json::parse(p.to_json_text());
}

int run_invariants(const std::string& path, const std::string& format,
                   std::ostream& out, std::ostream& err) {
  const SingularProfile p = load_profile(path);
  if (int rc = require_valid(p, err); rc != kExitOk) return rc;
  emit(invariant_report_json(make_invariant_report(p)), format, out);
  return kExitOk;
}

int run_galois(const std::string& path, const std::string& format,
               std::ostream& out, std::ostream& err) {
  const SingularProfile p = load_profile(path);
  if (int rc = require_valid(p, err); rc != kExitOk) return rc;
  const json j = galois_report_json(make_galois_report(p));
  if (format == "table") {
    json flat = j;
    flat["discrepancy_flags"] = j["discrepancy_flags"].dump();
    print_table(flat, out);
  } else {
    out << j.dump(2) << "\n";
  }
  return kExitOk;
}

int run_check(const std::string& path, const std::string& format,
              std::ostream& out) {
  const SingularProfile p = load_profile(path);
  const ConstraintReport report = check_constraints(p);
  if (format == "table") {
    for (const auto& c : report.checks) {
      out << std::left << std::setw(22) << c.name
          << (c.passed ? "pass  " : "FAIL  ") << c.detail << "\n";
    }
    out << "admissible: " << (report.admissible() ? "yes" : "no") << "\n";
  } else {
    emit(constraint_report_json(report), format, out);
  }
  return report.admissible() ? kExitOk : kExitValidation;
}

int run_enumerate(const EnumerationQuery& q, const std::string& format,
                  std::ostream& out) {
  const auto results = enumerate_profiles(q);
  for (const auto& r : results) {
    if (format == "table") {
      out << profile_to_json_text(r.profile) << "  admissible\n";
    } else {
      json line;
      line["profile"] = json::parse(profile_to_json_text(r.profile));
      line["admissible"] = r.report.admissible();
      json checks;
      for (const auto& c : r.report.checks) checks[c.name] = c.passed;
      line["checks"] = checks;
      out << line.dump() << "\n";
    }
  }
  return kExitOk;
}

int run_local_model(long n, bool verify, const std::string& format,
                    std::ostream& out) {
  const CoverGerm germ(n);
  const BivariatePolynomial jac = jacobian_ramification(germ);
  const DiscriminantResult disc = discriminant_curve(n);
  const GermClassification cls = classify_branch_germ(n);

  json j;
  j["n"] = n;
  j["jacobian"] = poly_json(jac);
  j["discriminant"] = poly_json(disc.resultant);
  j["normalized"] = poly_json(disc.normalized);
  j["classification"] = to_string(cls);

  std::vector<std::pair<std::string, bool>> checks;
  {
    // Expected closed forms: w^2 - z^n, -27(v^2 - 4 u^{3n}), v^2 - 4 u^{3n}.
    BivariatePolynomial jac_expected =
        BivariatePolynomial::monomial(0, 2, 1, {"z", "w"});
    if (n >= 1) jac_expected.add_term(n, 0, -1);
    BivariatePolynomial norm_expected =
        BivariatePolynomial::monomial(0, 2, 1, {"u", "v"});
    if (n >= 1) norm_expected.add_term(3 * n, 0, -4);
    const BivariatePolynomial disc_expected = BigInt(-27) * norm_expected;
    checks.emplace_back("jacobian_normal_form", jac == jac_expected);
    checks.emplace_back("discriminant_closed_form",
                        disc.resultant == disc_expected);
    checks.emplace_back("normalized_closed_form",
                        disc.normalized == norm_expected);
    checks.emplace_back("branch_classification",
                        n >= 1 ? cls == GermClassification::a_type(3 * n - 1)
                               : cls == GermClassification::smooth());
  }
  if (n >= 1) {
    const BivariatePolynomial res = residual_curve(n);
    BivariatePolynomial res_expected =
        BivariatePolynomial::monomial(0, 2, 1, {"z", "w"});
    res_expected.add_term(n, 0, -4);
    j["residual"] = poly_json(res);
    checks.emplace_back("residual_closed_form", res == res_expected);
    const bool param_ok = branch_parametrization_check(n);
    j["parametrization_ok"] = param_ok;
    checks.emplace_back("branch_parametrization", param_ok);
    const GermClassification galois = galois_local_type(LocalGroupCase::S3, n);
    j["galois_s3_type"] = to_string(galois);
    checks.emplace_back("galois_s3_type",
                        galois == (n == 1 ? GermClassification::smooth()
                                          : GermClassification::a_type(n - 1)));
  }

  bool all_passed = true;
  if (verify) {
    json check_list = json::array();
    for (const auto& [name, passed] : checks) {
      check_list.push_back(json{{"name", name}, {"passed", passed}});
      all_passed = all_passed && passed;
    }
    j["checks"] = check_list;
    j["all_passed"] = all_passed;
  }

  if (format == "table") {
    out << "n              " << n << "\n";
    out << "jacobian       " << jac.str() << "\n";
    out << "discriminant   " << disc.resultant.str() << "\n";
    out << "normalized     " << disc.normalized.str() << "\n";
    out << "classification " << to_string(cls) << "\n";
    if (n >= 1) {
      out << "residual       " << residual_curve(n).str() << "\n";
      out << "galois_s3_type "
          << to_string(galois_local_type(LocalGroupCase::S3, n)) << "\n";
    }
    if (verify) {
      for (const auto& [name, passed] : checks) {
        out << std::left << std::setw(28) << name
            << (passed ? "pass" : "FAIL") << "\n";
      }
    }
  } else {
    out << j.dump(2) << "\n";
  }
  return (verify && !all_passed) ? kExitInternal : kExitOk;
}

int run_monodromy(const std::string& model_name, long n, long k,
                  const TrackingParams& params, const std::string& format,
                  std::ostream& out) {
  FiberModel model = [&] {
    if (model_name == "s3") return FiberModel::s3_cover(n);
    if (model_name == "s2pair") return FiberModel::s2_pair(k);
    return FiberModel::smooth2();
  }();

  const MonodromyCertificate cert = local_monodromy_group(model, params);

  bool certified = false;
  switch (model.kind()) {
    case FiberModel::Kind::Smooth2:
      certified = cert.group.iso_class == GroupDescriptor::Iso::Z2 &&
                  cert.generators.size() == 1 &&
                  cert.generators[0].is_transposition();
      break;
    case FiberModel::Kind::S2Pair:
      certified = cert.group.iso_class == GroupDescriptor::Iso::Z2xZ2 &&
                  cert.generators.size() == 2 &&
                  cert.generators[0].is_transposition() &&
                  cert.generators[1].is_transposition() &&
                  cert.generators[0].disjoint_from(cert.generators[1]) &&
                  cert.generators[0].commutes_with(cert.generators[1]);
      break;
    case FiberModel::Kind::S3Cover:
      certified = cert.group.iso_class == GroupDescriptor::Iso::S3 &&
                  cert.generators.size() == 2 &&
                  cert.generators[0].is_transposition() &&
                  cert.generators[1].is_transposition() &&
                  cert.generators[0] != cert.generators[1] &&
                  !cert.generators[0].commutes_with(cert.generators[1]) &&
                  cert.generators[0].then(cert.generators[1]).order() == 3;
      break;
  }

  json j;
  j["model"] = model_name;
  if (model_name == "s3") j["n"] = n;
  if (model_name == "s2pair") j["k"] = k;
  json gens = json::array();
  for (const auto& g : cert.generators) gens.push_back(g.cycle_notation());
  j["generators"] = gens;
  j["group"] = to_string(cert.group.iso_class);
  j["order"] = cert.group.order;
  json pts = json::array();
  for (const auto& b : cert.branch_points) pts.push_back({b.real(), b.imag()});
  j["branch_points"] = pts;
  j["max_newton_residual"] = cert.max_newton_residual;
  j["certified"] = certified;

  if (format == "table") {
    out << "model      " << model_name << "\n";
    out << "group      " << to_string(cert.group.iso_class) << "\n";
    out << "order      " << cert.group.order << "\n";
    for (const auto& g : cert.generators) {
      out << "generator  " << g.cycle_notation() << "\n";
    }
    out << "certified  " << (certified ? "yes" : "no") << "\n";
  } else {
    out << j.dump(2) << "\n";
  }
  return certified ? kExitOk : kExitInternal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"almost-generic-cover invariant calculator"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --format follow the subcommand
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  std::string profile_path;
  auto* cmd_invariants =
      app.add_subcommand("invariants", "Invariants of the covering surface");
  cmd_invariants->add_option("profile", profile_path, "Profile JSON file")
      ->required();
  auto* cmd_galois =
      app.add_subcommand("galois", "Galois closure / resolution invariants");
  cmd_galois->add_option("profile", profile_path, "Profile JSON file")
      ->required();
  auto* cmd_check =
      app.add_subcommand("check", "Run all necessary-condition checks");
  cmd_check->add_option("profile", profile_path, "Profile JSON file")
      ->required();

  EnumerationQuery query;
  long query_N = -1;
  long count_cap = -1;
  auto* cmd_enum =
      app.add_subcommand("enumerate", "Enumerate admissible profiles");
  cmd_enum->add_option("--d", query.d, "Half-degree of the branch curve")
      ->required();
  cmd_enum->add_option("--N", query_N, "Cover degree (all if omitted)");
  cmd_enum->add_option("--k-max", query.k_max, "Largest class index")
      ->capture_default_str();
  cmd_enum->add_option("--count-cap", count_cap, "Per-class count cap");
  cmd_enum->add_flag("--brute-force", query.brute_force,
                     "Scan the whole box without pruning");
  cmd_enum->add_option("--jobs", query.jobs, "Parallel workers")
      ->capture_default_str();
  cmd_enum->add_option("--node-limit", query.node_limit,
                       "Abort when the search box exceeds this many nodes");

  long model_n = 1;
  bool verify = false;
  auto* cmd_local =
      app.add_subcommand("local-model", "Verify a local normal-form cover");
  cmd_local->add_option("--n", model_n, "Normal-form index")->required();
  cmd_local->add_flag("--verify", verify, "Run all consistency checks");

  std::string mono_model;
  long mono_n = 1, mono_k = 1;
  TrackingParams params;
  auto* cmd_mono =
      app.add_subcommand("monodromy", "Certify a local monodromy group");
  cmd_mono->add_option("--model", mono_model, "s3 | s2pair | smooth2")
      ->required()
      ->check(CLI::IsMember({"s3", "s2pair", "smooth2"}));
  cmd_mono->add_option("--n", mono_n, "Index for the s3 model");
  cmd_mono->add_option("--k", mono_k, "Index for the s2pair model");
  cmd_mono->add_option("--newton-tol", params.newton_tol)
      ->capture_default_str();
  cmd_mono->add_option("--max-step-fraction", params.max_step_fraction)
      ->capture_default_str();
  cmd_mono->add_option("--clearance-fraction", params.clearance_fraction)
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (cmd_invariants->parsed()) {
      return run_invariants(profile_path, format, out, err);
    }
    if (cmd_galois->parsed()) {
      return run_galois(profile_path, format, out, err);
    }
    if (cmd_check->parsed()) {
      return run_check(profile_path, format, out);
    }
    if (cmd_enum->parsed()) {
      if (query_N >= 0) query.N = query_N;
      if (count_cap >= 0) query.count_cap = count_cap;
      return run_enumerate(query, format, out);
    }
    if (cmd_local->parsed()) {
      return run_local_model(model_n, verify, format, out);
    }
    if (cmd_mono->parsed()) {
      return run_monodromy(mono_model, mono_n, mono_k, params, format, out);
    }
    err << "no subcommand\n";
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    err << e.what() << "\n";
    return kExitFile;
  } catch (const InexactDivision& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kExitInternal;
  } catch (const UnsupportedShape& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kExitInternal;
  } catch (const PathTooClose& e) {
    err << "tracking failure: " << e.what() << "\n";
    return kExitInternal;
  } catch (const NoConvergence& e) {
    err << "tracking failure: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace agc::cli
