// sphcodes: verify spherical codes, certify bounds, and query the catalog.
//
// Exit codes: 0 success / valid / certified, 1 invalid or bound not applicable,
// 2 usage or input error, 3 numerical failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include "sphcodes/bounds.hpp"
#include "sphcodes/catalog.hpp"
#include "sphcodes/errors.hpp"
#include "sphcodes/gegenbauer.hpp"
#include "sphcodes/json_io.hpp"

using namespace sphcodes;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct OutputOptions {
  std::string format = "table";
  std::string out;
};

void add_format(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
}

void print_table(const Json& j, const std::string& prefix = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (v.is_object()) {
      print_table(v, prefix + it.key() + ".");
    } else if (v.is_string()) {
      std::cout << prefix << it.key() << ": " << v.get<std::string>() << "\n";
    } else {
      std::cout << prefix << it.key() << ": " << v.dump() << "\n";
    }
  }
}

void emit(const Json& j, const OutputOptions& o) {
  if (o.format == "json") std::cout << dump_json(j);
  else print_table(j);
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream f(path);
  if (!f) throw ParseError("cannot write '" + path + "'");
  f << dump_json(j);
}

struct AngleOptions {
  std::string pi_frac;
  std::string cos_theta;
  std::optional<double> radians;
};

void add_angle(CLI::App* cmd, AngleOptions& a) {
  auto* p = cmd->add_option("--theta-pi-frac", a.pi_frac, "theta as an exact fraction of pi, e.g. 1/3");
  auto* c = cmd->add_option("--cos-theta", a.cos_theta, "exact cos(theta), e.g. -1/3");
  auto* r = cmd->add_option("--theta", a.radians, "theta in radians");
  p->excludes(c)->excludes(r);
  c->excludes(r);
}

Angle resolve_angle(const AngleOptions& a) {
  if (!a.pi_frac.empty()) return Angle::from_pi_fraction(parse_rational(a.pi_frac));
  if (!a.cos_theta.empty()) return Angle::from_cos(parse_rational(a.cos_theta));
  if (a.radians) return Angle::from_radians(*a.radians);
  throw ParseError("one of --theta-pi-frac, --cos-theta, --theta is required");
}

void warn_wide_angle(const Angle& theta) {
  if (theta.exceeds_pi()) {
    std::cerr << "warning: theta = " << theta.describe()
              << " exceeds pi; cos(theta) makes it equivalent to 2*pi - theta\n";
  }
}

Json angle_json(const Angle& theta) {
  Json j = Json::object();
  angle_to_json(theta, j);
  return j;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string code;
  std::string mode;
  double tol = kDefaultVerifyTol;
  unsigned threads = 1;
  OutputOptions out;
};

int run_verify(const VerifyArgs& args) {
  const AnyCode code = code_from_json(read_json_file(args.code));
  VerificationReport report;
  if (const auto* c = std::get_if<ClassicalCode>(&code)) {
    warn_wide_angle(c->theta);
    if (args.mode.empty() || args.mode == "classical") report = verify_classical(*c, args.tol, args.threads);
    else if (args.mode == "order") report = verify_modular(embed_classical(*c), args.tol, args.threads);
    else report = verify_modular_norm_only(embed_classical(*c), args.tol, args.threads);
  } else {
    const auto& m = std::get<ModularCode>(code);
    warn_wide_angle(m.theta);
    if (args.mode == "classical") throw ParseError("--mode classical needs a classical code file");
    if (args.mode == "norm") report = verify_modular_norm_only(m, args.tol, args.threads);
    else report = verify_modular(m, args.tol, args.threads);
  }
  emit(to_json(report), args.out);
  return report.valid ? kExitOk : kExitFail;
}

struct LpArgs {
  int d = 0;
  int degree = 0;
  int grid_size = 0;
  int max_rounds = 50;
  AngleOptions angle;
  OutputOptions out;
};

int run_bound_lp(const LpArgs& args) {
  const Angle theta = resolve_angle(args.angle);
  warn_wide_angle(theta);
  DelsarteOptions options;
  options.grid_size = args.grid_size;
  options.max_rounds = args.max_rounds;
  DelsarteOptimization opt;
  try {
    opt = optimize_delsarte(args.d, theta, args.degree, options);
  } catch (const InfeasibleError& e) {
    Json j{{"command", "bound lp"}, {"d", args.d}, {"degree", args.degree}, {"infeasible", true},
           {"message", e.what()}};
    emit(j, args.out);
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitFail;
  }
  Json j{{"command", "bound lp"}, {"d", args.d}, {"degree", args.degree}};
  j["theta"] = angle_json(theta);
  j["certificate"] = to_json(opt.certificate);
  j["verification"] = to_json(opt.verification);
  j["lp_value"] = opt.lp_value;
  j["rounds"] = opt.rounds;
  j["grid_points"] = opt.grid_points;
  j["converged"] = opt.converged;
  if (!args.out.out.empty()) write_file(args.out.out, to_json(opt.certificate));
  emit(j, args.out);
  return opt.verification.applicable ? kExitOk : kExitFail;
}

struct CheckArgs {
  std::string cert;
  OutputOptions out;
};

int run_bound_check(const CheckArgs& args) {
  const DelsarteCertificate cert = certificate_from_json(read_json_file(args.cert));
  const BoundResult result = verify_delsarte(cert.a, cert.d, cert.theta);
  Json j{{"command", "bound check"}, {"d", cert.d}};
  j["theta"] = angle_json(cert.theta);
  j["verification"] = to_json(result);
  if (result.bound && cert.bound != 0) j["matches_claimed_bound"] = (*result.bound == cert.bound);
  emit(j, args.out);
  return result.applicable ? kExitOk : kExitFail;
}

struct PfenderArgs {
  std::string phi;
  std::string c;
  int d = 2;
  std::string code;
  AngleOptions angle;
  OutputOptions out;
};

int run_bound_pfender(const PfenderArgs& args) {
  const Polynomial phi(rational_list_from_json(Json(args.phi)));
  const Rational c = parse_rational(args.c);
  Json j{{"command", "bound pfender"}, {"phi", phi.to_string()}, {"c", to_string(c)}};
  BoundResult result;
  if (!args.code.empty()) {
    const AnyCode code = code_from_json(read_json_file(args.code));
    const auto* cc = std::get_if<ClassicalCode>(&code);
    if (!cc) throw ParseError("bound pfender --code expects a classical code; use nc-pfender for modular codes");
    j["d"] = cc->d;
    j["theta"] = angle_json(cc->theta);
    j["n"] = cc->size();
    result = pfender_check_on_code(*cc, phi, c);
  } else {
    const Angle theta = resolve_angle(args.angle);
    warn_wide_angle(theta);
    j["d"] = args.d;
    j["theta"] = angle_json(theta);
    result = pfender_bound(PfenderCertificate{phi, c, theta}, args.d);
  }
  j["result"] = to_json(result);
  emit(j, args.out);
  return result.applicable ? kExitOk : kExitFail;
}

struct NcArgs {
  std::string code;
  std::string spec;
  double tol = kDefaultVerifyTol;
  unsigned threads = 1;
  OutputOptions out;
};

int run_bound_nc(const NcArgs& args) {
  const ModularCode code = modular_code_from_json(read_json_file(args.code));
  const NcPhiSpec spec = nc_phi_spec_from_json(read_json_file(args.spec));
  const BoundResult result = nc_pfender_check(code, spec, args.tol, args.threads);
  Json j{{"command", "bound nc-pfender"}, {"n", code.size()}, {"d", code.d}};
  j["theta"] = angle_json(code.theta);
  j["result"] = to_json(result);
  emit(j, args.out);
  return result.applicable ? kExitOk : kExitFail;
}

struct GegArgs {
  int n = 2;
  int k = 0;
  int j = 0;
  std::string r;
  std::string poly;
  OutputOptions out;
};

int run_geg_eval(const GegArgs& args) {
  const Polynomial g = gegenbauer(args.n, args.k);
  Json j{{"n", args.n}, {"k", args.k}, {"coeffs", rational_list_to_json(g.coefficients())},
         {"polynomial", g.to_string()}};
  if (!args.r.empty()) {
    const Rational r = parse_rational(args.r);
    const Rational v = g(r);
    j["r"] = to_string(r);
    j["value"] = to_string(v);
    j["value_float"] = v.get_d();
  }
  emit(j, args.out);
  return kExitOk;
}

int run_geg_expand(const GegArgs& args) {
  const std::string text = args.poly;
  const bool is_json = !text.empty() && text.front() == '[';
  const Polynomial p(rational_list_from_json(is_json ? parse_json_text(text, "--poly") : Json(text)));
  const GegenbauerExpansion e = expand(p, args.n);
  Json j{{"n", args.n}, {"polynomial", p.to_string()}, {"a", rational_list_to_json(e.a)}};
  emit(j, args.out);
  return kExitOk;
}

int run_geg_ortho(const GegArgs& args) {
  const double v = orthogonality_integral(args.n, args.j, args.k);
  Json j{{"n", args.n}, {"j", args.j}, {"k", args.k}, {"integral", v}};
  emit(j, args.out);
  return kExitOk;
}

struct CatalogArgs {
  std::string name;
  OutputOptions out;
};

int run_catalog_gen(const CatalogArgs& args) {
  if (args.name.empty()) throw ParseError("catalog gen needs a name (see 'catalog list')");
  const CatalogEntry entry = catalog_generate(args.name);
  Json code = to_json(*entry.code);
  if (!args.out.out.empty()) {
    write_file(args.out.out, code);
    Json j{{"name", entry.name}, {"provenance", entry.provenance},
           {"n", std::visit([](const auto& c) { return c.size(); }, *entry.code)}, {"out", args.out.out}};
    if (entry.known_optimal) j["known_optimal"] = *entry.known_optimal;
    emit(j, args.out);
  } else {
    std::cout << dump_json(code);
  }
  return kExitOk;
}

int run_catalog_list(const OutputOptions& out) {
  Json list = Json::array();
  for (const auto& info : catalog_list()) {
    Json j{{"name", info.name}, {"kind", info.kind}, {"d", info.d}, {"n", info.size}};
    j["theta"] = info.theta.describe();
    j["known_optimal"] = info.known_optimal ? Json(*info.known_optimal) : Json(nullptr);
    j["generated"] = info.generated;
    list.push_back(std::move(j));
  }
  if (out.format == "json") {
    std::cout << dump_json(list);
    return kExitOk;
  }
  std::printf("%-20s %-10s %4s %8s %-10s %s\n", "name", "kind", "d", "n", "theta", "known_optimal");
  for (const auto& j : list) {
    std::printf("%-20s %-10s %4d %8ld %-10s %s\n", j["name"].get<std::string>().c_str(),
                j["kind"].get<std::string>().c_str(), j["d"].get<int>(), j["n"].get<long>(),
                j["theta"].get<std::string>().c_str(),
                j["known_optimal"].is_null() ? "-" : j["known_optimal"].dump().c_str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spherical and modular code verification and bounds"};
  app.require_subcommand(1);
  std::function<int()> action;

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "verify a classical or modular code file");
  v->add_option("--code", verify.code, "code JSON file")->required();
  v->add_option("--mode", verify.mode, "classical, order or norm")->check(CLI::IsMember({"classical", "order", "norm"}));
  v->add_option("--tol", verify.tol, "verification tolerance");
  v->add_option("--threads", verify.threads, "worker threads for pairwise checks");
  add_format(v, verify.out);
  v->callback([&] { action = [&] { return run_verify(verify); }; });

  auto* bound = app.add_subcommand("bound", "certify upper bounds");
  bound->require_subcommand(1);
  LpArgs lp;
  auto* b_lp = bound->add_subcommand("lp", "optimize and certify a Delsarte LP bound");
  b_lp->add_option("--d", lp.d, "dimension")->required();
  b_lp->add_option("--degree", lp.degree, "polynomial degree")->required();
  b_lp->add_option("--grid-size", lp.grid_size, "initial Chebyshev grid size (default 8*degree)");
  b_lp->add_option("--max-rounds", lp.max_rounds, "cutting-plane rounds");
  b_lp->add_option("--out", lp.out.out, "write the certificate JSON here");
  add_angle(b_lp, lp.angle);
  add_format(b_lp, lp.out);
  b_lp->callback([&] { action = [&] { return run_bound_lp(lp); }; });

  CheckArgs check;
  auto* b_check = bound->add_subcommand("check", "re-verify a Delsarte certificate file");
  b_check->add_option("--cert", check.cert, "certificate JSON")->required();
  add_format(b_check, check.out);
  b_check->callback([&] { action = [&] { return run_bound_check(check); }; });

  PfenderArgs pf;
  auto* b_pf = bound->add_subcommand("pfender", "Pfender bound for phi (monomial coefficients) and c");
  b_pf->add_option("--phi", pf.phi, "coefficients low to high, e.g. \"0,1\" for phi(r) = r")->required();
  b_pf->add_option("--c", pf.c, "positive constant c")->required();
  b_pf->add_option("--d", pf.d, "dimension for the kernel condition (default 2)");
  b_pf->add_option("--code", pf.code, "check both conditions on this classical code instead");
  add_angle(b_pf, pf.angle);
  add_format(b_pf, pf.out);
  b_pf->callback([&] { action = [&] { return run_bound_pfender(pf); }; });

  NcArgs nc;
  auto* b_nc = bound->add_subcommand("nc-pfender", "module Pfender check on a modular code");
  b_nc->add_option("--code", nc.code, "modular code JSON")->required();
  b_nc->add_option("--spec", nc.spec, "phi spec JSON")->required();
  b_nc->add_option("--tol", nc.tol, "tolerance");
  b_nc->add_option("--threads", nc.threads, "worker threads");
  add_format(b_nc, nc.out);
  b_nc->callback([&] { action = [&] { return run_bound_nc(nc); }; });

  auto* geg = app.add_subcommand("gegenbauer", "Gegenbauer polynomial utilities");
  geg->require_subcommand(1);
  GegArgs ge;
  auto* g_eval = geg->add_subcommand("eval", "coefficients of G_k^(n), optionally evaluated at r");
  g_eval->add_option("--n", ge.n, "dimension parameter")->required();
  g_eval->add_option("--k", ge.k, "degree")->required();
  g_eval->add_option("--r", ge.r, "evaluation point (exact rational or decimal)");
  add_format(g_eval, ge.out);
  g_eval->callback([&] { action = [&] { return run_geg_eval(ge); }; });
  auto* g_exp = geg->add_subcommand("expand", "Gegenbauer coordinates of a polynomial");
  g_exp->add_option("--n", ge.n, "dimension parameter")->required();
  g_exp->add_option("--poly", ge.poly, "monomial coefficients low to high: \"0,0,1\" or [\"0\",\"0\",\"1\"]")
      ->required();
  add_format(g_exp, ge.out);
  g_exp->callback([&] { action = [&] { return run_geg_expand(ge); }; });
  auto* g_ortho = geg->add_subcommand("ortho", "weighted inner product of G_j and G_k");
  g_ortho->add_option("--n", ge.n, "dimension parameter")->required();
  g_ortho->add_option("--j", ge.j, "first degree")->required();
  g_ortho->add_option("--k", ge.k, "second degree")->required();
  add_format(g_ortho, ge.out);
  g_ortho->callback([&] { action = [&] { return run_geg_ortho(ge); }; });

  auto* cat = app.add_subcommand("catalog", "reference codes");
  cat->require_subcommand(1);
  CatalogArgs cg;
  auto* c_gen = cat->add_subcommand("gen", "generate a catalog code as JSON");
  c_gen->add_option("entry", cg.name, "catalog name");
  c_gen->add_option("--name", cg.name, "catalog name");
  c_gen->add_option("--out", cg.out.out, "output file (stdout otherwise)");
  add_format(c_gen, cg.out);
  c_gen->callback([&] { action = [&] { return run_catalog_gen(cg); }; });
  OutputOptions list_out;
  auto* c_list = cat->add_subcommand("list", "list catalog entries");
  add_format(c_list, list_out);
  c_list->callback([&] { action = [&] { return run_catalog_list(list_out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const ShapeError& e) {
    std::cerr << "shape error: " << e.what() << "\n";
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitFail;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}
