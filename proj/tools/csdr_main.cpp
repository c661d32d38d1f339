#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>

#include "csdr/action.hpp"
#include "csdr/bundles.hpp"
#include "csdr/connection.hpp"
#include "csdr/verify.hpp"

namespace {

using namespace csdr;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

std::ofstream open_output(const std::filesystem::path& dir, const std::string& name) {
  std::filesystem::create_directories(dir);
  std::ofstream os(dir / name);
  if (!os) throw std::runtime_error("cannot open " + (dir / name).string());
  os << std::setprecision(17);
  return os;
}

int cmd_reduce(int n, double f_re, double f_im, int grid, const std::string& out) {
  const Complex f{f_re, f_im};
  const Intertwiner phi = build_intertwiner(n, f);
  if (phi.is_zero() && std::abs(f) > 0) {
    std::cerr << "warning: intertwiner forced zero for n=" << n
              << "; ignoring f\n";
  }
  const InvariantPotential a = assemble_potential(n, f);

  const std::filesystem::path dir(out);
  for (int chart : {1, 2}) {
    auto pot = open_output(dir, "potential_chart" + std::to_string(chart) + ".csv");
    dump_one_form_csv(pot, a.on_chart(chart), grid);
    auto curv = open_output(dir, "curvature_chart" + std::to_string(chart) + ".csv");
    dump_two_form_csv(curv, curvature_direct(a, chart), grid);
  }

  const TwoForm curv = curvature_direct(a, 1);
  const double sup_f = sup_curvature_norm(curv, grid);
  const AgreementReport agreement =
      std::abs(n) == 1
          ? patch_agreement(a, standard_transform(1), standard_transform(2), grid)
          : patch_agreement(a, constant_transform(1, Mat2::Identity()),
                            monopole_transition(2, n), grid);

  nlohmann::json summary;
  summary["n"] = n;
  summary["f"] = {{"re", a.f.real()}, {"im", a.f.imag()}};
  summary["sup_F"] = sup_f;
  summary["flags"] = {{"flat", sup_f < 1e-8},
                      {"intertwiner_zero", phi.is_zero()}};
  summary["patch_residual"] = agreement.sup_residual;
  summary["provenance"] = phi.is_zero() ? "A-SU2" : "A-SU2-1/A-SU2-2";
  auto js = open_output(dir, "summary.json");
  js << summary.dump(2) << '\n';
  std::cout << summary.dump(2) << '\n';
  return kExitOk;
}

int cmd_action(int n, double f_min, double f_max, double f_step, double radius,
               double coupling, int quad_order, const std::string& out) {
  if (!(f_step > 0) || f_max < f_min) {
    std::cerr << "error: empty scan spec\n";
    return kExitUsage;
  }
  ActionConfig cfg;
  cfg.n = n;
  cfg.radius = radius;
  cfg.coupling = coupling;
  cfg.quad_order = quad_order;

  std::vector<Complex> fs;
  for (double rho = f_min; rho <= f_max + 1e-12; rho += f_step) {
    fs.push_back(Complex{rho, 0.0});
  }
  const auto rows = action_scan(cfg, fs);

  const std::filesystem::path dir(out);
  auto csv = open_output(dir, "action_scan.csv");
  csv << "re_f,im_f,abs_f,S,analytic_S,rel_err\n";
  double max_rel = 0.0;
  for (const auto& row : rows) {
    const double analytic = analytic_action(cfg, row.f);
    const double rel = std::abs(row.action - analytic) / std::max(1.0, std::abs(analytic));
    max_rel = std::max(max_rel, rel);
    csv << row.f.real() << ',' << row.f.imag() << ',' << std::abs(row.f) << ','
        << row.action << ',' << analytic << ',' << rel << '\n';
  }

  nlohmann::json report;
  report["max_rel_err"] = max_rel;
  report["provenance"] = "S-SU2";
  report["extrema"] = nlohmann::json::array();
  try {
    const Extremum minimum = find_extremum(cfg, Complex{0.9, 0.0}, false);
    const Extremum maximum = find_extremum(cfg, Complex{0.05, 0.0}, true);
    for (const Extremum& e : {minimum, maximum}) {
      report["extrema"].push_back(
          {{"f", {{"re", e.f.real()}, {"im", e.f.imag()}}},
           {"abs_f", std::abs(e.f)},
           {"S", e.action},
           {"kind", e.kind == ExtremumKind::minimum
                        ? "minimum"
                        : (e.kind == ExtremumKind::maximum ? "maximum" : "saddle")},
           {"iterations", e.iterations}});
    }
  } catch (const std::runtime_error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitVerificationFailure;
  }
  auto js = open_output(dir, "extrema.json");
  js << report.dump(2) << '\n';
  std::cout << report.dump(2) << '\n';
  return kExitOk;
}

int cmd_classify(const std::string& group_spec, const std::string& surface_spec) {
  const GroupDescriptor g = parse_group(group_spec);
  const SurfaceDescriptor m = parse_surface(surface_spec);
  if (m.kind == SurfaceDescriptor::Kind::sphere && m.param != 2) {
    nlohmann::json j;
    j["group"] = g.to_string();
    j["surface"] = m.to_string();
    j["method"] = "B-Sn";
    j["provenance"] = "B-Sn";
    j["result"] = classify_sphere(g, m.param).to_string();
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << classify(g, m).to_json() << '\n';
  return kExitOk;
}

int cmd_verify(const std::string& suite, const std::vector<std::string>& tol_specs) {
  std::map<std::string, double> overrides;
  for (const std::string& spec : tol_specs) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos) {
      std::cerr << "error: tolerance override must be name=value\n";
      return kExitUsage;
    }
    overrides[spec.substr(0, eq)] = std::stod(spec.substr(eq + 1));
  }
  const auto results = run_verification(suite, overrides);
  std::cout << verification_report_json(results) << '\n';
  for (const auto& r : results) {
    if (!r.pass) return kExitVerificationFailure;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariant SU(2) connections on the two-sphere and bundle classification"};
  // Usage: csdr --config file.ini <subcommand> ...; keys live in a
  // [subcommand] section of the file.
  app.set_config("--config");
  app.require_subcommand(1);

  int n = 1;
  double f_re = 0.0, f_im = 0.0;
  double radius = 1.0, coupling = 1.0;
  int quad_order = 64, grid = 32;
  std::string out = "csdr_out";

  auto* reduce = app.add_subcommand("reduce", "Assemble the invariant potential and curvature");
  reduce->add_option("--n", n, "homomorphism index");
  reduce->add_option("--f-re", f_re, "Re f");
  reduce->add_option("--f-im", f_im, "Im f");
  reduce->add_option("--grid", grid, "samples per axis");
  reduce->add_option("--out", out, "output directory");

  double f_min = 0.0, f_max = 2.0, f_step = 0.1;
  auto* action = app.add_subcommand("action", "Scan the Yang-Mills action over f");
  action->add_option("--n", n, "homomorphism index");
  action->add_option("--f-min", f_min, "scan start |f|");
  action->add_option("--f-max", f_max, "scan end |f|");
  action->add_option("--f-step", f_step, "scan step");
  action->add_option("--radius", radius, "sphere radius");
  action->add_option("--coupling", coupling, "gauge coupling");
  action->add_option("--quad-order", quad_order, "Gauss-Legendre order");
  action->add_option("--out", out, "output directory");

  std::string group_spec, surface_spec;
  auto* classify_cmd = app.add_subcommand("classify", "Classify principal bundles");
  classify_cmd->add_option("group", group_spec, "group spec, e.g. SU(2) or discrete:Z2")
      ->required();
  classify_cmd->add_option("surface", surface_spec,
                           "surface spec, e.g. sphere2, orientable:1")
      ->required();

  std::string suite = "all";
  std::vector<std::string> tol_specs;
  auto* verify = app.add_subcommand("verify", "Run the invariant verification suites");
  verify->add_option("suite", suite,
                     "one of lie, coset, forms, connection, action, bundles, all");
  verify->add_option("--tol", tol_specs, "tolerance override name=value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (reduce->parsed()) return cmd_reduce(n, f_re, f_im, grid, out);
    if (action->parsed()) {
      return cmd_action(n, f_min, f_max, f_step, radius, coupling, quad_order, out);
    }
    if (classify_cmd->parsed()) return cmd_classify(group_spec, surface_spec);
    if (verify->parsed()) return cmd_verify(suite, tol_specs);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerificationFailure;
  }
  return kExitUsage;
}
