// Command-line front end: background geometry evaluation, per-mode flow
// trajectories, the asymptotic spectrum, energy-momentum reports, and the
// full verification run. Numeric output uses fixed 17-significant-digit
// decimal formatting so identical invocations are byte-identical.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmaf/asymptotics.hpp"
#include "cmaf/background.hpp"
#include "cmaf/bondi.hpp"
#include "cmaf/errors.hpp"
#include "cmaf/flow.hpp"
#include "cmaf/format.hpp"
#include "cmaf/linear_geometry.hpp"
#include "cmaf/sphere.hpp"
#include "cmaf/verify.hpp"

namespace {

struct RunConfig {
  double r0 = 1.0;
  int l_max = 16;
  double u_max = 0.0;  // 0 means unset; resolves to 10 * r0
  int n_steps = 4096;
  double tol = 1e-10;
  std::string output_format = "csv";
  std::string output_path;

  double u_max_natural() const { return u_max == 0.0 ? 10.0 : u_max / r0; }
};

void load_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream is(path);
  if (!is) throw cmaf::DomainError("cannot open config file " + path);
  nlohmann::json j;
  is >> j;
  cfg.r0 = j.value("r0", cfg.r0);
  cfg.l_max = j.value("l_max", cfg.l_max);
  cfg.u_max = j.value("u_max", cfg.u_max);
  cfg.n_steps = j.value("n_steps", cfg.n_steps);
  cfg.tol = j.value("tol", cfg.tol);
  cfg.output_format = j.value("output_format", cfg.output_format);
  cfg.output_path = j.value("output_path", cfg.output_path);
}

void validate(const RunConfig& cfg) {
  if (cfg.r0 <= 0.0 || cfg.u_max < 0.0 || cfg.n_steps < 1 || cfg.tol <= 0.0 || cfg.l_max < 1)
    throw cmaf::DomainError("config: r0, u_max, n_steps, tol, l_max must be positive");
  if (cfg.output_format != "csv" && cfg.output_format != "json")
    throw cmaf::DomainError("config: output_format must be csv or json");
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw cmaf::DomainError("cannot open output file " + path);
  os << text;
}

cmaf::PerturbationKind parse_case(const std::string& name) {
  if (name == "i") return cmaf::PerturbationKind::case_i;
  if (name == "ii") return cmaf::PerturbationKind::case_ii;
  throw cmaf::DomainError("--case must be i or ii");
}

std::string json_field(const std::string& key, double v) {
  return '"' + key + "\":" + cmaf::format_number(v);
}

std::string json_array(const std::string& key, const std::vector<double>& vs) {
  std::string out = '"' + key + "\":[";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ',';
    out += cmaf::format_number(vs[i]);
  }
  return out + ']';
}

int cmd_background(const RunConfig& cfg, double s, double sbar) {
  const double r0 = cfg.r0;
  const auto pt = cmaf::background_point(s / r0, sbar / r0);
  const auto f = cmaf::background_fields(s / r0, sbar / r0);
  const std::vector<std::pair<double, int>> record = {
      {pt.s, 1},          {pt.sbar, 1},     {pt.r, 1},        {pt.omega_sq, 0},
      {f.dr_ds, 0},       {f.dr_dsbar, 0},  {f.tr_chi_prime, -1}, {f.tr_chibar, -1},
      {f.omega, -1},      {f.omegabar, -1}, {f.rho, -2},      {f.mu, -2},
      {f.hawking_mass, 1}};
  const std::vector<std::string> names = {
      "s",     "sbar",     "r",    "omega_sq", "dr_ds", "dr_dsbar", "tr_chi_prime",
      "tr_chibar", "omega", "omegabar", "rho",  "mu",    "hawking_mass"};
  if (cfg.output_format == "json") {
    std::string out = "{";
    for (std::size_t i = 0; i < record.size(); ++i) {
      if (i) out += ',';
      out += json_field(names[i], cmaf::scale_dimension(record[i].first, record[i].second, r0));
    }
    out += "}\n";
    emit(out, cfg.output_path);
  } else {
    cmaf::CsvWriter csv(names);
    std::vector<double> row;
    for (const auto& [v, dim] : record) row.push_back(cmaf::scale_dimension(v, dim, r0));
    csv.append(row);
    emit(csv.text(), cfg.output_path);
  }
  return 0;
}

int cmd_evolve(const RunConfig& cfg, cmaf::PerturbationKind kind, int l) {
  const double r0 = cfg.r0;
  const auto traj = cmaf::evolve_mode(kind, l, cfg.u_max_natural(), cfg.n_steps);
  cmaf::CsvWriter csv({"u", "delta_f", "delta_a", "gslash", "rbar", "trchibar", "chibarhat",
                       "trchiprime", "chiprimehat", "eta", "omegabar", "K", "mu", "betabar",
                       "rho", "beta", "closed_f", "closed_a", "max_residual"});
  for (const auto& st : traj) {
    const auto d = cmaf::derived_quantities(kind, l, st);
    const auto exact = cmaf::closed_form_state(kind, l, st.u);
    const double res = cmaf::basic_equation_residuals(kind, l, st).max_abs();
    auto sc = [r0](double v, int dim) { return cmaf::scale_dimension(v, dim, r0); };
    csv.append({sc(st.u, 1), sc(st.delta_f, 1), st.delta_a, sc(d.gslash, 2), sc(d.rbar, 1),
                sc(d.trchibar, -1), sc(d.chibarhat, 1), sc(d.trchiprime, -1),
                sc(d.chiprimehat, 1), d.eta, sc(d.omegabar, -1), sc(d.K, -2), sc(d.mu, -2),
                sc(d.betabar, -1), sc(d.rho, -2), sc(d.beta, -1), sc(exact.delta_f, 1),
                exact.delta_a, res});
  }
  emit(csv.text(), cfg.output_path);
  return 0;
}

int cmd_spectrum(const RunConfig& cfg, const std::string& map_grid_in,
                 const std::string& map_grid_out) {
  if (!map_grid_in.empty()) {
    // apply the diagonal curvature map to an imported profile instead of
    // tabulating eigencoefficients
    const cmaf::GridField in = cmaf::read_grid_csv(map_grid_in);
    const cmaf::GridField out = cmaf::apply_curvature_map(in, cfg.l_max);
    if (map_grid_out.empty()) throw cmaf::DomainError("--map-grid requires --map-grid-output");
    cmaf::write_grid_csv(out, map_grid_out);
    return 0;
  }
  const auto spec_i = cmaf::spectrum(cfg.l_max, cmaf::PerturbationKind::case_i);
  const auto spec_ii = cmaf::spectrum(cfg.l_max, cmaf::PerturbationKind::case_ii);
  cmaf::CsvWriter csv(
      {"l", "lambda", "g_caseI", "k_caseI_r0", "g_caseII", "k_caseII_r0", "k_over_lambda"});
  for (int l = 0; l <= cfg.l_max; ++l) {
    const double k_over_lambda = l == 0 ? 0.0 : spec_i[l].k_coeff_r0 / spec_i[l].lambda;
    csv.append({double(l), spec_i[l].lambda, spec_i[l].g_coeff, spec_i[l].k_coeff_r0,
                spec_ii[l].g_coeff, spec_ii[l].k_coeff_r0, k_over_lambda});
  }
  emit(csv.text(), cfg.output_path);
  return 0;
}

int cmd_bondi(const RunConfig& cfg, cmaf::PerturbationKind kind, double c0,
              const std::array<double, 3>& c, const std::string& grid_export) {
  const double r0 = cfg.r0;
  cmaf::KernelPerturbation p;
  p.kind = kind;
  p.c0 = c0 / r0;
  p.c = c;
  const auto grid = cmaf::SphereGrid::for_degree(std::max(cfg.l_max, 2));
  const auto em = cmaf::energy_momentum_delta(p, grid);
  std::string out = "{";
  out += std::string("\"case\":\"") + (kind == cmaf::PerturbationKind::case_i ? "i" : "ii") + "\",";
  out += json_field("c0", cmaf::scale_dimension(p.c0, 1, r0)) + ',';
  out += json_array("c", {c[0], c[1], c[2]}) + ',';
  out += json_field("dE", cmaf::scale_dimension(em.dE, 1, r0)) + ',';
  out += json_array("dP", {cmaf::scale_dimension(em.dP[0], 1, r0),
                           cmaf::scale_dimension(em.dP[1], 1, r0),
                           cmaf::scale_dimension(em.dP[2], 1, r0)}) +
         ',';
  out += json_field("dMB", cmaf::scale_dimension(em.dMB, 1, r0)) + ',';
  out += json_field("dN_coeff", cmaf::scale_dimension(em.dN_coeff, 1, r0));
  out += "}\n";
  emit(out, cfg.output_path);
  if (!grid_export.empty()) cmaf::write_grid_csv(cmaf::delta_N_field(p, grid), grid_export);
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  cmaf::VerifyOptions opt;
  opt.l_max = cfg.l_max;
  opt.u_max = cfg.u_max_natural();
  opt.n_steps = cfg.n_steps;
  opt.tol = cfg.tol;
  const auto results = cmaf::run_verification(opt);
  emit(cmaf::verification_report(results), cfg.output_path);
  return cmaf::all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  // --config seeds the defaults; explicit flags then override
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--config") {
      try {
        load_config_file(argv[i + 1], cfg);
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
      }
    }
  }

  CLI::App app{"Linearised constant-mass-aspect-function foliation numerics"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file mirroring the run options");
  app.add_option("--r0", cfg.r0, "horizon area radius scale");
  app.add_option("--output", cfg.output_path, "output file (stdout when omitted)");

  auto* bg = app.add_subcommand("background", "background geometry at one point");
  double s = 0.0, sbar = 0.0;
  bg->add_option("--s", s, "outgoing null coordinate")->required();
  bg->add_option("--sbar", sbar, "incoming null coordinate");
  std::string bg_format;
  bg->add_option("--format", bg_format, "csv or json");

  auto* ev = app.add_subcommand("evolve", "per-mode flow trajectory");
  std::string ev_case = "i";
  int ev_l = 1;
  ev->add_option("--case", ev_case, "perturbation case, i or ii");
  ev->add_option("--l", ev_l, "spherical-harmonic degree");
  ev->add_option("--u-max", cfg.u_max, "flow range (default 10 r0)");
  ev->add_option("--n-steps", cfg.n_steps, "integration steps");

  auto* sp = app.add_subcommand("spectrum", "asymptotic eigencoefficients");
  sp->add_option("--l-max", cfg.l_max, "largest degree");
  std::string map_grid_in, map_grid_out;
  sp->add_option("--map-grid", map_grid_in, "apply the curvature map to this grid CSV");
  sp->add_option("--map-grid-output", map_grid_out, "where to write the mapped grid CSV");

  auto* bo = app.add_subcommand("bondi", "linearised energy-momentum report");
  std::string bo_case = "i";
  double c0 = 0.0;
  std::array<double, 3> c{0.0, 0.0, 0.0};
  std::string grid_export;
  bo->add_option("--case", bo_case, "perturbation case, i or ii");
  bo->add_option("--c0", c0, "constant-mode amplitude");
  bo->add_option("--c1", c[0], "first-harmonic amplitude 1");
  bo->add_option("--c2", c[1], "first-harmonic amplitude 2");
  bo->add_option("--c3", c[2], "first-harmonic amplitude 3");
  bo->add_option("--l-max", cfg.l_max, "quadrature grid degree");
  bo->add_option("--export-dn-grid", grid_export, "write the limit-N perturbation as grid CSV");

  auto* ve = app.add_subcommand("verify", "run every invariant suite");
  ve->add_option("--l-max", cfg.l_max, "largest degree");
  ve->add_option("--u-max", cfg.u_max, "flow range");
  ve->add_option("--n-steps", cfg.n_steps, "integration steps");
  ve->add_option("--tol", cfg.tol, "residual gate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!bg_format.empty()) cfg.output_format = bg_format;
    validate(cfg);
    if (bg->parsed()) return cmd_background(cfg, s, sbar);
    if (ev->parsed()) return cmd_evolve(cfg, parse_case(ev_case), ev_l);
    if (sp->parsed()) return cmd_spectrum(cfg, map_grid_in, map_grid_out);
    if (bo->parsed()) return cmd_bondi(cfg, parse_case(bo_case), c0, c, grid_export);
    if (ve->parsed()) return cmd_verify(cfg);
  } catch (const cmaf::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
