// focklat: build sigma-type / interpolating lattice functions and run the
// numerical verification suites.
//
// Exit codes: 0 all thresholds passed, 1 threshold failure, 2 usage error
// (unknown preset, malformed input, precondition violation).

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "focklat/builders.hpp"
#include "focklat/serialize.hpp"
#include "focklat/verify.hpp"

namespace fs = std::filesystem;
using namespace focklat;

namespace {

struct RunConfig {
  int sigma_truncation = 60;
  double snap_tol = 1e-12;
  double grid_step = 0.25;
  double max_radius = 8.0;
  std::string output_dir = "out";
  std::string format = "json";

  void validate() const {
    if (sigma_truncation < 20)
      throw std::domain_error("config: sigma_truncation must be >= 20, got " +
                              std::to_string(sigma_truncation));
    if (!(snap_tol > 0.0) || snap_tol > 1e-9)
      throw std::domain_error("config: snap_tol must lie in (0, 1e-9], got " +
                              std::to_string(snap_tol));
    if (!(grid_step > 0.0) || grid_step > 0.5)
      throw std::domain_error("config: grid_step must lie in (0, 0.5], got " +
                              std::to_string(grid_step));
    if (!(max_radius > 0.0) || max_radius > 50.0)
      throw std::domain_error("config: max_radius must lie in (0, 50], got " +
                              std::to_string(max_radius));
    if (format != "json" && format != "csv")
      throw std::domain_error("config: format must be json or csv, got " + format);
  }

  SigmaEvaluator make_evaluator() const {
    SigmaEvaluator::Params p;
    p.truncation_order = sigma_truncation;
    p.snap_tol = snap_tol;
    return SigmaEvaluator(p);
  }
};

// Config file first, then flag overrides (flags win).
RunConfig load_config(const std::string& config_path,
                      const std::optional<double>& radius,
                      const std::optional<double>& grid_step,
                      const std::optional<std::string>& out,
                      const std::optional<std::string>& format) {
  RunConfig cfg;
  if (!config_path.empty()) {
    const Json j = read_json_file(config_path);
    if (j.contains("sigma_truncation")) cfg.sigma_truncation = j.at("sigma_truncation");
    if (j.contains("snap_tol")) cfg.snap_tol = j.at("snap_tol");
    if (j.contains("grid_step")) cfg.grid_step = j.at("grid_step");
    if (j.contains("max_radius")) cfg.max_radius = j.at("max_radius");
    if (j.contains("output_dir")) cfg.output_dir = j.at("output_dir");
    if (j.contains("format")) cfg.format = j.at("format");
  }
  if (radius) cfg.max_radius = *radius;
  if (grid_step) cfg.grid_step = *grid_step;
  if (out) cfg.output_dir = *out;
  if (format) cfg.format = *format;
  cfg.validate();
  return cfg;
}

struct BuiltPair {
  ComplexLattice lattice;
  LatticeFn fn;
};

MatrixXcd named_matrix(const std::string& name) {
  if (name == "identity1") return MatrixXcd::Identity(1, 1);
  if (name == "identity2") return MatrixXcd::Identity(2, 2);
  if (name == "hexagonal") return hexagonal_lattice().generator;
  return lattice_from_json(read_json_file(name)).generator;
}

std::vector<double> parse_reals(const std::string& list, const char* what) {
  std::vector<double> vals;
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t used = 0;
    const double v = std::stod(tok, &used);
    if (used != tok.size())
      throw std::domain_error(std::string(what) + ": malformed real '" + tok + "'");
    vals.push_back(v);
  }
  if (vals.empty()) throw std::domain_error(std::string(what) + ": empty list");
  return vals;
}

// key=value fields of a preset argument like "p=2,q=5".
std::string preset_field(const std::string& args, const std::string& key) {
  std::stringstream ss(args);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const size_t eq = tok.find('=');
    if (eq != std::string::npos && tok.substr(0, eq) == key) return tok.substr(eq + 1);
  }
  throw std::domain_error("preset: missing field '" + key + "=' in '" + args + "'");
}

BuiltPair build_preset(const std::string& preset) {
  if (preset == "hexagonal-n1") return {hexagonal_lattice(), preset_hexagonal_n1()};
  if (preset == "hexagonal-n2")
    return {adjoint(hexagonal_lattice()), preset_hexagonal_n2()};

  const size_t colon = preset.find(':');
  const std::string head = preset.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : preset.substr(colon + 1);

  if (head == "fail") {
    FamilyResult r = family_fail(parse_gauss_int(preset_field(args, "q")));
    return {std::move(r.lattice), std::move(r.fn)};
  }
  if (head == "corun") {
    FamilyResult r = family_rational(std::stol(preset_field(args, "p")),
                                     std::stol(preset_field(args, "q")));
    return {std::move(r.lattice), std::move(r.fn)};
  }
  if (head == "cormany") {
    ScaledFamilyResult r = family_scaled(std::stod(preset_field(args, "a")),
                                         std::stod(preset_field(args, "b")),
                                         parse_gauss_int(preset_field(args, "q")));
    return {std::move(r.lattice), std::move(r.fn)};
  }
  if (head == "tensor") {
    const MatrixXcd a = named_matrix(args);
    return {ComplexLattice(a), tensor_sigma(a)};
  }
  if (head == "known") {
    const std::vector<double> diag = parse_reals(args, "known preset");
    const int d = static_cast<int>(diag.size());
    MatrixXcd s = MatrixXcd::Zero(d, d);
    MatrixXcd gen = MatrixXcd::Zero(d, d);
    for (int j = 0; j < d; ++j) {
      s(j, j) = diag[j];
      gen(j, j) = 1.0 / diag[j];  // zeros sit on the coordinate grids
    }
    return {ComplexLattice(gen), interpolant_known(s)};
  }
  throw std::domain_error("unknown preset '" + preset + "'");
}

void write_report(const RunConfig& cfg, const std::string& stem, const Json& j,
                  const std::string& csv) {
  fs::create_directories(cfg.output_dir);
  const fs::path base = fs::path(cfg.output_dir) / stem;
  if (cfg.format == "csv")
    write_text_file((base.string() + ".csv"), csv);
  else
    write_text_file((base.string() + ".json"), j.dump(2) + "\n");
}

// Thresholds applied by cmd_verify (documented in the README).
constexpr double kResidualTol = 1e-8;
constexpr double kGrowthFactorTol = 10.0;
constexpr double kF2IncrementTol = 1e-6;
constexpr double kReconstructTol = 1e-3;

int cmd_build(const RunConfig& cfg, const std::string& preset,
              const std::string& input_file) {
  BuiltPair built = input_file.empty()
                        ? build_preset(preset)
                        : BuiltPair{lattice_from_json(read_json_file(input_file)),
                                    LatticeFn{}};
  if (!input_file.empty()) {
    // A JSON lattice file gets the tensor sigma function of its generator.
    built.fn = tensor_sigma(built.lattice.generator);
  }
  fs::create_directories(cfg.output_dir);
  write_text_file((fs::path(cfg.output_dir) / "lattice.json").string(),
                  lattice_to_json(built.lattice).dump(2) + "\n");
  write_text_file((fs::path(cfg.output_dir) / "function.json").string(),
                  fn_to_json(built.fn).dump(2) + "\n");
  std::cout << "wrote " << cfg.output_dir << "/lattice.json and function.json ("
            << built.fn.factors.size() << " factors)\n";
  return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite,
               const std::string& function_file, const std::string& lattice_file) {
  const LatticeFn fn = fn_from_json(read_json_file(function_file));
  const ComplexLattice lat = lattice_from_json(read_json_file(lattice_file));
  const SigmaEvaluator ev = cfg.make_evaluator();

  bool pass = false;
  if (suite == "vanish") {
    const VanishingReport rep = check_vanishing(fn, lat, cfg.max_radius, ev);
    write_report(cfg, "vanish", report_to_json(rep), report_to_csv(rep));
    pass = rep.max_normalized_residual < kResidualTol;
    std::cout << "vanish: residual " << rep.max_normalized_residual << " over "
              << rep.checked_points << " points -> " << (pass ? "pass" : "FAIL")
              << "\n";
  } else if (suite == "interp") {
    const InterpolationReport rep = check_interpolating(fn, lat, cfg.max_radius, ev);
    write_report(cfg, "interp", report_to_json(rep), report_to_csv(rep));
    pass = rep.origin_nonzero && rep.max_offorigin_residual < kResidualTol;
    std::cout << "interp: origin " << (rep.origin_nonzero ? "nonzero" : "ZERO")
              << ", residual " << rep.max_offorigin_residual << " -> "
              << (pass ? "pass" : "FAIL") << "\n";
    if (!rep.diagnostic.empty()) std::cout << "interp: " << rep.diagnostic << "\n";
  } else if (suite == "growth") {
    const GrowthProfile prof = estimate_growth(fn, cfg.max_radius, cfg.grid_step, ev);
    write_report(cfg, "growth", report_to_json(prof), report_to_csv(prof));
    fs::create_directories(cfg.output_dir);
    write_text_file((fs::path(cfg.output_dir) / "growth_plot.txt").string(),
                    growth_plot(prof));
    const double half = prof.max_up_to(cfg.max_radius / 2.0);
    const double full = prof.max_value();
    pass = half > 0.0 && full <= kGrowthFactorTol * half;
    std::cout << "growth: sup " << full << " at r<=" << cfg.max_radius << " vs "
              << half << " at r<=" << cfg.max_radius / 2.0 << " -> "
              << (pass ? "pass (bounded)" : "FAIL (growing)") << "\n";
  } else if (suite == "f2") {
    const double half = f2_quadrature(fn, cfg.max_radius / 2.0, cfg.grid_step, ev);
    const double full = f2_quadrature(fn, cfg.max_radius, cfg.grid_step, ev);
    const Json j{{"type", "f2"},
                 {"radius_half", cfg.max_radius / 2.0},
                 {"value_half", half},
                 {"radius", cfg.max_radius},
                 {"value", full},
                 {"increment", full - half}};
    std::ostringstream csv;
    csv << "radius_half,value_half,radius,value,increment\n"
        << cfg.max_radius / 2.0 << ',' << half << ',' << cfg.max_radius << ','
        << full << ',' << full - half << '\n';
    write_report(cfg, "f2", j, csv.str());
    pass = full - half < kF2IncrementTol;
    std::cout << "f2: " << half << " -> " << full << " (increment " << full - half
              << ") -> " << (pass ? "pass (convergent)" : "FAIL (divergent)") << "\n";
  } else if (suite == "reconstruct") {
    if (fn.dim != 1)
      throw std::domain_error("verify reconstruct: d = 1 functions only");
    VectorXcd z(1);
    z(0) = Complex(0.3, 0.2);
    LagrangeTrace trace;
    const Complex value = lagrange_reconstruct(
        [](const VectorXcd&) { return Complex(1.0, 0.0); }, fn, lat, z,
        cfg.max_radius, LagrangeWeight::kFull, &trace, ev);
    Json j = report_to_json(trace);
    j["value"] = Json{{"re", value.real()}, {"im", value.imag()}};
    j["error"] = std::abs(value - Complex(1.0, 0.0));
    write_report(cfg, "reconstruct", j, report_to_csv(trace));
    pass = std::abs(value - Complex(1.0, 0.0)) < kReconstructTol;
    std::cout << "reconstruct: F==1 at z=0.3+0.2i gives " << value << " -> "
              << (pass ? "pass" : "FAIL") << "\n";
  } else {
    throw std::domain_error("unknown suite '" + suite +
                            "' (vanish|interp|growth|f2|reconstruct)");
  }
  return pass ? 0 : 1;
}

int cmd_repro(const RunConfig& cfg, const std::string& table) {
  const SigmaEvaluator ev = cfg.make_evaluator();
  Json summary = Json::array();
  bool all_pass = true;
  fs::create_directories(cfg.output_dir);

  auto record = [&](const std::string& name, bool pass, Json detail) {
    detail["case"] = name;
    detail["pass"] = pass;
    summary.push_back(detail);
    if (!pass) all_pass = false;
    std::cout << name << ": " << (pass ? "pass" : "FAIL") << "\n";
  };

  if (table == "thm-fail") {
    for (const std::string qs : {"2", "1+1i", "2+1i"}) {
      FamilyResult fam = family_fail(parse_gauss_int(qs));
      const VanishingReport van = check_vanishing(fam.fn, fam.lattice, 4.0, ev);
      const GrowthProfile prof = estimate_growth(fam.fn, 8.0, cfg.grid_step, ev);
      const bool pass = van.max_normalized_residual < kResidualTol &&
                        prof.value_at(8.0) <= 1.1 * prof.max_up_to(4.0);
      record("fail:q=" + qs, pass,
             Json{{"vanish_residual", van.max_normalized_residual},
                  {"growth_r4", prof.max_up_to(4.0)},
                  {"growth_r8", prof.value_at(8.0)}});
      write_text_file(
          (fs::path(cfg.output_dir) / ("growth_q_" + qs + ".txt")).string(),
          growth_plot(prof));
    }
  } else if (table == "hexagonal") {
    const ComplexLattice hex = hexagonal_lattice();
    std::vector<std::pair<std::string, LatticeFn>> cases;
    cases.emplace_back("n1-preset", preset_hexagonal_n1());
    cases.emplace_back("general-q2", family_fail(GaussInt(2)).fn);
    for (const auto& [name, fn] : cases) {
      const VanishingReport van = check_vanishing(fn, hex, 4.0, ev);
      const GrowthProfile prof = estimate_growth(fn, 6.0, cfg.grid_step, ev);
      record(name, van.max_normalized_residual < kResidualTol,
             Json{{"vanish_residual", van.max_normalized_residual},
                  {"growth_max", prof.max_value()}});
    }
    const InterpolationReport interp =
        check_interpolating(preset_hexagonal_n2(), adjoint(hex), 4.0, ev);
    record("n2-preset", interp.origin_nonzero,
           Json{{"origin_log_mag", interp.origin_value.log_mag},
                {"offorigin_residual", interp.max_offorigin_residual}});
  } else if (table == "weak-sampling") {
    for (const double gamma : {0.8, 1.0}) {
      MatrixXcd a(1, 1);
      a(0, 0) = gamma;
      ComplexLattice lam(a);
      MatrixXcd s(1, 1);
      s(0, 0) = gamma;
      LatticeFn g = interpolant_known(s);
      g.pre_const -= std::log(gamma);  // normalize G(0) = 1
      VectorXcd z(1);
      z(0) = Complex(0.3, 0.2);
      LagrangeTrace trace;
      const Complex value =
          lagrange_reconstruct([](const VectorXcd&) { return Complex(1.0, 0.0); },
                               g, lam, z, 8.0, LagrangeWeight::kFull, &trace, ev);
      const double err = std::abs(value - Complex(1.0, 0.0));
      const bool expected_convergent = gamma < 1.0;
      // The gamma = 1 trace is evidence, not a failure: convergence is weak
      // only, and the report keeps the non-decreasing error visible.
      record("gamma=" + std::to_string(gamma),
             !expected_convergent || err < kReconstructTol,
             Json{{"value_re", value.real()},
                  {"value_im", value.imag()},
                  {"error", err},
                  {"expected_convergent", expected_convergent}});
      write_text_file(
          (fs::path(cfg.output_dir) / ("reconstruct_gamma_" + std::to_string(gamma) + ".csv"))
              .string(),
          report_to_csv(trace));
    }
  } else {
    throw std::domain_error("unknown table '" + table +
                            "' (thm-fail|weak-sampling|hexagonal)");
  }

  write_text_file((fs::path(cfg.output_dir) / "summary.json").string(),
                  summary.dump(2) + "\n");
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sigma-type and interpolating functions on complex lattices"};
  app.require_subcommand(1);
  // Global flags may appear after the subcommand name.
  app.fallthrough();

  std::string config_path;
  std::optional<double> radius, grid_step;
  std::optional<std::string> out, format;
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--radius", radius, "ball / profile radius");
  app.add_option("--grid-step", grid_step, "grid step for scans");
  app.add_option("--out", out, "output directory");
  app.add_option("--format", format, "report format: json or csv");

  auto* build = app.add_subcommand("build", "construct a lattice + function pair");
  std::string preset, input_file;
  build->add_option("--preset", preset,
                    "hexagonal-n1 | hexagonal-n2 | fail:q=G | corun:p=I,q=I | "
                    "cormany:a=R,b=R,q=G | tensor:NAME-or-file | known:diag");
  build->add_option("--input", input_file, "lattice JSON file");

  auto* verify = app.add_subcommand("verify", "run one verification suite");
  std::string suite, function_file, lattice_file;
  verify->add_option("suite", suite, "vanish|interp|growth|f2|reconstruct")->required();
  verify->add_option("--function", function_file, "function JSON")->required();
  verify->add_option("--lattice", lattice_file, "lattice JSON")->required();

  auto* repro = app.add_subcommand("repro", "run a full reproduction bundle");
  std::string table;
  repro->add_option("table", table, "thm-fail|weak-sampling|hexagonal")->required();

  try {
    app.parse(argc, argv);
    const RunConfig cfg = load_config(config_path, radius, grid_step, out, format);
    if (build->parsed()) {
      if (preset.empty() == input_file.empty())
        throw std::domain_error("build: exactly one of --preset / --input required");
      return cmd_build(cfg, preset, input_file);
    }
    if (verify->parsed()) return cmd_verify(cfg, suite, function_file, lattice_file);
    return cmd_repro(cfg, table);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
