// Command-line front end: sweeps, spectra, density grids, beam reports, and
// the self-verification suite. All numeric output renders with 17 significant
// digits so repeated runs are byte-identical regardless of thread count.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sqz/entropy.hpp"
#include "sqz/format.hpp"
#include "sqz/kernels.hpp"
#include "sqz/lorentz.hpp"
#include "sqz/parton.hpp"
#include "sqz/verify.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_domain = 3;
constexpr int exit_verify = 4;

// Assemble everything first, then write in one shot: a failed run must not
// leave partial output behind.
int deliver(const std::string& body, const std::string& path) {
  if (path.empty()) {
    std::cout << body;
    return exit_ok;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file '" << path << "'\n";
    return exit_usage;
  }
  out << body;
  if (!out) {
    std::cerr << "error: failed writing output file '" << path << "'\n";
    return exit_usage;
  }
  return exit_ok;
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> xs(static_cast<std::size_t>(n));
  const double h = (b - a) / (n - 1);
  for (int i = 0; i < n; ++i) xs[i] = a + i * h;
  xs[n - 1] = b;
  return xs;
}

struct SweepOpts {
  double eta_min = 0.0, eta_max = 6.0, omega = 1.0;
  int steps = 61;
  std::string format = "csv", output;
};

int run_sweep(const SweepOpts& o) {
  if (!(o.eta_max > o.eta_min)) {
    std::cerr << "error: --eta-max must exceed --eta-min\n";
    return exit_usage;
  }
  const std::vector<double> etas = linspace(o.eta_min, o.eta_max, o.steps);
  std::string body;
  if (o.format == "csv") {
    body = "eta,purity,entropy,temperature\n";
    for (double eta : etas) {
      body += sqz::g17(eta) + ',' + sqz::g17(sqz::purity(eta)) + ',' +
              sqz::g17(sqz::entropy(eta)) + ',' +
              sqz::g17(sqz::effective_temperature(eta, o.omega).temperature) + '\n';
    }
  } else {
    ordered_json doc;
    doc["omega"] = o.omega;
    doc["columns"] = {"eta", "purity", "entropy", "temperature"};
    auto& rows = doc["rows"] = ordered_json::array();
    for (double eta : etas) {
      rows.push_back({eta, sqz::purity(eta), sqz::entropy(eta),
                      sqz::effective_temperature(eta, o.omega).temperature});
    }
    body = doc.dump(2) + '\n';
  }
  return deliver(body, o.output);
}

struct SchmidtOpts {
  double eta = 1.0, tol = 1e-12;
  int kmax = -1;  // < 0: keep the tolerance-driven length
  std::string format = "csv", output;
};

int run_schmidt(const SchmidtOpts& o) {
  sqz::SchmidtSpectrum spec = sqz::schmidt_spectrum(o.eta, o.tol);
  if (o.kmax >= 0 && static_cast<std::size_t>(o.kmax) + 1 < spec.lambdas.size()) {
    spec.lambdas.resize(static_cast<std::size_t>(o.kmax) + 1);
    const double th = std::tanh(0.5 * o.eta);
    spec.truncation_error = std::pow(th * th, double(o.kmax) + 1.0);
  }
  std::string body;
  if (o.format == "csv") {
    body = "k,lambda\n";
    for (std::size_t k = 0; k < spec.lambdas.size(); ++k) {
      body += std::to_string(k) + ',' + sqz::g17(spec.lambdas[k]) + '\n';
    }
  } else {
    ordered_json doc;
    doc["eta"] = spec.eta;
    doc["truncation_error"] = spec.truncation_error;
    doc["columns"] = {"k", "lambda"};
    auto& rows = doc["rows"] = ordered_json::array();
    for (std::size_t k = 0; k < spec.lambdas.size(); ++k) {
      rows.push_back({k, spec.lambdas[k]});
    }
    body = doc.dump(2) + '\n';
  }
  return deliver(body, o.output);
}

struct GridOpts {
  double eta = 1.0, extent = 4.0;
  int points = 101;
  std::string representation = "space", format = "csv", output;
};

int run_grid(const GridOpts& o) {
  if (o.points < 5 || o.points > 4096) {
    std::cerr << "error: --points must lie in [5, 4096]\n";
    return exit_usage;
  }
  if (!(o.extent > 0.0) || !std::isfinite(o.extent)) {
    std::cerr << "error: --extent must be positive\n";
    return exit_usage;
  }
  const sqz::BoostedOscillatorState state{o.eta};
  const bool space = o.representation == "space";
  const std::vector<double> axis = linspace(-o.extent, o.extent, o.points);
  std::vector<double> density(axis.size() * axis.size());
  // grid evaluation may parallelize; assembly below is strictly ordered
  sqz::grid_map(
      [&state, space](double a, double b) {
        const double amp = space ? state.spatial(a, b) : state.momentum(a, b);
        return amp * amp;
      },
      axis, axis, std::span<double>(density));

  const char* c1 = space ? "z" : "qz";
  const char* c2 = space ? "t" : "q0";
  std::string body;
  if (o.format == "csv") {
    body.reserve(density.size() * 40);
    body = std::string(c1) + ',' + c2 + ",density\n";
    for (std::size_t i = 0; i < axis.size(); ++i) {
      for (std::size_t j = 0; j < axis.size(); ++j) {
        body += sqz::g17(axis[i]) + ',' + sqz::g17(axis[j]) + ',' +
                sqz::g17(density[i * axis.size() + j]) + '\n';
      }
    }
  } else {
    ordered_json doc;
    doc["representation"] = o.representation;
    doc["eta"] = o.eta;
    doc["columns"] = {c1, c2, "density"};
    auto& rows = doc["rows"] = ordered_json::array();
    for (std::size_t i = 0; i < axis.size(); ++i) {
      for (std::size_t j = 0; j < axis.size(); ++j) {
        rows.push_back({axis[i], axis[j], density[i * axis.size() + j]});
      }
    }
    body = doc.dump(2) + '\n';
  }
  return deliver(body, o.output);
}

struct PartonOpts {
  double beam_energy = 900.0, mass = 0.938, omega = 1.0;
  std::string convention = "total", format = "json", output;
};

int run_parton(const PartonOpts& o) {
  sqz::PartonReport rep;
  try {
    const auto conv = o.convention == "total" ? sqz::EnergyConvention::total
                                              : sqz::EnergyConvention::momentum;
    rep = sqz::parton_report(sqz::PartonKinematics::from_beam(o.beam_energy, o.mass, conv),
                             o.omega);
  } catch (const std::domain_error& e) {
    ordered_json err;
    err["error"] = e.what();
    std::cout << err.dump(2) << '\n';
    return exit_domain;
  }
  std::string body;
  if (o.format == "csv") {
    body =
        "rapidity,period_dilation,interaction_ratio,entropy,temperature,var_z,var_qz,"
        "paper_reference_ratio\n";
    body += sqz::g17(rep.rapidity) + ',' + sqz::g17(rep.period_dilation) + ',' +
            sqz::g17(rep.interaction_ratio) + ',' + sqz::g17(rep.entropy) + ',' +
            sqz::g17(rep.temperature) + ',' + sqz::g17(rep.var_z) + ',' +
            sqz::g17(rep.var_qz) + ',' + sqz::g17(sqz::reference_interaction_ratio) + '\n';
  } else {
    ordered_json doc;
    doc["rapidity"] = rep.rapidity;
    doc["period_dilation"] = rep.period_dilation;
    doc["interaction_ratio"] = rep.interaction_ratio;
    doc["entropy"] = rep.entropy;
    doc["temperature"] = rep.temperature;
    doc["var_z"] = rep.var_z;
    doc["var_qz"] = rep.var_qz;
    doc["paper_reference_ratio"] = sqz::reference_interaction_ratio;
    body = doc.dump(2) + '\n';
  }
  return deliver(body, o.output);
}

struct VerifyOpts {
  std::string profile = "fast";
  bool strict = false;
  std::string output;
};

int run_verify(const VerifyOpts& o) {
  const auto profile = (o.strict || o.profile == "strict") ? sqz::verify::Profile::strict
                                                           : sqz::verify::Profile::fast;
  const auto start = std::chrono::steady_clock::now();
  const std::vector<sqz::verify::Check> checks = sqz::verify::run_all(profile);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::string body;
  int failed = 0;
  for (const auto& c : checks) {
    if (!c.pass) ++failed;
    body += (c.pass ? "PASS  " : "FAIL  ") + c.name +
            "  measured=" + sqz::g17(c.measured) + "  bound=" + sqz::g17(c.bound) + '\n';
  }
  char line[160];
  std::snprintf(line, sizeof(line), "verification: %zu checks, %d failed (%s, %.2f s)\n",
                checks.size(), failed,
                profile == sqz::verify::Profile::strict ? "strict" : "fast", secs);
  body += line;
  const int rc = deliver(body, o.output);
  if (rc != exit_ok) return rc;
  return failed == 0 ? exit_ok : exit_verify;
}

void add_io_options(CLI::App* cmd, std::string& format, std::string& output) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output", output, "Write to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coupled-oscillator entanglement and Lorentz-squeeze toolkit"};
  app.require_subcommand(1);

  SweepOpts sweep;
  auto* c_sweep = app.add_subcommand("entropy-sweep",
                                     "Purity, entropy and effective temperature over an eta range");
  c_sweep->add_option("--eta-min", sweep.eta_min)->check(CLI::NonNegativeNumber);
  c_sweep->add_option("--eta-max", sweep.eta_max)->check(CLI::NonNegativeNumber);
  c_sweep->add_option("--steps", sweep.steps)->check(CLI::Range(2, 100000));
  c_sweep->add_option("--omega", sweep.omega)->check(CLI::PositiveNumber);
  add_io_options(c_sweep, sweep.format, sweep.output);

  SchmidtOpts schmidt;
  auto* c_schmidt = app.add_subcommand("schmidt", "Reduced-density eigenvalue spectrum");
  c_schmidt->add_option("--eta", schmidt.eta);
  c_schmidt->add_option("--tol", schmidt.tol)->check(CLI::PositiveNumber);
  c_schmidt->add_option("--kmax", schmidt.kmax, "Hard cap on the listed eigenvalues")
      ->check(CLI::Range(0, 1 << 22));
  add_io_options(c_schmidt, schmidt.format, schmidt.output);

  GridOpts grid;
  auto* c_grid = app.add_subcommand("squeeze-grid",
                                    "Probability density of the boosted state on a square grid");
  c_grid->add_option("--eta", grid.eta);
  c_grid->add_option("--extent", grid.extent);
  c_grid->add_option("--points", grid.points);
  c_grid->add_option("--representation", grid.representation)
      ->check(CLI::IsMember({"space", "momentum"}));
  add_io_options(c_grid, grid.format, grid.output);

  PartonOpts parton;
  auto* c_parton = app.add_subcommand("parton-report", "Boosted-beam observables");
  c_parton->add_option("--beam-energy-gev", parton.beam_energy)->check(CLI::PositiveNumber);
  c_parton->add_option("--mass-gev", parton.mass)->check(CLI::PositiveNumber);
  c_parton->add_option("--energy-convention", parton.convention)
      ->check(CLI::IsMember({"total", "momentum"}));
  c_parton->add_option("--omega", parton.omega)->check(CLI::PositiveNumber);
  add_io_options(c_parton, parton.format, parton.output);

  VerifyOpts verify;
  auto* c_verify = app.add_subcommand("verify", "Run the numerical self-checks");
  c_verify->add_option("--profile", verify.profile)
      ->check(CLI::IsMember({"fast", "strict"}));
  c_verify->add_flag("--strict", verify.strict, "Shorthand for --profile strict");
  c_verify->add_option("--output", verify.output, "Write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*c_sweep) return run_sweep(sweep);
    if (*c_schmidt) return run_schmidt(schmidt);
    if (*c_grid) return run_grid(grid);
    if (*c_parton) return run_parton(parton);
    if (*c_verify) return run_verify(verify);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_domain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_domain;
  }
  return exit_usage;
}
