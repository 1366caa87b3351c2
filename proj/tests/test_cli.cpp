#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sqz/entropy.hpp"
#include "sqz/format.hpp"
#include "sqz/parton.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// env prefix like "OMP_NUM_THREADS=4 " lets us vary the worker count
RunResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd =
      env + std::string(SQZ_CLI_PATH) + " " + args + " >cli_out.tmp 2>cli_err.tmp";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.code = (raw >= 0) ? ((raw >> 8) & 0xff) : -1;
  r.out = slurp("cli_out.tmp");
  return r;
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("help and usage errors") {
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("").code == 2);                      // subcommand required
  CHECK(run_cli("no-such-command").code == 2);
  CHECK(run_cli("entropy-sweep --bogus-flag 1").code == 2);
}

TEST_CASE("entropy sweep CSV: header, endpoints, and exact field rendering") {
  const RunResult r = run_cli("entropy-sweep --eta-min 0 --eta-max 2 --steps 3");
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "eta,purity,entropy,temperature");
  CHECK(lines[1] == "0,1,0,0");  // the uncoupled row is exact
  const std::string expect_mid = sqz::g17(1.0) + ',' + sqz::g17(sqz::purity(1.0)) + ',' +
                                 sqz::g17(sqz::entropy(1.0)) + ',' +
                                 sqz::g17(sqz::effective_temperature(1.0, 1.0).temperature);
  CHECK(lines[2] == expect_mid);
  CHECK(lines[3].substr(0, 2) == "2,");
}

TEST_CASE("entropy sweep rejects degenerate ranges and bad steps") {
  CHECK(run_cli("entropy-sweep --eta-min 2 --eta-max 1").code == 2);
  CHECK(run_cli("entropy-sweep --eta-min 1 --eta-max 1").code == 2);
  CHECK(run_cli("entropy-sweep --eta-min -0.5 --eta-max 1").code == 2);
  CHECK(run_cli("entropy-sweep --steps 1").code == 2);
  CHECK(run_cli("entropy-sweep --omega 0").code == 2);
}

TEST_CASE("entropy sweep JSON mirrors the CSV values") {
  const RunResult r =
      run_cli("entropy-sweep --eta-min 0 --eta-max 3 --steps 4 --format json");
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  REQUIRE(doc["columns"].size() == 4);
  CHECK(doc["columns"][0] == "eta");
  REQUIRE(doc["rows"].size() == 4);
  CHECK(doc["rows"][0][1].get<double>() == 1.0);
  CHECK(doc["rows"][3][0].get<double>() == 3.0);
  CHECK(doc["rows"][3][1].get<double>() == sqz::purity(3.0));
  CHECK(doc["rows"][3][2].get<double>() == sqz::entropy(3.0));
}

TEST_CASE("schmidt spectrum output and the kmax override") {
  const RunResult r = run_cli("schmidt --eta 2 --tol 1e-6 --format json");
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["eta"].get<double>() == 2.0);
  const auto spec = sqz::schmidt_spectrum(2.0, 1e-6);
  REQUIRE(doc["rows"].size() == spec.lambdas.size());
  CHECK(doc["rows"][0][1].get<double>() == spec.lambdas[0]);
  CHECK(doc["truncation_error"].get<double>() == spec.truncation_error);

  const RunResult capped = run_cli("schmidt --eta 2 --tol 1e-6 --kmax 3 --format json");
  REQUIRE(capped.code == 0);
  CHECK(json::parse(capped.out)["rows"].size() == 4);

  const RunResult csv = run_cli("schmidt --eta 2 --tol 1e-6");
  REQUIRE(csv.code == 0);
  CHECK(lines_of(csv.out)[0] == "k,lambda");
  CHECK(lines_of(csv.out).size() == spec.lambdas.size() + 1);
}

TEST_CASE("schmidt at extreme rapidity reports a numerical-domain error") {
  CHECK(run_cli("schmidt --eta 20 --tol 1e-12").code == 3);
}

TEST_CASE("squeeze grid shape, frozen center value, and argmax on the diagonal") {
  const RunResult r = run_cli("squeeze-grid --eta 0 --extent 3 --points 33");
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 1 + 33 * 33);
  CHECK(lines[0] == "z,t,density");
  // center value is 1/pi for the unsqueezed state
  bool found = false;
  for (const auto& line : lines) {
    if (line.rfind("0,0,", 0) == 0) {
      found = true;
      const double d = std::strtod(line.c_str() + 4, nullptr);
      CHECK(d == doctest::Approx(0.31830988618379067154).epsilon(1e-15));
    }
  }
  CHECK(found);

  // squeezed density concentrates on z = t; true for odd and even grids
  for (const char* pts : {"41", "40"}) {
    const RunResult g =
        run_cli(std::string("squeeze-grid --eta 1 --extent 3 --points ") + pts);
    REQUIRE(g.code == 0);
    double best = -1.0;
    std::string bz, bt;
    for (const auto& line : lines_of(g.out)) {
      if (line.rfind("z,", 0) == 0) continue;
      const auto c1 = line.find(','), c2 = line.rfind(',');
      const double d = std::strtod(line.c_str() + c2 + 1, nullptr);
      if (d > best) {
        best = d;
        bz = line.substr(0, c1);
        bt = line.substr(c1 + 1, c2 - c1 - 1);
      }
    }
    CHECK(bz == bt);
  }
}

TEST_CASE("squeeze grid validates its numeric window") {
  CHECK(run_cli("squeeze-grid --points 4").code == 2);
  CHECK(run_cli("squeeze-grid --points 4097").code == 2);
  CHECK(run_cli("squeeze-grid --extent 0").code == 2);
  CHECK(run_cli("squeeze-grid --representation sideways").code == 2);
}

TEST_CASE("squeeze grid momentum representation carries its own header") {
  const RunResult r =
      run_cli("squeeze-grid --eta 0.5 --extent 3 --points 9 --representation momentum");
  REQUIRE(r.code == 0);
  CHECK(lines_of(r.out)[0] == "qz,q0,density");
}

TEST_CASE("squeeze grid density sums to unit mass") {
  const RunResult r = run_cli("squeeze-grid --eta 0.5 --extent 8 --points 129");
  REQUIRE(r.code == 0);
  double mass = 0.0;
  for (const auto& line : lines_of(r.out)) {
    if (line.rfind("z,", 0) == 0) continue;
    mass += std::strtod(line.c_str() + line.rfind(',') + 1, nullptr);
  }
  const double h = 16.0 / 128.0;
  CHECK(mass * h * h == doctest::Approx(1.0).epsilon(5e-3));
}

TEST_CASE("parton report JSON schema and frozen benchmark row") {
  const RunResult r = run_cli("parton-report --beam-energy-gev 900 --mass-gev 0.938");
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  const auto rep =
      sqz::parton_report(sqz::PartonKinematics::from_beam(900.0, 0.938), 1.0);
  CHECK(doc["rapidity"].get<double>() == rep.rapidity);
  CHECK(doc["period_dilation"].get<double>() == rep.period_dilation);
  CHECK(doc["interaction_ratio"].get<double>() == rep.interaction_ratio);
  CHECK(doc["entropy"].get<double>() == rep.entropy);
  CHECK(doc["temperature"].get<double>() == rep.temperature);
  CHECK(doc["var_z"].get<double>() == rep.var_z);
  CHECK(doc["var_qz"].get<double>() == rep.var_qz);
  CHECK(doc["paper_reference_ratio"].get<double>() == 1e-6);

  const RunResult csv =
      run_cli("parton-report --beam-energy-gev 900 --mass-gev 0.938 --format csv");
  REQUIRE(csv.code == 0);
  CHECK(lines_of(csv.out)[0].rfind("rapidity,", 0) == 0);
  REQUIRE(lines_of(csv.out).size() == 2);
}

TEST_CASE("parton report below threshold yields a structured error") {
  const RunResult r = run_cli("parton-report --beam-energy-gev 0.5 --mass-gev 0.938");
  CHECK(r.code == 3);
  const json doc = json::parse(r.out);
  CHECK(doc.contains("error"));
}

TEST_CASE("momentum energy convention changes the rapidity as expected") {
  const RunResult r = run_cli(
      "parton-report --beam-energy-gev 900 --mass-gev 0.938 --energy-convention momentum");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["rapidity"].get<double>() ==
        doctest::Approx(7.5595475454168479).epsilon(1e-13));
}

TEST_CASE("output flag writes the same bytes to a file, stdout stays quiet") {
  const RunResult direct = run_cli("entropy-sweep --eta-min 0 --eta-max 1 --steps 5");
  REQUIRE(direct.code == 0);
  std::remove("sweep_file.tmp");
  const RunResult filed =
      run_cli("entropy-sweep --eta-min 0 --eta-max 1 --steps 5 --output sweep_file.tmp");
  REQUIRE(filed.code == 0);
  CHECK(filed.out.empty());
  CHECK(slurp("sweep_file.tmp") == direct.out);
  std::remove("sweep_file.tmp");
}

TEST_CASE("byte-identical reruns, independent of the worker count") {
  const std::string cmd = "squeeze-grid --eta 1 --extent 4 --points 64";
  const RunResult a = run_cli(cmd);
  const RunResult b = run_cli(cmd);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const RunResult one = run_cli(cmd, "OMP_NUM_THREADS=1 ");
  const RunResult four = run_cli(cmd, "OMP_NUM_THREADS=4 ");
  REQUIRE(one.code == 0);
  REQUIRE(four.code == 0);
  CHECK(one.out == four.out);
  CHECK(one.out == a.out);

  const std::string verify_like = "parton-report --beam-energy-gev 1800 --mass-gev 0.938";
  CHECK(run_cli(verify_like, "OMP_NUM_THREADS=1 ").out ==
        run_cli(verify_like, "OMP_NUM_THREADS=4 ").out);
}

TEST_CASE("fast verification profile passes from the command line") {
  const RunResult r = run_cli("verify --profile fast");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("verification:") != std::string::npos);
  CHECK(run_cli("verify --profile sloppy").code == 2);
}
