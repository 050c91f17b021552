#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "seedwave/cli.hpp"

using namespace seedwave;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream captured;
  auto* old = std::cout.rdbuf(captured.rdbuf());
  const int rc = cli::run(std::move(args));
  std::cout.rdbuf(old);
  return {rc, captured.str()};
}

void write_seed(const fs::path& path, const SeedSequence& seq) {
  write_file_atomic(path, seed_to_json(seq).dump(2) + "\n");
}

}  // namespace

TEST_CASE("gen exports a seed wavelet") {
  helpers::TempDir dir("gen");
  const auto seed_path = dir.path / "in.json";
  write_seed(seed_path, SeedSequence({1.0, -1.0}, 0.5, 0.25));

  const auto out = dir.path / "out";
  const auto r = run_cli({"gen", seed_path.string(), "--grid", "0", "1", "2001", "--out",
                          out.string()});
  REQUIRE(r.exit_code == 0);
  CHECK(fs::exists(out / "seed.json"));
  CHECK(fs::exists(out / "spectrum.csv"));
  CHECK(fs::exists(out / "manifest.json"));

  // The exported samples pass through +1 and -1 at the sample times, and the
  // overall extrema match the interpolant's known sidelobe overshoot of the
  // sample peaks (~9.2%).
  const auto csv = read_file(out / "psi.csv");
  double max_v = -10.0, min_v = 10.0, at_quarter = 0.0, at_three_quarters = 0.0;
  std::istringstream ss(csv);
  std::string line;
  std::getline(ss, line);
  REQUIRE(line == "t,psi");
  while (std::getline(ss, line)) {
    const auto comma = line.find(',');
    const double t = std::stod(line.substr(0, comma));
    const double v = std::stod(line.substr(comma + 1));
    if (t == 0.25) at_quarter = v;
    if (t == 0.75) at_three_quarters = v;
    max_v = std::max(max_v, v);
    min_v = std::min(min_v, v);
  }
  CHECK_THAT(at_quarter, Catch::Matchers::WithinAbs(1.0, 1e-12));
  CHECK_THAT(at_three_quarters, Catch::Matchers::WithinAbs(-1.0, 1e-12));
  CHECK_THAT(max_v, Catch::Matchers::WithinAbs(1.0921267639901, 1e-3));
  CHECK_THAT(min_v, Catch::Matchers::WithinAbs(-1.0921267639901, 1e-3));

  const auto manifest = json::parse(read_file(out / "manifest.json"));
  CHECK(manifest.at("command") == "gen");
  CHECK(manifest.at("tool_version") == seedwave::version);
  CHECK(manifest.at("outputs").size() == 3);
}

TEST_CASE("gen --random is reproducible byte for byte") {
  helpers::TempDir dir("gen_random");
  const auto out1 = dir.path / "a";
  const auto out2 = dir.path / "b";
  for (const auto& out : {out1, out2}) {
    const auto r = run_cli({"gen", "--random", "41", "1.0", "7", "--out", out.string()});
    REQUIRE(r.exit_code == 0);
  }
  for (const char* name : {"seed.json", "psi.csv", "spectrum.csv", "manifest.json"}) {
    CHECK(read_file(out1 / name) == read_file(out2 / name));
  }

  const auto seq = load_seed(out1 / "seed.json");
  CHECK(seq.size() == 41);
  CHECK(seq.delta() == 0.05);
  CHECK(seq.centered());
}

TEST_CASE("gen rejects non-admissible seeds unless overridden") {
  helpers::TempDir dir("gen_adm");
  const auto seed_path = dir.path / "in.json";
  write_seed(seed_path, SeedSequence({1.0, 2.0}, 1.0, 0.0));

  const auto refused =
      run_cli({"gen", seed_path.string(), "--out", (dir.path / "x").string()});
  CHECK(refused.exit_code == 1);
  CHECK_FALSE(fs::exists(dir.path / "x" / "seed.json"));

  const auto allowed = run_cli({"gen", seed_path.string(), "--allow-nonadmissible", "--out",
                                (dir.path / "y").string()});
  CHECK(allowed.exit_code == 0);
  CHECK(fs::exists(dir.path / "y" / "seed.json"));
}

TEST_CASE("gen needs exactly one seed source") {
  helpers::TempDir dir("gen_src");
  CHECK(run_cli({"gen", "--out", (dir.path / "z").string()}).exit_code == 1);
  const auto seed_path = dir.path / "in.json";
  write_seed(seed_path, SeedSequence({1.0, -1.0}, 0.5, 0.25));
  CHECK(run_cli({"gen", seed_path.string(), "--random", "5", "1", "1", "--out",
                 (dir.path / "z").string()})
            .exit_code == 1);
}

TEST_CASE("gen reports missing files as I/O failures") {
  helpers::TempDir dir("gen_io");
  const auto r = run_cli({"gen", (dir.path / "nope.json").string(), "--out",
                          (dir.path / "out").string()});
  CHECK(r.exit_code == 2);
}

TEST_CASE("verify reports the moment structure") {
  helpers::TempDir dir("verify");
  const auto seed_path = dir.path / "bump.json";
  write_seed(seed_path, SeedSequence({1.0, -2.0, 1.0}, 1.0, -1.0));

  const auto out = dir.path / "report";
  const auto r = run_cli({"verify", seed_path.string(), "--out", out.string()});
  CHECK(r.exit_code == 0);
  const auto report = json::parse(read_file(out / "report.json"));
  CHECK(report.at("pass").get<bool>());
  CHECK(report.at("moment_report").at("vanishing_order").get<int>() == 2);
  CHECK(report.at("checks").at("admissible").get<bool>());
  CHECK(report.at("checks").at("energy_identity").get<bool>());
  CHECK(report.at("checks").at("admissibility_constant").get<bool>());
  CHECK(report.at("energy_analytic").get<double>() > 0.0);

  // Also prints the same JSON on stdout.
  const auto printed = json::parse(r.out);
  CHECK(printed.at("pass").get<bool>());
}

TEST_CASE("verify fails non-admissible seeds with a nonzero exit") {
  helpers::TempDir dir("verify_fail");
  const auto seed_path = dir.path / "ramp.json";
  write_seed(seed_path, SeedSequence({1.0, 2.0}, 1.0, 0.0));
  const auto r = run_cli({"verify", seed_path.string()});
  CHECK(r.exit_code == 1);
  const auto report = json::parse(r.out);
  CHECK_FALSE(report.at("pass").get<bool>());
  CHECK_FALSE(report.at("checks").at("admissible").get<bool>());
  CHECK(report.at("admissibility_constant").is_null());
}

TEST_CASE("construct then verify round trip") {
  helpers::TempDir dir("construct");
  const auto out = dir.path / "build";
  const auto r = run_cli({"construct", "15", "3", "1.0", "7", "--out", out.string()});
  REQUIRE(r.exit_code == 0);
  CHECK(fs::exists(out / "system.json"));
  CHECK(fs::exists(out / "psi.csv"));

  const auto verify = run_cli({"verify", (out / "seed.json").string()});
  CHECK(verify.exit_code == 0);
  const auto report = json::parse(verify.out);
  CHECK(report.at("moment_report").at("vanishing_order").get<int>() >= 3);

  const auto system = json::parse(read_file(out / "system.json"));
  CHECK(system.at("p").get<int>() == 3);
  CHECK(system.at("nodes") == json::array({-1, 0, 1}));
}

TEST_CASE("construct rejects bad parity and order") {
  helpers::TempDir dir("construct_bad");
  CHECK(run_cli({"construct", "15", "4", "1.0", "7", "--out", (dir.path / "a").string()})
            .exit_code == 1);
  CHECK(run_cli({"construct", "15", "17", "1.0", "7", "--out", (dir.path / "b").string()})
            .exit_code == 1);
  CHECK(run_cli({"construct", "14", "3", "1.0", "7", "--out", (dir.path / "c").string()})
            .exit_code == 1);
}

TEST_CASE("decompose writes even and odd parts") {
  helpers::TempDir dir("decompose");
  const auto seed_path = dir.path / "u.json";
  const SeedSequence seq({3.0, 1.0, -2.0, -1.0, -1.0}, 1.0, -2.0);
  write_seed(seed_path, seq);

  const auto out = dir.path / "parts";
  const auto r = run_cli({"decompose", seed_path.string(), "--out", out.string()});
  REQUIRE(r.exit_code == 0);
  const auto even = load_seed(out / "even.json");
  const auto odd = load_seed(out / "odd.json");
  CHECK(even.values() == std::vector<double>{1.0, 0.0, -2.0, 0.0, 1.0});
  CHECK(odd.values() == std::vector<double>{2.0, 1.0, 0.0, -1.0, -2.0});
  CHECK(fs::exists(out / "even_psi.csv"));
  CHECK(fs::exists(out / "odd_psi.csv"));

  // Non-centered input is a validation failure.
  const auto off_path = dir.path / "off.json";
  write_seed(off_path, SeedSequence({1.0, -1.0}, 0.5, 0.25));
  CHECK(run_cli({"decompose", off_path.string(), "--out", (dir.path / "q").string()})
            .exit_code == 1);
}

TEST_CASE("cwt subcommand") {
  helpers::TempDir dir("cwt");
  const auto seed_path = dir.path / "u.json";
  write_seed(seed_path, SeedSequence({1.0, -1.0}, 0.5, 0.25));
  write_file_atomic(dir.path / "signal.csv", "0.5\n-0.25\n1\n0\n0.75\n");

  const auto out = dir.path / "grid";
  const auto r = run_cli({"cwt", (dir.path / "signal.csv").string(), seed_path.string(),
                          "--signal-delta", "0.25", "--scales", "1,2", "--shifts",
                          "0,0.5,1", "--out", out.string()});
  REQUIRE(r.exit_code == 0);
  const auto csv = read_file(out / "cwt.csv");
  CHECK(csv.rfind("scale,0,0.5,1\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);

  const auto manifest = json::parse(read_file(out / "manifest.json"));
  CHECK(manifest.at("parameters").at("scales") == json::array({1.0, 2.0}));
}

TEST_CASE("construct output always verifies clean") {
  helpers::TempDir dir("fuzz");
  GaussianRng rng(777);
  int ran = 0;
  for (std::uint64_t draw = 0; ran < 50; ++draw) {
    const int n = 9 + 2 * static_cast<int>(std::abs(rng.gauss()) * 8.0);
    const int p = 1 + 2 * static_cast<int>(std::abs(rng.gauss()) * 2.0);
    if (p >= n || p > 9 || n > 41) continue;
    const double variance = 0.5 + std::abs(rng.gauss());
    ++ran;
    const auto out = dir.path / ("case" + std::to_string(ran));
    const auto build = run_cli({"construct", std::to_string(n), std::to_string(p),
                                std::to_string(variance), std::to_string(draw), "--out",
                                out.string()});
    REQUIRE(build.exit_code == 0);
    const auto verify = run_cli({"verify", (out / "seed.json").string()});
    INFO("n " << n << " p " << p << " variance " << variance << " draw " << draw);
    CHECK(verify.exit_code == 0);
  }
}

TEST_CASE("help exits cleanly") {
  CHECK(run_cli({"--help"}).exit_code == 0);
  CHECK(run_cli({"gen", "--help"}).exit_code == 0);
  CHECK(run_cli({}).exit_code == 1);
  CHECK(run_cli({"bogus"}).exit_code == 1);
}
