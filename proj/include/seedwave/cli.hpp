#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "seedwave/construct.hpp"
#include "seedwave/errors.hpp"
#include "seedwave/io.hpp"
#include "seedwave/moments.hpp"
#include "seedwave/seed_sequence.hpp"
#include "seedwave/transform.hpp"
#include "seedwave/version.hpp"
#include "seedwave/wavelet.hpp"

namespace seedwave::cli {

namespace fs = std::filesystem;
using nlohmann::json;

/// Written alongside every file-producing command's outputs: command name,
/// the full resolved parameter set (rng seed included), tool version and the
/// output file list. No timestamps, so identical parameters yield a
/// byte-identical manifest and re-runs reproduce outputs bit for bit.
struct RunManifest {
  std::string command;
  json parameters;
  std::string tool_version = seedwave::version;
  std::vector<std::string> outputs;

  json to_json() const {
    return json{{"command", command},
                {"parameters", parameters},
                {"tool_version", tool_version},
                {"outputs", outputs}};
  }
};

namespace detail_cli {

inline void write_manifest(const fs::path& dir, const std::string& command,
                           const json& parameters, std::vector<std::string> outputs) {
  std::sort(outputs.begin(), outputs.end());
  const RunManifest manifest{command, parameters, seedwave::version, std::move(outputs)};
  write_file_atomic(dir / "manifest.json", manifest.to_json().dump(2) + "\n");
}

struct GridSpec {
  double start;
  double end;
  int count;
};

/// Default sampling window: the seed's support padded by a quarter span plus
/// one period on each side, 1001 points.
inline GridSpec default_grid(const SeedSequence& seq) {
  const double first = seq.t0();
  const double last = seq.sample_time(static_cast<std::ptrdiff_t>(seq.size()) - 1);
  const double pad = 0.25 * (last - first) + seq.delta();
  return {first - pad, last + pad, 1001};
}

inline GridSpec grid_from_option(const std::vector<double>& opt, const SeedSequence& seq) {
  if (opt.empty()) return default_grid(seq);
  const int count = static_cast<int>(opt[2]);
  if (static_cast<double>(count) != opt[2] || count < 2) {
    throw ValidationError(errc::bad_grid, "--grid COUNT must be an integer >= 2");
  }
  return {opt[0], opt[1], count};
}

inline std::string psi_csv(const SeedWavelet& w, const GridSpec& g) {
  const auto grid = w.evaluate_grid(g.start, g.end, g.count);
  return wavelet_grid_csv(grid);
}

inline std::string spectrum_csv_for(const SeedWavelet& w, int count = 1001) {
  std::vector<std::pair<double, std::complex<double>>> samples;
  samples.reserve(static_cast<std::size_t>(count));
  const double omega_max = w.band_edge();
  const double step = 2.0 * omega_max / static_cast<double>(count - 1);
  for (int i = 0; i < count; ++i) {
    const double omega =
        (i == count - 1) ? omega_max : -omega_max + static_cast<double>(i) * step;
    samples.emplace_back(omega, w.spectrum(omega));
  }
  return spectrum_csv(samples);
}

inline json grid_to_json(const GridSpec& g) {
  return json{{"start", g.start}, {"end", g.end}, {"count", g.count}};
}

// ---- gen ----

struct GenOptions {
  std::string seed_file;
  std::vector<double> random;  // n, variance, rng_seed
  std::optional<double> delta;
  std::optional<double> t0;
  std::vector<double> grid;
  bool allow_nonadmissible = false;
  std::string out_dir;
};

inline int run_gen(const GenOptions& opt) {
  SeedSequence seq = [&] {
    if (!opt.random.empty()) {
      const auto n = static_cast<int>(opt.random[0]);
      const auto rng_seed = static_cast<std::uint64_t>(opt.random[2]);
      if (static_cast<double>(n) != opt.random[0] ||
          static_cast<double>(rng_seed) != opt.random[2]) {
        throw ValidationError(errc::bad_config, "--random N and SEED must be integers");
      }
      return random_seed(n, opt.random[1], rng_seed, opt.delta);
    }
    return load_seed(opt.seed_file);
  }();

  if (opt.random.empty() && (opt.delta || opt.t0)) {
    seq = SeedSequence(seq.values(), opt.delta.value_or(seq.delta()),
                       opt.t0.value_or(seq.t0()));
  } else if (!opt.random.empty() && opt.t0) {
    seq = SeedSequence(seq.values(), seq.delta(), *opt.t0);
  }

  if (!seq.admissible() && !opt.allow_nonadmissible) {
    throw AdmissibilityError(
        "seed is not admissible (sum = " + format_double(seq.sum()) +
        "); pass --allow-nonadmissible to export anyway");
  }

  const SeedWavelet w(seq);
  const GridSpec grid = grid_from_option(opt.grid, seq);
  const fs::path dir(opt.out_dir);
  write_file_atomic(dir / "seed.json", seed_to_json(seq).dump(2) + "\n");
  write_file_atomic(dir / "psi.csv", psi_csv(w, grid));
  write_file_atomic(dir / "spectrum.csv", spectrum_csv_for(w));

  json params{{"grid", grid_to_json(grid)},
              {"allow_nonadmissible", opt.allow_nonadmissible},
              {"delta", seq.delta()},
              {"t0", seq.t0()}};
  if (!opt.random.empty()) {
    params["random"] = {{"n", static_cast<int>(opt.random[0])},
                        {"variance", opt.random[1]},
                        {"rng_seed", static_cast<std::uint64_t>(opt.random[2])}};
  } else {
    params["seed_file"] = opt.seed_file;
  }
  write_manifest(dir, "gen", params, {"seed.json", "psi.csv", "spectrum.csv"});
  return 0;
}

// ---- verify ----

struct VerifyOptions {
  std::string seed_file;
  int max_order = 8;
  std::string out_dir;  // optional
};

inline json verify_report(const SeedSequence& seq, int max_order) {
  json report;
  report["seed"] = seed_to_json(seq);
  report["centered"] = seq.centered();
  report["sum"] = seq.sum();
  report["mean"] = seq.mean();
  report["admissible"] = seq.admissible();

  const SeedWavelet w(seq);
  json checks;
  checks["admissible"] = seq.admissible();

  // Interpolation identity at the sample times.
  double max_dev = 0.0;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    max_dev = std::max(max_dev, std::abs(w.evaluate(seq.sample_time(
                                     static_cast<std::ptrdiff_t>(k))) -
                                 seq.values()[k]));
  }
  report["interpolation_max_deviation"] = max_dev;
  checks["interpolation_identity"] = max_dev <= 1e-12 * std::max(1.0, seq.max_abs());

  // Energy: closed form vs quadrature of Psi^2 over +-200*n*delta.
  const double analytic = w.energy();
  report["energy_analytic"] = analytic;
  bool energy_ok = false;
  try {
    const IntegralResult qr = energy_quadrature(w);
    report["energy_quadrature"] = qr.value;
    report["energy_quadrature_error_estimate"] = qr.error_estimate;
    energy_ok = analytic > 0.0 && std::abs(qr.value - analytic) <= 1e-3 * analytic;
  } catch (const NonConvergenceError& e) {
    report["energy_quadrature"] = e.value();
    report["energy_quadrature_error_estimate"] = e.error_estimate();
  }
  checks["energy_identity"] = energy_ok;

  // Admissibility constant with its quadrature error estimate.
  bool admissibility_ok = false;
  try {
    if (seq.max_abs() == 0.0) throw DegenerateInputError("zero seed");
    if (!seq.admissible()) throw AdmissibilityError("nonzero mean");
    const IntegralResult ar = integrate_chunked(
        admissibility_integrand(w), 0.0, w.band_edge(), admissibility_chunks(w));
    report["admissibility_constant"] = ar.value;
    report["admissibility_error_estimate"] = ar.error_estimate;
    admissibility_ok = ar.value > 0.0 && ar.error_estimate <= 1e-6 * ar.value;
  } catch (const Error&) {
    report["admissibility_constant"] = nullptr;
  }
  checks["admissibility_constant"] = admissibility_ok;

  if (seq.centered() && seq.max_abs() > 0.0) {
    MomentReport mr = vanishing_order(seq);
    const int want = std::max(max_order + 1, static_cast<int>(mr.moments.size()));
    for (int m = static_cast<int>(mr.moments.size()); m < want && m <= 64; ++m) {
      mr.moments.push_back(analytic_moment(seq, m));
    }
    report["moment_report"] = moment_report_to_json(mr);
  }

  bool pass = true;
  for (const auto& [key, value] : checks.items()) pass = pass && value.get<bool>();
  report["checks"] = checks;
  report["pass"] = pass;
  return report;
}

inline int run_verify(const VerifyOptions& opt) {
  const SeedSequence seq = load_seed(opt.seed_file);
  const json report = verify_report(seq, opt.max_order);
  std::cout << report.dump(2) << "\n";
  if (!opt.out_dir.empty()) {
    const fs::path dir(opt.out_dir);
    write_file_atomic(dir / "report.json", report.dump(2) + "\n");
    write_manifest(dir, "verify",
                   json{{"seed_file", opt.seed_file}, {"max_order", opt.max_order}},
                   {"report.json"});
  }
  return report.at("pass").get<bool>() ? 0 : 1;
}

// ---- construct ----

struct ConstructOptions {
  int n = 0;
  int p = 0;
  double variance = 1.0;
  std::uint64_t rng_seed = 0;
  std::optional<double> delta;
  std::string out_dir;
};

inline int run_construct(const ConstructOptions& opt) {
  const SymmetricWaveletBuild build =
      build_symmetric_wavelet(opt.n, opt.p, opt.variance, opt.rng_seed, opt.delta);
  if (build.system.condition_estimate > 1e12) {
    std::fprintf(stderr,
                 "warning: moment system condition estimate %.3e exceeds 1e12; "
                 "solution accuracy degrades beyond p = 13\n",
                 build.system.condition_estimate);
  }
  const SeedWavelet w(build.seed);
  const fs::path dir(opt.out_dir);
  write_file_atomic(dir / "seed.json", seed_to_json(build.seed).dump(2) + "\n");
  write_file_atomic(dir / "system.json",
                    construction_system_to_json(build.system).dump(2) + "\n");
  write_file_atomic(dir / "psi.csv", psi_csv(w, default_grid(build.seed)));

  json params{{"n", opt.n},
              {"p", opt.p},
              {"variance", opt.variance},
              {"rng_seed", opt.rng_seed},
              {"delta", build.seed.delta()}};
  write_manifest(dir, "construct", params, {"seed.json", "system.json", "psi.csv"});
  return 0;
}

// ---- decompose ----

struct DecomposeOptions {
  std::string seed_file;
  std::vector<double> grid;
  std::string out_dir;
};

inline int run_decompose(const DecomposeOptions& opt) {
  const SeedSequence seq = load_seed(opt.seed_file);
  const auto [even, odd] = decompose_even_odd(seq);
  const GridSpec grid = grid_from_option(opt.grid, seq);
  const fs::path dir(opt.out_dir);
  write_file_atomic(dir / "even.json", seed_to_json(even).dump(2) + "\n");
  write_file_atomic(dir / "odd.json", seed_to_json(odd).dump(2) + "\n");
  write_file_atomic(dir / "even_psi.csv", psi_csv(SeedWavelet(even), grid));
  write_file_atomic(dir / "odd_psi.csv", psi_csv(SeedWavelet(odd), grid));
  write_manifest(dir, "decompose",
                 json{{"seed_file", opt.seed_file}, {"grid", grid_to_json(grid)}},
                 {"even.json", "odd.json", "even_psi.csv", "odd_psi.csv"});
  return 0;
}

// ---- cwt ----

struct CwtOptions {
  std::string signal_file;
  std::string seed_file;
  double signal_delta = 0.0;
  std::vector<double> scales;
  std::vector<double> shifts;
  std::string out_dir;
};

inline int run_cwt(const CwtOptions& opt) {
  const std::vector<double> signal = read_signal_csv(opt.signal_file);
  const SeedSequence seq = load_seed(opt.seed_file);
  const SeedWavelet w(seq);
  const CwtGrid grid = cwt(signal, opt.signal_delta, w, opt.scales, opt.shifts);
  const fs::path dir(opt.out_dir);
  write_file_atomic(dir / "cwt.csv", cwt_grid_csv(grid));
  write_manifest(dir, "cwt",
                 json{{"signal_file", opt.signal_file},
                      {"seed_file", opt.seed_file},
                      {"signal_delta", opt.signal_delta},
                      {"scales", opt.scales},
                      {"shifts", opt.shifts}},
                 {"cwt.csv"});
  return 0;
}

}  // namespace detail_cli

/// Entry point shared by the binary and the tests. `args` excludes the
/// program name. Exit codes: 0 success, 1 validation or math failure, 2 I/O.
inline int run(std::vector<std::string> args) {
  CLI::App app{"seed-sequence wavelets: build, verify, decompose and apply"};
  app.require_subcommand(1);

  detail_cli::GenOptions gen_opt;
  auto* gen = app.add_subcommand(
      "gen", "realize a seed as a wavelet and export sampled psi/spectrum");
  gen->add_option("seed", gen_opt.seed_file, "seed JSON file");
  gen->add_option("--random", gen_opt.random,
                  "generate a random seed: N VARIANCE RNG_SEED")
      ->expected(3);
  gen->add_option("--delta", gen_opt.delta, "override sampling period");
  gen->add_option("--t0", gen_opt.t0, "override time origin");
  gen->add_option("--grid", gen_opt.grid, "sampling grid: START END COUNT")->expected(3);
  gen->add_flag("--allow-nonadmissible", gen_opt.allow_nonadmissible,
                "export even when the seed sum is nonzero");
  gen->add_option("--out", gen_opt.out_dir, "output directory")->required();

  detail_cli::VerifyOptions verify_opt;
  auto* verify = app.add_subcommand(
      "verify", "check admissibility, interpolation, energy and moments");
  verify->add_option("seed", verify_opt.seed_file, "seed JSON file")->required();
  verify->add_option("--max-order", verify_opt.max_order, "list moments up to this order")
      ->check(CLI::Range(0, 64));
  verify->add_option("--out", verify_opt.out_dir, "also write report.json here");

  detail_cli::ConstructOptions construct_opt;
  auto* construct = app.add_subcommand(
      "construct", "build a symmetric random wavelet with a prescribed vanishing order");
  construct->add_option("n", construct_opt.n, "seed length (odd)")->required();
  construct->add_option("p", construct_opt.p, "vanishing-moment order (odd, < n)")->required();
  construct->add_option("variance", construct_opt.variance, "wing variance")->required();
  construct->add_option("rng_seed", construct_opt.rng_seed, "RNG seed")->required();
  construct->add_option("--delta", construct_opt.delta, "override sampling period");
  construct->add_option("--out", construct_opt.out_dir, "output directory")->required();

  detail_cli::DecomposeOptions decompose_opt;
  auto* decompose = app.add_subcommand(
      "decompose", "split a centered seed into even and odd parts");
  decompose->add_option("seed", decompose_opt.seed_file, "seed JSON file")->required();
  decompose->add_option("--grid", decompose_opt.grid, "sampling grid: START END COUNT")
      ->expected(3);
  decompose->add_option("--out", decompose_opt.out_dir, "output directory")->required();

  detail_cli::CwtOptions cwt_opt;
  auto* cwt_cmd = app.add_subcommand(
      "cwt", "continuous wavelet transform of a sampled signal");
  cwt_cmd->add_option("signal", cwt_opt.signal_file, "signal CSV (one sample per line)")
      ->required();
  cwt_cmd->add_option("seed", cwt_opt.seed_file, "seed JSON file")->required();
  cwt_cmd->add_option("--signal-delta", cwt_opt.signal_delta, "signal sampling period")
      ->required();
  cwt_cmd->add_option("--scales", cwt_opt.scales, "comma-separated scales")
      ->required()
      ->delimiter(',');
  cwt_cmd->add_option("--shifts", cwt_opt.shifts, "comma-separated shifts")
      ->required()
      ->delimiter(',');
  cwt_cmd->add_option("--out", cwt_opt.out_dir, "output directory")->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) {
      if (gen_opt.seed_file.empty() == gen_opt.random.empty()) {
        std::cerr << "gen needs exactly one seed source: a seed JSON file or --random\n";
        return 1;
      }
      return detail_cli::run_gen(gen_opt);
    }
    if (verify->parsed()) return detail_cli::run_verify(verify_opt);
    if (construct->parsed()) return detail_cli::run_construct(construct_opt);
    if (decompose->parsed()) return detail_cli::run_decompose(decompose_opt);
    if (cwt_cmd->parsed()) return detail_cli::run_cwt(cwt_opt);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

inline int run(int argc, const char* const* argv) {
  return run(std::vector<std::string>(argv + 1, argv + argc));
}

}  // namespace seedwave::cli
