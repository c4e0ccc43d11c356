// Command-line front end: simulate, verify and offline monitoring.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "tormhd/error.hpp"
#include "tormhd/io/config.hpp"
#include "tormhd/io/csv.hpp"
#include "tormhd/io/manifest.hpp"
#include "tormhd/parallel.hpp"
#include "tormhd/replay.hpp"
#include "tormhd/simulate.hpp"
#include "tormhd/verify.hpp"

namespace fs = std::filesystem;
using namespace tormhd;

namespace {

enum Exit { kOk = 0, kConfig = 2, kDiverged = 3, kIo = 4, kVerify = 5 };

constexpr const char* kSeries = "series.csv";

int fail(int code, const std::string& what) {
  std::cerr << "error: " << what << "\n";
  return code;
}

void write_series(const fs::path& dir, const SimResult& r) {
  io::write_csv((dir / kSeries).string(), io::Table{r.columns, r.rows});
}

int cmd_simulate(const std::string& config_path, const std::string& out) {
  SimConfig cfg;
  try {
    cfg = io::load_sim_config(config_path);
    cfg.step_count();
    (void)cfg.grid();
  } catch (const ConfigError& e) {
    return fail(kConfig, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(kConfig, e.what());
  } catch (const IoError& e) {
    return fail(kIo, e.what());
  }

  const fs::path dir(out);
  const bool existed = fs::exists(dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) return fail(kIo, out + ": " + ec.message());

  io::RunManifest m;
  m.config = io::to_json(cfg);
  m.version = io::version();
  m.seed = cfg.seed;
  m.start_time = io::utc_now();
  SimResult r;
  try {
    r = simulate(cfg, dir.string());
  } catch (const ConfigError& e) {
    if (!existed) fs::remove_all(dir, ec);
    return fail(kConfig, e.what());
  } catch (const IoError& e) {
    m.end_time = io::utc_now();
    m.status = "io_error";
    m.partial = true;
    try {
      std::vector<std::string> present;
      for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().filename() != "manifest.json")
          present.push_back(entry.path().filename().string());
      io::write_manifest(dir.string(), m, present);
    } catch (const std::exception&) {
    }
    return fail(kIo, e.what());
  }

  try {
    write_series(dir, r);
    std::vector<std::string> names = r.files;
    names.insert(names.begin(), kSeries);
    m.end_time = io::utc_now();
    m.status = r.status;
    m.partial = r.status != "completed";
    io::write_manifest(dir.string(), m, names);
  } catch (const IoError& e) {
    return fail(kIo, e.what());
  }
  if (r.status == "diverged") return fail(kDiverged, "diverged at t = " + std::to_string(r.end_time) + ": " + r.message);
  std::printf("completed %ld steps to t = %.6g, max divergence %.3g\n", r.steps, r.end_time, r.max_divergence);
  return kOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int n, const std::string& report, bool aliased) {
  std::vector<VerificationReport> reports;
  try {
    reports = run_suite(suite, SuiteOptions{seed, n, aliased});
  } catch (const std::invalid_argument& e) {
    return fail(kConfig, e.what());
  }
  const std::string text = format_reports(reports);
  std::cout << text;
  if (!report.empty()) {
    std::ofstream f(report);
    if (!(f << text)) return fail(kIo, report + ": cannot write report");
  }
  const bool ok = suite_passed(reports);
  std::cout << (ok ? "suite passed\n" : "suite FAILED\n");
  return ok ? kOk : kVerify;
}

int cmd_monitor(const std::string& in, const std::string& spec_path, const std::string& out) {
  try {
    const io::MonitorSpec spec = io::load_monitor_spec(spec_path);
    const io::Table t = replay(in, spec);
    if (out.empty()) std::cout << io::format_csv(t);
    else io::write_csv(out, t);
  } catch (const ConfigError& e) {
    return fail(kConfig, e.what());
  } catch (const IoError& e) {
    return fail(kIo, e.what());
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudo-spectral Navier-Stokes / MHD solver on the periodic torus"};
  app.set_version_flag("--version", std::string(io::version()));
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (default: TORMHD_THREADS or 1)")->check(CLI::PositiveNumber);

  auto* sim = app.add_subcommand("simulate", "run a simulation");
  std::string config, out;
  sim->add_option("--config", config, "JSON config")->required();
  sim->add_option("--out", out, "output directory")->required();

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  std::uint64_t seed = 42;
  int n = 20;
  std::string report;
  bool aliased = false;
  ver->add_option("--suite", suite, "identities | inequalities | scaling | all")->required();
  ver->add_option("--seed", seed, "ensemble seed");
  ver->add_option("--n", n, "samples per check")->check(CLI::PositiveNumber);
  ver->add_option("--report", report, "also write the report to this file");
  ver->add_flag("--debug-aliased-grid", aliased, "run the identities on a grid with 3K >= M");

  auto* mon = app.add_subcommand("monitor", "recompute the series of a run from its snapshots");
  std::string in, spec, csv;
  mon->add_option("--in", in, "snapshot directory")->required();
  mon->add_option("--spec", spec, "JSON criterion spec")->required();
  mon->add_option("--out", csv, "CSV path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }
  if (threads > 0) set_thread_count(threads);

  try {
    if (*sim) return cmd_simulate(config, out);
    if (*ver) return cmd_verify(suite, seed, n, report, aliased);
    return cmd_monitor(in, spec, csv);
  } catch (const std::exception& e) {
    return fail(kIo, e.what());
  }
}
