#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "tormhd/io/csv.hpp"
#include "tormhd/io/manifest.hpp"

namespace fs = std::filesystem;
using namespace tormhd;

namespace {

struct Scratch {
  fs::path path;
  explicit Scratch(const char* tag) {
    path = fs::temp_directory_path() / (std::string("tormhd_cli_") + tag + "_" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~Scratch() { fs::remove_all(path); }
  std::string operator/(const std::string& n) const { return (path / n).string(); }
};

int run(const std::string& args) {
  const std::string cmd = std::string(TORMHD_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("cli simulate") {
  Scratch s("sim");
  write(s / "zero.json", R"({"grid": {"dim": 4, "modes": 8}, "dt": 0.01, "t_end": 0.05})");
  REQUIRE(run("simulate --config " + (s / "zero.json") + " --out " + (s / "zero")) == 0);
  const io::Table t = io::read_csv(s / "zero/series.csv");
  CHECK(t.columns.front() == "time");
  CHECK(t.rows.size() == 6);
  for (const auto& row : t.rows)
    for (std::size_t i = 1; i < row.size(); ++i) CHECK(row[i] == 0.0);
  const io::RunManifest m = io::read_manifest(s / "zero/manifest.json");
  CHECK(m.status == "completed");
  CHECK(io::verify_manifest((s / "zero"), m).empty());

  write(s / "bad_dt.json", R"({"grid": {"dim": 4, "modes": 8}, "dt": 0, "t_end": 0.05})");
  CHECK(run("simulate --config " + (s / "bad_dt.json") + " --out " + (s / "bad")) == 2);
  CHECK_FALSE(fs::exists(s / "bad"));

  write(s / "typo.json", R"({"grid": {"dim": 4, "modes": 8}, "dtt": 0.01})");
  CHECK(run("simulate --config " + (s / "typo.json") + " --out " + (s / "typo")) == 2);
  CHECK(run("simulate --config " + (s / "missing.json") + " --out " + (s / "m")) == 4);

}

TEST_CASE("cli verify and monitor") {
  Scratch s("ver");
  CHECK(run("verify --suite scaling --seed 1 --n 1 --report " + (s / "r.txt")) == 0);
  CHECK(fs::file_size(s / "r.txt") > 0);
  CHECK(run("verify --suite bogus") == 2);
  CHECK(run("verify --suite identities --n 1 --debug-aliased-grid") != 0);
  CHECK(run("frobnicate") == 2);

  fs::create_directories(s / "empty");
  write(s / "spec.json", R"({"criteria": [{"theorem": "T1_1", "pairs": [{"p": 8, "r": 16}]}]})");
  CHECK(run("monitor --in " + (s / "empty") + " --spec " + (s / "spec.json")) == 2);

  write(s / "one.json", R"({"grid": {"dim": 4, "modes": 8}, "dt": 0.01, "t_end": 0.01, "snapshot_every": 5,
    "initial": {"preset": "random_divfree", "seed": 2}})");
  REQUIRE(run("simulate --config " + (s / "one.json") + " --out " + (s / "one")) == 0);
  fs::remove(s / "one/snap_00000001.spc");
  fs::remove(s / "one/manifest.json");
  REQUIRE(run("monitor --in " + (s / "one") + " --spec " + (s / "spec.json") + " --out " + (s / "one.csv")) == 0);
  const io::Table t = io::read_csv(s / "one.csv");
  REQUIRE(t.rows.size() == 1);
  for (std::size_t c = 0; c < t.columns.size(); ++c)
    if (t.columns[c].rfind("acc_", 0) == 0) CHECK(t.rows[0][c] == 0.0);

  // A flipped byte is caught by the manifest checksum and named.
  REQUIRE(run("simulate --config " + (s / "one.json") + " --out " + (s / "two")) == 0);
  {
    std::fstream f(s / "two/snap_00000001.spc", std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(100);
    f.put('\x7f');
  }
  CHECK(run("monitor --in " + (s / "two") + " --spec " + (s / "spec.json")) == 4);
}
