#include <cstring>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "tormhd/error.hpp"
#include "tormhd/field_ops.hpp"
#include "tormhd/io/config.hpp"
#include "tormhd/io/csv.hpp"
#include "tormhd/io/manifest.hpp"
#include "tormhd/io/snapshot.hpp"

using namespace tormhd;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("tormhd_io_" + std::to_string(std::rand()) + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::vector<char> slurp(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void spit(const std::string& p, const std::vector<char>& b) {
  std::ofstream out(p, std::ios::binary);
  out.write(b.data(), static_cast<std::streamsize>(b.size()));
}

std::string config_error_path(const nlohmann::json& doc) {
  try {
    io::parse_sim_config(doc);
  } catch (const ConfigError& e) {
    return e.key_path();
  }
  return "<none>";
}

}  // namespace

TEST_CASE("snapshot round trip and header layout") {
  TempDir d;
  const Grid g = make_grid(3, 12, 3.0);
  MhdState s{synth_random_divfree(g, 3, 1), synth_random_divfree(g, 3, 2), 0.25, 0.1, 0.2};
  io::write_snapshot(d.file("a.spc"), s);
  const auto bytes = slurp(d.file("a.spc"));
  REQUIRE(bytes.size() == io::kSnapshotHeaderBytes + 6 * g.points() * 16);
  CHECK(std::memcmp(bytes.data(), "SPC4", 4) == 0);
  std::uint32_t dim = 0, modes = 0, count = 0;
  double side = 0, time = 0;
  std::memcpy(&dim, bytes.data() + 8, 4);
  std::memcpy(&modes, bytes.data() + 12, 4);
  std::memcpy(&count, bytes.data() + 16, 4);
  std::memcpy(&side, bytes.data() + 20, 8);
  std::memcpy(&time, bytes.data() + 28, 8);
  CHECK(dim == 3);
  CHECK(modes == 12);
  CHECK(count == 6);
  CHECK(side == 3.0);
  CHECK(time == 0.25);

  const MhdState r = io::state_from_snapshot(io::read_snapshot(d.file("a.spc")), d.file("a.spc"));
  CHECK(max_relative_difference(r.u, s.u) == 0.0);
  CHECK(max_relative_difference(r.b, s.b) == 0.0);
  CHECK(r.t == 0.25);
  CHECK(r.nu == 0.1);
  CHECK(r.eta == 0.2);
}

TEST_CASE("corrupt snapshots are named") {
  TempDir d;
  const Grid g = make_grid(2, 8);
  io::write_snapshot(d.file("s.spc"), MhdState{synth_random_divfree(g, 2, 1), synth_random_divfree(g, 2, 2)});
  const auto good = slurp(d.file("s.spc"));
  const auto expect_corrupt = [&](std::vector<char> b, const char* what) {
    spit(d.file("bad.spc"), b);
    try {
      io::read_snapshot(d.file("bad.spc"));
      FAIL("accepted a corrupt snapshot: " << what);
    } catch (const CorruptSnapshotError& e) {
      CHECK(std::string(e.what()).find("bad.spc") != std::string::npos);
    }
  };
  auto b = good;
  b[0] = 'X';
  expect_corrupt(b, "magic");
  b = good;
  b[4] = 9;
  expect_corrupt(b, "version");
  b = good;
  b.resize(b.size() - 8);
  expect_corrupt(b, "truncated");
  b = good;
  b.resize(20);
  expect_corrupt(b, "short header");
  b = good;
  // Break Hermitian symmetry of one coefficient.
  double v = 0.0;
  std::memcpy(&v, b.data() + io::kSnapshotHeaderBytes + 16 + 8, 8);
  v += 1.0;
  std::memcpy(b.data() + io::kSnapshotHeaderBytes + 16 + 8, &v, 8);
  expect_corrupt(b, "hermitian");
  CHECK_THROWS_AS(io::read_snapshot(d.file("missing.spc")), IoError);
}

TEST_CASE("csv round trip is exact") {
  TempDir d;
  io::Table t{{"time", "x"}, {{0.0, 1.0 / 3.0}, {0.1, -2.5e-300}, {0.2, 1e300}}};
  io::write_csv(d.file("t.csv"), t);
  const io::Table r = io::read_csv(d.file("t.csv"));
  CHECK(r.columns == t.columns);
  CHECK(r.rows == t.rows);
  CHECK(io::format_csv(r) == io::format_csv(t));
}

TEST_CASE("config parsing") {
  const nlohmann::json doc = nlohmann::json::parse(R"({
    "grid": {"dim": 4, "modes": 12},
    "initial": {"preset": "random_divfree", "seed": 3},
    "nu": 0.5, "dt": 0.001, "t_end": 0.01,
    "axis_permutation": [3, 4, 1, 2],
    "criteria": [{"theorem": "T1_1", "pairs": [{"p": 8, "r": 16}, {"p": "inf", "r": 4}]}]
  })");
  const SimConfig c = io::parse_sim_config(doc);
  CHECK(c.modes == 12);
  CHECK(c.nu == 0.5);
  CHECK(c.axis_permutation == std::array<int, 4>{2, 3, 0, 1});
  REQUIRE(c.criteria.size() == 1);
  CHECK(std::isinf(c.criteria[0].pairs[1].p));
  CHECK(io::parse_sim_config(io::to_json(c)).criteria[0].pairs[0].r == 16.0);

  SUBCASE("unknown keys and bad values carry the key path") {
    nlohmann::json bad = doc;
    bad["criteria"][0]["pairs"][1]["q"] = 2;
    CHECK(config_error_path(bad) == "criteria[0].pairs[1].q");
    bad = doc;
    bad["grid"]["mode"] = 16;
    CHECK(config_error_path(bad) == "grid.mode");
    bad = doc;
    bad["criteria"][0]["pairs"][1]["r"] = "big";
    CHECK(config_error_path(bad) == "criteria[0].pairs[1].r");
    bad = doc;
    bad["criteria"][0]["pairs"][0]["r"] = 15;
    CHECK(config_error_path(bad).rfind("criteria[0]", 0) == 0);
    bad = doc;
    bad["nu"] = "one";
    CHECK(config_error_path(bad) == "nu");
    bad = doc;
    bad["axis_permutation"] = {1, 1, 2, 3};
    CHECK(config_error_path(bad) == "axis_permutation");
  }
  CHECK_THROWS_AS(io::load_json("/nonexistent/config.json"), IoError);
}

TEST_CASE("manifest checksums") {
  TempDir d;
  {
    std::ofstream(d.file("a.txt")) << "abc";
  }
  CHECK(io::sha256_file(d.file("a.txt")) == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  io::RunManifest m;
  m.config = {{"nu", 1}};
  m.version = io::version();
  m.seed = 7;
  m.status = "completed";
  io::write_manifest(d.path.string(), m, {"a.txt"});
  const io::RunManifest r = io::read_manifest(d.file("manifest.json"));
  REQUIRE(r.files.size() == 1);
  CHECK(r.files[0].bytes == 3);
  CHECK(r.seed == 7);
  CHECK(io::verify_manifest(d.path.string(), r).empty());
  {
    std::ofstream(d.file("a.txt")) << "abd";
  }
  CHECK(io::verify_manifest(d.path.string(), r) == std::vector<std::string>{"a.txt"});
}
