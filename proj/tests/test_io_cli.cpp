#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "painleve/cli.hpp"
#include "painleve/io.hpp"

using namespace painleve;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "painleve-atlas");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("painleve-test-" + std::to_string(::getpid()) + "-" +
                                        std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

std::vector<std::string> csv_body(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream ss(text);
  std::string line;
  std::getline(ss, line);
  while (std::getline(ss, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("complex and path parsing") {
  CHECK(parse_complex("1.5,-2") == complex(1.5, -2.0));
  CHECK(parse_complex(" 3 ") == complex(3.0, 0.0));
  CHECK_THROWS_AS(parse_complex("1,2,3"), Error);
  CHECK_THROWS_AS(parse_complex("abc"), Error);
  CHECK_THROWS_AS(parse_complex("nan"), Error);
  const auto path = parse_path("0,0; 5,0;5,1");
  REQUIRE(path.size() == 3);
  CHECK(path[2] == complex(5.0, 1.0));
}

TEST_CASE("run configuration file") {
  std::istringstream in("# comment\nalpha = 0.5,0.1\nq0 = 1\npath = 0;2,1\nrtol = 1e-9 # inline\nmax_steps = 5000\n");
  const RunConfigFile rc = parse_run_config(in);
  CHECK(*rc.alpha == complex(0.5, 0.1));
  CHECK(!rc.beta);
  CHECK(rc.path->size() == 2);
  CHECK(rc.config.rtol == 1e-9);
  CHECK(rc.config.max_steps == 5000);
  std::istringstream bad("gamma = 1\n");
  CHECK_THROWS_AS(parse_run_config(bad), Error);
  std::istringstream bad2("rtol 1e-3\n");
  CHECK_THROWS_AS(parse_run_config(bad2), Error);
}

TEST_CASE("pole CSV round trip with the h-k audit") {
  const Parameters prm{{0.2, 0.1}, {-0.3, 0.0}};
  PoleRecord p{{1.25, -0.5}, RhoBranch(2), {0.1, 0.2}, {}, {}};
  const auto [h, k] = hk_from_c(p.c, p.z_star, p.rho, prm);
  p.h = h;
  p.k = k;
  std::istringstream in(poles_csv({p, p}));
  const auto back = read_poles_csv(in, &prm);
  REQUIRE(back.size() == 2);
  CHECK(back[1].z_star == p.z_star);
  CHECK(back[1].rho == p.rho);
  CHECK(back[1].k == p.k);
  p.k += 1e-6;
  std::istringstream broken(poles_csv({p}));
  CHECK_THROWS_AS(read_poles_csv(broken, &prm), Error);
  std::istringstream header("z,rho\n");
  CHECK_THROWS_AS(read_poles_csv(header), Error);
}

TEST_CASE("format_double round trips") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23}) CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("cli: help and argument errors") {
  const auto help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("integrate") != std::string::npos);
  CHECK(cli({}).code == 1);
  CHECK(cli({"integrate", "--q0", "x"}).code == 1);
  CHECK(cli({"integrate", "--q0", "1", "--p0", "0"}).code == 1);  // no path
  CHECK(cli({"series", "--pole", "0", "--rho", "5", "--c", "0"}).code == 1);
  CHECK(cli({"series", "--pole", "0", "--c", "0", "--h", "1"}).code == 1);
  CHECK(cli({"bogus"}).code == 1);
}

TEST_CASE("cli integrate: pole-free and oracle runs") {
  TempDir dir;
  const auto r = cli({"integrate", "--q0", "1,0", "--p0=-1,0", "--path", "0,0;0.5,0", "--out", dir / "free"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(slurp(dir / "free.traj.json"));
  CHECK(doc["meta"]["version"] == "1.0.0");
  CHECK(doc["meta"].contains("parameters"));
  CHECK(doc["meta"].contains("config"));
  CHECK(doc["samples"].front()["z"] == nlohmann::json::array({0.0, 0.0}));
  CHECK(doc["samples"].back()["z"] == nlohmann::json::array({0.5, 0.0}));
  CHECK(doc["samples"][0].contains("chart"));
  CHECK(csv_body(slurp(dir / "free.poles.csv")).empty());
  CHECK(slurp(dir / "free.poles.csv").rfind(std::string(kPoleCsvHeader), 0) == 0);

  const auto o = cli({"integrate", "--q0", "1,0", "--p0=-1,0", "--path", "0,0;5,0", "--out", dir / "std"});
  REQUIRE(o.code == 0);
  const std::string poles = slurp(dir / "std.poles.csv");
  CHECK(csv_body(poles).size() == 4);
  std::istringstream in(poles);
  const Parameters zero{};
  CHECK(read_poles_csv(in, &zero).size() == 4);
}

TEST_CASE("cli integrate: config file, overrides and failure exit") {
  TempDir dir;
  {
    std::ofstream cfg(dir / "run.cfg");
    cfg << "q0 = 1\np0 = -1\npath = 0;5\nmax_steps = 20\nout = " << (dir / "cfg") << "\n";
  }
  const auto fail = cli({"integrate", "--config", dir / "run.cfg"});
  CHECK(fail.code == 2);
  CHECK(fs::exists(dir / "cfg.traj.json"));
  const auto doc = nlohmann::json::parse(slurp(dir / "cfg.traj.json"));
  CHECK(doc["events"].back()["kind"] == "failure");
  // flags override the file
  const auto ok = cli({"integrate", "--config", dir / "run.cfg", "--path", "0;0.05"});
  CHECK(ok.code == 0);
}

TEST_CASE("cli poles: empty scan, consistency with integrate, histogram") {
  TempDir dir;
  const auto empty = cli({"poles", "--radius", "0", "--out", dir / "none"});
  CHECK(empty.code == 0);
  CHECK(csv_body(slurp(dir / "none.catalog.csv")).empty());

  const auto one = cli({"poles", "--rays", "1", "--radius", "5", "--out", dir / "ray"});
  REQUIRE(one.code == 0);
  const auto rows = csv_body(slurp(dir / "ray.catalog.csv"));
  cli({"integrate", "--q0", "1", "--p0=-1", "--path", "0;5", "--out", dir / "int"});
  const auto direct = csv_body(slurp(dir / "int.poles.csv"));
  REQUIRE(rows.size() == direct.size());
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i] == "0,0,crossing," + direct[i]);

  const auto grid = cli({"poles", "--rays", "3", "--radius", "4", "--ic", "1,0,-1,0", "--ic", "0.5,0.5,0,0.2",
                         "--out", dir / "grid"});
  REQUIRE(grid.code == 0);
  const auto cat = csv_body(slurp(dir / "grid.catalog.csv"));
  int hist[3] = {0, 0, 0};
  int last_ray = -1;
  for (const auto& line : cat) {
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    REQUIRE(f.size() == 12);
    const int ray = std::stoi(f[0]);
    CHECK(ray >= last_ray);
    last_ray = ray;
    ++hist[std::stoi(f[5])];
  }
  CHECK(grid.out.find("rho_histogram 0:" + std::to_string(hist[0]) + " 1:" + std::to_string(hist[1]) +
                      " 2:" + std::to_string(hist[2])) != std::string::npos);
}

TEST_CASE("cli series") {
  const auto r = cli({"series", "--rho", "0", "--c", "0", "--pole", "0,0", "--order", "4"});
  REQUIRE(r.code == 0);
  std::stringstream ss(r.out);
  std::string l1, l2;
  std::getline(ss, l1);
  std::getline(ss, l2);
  const auto t = nlohmann::json::parse(l1), l = nlohmann::json::parse(l2);
  CHECK(t["kind"] == "taylor");
  CHECK(l["kind"] == "laurent");
  CHECK(t["coefficients"]["a"][1][0].get<double>() == doctest::Approx(-1.0));
  CHECK(std::abs(t["coefficients"]["a"][2][0].get<double>()) < 1e-15);
  CHECK(t["coefficients"]["a"][3][0].get<double>() == doctest::Approx(-1.0));
  CHECK(t["coefficients"]["b"][1][0].get<double>() == doctest::Approx(-1.0));

  const auto byh = cli({"series", "--rho", "1", "--h", "0.5,0.25", "--pole", "1,1", "--alpha", "0.2,0"});
  REQUIRE(byh.code == 0);
  const auto tj = nlohmann::json::parse(byh.out.substr(0, byh.out.find('\n')));
  const Parameters prm{{0.2, 0.0}, {}};
  const complex c = c_from_h({0.5, 0.25}, {1.0, 1.0}, RhoBranch(1), prm);
  CHECK(tj["parameter"]["value"][0].get<double>() == doctest::Approx(c.real()).epsilon(1e-14));
  CHECK(tj["parameter"]["value"][1].get<double>() == doctest::Approx(c.imag()).epsilon(1e-14));
}

TEST_CASE("cli check: pass, determinism, injected fault") {
  TempDir dir;
  const auto a = cli({"check", "--seed", "3", "--out", dir / "a.csv"});
  const auto b = cli({"check", "--seed", "3", "--out", dir / "b.csv"});
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));
  CHECK(slurp(dir / "a.csv").rfind("name,max_abs,sample_count,scale\n", 0) == 0);
  const auto bad = cli({"check", "--corrupt-chart", "b3b:1", "--out", dir / "bad.csv"});
  CHECK(bad.code == 3);
  CHECK(fs::exists(dir / "bad.csv"));
}
