#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "adicergo/cli/commands.hpp"
#include "adicergo/cylinder_io.hpp"

using namespace adicergo;
using namespace adicergo::cli;

namespace {

ExperimentConfig parse(const std::vector<std::string>& args,
                       std::optional<std::string> env = std::nullopt) {
  std::ostringstream out;
  auto c = parse_config(args, env, out);
  REQUIRE(c.has_value());
  return *c;
}

std::string error_of(const std::vector<std::string>& args) {
  try {
    std::ostringstream out;
    parse_config(args, std::nullopt, out);
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

Report run(const std::vector<std::string>& args) {
  std::ostringstream notices;
  return run_command(parse(args), notices);
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("adicergo_cli_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("config parsing") {
  const auto c = parse({"weyl", "--basis", "const:2", "--rho", "0,0,1", "--char", "1/8", "--N", "1000000"});
  CHECK(c.command == "weyl");
  CHECK(c.characters == std::vector<std::string>{"1/8"});
  CHECK(c.N == std::vector<std::uint64_t>{1000000});
  CHECK(working_precision(c) == 2);

  CHECK(parse({"weyl", "--N", "1e4,10^5", "--N", "7"}).N == std::vector<std::uint64_t>{10000, 100000, 7});
  CHECK(parse({"multiplier", "--kind", "natural"}).source == Source::naturals);

  CHECK(error_of({"multiplier", "--basis", "const:1"}) == "basis: basis entries must be ≥ 2");
  CHECK(error_of({"multiplier", "--char", "8/8"}).rfind("char: ", 0) == 0);
  CHECK(error_of({"multiplier", "--char", "1/8", "--r", "1"}).rfind("char: ", 0) == 0);
  CHECK(error_of({"weyl", "--N", "2e8"}).rfind("N: ", 0) == 0);
  CHECK(error_of({"weyl", "--N", "ten"}).rfind("N: ", 0) == 0);
  CHECK(error_of({"torus", "--beta", "0,sqrt(x)"}).rfind("beta: ", 0) == 0);
  CHECK(error_of({"torus", "--term", "1:1"}).rfind("term: ", 0) == 0);
  CHECK(error_of({"frobnicate"}) != "");
  CHECK(error_of({"--basis", "const:2"}) != "");

  CHECK(parse_reals("0, -sqrt(2), 0.5") == std::vector<double>{0.0, -std::sqrt(2.0), 0.5});
  CHECK(parse_count("10^6") == 1000000);
  CHECK_THROWS(parse_count("-5"));
}

TEST_CASE("config precedence and JSON round trip") {
  const auto dir = scratch_dir("config");
  ExperimentConfig file;
  file.command = "weyl";
  file.basis = "cycle:2,3,5";
  file.rho = "1,0,1";
  file.characters = {"2/30"};
  file.N = {100, 1000};
  file.budgets.max_n = 5000;
  file.r = 2;
  CHECK(config_from_json(to_json(file)) == file);
  {
    std::ofstream(dir / "c.json") << to_json(file).dump();
  }
  const auto path = (dir / "c.json").string();
  const auto from_file = parse({"--config", path});
  CHECK(from_file == file);
  CHECK(parse({"--config", path}, "20000").budgets.max_n == 20000);
  CHECK(parse({"--config", path, "--max-n", "30000"}, "20000").budgets.max_n == 30000);
  CHECK(parse({"multiplier", "--config", path, "--rho", "0,1"}).command == "multiplier");
  CHECK(parse({"multiplier", "--config", path, "--rho", "0,1"}).rho == "0,1");

  // The JSON summary's config echo parses back to the same config.
  auto c = parse({"--config", path, "--out", "echo", "--out-dir", dir.string()});
  std::ostringstream notices;
  emit_report(run_command(c, notices), c.out_dir);
  CHECK(read_config(dir / "echo.json") == c);
}

TEST_CASE("command examples") {
  CHECK(run({"multiplier", "--basis", "const:2", "--char", "0/8"}).text == std::vector<std::string>{"1+0i"});
  CHECK(run({"multiplier"}).text == std::vector<std::string>{"1+0i"});

  const auto gauss = run({"gauss", "--q", "5"});
  CHECK(gauss.summary["value"]["abs"].get<double>() == doctest::Approx(2.2360679774997898).epsilon(1e-15));
  CHECK(gauss.rows.front().at(3).rfind("2.2360679", 0) == 0);

  // A natural-source Weyl sum over whole periods equals the natural multiplier.
  for (const auto* chi : {"3/8", "5/16", "1/4"}) {
    const auto weyl = run({"weyl", "--rho", "0,1,1", "--char", chi, "--source", "naturals", "--N", "1024"});
    const auto mult = run({"multiplier", "--rho", "0,1,1", "--char", chi, "--kind", "natural"});
    const auto& v = weyl.summary["results"][0]["values"][0];
    const auto& m = mult.summary["multipliers"][0];
    CHECK(std::abs(v["re"].get<double>() - m["re"].get<double>()) < 1e-10);
    CHECK(std::abs(v["im"].get<double>() - m["im"].get<double>()) < 1e-10);
  }

  std::ostringstream notices;
  run_command(parse({"multiplier", "--rho", "0,1", "--char", "1/4"}), notices);
  CHECK(notices.str().find("notice: rho has degree 1") != std::string::npos);
  notices.str("");
  run_command(parse({"multiplier", "--rho", "0,1", "--char", "1/4", "--kind", "natural"}), notices);
  CHECK(notices.str().empty());
}

TEST_CASE("report layouts") {
  const auto empty = run({"weyl", "--char", "1/8"});
  CHECK(to_csv(empty) == "character,N,re,im,abs_err\n");

  const auto cmp = run({"compare", "--basis", "cycle:2,3,5", "--char", "2/30", "--N", "100,1000,5000"});
  CHECK(cmp.summary["sup_norm"].size() == 3);
  CHECK(cmp.summary["l2_norm"].size() == 3);
  CHECK(cmp.summary["multipliers"].size() == 30);

  const auto w = run({"wiener", "--r-max", "4"});
  CHECK(w.header == std::vector<std::string>{"r", "A_r", "W_r"});
  CHECK(w.rows.size() == 5);
  CHECK(w.rows[3] == std::vector<std::string>{"3", "16", "0.5"});

  CHECK(format_complex({1.0, 0.0}) == "1+0i");
  CHECK(format_complex({-0.0, -0.5}) == "0-0.5i");
  CHECK(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("cylinder-function commands") {
  const auto dir = scratch_dir("cyl");
  const auto b = Basis::constant(2);
  CylinderFunction f{b, 2, {}};
  for (int i = 0; i < 8; ++i) f.values.push_back({0.5 * i, 1.0 - i});
  write_cylinder(dir / "f.json", f);
  const auto fpath = (dir / "f.json").string();

  const auto lim = run({"limit", "--f", fpath});
  CHECK(lim.rows.size() == 8);
  CHECK(lim.summary["multipliers"].size() == 8);

  const auto avg = run({"average", "--f", fpath, "--N", "1000,2000"});
  CHECK(avg.rows.size() == 16);

  CHECK_THROWS_WITH(run({"average", "--f", fpath, "--basis", "const:3"}),
                    doctest::Contains("f: function basis"));
  CHECK_THROWS_WITH(run({"average"}), doctest::Contains("f: average needs"));
}

TEST_CASE("torus command") {
  const auto t = run({"torus", "--beta", "0,0,sqrt(2)", "--beta", "0,0,sqrt(3)", "--N", "1000,10000"});
  CHECK(t.rows.size() == 2);
  CHECK(t.summary["integral"]["abs"].get<double>() == 0.0);
  const auto c = run({"torus", "--term", "0:2.5,0", "--N", "100"});
  CHECK(c.rows.front() == std::vector<std::string>{"100", "2.5", "0", "0"});
}

TEST_CASE("run_cli exit codes and thread independence") {
  std::ostringstream out, err;
  CHECK(run_cli({"gauss", "--q", "5"}, out, err) == 0);
  CHECK(out.str().find("2.2360679") != std::string::npos);
  CHECK(run_cli({"multiplier", "--basis", "list:2,1"}, out, err) == 1);
  CHECK(run_cli({"weyl", "--char", "1/8", "--N", "1000", "--max-n", "10"}, out, err) == 1);
  CHECK(run_cli({"weyl", "--bogus"}, out, err) == 2);
  CHECK(run_cli({"--help"}, out, err) == 0);

  const auto dir = scratch_dir("threads");
  const std::vector<std::string> base{"weyl", "--basis", "cycle:2,3,5", "--char", "2/30", "--N",
                                      "1e3,1e5", "--out-dir", dir.string()};
  auto one = base, four = base;
  one.insert(one.end(), {"--threads", "1", "--out", "one"});
  four.insert(four.end(), {"--threads", "4", "--out", "four"});
  CHECK(run_cli(one, out, err) == 0);
  CHECK(run_cli(four, out, err) == 0);
  CHECK(slurp(dir / "one.csv") == slurp(dir / "four.csv"));
  CHECK(slurp(dir / "one.csv").rfind("character,N,re,im,abs_err\n", 0) == 0);
}
