#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "arxev/experiments.hpp"
#include "arxev/timeseries.hpp"

using namespace arxev;
namespace fs = std::filesystem;

namespace {

fs::path make_workdir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("arxev_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path write_dataset(const fs::path& dir) {
  auto path = dir / "data.csv";
  save_table(synthetic_dataset(62, 1234), path.string());
  return path;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int count_data_rows(const std::string& csv) {
  int rows = 0;
  std::istringstream in(csv);
  std::string line;
  bool seen_header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!seen_header) {
      seen_header = true;
      continue;
    }
    ++rows;
  }
  return rows;
}

ExperimentPlan quick_plan(const fs::path& dir) {
  ExperimentPlan plan;
  plan.data_path = write_dataset(dir);
  plan.out_dir = dir / "out";
  plan.base_config.generations = 5;
  plan.base_config.population_size = 40;  // >= the 33 windowed base models
  plan.base_config.seed = 77;
  plan.sweep_grid = {0.005, 0.05};
  return plan;
}

}  // namespace

TEST_CASE("cmd_run writes the three output files") {
  auto dir = make_workdir("run");
  auto plan = quick_plan(dir);
  REQUIRE(cmd_run(plan) == 0);

  auto stats = slurp(plan.out_dir / "stats.csv");
  CHECK(count_data_rows(stats) == 6);  // generations + 1
  CHECK(stats.rfind("generation,best_sse", 0) == 0);

  auto model = parse_model(slurp(plan.out_dir / "best_model.txt"));
  CHECK(model.structure.na == 5);

  auto pop = parse_population(slurp(plan.out_dir / "population_final.txt"));
  CHECK(pop.size() == 40);
}

TEST_CASE("cmd_run with zero generations emits one stats row") {
  auto dir = make_workdir("run0");
  auto plan = quick_plan(dir);
  plan.base_config.generations = 0;
  REQUIRE(cmd_run(plan) == 0);
  CHECK(count_data_rows(slurp(plan.out_dir / "stats.csv")) == 1);
}

TEST_CASE("cmd_run exit codes") {
  auto dir = make_workdir("run_err");
  auto plan = quick_plan(dir);
  plan.data_path = dir / "missing.csv";
  CHECK(cmd_run(plan) == 2);

  plan = quick_plan(dir);
  plan.base_config.population_size = 1;  // invalid config
  CHECK(cmd_run(plan) == 1);
}

TEST_CASE("cmd_matrix emits per-variant stats and the ranking table") {
  auto dir = make_workdir("matrix");
  auto plan = quick_plan(dir);
  plan.base_config.generations = 3;
  REQUIRE(cmd_matrix(plan) == 0);

  auto ranking = slurp(plan.out_dir / "ranking.csv");
  CHECK(count_data_rows(ranking) == 9);
  CHECK(ranking.find("variant,genotype_length,best_result,cost_ms_total,"
                     "susceptibility") != std::string::npos);

  // variant III rows carry the extended genotype
  std::istringstream in(ranking);
  std::string line;
  int seen = 0;
  while (std::getline(in, line)) {
    if (line.rfind("III.", 0) == 0) {
      CHECK(line.find(",14,") != std::string::npos);
      ++seen;
    } else if (line.rfind("I.", 0) == 0 || line.rfind("II.", 0) == 0) {
      CHECK(line.find(",13,") != std::string::npos);
    }
  }
  CHECK(seen == 3);

  for (const char* label : {"I.I", "I.II", "I.III", "II.I", "II.II", "II.III",
                            "III.I", "III.II", "III.III"})
    CHECK(fs::exists(plan.out_dir / ("stats_" + std::string(label) + ".csv")));

  SUBCASE("point columns follow the 0-2 scale") {
    std::istringstream rin(ranking);
    std::string row;
    std::getline(rin, row);  // comment
    std::getline(rin, row);  // header
    for (int col = 5; col <= 7; ++col) {
      rin.clear();
      rin.seekg(0);
      std::getline(rin, row);
      std::getline(rin, row);
      bool saw2 = false, saw0 = false;
      while (std::getline(rin, row)) {
        std::istringstream fields(row);
        std::string f;
        for (int c = 0; c <= col; ++c) std::getline(fields, f, ',');
        CHECK((f == "0" || f == "1" || f == "2"));
        saw2 |= f == "2";
        saw0 |= f == "0";
      }
      CHECK(saw2);  // at least one best per category
    }
  }
}

TEST_CASE("cmd_matrix non-timing columns are deterministic per seed") {
  auto dir = make_workdir("matrix_det");
  auto plan = quick_plan(dir);
  plan.base_config.generations = 2;
  plan.out_dir = dir / "a";
  REQUIRE(cmd_matrix(plan) == 0);
  auto first = slurp(plan.out_dir / "ranking.csv");
  plan.out_dir = dir / "b";
  REQUIRE(cmd_matrix(plan) == 0);
  auto second = slurp(plan.out_dir / "ranking.csv");

  // wall-clock cost (and its points) may differ; compare the rest
  auto strip_timing = [](const std::string& csv) {
    std::istringstream in(csv);
    std::string line, out;
    while (std::getline(in, line)) {
      std::istringstream fields(line);
      std::string f;
      int c = 0;
      while (std::getline(fields, f, ',')) {
        if (c != 3 && c != 6 && c != 8) out += f + ",";
        ++c;
      }
      out += "\n";
    }
    return out;
  };
  CHECK(strip_timing(first) == strip_timing(second));
}

TEST_CASE("cmd_sweep emits grid x repeats rows with derived seeds") {
  auto dir = make_workdir("sweep");
  auto plan = quick_plan(dir);
  plan.base_config.generations = 3;
  plan.sweep_grid = {0.001, 0.01, 0.1};
  plan.repeats = 2;
  REQUIRE(cmd_sweep(plan) == 0);
  auto csv = slurp(plan.out_dir / "sweep.csv");
  CHECK(count_data_rows(csv) == 6);
  CHECK(csv.rfind("pm,repeat,final_best_sse,final_best_quality", 0) == 0);

  // byte-identical on a rerun: no timing data in sweep.csv
  plan.out_dir = dir / "again";
  REQUIRE(cmd_sweep(plan) == 0);
  CHECK(slurp(plan.out_dir / "sweep.csv") == csv);
}

TEST_CASE("variant labels map to the operator matrix") {
  EngineConfig cfg;
  apply_variant_label("II.III", cfg);
  CHECK(cfg.variant == AdaptationVariant::II);
  CHECK(cfg.operators.selection == Selection::ranking);
  CHECK(cfg.operators.crossover == Crossover::uniform);
  CHECK(cfg.operators.mutation == Mutation::probabilistic);

  apply_variant_label("III.I", cfg);
  CHECK(cfg.variant == AdaptationVariant::III);
  CHECK(cfg.operators.selection == Selection::roulette);
  CHECK(cfg.operators.crossover == Crossover::single_point);
  CHECK(cfg.operators.mutation == Mutation::single_point);

  CHECK_THROWS_AS(apply_variant_label("IV.I", cfg), std::invalid_argument);
  CHECK_THROWS_AS(apply_variant_label("II", cfg), std::invalid_argument);
}

#ifdef ARX_EVOLVE_BIN
TEST_CASE("command-line binary") {
  auto dir = make_workdir("cli");
  auto data = write_dataset(dir);
  const std::string bin = ARX_EVOLVE_BIN;

  SUBCASE("run subcommand writes outputs and exits 0") {
    auto out = dir / "cli_out";
    const std::string cmd = bin + " run --data " + data.string() + " --out " +
                            out.string() +
                            " --generations 3 --pop-size 40 --seed 5 2>/dev/null";
    REQUIRE(std::system(cmd.c_str()) == 0);
    CHECK(count_data_rows(slurp(out / "stats.csv")) == 4);
    CHECK(fs::exists(out / "best_model.txt"));
    CHECK(fs::exists(out / "population_final.txt"));
  }
  SUBCASE("missing data file exits 2") {
    const std::string cmd = bin + " run --data " + (dir / "nope.csv").string() +
                            " --out " + (dir / "x").string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 2);
  }
  SUBCASE("ARX_EVOLVE_OUT overrides --out") {
    auto env_out = dir / "env_out";
    const std::string cmd = "ARX_EVOLVE_OUT=" + env_out.string() + " " + bin +
                            " run --data " + data.string() + " --out " +
                            (dir / "ignored").string() +
                            " --generations 1 --pop-size 40 2>/dev/null";
    REQUIRE(std::system(cmd.c_str()) == 0);
    CHECK(fs::exists(env_out / "stats.csv"));
    CHECK(!fs::exists(dir / "ignored"));
  }
}
#endif
