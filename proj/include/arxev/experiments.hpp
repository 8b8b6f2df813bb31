#ifndef ARXEV_EXPERIMENTS_HPP
#define ARXEV_EXPERIMENTS_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "arxev/engine.hpp"

namespace arxev {

// Operator rows of the 3x3 variant matrix. Row I = roulette +
// single-point crossover + single-point mutation; row II = tournament +
// double-point + multi-point; row III = ranking + uniform + probabilistic.
OperatorConfig operator_row(int row, const OperatorConfig& base);

// "A.B" labels: A = adaptation variant, B = operator row.
std::string variant_label(AdaptationVariant variant, int op_row);
void apply_variant_label(const std::string& label, EngineConfig& cfg);

struct ExperimentPlan {
  enum class Mode { run, matrix, sweep };

  Mode mode = Mode::run;
  EngineConfig base_config;
  std::vector<double> sweep_grid{0.001, 0.005, 0.01, 0.05, 0.1};
  int repeats = 1;
  std::filesystem::path data_path;
  std::filesystem::path out_dir;
};

// Exit status 0 iff all requested outputs were fully written; 2 when the
// data file is missing or unreadable, 1 on any other failure. Diagnostics
// go to stderr.

// Writes stats.csv, best_model.txt, population_final.txt.
int cmd_run(const ExperimentPlan& plan);

// Runs all 9 variants with a shared seed; per-variant stats files plus
// ranking.csv (0-2 points per category: best result, total cost,
// susceptibility = spread of final best quality across the sweep grid).
int cmd_matrix(const ExperimentPlan& plan);

// sweep.csv over the p_m grid x repeats, derived seeds base_seed + i in
// row order (grid-major); reports the best-performing p_m on stdout.
int cmd_sweep(const ExperimentPlan& plan);

}  // namespace arxev

#endif
