#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "arxev/experiments.hpp"

namespace {

struct CliOptions {
  arxev::ExperimentPlan plan;
  std::string variant = "I.I";
  std::string data;
  std::string out = "out";
};

void add_common_flags(CLI::App* cmd, CliOptions& opt) {
  auto& cfg = opt.plan.base_config;
  cmd->add_option("--data", opt.data, "input CSV (year,u1..u14,y1..y4)")
      ->required();
  cmd->add_option("--out", opt.out, "output directory");
  cmd->add_option("--variant", opt.variant,
                  "algorithm variant, I.I .. III.III (adaptation.operators)");
  cmd->add_option("--pc", cfg.operators.pc, "crossover probability");
  cmd->add_option("--pm", cfg.operators.pm, "mutation probability");
  cmd->add_option("--generations", cfg.generations, "generation count");
  cmd->add_option("--pop-size", cfg.population_size, "population size");
  cmd->add_option("--seed", cfg.seed, "RNG seed");
  cmd->add_option("--na", cfg.structure.na, "A(q) order");
  cmd->add_option("--nb", cfg.structure.nb, "B(q) order");
  cmd->add_option("--nk", cfg.structure.nk, "input delay");
  cmd->add_option("--window-len", cfg.window.length, "identification window length");
  cmd->add_option("--window-step", cfg.window.step, "window stride");
  cmd->add_option("--elitism", cfg.elitism_count, "elite count per generation");
}

int finalize(CliOptions& opt, arxev::ExperimentPlan::Mode mode,
             int (*command)(const arxev::ExperimentPlan&)) {
  opt.plan.mode = mode;
  opt.plan.data_path = opt.data;
  if (const char* env = std::getenv("ARX_EVOLVE_OUT"))
    opt.plan.out_dir = env;
  else
    opt.plan.out_dir = opt.out;
  try {
    arxev::apply_variant_label(opt.variant, opt.plan.base_config);
    opt.plan.base_config.validate();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return command(opt.plan);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ARX model evolution: identification-seeded genetic search "
               "over annual time-series data"};
  app.require_subcommand(1);

  CliOptions opt;
  auto* run = app.add_subcommand("run", "single evolutionary run");
  auto* matrix = app.add_subcommand(
      "matrix", "all 9 selection/crossover/mutation x adaptation variants");
  auto* sweep = app.add_subcommand("sweep", "mutation-probability sweep");
  for (auto* cmd : {run, matrix, sweep}) add_common_flags(cmd, opt);
  for (auto* cmd : {matrix, sweep}) {
    cmd->add_option("--sweep-grid", opt.plan.sweep_grid,
                    "mutation probabilities to sweep");
    cmd->add_option("--repeats", opt.plan.repeats, "repeats per grid point");
  }

  CLI11_PARSE(app, argc, argv);

  if (run->parsed())
    return finalize(opt, arxev::ExperimentPlan::Mode::run, arxev::cmd_run);
  if (matrix->parsed())
    return finalize(opt, arxev::ExperimentPlan::Mode::matrix, arxev::cmd_matrix);
  return finalize(opt, arxev::ExperimentPlan::Mode::sweep, arxev::cmd_sweep);
}
