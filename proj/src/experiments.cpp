#include "arxev/experiments.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <stdexcept>

namespace arxev {

namespace {

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out.flush()) throw std::runtime_error("write failed: " + path.string());
}

const char* kRoman[] = {"I", "II", "III"};

int roman_index(const std::string& s) {
  for (int i = 0; i < 3; ++i)
    if (s == kRoman[i]) return i + 1;
  throw std::invalid_argument("bad variant component '" + s + "'");
}

double best_quality(const RunResult& r) {
  double best = r.stats.front().best_sse;
  for (const auto& s : r.stats) best = std::min(best, s.best_sse);
  return 1.0 / (1.0 + best);
}

double best_sse_ever(const RunResult& r) {
  double best = r.stats.front().best_sse;
  for (const auto& s : r.stats) best = std::min(best, s.best_sse);
  return best;
}

long long total_cost_ms(const RunResult& r) {
  long long total = 0;
  for (const auto& s : r.stats) total += s.wall_ms;
  return total;
}

// 2 points for the best value, 0 for the worst, 1 otherwise; ties share
// the higher score.
std::vector<int> award_points(const std::vector<double>& values,
                              bool higher_is_better) {
  const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
  const double best = higher_is_better ? *mx : *mn;
  const double worst = higher_is_better ? *mn : *mx;
  std::vector<int> points(values.size(), 1);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == best)
      points[i] = 2;
    else if (values[i] == worst)
      points[i] = 0;
  }
  return points;
}

int guarded(const ExperimentPlan& plan,
            int (*body)(const ExperimentPlan&, const TimeSeriesTable&)) {
  TimeSeriesTable table;
  try {
    table = load_table(plan.data_path.string());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  try {
    return body(plan, table);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

OperatorConfig operator_row(int row, const OperatorConfig& base) {
  OperatorConfig cfg = base;
  switch (row) {
    case 1:
      cfg.selection = Selection::roulette;
      cfg.crossover = Crossover::single_point;
      cfg.mutation = Mutation::single_point;
      break;
    case 2:
      cfg.selection = Selection::tournament;
      cfg.crossover = Crossover::double_point;
      cfg.mutation = Mutation::multi_point;
      break;
    case 3:
      cfg.selection = Selection::ranking;
      cfg.crossover = Crossover::uniform;
      cfg.mutation = Mutation::probabilistic;
      break;
    default:
      throw std::invalid_argument("operator row must be 1..3");
  }
  return cfg;
}

std::string variant_label(AdaptationVariant variant, int op_row) {
  return std::string(kRoman[static_cast<int>(variant)]) + "." + kRoman[op_row - 1];
}

void apply_variant_label(const std::string& label, EngineConfig& cfg) {
  const auto dot = label.find('.');
  if (dot == std::string::npos)
    throw std::invalid_argument("variant label must look like I.I .. III.III");
  const int adaptation = roman_index(label.substr(0, dot));
  const int op_row = roman_index(label.substr(dot + 1));
  cfg.variant = static_cast<AdaptationVariant>(adaptation - 1);
  cfg.operators = operator_row(op_row, cfg.operators);
}

int cmd_run(const ExperimentPlan& plan) {
  return guarded(plan, [](const ExperimentPlan& p, const TimeSeriesTable& table) {
    const RunResult result = arxev::run(p.base_config, table);
    write_file(p.out_dir / "stats.csv", stats_csv(result.stats));
    write_file(p.out_dir / "best_model.txt", format_model(result.best_model));
    write_file(p.out_dir / "population_final.txt",
               format_population(result.final_population));
    return 0;
  });
}

int cmd_matrix(const ExperimentPlan& plan) {
  return guarded(plan, [](const ExperimentPlan& p, const TimeSeriesTable& table) {
    std::vector<std::string> labels;
    std::vector<std::size_t> lengths;
    std::vector<double> best_results, susceptibilities;
    std::vector<double> costs;

    for (int adaptation = 1; adaptation <= 3; ++adaptation) {
      for (int op_row = 1; op_row <= 3; ++op_row) {
        const std::string label = variant_label(
            static_cast<AdaptationVariant>(adaptation - 1), op_row);
        EngineConfig cfg = p.base_config;
        apply_variant_label(label, cfg);

        const RunResult result = arxev::run(cfg, table);
        write_file(p.out_dir / ("stats_" + label + ".csv"),
                   stats_csv(result.stats));

        double q_lo = 0.0, q_hi = 0.0;
        bool first = true;
        for (double pm : p.sweep_grid) {
          EngineConfig sweep_cfg = cfg;
          sweep_cfg.operators.pm = pm;
          const double q = best_quality(arxev::run(sweep_cfg, table));
          if (first) {
            q_lo = q_hi = q;
            first = false;
          } else {
            q_lo = std::min(q_lo, q);
            q_hi = std::max(q_hi, q);
          }
        }

        labels.push_back(label);
        lengths.push_back(result.final_population.genotype_length());
        best_results.push_back(best_quality(result));
        costs.push_back(static_cast<double>(total_cost_ms(result)));
        susceptibilities.push_back(q_hi - q_lo);
      }
    }

    const auto p_best = award_points(best_results, true);
    const auto p_cost = award_points(costs, false);
    const auto p_susc = award_points(susceptibilities, false);

    std::string csv =
        "# points per category: 2 = best, 0 = worst, 1 otherwise; "
        "ties share the higher score\n"
        "variant,genotype_length,best_result,cost_ms_total,susceptibility,"
        "points_best,points_cost,points_susceptibility,points_total\n";
    for (std::size_t i = 0; i < labels.size(); ++i) {
      csv += labels[i] + "," + std::to_string(lengths[i]) + "," +
             format_real(best_results[i]) + "," +
             std::to_string(static_cast<long long>(costs[i])) + "," +
             format_real(susceptibilities[i]) + "," + std::to_string(p_best[i]) +
             "," + std::to_string(p_cost[i]) + "," + std::to_string(p_susc[i]) +
             "," + std::to_string(p_best[i] + p_cost[i] + p_susc[i]) + "\n";
    }
    write_file(p.out_dir / "ranking.csv", csv);
    return 0;
  });
}

int cmd_sweep(const ExperimentPlan& plan) {
  if (plan.sweep_grid.empty()) {
    std::cerr << "error: empty sweep grid\n";
    return 1;
  }
  if (plan.repeats < 1) {
    std::cerr << "error: repeats must be >= 1\n";
    return 1;
  }
  return guarded(plan, [](const ExperimentPlan& p, const TimeSeriesTable& table) {
    std::string csv = "pm,repeat,final_best_sse,final_best_quality\n";
    std::vector<double> mean_sse(p.sweep_grid.size(), 0.0);
    for (std::size_t i = 0; i < p.sweep_grid.size(); ++i) {
      for (int rep = 0; rep < p.repeats; ++rep) {
        EngineConfig cfg = p.base_config;
        cfg.operators.pm = p.sweep_grid[i];
        cfg.seed = p.base_config.seed +
                   static_cast<std::uint64_t>(i) * p.repeats + rep;
        const RunResult result = arxev::run(cfg, table);
        const double sse = best_sse_ever(result);
        mean_sse[i] += sse / p.repeats;
        csv += format_real(p.sweep_grid[i]) + "," + std::to_string(rep) + "," +
               format_real(sse) + "," + format_real(1.0 / (1.0 + sse)) + "\n";
      }
    }
    write_file(p.out_dir / "sweep.csv", csv);
    const std::size_t opt =
        std::min_element(mean_sse.begin(), mean_sse.end()) - mean_sse.begin();
    std::cout << "best p_m by mean final SSE: " << p.sweep_grid[opt] << "\n";
    return 0;
  });
}

}  // namespace arxev
