#include "arxev/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace arxev {

namespace {

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

GenerationStats make_stats(int generation,
                           const std::vector<EvaluationRecord>& records,
                           long long wall_ms) {
  double best_sse = records[0].sse;
  double max_q = records[0].quality;
  double sum_q = 0.0;
  for (const auto& r : records) {
    best_sse = std::min(best_sse, r.sse);
    max_q = std::max(max_q, r.quality);
    sum_q += r.quality;
  }
  return {generation, best_sse, sum_q / static_cast<double>(records.size()),
          max_q, wall_ms};
}

// Stable descending fitness order; ties keep index order so reordering
// equal-fitness individuals never changes the outcome.
std::vector<std::size_t> fitness_order(const std::vector<EvaluationRecord>& records) {
  std::vector<std::size_t> order(records.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return records[a].fitness > records[b].fitness;
  });
  return order;
}

}  // namespace

void EngineConfig::validate() const {
  operators.validate();
  structure.validate();
  if (generations < 0) throw std::invalid_argument("generations must be >= 0");
  if (population_size < 2)
    throw std::invalid_argument("population_size must be >= 2");
  if (elitism_count < 0 || elitism_count >= population_size)
    throw std::invalid_argument("elitism_count must be in [0, population_size)");
  if (window.length < structure.min_lag() + 1)
    throw std::invalid_argument("window length must be >= max(na, nb+nk) + 1");
  if (window.step < 1) throw std::invalid_argument("window step must be >= 1");
  if (seeding_range < 0) throw std::invalid_argument("seeding_range must be >= 0");
  if (output_index < 1 || output_index > 4)
    throw std::invalid_argument("output_index must be in 1..4");
}

Population step(const Population& pop,
                const std::vector<EvaluationRecord>& records,
                const EngineConfig& cfg, Rng& rng) {
  if (records.size() != pop.size())
    throw std::invalid_argument("records not aligned with population");
  const std::size_t n = pop.size();
  const auto order = fitness_order(records);

  std::vector<const Chromosome*> sorted(n);
  std::vector<double> sorted_fitness(n);
  for (std::size_t i = 0; i < n; ++i) {
    sorted[i] = &pop.individuals[order[i]];
    sorted_fitness[i] = records[order[i]].fitness;
  }

  Population next;
  next.generation = pop.generation + 1;
  next.individuals.reserve(n);
  for (int e = 0; e < cfg.elitism_count; ++e)
    next.individuals.push_back(*sorted[e]);

  while (next.individuals.size() < n) {
    const std::size_t i = select(sorted_fitness, cfg.operators, rng);
    const std::size_t j = select(sorted_fitness, cfg.operators, rng);
    auto [c1, c2] = crossover(*sorted[i], *sorted[j], cfg.operators, rng);
    next.individuals.push_back(mutate(c1, cfg.operators, rng));
    if (next.individuals.size() < n)
      next.individuals.push_back(mutate(c2, cfg.operators, rng));
  }
  return next;
}

RunResult run(const EngineConfig& cfg, const TimeSeriesTable& table) {
  cfg.validate();
  table.validate();
  Rng rng(cfg.seed);

  const auto windows = window(table, cfg.window);
  std::vector<ArxModel> bases;
  bases.reserve(windows.size());
  for (const auto& w : windows) {
    try {
      bases.push_back(fit_arx_ls(w, cfg.structure, cfg.output_index));
    } catch (const std::exception& e) {
      throw std::runtime_error("identification failed on window starting " +
                               std::to_string(w.years.front()) + ": " + e.what());
    }
  }

  Population pop =
      seed_population(bases, static_cast<std::size_t>(cfg.population_size),
                      cfg.seeding_range, rng);
  if (cfg.variant == AdaptationVariant::III) pop = extend_genotype(pop, rng);

  RunResult result;
  result.stats.reserve(cfg.generations + 1);
  double best_sse = kWorstSse + 1.0;

  using clock = std::chrono::steady_clock;
  for (int g = 0; g <= cfg.generations; ++g) {
    const auto t0 = clock::now();
    const auto records = evaluate_population(pop, table, cfg.variant, cfg.output_index);
    for (std::size_t i = 0; i < pop.size(); ++i) {
      if (records[i].sse < best_sse) {
        best_sse = records[i].sse;
        result.best = pop.individuals[i];
      }
    }
    if (g < cfg.generations) pop = step(pop, records, cfg, rng);
    const auto wall =
        std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0);
    result.stats.push_back(make_stats(g, records, wall.count()));
  }

  result.best_model = decode(result.best);
  result.final_population = std::move(pop);
  return result;
}

std::string stats_csv(const std::vector<GenerationStats>& stats) {
  std::string out = "generation,best_sse,avg_quality,max_quality,wall_ms\n";
  for (const auto& s : stats) {
    out += std::to_string(s.generation) + "," + format_real(s.best_sse) + "," +
           format_real(s.avg_quality) + "," + format_real(s.max_quality) + "," +
           std::to_string(s.wall_ms) + "\n";
  }
  return out;
}

std::string RunResult::serialize() const {
  std::string out = format_model(best_model);
  out += "---\n";
  out += format_population(final_population);
  out += "---\n";
  for (const auto& s : stats)
    out += std::to_string(s.generation) + "," + format_real(s.best_sse) + "," +
           format_real(s.avg_quality) + "," + format_real(s.max_quality) + "\n";
  return out;
}

}  // namespace arxev
