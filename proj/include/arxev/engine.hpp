#ifndef ARXEV_ENGINE_HPP
#define ARXEV_ENGINE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "arxev/arx.hpp"
#include "arxev/fitness.hpp"
#include "arxev/genome.hpp"
#include "arxev/operators.hpp"
#include "arxev/timeseries.hpp"

namespace arxev {

struct EngineConfig {
  OperatorConfig operators;
  AdaptationVariant variant = AdaptationVariant::I;
  int generations = 1000;
  int population_size = 99;
  std::uint64_t seed = 0;
  int elitism_count = 1;  // 0 for runs faithful to the source method's silence
  ArxStructure structure{5, 8, 0, 1};
  WindowSpec window{30, 1};
  int output_index = 1;
  double seeding_range = 0.001;

  void validate() const;
};

struct GenerationStats {
  int generation;
  double best_sse;
  double avg_quality;
  double max_quality;
  long long wall_ms;
};

struct RunResult {
  Chromosome best;
  ArxModel best_model;  // decode(best)
  std::vector<GenerationStats> stats;  // generations + 1 entries
  Population final_population;

  // Deterministic serialization: best model, final population and the
  // stats rows minus wall_ms. Two runs with the same seed match bitwise.
  std::string serialize() const;
};

// Full pipeline: window the data, least-squares-fit one base model per
// window, seed the population, extend the genotype once for variant III,
// then iterate generations of evaluate -> elitism -> select/crossover/
// mutate. Pure function of (cfg, table).
RunResult run(const EngineConfig& cfg, const TimeSeriesTable& table);

// One generational replacement: individuals sorted by fitness, elites
// copied verbatim, remainder filled by paired selection over the sorted
// list, crossover and per-child mutation.
Population step(const Population& pop,
                const std::vector<EvaluationRecord>& records,
                const EngineConfig& cfg, Rng& rng);

// `generation,best_sse,avg_quality,max_quality,wall_ms`, one row per
// generation including generation 0.
std::string stats_csv(const std::vector<GenerationStats>& stats);

}  // namespace arxev

#endif
