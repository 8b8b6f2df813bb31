#ifndef ARXEV_FITNESS_HPP
#define ARXEV_FITNESS_HPP

#include <vector>

#include "arxev/genome.hpp"
#include "arxev/timeseries.hpp"

namespace arxev {

// Adaptation-function variants. I and III share the population-average
// difference; III is distinguished by the genotype extension performed at
// engine level before generation 0.
enum class AdaptationVariant { I, II, III };

struct EvaluationRecord {
  double sse;      // raw evaluation: one-step-ahead SSE
  double quality;  // 1 / (1 + sse), in (0, 1]
  double fitness;  // variant-transformed difference
};

// I, III: q_i - avg(q).  II: q_i - max(q).
std::vector<double> adaptation_transform(const std::vector<double>& qualities,
                                         AdaptationVariant variant);

std::vector<EvaluationRecord> evaluate_population(const Population& pop,
                                                  const TimeSeriesTable& table,
                                                  AdaptationVariant variant,
                                                  int output_index = 1);

}  // namespace arxev

#endif
