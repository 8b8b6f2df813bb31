#include "arxev/fitness.hpp"

#include <algorithm>
#include <stdexcept>

#include "arxev/arx.hpp"

namespace arxev {

std::vector<double> adaptation_transform(const std::vector<double>& qualities,
                                         AdaptationVariant variant) {
  if (qualities.empty()) throw std::invalid_argument("empty quality vector");
  double ref;
  if (variant == AdaptationVariant::II) {
    ref = *std::max_element(qualities.begin(), qualities.end());
  } else {
    ref = 0.0;
    for (double q : qualities) ref += q;
    ref /= static_cast<double>(qualities.size());
  }
  std::vector<double> fitness(qualities.size());
  for (std::size_t i = 0; i < qualities.size(); ++i)
    fitness[i] = qualities[i] - ref;
  return fitness;
}

std::vector<EvaluationRecord> evaluate_population(const Population& pop,
                                                  const TimeSeriesTable& table,
                                                  AdaptationVariant variant,
                                                  int output_index) {
  std::vector<EvaluationRecord> records(pop.size());
  std::vector<double> qualities(pop.size());
  for (std::size_t i = 0; i < pop.size(); ++i) {
    const double sse = residual_sse(decode(pop.individuals[i]), table, output_index);
    records[i].sse = sse;
    records[i].quality = 1.0 / (1.0 + sse);
    qualities[i] = records[i].quality;
  }
  const std::vector<double> fitness = adaptation_transform(qualities, variant);
  for (std::size_t i = 0; i < pop.size(); ++i) records[i].fitness = fitness[i];
  return records;
}

}  // namespace arxev
