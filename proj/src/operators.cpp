#include "arxev/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace arxev {

namespace {

bool all_equal(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [&](double x) { return x == v[0]; });
}

std::size_t select_roulette(const std::vector<double>& fitness, Rng& rng) {
  const double lo = *std::min_element(fitness.begin(), fitness.end());
  constexpr double kFloor = 1e-12;  // worst keeps infinitesimal probability
  double total = 0.0;
  for (double f : fitness) total += f - lo + kFloor;
  if (!std::isfinite(total) || total <= 0.0)
    return uniform_index(rng, fitness.size());
  double r = uniform_real(rng, 0.0, total);
  for (std::size_t i = 0; i < fitness.size(); ++i) {
    r -= fitness[i] - lo + kFloor;
    if (r <= 0.0) return i;
  }
  return fitness.size() - 1;
}

std::size_t select_tournament(const std::vector<double>& fitness, int k,
                              Rng& rng) {
  std::size_t best = uniform_index(rng, fitness.size());
  for (int i = 1; i < k; ++i) {
    std::size_t c = uniform_index(rng, fitness.size());
    if (fitness[c] > fitness[best]) best = c;
  }
  return best;
}

std::size_t select_ranking(const std::vector<double>& fitness, double pressure,
                           Rng& rng) {
  const std::size_t n = fitness.size();
  if (n == 1) return 0;
  std::vector<std::size_t> order(n);  // ascending fitness, ties by index
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return fitness[a] < fitness[b];
  });
  // Linear ranking: rank 0 = worst, p_r = (2-s)/n + 2 r (s-1) / (n (n-1)).
  double r = uniform_unit(rng);
  for (std::size_t rank = 0; rank < n; ++rank) {
    const double p = (2.0 - pressure) / n +
                     2.0 * rank * (pressure - 1.0) / (n * (n - 1.0));
    r -= p;
    if (r <= 0.0) return order[rank];
  }
  return order[n - 1];
}

}  // namespace

void OperatorConfig::validate() const {
  if (pc < 0.0 || pc > 1.0) throw std::invalid_argument("pc must be in [0, 1]");
  if (pm < 0.0 || pm > 1.0) throw std::invalid_argument("pm must be in [0, 1]");
  if (tournament_k < 2) throw std::invalid_argument("tournament_k must be >= 2");
  if (ranking_pressure <= 1.0 || ranking_pressure > 2.0)
    throw std::invalid_argument("ranking_pressure must be in (1, 2]");
  if (mutation_scale < 0.0)
    throw std::invalid_argument("mutation_scale must be >= 0");
}

std::size_t select(const std::vector<double>& fitness,
                   const OperatorConfig& cfg, Rng& rng) {
  if (fitness.empty()) throw std::invalid_argument("empty fitness vector");
  for (double f : fitness)
    if (std::isnan(f)) throw std::invalid_argument("NaN fitness");
  if (all_equal(fitness)) return uniform_index(rng, fitness.size());

  switch (cfg.selection) {
    case Selection::roulette:
      return select_roulette(fitness, rng);
    case Selection::tournament:
      return select_tournament(fitness, cfg.tournament_k, rng);
    case Selection::ranking:
      return select_ranking(fitness, cfg.ranking_pressure, rng);
  }
  throw std::logic_error("unreachable");
}

std::pair<Chromosome, Chromosome> crossover(const Chromosome& p1,
                                            const Chromosome& p2,
                                            const OperatorConfig& cfg,
                                            Rng& rng) {
  if (p1.size() != p2.size())
    throw std::invalid_argument("parent genotype lengths differ");
  const std::size_t len = p1.size();

  Chromosome c1 = p1, c2 = p2;
  if (uniform_unit(rng) >= cfg.pc) return {std::move(c1), std::move(c2)};

  auto swap_range = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i) std::swap(c1.genes[i], c2.genes[i]);
  };

  switch (cfg.crossover) {
    case Crossover::single_point: {
      const std::size_t cut = 1 + uniform_index(rng, len - 1);
      swap_range(cut, len);
      break;
    }
    case Crossover::double_point: {
      std::size_t a = 1 + uniform_index(rng, len - 1);
      std::size_t b = a;
      while (b == a) b = 1 + uniform_index(rng, len - 1);
      if (a > b) std::swap(a, b);
      swap_range(a, b);
      break;
    }
    case Crossover::uniform: {
      for (std::size_t i = 0; i < len; ++i)
        if (uniform_unit(rng) < 0.5) std::swap(c1.genes[i], c2.genes[i]);
      break;
    }
    case Crossover::longitudinal:
      swap_range(kControlGenes, len);
      break;
  }
  return {std::move(c1), std::move(c2)};
}

Chromosome mutate(const Chromosome& ch, const OperatorConfig& cfg, Rng& rng) {
  Chromosome out = ch;
  const double d = cfg.mutation_scale;
  switch (cfg.mutation) {
    case Mutation::single_point:
      if (uniform_unit(rng) < cfg.pm) {
        const std::size_t i = uniform_index(rng, out.size());
        out.genes[i] += uniform_real(rng, -d, d);
      }
      break;
    case Mutation::multi_point:
      for (double& g : out.genes)
        if (uniform_unit(rng) < cfg.pm) g += uniform_real(rng, -d, d);
      break;
    case Mutation::probabilistic:
      for (double& g : out.genes)
        if (uniform_unit(rng) < cfg.pm) g += gaussian(rng, d);
      break;
  }
  return out;
}

Population extend_genotype(const Population& pop, Rng& rng) {
  if (pop.individuals.empty()) throw std::invalid_argument("empty population");
  for (const auto& ch : pop.individuals)
    if (ch.extended()) throw std::invalid_argument("population already extended");

  double lo = pop.individuals[0].genes[0], hi = lo;
  for (const auto& ch : pop.individuals)
    for (double g : ch.genes) {
      lo = std::min(lo, g);
      hi = std::max(hi, g);
    }

  Population out = pop;
  for (auto& ch : out.individuals) ch.genes.push_back(uniform_real(rng, lo, hi));
  return out;
}

}  // namespace arxev
