#ifndef ARXEV_OPERATORS_HPP
#define ARXEV_OPERATORS_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "arxev/genome.hpp"
#include "arxev/rng.hpp"

namespace arxev {

enum class Selection { roulette, tournament, ranking };
enum class Crossover { single_point, double_point, uniform, longitudinal };
enum class Mutation { single_point, multi_point, probabilistic };

struct OperatorConfig {
  Selection selection = Selection::roulette;
  Crossover crossover = Crossover::single_point;
  Mutation mutation = Mutation::single_point;
  double pc = 0.75;
  double pm = 0.01;
  int tournament_k = 2;
  double ranking_pressure = 1.5;   // linear ranking, in (1, 2]
  double mutation_scale = 0.001;   // perturbation half-width, = seeding range

  void validate() const;
};

// Picks one index. Roulette weights are fitness shifted above zero by
// min(f) with a 1e-12 floor (variant fitness values are differences and
// may be negative); tournament is best-of-k with replacement; ranking is
// linear ranking at the configured pressure. An all-equal fitness vector
// degenerates to a uniform draw.
std::size_t select(const std::vector<double>& fitness,
                   const OperatorConfig& cfg, Rng& rng);

// With probability 1 - pc returns parent copies. longitudinal swaps the
// whole ch_a / ch_b blocks (cut fixed at the subsystem boundary).
std::pair<Chromosome, Chromosome> crossover(const Chromosome& p1,
                                            const Chromosome& p2,
                                            const OperatorConfig& cfg,
                                            Rng& rng);

Chromosome mutate(const Chromosome& ch, const OperatorConfig& cfg, Rng& rng);

// Appends one gene to every individual, drawn uniformly from the closed
// interval spanned by the smallest and largest gene value in the whole
// population. Throws if the population is already extended.
Population extend_genotype(const Population& pop, Rng& rng);

}  // namespace arxev

#endif
