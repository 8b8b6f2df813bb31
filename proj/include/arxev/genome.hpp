#ifndef ARXEV_GENOME_HPP
#define ARXEV_GENOME_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arxev/arx.hpp"
#include "arxev/rng.hpp"

namespace arxev {

inline constexpr int kControlGenes = 5;      // ch_a slice: A(q) coefficients
inline constexpr int kRealizationGenes = 8;  // ch_b slice: B(q) coefficients
inline constexpr int kGenomeLength = kControlGenes + kRealizationGenes;

/// Real-valued genotype [ch_a | ch_b]: 5 autoregressive genes, 8 exogenous
/// genes, optionally one extra exogenous gene (extended genotype).
struct Chromosome {
  std::vector<double> genes;

  std::size_t size() const { return genes.size(); }
  bool extended() const { return genes.size() > kGenomeLength; }
};

/// The longitudinal split: control subsystem (ch_a) vs realization
/// subsystem (ch_b). Views into the chromosome; concatenation is exact.
struct SubsystemView {
  std::span<const double> control;
  std::span<const double> realization;
};

struct Population {
  std::vector<Chromosome> individuals;
  int generation = 0;

  std::size_t size() const { return individuals.size(); }
  std::size_t genotype_length() const {
    return individuals.empty() ? 0 : individuals[0].size();
  }
};

// SISO model (na <= 5, nb <= 8, nk = 0) -> zero-padded 13-gene chromosome.
Chromosome encode(const ArxModel& model);

// Inverse of encode: 13 genes -> na=5, nb=8 SISO model; a 14-gene
// chromosome decodes with nb=9.
ArxModel decode(const Chromosome& ch);

SubsystemView subsystem_split(const Chromosome& ch);

// Every base joins the population; children are uniform perturbations of
// a base within +/- range, generated two per base, cycling over bases in
// order until target_size is reached.
Population seed_population(const std::vector<ArxModel>& bases,
                           std::size_t target_size, double range, Rng& rng);

// Snapshot format: one chromosome per line, space-separated 17-significant-
// digit reals with `|` at the ch_a/ch_b boundary.
std::string format_population(const Population& pop);
Population parse_population(std::string_view text);

}  // namespace arxev

#endif
