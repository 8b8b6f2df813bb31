#include "arxev/genome.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace arxev {

namespace {

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Chromosome encode(const ArxModel& model) {
  model.validate();
  const auto& s = model.structure;
  if (s.input_count != 1) throw std::invalid_argument("genome is SISO");
  if (s.na > kControlGenes || s.nb > kRealizationGenes)
    throw std::invalid_argument("model orders exceed the genome (na <= 5, nb <= 8)");
  if (s.nk != 0)
    throw std::invalid_argument("genome has no delay slot, nk must be 0");

  Chromosome ch;
  ch.genes.assign(kGenomeLength, 0.0);
  for (int j = 0; j < s.na; ++j) ch.genes[j] = model.a[j];
  for (int k = 0; k < s.nb; ++k) ch.genes[kControlGenes + k] = model.b[0][k];
  return ch;
}

ArxModel decode(const Chromosome& ch) {
  if (ch.size() != kGenomeLength && ch.size() != kGenomeLength + 1)
    throw std::invalid_argument("chromosome must have 13 or 14 genes, got " +
                                std::to_string(ch.size()));
  ArxModel model;
  model.structure =
      ArxStructure{kControlGenes, static_cast<int>(ch.size()) - kControlGenes, 0, 1};
  model.a.assign(ch.genes.begin(), ch.genes.begin() + kControlGenes);
  model.b = {{ch.genes.begin() + kControlGenes, ch.genes.end()}};
  return model;
}

SubsystemView subsystem_split(const Chromosome& ch) {
  std::span<const double> all(ch.genes);
  return {all.subspan(0, kControlGenes), all.subspan(kControlGenes)};
}

Population seed_population(const std::vector<ArxModel>& bases,
                           std::size_t target_size, double range, Rng& rng) {
  if (bases.empty()) throw std::invalid_argument("no base models");
  if (range < 0) throw std::invalid_argument("range must be >= 0");
  if (target_size < bases.size())
    throw std::invalid_argument("target size " + std::to_string(target_size) +
                                " smaller than base count " +
                                std::to_string(bases.size()));

  Population pop;
  pop.individuals.reserve(target_size);
  for (const auto& m : bases) pop.individuals.push_back(encode(m));

  // Children in round-robin over bases, two per base per cycle.
  std::size_t base_idx = 0;
  while (pop.individuals.size() < target_size) {
    const Chromosome& base = pop.individuals[base_idx];
    for (int c = 0; c < 2 && pop.individuals.size() < target_size; ++c) {
      Chromosome child;
      child.genes.reserve(base.size());
      for (double g : base.genes)
        child.genes.push_back(uniform_real(rng, g - range, g + range));
      pop.individuals.push_back(std::move(child));
    }
    base_idx = (base_idx + 1) % bases.size();
  }
  return pop;
}

std::string format_population(const Population& pop) {
  std::string out;
  for (const auto& ch : pop.individuals) {
    for (std::size_t i = 0; i < ch.size(); ++i) {
      if (i == kControlGenes) out += " |";
      if (i > 0) out += " ";
      out += format_real(ch.genes[i]);
    }
    out += "\n";
  }
  return out;
}

Population parse_population(std::string_view text) {
  Population pop;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Chromosome ch;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      if (tok == "|") {
        if (ch.size() != kControlGenes)
          throw std::runtime_error("subsystem boundary in the wrong position");
        continue;
      }
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw std::runtime_error("malformed gene '" + tok + "'");
      ch.genes.push_back(v);
    }
    if (ch.size() != kGenomeLength && ch.size() != kGenomeLength + 1)
      throw std::runtime_error("bad genotype length " + std::to_string(ch.size()));
    if (!pop.individuals.empty() && ch.size() != pop.genotype_length())
      throw std::runtime_error("inconsistent genotype lengths");
    pop.individuals.push_back(std::move(ch));
  }
  return pop;
}

}  // namespace arxev
