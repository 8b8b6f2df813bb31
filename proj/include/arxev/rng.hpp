#ifndef ARXEV_RNG_HPP
#define ARXEV_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace arxev {

// All stochastic code draws through these helpers rather than the
// std:: distributions, whose output is implementation-defined. A run is
// then reproducible from its seed on any standard library.
using Rng = std::mt19937_64;

inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
}

inline double uniform_real(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  return static_cast<std::size_t>(
      (static_cast<unsigned __int128>(rng()) * n) >> 64);
}

inline double gaussian(Rng& rng, double sd) {
  // Box-Muller, single branch; two draws per sample.
  double u1 = 1.0 - uniform_unit(rng);  // (0, 1]
  double u2 = uniform_unit(rng);
  return sd * std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace arxev

#endif
