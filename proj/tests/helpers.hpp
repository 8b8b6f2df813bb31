#ifndef ARXEV_TESTS_HELPERS_HPP
#define ARXEV_TESTS_HELPERS_HPP

#include <Eigen/Dense>
#include <vector>

#include "arxev/arx.hpp"
#include "arxev/rng.hpp"
#include "arxev/timeseries.hpp"

namespace arxev::testing {

// The printed base chromosome: a = (-0.1342), b = (0.343, -0.05387, -0.1443).
inline ArxModel fixture_model_ch1() {
  ArxModel m;
  m.structure = ArxStructure{1, 3, 0, 1};
  m.a = {-0.1342};
  m.b = {{0.343, -0.05387, -0.1443}};
  return m;
}

inline std::vector<std::vector<double>> random_input(int rows, int cols,
                                                     Rng& rng, double lo = -1.0,
                                                     double hi = 1.0) {
  std::vector<std::vector<double>> input(rows, std::vector<double>(cols));
  for (auto& row : input)
    for (auto& v : row) v = uniform_real(rng, lo, hi);
  return input;
}

// Stable random SISO model: A(q) roots inside the unit circle by scaling.
inline ArxModel random_stable_model(int na, int nb, Rng& rng) {
  ArxModel m;
  m.structure = ArxStructure{na, nb, 0, 1};
  m.a.resize(na);
  double scale = 0.8;
  for (int j = 0; j < na; ++j) {
    m.a[j] = uniform_real(rng, -scale / na, scale / na);
  }
  m.b.resize(1);
  m.b[0].resize(nb);
  for (int k = 0; k < nb; ++k) m.b[0][k] = uniform_real(rng, -1.0, 1.0);
  return m;
}

// Independent least-squares oracle: explicit normal equations, solved by
// LDLT. Kept separate from the production QR path on purpose.
inline ArxModel fit_arx_normal_equations(const TimeSeriesTable& table,
                                         const ArxStructure& structure,
                                         int output_index) {
  auto [design, target] = build_regression(table, structure, output_index);
  Eigen::MatrixXd gram = design.transpose() * design;
  Eigen::VectorXd rhs = design.transpose() * target;
  Eigen::VectorXd theta = gram.ldlt().solve(rhs);

  ArxModel model;
  model.structure = structure;
  model.a.assign(theta.data(), theta.data() + structure.na);
  model.b.resize(structure.input_count);
  for (int i = 0; i < structure.input_count; ++i) {
    const double* begin = theta.data() + structure.na + i * structure.nb;
    model.b[i].assign(begin, begin + structure.nb);
  }
  return model;
}

}  // namespace arxev::testing

#endif
