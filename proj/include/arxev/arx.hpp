#ifndef ARXEV_ARX_HPP
#define ARXEV_ARX_HPP

#include <Eigen/Dense>
#include <string>
#include <string_view>
#include <vector>

#include "arxev/timeseries.hpp"

namespace arxev {

// One-step predictions whose magnitude exceeds the guard mark the model
// as unusable; its SSE becomes the sentinel so it ranks strictly worst
// without producing non-finite arithmetic downstream.
inline constexpr double kPredictionGuard = 1e12;
inline constexpr double kWorstSse = 1e300;

struct ArxStructure {
  int na = 5;          // order of A(q)
  int nb = 8;          // order of B(q), per input
  int nk = 0;          // input delay; lag nk+1 is the first input term
  int input_count = 1; // 1 = SISO, 14 = full MISO

  void validate() const;
  int regressor_count() const { return na + nb * input_count; }
  // First row index with all lags available.
  int min_lag() const { return na > nk + nb ? na : nk + nb; }
};

struct ArxModel {
  ArxStructure structure;
  std::vector<double> a;                // a_1..a_na of A(q) = 1 + a_1 q^-1 + ...
  std::vector<std::vector<double>> b;   // b[input][0..nb-1]

  void validate() const;
};

// Regression system for Eq-of-motion least squares: one row per usable
// step, columns [-y(t-1) .. -y(t-na), u_i(t-nk-1) .. u_i(t-nk-nb) per
// input], target y(t).
std::pair<Eigen::MatrixXd, Eigen::VectorXd> build_regression(
    const TimeSeriesTable& table, const ArxStructure& structure,
    int output_index);

// Least-squares fit via column-pivoted Householder QR. Throws
// "singular regression" on rank deficiency rather than returning an
// arbitrary pseudo-solution. output_index is 1-based (y1..y4).
ArxModel fit_arx_ls(const TimeSeriesTable& table, const ArxStructure& structure,
                    int output_index);

// One-step-ahead prediction at table row `row`, from observed lags only
// (series-parallel form, no recursive feedback).
double predict_one_step(const ArxModel& model, const TimeSeriesTable& table,
                        int row);

// Sum of squared one-step prediction errors over all rows with full lags.
// Returns kWorstSse as soon as any |prediction| exceeds the guard.
double residual_sse(const ArxModel& model, const TimeSeriesTable& table,
                    int output_index);

// Text format: `na=<int> nb=<int> nk=<int> inputs=<int>`, then `a: ...`,
// then one `b<i>: ...` line per input, 17 significant digits.
std::string format_model(const ArxModel& model);
ArxModel parse_model(std::string_view text);

}  // namespace arxev

#endif
