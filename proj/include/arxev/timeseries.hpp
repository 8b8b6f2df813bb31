#ifndef ARXEV_TIMESERIES_HPP
#define ARXEV_TIMESERIES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace arxev {

struct ArxModel;  // arx.hpp

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Annual observations: one row per year, inputs u1..u14 and outputs
/// y1..y4 (CSV schema). Tables built in memory may carry fewer columns.
struct TimeSeriesTable {
  std::vector<int> years;
  std::vector<std::vector<double>> inputs;   // inputs[row][col]
  std::vector<std::vector<double>> outputs;  // outputs[row][col]

  std::size_t rows() const { return years.size(); }
  std::size_t input_count() const { return inputs.empty() ? 0 : inputs[0].size(); }
  std::size_t output_count() const { return outputs.empty() ? 0 : outputs[0].size(); }

  // Throws std::invalid_argument on a violated invariant: years strictly
  // increasing with step 1, consistent column counts, finite values,
  // at least 2 rows.
  void validate() const;
};

struct WindowSpec {
  int length = 30;
  int step = 1;
};

inline constexpr int kCsvInputColumns = 14;
inline constexpr int kCsvOutputColumns = 4;

// Strict CSV ingestion: header `year,u1,...,u14,y1,y2,y3,y4`, `.` decimal
// point, no missing values. Errors name the offending row and column.
TimeSeriesTable parse_table(std::string_view text);

// Inverse of parse_table for full-schema tables (17 significant digits).
std::string serialize_table(const TimeSeriesTable& table);

TimeSeriesTable load_table(const std::string& path);
void save_table(const TimeSeriesTable& table, const std::string& path);

// Contiguous sliding sub-tables: floor((N - length) / step) + 1 of them.
std::vector<TimeSeriesTable> window(const TimeSeriesTable& table,
                                    const WindowSpec& spec);

// Drives the model recursively over the given input rows. Output rows
// before the first fully-lagged step are zero (initial conditions). With
// noise_sd = 0 the result satisfies the model exactly from that step on.
// Throws if the recursion exceeds 1e12 in magnitude, naming the step.
TimeSeriesTable synth_series(const ArxModel& model,
                             const std::vector<std::vector<double>>& input,
                             double noise_sd, std::uint64_t seed,
                             int start_year = 1946);

// Full-schema synthetic dataset standing in for the unpublished source
// data: 14 random-walk inputs, y1 generated from a stable SISO model on
// u1, y2..y4 derived series. Deterministic per seed.
TimeSeriesTable synthetic_dataset(int rows, std::uint64_t seed,
                                  int start_year = 1946);

}  // namespace arxev

#endif
