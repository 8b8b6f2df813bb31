#include "arxev/timeseries.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "arxev/arx.hpp"
#include "arxev/rng.hpp"

namespace arxev {

namespace {

std::string expected_header() {
  std::string h = "year";
  for (int i = 1; i <= kCsvInputColumns; ++i) h += ",u" + std::to_string(i);
  for (int i = 1; i <= kCsvOutputColumns; ++i) h += ",y" + std::to_string(i);
  return h;
}

std::vector<std::string_view> split_line(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = line.find(',', pos);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(pos));
      break;
    }
    fields.push_back(line.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return fields;
}

double parse_real(std::string_view field, std::size_t row, std::size_t col) {
  double value = 0.0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    throw ParseError("malformed number '" + std::string(field) + "' at row " +
                     std::to_string(row) + ", column " + std::to_string(col));
  }
  return value;
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void TimeSeriesTable::validate() const {
  if (rows() < 2) throw std::invalid_argument("table needs at least 2 rows");
  if (inputs.size() != rows() || outputs.size() != rows())
    throw std::invalid_argument("row count mismatch between years and values");
  for (std::size_t r = 0; r < rows(); ++r) {
    if (r > 0 && years[r] != years[r - 1] + 1)
      throw std::invalid_argument("years must increase by exactly 1 (row " +
                                  std::to_string(r + 1) + ")");
    if (inputs[r].size() != input_count() || outputs[r].size() != output_count())
      throw std::invalid_argument("ragged row " + std::to_string(r + 1));
    for (double v : inputs[r])
      if (!std::isfinite(v)) throw std::invalid_argument("non-finite input value");
    for (double v : outputs[r])
      if (!std::isfinite(v)) throw std::invalid_argument("non-finite output value");
  }
}

TimeSeriesTable parse_table(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
    pos = nl + 1;
  }
  if (lines.empty()) throw ParseError("empty input");
  if (std::string(lines[0]) != expected_header())
    throw ParseError("bad header: expected '" + expected_header() + "'");
  if (lines.size() == 1) throw ParseError("no data rows");

  const std::size_t ncols = 1 + kCsvInputColumns + kCsvOutputColumns;
  TimeSeriesTable table;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto fields = split_line(lines[i]);
    const std::size_t row = i + 1;  // 1-based, counting the header
    if (fields.size() != ncols)
      throw ParseError("row " + std::to_string(row) + " has " +
                       std::to_string(fields.size()) + " columns, expected " +
                       std::to_string(ncols));
    int year = 0;
    {
      auto f = fields[0];
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), year);
      if (ec != std::errc{} || ptr != f.data() + f.size())
        throw ParseError("malformed year at row " + std::to_string(row));
    }
    if (!table.years.empty()) {
      if (year == table.years.back())
        throw ParseError("duplicate year " + std::to_string(year) + " at row " +
                         std::to_string(row));
      if (year != table.years.back() + 1)
        throw ParseError("non-monotone year " + std::to_string(year) +
                         " at row " + std::to_string(row));
    }
    table.years.push_back(year);
    std::vector<double> in(kCsvInputColumns), out(kCsvOutputColumns);
    for (int c = 0; c < kCsvInputColumns; ++c)
      in[c] = parse_real(fields[1 + c], row, 2 + c);
    for (int c = 0; c < kCsvOutputColumns; ++c)
      out[c] = parse_real(fields[1 + kCsvInputColumns + c], row,
                          2 + kCsvInputColumns + c);
    table.inputs.push_back(std::move(in));
    table.outputs.push_back(std::move(out));
  }
  table.validate();
  return table;
}

std::string serialize_table(const TimeSeriesTable& table) {
  if (table.input_count() != kCsvInputColumns ||
      table.output_count() != kCsvOutputColumns)
    throw std::invalid_argument("serialization requires the full CSV schema");
  std::string out = expected_header() + "\n";
  for (std::size_t r = 0; r < table.rows(); ++r) {
    out += std::to_string(table.years[r]);
    for (double v : table.inputs[r]) out += "," + format_real(v);
    for (double v : table.outputs[r]) out += "," + format_real(v);
    out += "\n";
  }
  return out;
}

TimeSeriesTable load_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open data file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_table(ss.str());
}

void save_table(const TimeSeriesTable& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << serialize_table(table);
}

std::vector<TimeSeriesTable> window(const TimeSeriesTable& table,
                                    const WindowSpec& spec) {
  if (spec.length < 2) throw std::invalid_argument("window length must be >= 2");
  if (spec.step < 1) throw std::invalid_argument("window step must be >= 1");
  const std::size_t n = table.rows();
  if (static_cast<std::size_t>(spec.length) > n)
    throw std::invalid_argument("window length " + std::to_string(spec.length) +
                                " exceeds table rows " + std::to_string(n));
  std::vector<TimeSeriesTable> windows;
  for (std::size_t start = 0; start + spec.length <= n; start += spec.step) {
    TimeSeriesTable w;
    const std::size_t stop = start + spec.length;
    w.years.assign(table.years.begin() + start, table.years.begin() + stop);
    w.inputs.assign(table.inputs.begin() + start, table.inputs.begin() + stop);
    w.outputs.assign(table.outputs.begin() + start, table.outputs.begin() + stop);
    windows.push_back(std::move(w));
  }
  return windows;
}

TimeSeriesTable synth_series(const ArxModel& model,
                             const std::vector<std::vector<double>>& input,
                             double noise_sd, std::uint64_t seed,
                             int start_year) {
  model.validate();
  if (noise_sd < 0) throw std::invalid_argument("noise_sd must be >= 0");
  const auto& s = model.structure;
  const std::size_t n = input.size();
  for (const auto& row : input)
    if (row.size() != static_cast<std::size_t>(s.input_count))
      throw std::invalid_argument("input column count does not match the model");

  Rng rng(seed);
  std::vector<double> y(n, 0.0);
  const int first = s.min_lag();
  for (std::size_t t = static_cast<std::size_t>(first); t < n; ++t) {
    double v = 0.0;
    for (int j = 1; j <= s.na; ++j) v -= model.a[j - 1] * y[t - j];
    for (int i = 0; i < s.input_count; ++i)
      for (int k = 1; k <= s.nb; ++k)
        v += model.b[i][k - 1] * input[t - s.nk - k][i];
    if (noise_sd > 0) v += gaussian(rng, noise_sd);
    if (!std::isfinite(v) || std::abs(v) > kPredictionGuard)
      throw std::runtime_error("unstable recursion at step " + std::to_string(t));
    y[t] = v;
  }

  TimeSeriesTable table;
  table.years.resize(n);
  table.inputs = input;
  table.outputs.resize(n);
  for (std::size_t t = 0; t < n; ++t) {
    table.years[t] = start_year + static_cast<int>(t);
    table.outputs[t] = {y[t]};
  }
  return table;
}

TimeSeriesTable synthetic_dataset(int rows, std::uint64_t seed, int start_year) {
  if (rows < 2) throw std::invalid_argument("need at least 2 rows");
  Rng rng(seed);

  // Random-walk inputs with Table-1-like magnitudes, kept positive.
  std::vector<double> scale(kCsvInputColumns);
  for (int c = 0; c < kCsvInputColumns; ++c)
    scale[c] = uniform_real(rng, 100.0, 10000.0);
  std::vector<std::vector<double>> inputs(
      rows, std::vector<double>(kCsvInputColumns));
  for (int c = 0; c < kCsvInputColumns; ++c) {
    double v = scale[c];
    for (int r = 0; r < rows; ++r) {
      v += uniform_real(rng, -0.05, 0.08) * scale[c];
      inputs[r][c] = std::abs(v);
    }
  }

  // Stable SISO dynamics on u1 drive y1.
  ArxModel gen;
  gen.structure = ArxStructure{2, 3, 0, 1};
  gen.a = {-0.6, 0.08};
  gen.b = {{0.4, -0.15, 0.05}};
  std::vector<std::vector<double>> u1(rows, std::vector<double>(1));
  for (int r = 0; r < rows; ++r) u1[r][0] = inputs[r][0];
  TimeSeriesTable siso =
      synth_series(gen, u1, 0.01 * scale[0], rng(), start_year);

  TimeSeriesTable table;
  table.years = siso.years;
  table.inputs = std::move(inputs);
  table.outputs.resize(rows);
  for (int r = 0; r < rows; ++r) {
    double y1 = siso.outputs[r][0];
    table.outputs[r] = {y1, 0.5 * y1 + 0.001 * table.inputs[r][1],
                        0.25 * y1 + 0.002 * table.inputs[r][2],
                        0.1 * y1 + 0.003 * table.inputs[r][3]};
  }
  table.validate();
  return table;
}

}  // namespace arxev
