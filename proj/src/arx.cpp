#include "arxev/arx.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace arxev {

namespace {

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_real_token(const std::string& tok) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw std::runtime_error("malformed real '" + tok + "' in model text");
  return v;
}

void check_output_index(const TimeSeriesTable& table, int output_index) {
  if (output_index < 1 ||
      static_cast<std::size_t>(output_index) > table.output_count())
    throw std::invalid_argument("output index " + std::to_string(output_index) +
                                " out of range");
}

}  // namespace

void ArxStructure::validate() const {
  if (na < 0 || nb < 1 || nk < 0)
    throw std::invalid_argument("invalid ARX orders: need na >= 0, nb >= 1, nk >= 0");
  if (na + nb < 1) throw std::invalid_argument("na + nb must be >= 1");
  if (input_count < 1) throw std::invalid_argument("input_count must be >= 1");
}

void ArxModel::validate() const {
  structure.validate();
  if (a.size() != static_cast<std::size_t>(structure.na))
    throw std::invalid_argument("a-coefficient count does not match na");
  if (b.size() != static_cast<std::size_t>(structure.input_count))
    throw std::invalid_argument("b rows do not match input_count");
  for (const auto& row : b)
    if (row.size() != static_cast<std::size_t>(structure.nb))
      throw std::invalid_argument("b-coefficient count does not match nb");
  for (double v : a)
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite a coefficient");
  for (const auto& row : b)
    for (double v : row)
      if (!std::isfinite(v)) throw std::invalid_argument("non-finite b coefficient");
}

std::pair<Eigen::MatrixXd, Eigen::VectorXd> build_regression(
    const TimeSeriesTable& table, const ArxStructure& structure,
    int output_index) {
  structure.validate();
  check_output_index(table, output_index);
  if (table.input_count() < static_cast<std::size_t>(structure.input_count))
    throw std::invalid_argument("table has fewer input columns than the model");

  const int first = structure.min_lag();
  const int n = static_cast<int>(table.rows());
  const int usable = n - first;
  if (usable < 1)
    throw std::invalid_argument("insufficient rows: need at least " +
                                std::to_string(first + 1));

  const int width = structure.regressor_count();
  Eigen::MatrixXd design(usable, width);
  Eigen::VectorXd target(usable);
  const int yc = output_index - 1;
  for (int t = first; t < n; ++t) {
    const int r = t - first;
    int c = 0;
    for (int j = 1; j <= structure.na; ++j)
      design(r, c++) = -table.outputs[t - j][yc];
    for (int i = 0; i < structure.input_count; ++i)
      for (int k = 1; k <= structure.nb; ++k)
        design(r, c++) = table.inputs[t - structure.nk - k][i];
    target(r) = table.outputs[t][yc];
  }
  return {std::move(design), std::move(target)};
}

ArxModel fit_arx_ls(const TimeSeriesTable& table, const ArxStructure& structure,
                    int output_index) {
  auto [design, target] = build_regression(table, structure, output_index);
  if (design.rows() < design.cols())
    throw std::invalid_argument("underdetermined regression: " +
                                std::to_string(design.rows()) + " rows for " +
                                std::to_string(design.cols()) + " unknowns");

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  if (qr.rank() < design.cols()) throw std::runtime_error("singular regression");
  Eigen::VectorXd theta = qr.solve(target);

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

double predict_one_step(const ArxModel& model, const TimeSeriesTable& table,
                        int row) {
  const auto& s = model.structure;
  if (row < s.min_lag() || row >= static_cast<int>(table.rows()))
    throw std::invalid_argument("row " + std::to_string(row) +
                                " lacks the required lags");
  if (table.input_count() < static_cast<std::size_t>(s.input_count))
    throw std::invalid_argument("table has fewer input columns than the model");
  double v = 0.0;
  for (int j = 1; j <= s.na; ++j) v -= model.a[j - 1] * table.outputs[row - j][0];
  for (int i = 0; i < s.input_count; ++i)
    for (int k = 1; k <= s.nb; ++k)
      v += model.b[i][k - 1] * table.inputs[row - s.nk - k][i];
  return v;
}

double residual_sse(const ArxModel& model, const TimeSeriesTable& table,
                    int output_index) {
  check_output_index(table, output_index);
  const auto& s = model.structure;
  const int first = s.min_lag();
  const int n = static_cast<int>(table.rows());
  if (first >= n)
    throw std::invalid_argument("table too short for one prediction");

  const int yc = output_index - 1;
  double sse = 0.0;
  for (int t = first; t < n; ++t) {
    double pred = 0.0;
    for (int j = 1; j <= s.na; ++j) pred -= model.a[j - 1] * table.outputs[t - j][yc];
    for (int i = 0; i < s.input_count; ++i)
      for (int k = 1; k <= s.nb; ++k)
        pred += model.b[i][k - 1] * table.inputs[t - s.nk - k][i];
    if (!std::isfinite(pred) || std::abs(pred) > kPredictionGuard)
      return kWorstSse;
    const double e = table.outputs[t][yc] - pred;
    sse += e * e;
  }
  return sse;
}

std::string format_model(const ArxModel& model) {
  model.validate();
  const auto& s = model.structure;
  std::string out = "na=" + std::to_string(s.na) + " nb=" + std::to_string(s.nb) +
                    " nk=" + std::to_string(s.nk) +
                    " inputs=" + std::to_string(s.input_count) + "\n";
  out += "a:";
  for (double v : model.a) out += " " + format_real(v);
  out += "\n";
  for (int i = 0; i < s.input_count; ++i) {
    out += "b" + std::to_string(i + 1) + ":";
    for (double v : model.b[i]) out += " " + format_real(v);
    out += "\n";
  }
  return out;
}

ArxModel parse_model(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty model text");

  ArxModel model;
  auto& s = model.structure;
  if (std::sscanf(line.c_str(), "na=%d nb=%d nk=%d inputs=%d", &s.na, &s.nb,
                  &s.nk, &s.input_count) != 4)
    throw std::runtime_error("malformed model header: " + line);
  s.validate();

  auto read_values = [&](const std::string& prefix, std::size_t count) {
    std::string l;
    if (!std::getline(in, l) || l.rfind(prefix, 0) != 0)
      throw std::runtime_error("expected '" + prefix + "' line in model text");
    std::istringstream ls(l.substr(prefix.size()));
    std::vector<double> values;
    std::string tok;
    while (ls >> tok) values.push_back(parse_real_token(tok));
    if (values.size() != count)
      throw std::runtime_error("wrong value count on '" + prefix + "' line");
    return values;
  };

  model.a = read_values("a:", s.na);
  model.b.resize(s.input_count);
  for (int i = 0; i < s.input_count; ++i)
    model.b[i] = read_values("b" + std::to_string(i + 1) + ":", s.nb);
  model.validate();
  return model;
}

}  // namespace arxev
