#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "arxev/experiments.hpp"

namespace py = pybind11;
using namespace arxev;

PYBIND11_MODULE(_core, m) {
  m.doc() = "ARX time-series model evolution: identification-seeded genetic "
            "search with a 3x3 operator matrix and three adaptation variants";

  py::class_<TimeSeriesTable>(m, "TimeSeriesTable")
      .def(py::init<>())
      .def_readwrite("years", &TimeSeriesTable::years)
      .def_readwrite("inputs", &TimeSeriesTable::inputs)
      .def_readwrite("outputs", &TimeSeriesTable::outputs)
      .def("validate", &TimeSeriesTable::validate)
      .def("__len__", &TimeSeriesTable::rows);

  py::class_<WindowSpec>(m, "WindowSpec")
      .def(py::init<int, int>(), py::arg("length") = 30, py::arg("step") = 1)
      .def_readwrite("length", &WindowSpec::length)
      .def_readwrite("step", &WindowSpec::step);

  py::class_<ArxStructure>(m, "ArxStructure")
      .def(py::init<int, int, int, int>(), py::arg("na") = 5, py::arg("nb") = 8,
           py::arg("nk") = 0, py::arg("input_count") = 1)
      .def_readwrite("na", &ArxStructure::na)
      .def_readwrite("nb", &ArxStructure::nb)
      .def_readwrite("nk", &ArxStructure::nk)
      .def_readwrite("input_count", &ArxStructure::input_count);

  py::class_<ArxModel>(m, "ArxModel")
      .def(py::init<>())
      .def_readwrite("structure", &ArxModel::structure)
      .def_readwrite("a", &ArxModel::a)
      .def_readwrite("b", &ArxModel::b)
      .def("__str__", &format_model);

  py::class_<Chromosome>(m, "Chromosome")
      .def(py::init<>())
      .def_readwrite("genes", &Chromosome::genes)
      .def("extended", &Chromosome::extended)
      .def("__len__", &Chromosome::size);

  py::class_<Population>(m, "Population")
      .def(py::init<>())
      .def_readwrite("individuals", &Population::individuals)
      .def_readwrite("generation", &Population::generation)
      .def("__len__", &Population::size);

  py::enum_<AdaptationVariant>(m, "AdaptationVariant")
      .value("I", AdaptationVariant::I)
      .value("II", AdaptationVariant::II)
      .value("III", AdaptationVariant::III);

  py::enum_<Selection>(m, "Selection")
      .value("roulette", Selection::roulette)
      .value("tournament", Selection::tournament)
      .value("ranking", Selection::ranking);
  py::enum_<Crossover>(m, "Crossover")
      .value("single_point", Crossover::single_point)
      .value("double_point", Crossover::double_point)
      .value("uniform", Crossover::uniform)
      .value("longitudinal", Crossover::longitudinal);
  py::enum_<Mutation>(m, "Mutation")
      .value("single_point", Mutation::single_point)
      .value("multi_point", Mutation::multi_point)
      .value("probabilistic", Mutation::probabilistic);

  py::class_<OperatorConfig>(m, "OperatorConfig")
      .def(py::init<>())
      .def_readwrite("selection", &OperatorConfig::selection)
      .def_readwrite("crossover", &OperatorConfig::crossover)
      .def_readwrite("mutation", &OperatorConfig::mutation)
      .def_readwrite("pc", &OperatorConfig::pc)
      .def_readwrite("pm", &OperatorConfig::pm)
      .def_readwrite("tournament_k", &OperatorConfig::tournament_k)
      .def_readwrite("ranking_pressure", &OperatorConfig::ranking_pressure)
      .def_readwrite("mutation_scale", &OperatorConfig::mutation_scale);

  py::class_<EngineConfig>(m, "EngineConfig")
      .def(py::init<>())
      .def_readwrite("operators", &EngineConfig::operators)
      .def_readwrite("variant", &EngineConfig::variant)
      .def_readwrite("generations", &EngineConfig::generations)
      .def_readwrite("population_size", &EngineConfig::population_size)
      .def_readwrite("seed", &EngineConfig::seed)
      .def_readwrite("elitism_count", &EngineConfig::elitism_count)
      .def_readwrite("structure", &EngineConfig::structure)
      .def_readwrite("window", &EngineConfig::window)
      .def_readwrite("output_index", &EngineConfig::output_index)
      .def_readwrite("seeding_range", &EngineConfig::seeding_range);

  py::class_<GenerationStats>(m, "GenerationStats")
      .def_readonly("generation", &GenerationStats::generation)
      .def_readonly("best_sse", &GenerationStats::best_sse)
      .def_readonly("avg_quality", &GenerationStats::avg_quality)
      .def_readonly("max_quality", &GenerationStats::max_quality)
      .def_readonly("wall_ms", &GenerationStats::wall_ms);

  py::class_<RunResult>(m, "RunResult")
      .def_readonly("best", &RunResult::best)
      .def_readonly("best_model", &RunResult::best_model)
      .def_readonly("stats", &RunResult::stats)
      .def_readonly("final_population", &RunResult::final_population)
      .def("serialize", &RunResult::serialize);

  m.def("parse_table", &parse_table, py::arg("text"));
  m.def("serialize_table", &serialize_table, py::arg("table"));
  m.def("load_table", &load_table, py::arg("path"));
  m.def("save_table", &save_table, py::arg("table"), py::arg("path"));
  m.def("window", &window, py::arg("table"), py::arg("spec"));
  m.def("synth_series", &synth_series, py::arg("model"), py::arg("input"),
        py::arg("noise_sd"), py::arg("seed"), py::arg("start_year") = 1946);
  m.def("synthetic_dataset", &synthetic_dataset, py::arg("rows"),
        py::arg("seed"), py::arg("start_year") = 1946);

  m.def("fit_arx_ls", &fit_arx_ls, py::arg("table"), py::arg("structure"),
        py::arg("output_index") = 1);
  m.def("predict_one_step", &predict_one_step, py::arg("model"),
        py::arg("table"), py::arg("row"));
  m.def("residual_sse", &residual_sse, py::arg("model"), py::arg("table"),
        py::arg("output_index") = 1);
  m.def("format_model", &format_model);
  m.def("parse_model", &parse_model);

  m.def("encode", &encode, py::arg("model"));
  m.def("decode", &decode, py::arg("chromosome"));
  m.def("format_population", &format_population);
  m.def("parse_population", &parse_population);
  m.def(
      "seed_population",
      [](const std::vector<ArxModel>& bases, std::size_t target_size,
         double range, std::uint64_t seed) {
        Rng rng(seed);
        return seed_population(bases, target_size, range, rng);
      },
      py::arg("bases"), py::arg("target_size"), py::arg("range"),
      py::arg("seed"));

  m.def("adaptation_transform", &adaptation_transform, py::arg("qualities"),
        py::arg("variant"));
  m.def("evaluate_population", &evaluate_population, py::arg("population"),
        py::arg("table"), py::arg("variant"), py::arg("output_index") = 1);

  m.def("run", &run, py::arg("config"), py::arg("table"),
        py::call_guard<py::gil_scoped_release>());
  m.def("apply_variant_label", &apply_variant_label, py::arg("label"),
        py::arg("config"));
  m.def("stats_csv", &stats_csv);
}
