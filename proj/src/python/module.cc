// Copyright 2026 The Relcor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "relcor/errors.h"
#include "relcor/parser.h"
#include "relcor/relation_json.h"
#include "relcor/repair.h"
#include "relcor/semantics.h"
#include "relcor/spec.h"
#include "relcor/studies.h"
#include "relcor/testing.h"

namespace py = pybind11;

namespace relcor {
namespace {

// Documents cross the boundary as JSON text; the Python package decodes
// them.
std::string DenoteJson(const Program& program, std::uint64_t max_pairs) {
  Limits limits;
  limits.max_pairs = max_pairs;
  return RelationToJson(Denote(program, limits)).dump();
}

std::string ExecuteJson(const Program& program, const std::string& state_json,
                        std::uint64_t fuel, bool machine) {
  State input = StateFromJson(program.space, Json::parse(state_json));
  if (fuel == 0) fuel = DefaultExactFuel(program.space);
  ExecOutcome outcome = Execute(program, input, fuel,
                                machine ? EvalMode::kMachine : EvalMode::kExact);
  return OutcomeToJson(outcome, program.space).dump();
}

std::vector<std::string> Mutants(const Program& program,
                                 const std::string& operators) {
  std::vector<std::string> out;
  for (const Mutant& m : Generate(program, OperatorSet::Parse(operators))) {
    Json json = MutantToJson(m);
    json["source"] = ToSource(m.program);
    out.push_back(json.dump());
  }
  return out;
}

Relation Function(const py::object& artifact) {
  if (py::isinstance<Program>(artifact)) return Denote(artifact.cast<Program>());
  return artifact.cast<Relation>();
}

std::string RepairJson(const Program& base, const Spec& spec,
                       const std::string& mode, const std::string& operators,
                       const std::string& tests, std::size_t count,
                       std::uint64_t seed, std::uint64_t fuel,
                       std::size_t max_depth, std::size_t max_frontier) {
  RepairConfig config;
  config.mode = RepairModeFromString(mode);
  config.operators = OperatorSet::Parse(operators);
  config.selection.strategy = SelectionFromString(tests);
  config.selection.count = count;
  config.selection.seed = seed;
  config.run.fuel = fuel;
  config.max_depth = max_depth;
  config.max_frontier = max_frontier;
  RepairTree tree;
  {
    py::gil_scoped_release release;
    tree = Repair(base, spec, config);
  }
  return RepairTreeToJson(tree).dump();
}

std::string StudyJson(const std::string& name, const std::string& data_dir) {
  StudyOptions options;
  options.data_dir = data_dir;
  StudyResult result;
  {
    py::gil_scoped_release release;
    result = RunStudy(name, options);
  }
  return StudyResultToJson(result).dump();
}

}  // namespace
}  // namespace relcor

PYBIND11_MODULE(_core, m) {
  using namespace relcor;
  m.doc() = "Relative-correctness checking, mutation and repair";
  m.attr("__version__") = kVersion;

  static py::exception<Error> error(m, "RelcorError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<CapacityError>(m, "CapacityError", error.ptr());
  py::register_exception<SpaceMismatchError>(m, "SpaceMismatchError",
                                             error.ptr());
  py::register_exception<ModelError>(m, "ModelError", error.ptr());

  py::class_<Program>(m, "Program")
      .def(py::init([](const std::string& source) { return ParseProgram(source); }),
           py::arg("source"))
      .def("source", [](const Program& p) { return ToSource(p); })
      .def("variables",
           [](const Program& p) {
             std::vector<std::string> names;
             for (const VarDecl& d : p.space.vars()) names.push_back(d.name);
             return names;
           })
      .def("__repr__",
           [](const Program& p) { return "<relcor.Program\n" + ToSource(p) + ">"; });

  py::class_<Relation>(m, "Relation")
      .def_static("from_json",
                  [](const std::string& text) {
                    return RelationFromJson(Json::parse(text));
                  })
      .def("to_json", [](const Relation& r) { return RelationToJson(r).dump(); })
      .def("pairs",
           [](const Relation& r) {
             return std::vector<Relation::Pair>(r.pairs().begin(),
                                                r.pairs().end());
           })
      .def("__len__", &Relation::size)
      .def("__eq__", [](const Relation& a, const Relation& b) { return a == b; });

  py::class_<Spec>(m, "Spec")
      .def_static("from_json",
                  [](const std::string& text) {
                    return SpecFromJson(Json::parse(text));
                  })
      .def_static("predicate",
                  [](const Program& like, const std::string& dom,
                     const std::string& rel) {
                    return Spec::Predicate(like.space, dom, rel);
                  },
                  py::arg("program"), py::arg("dom"), py::arg("rel"))
      .def("to_json", [](const Spec& s) { return SpecToJson(s).dump(); })
      .def("enumerate", [](const Spec& s) { return s.Enumerate(); });

  m.def("denote_json", &DenoteJson, py::arg("program"),
        py::arg("max_pairs") = Limits{}.max_pairs);
  m.def("denote", [](const Program& p) { return Denote(p); }, py::arg("program"));
  m.def("execute_json", &ExecuteJson, py::arg("program"), py::arg("state"),
        py::arg("fuel") = 0, py::arg("machine") = false);
  m.def("refines",
        [](const py::object& p, const Relation& spec) {
          return Refines(Function(p), spec);
        });
  m.def("is_correct",
        [](const py::object& p, const Relation& spec) {
          return IsCorrect(Function(p), spec);
        });
  m.def("competence_domain",
        [](const Relation& spec, const py::object& p) {
          StateSet cd = CompetenceDomain(spec, Function(p));
          return std::vector<StateIndex>(cd.members().begin(),
                                         cd.members().end());
        });
  m.def("more_correct",
        [](const py::object& candidate, const py::object& base,
           const Relation& spec, bool strict) {
          return MoreCorrect(Function(candidate), Function(base), spec, strict);
        },
        py::arg("candidate"), py::arg("base"), py::arg("spec"),
        py::arg("strict") = false);
  m.def("mutants_json", &Mutants, py::arg("program"),
        py::arg("operators") = "aorb");
  m.def("repair_json", &RepairJson, py::arg("program"), py::arg("spec"),
        py::arg("mode") = "testing", py::arg("operators") = "aorb",
        py::arg("tests") = "exhaustive", py::arg("count") = 0,
        py::arg("seed") = 0, py::arg("fuel") = 10000, py::arg("max_depth") = 5,
        py::arg("max_frontier") = 64);
  m.def("study_json", &StudyJson, py::arg("name"), py::arg("data_dir") = "");
}
