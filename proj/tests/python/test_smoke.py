# Copyright 2026 The Relcor Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


import json
import os

import pytest

import relcor

DATA = os.environ.get(
    "RELCOR_DATA_DIR",
    os.path.join(os.path.dirname(__file__), "..", "..", "data"))


def read(path):
    with open(os.path.join(DATA, "studies", path)) as handle:
        return handle.read()


def test_program_round_trip():
    program = relcor.Program("int<0..3> x; x = x + 1;")
    assert relcor.Program(program.source()).source() == program.source()
    assert program.variables() == ["x"]


def test_execute_and_denote():
    program = relcor.Program("int<0..3> x; x = x + 1;")
    assert relcor.execute(program, {"x": 1})["state"] == {"x": 2}
    assert relcor.execute(program, {"x": 3})["kind"] == "undefined"
    assert len(relcor.denote(program)) == 3


def test_lattice_verdicts():
    spec = relcor.Spec.from_json(read("lattice/spec.json")).enumerate()
    p4 = relcor.Relation.from_json(read("lattice/P4.json"))
    p1 = relcor.Relation.from_json(read("lattice/P1.json"))
    p7 = relcor.Relation.from_json(read("lattice/P7.json"))
    assert relcor.more_correct(p4, p1, spec, strict=True)
    assert not relcor.more_correct(p1, p4, spec)
    assert relcor.is_correct(p7, spec)
    assert relcor.refines(p7, spec)
    assert relcor.competence_domain(spec, p4) == [0, 1]


def test_program_artifacts_are_denoted():
    program = relcor.Program("int<0..3> x; skip;")
    spec = relcor.Spec.predicate(program, "true", "x' == x").enumerate()
    assert relcor.is_correct(program, spec)


def test_mutants():
    mutants = relcor.mutants(relcor.Program(read("fermat/basep.imp")))
    assert len(mutants) == 48
    assert [m["ordinal"] for m in mutants] == list(range(1, 49))


def test_repair_exact():
    program = relcor.Program("int<0..7> x; x = x - 2;")
    spec = relcor.Spec.predicate(program, "x < 6", "x' == x + 2")
    tree = relcor.repair(program, spec, mode="exact")
    assert tree["metrics"]["fault_depth_ub"] == 1
    solution = tree["nodes"][tree["solutions"][0]]
    assert "x + 2" in solution["source"]


def test_study():
    report = relcor.run_study("lattice", data_dir=DATA)
    assert report["passed"]
    assert report["report"]["correct"] == ["P7", "P8", "P9"]


def test_errors():
    with pytest.raises(relcor.ParseError):
        relcor.Program("int x; x = ;")
    with pytest.raises(relcor.RelcorError):
        relcor.mutants(relcor.Program("int x; skip;"), "swap")
    with pytest.raises(ValueError):
        relcor.run_study("nowhere", data_dir=DATA)
