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


"""Relative-correctness checking, mutation and stepwise repair."""

import json
import os

from . import _core
from ._core import (
    CapacityError,
    ModelError,
    ParseError,
    Program,
    Relation,
    RelcorError,
    Spec,
    SpaceMismatchError,
    competence_domain,
    denote,
    is_correct,
    more_correct,
    refines,
)

__version__ = _core.__version__


def execute(program, state, fuel=0, machine=False):
    """Runs `program` on `state` (a dict of variable values)."""
    return json.loads(_core.execute_json(program, json.dumps(state), fuel, machine))


def mutants(program, operators="aorb"):
    return [json.loads(m) for m in _core.mutants_json(program, operators)]


def repair(program, spec, **options):
    """Stepwise repair; returns the search tree as a dict."""
    return json.loads(_core.repair_json(program, spec, **options))


def run_study(name, data_dir=None):
    """Runs a bundled case study and returns its report."""
    if data_dir is None:
        bundled = os.path.join(os.path.dirname(__file__), "data")
        data_dir = bundled if os.path.isdir(bundled) else ""
    return json.loads(_core.study_json(name, data_dir))


__all__ = [
    "CapacityError",
    "ModelError",
    "ParseError",
    "Program",
    "Relation",
    "RelcorError",
    "Spec",
    "SpaceMismatchError",
    "competence_domain",
    "denote",
    "execute",
    "is_correct",
    "more_correct",
    "mutants",
    "refines",
    "repair",
    "run_study",
]
