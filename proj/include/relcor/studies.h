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


// The bundled case studies, run end to end and checked against the
// expectations stored beside their fixtures.

#ifndef RELCOR_STUDIES_H
#define RELCOR_STUDIES_H

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "relcor/relation_json.h"

namespace relcor {

inline constexpr char kVersion[] = "0.1.0";

struct StudyOptions {
  std::string data_dir;  // empty: DefaultDataDir()
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

struct StudyFact {
  std::string name;
  Json expected;
  Json actual;
  bool passed = false;
};

struct StudyResult {
  std::string study;
  std::vector<StudyFact> facts;
  Json report;
  // Extra files to write next to the report, by file name.
  std::map<std::string, std::string> artifacts;

  bool passed() const;
};

// $RELCOR_DATA_DIR if set, else the directory configured at build time.
std::string DefaultDataDir();

std::vector<std::string> StudyNames();
// Throws ModelError for an unknown study; I/O and parse errors propagate.
StudyResult RunStudy(const std::string& name, const StudyOptions& options);

StudyResult RunLatticeStudy(const StudyOptions& options);
StudyResult RunArraySumStudy(const StudyOptions& options);
StudyResult RunFermatStudy(const StudyOptions& options);

// {"study", "passed", "facts": [...], "report": {...}}
Json StudyResultToJson(const StudyResult& result);

}  // namespace relcor

#endif  // RELCOR_STUDIES_H
