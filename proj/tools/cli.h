// Copyright 2026 The modsym Authors.
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

// The modsym command-line front end.
//
//   modsym build --poly s2|sk --n N [--k K] --m M [--b B] [--strategy S]
//                [--seed X] [--max-rows R] [--out cover.json]
//                [--circuit circuit.json]
//   modsym verify --in cover.json [--budget T] [--cap C] [--samples S]
//                 [--seed X]
//   modsym report --poly s2|sk --n 16,64,256 [--k K] --m M [--csv out.csv]
//   modsym export-dot --in cover.json --out-dir DIR

#ifndef MODSYM_TOOLS_CLI_H_
#define MODSYM_TOOLS_CLI_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace modsym::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kConstructionFailed = 3,
  kUnsupportedModulus = 4,
};

struct RunConfig {
  std::string command;
  std::string poly = "s2";
  std::vector<std::uint32_t> n;
  std::uint32_t k = 2;
  std::uint64_t m = 0;
  std::uint32_t b = 0;  // 0: 2k
  std::string strategy = "greedy";
  std::uint64_t seed = 1;
  std::uint32_t max_rows = 0;          // 0: library default
  std::uint64_t expansion_budget = 0;  // 0: library default
  std::uint64_t exhaustive_cap = 0;    // 0: library default
  std::uint64_t samples = 0;           // 0: library default
  std::string in;
  std::string out;
  std::string circuit;
  std::string csv;
  std::string out_dir;
};

// args excludes the program name. Never throws; every failure maps to an
// exit code with a message on err.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace modsym::cli

#endif  // MODSYM_TOOLS_CLI_H_
