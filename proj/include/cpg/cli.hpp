// Copyright (c) 2026 the cpgraphene developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cpg/lifshitz.hpp"
#include "cpg/units.hpp"

namespace cpg::cli {

enum class Command {
  energy_t0,
  free_energy,
  entropy,
  decompose,
  asymptote,
  sweep,
  validate,
};

enum class OutputFormat { csv, json };

struct RunRequest {
  Command command = Command::decompose;
  AtomSpec atom;
  GrapheneModel graphene;
  std::vector<std::pair<double, double>> grid;  // (a [m], T [K]) in emission order
  lifshitz::EvalOptions opts;
  OutputFormat format = OutputFormat::csv;
  std::string out_path;  // empty = stdout
};

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One emitted record; unset fields were not requested by the command or
/// failed (failures also leave a note in flags).
struct Record {
  double a_m = 0.0;
  double T_K = 0.0;
  double tau = 0.0;
  std::optional<double> E0_J, d1_J, d2l1_J, d2l0_J, F_numeric_J, F_decomp_J;
  std::optional<double> S_J_per_K;
  std::optional<double> d1_asym_J, d2l1_asym_J, d2l0_asym_J, S_asym_J_per_K;
  std::vector<std::string> flags;
};

/// Expands "lo:hi:n" into n geometrically spaced values; a plain number
/// yields a single value. Throws usage_error on malformed input.
std::vector<double> expand_range(const std::string& text);

RunRequest parse_cli(const std::vector<std::string>& args);

Record evaluate_point(const RunRequest& req, double a, double T);

/// Runs the request, writing records to `sink` (or the request's out path
/// when set) in grid order. Returns the process exit code: 0 on success,
/// 2 when at least one record failed numerically.
int run(const RunRequest& req, std::ostream& sink, std::ostream& err);

int main_entry(int argc, char** argv);

void write_records(const std::vector<Record>& records, OutputFormat format,
                   std::ostream& out);

}  // namespace cpg::cli
