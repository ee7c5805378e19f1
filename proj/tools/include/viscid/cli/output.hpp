// Copyright 2026 The viscid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef VISCID_CLI_OUTPUT_HPP_
#define VISCID_CLI_OUTPUT_HPP_

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "viscid/cli/config.hpp"

namespace viscid::cli {

enum class Format { Json, Csv };

Format parse_format(std::string_view text);

// Shortest decimal text that parses back to the same double.
std::string format_number(double x);

struct Table {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

// Every command produces one JSON document and the same numbers as tables.
// JSON output writes the document; CSV output writes the tables.
struct Report {
  Json doc;
  std::vector<Table> tables;
};

void write_csv(const Table& table, std::ostream& out);

// Without `out` the result goes to `stdout_stream`. With `out`, a trailing
// .json or .csv is dropped to get a base name, then JSON lands in
// <base>.json and each table in <base>.<table>.csv. Throws IoError.
// Returns the files written.
std::vector<std::filesystem::path> emit(const Report& report, Format format,
                                        const std::optional<std::filesystem::path>& out,
                                        std::ostream& stdout_stream);

}  // namespace viscid::cli

#endif  // VISCID_CLI_OUTPUT_HPP_
