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


#include "viscid/cli/output.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>

#include "viscid/errors.hpp"

namespace viscid::cli {
namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path.string() + "' for writing");
  return file;
}

void check_written(std::ofstream& file, const std::filesystem::path& path) {
  file.flush();
  if (!file) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  throw ValidationError("format", "expected json or csv, got '" + std::string(text) + "'");
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.header.size(); ++i)
    out << (i ? "," : "") << table.header[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
    out << '\n';
  }
}

std::vector<std::filesystem::path> emit(const Report& report, Format format,
                                        const std::optional<std::filesystem::path>& out,
                                        std::ostream& stdout_stream) {
  const std::string text = report.doc.dump(2) + "\n";
  if (!out) {
    if (format == Format::Json) {
      stdout_stream << text;
    } else {
      for (std::size_t i = 0; i < report.tables.size(); ++i) {
        if (i) stdout_stream << '\n';
        stdout_stream << "# " << report.tables[i].name << '\n';
        write_csv(report.tables[i], stdout_stream);
      }
    }
    return {};
  }

  std::filesystem::path base = *out;
  if (base.extension() == ".json" || base.extension() == ".csv") base.replace_extension();
  std::vector<std::filesystem::path> written;
  if (format == Format::Json) {
    std::filesystem::path path = base;
    path += ".json";
    auto file = open_for_write(path);
    file << text;
    check_written(file, path);
    written.push_back(path);
  } else {
    for (const Table& table : report.tables) {
      std::filesystem::path path = base;
      path += "." + table.name + ".csv";
      auto file = open_for_write(path);
      write_csv(table, file);
      check_written(file, path);
      written.push_back(path);
    }
  }
  return written;
}

}  // namespace viscid::cli
