// Copyright (c) 2026 The mbuw authors
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

#include "mbuw/datasets.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace mbuw {

namespace {

std::vector<NamedDataset> make_builtins() {
  std::vector<NamedDataset> v;
  v.push_back({DatasetId::Dwellings, "dwellings",
               "proportion of dwellings without basic facilities (n=35)",
               UnitData({0.008, 0.007, 0.002, 0.094, 0.123, 0.023, 0.005,
                         0.005, 0.057, 0.004, 0.005, 0.001, 0.004, 0.035,
                         0.002, 0.006, 0.064, 0.025, 0.112, 0.118, 0.001,
                         0.259, 0.001, 0.023, 0.009, 0.015, 0.002, 0.003,
                         0.049, 0.005, 0.001, 0.03, 0.067, 0.138, 0.359})});
  v.push_back({DatasetId::SupportNetwork, "support_network",
               "quality of the social support network (n=20)",
               UnitData({0.92, 0.93, 0.88, 0.80, 0.82, 0.96, 0.95, 0.96, 0.94,
                         0.90, 0.78, 0.98, 0.89, 0.92, 0.91, 0.77, 0.94, 0.95,
                         0.96, 0.85})});
  v.push_back({DatasetId::VoterTurnout, "voter_turnout",
               "voter turnout proportions (n=38)",
               UnitData({0.92, 0.76, 0.88, 0.68, 0.47, 0.53, 0.66, 0.62, 0.85,
                         0.64, 0.69, 0.75, 0.79, 0.58, 0.70, 0.81, 0.63, 0.67,
                         0.73, 0.53, 0.77, 0.55, 0.57, 0.90, 0.63, 0.79, 0.82,
                         0.78, 0.68, 0.49, 0.66, 0.53, 0.72, 0.87, 0.45, 0.86,
                         0.68, 0.65})});
  v.push_back({DatasetId::Flood, "flood",
               "maximum flood level, Susquehanna River at Harrisburg (n=20)",
               UnitData({0.26, 0.27, 0.3, 0.32, 0.32, 0.34, 0.38, 0.38, 0.39,
                         0.4, 0.41, 0.42, 0.42, 0.42, 0.45, 0.48, 0.49, 0.61,
                         0.65, 0.74})});
  v.push_back({DatasetId::PumpFailures, "pump_failures",
               "time between failures of secondary reactor pumps (n=23)",
               UnitData({0.216, 0.015, 0.4082, 0.0746, 0.0358, 0.0199, 0.0402,
                         0.0101, 0.0605, 0.0954, 0.1359, 0.0273, 0.0491,
                         0.3465, 0.007, 0.656, 0.106, 0.0062, 0.4992, 0.0614,
                         0.532, 0.0347, 0.1921})});
  v.push_back({DatasetId::UnitCapacity, "unit_capacity",
               "unit capacity factors from algorithm comparisons (n=23)",
               UnitData({0.853, 0.759, 0.866, 0.809, 0.717, 0.544, 0.492,
                         0.403, 0.344, 0.213, 0.116, 0.116, 0.092, 0.07,
                         0.059, 0.048, 0.036, 0.029, 0.021, 0.014, 0.011,
                         0.008, 0.006})});
  return v;
}

const std::vector<NamedDataset>& builtins() {
  static const std::vector<NamedDataset> all = make_builtins();
  return all;
}

}  // namespace

const NamedDataset& builtin(DatasetId id) {
  for (const NamedDataset& d : builtins())
    if (d.id == id) return d;
  throw std::invalid_argument("builtin: unknown dataset id");
}

std::span<const NamedDataset> all_builtins() { return builtins(); }

const NamedDataset* find_builtin(std::string_view name) {
  for (const NamedDataset& d : builtins())
    if (d.name == name) return &d;
  return nullptr;
}

UnitData parse_unit_data(std::istream& in, std::string_view origin) {
  const std::string where = origin.empty() ? "input" : std::string(origin);
  std::vector<double> values;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() &&
             (std::isspace(static_cast<unsigned char>(line[pos])) ||
              line[pos] == ','))
        ++pos;
      if (pos >= line.size()) break;
      std::size_t end = pos;
      while (end < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[end])) &&
             line[end] != ',')
        ++end;
      const std::string token = line.substr(pos, end - pos);
      double v = 0.0;
      const auto [ptr, ec] =
          std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc() || ptr != token.data() + token.size())
        throw std::runtime_error(where + ": parse error on line " +
                                 std::to_string(line_no) + ": '" + token +
                                 "' is not a number");
      if (!std::isfinite(v) || v <= 0.0 || v >= 1.0)
        throw std::runtime_error(where + ": value " + token + " on line " +
                                 std::to_string(line_no) +
                                 " is outside the open interval (0, 1)");
      values.push_back(v);
      pos = end;
    }
  }
  if (values.empty())
    throw std::runtime_error(where + ": no data values found");
  return UnitData(std::move(values));
}

UnitData load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("load: cannot open file " + path.string());
  return parse_unit_data(in, path.string());
}

void write_unit_data(std::ostream& out, const UnitData& data) {
  char buf[40];
  for (double v : data) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out << buf << '\n';
  }
}

}  // namespace mbuw
