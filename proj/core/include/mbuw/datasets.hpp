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

#ifndef MBUW_DATASETS_HPP
#define MBUW_DATASETS_HPP

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "mbuw/unit_data.hpp"

namespace mbuw {

/// The six bundled real-world samples used by the reproduction reports.
/// Values are embedded verbatim, order-preserving; sizes are 35, 20, 38, 20,
/// 23 and 23. Checksums are pinned in the test suite to catch transcription
/// drift.
enum class DatasetId {
  Dwellings,       // proportion of dwellings without basic facilities
  SupportNetwork,  // perceived quality of the social support network
  VoterTurnout,    // voter turnout proportions
  Flood,           // maximum flood levels, Susquehanna River at Harrisburg
  PumpFailures,    // times between failures of secondary reactor pumps
  UnitCapacity,    // unit capacity factors from algorithm comparisons
};

struct NamedDataset {
  DatasetId id;
  std::string_view name;  // CLI-addressable id, e.g. "dwellings"
  std::string_view description;
  UnitData data;
};

const NamedDataset& builtin(DatasetId id);
/// All six, in the order of the DatasetId enum.
std::span<const NamedDataset> all_builtins();
/// Looks a dataset up by its CLI name; returns nullptr if unknown.
const NamedDataset* find_builtin(std::string_view name);

/// Parses one value per line or comma-separated values; blank lines and '#'
/// comments are ignored. Values must be strictly inside (0, 1). Errors carry
/// the line number and the offending token.
UnitData parse_unit_data(std::istream& in, std::string_view origin = "");
UnitData load(const std::filesystem::path& path);

/// One value per line, round-trip exact (17 significant digits).
void write_unit_data(std::ostream& out, const UnitData& data);

}  // namespace mbuw

#endif  // MBUW_DATASETS_HPP
