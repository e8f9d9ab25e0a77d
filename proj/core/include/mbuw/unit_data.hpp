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

#ifndef MBUW_UNIT_DATA_HPP
#define MBUW_UNIT_DATA_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mbuw {

/// An ordered sample of observations strictly inside (0, 1). Values exactly 0
/// or 1 are rejected, not clamped: every supported model has an undefined or
/// degenerate log-density there.
class UnitData {
 public:
  explicit UnitData(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty())
      throw std::invalid_argument("UnitData: sample must be non-empty");
    for (std::size_t i = 0; i < values_.size(); ++i) {
      const double v = values_[i];
      if (!std::isfinite(v) || v <= 0.0 || v >= 1.0)
        throw std::domain_error(
            "UnitData: value " + std::to_string(v) + " at index " +
            std::to_string(i) + " is not strictly inside (0, 1)");
    }
  }

  const std::vector<double>& values() const { return values_; }
  std::size_t n() const { return values_.size(); }

  double mean() const {
    double s = 0.0;
    for (double v : values_) s += v;
    return s / static_cast<double>(values_.size());
  }

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

 private:
  std::vector<double> values_;
};

}  // namespace mbuw

#endif  // MBUW_UNIT_DATA_HPP
