// Copyright 2026 The esdsim Authors
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

#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace esd::cli {

enum class Format { Csv, JsonLines };

/// All numbers leave the tool through here: printf %.12g.
std::string format_number(double v);

/// One trajectory row: tau, c_closed, c_wootters, abs_diff.
struct Row {
  double tau;
  double c_closed;
  double c_wootters;
  double abs_diff;
};

void write_header(std::ostream& out, Format format);
void write_row(std::ostream& out, Format format, const Row& row);

/// Field for a flat record; value is emitted verbatim for CSV and quoted in
/// JSON when `quoted` is set.
struct Field {
  std::string key;
  std::string value;
  bool quoted = false;
};

/// CSV: header line then value line. JSON Lines: a single object.
void write_record(std::ostream& out, Format format, const std::vector<Field>& fields);

}  // namespace esd::cli
