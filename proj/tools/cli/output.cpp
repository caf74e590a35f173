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

#include "output.hpp"

#include <cmath>
#include <cstdio>

namespace esd::cli {

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_header(std::ostream& out, Format format) {
  if (format == Format::Csv) out << "tau,c_closed,c_wootters,abs_diff\n";
}

void write_row(std::ostream& out, Format format, const Row& row) {
  if (format == Format::Csv) {
    out << format_number(row.tau) << ',' << format_number(row.c_closed) << ','
        << format_number(row.c_wootters) << ',' << format_number(row.abs_diff) << '\n';
  } else {
    out << "{\"tau\":" << format_number(row.tau) << ",\"c_closed\":" << format_number(row.c_closed)
        << ",\"c_wootters\":" << format_number(row.c_wootters) << ",\"abs_diff\":" << format_number(row.abs_diff)
        << "}\n";
  }
}

void write_record(std::ostream& out, Format format, const std::vector<Field>& fields) {
  if (format == Format::Csv) {
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i].key;
    out << '\n';
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i].value;
    out << '\n';
    return;
  }
  out << '{';
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const Field& f = fields[i];
    out << (i ? "," : "") << '"' << f.key << "\":";
    if (f.value.empty())
      out << "null";
    else if (f.quoted)
      out << '"' << f.value << '"';
    else
      out << f.value;
  }
  out << "}\n";
}

}  // namespace esd::cli
