// Copyright 2026 The renyi2 Authors
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

#include "renyi2/report.hpp"

#include <cstdio>
#include <sstream>

namespace renyi2 {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

JsonReport& JsonReport::add(const std::string& key, const std::string& value) {
  entries_.push_back({key, "\"" + json_escape(value) + "\"", {value}});
  return *this;
}

JsonReport& JsonReport::add(const std::string& key, const char* value) {
  return add(key, std::string(value));
}

JsonReport& JsonReport::add(const std::string& key, double value) {
  const std::string s = format_double(value);
  entries_.push_back({key, s, {s}});
  return *this;
}

JsonReport& JsonReport::add(const std::string& key, int value) {
  const std::string s = std::to_string(value);
  entries_.push_back({key, s, {s}});
  return *this;
}

JsonReport& JsonReport::add(const std::string& key, long long value) {
  const std::string s = std::to_string(value);
  entries_.push_back({key, s, {s}});
  return *this;
}

JsonReport& JsonReport::add(const std::string& key, bool value) {
  const std::string s = value ? "true" : "false";
  entries_.push_back({key, s, {s}});
  return *this;
}

JsonReport& JsonReport::add(const std::string& key,
                            const std::vector<std::string>& values) {
  std::string json = "[";
  std::vector<std::string> cells;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) json += ", ";
    json += "\"" + json_escape(values[i]) + "\"";
    cells.push_back(values[i]);
  }
  json += "]";
  if (cells.empty()) cells.push_back("");
  entries_.push_back({key, json, std::move(cells)});
  return *this;
}

JsonReport& JsonReport::add(const std::string& key, const CVec& state) {
  std::string json = "[";
  std::vector<std::string> cells;
  for (Eigen::Index i = 0; i < state.size(); ++i) {
    if (i) json += ", ";
    const std::string re = format_double(state(i).real());
    const std::string im = format_double(state(i).imag());
    json += "[" + re + ", " + im + "]";
    cells.push_back(re);
    cells.push_back(im);
  }
  json += "]";
  entries_.push_back({key, json, std::move(cells)});
  return *this;
}

std::string JsonReport::to_json() const {
  std::ostringstream out;
  out << "{\n";
  for (size_t i = 0; i < entries_.size(); ++i) {
    out << "  \"" << json_escape(entries_[i].key) << "\": " << entries_[i].json_value;
    if (i + 1 < entries_.size()) out << ",";
    out << "\n";
  }
  out << "}\n";
  return out.str();
}

std::string JsonReport::to_csv() const {
  std::ostringstream header, row;
  bool first = true;
  for (const Entry& e : entries_) {
    const bool multi = e.csv_cells.size() > 1;
    for (size_t i = 0; i < e.csv_cells.size(); ++i) {
      if (!first) {
        header << ",";
        row << ",";
      }
      first = false;
      header << e.key;
      if (multi) header << "_" << i;
      row << e.csv_cells[i];
    }
  }
  return header.str() + "\n" + row.str() + "\n";
}

}  // namespace renyi2
