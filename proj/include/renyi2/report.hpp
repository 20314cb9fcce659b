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

#ifndef RENYI2_REPORT_HPP
#define RENYI2_REPORT_HPP

#include <string>
#include <variant>
#include <vector>

#include "renyi2/matrix_ops.hpp"

namespace renyi2 {

/// Formats a double with 17 significant digits (%.17g): enough to round-trip
/// and byte-stable across identical runs.
std::string format_double(double v);

// Minimal insertion-ordered JSON report builder. Reports are flat-ish
// (scalars, string lists, vectors of complex amplitudes), and emitting them
// through a fixed-precision writer keeps repeated runs byte-identical.
class JsonReport {
 public:
  JsonReport& add(const std::string& key, const std::string& value);
  JsonReport& add(const std::string& key, const char* value);
  JsonReport& add(const std::string& key, double value);
  JsonReport& add(const std::string& key, int value);
  JsonReport& add(const std::string& key, long long value);
  JsonReport& add(const std::string& key, bool value);
  JsonReport& add(const std::string& key, const std::vector<std::string>& values);
  /// Complex vector as an array of [re, im] pairs.
  JsonReport& add(const std::string& key, const CVec& state);

  /// Single-line key ordering preserved; trailing newline included.
  std::string to_json() const;
  /// Two CSV lines: header row and value row (complex vectors flattened
  /// as re/im column pairs).
  std::string to_csv() const;

 private:
  struct Entry {
    std::string key;
    std::string json_value;              // already serialized
    std::vector<std::string> csv_cells;  // flattened for CSV
  };
  std::vector<Entry> entries_;
};

std::string json_escape(const std::string& s);

}  // namespace renyi2

#endif  // RENYI2_REPORT_HPP
