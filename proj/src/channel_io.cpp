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

#include "renyi2/channel_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "renyi2/report.hpp"

namespace renyi2 {

namespace {

using nlohmann::json;

CMat parse_matrix(const json& rows, int expect_rows, int expect_cols) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != expect_rows)
    throw std::invalid_argument("channel file: Kraus matrix has wrong row count");
  CMat m(expect_rows, expect_cols);
  for (int r = 0; r < expect_rows; ++r) {
    const json& row = rows.at(r);
    if (!row.is_array() || static_cast<int>(row.size()) != expect_cols)
      throw std::invalid_argument("channel file: Kraus matrix has wrong column count");
    for (int c = 0; c < expect_cols; ++c) {
      const json& cell = row.at(c);
      if (!cell.is_array() || cell.size() != 2 || !cell.at(0).is_number() ||
          !cell.at(1).is_number())
        throw std::invalid_argument(
            "channel file: matrix entries must be [re, im] pairs");
      m(r, c) = Complex(cell.at(0).get<double>(), cell.at(1).get<double>());
    }
  }
  return m;
}

}  // namespace

ChannelDocument parse_channel(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("channel file: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("channel file: expected an object");
  if (!doc.contains("dim_in") || !doc["dim_in"].is_number_integer() ||
      !doc.contains("dim_out") || !doc["dim_out"].is_number_integer())
    throw std::invalid_argument("channel file: dim_in/dim_out must be integers");
  const int dim_in = doc["dim_in"].get<int>();
  const int dim_out = doc["dim_out"].get<int>();
  if (dim_in < 1 || dim_out < 1)
    throw std::invalid_argument("channel file: dimensions must be positive");
  if (!doc.contains("kraus") || !doc["kraus"].is_array() || doc["kraus"].empty())
    throw std::invalid_argument("channel file: kraus must be a nonempty array");

  std::vector<CMat> kraus;
  kraus.reserve(doc["kraus"].size());
  for (const json& k : doc["kraus"]) kraus.push_back(parse_matrix(k, dim_out, dim_in));

  ChannelDocument out;
  out.channel = QuantumChannel::from_kraus(std::move(kraus));
  if (doc.contains("name")) {
    if (!doc["name"].is_string())
      throw std::invalid_argument("channel file: name must be a string");
    out.name = doc["name"].get<std::string>();
  }
  return out;
}

ChannelDocument load_channel(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open channel file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_channel(buf.str());
}

std::string channel_to_json(const QuantumChannel& ch, const std::string& name) {
  std::ostringstream out;
  out << "{\n";
  if (!name.empty()) out << "  \"name\": \"" << json_escape(name) << "\",\n";
  out << "  \"dim_in\": " << ch.dim_in << ",\n";
  out << "  \"dim_out\": " << ch.dim_out << ",\n";
  out << "  \"kraus\": [\n";
  for (size_t k = 0; k < ch.kraus.size(); ++k) {
    out << "    [\n";
    const CMat& v = ch.kraus[k];
    for (int r = 0; r < v.rows(); ++r) {
      out << "      [";
      for (int c = 0; c < v.cols(); ++c) {
        out << "[" << format_double(v(r, c).real()) << ", "
            << format_double(v(r, c).imag()) << "]";
        if (c + 1 < v.cols()) out << ", ";
      }
      out << "]";
      if (r + 1 < v.rows()) out << ",";
      out << "\n";
    }
    out << "    ]";
    if (k + 1 < ch.kraus.size()) out << ",";
    out << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

void save_channel(const std::string& path, const QuantumChannel& ch,
                  const std::string& name) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write channel file: " + path);
  out << channel_to_json(ch, name);
  if (!out) throw std::runtime_error("failed writing channel file: " + path);
}

}  // namespace renyi2
