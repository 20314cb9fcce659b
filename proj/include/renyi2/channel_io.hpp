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

#ifndef RENYI2_CHANNEL_IO_HPP
#define RENYI2_CHANNEL_IO_HPP

#include <string>

#include "renyi2/channel.hpp"

namespace renyi2 {

// Channel file format: a JSON object with
//   "dim_in"  : int
//   "dim_out" : int
//   "kraus"   : array of matrices; a matrix is an array of rows and a row is
//               an array of [re, im] pairs
//   "name"    : optional string
// Loading validates shapes and trace preservation.

struct ChannelDocument {
  QuantumChannel channel;
  std::string name;  // empty when absent
};

ChannelDocument load_channel(const std::string& path);
ChannelDocument parse_channel(const std::string& json_text);

void save_channel(const std::string& path, const QuantumChannel& ch,
                  const std::string& name = "");
std::string channel_to_json(const QuantumChannel& ch, const std::string& name = "");

}  // namespace renyi2

#endif  // RENYI2_CHANNEL_IO_HPP
