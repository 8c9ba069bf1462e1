// Copyright 2026 The qchancap Authors
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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qchancap/capacity.hpp"
#include "qchancap/channel.hpp"
#include "qchancap/coding.hpp"
#include "qchancap/error.hpp"
#include "qchancap/info.hpp"
#include "qchancap/typical.hpp"

namespace qchancap {

using json = nlohmann::json;

/// Malformed user input (bad JSON, missing or mistyped field). The message
/// names the offending field.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A channel given either by built-in family or by explicit Kraus operators.
///
/// Text forms accepted by parse():
///   builtin:identity:<dim>            builtin:complete_dephasing:<dim>
///   builtin:dephasing:<epsilon>       builtin:depolarizing:<eta>
///   {"builtin": ..., "dim": ..., "param": ...}       (inline JSON)
///   {"kraus": [[[[re, im], ...], ...], ...]}         (inline JSON)
///   @path/to/file.json  or an existing file path     (JSON file)
struct ChannelSpec {
  struct Builtin {
    std::string name;
    std::size_t dim = 2;
    double param = 0.0;
  };
  std::optional<Builtin> builtin;
  std::vector<ComplexMatrix> kraus;

  static ChannelSpec parse(std::string_view text);
  static ChannelSpec from_json(const json& j);
  json to_json() const;

  /// Builds and validates the channel (ChannelError / ParameterError).
  QuantumChannel build() const;

  /// Same family with a different parameter; builtin dephasing/depolarizing only.
  ChannelSpec with_param(double param) const;
};

/// "maximally-mixed" or a JSON Hermitian matrix (inline or file) given as a
/// list of rows of [re, im] entries.
DensityMatrix parse_input_state(std::string_view text, std::size_t dim);

json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j, const std::string& field);

/// Reads the text as inline JSON, or from a file for "@path" / existing paths.
json load_json_text(std::string_view text, const std::string& field);

json to_json(const InfoReport& r);
json to_json(const CapacityResult& r);
json to_json(const TypicalSet& s);
json to_json(const OverlapReport& r);
json to_json(const DecodingReport& r);
json to_json(const PurityExperiment& r);

/// FNV-1a 64 of the bytes, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace qchancap
