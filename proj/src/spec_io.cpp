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

#include "qchancap/spec_io.hpp"

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace qchancap {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

double parse_double(const std::string& s, const std::string& field) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size() || !std::isfinite(v)) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(field + ": expected a number, got '" + s + "'");
  }
}

std::size_t parse_dim(const std::string& s, const std::string& field) {
  const double v = parse_double(s, field);
  if (v < 1 || v != std::floor(v)) {
    throw ParseError(field + ": expected a positive integer, got '" + s + "'");
  }
  return static_cast<std::size_t>(v);
}

bool is_dim_family(const std::string& name) {
  return name == "identity" || name == "complete_dephasing";
}

bool is_param_family(const std::string& name) {
  return name == "dephasing" || name == "depolarizing";
}

cplx complex_from_json(const json& j, const std::string& field) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError(field + ": complex entries must be [re, im] number pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

json load_json_text(std::string_view text, const std::string& field) {
  std::string t = trim(text);
  std::string source = t;
  bool from_file = false;
  if (!t.empty() && t.front() == '@') {
    source = t.substr(1);
    from_file = true;
  } else if (!t.empty() && t.front() != '{' && t.front() != '[' &&
             std::filesystem::is_regular_file(t)) {
    from_file = true;
  }
  std::string content = t;
  if (from_file) {
    std::ifstream in(source);
    if (!in) throw ParseError(field + ": cannot open file '" + source + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    content = buf.str();
  }
  try {
    return json::parse(content);
  } catch (const json::parse_error& e) {
    throw ParseError(field + ": malformed JSON (" + std::string(e.what()) + ")");
  }
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty()) {
    throw ParseError(field + ": expected a non-empty list of rows");
  }
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw ParseError(field + ": rows must all have " + std::to_string(cols) + " entries");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)], field);
    }
  }
  return m;
}

ChannelSpec ChannelSpec::parse(std::string_view text) {
  const std::string t = trim(text);
  if (t.rfind("builtin:", 0) == 0) {
    const std::string rest = t.substr(8);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) {
      throw ParseError("channel: expected builtin:<name>:<value>, got '" + t + "'");
    }
    Builtin b;
    b.name = rest.substr(0, colon);
    const std::string value = rest.substr(colon + 1);
    if (is_dim_family(b.name)) {
      b.dim = parse_dim(value, "channel.dim");
    } else if (is_param_family(b.name)) {
      b.dim = 2;
      b.param = parse_double(value, "channel.param");
    } else {
      throw ParseError("channel.builtin: unknown channel '" + b.name + "'");
    }
    ChannelSpec spec;
    spec.builtin = b;
    return spec;
  }
  return from_json(load_json_text(t, "channel"));
}

ChannelSpec ChannelSpec::from_json(const json& j) {
  if (!j.is_object()) throw ParseError("channel: expected a JSON object");
  ChannelSpec spec;
  if (j.contains("builtin")) {
    if (!j["builtin"].is_string()) throw ParseError("channel.builtin: expected a string");
    Builtin b;
    b.name = j["builtin"].get<std::string>();
    if (!is_dim_family(b.name) && !is_param_family(b.name)) {
      throw ParseError("channel.builtin: unknown channel '" + b.name + "'");
    }
    if (j.contains("dim")) {
      if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1) {
        throw ParseError("channel.dim: expected a positive integer");
      }
      b.dim = j["dim"].get<std::size_t>();
    } else if (is_dim_family(b.name)) {
      throw ParseError("channel.dim: required for builtin '" + b.name + "'");
    }
    if (j.contains("param")) {
      if (!j["param"].is_number()) throw ParseError("channel.param: expected a number");
      b.param = j["param"].get<double>();
    } else if (is_param_family(b.name)) {
      throw ParseError("channel.param: required for builtin '" + b.name + "'");
    }
    spec.builtin = b;
    return spec;
  }
  if (j.contains("kraus")) {
    const json& list = j["kraus"];
    if (!list.is_array() || list.empty()) {
      throw ParseError("channel.kraus: expected a non-empty list of matrices");
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
      spec.kraus.push_back(matrix_from_json(list[i], "channel.kraus[" + std::to_string(i) + "]"));
    }
    return spec;
  }
  throw ParseError("channel: object needs a 'builtin' or 'kraus' field");
}

json ChannelSpec::to_json() const {
  if (builtin) {
    return json{{"builtin", builtin->name}, {"dim", builtin->dim}, {"param", builtin->param}};
  }
  json list = json::array();
  for (const auto& k : kraus) list.push_back(matrix_to_json(k));
  return json{{"kraus", std::move(list)}};
}

QuantumChannel ChannelSpec::build() const {
  if (!builtin) return QuantumChannel(kraus);
  const Builtin& b = *builtin;
  if (b.name == "identity") return identity_channel(b.dim);
  if (b.name == "complete_dephasing") return complete_dephasing(b.dim);
  if (b.dim != 2) throw ParameterError(b.name + " is a qubit channel (dim must be 2)");
  if (b.name == "dephasing") return dephasing(b.param);
  return depolarizing(b.param);
}

ChannelSpec ChannelSpec::with_param(double param) const {
  if (!builtin || !is_param_family(builtin->name)) {
    throw ParseError("sweep: only builtin dephasing/depolarizing channels have a parameter");
  }
  ChannelSpec s = *this;
  s.builtin->param = param;
  return s;
}

DensityMatrix parse_input_state(std::string_view text, std::size_t dim) {
  const std::string t = trim(text);
  if (t == "maximally-mixed") return DensityMatrix::maximally_mixed(dim);
  const ComplexMatrix m = matrix_from_json(load_json_text(t, "input"), "input");
  if (m.rows() != m.cols() || static_cast<std::size_t>(m.rows()) != dim) {
    throw ParseError("input: expected a " + std::to_string(dim) + "x" + std::to_string(dim) +
                     " matrix");
  }
  return DensityMatrix(m);
}

json to_json(const InfoReport& r) {
  return json{{"s_in", r.s_in}, {"s_out", r.s_out}, {"s_joint", r.s_joint}, {"i_q", r.i_q}};
}

json to_json(const CapacityResult& r) {
  json trace = json::array();
  for (const auto& [it, v] : r.objective_trace) trace.push_back(json::array({it, v}));
  return json{{"c_q", r.c_q},
              {"rho_star", matrix_to_json(r.rho_star.matrix())},
              {"restarts_agreeing", r.restarts_agreeing},
              {"best_start", r.best_start},
              {"objective_trace", std::move(trace)}};
}

json to_json(const TypicalSet& s) {
  return json{{"probs", s.probs},
              {"n", s.n},
              {"delta", s.delta},
              {"entropy", s.entropy},
              {"total_mass", s.total_mass},
              {"log2_dimension", std::isfinite(s.log2_dimension) ? json(s.log2_dimension)
                                                                 : json(nullptr)},
              {"dimension", s.dimension.str()},
              {"class_count", s.classes.size()}};
}

json to_json(const OverlapReport& r) {
  return json{{"n", r.n},
              {"purities", r.purities},
              {"overlaps", r.overlaps},
              {"normalized_overlaps", r.normalized_overlaps},
              {"median_offdiagonal", r.median_offdiagonal()},
              {"predicted_log2_overlap", r.predicted_log2_overlap}};
}

json to_json(const DecodingReport& r) {
  return json{{"trials", r.trials},
              {"correct", r.correct},
              {"misidentification_rate", r.misidentification_rate},
              {"projector_rank_used", r.projector_rank_used},
              {"seed", r.seed}};
}

json to_json(const PurityExperiment& r) {
  return json{{"mc_mean", r.mc_mean},     {"std_error", r.std_error},
              {"rhs", r.rhs},             {"rel_err", r.rel_err},
              {"tolerance", r.tolerance}, {"pass", r.pass}};
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kHex[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace qchancap
