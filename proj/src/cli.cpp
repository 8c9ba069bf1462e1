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

#include "qchancap/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qchancap/capacity.hpp"
#include "qchancap/coding.hpp"
#include "qchancap/info.hpp"
#include "qchancap/parallel.hpp"
#include "qchancap/spec_io.hpp"
#include "qchancap/typical.hpp"

namespace qchancap::cli {

namespace {

using Params = std::map<std::string, std::string>;

// Shortest text that parses back to the same double.
std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

template <typename T>
std::string join(const std::vector<T>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    if constexpr (std::is_floating_point_v<T>) {
      s += fmt(values[i]);
    } else {
      s += std::to_string(values[i]);
    }
  }
  return s;
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

void emit(std::ostream& out, const std::string& command, const Params& params, json result) {
  const std::string checksum = fnv1a_hex(result.dump());
  json manifest{{"command", command},
                {"params", params},
                {"version", kVersion},
                {"checksum", checksum}};
  json envelope{{"schema", kSchema}, {"result", std::move(result)}, {"manifest", std::move(manifest)}};
  out << envelope.dump(2) << '\n';
}

void write_csv(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw ParseError("csv: cannot open '" + path + "' for writing");
  f << content;
}

struct SweepRange {
  double start = 0.0;
  double stop = 1.0;
  int count = 0;
};

SweepRange parse_sweep(const std::string& text) {
  SweepRange r;
  const auto a = text.find(':');
  const auto b = text.find(':', a == std::string::npos ? a : a + 1);
  if (a == std::string::npos || b == std::string::npos) {
    throw ParseError("sweep: expected start:stop:count, got '" + text + "'");
  }
  try {
    r.start = std::stod(text.substr(0, a));
    r.stop = std::stod(text.substr(a + 1, b - a - 1));
    r.count = std::stoi(text.substr(b + 1));
  } catch (const std::exception&) {
    throw ParseError("sweep: expected start:stop:count, got '" + text + "'");
  }
  if (r.count < 2) throw ParseError("sweep: count must be at least 2");
  return r;
}

// Rejects probability lists that do not form a distribution as a usage error.
std::vector<double> checked_probs(const std::vector<double>& probs) {
  if (probs.empty()) throw ParseError("probs: at least one probability is required");
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0) || !std::isfinite(p)) throw ParseError("probs: entries must be non-negative");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw ParseError("probs: probabilities sum to " + fmt(sum) + ", expected 1");
  }
  return probs;
}

struct Options {
  // shared
  std::string channel;
  std::uint64_t seed = 0;
  // entropy
  std::string input = "maximally-mixed";
  // capacity
  OptimizerConfig opt;
  std::string sweep;
  std::string csv;
  // threshold
  double threshold_tol = 1e-6;
  // typical
  std::vector<double> probs;
  int n = 0;
  double delta = kDefaultDelta;
  // simulate
  std::size_t k = 2;
  std::string kind = "random";
  std::size_t trials = 2000;
  double weight = kDefaultDecodeWeight;
  std::vector<int> n_sweep;
  int seeds = 1;
  std::optional<double> c_q;
  // purity-check
  std::string sampler = "random-phase";
  // replay
  std::string manifest_path;
};

double resolve_capacity(const QuantumChannel& c, const Options& o, std::ostream& err) {
  if (o.c_q) return *o.c_q;
  err << "qchancap: estimating C_Q (" << o.opt.restarts << " restarts)\n";
  return channel_capacity(c, o.opt).c_q;
}

Code make_code(const std::string& kind, int n, std::size_t k, std::size_t dim,
               std::uint64_t seed) {
  if (kind == "random") return random_code(n, k, dim, seed);
  if (kind == "bell") {
    if (dim != 2) throw ParameterError("bell codes are qubit codes (channel dim must be 2)");
    return bell_code(n);
  }
  return basis_code(n, k, dim);
}

int cmd_entropy(const Options& o, std::ostream& out, std::ostream& err) {
  const ChannelSpec spec = ChannelSpec::parse(o.channel);
  const QuantumChannel c = spec.build();
  const DensityMatrix rho = parse_input_state(o.input, c.dim_in());
  err << "qchancap: coherent information for a " << c.dim_in() << "-dim source\n";
  json result = to_json(coherent_information(c, rho));
  emit(out, "entropy", {{"channel", spec.to_json().dump()}, {"input", o.input}},
       std::move(result));
  return kOk;
}

int cmd_capacity(const Options& o, std::ostream& out, std::ostream& err) {
  const ChannelSpec spec = ChannelSpec::parse(o.channel);
  Params params{{"channel", spec.to_json().dump()},
                {"restarts", std::to_string(o.opt.restarts)},
                {"max-iters", std::to_string(o.opt.max_iters)},
                {"tol", fmt(o.opt.tol)},
                {"seed", std::to_string(o.opt.seed)}};
  if (o.sweep.empty()) {
    const QuantumChannel c = spec.build();
    err << "qchancap: maximizing I_Q with " << o.opt.restarts + 1 << " starts\n";
    emit(out, "capacity", params, to_json(channel_capacity(c, o.opt)));
    return kOk;
  }

  const SweepRange range = parse_sweep(o.sweep);
  params["sweep"] = o.sweep;
  json series = json::array();
  std::ostringstream csv;
  csv << "param,c_q\n";
  std::optional<double> first_zero;
  for (int i = 0; i < range.count; ++i) {
    const double p = range.start + (range.stop - range.start) * i / (range.count - 1);
    const QuantumChannel c = spec.with_param(p).build();
    err << "qchancap: sweep point " << i + 1 << "/" << range.count << " (param " << fmt(p)
        << ")\n";
    const CapacityResult r = channel_capacity(c, o.opt);
    series.push_back(json{{"param", p}, {"c_q", r.c_q}, {"restarts_agreeing", r.restarts_agreeing}});
    csv << fmt(p) << ',' << fmt(r.c_q) << '\n';
    if (!first_zero && r.c_q < 1e-6) first_zero = p;
  }
  if (!o.csv.empty()) write_csv(o.csv, csv.str());
  json result{{"series", std::move(series)},
              {"first_zero_param", first_zero ? json(*first_zero) : json(nullptr)}};
  emit(out, "capacity", params, std::move(result));
  return kOk;
}

int cmd_threshold(const Options& o, std::ostream& out, std::ostream& err) {
  err << "qchancap: bisecting the depolarizing threshold\n";
  const double eta = depolarizing_threshold(o.threshold_tol);
  const double s_joint =
      coherent_information(depolarizing(eta), DensityMatrix::maximally_mixed(2)).s_joint;
  emit(out, "threshold", {{"tol", fmt(o.threshold_tol)}},
       json{{"eta_star", eta}, {"s_joint_at_eta_star", s_joint}});
  return kOk;
}

int cmd_typical(const Options& o, std::ostream& out, std::ostream& err) {
  const std::vector<double> probs = checked_probs(o.probs);
  err << "qchancap: enumerating type classes for N = " << o.n << "\n";
  const TypicalSet set = typical_set(probs, o.n, o.delta);
  json result = to_json(set);
  result["hp_purity"] = hp_purity(probs, o.n, o.delta);
  emit(out, "typical", {{"probs", join(o.probs)}, {"n", std::to_string(o.n)}, {"delta", fmt(o.delta)}},
       std::move(result));
  return kOk;
}

int cmd_simulate(const Options& o, std::ostream& out, std::ostream& err) {
  const ChannelSpec spec = ChannelSpec::parse(o.channel);
  const QuantumChannel c = spec.build();
  Params params{{"channel", spec.to_json().dump()},
                {"k", std::to_string(o.k)},
                {"kind", o.kind},
                {"trials", std::to_string(o.trials)},
                {"weight", fmt(o.weight)},
                {"seed", std::to_string(o.seed)},
                {"restarts", std::to_string(o.opt.restarts)}};
  if (o.c_q) params["cq"] = fmt(*o.c_q);
  const double c_q = resolve_capacity(c, o, err);

  if (o.n_sweep.empty()) {
    params["n"] = std::to_string(o.n);
    const Code code = make_code(o.kind, o.n, o.k, c.dim_in(), o.seed);
    err << "qchancap: transmitting " << code.k << " codewords over n = " << o.n << "\n";
    const auto outputs = transmit(code, c);
    json code_json{{"kind", to_string(code.kind)}, {"n", code.n}, {"k", code.k},
                   {"dim", code.dim}, {"seed", code.seed}};
    if (code.codewords.size() <= 1024) {
      json words = json::array();
      for (Eigen::Index j = 0; j < code.codewords.cols(); ++j) {
        json w = json::array();
        for (Eigen::Index i = 0; i < code.codewords.rows(); ++i) {
          w.push_back(json::array({code.codewords(i, j).real(), code.codewords(i, j).imag()}));
        }
        words.push_back(std::move(w));
      }
      code_json["codewords"] = std::move(words);
    }
    json result{{"code", std::move(code_json)},
                {"c_q", c_q},
                {"overlap", to_json(overlap_report(outputs, o.n, c_q))},
                {"decoding", to_json(projection_decode(code, c, o.trials, o.weight, o.seed))}};
    emit(out, "simulate", params, std::move(result));
    return kOk;
  }

  params["n-sweep"] = join(o.n_sweep);
  params["seeds"] = std::to_string(o.seeds);
  json series = json::array();
  std::ostringstream csv;
  csv << "n,median_normalized_overlap,median_misidentification_rate,predicted_log2_overlap\n";
  for (int n : o.n_sweep) {
    err << "qchancap: n = " << n << " over " << o.seeds << " seeds\n";
    std::vector<double> overlaps, rates;
    for (int s = 0; s < o.seeds; ++s) {
      const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(s);
      const Code code = make_code(o.kind, n, o.k, c.dim_in(), seed);
      overlaps.push_back(overlap_report(transmit(code, c), n, c_q).median_offdiagonal());
      rates.push_back(projection_decode(code, c, o.trials, o.weight, seed).misidentification_rate);
    }
    const double predicted = -static_cast<double>(n) * c_q;
    series.push_back(json{{"n", n},
                          {"median_normalized_overlap", median(overlaps)},
                          {"median_misidentification_rate", median(rates)},
                          {"predicted_log2_overlap", predicted}});
    csv << n << ',' << fmt(median(overlaps)) << ',' << fmt(median(rates)) << ','
        << fmt(predicted) << '\n';
  }
  if (!o.csv.empty()) write_csv(o.csv, csv.str());
  emit(out, "simulate", params, json{{"c_q", c_q}, {"series", std::move(series)}});
  return kOk;
}

int cmd_purity_check(const Options& o, std::ostream& out, std::ostream& err) {
  const ChannelSpec spec = ChannelSpec::parse(o.channel);
  const QuantumChannel c = spec.build();
  const InputSampler sampler = o.sampler == "haar" ? InputSampler::Haar : InputSampler::RandomPhase;
  err << "qchancap: " << o.trials << " trials of the purity average at n = " << o.n << "\n";
  const PurityExperiment r = purity_average_experiment(
      c, DensityMatrix::maximally_mixed(c.dim_in()), o.n, o.trials, o.seed, sampler);
  json result = to_json(r);
  result["sampler"] = to_string(sampler);
  emit(out, "purity-check",
       {{"channel", spec.to_json().dump()},
        {"n", std::to_string(o.n)},
        {"trials", std::to_string(o.trials)},
        {"seed", std::to_string(o.seed)},
        {"sampler", o.sampler}},
       std::move(result));
  return kOk;
}

int cmd_replay(const Options& o, std::ostream& out, std::ostream& err) {
  const json doc = load_json_text("@" + o.manifest_path, "manifest");
  const json& manifest = doc.contains("manifest") ? doc["manifest"] : doc;
  if (!manifest.contains("command") || !manifest["command"].is_string() ||
      !manifest.contains("params") || !manifest["params"].is_object()) {
    throw ParseError("manifest: needs 'command' and 'params'");
  }
  std::vector<std::string> args{manifest["command"].get<std::string>()};
  if (args.front() == "replay") throw ParseError("manifest.command: cannot replay a replay");
  for (const auto& [key, value] : manifest["params"].items()) {
    if (!value.is_string()) throw ParseError("manifest.params." + key + ": expected a string");
    args.push_back("--" + key);
    args.push_back(value.get<std::string>());
  }
  std::ostringstream regenerated;
  const int code = run(args, regenerated, err);
  if (code != kOk) return code;
  out << regenerated.str();
  const json again = json::parse(regenerated.str());
  if (manifest.contains("checksum") &&
      again["manifest"]["checksum"] != manifest["checksum"]) {
    err << "qchancap: replay checksum mismatch (" << manifest["checksum"] << " vs "
        << again["manifest"]["checksum"] << ")\n";
    return kValidation;
  }
  err << "qchancap: replay reproduced checksum " << again["manifest"]["checksum"] << "\n";
  return kOk;
}

void add_optimizer_flags(CLI::App* sub, Options& o) {
  sub->add_option("--restarts", o.opt.restarts, "Random restarts (plus one fixed start at I/d)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--max-iters", o.opt.max_iters, "Simplex iterations per restart")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--tol", o.opt.tol, "Objective-spread stopping tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Quantum channel capacity toolkit", "qchancap"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "Worker threads (default: all cores, or QCHANCAP_THREADS)");

  auto* entropy = app.add_subcommand("entropy", "Entropies and coherent information I_Q");
  entropy->add_option("--channel", o.channel, "Channel spec")->required();
  entropy->add_option("--input", o.input, "maximally-mixed or a JSON density matrix")
      ->capture_default_str();

  auto* capacity = app.add_subcommand("capacity", "Capacity C_Q = max I_Q");
  capacity->add_option("--channel", o.channel, "Channel spec")->required();
  add_optimizer_flags(capacity, o);
  capacity->add_option("--seed", o.opt.seed, "Restart seed")->capture_default_str();
  capacity->add_option("--sweep", o.sweep, "start:stop:count over the channel parameter");
  capacity->add_option("--csv", o.csv, "Also write the sweep series as CSV");

  auto* threshold = app.add_subcommand("threshold", "Depolarizing zero-capacity threshold");
  threshold->add_option("--tol", o.threshold_tol, "Bisection tolerance")
      ->check(CLI::Range(1e-15, 0.1))
      ->capture_default_str();

  auto* typical = app.add_subcommand("typical", "Entropy-typical set of a product source");
  typical->add_option("--probs", o.probs, "Comma-separated probabilities")
      ->required()
      ->delimiter(',');
  typical->add_option("--n", o.n, "Block length")->required()->check(CLI::PositiveNumber);
  typical->add_option("--delta", o.delta, "Typicality tolerance (bits/symbol)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* simulate = app.add_subcommand("simulate", "Random codes through n channel uses");
  simulate->add_option("--channel", o.channel, "Channel spec")->required();
  simulate->add_option("--n", o.n, "Block length")->check(CLI::PositiveNumber);
  simulate->add_option("--k", o.k, "Number of codewords")->check(CLI::PositiveNumber)->capture_default_str();
  simulate->add_option("--kind", o.kind, "random | bell | basis")
      ->check(CLI::IsMember({"random", "bell", "basis"}))
      ->capture_default_str();
  simulate->add_option("--trials", o.trials, "Decoding trials")->check(CLI::PositiveNumber)->capture_default_str();
  simulate->add_option("--weight", o.weight, "Projector trace weight in (0,1)")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  simulate->add_option("--seed", o.seed, "Code and trial seed")->capture_default_str();
  simulate->add_option("--n-sweep", o.n_sweep, "Comma-separated block lengths")->delimiter(',');
  simulate->add_option("--seeds", o.seeds, "Seeds per sweep point")->check(CLI::PositiveNumber)->capture_default_str();
  simulate->add_option("--cq", o.c_q, "Use this C_Q instead of optimizing");
  simulate->add_option("--restarts", o.opt.restarts, "Restarts when estimating C_Q")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  simulate->add_option("--csv", o.csv, "Also write the sweep series as CSV");

  auto* purity = app.add_subcommand("purity-check", "Monte Carlo check of the purity-average identity");
  purity->add_option("--channel", o.channel, "Channel spec")->required();
  purity->add_option("--n", o.n, "Block length")->check(CLI::PositiveNumber);
  purity->add_option("--trials", o.trials, "Random inputs")->check(CLI::PositiveNumber);
  purity->add_option("--seed", o.seed, "Seed")->capture_default_str();
  purity->add_option("--sampler", o.sampler, "random-phase | haar")
      ->check(CLI::IsMember({"random-phase", "haar"}))
      ->capture_default_str();

  auto* replay = app.add_subcommand("replay", "Re-run a saved output or manifest and verify its checksum");
  replay->add_option("manifest", o.manifest_path, "JSON file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "qchancap: " << e.what() << "\n";
    return kUsage;
  }

  if (threads == 0) {
    if (const char* env = std::getenv("QCHANCAP_THREADS")) threads = std::atoi(env);
  }
  set_thread_count(threads);

  try {
    if (*entropy) return cmd_entropy(o, out, err);
    if (*capacity) return cmd_capacity(o, out, err);
    if (*threshold) return cmd_threshold(o, out, err);
    if (*typical) return cmd_typical(o, out, err);
    if (*simulate) {
      if (o.n_sweep.empty() && o.n == 0) o.n = 4;
      return cmd_simulate(o, out, err);
    }
    if (*purity) {
      if (o.n == 0) o.n = 3;
      if (purity->count("--trials") == 0) o.trials = 5000;
      return cmd_purity_check(o, out, err);
    }
    if (*replay) return cmd_replay(o, out, err);
  } catch (const ParseError& e) {
    err << "qchancap: " << e.what() << "\n";
    return kUsage;
  } catch (const SizeCapError& e) {
    err << "qchancap: " << e.what() << "\n";
    return kSizeCap;
  } catch (const Error& e) {
    err << "qchancap: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    err << "qchancap: unexpected failure: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace qchancap::cli
