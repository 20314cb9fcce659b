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

#include <cmath>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "renyi2/channel_io.hpp"
#include "renyi2/optimize.hpp"
#include "renyi2/replica.hpp"
#include "renyi2/report.hpp"
#include "renyi2/werner_holevo.hpp"

namespace {

using namespace renyi2;

struct GlobalConfig {
  std::uint64_t seed = 0;
  int restarts = 32;
  double tol = 1e-10;
  std::string log_base = "e";
  std::string format = "json";
  std::string out;
};

OptimizeOptions to_options(const GlobalConfig& cfg) {
  OptimizeOptions opts;
  opts.seed = cfg.seed;
  opts.restarts = cfg.restarts;
  opts.tol = cfg.tol;
  return opts;
}

double in_log_base(double nats, const GlobalConfig& cfg) {
  return cfg.log_base == "2" ? nats / std::log(2.0) : nats;
}

void emit(const GlobalConfig& cfg, const JsonReport& report) {
  const std::string text = cfg.format == "csv" ? report.to_csv() : report.to_json();
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out);
  if (!out) throw std::invalid_argument("cannot write output file: " + cfg.out);
  out << text;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write output file: " + path);
  out << text;
}

std::string channel_label(const ChannelDocument& doc, const std::string& path) {
  return doc.name.empty() ? path : doc.name;
}

void add_config(JsonReport& report, const GlobalConfig& cfg) {
  report.add("seed", static_cast<long long>(cfg.seed));
  report.add("restarts", cfg.restarts);
  report.add("tol", cfg.tol);
  report.add("log_base", cfg.log_base);
}

int cmd_minh2(const GlobalConfig& cfg, const std::string& channel_file) {
  const ChannelDocument doc = load_channel(channel_file);
  const OptimizationResult res = max_output_purity(doc.channel, to_options(cfg));

  JsonReport report;
  report.add("command", "minh2");
  report.add("channel", channel_label(doc, channel_file));
  report.add("dim_in", doc.channel.dim_in);
  report.add("dim_out", doc.channel.dim_out);
  add_config(report, cfg);
  report.add("max_purity", res.max_purity);
  report.add("min_h2", in_log_base(res.min_h2, cfg));
  report.add("converged", res.converged);
  report.add("restarts_used", res.restarts_used);
  report.add("best_trace", res.best_trace);
  report.add("argmax_state", res.argmax_state);
  emit(cfg, report);
  return 0;
}

int cmd_conditions(const GlobalConfig& cfg, const std::string& channel_file) {
  const ChannelDocument doc = load_channel(channel_file);
  const QuantumChannel& ch = doc.channel;

  const ChoiMatrix choi = choi_of(ch);
  const double choi_min = min_eigenvalue(choi.matrix);
  const double choi_scale = std::max(1.0, max_abs(choi.matrix));
  const double pt_min = ppt_min_eigenvalue(ch);
  const PositivityConditions conds = positivity_conditions(ch);

  JsonReport report;
  report.add("command", "conditions");
  report.add("channel", channel_label(doc, channel_file));
  report.add("dim_in", ch.dim_in);
  report.add("dim_out", ch.dim_out);
  report.add("is_cp", choi_min >= -kPositivityTol * choi_scale);
  report.add("choi_min_eig", choi_min);
  report.add("is_ppt_inducing", is_ppt_inducing(ch));
  report.add("choi_pt_min_eig", pt_min);
  report.add("cond_h", conds.h_positive);
  report.add("h_min_eig", conds.h_min_eigenvalue);
  report.add("cond_hF", conds.hF_positive);
  report.add("hF_min_eig", conds.hF_min_eigenvalue);
  emit(cfg, report);
  return 0;
}

int cmd_additivity(const GlobalConfig& cfg, const std::string& file1,
                   const std::string& file2) {
  const ChannelDocument doc1 = load_channel(file1);
  const ChannelDocument doc2 = load_channel(file2);
  const AdditivityReport res = additivity_gap(doc1.channel, doc2.channel, to_options(cfg));

  const bool ppt1 = is_ppt_inducing(doc1.channel);
  const bool ppt2 = is_ppt_inducing(doc2.channel);
  const PositivityConditions c1 = positivity_conditions(doc1.channel);
  const PositivityConditions c2 = positivity_conditions(doc2.channel);
  std::vector<std::string> certificates;
  if (c1.h_positive) certificates.push_back("channel_1:h");
  if (c1.hF_positive) certificates.push_back("channel_1:hF");
  if (c2.h_positive) certificates.push_back("channel_2:h");
  if (c2.hF_positive) certificates.push_back("channel_2:hF");

  JsonReport report;
  report.add("command", "additivity");
  report.add("channel_1", channel_label(doc1, file1));
  report.add("channel_2", channel_label(doc2, file2));
  add_config(report, cfg);
  report.add("max_purity_1", res.single1.max_purity);
  report.add("max_purity_2", res.single2.max_purity);
  report.add("joint_max_purity", res.joint_max_purity);
  report.add("product_of_maxima", res.product_of_maxima);
  report.add("gap", res.gap);
  report.add("additive", res.additive);
  report.add("min_h2_1", in_log_base(res.single1.min_h2, cfg));
  report.add("min_h2_2", in_log_base(res.single2.min_h2, cfg));
  report.add("min_h2_joint", in_log_base(res.joint.min_h2, cfg));
  report.add("ppt_inducing_1", ppt1);
  report.add("ppt_inducing_2", ppt2);
  report.add("certified_additive", !certificates.empty());
  report.add("certificates", certificates);
  emit(cfg, report);
  return 0;
}

int cmd_wh_region(const GlobalConfig& cfg, int d, double step) {
  RegionOptions opts;
  opts.step = step;
  const std::vector<RegionRow> rows = region_scan(d, opts);

  std::string csv = "a,b,d,is_cp,is_ppt,cond_h,cond_hF,boundary_flag\n";
  for (const RegionRow& row : rows) {
    csv += format_double(row.a) + "," + format_double(row.b) + "," +
           std::to_string(d) + "," + (row.cls.is_cp ? "1" : "0") + "," +
           (row.cls.is_ppt_inducing ? "1" : "0") + ",";
    csv += row.cls.cond_h.has_value() ? (*row.cls.cond_h ? "1" : "0") : "na";
    csv += ",";
    csv += row.cls.cond_hF.has_value() ? (*row.cls.cond_hF ? "1" : "0") : "na";
    csv += ",";
    csv += row.boundary ? "1" : "0";
    csv += "\n";
  }
  if (cfg.out.empty())
    std::cout << csv;
  else
    write_text(cfg.out, csv);
  return 0;
}

int cmd_wh_export(const GlobalConfig& cfg, double a, double b, int d) {
  const WHParams params{a, b, d};
  if (!wh_is_cp(params))
    throw std::invalid_argument(
        "wh-export: parameters are outside the completely positive region");
  if (cfg.out.empty())
    throw std::invalid_argument("wh-export: --out PATH is required");
  const QuantumChannel ch = wh_channel(params);
  const std::string name = "wh(a=" + format_double(a) + ", b=" + format_double(b) +
                           ", d=" + std::to_string(d) + ")";
  save_channel(cfg.out, ch, name);

  JsonReport report;
  report.add("command", "wh-export");
  report.add("a", a);
  report.add("b", b);
  report.add("d", d);
  report.add("out", cfg.out);
  report.add("kraus_count", static_cast<int>(ch.kraus.size()));
  std::cout << (cfg.format == "csv" ? report.to_csv() : report.to_json());
  return 0;
}

int cmd_extremal(const GlobalConfig& cfg, int d) {
  const ExtremalChoiResult res = extremal_choi(d);
  const RealignmentResult realign = realignment_entanglement_check(res.choi);

  const char* match = nullptr;
  switch (res.match) {
    case ClosedFormMatch::Normalized: match = "normalized"; break;
    case ClosedFormMatch::Unnormalized: match = "unnormalized"; break;
    case ClosedFormMatch::Both: match = "both"; break;
    case ClosedFormMatch::Neither: match = "neither"; break;
  }

  JsonReport report;
  report.add("command", "extremal");
  report.add("d", d);
  report.add("a", res.params.a);
  report.add("b", res.params.b);
  report.add("choi_trace", res.trace);
  report.add("choi_min_eig", res.min_eigenvalue);
  report.add("choi_pt_min_eig", res.pt_min_eigenvalue);
  report.add("is_ppt", res.pt_min_eigenvalue >= -kPositivityTol *
                                                    std::max(1.0, res.trace));
  report.add("closed_form_match", match);
  report.add("diff_normalized", res.diff_normalized);
  report.add("diff_unnormalized", res.diff_unnormalized);
  report.add("realignment_sum", realign.realignment_sum);
  report.add("entanglement_detected", realign.detected);
  emit(cfg, report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal order-2 Renyi output entropy toolkit for quantum channels"};
  app.require_subcommand(1);

  GlobalConfig cfg;
  app.add_option("--seed", cfg.seed, "Random seed for multi-start optimization")
      ->capture_default_str();
  app.add_option("--restarts", cfg.restarts, "Optimizer restarts")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--tol", cfg.tol, "Optimizer purity-change tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--log-base", cfg.log_base, "Entropy log base")
      ->check(CLI::IsMember({"e", "2"}))
      ->capture_default_str();
  app.add_option("--format", cfg.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", cfg.out, "Write the report/file here instead of stdout");

  std::string channel_file, channel_file2;
  auto* minh2 = app.add_subcommand("minh2", "Minimal H2 output of a channel");
  minh2->add_option("channel", channel_file, "Channel JSON file")->required();

  auto* conditions =
      app.add_subcommand("conditions", "CP/PPT and additivity-condition report");
  conditions->add_option("channel", channel_file, "Channel JSON file")->required();

  auto* additivity =
      app.add_subcommand("additivity", "Joint vs product minimal H2 for a pair");
  additivity->add_option("channel1", channel_file, "First channel JSON file")->required();
  additivity->add_option("channel2", channel_file2, "Second channel JSON file")->required();

  int d = 3;
  double step = 0.01, wh_a = 0.0, wh_b = 0.0;
  auto* region = app.add_subcommand(
      "wh-region", "Scan the Werner-Holevo (a, b) parameter square to CSV");
  region->add_option("--d", d, "Dimension")->check(CLI::Range(2, 1000))->capture_default_str();
  region->add_option("--step", step, "Grid step")->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* whexport = app.add_subcommand(
      "wh-export", "Write a Werner-Holevo channel as a Kraus JSON file");
  whexport->add_option("--a", wh_a, "Coefficient of rho")->required();
  whexport->add_option("--b", wh_b, "Coefficient of rho^T")->required();
  whexport->add_option("--d", d, "Dimension")->check(CLI::Range(2, 1000))->required();

  auto* extremal = app.add_subcommand(
      "extremal", "Analyze the extremal PPT-inducing Werner-Holevo Choi matrix");
  extremal->add_option("--d", d, "Dimension")->check(CLI::Range(2, 1000))
      ->capture_default_str();

  // Global flags remain usable after the subcommand name.
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (minh2->parsed()) return cmd_minh2(cfg, channel_file);
    if (conditions->parsed()) return cmd_conditions(cfg, channel_file);
    if (additivity->parsed()) return cmd_additivity(cfg, channel_file, channel_file2);
    if (region->parsed()) return cmd_wh_region(cfg, d, step);
    if (whexport->parsed()) return cmd_wh_export(cfg, wh_a, wh_b, d);
    if (extremal->parsed()) return cmd_extremal(cfg, d);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
