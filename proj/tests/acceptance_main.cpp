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
//
// End-to-end verification suite. Each numbered check prints one PASS/FAIL
// line; the exit code is the number of failures.

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "renyi2/channel.hpp"
#include "renyi2/channel_io.hpp"
#include "renyi2/matrix_ops.hpp"
#include "renyi2/optimize.hpp"
#include "renyi2/random.hpp"
#include "renyi2/replica.hpp"
#include "renyi2/werner_holevo.hpp"

using namespace renyi2;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] %2d %s: %s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

void info(int number, const std::string& name, const std::string& detail) {
  std::printf("[INFO] %2d %s: %s\n", number, name.c_str(), detail.c_str());
  std::fflush(stdout);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

double output_purity(const QuantumChannel& ch, const CMat& rho) {
  const CMat out = ch.apply(rho);
  return (out * out).trace().real();
}

// --- 1. replica identity -------------------------------------------------

void criterion_replica_identity() {
  Rng rng(1001);
  double worst = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const int d = (rep % 2 == 0) ? 2 : 3;
    const QuantumChannel ch = random_channel(d, d, 1 + rep % (d * d), rng);
    const PurityOperator k = purity_operator(ch);
    const CMat rho = random_density(d, rng);
    worst = std::max(worst,
                     std::abs(output_purity(ch, rho) - purity_via_operator(k, rho)));
  }
  report(1, "replica identity", worst <= 1e-10,
         "max |tr L(rho)^2 - tr[(rho x rho) K]| = " + fmt(worst) +
             " over 50 pairs, d in {2,3} (tol 1e-10)");
}

// --- 2. dual-construction agreement for -h -------------------------------

void criterion_dual_construction() {
  Rng rng(1002);
  double worst = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const int d = (rep % 2 == 0) ? 2 : 3;
    const QuantumChannel ch = random_channel(d, d, 1 + rep % (d * d), rng);

    // Route A: Kraus pair sum (sum_ab v_a v_b^dag (x) v_b v_a^dag) F.
    CMat route_a = CMat::Zero(d * d, d * d);
    for (const CMat& va : ch.kraus)
      for (const CMat& vb : ch.kraus)
        route_a += tensor(va * vb.adjoint(), vb * va.adjoint());
    route_a *= flip_operator(d);

    // Route B: image of the unnormalized maximally entangled projector
    // under ch (x) (ch o T), via matrix units.
    CMat route_b = CMat::Zero(d * d, d * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        CMat eij = CMat::Zero(d, d);
        eij(i, j) = 1.0;
        CMat eji = CMat::Zero(d, d);
        eji(j, i) = 1.0;
        route_b += tensor(ch.apply(eij), ch.apply(eji));
      }

    worst = std::max(worst, max_abs(route_a - route_b));
  }
  report(2, "dual construction of -h", worst <= 1e-9,
         "max entrywise difference = " + fmt(worst) +
             " over 50 channels (tol 1e-9)");
}

// --- 3. PPT-inducing implies -h PSD ---------------------------------------

void criterion_ppt_positivity() {
  Rng rng(1003);
  double worst = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const int d = (rep % 2 == 0) ? 2 : 3;
    const QuantumChannel ch = random_ppt_inducing_channel(d, rng);
    worst = std::min(worst, 0.0);
    const double min_eig = min_eigenvalue(h_operator(ch).matrix);
    worst = std::min(worst, min_eig);
  }
  report(3, "PPT-inducing implies -h PSD", worst >= -1e-9,
         "min eigenvalue of -h over 50 PPT-inducing channels = " + fmt(worst) +
             " (threshold -1e-9)");
}

// --- 4. additivity for PPT-inducing x arbitrary ---------------------------

void criterion_additivity() {
  Rng rng(1004);
  OptimizeOptions opts;
  opts.restarts = 32;
  double worst_gap = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    const QuantumChannel ppt = random_ppt_inducing_channel(2, rng);
    const QuantumChannel any = random_channel(2, 2, 1 + rep % 4, rng);
    opts.seed = 1000 + rep;
    const AdditivityReport res = additivity_gap(ppt, any, opts);
    worst_gap = std::max(worst_gap, std::abs(res.gap));
  }
  report(4, "joint-use additivity", worst_gap <= 1e-6,
         "max |joint - product| purity gap = " + fmt(worst_gap) +
             " over 20 PPT-inducing x arbitrary pairs, d=2, 32 restarts (tol 1e-6)");
}

// --- 5. Werner-Holevo analytic purity vs optimizer ------------------------

void criterion_wh_purity() {
  Rng rng(1005);
  OptimizeOptions opts;
  opts.restarts = 32;
  opts.tol = 1e-12;  // solver stop well below the 1e-7 comparison
  opts.max_iterations = 20000;

  double worst = 0.0;
  bool anchors_ok = true;
  for (int d : {2, 3, 4}) {
    // Anchors.
    anchors_ok &= std::abs(wh_max_purity(WHParams{1, 0, d}) - 1.0) < 1e-15;
    anchors_ok &= std::abs(wh_max_purity(WHParams{0, 0, d}) - 1.0 / d) < 1e-15;

    // Interior samples from the CP triangle with both branch signs.
    const double dd = d;
    const double denom = dd * dd + dd - 2.0;
    const double va[3] = {1.0, 0.0, -2.0 / denom};
    const double vb[3] = {0.0, -1.0 / (dd - 1.0), dd / denom};
    int pos = 0, neg = 0;
    while (pos + neg < 25) {
      double w[3] = {rng.uniform(), rng.uniform(), rng.uniform()};
      const double sum = w[0] + w[1] + w[2];
      double a = 0.0, b = 0.0;
      for (int i = 0; i < 3; ++i) {
        a += w[i] / sum * va[i];
        b += w[i] / sum * vb[i];
      }
      // Pull slightly toward the centroid to stay off the boundary.
      const double ca = (va[0] + va[1] + va[2]) / 3.0;
      const double cb = (vb[0] + vb[1] + vb[2]) / 3.0;
      a = 0.98 * a + 0.02 * ca;
      b = 0.98 * b + 0.02 * cb;

      // Points on the branch seam ab = 0 exercise neither branch and the
      // ascent rate there degrades like 1 - O(|ab|); sample clear of it.
      if (std::abs(a * b) < 1e-3) continue;
      const bool branch_pos = a * b >= 0.0;
      if (branch_pos && pos >= 13) continue;
      if (!branch_pos && neg >= 12) continue;
      (branch_pos ? pos : neg) += 1;

      const WHParams p{a, b, d};
      opts.seed = static_cast<std::uint64_t>(d * 1000 + pos * 31 + neg);
      const double numeric = max_output_purity(wh_channel(p), opts).max_purity;
      worst = std::max(worst, std::abs(wh_max_purity(p) - numeric));
    }
  }
  report(5, "analytic output purity", worst <= 1e-7 && anchors_ok,
         "max |formula - optimizer| = " + fmt(worst) +
             " over 25 CP points per d in {2,3,4}, both ab-sign branches "
             "(tol 1e-7); anchors " +
             (anchors_ok ? "exact" : "WRONG"));
}

// --- 6. CP/PPT inequalities vs spectral tests ------------------------------

void criterion_region_agreement() {
  int mismatches = 0, tested = 0;
  for (int d : {2, 3, 10}) {
    for (int i = 0; i < 50; ++i)
      for (int j = 0; j < 50; ++j) {
        const double a = -1.05 + 2.1 * i / 49.0;
        const double b = -1.05 + 2.1 * j / 49.0;
        const WHParams p{a, b, d};
        const double forms[6] = {a * (d * d - 1.0) + b * (d - 1.0) + 1.0,
                                 b * (d - 1.0) - a + 1.0,
                                 1.0 - a - b * (d + 1.0),
                                 b * (d * d - 1.0) + a * (d - 1.0) + 1.0,
                                 a * (d - 1.0) - b + 1.0,
                                 1.0 - b - a * (d + 1.0)};
        const bool near_boundary = std::any_of(
            std::begin(forms), std::end(forms),
            [](double g) { return std::abs(g) <= 1e-7; });
        if (near_boundary) continue;
        ++tested;

        const ChoiMatrix choi = wh_choi(p);
        const bool cp_spectral = is_psd(choi.matrix);
        if (wh_is_cp(p) != cp_spectral) ++mismatches;
        const bool ppt_spectral =
            cp_spectral &&
            is_psd(partial_transpose(choi.matrix, d, d, Subsystem::First));
        if (wh_is_ppt(p) != ppt_spectral) ++mismatches;
      }
  }
  report(6, "CP/PPT inequality vs spectral agreement", mismatches == 0,
         std::to_string(mismatches) + " mismatches over " + std::to_string(tested) +
             " off-boundary grid points, 50x50 grids at d in {2,3,10}");
}

// --- 7. polytope geometry --------------------------------------------------

void criterion_polytope() {
  bool ok = true;
  std::string detail;
  for (int d = 2; d <= 10 && ok; ++d) {
    std::vector<std::pair<double, double>> v;
    try {
      v = ppt_polytope_vertices(d);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("d=") + std::to_string(d) + ": " + e.what();
      break;
    }
    if (v.size() != 4) {
      ok = false;
      detail = "d=" + std::to_string(d) + ": " + std::to_string(v.size()) + " vertices";
      break;
    }
    const double denom = static_cast<double>(d) * d + d - 2.0;
    const double ea = -2.0 / denom, eb = d / denom;
    const bool found = std::any_of(v.begin(), v.end(), [&](auto& q) {
      return std::abs(q.first - ea) <= 1e-12 && std::abs(q.second - eb) <= 1e-12;
    });
    if (!found) {
      ok = false;
      detail = "d=" + std::to_string(d) + ": corner (-2/(d^2+d-2), d/(d^2+d-2)) missing";
    }
  }
  if (ok) detail = "4 vertices for every d in {2..10}, corner formula matched to 1e-12";
  report(7, "PPT polytope geometry", ok, detail);
}

// --- 8. extremal Choi matrix ------------------------------------------------

void criterion_extremal() {
  bool ok = true;
  std::string detail;
  for (int d : {3, 4, 10}) {
    const ExtremalChoiResult res = extremal_choi(d);
    const bool trace_ok = std::abs(res.trace - d) <= 1e-10;
    const bool psd_ok = res.min_eigenvalue >= -1e-9;
    const bool ppt_ok = res.pt_min_eigenvalue >= -1e-9;
    const bool match_ok = res.match == ClosedFormMatch::Normalized &&
                          res.diff_normalized <= 1e-10;
    if (!(trace_ok && psd_ok && ppt_ok && match_ok)) {
      ok = false;
      detail = "d=" + std::to_string(d) + ": trace=" + fmt(res.trace) +
               " min_eig=" + fmt(res.min_eigenvalue) +
               " pt_min_eig=" + fmt(res.pt_min_eigenvalue) +
               " diff_norm=" + fmt(res.diff_normalized) +
               " diff_unnorm=" + fmt(res.diff_unnormalized);
      break;
    }
    const RealignmentResult r = realignment_entanglement_check(res.choi);
    info(8, "extremal Choi realignment",
         "d=" + std::to_string(d) + ": singular-value sum = " +
             fmt(r.realignment_sum) + ", detected = " +
             (r.detected ? "true" : "false") +
             (r.detected
                  ? ""
                  : " (detector limitation: this family realigns to sum exactly 1;"
                    " non-detection proves nothing)"));
  }
  if (ok)
    detail =
        "trace d, PSD, PT PSD, closed form matches the trace-1 projector "
        "reading only (1e-10), d in {3,4,10}";
  report(8, "extremal Choi matrix", ok, detail);
}

// --- 9. optimizer soundness --------------------------------------------------

void criterion_optimizer_soundness() {
  Rng rng(1009);
  OptimizeOptions opts;
  opts.restarts = 16;

  bool monotone_ok = true;
  double worst_oracle = 0.0, worst_feasibility = 0.0;
  try {
    for (int rep = 0; rep < 15; ++rep) {
      const int d = 2 + rep % 2;
      const QuantumChannel ch = random_channel(d, d, 1 + rep % 3, rng);
      opts.seed = rep;
      // Monotone ascent is asserted inside the optimizer; a throw fails here.
      const double opt = max_output_purity(ch, opts).max_purity;
      const double oracle = brute_force_max_purity(ch, 80, 7000 + rep);
      worst_oracle = std::max(worst_oracle, oracle - opt);
    }
    for (int rep = 0; rep < 5; ++rep) {
      const QuantumChannel ch1 = random_channel(2, 2, 2, rng);
      const QuantumChannel ch2 = random_channel(2, 2, 2, rng);
      opts.seed = 100 + rep;
      const AdditivityReport res = additivity_gap(ch1, ch2, opts);
      worst_feasibility =
          std::max(worst_feasibility, res.product_of_maxima - res.joint_max_purity);
    }
  } catch (const std::exception& e) {
    monotone_ok = false;
  }
  const bool ok = monotone_ok && worst_oracle <= 1e-8 && worst_feasibility <= 1e-8;
  report(9, "optimizer soundness", ok,
         std::string("ascent monotone: ") + (monotone_ok ? "yes" : "NO") +
             "; max (oracle - optimizer) = " + fmt(worst_oracle) +
             "; max (product - joint) = " + fmt(worst_feasibility) +
             " (both tol 1e-8)");
}

// --- 10. round trips ----------------------------------------------------------

std::pair<int, std::string> run_cli(const std::string& cli, const std::string& args,
                                    const std::string& out_path) {
  const std::string cmd = cli + " " + args + " > " + out_path + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, buf.str()};
}

void criterion_round_trips() {
  Rng rng(1010);
  double worst = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    const int din = 2 + rep % 2, dout = 2 + (rep / 2) % 2;
    const QuantumChannel ch = random_channel(din, dout, 1 + rep % 4, rng);
    const QuantumChannel back = choi_to_kraus(choi_of(ch));
    for (int s = 0; s < 3; ++s) {
      const CMat rho = random_density(din, rng);
      worst = std::max(worst, max_abs(ch.apply(rho) - back.apply(rho)));
    }
  }
  const bool kraus_ok = worst <= 1e-8;

  bool cli_ok = true;
  std::string cli_detail = "CLI export/reload/conditions reproduced";
  const char* cli = std::getenv("RENYI2_CLI");
  if (cli == nullptr) {
    cli_ok = false;
    cli_detail = "RENYI2_CLI not set";
  } else {
    const auto dir = std::filesystem::temp_directory_path() / "renyi2_acceptance";
    std::filesystem::create_directories(dir);
    const struct {
      double a, b;
      int d;
    } points[2] = {{-0.2, 0.3, 3}, {0.25, 0.1, 2}};
    for (const auto& pt : points) {
      const std::string file =
          (dir / ("wh_" + std::to_string(pt.d) + ".json")).string();
      const auto exp = run_cli(cli,
                               "wh-export --a " + std::to_string(pt.a) + " --b " +
                                   std::to_string(pt.b) + " --d " +
                                   std::to_string(pt.d) + " --out " + file,
                               (dir / "export_out.json").string());
      if (exp.first != 0) {
        cli_ok = false;
        cli_detail = "wh-export exited with " + std::to_string(exp.first);
        break;
      }
      // Reload validates trace preservation; then the conditions report must
      // agree with the direct library evaluation.
      const ChannelDocument doc = load_channel(file);
      const WHParams p{pt.a, pt.b, pt.d};
      Rng check_rng(42);
      const CMat rho = random_density(pt.d, check_rng);
      if (max_abs(doc.channel.apply(rho) - wh_apply(p, rho)) > 1e-8) {
        cli_ok = false;
        cli_detail = "exported Kraus form deviates from the formula";
        break;
      }
      const auto cond = run_cli(cli, "conditions " + file,
                                (dir / "conditions_out.json").string());
      if (cond.first != 0) {
        cli_ok = false;
        cli_detail = "conditions exited with " + std::to_string(cond.first);
        break;
      }
      const auto parsed = nlohmann::json::parse(cond.second, nullptr, false);
      if (parsed.is_discarded()) {
        cli_ok = false;
        cli_detail = "conditions emitted invalid JSON";
        break;
      }
      const PositivityConditions expect = positivity_conditions(wh_channel(p));
      if (parsed["is_cp"].get<bool>() != true ||
          parsed["is_ppt_inducing"].get<bool>() != wh_is_ppt(p) ||
          parsed["cond_h"].get<bool>() != expect.h_positive ||
          parsed["cond_hF"].get<bool>() != expect.hF_positive) {
        cli_ok = false;
        cli_detail = "conditions report disagrees with the library";
        break;
      }
    }
  }

  report(10, "round trips", kraus_ok && cli_ok,
         "max Kraus<->Choi apply deviation = " + fmt(worst) +
             " over 20 channels (tol 1e-8); " + cli_detail);
}

}  // namespace

int main() {
  std::printf("minimal Renyi-2 output entropy toolkit: acceptance run\n");
  criterion_replica_identity();
  criterion_dual_construction();
  criterion_ppt_positivity();
  criterion_additivity();
  criterion_wh_purity();
  criterion_region_agreement();
  criterion_polytope();
  criterion_extremal();
  criterion_optimizer_soundness();
  criterion_round_trips();
  if (g_failures == 0)
    std::printf("all criteria passed\n");
  else
    std::printf("%d criteria FAILED\n", g_failures);
  return g_failures;
}
