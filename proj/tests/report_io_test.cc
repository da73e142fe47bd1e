// Copyright 2026 The goldcut Authors
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

#include "goldcut/report_io.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "goldcut/generators.h"
#include "gtest/gtest.h"
#include "json.hpp"

namespace goldcut {
namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

TEST(FormatDouble, shortest_round_trip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(-2.5e-7), "-2.5e-07");
  EXPECT_EQ(std::stod(format_double(0.1 + 0.2)), 0.1 + 0.2);
}

TEST(Csv, empty_records_give_header_only) {
  std::ostringstream t;
  write_trials_csv(t, {});
  EXPECT_EQ(t.str(), "shots,alpha,trial,circuit_kind,basis,tau_hat,std_err,rejected,l2_error,time_opt_s,time_noopt_s\n");
  std::ostringstream a;
  write_aggregate_csv(a, {});
  EXPECT_EQ(a.str(),
            "shots,alpha,circuit_kind,golden_rate,reject_rate,l2_median,l2_mean,time_opt_mean_s,time_noopt_mean_s\n");
}

TEST(Csv, one_row_per_basis_decision) {
  TrialRecord r;
  r.shots = 128;
  r.alpha = 0.01;
  r.trial = 3;
  r.circuit_kind = "golden";
  r.decisions = {{BasisElement{{Pauli::kI}}, 0.5, 0.25, true}, {BasisElement{{Pauli::kX}}, -0.125, 0.5, false}};
  r.l2_error = 0.75;
  r.time_opt_s = 0.5;
  r.time_noopt_s = 1.0;
  std::ostringstream t;
  write_trials_csv(t, {r});
  const std::string expected =
      "shots,alpha,trial,circuit_kind,basis,tau_hat,std_err,rejected,l2_error,time_opt_s,time_noopt_s\n"
      "128,0.01,3,golden,I,0.5,0.25,1,0.75,0.5,1\n"
      "128,0.01,3,golden,X,-0.125,0.5,0,0.75,0.5,1\n";
  EXPECT_EQ(t.str(), expected);
}

TEST(EmitOutputs, files_row_counts_and_byte_identical_reruns) {
  SweepConfig c;
  c.shots_grid = {64, 128};
  c.alpha_grid = {0.1, 0.01};
  c.trials = 3;
  c.workers = 2;
  const auto dir = std::filesystem::temp_directory_path() / "goldcut_emit_test";
  std::filesystem::remove_all(dir);
  const auto written = emit_outputs(run_sweep(c), dir / "a", true);
  EXPECT_EQ(written.size(), 4u);
  const std::string agg = slurp(dir / "a" / "aggregate.csv");
  EXPECT_EQ(count_lines(agg), 1u + 8u);
  EXPECT_EQ(count_lines(slurp(dir / "a" / "trials.csv")), 1u + 2u * 2u * 2u * 3u * 4u);
  const std::string svg = slurp(dir / "a" / "rates.svg");
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("<polyline"), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(dir / "a" / "l2_error.svg"));

  emit_outputs(run_sweep(c), dir / "b", false);
  EXPECT_EQ(slurp(dir / "a" / "trials.csv"), slurp(dir / "b" / "trials.csv"));
  EXPECT_EQ(agg, slurp(dir / "b" / "aggregate.csv"));
  EXPECT_FALSE(std::filesystem::exists(dir / "b" / "rates.svg"));
  std::filesystem::remove_all(dir);
}

TEST(EmitOutputs, unwritable_directory_names_the_path) {
  const auto blocker = std::filesystem::temp_directory_path() / "goldcut_blocker_file";
  std::ofstream(blocker) << "x";
  try {
    emit_outputs(SweepResult{}, blocker / "sub", false);
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("goldcut_blocker_file"), std::string::npos);
  }
  std::filesystem::remove(blocker);
}

TEST(Report, text_and_json_forms) {
  const std::string text = golden_circuit(0.5, 7);
  const ParsedCircuit p = parse_circuit(text);
  const FragmentPair f = bipartition(p.circuit, *p.cut);
  DetectorConfig cfg;
  cfg.shots = 5000;
  cfg.alpha = 0.01;
  const DetectionReport r = detect_and_reconstruct(f, DistributionMode{}, cfg);
  const std::string report = format_report(r, f, true);
  EXPECT_NE(report.find("K=1"), std::string::npos);
  EXPECT_NE(report.find("golden (skip)"), std::string::npos);
  EXPECT_NE(report.find("executed 6, skipped 2"), std::string::npos);
  EXPECT_NE(report.find("000"), std::string::npos);

  const auto j = nlohmann::json::parse(report_to_json(r, f, true));
  EXPECT_EQ(j.at("k"), 1);
  EXPECT_EQ(j.at("outcomes").size(), 4u);
  EXPECT_EQ(j.at("skipped_bases")[0], "X");
  EXPECT_EQ(j.at("distribution").at("raw").size(), 8u);
  double total = 0.0;
  for (const auto& [key, value] : j.at("distribution").at("normalized").items()) total += value.get<double>();
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(Report, bitstrings_put_qubit_zero_first) {
  const ParsedCircuit p = parse_circuit("qubits 2\nx 0\ncut 0\nh 1\n");
  const FragmentPair f = bipartition(p.circuit, *p.cut);
  DetectorConfig cfg;
  cfg.shots = 100;
  const DetectionReport r = detect_and_reconstruct(f, DistributionMode{}, cfg);
  const auto j = nlohmann::json::parse(report_to_json(r, f, false));
  EXPECT_NEAR(j.at("distribution").at("raw").at("10").get<double>() +
                  j.at("distribution").at("raw").at("11").get<double>(),
              1.0, 1e-12);
}

TEST(BenchCsv, summary_columns) {
  BenchResult b;
  b.samples = {{0.5, 1.0, 1, 6}};
  b.mean_opt_s = 0.5;
  b.mean_noopt_s = 1.0;
  std::ostringstream s;
  write_bench_summary_csv(s, b, 0.1, 100);
  EXPECT_EQ(s.str(),
            "alpha,shots,trials,time_opt_mean_s,time_opt_stderr_s,time_noopt_mean_s,time_noopt_stderr_s,"
            "mean_bases_skipped\n0.1,100,1,0.5,0,1,0,0\n");
  std::ostringstream t;
  write_bench_csv(t, b);
  EXPECT_EQ(count_lines(t.str()), 2u);
}

}  // namespace
}  // namespace goldcut
