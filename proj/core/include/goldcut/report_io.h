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

#ifndef GOLDCUT_REPORT_IO_H
#define GOLDCUT_REPORT_IO_H

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "goldcut/detector.h"
#include "goldcut/sweep.h"

namespace goldcut {

/// Shortest decimal form that parses back to the same double ("nan"/"inf" for
/// non-finite values). Locale independent.
std::string format_double(double value);

void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& records);
void write_aggregate_csv(std::ostream& out, const std::vector<AggregateRow>& rows);
/// Per-trial timings.
void write_bench_csv(std::ostream& out, const BenchResult& bench);
/// One-row mean and standard error table.
void write_bench_summary_csv(std::ostream& out, const BenchResult& bench, double alpha,
                             std::uint64_t shots);

/// Human-readable report. `fragments` supplies the output wire mapping.
std::string format_report(const DetectionReport& report, const FragmentPair& fragments,
                          bool normalize);
std::string report_to_json(const DetectionReport& report, const FragmentPair& fragments,
                           bool normalize);

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

/// Static SVG line chart with a log2 x axis.
std::string svg_line_plot(const std::string& title, const std::string& x_label,
                          const std::string& y_label, const std::vector<PlotSeries>& series);

/// Writes trials.csv, aggregate.csv and (when `plots`) rate/l2 SVGs into out_dir.
/// Returns the written paths. Throws std::runtime_error naming the path on I/O failure.
std::vector<std::filesystem::path> emit_outputs(const SweepResult& result,
                                                const std::filesystem::path& out_dir, bool plots);

/// Writes `contents` to `path`, creating parent directories.
void write_text_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace goldcut

#endif  // GOLDCUT_REPORT_IO_H
