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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace goldcut {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

namespace {

std::string optional_field(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

// Qubit 0 is printed leftmost, matching Pauli string order.
std::string bitstring(std::uint64_t index, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int q = 0; q < n; ++q) {
    if ((index >> q) & 1U) s[q] = '1';
  }
  return s;
}

}  // namespace

void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
  out << "shots,alpha,trial,circuit_kind,basis,tau_hat,std_err,rejected,l2_error,time_opt_s,time_noopt_s\n";
  for (const TrialRecord& r : records) {
    auto row = [&](const std::string& basis, const std::string& tau, const std::string& se,
                   const std::string& rejected) {
      out << r.shots << ',' << format_double(r.alpha) << ',' << r.trial << ',' << r.circuit_kind << ','
          << basis << ',' << tau << ',' << se << ',' << rejected << ',' << format_double(r.l2_error)
          << ',' << optional_field(r.time_opt_s) << ',' << optional_field(r.time_noopt_s) << '\n';
    };
    if (r.decisions.empty()) {
      row("", "", "", "");
      continue;
    }
    for (const BasisDecision& d : r.decisions) {
      row(d.basis.to_string(), format_double(d.tau_hat), format_double(d.std_err), d.rejected ? "1" : "0");
    }
  }
}

void write_aggregate_csv(std::ostream& out, const std::vector<AggregateRow>& rows) {
  out << "shots,alpha,circuit_kind,golden_rate,reject_rate,l2_median,l2_mean,time_opt_mean_s,"
         "time_noopt_mean_s\n";
  for (const AggregateRow& r : rows) {
    out << r.shots << ',' << format_double(r.alpha) << ',' << r.circuit_kind << ','
        << format_double(r.golden_rate) << ',' << format_double(r.reject_rate) << ','
        << format_double(r.l2_median) << ',' << format_double(r.l2_mean) << ','
        << optional_field(r.time_opt_mean_s) << ',' << optional_field(r.time_noopt_mean_s) << '\n';
  }
}

void write_bench_csv(std::ostream& out, const BenchResult& bench) {
  out << "trial,time_opt_s,time_noopt_s,bases_skipped,downstream_executed_opt\n";
  for (std::size_t t = 0; t < bench.samples.size(); ++t) {
    const BenchSample& s = bench.samples[t];
    out << t << ',' << format_double(s.time_opt_s) << ',' << format_double(s.time_noopt_s) << ','
        << s.bases_skipped << ',' << s.downstream_executed_opt << '\n';
  }
}

void write_bench_summary_csv(std::ostream& out, const BenchResult& bench, double alpha,
                             std::uint64_t shots) {
  out << "alpha,shots,trials,time_opt_mean_s,time_opt_stderr_s,time_noopt_mean_s,time_noopt_stderr_s,"
         "mean_bases_skipped\n";
  out << format_double(alpha) << ',' << shots << ',' << bench.samples.size() << ','
      << format_double(bench.mean_opt_s) << ',' << format_double(bench.stderr_opt_s) << ','
      << format_double(bench.mean_noopt_s) << ',' << format_double(bench.stderr_noopt_s) << ','
      << format_double(bench.mean_bases_skipped) << '\n';
}

std::string format_report(const DetectionReport& report, const FragmentPair& fragments, bool normalize) {
  std::ostringstream out;
  out << "cuts: K=" << report.k << " on qubit(s)";
  for (std::size_t i = 0; i < fragments.k(); ++i) {
    out << ' ' << fragments.upstream_qubits[fragments.upstream_cut_wires[i]];
  }
  out << "\nfragments: upstream " << fragments.upstream.n_qubits << " wire(s), downstream "
      << fragments.downstream.n_qubits << " wire(s)\n";
  if (report.outcomes.empty()) {
    out << "golden-cut detection: disabled\n";
  } else {
    const std::size_t basis_width = std::max<std::size_t>(report.k, 5) + 2;
    out << std::left << std::setw(static_cast<int>(basis_width)) << "basis" << std::right << std::setw(12)
        << "tau_hat" << std::setw(12) << "std_err" << std::setw(10) << "z_crit" << "  decision\n";
    out << std::fixed << std::setprecision(6);
    for (const HypothesisOutcome& o : report.outcomes) {
      out << std::left << std::setw(static_cast<int>(basis_width)) << o.basis.to_string() << std::right
          << std::setw(12) << o.estimate.tau_hat << std::setw(12) << o.estimate.std_err << std::setw(10)
          << std::setprecision(4) << o.critical_value << std::setprecision(6) << "  "
          << (o.rejected ? "run downstream" : "golden (skip)") << '\n';
    }
    out.unsetf(std::ios::floatfield);
    out << std::setprecision(6);
  }
  const SavingsSummary s = savings_summary(report);
  out << "upstream executions: " << report.upstream_executions << '\n';
  out << "downstream variants: executed " << report.downstream_runs_executed << ", skipped "
      << report.downstream_runs_skipped << " (fraction " << format_double(s.skip_fraction) << ")\n";
  if (report.expectation) {
    out << "expectation: " << format_double(*report.expectation) << '\n';
  } else {
    const auto shown = normalize ? clamp_and_normalize(report.distribution) : report.distribution;
    out << "distribution (" << (normalize ? "clamped and normalized" : "raw") << ", qubit 0 leftmost):\n";
    for (std::size_t i = 0; i < shown.size(); ++i) {
      out << "  " << bitstring(i, fragments.n_qubits) << ' ' << format_double(shown[i]) << '\n';
    }
  }
  out << "wall time: " << format_double(report.wall_time_s) << " s\n";
  return out.str();
}

std::string report_to_json(const DetectionReport& report, const FragmentPair& fragments, bool normalize) {
  nlohmann::json j;
  j["k"] = report.k;
  nlohmann::json outcomes = nlohmann::json::array();
  for (const HypothesisOutcome& o : report.outcomes) {
    outcomes.push_back({{"basis", o.basis.to_string()},
                        {"tau_hat", o.estimate.tau_hat},
                        {"std_err", o.estimate.std_err},
                        {"alpha", o.alpha},
                        {"critical_value", o.critical_value},
                        {"rejected", o.rejected}});
  }
  j["outcomes"] = outcomes;
  nlohmann::json skipped = nlohmann::json::array();
  for (const BasisElement& b : report.skipped_bases) skipped.push_back(b.to_string());
  j["skipped_bases"] = skipped;
  j["upstream_executions"] = report.upstream_executions;
  j["downstream_runs_executed"] = report.downstream_runs_executed;
  j["downstream_runs_skipped"] = report.downstream_runs_skipped;
  j["skip_fraction"] = savings_summary(report).skip_fraction;
  if (report.expectation) {
    j["expectation"] = *report.expectation;
  } else {
    nlohmann::json dist;
    dist["qubit_order"] = "qubit 0 leftmost";
    nlohmann::json raw = nlohmann::json::object();
    for (std::size_t i = 0; i < report.distribution.size(); ++i) {
      raw[bitstring(i, fragments.n_qubits)] = report.distribution[i];
    }
    dist["raw"] = raw;
    if (normalize) {
      const auto norm = clamp_and_normalize(report.distribution);
      nlohmann::json n = nlohmann::json::object();
      for (std::size_t i = 0; i < norm.size(); ++i) n[bitstring(i, fragments.n_qubits)] = norm[i];
      dist["normalized"] = n;
    }
    j["distribution"] = dist;
  }
  j["wall_time_s"] = report.wall_time_s;
  return j.dump(2);
}

std::string svg_line_plot(const std::string& title, const std::string& x_label, const std::string& y_label,
                          const std::vector<PlotSeries>& series) {
  constexpr double kWidth = 640, kHeight = 420, kLeft = 70, kRight = 170, kTop = 40, kBottom = 60;
  constexpr const char* kColors[] = {"#5e81ac", "#bf616a", "#a3be8c", "#d08770", "#b48ead", "#88c0d0"};
  double xmin = INFINITY, xmax = -INFINITY, ymin = 0.0, ymax = -INFINITY;
  for (const auto& s : series) {
    for (double x : s.x) {
      xmin = std::min(xmin, std::log2(x));
      xmax = std::max(xmax, std::log2(x));
    }
    for (double y : s.y) {
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  if (!(xmax > xmin)) {
    xmin -= 1;
    xmax += 1;
  }
  if (!(ymax > ymin)) ymax = ymin + 1.0;
  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (std::log2(x) - xmin) / (xmax - xmin) * pw; };
  auto py = [&](double y) { return kTop + (1.0 - (y - ymin) / (ymax - ymin)) * ph; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kLeft + pw / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" << title
      << "</text>\n";
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + ph << "\" x2=\"" << kLeft + pw << "\" y2=\"" << kTop + ph
      << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << kTop + ph
      << "\" stroke=\"black\"/>\n";
  for (int e = static_cast<int>(std::ceil(xmin)); e <= static_cast<int>(std::floor(xmax)); ++e) {
    const double x = px(std::ldexp(1.0, e));
    svg << "<line x1=\"" << x << "\" y1=\"" << kTop + ph << "\" x2=\"" << x << "\" y2=\"" << kTop + ph + 5
        << "\" stroke=\"black\"/><text x=\"" << x << "\" y=\"" << kTop + ph + 18
        << "\" text-anchor=\"middle\">2^" << e << "</text>\n";
  }
  for (int i = 0; i <= 5; ++i) {
    const double y = ymin + (ymax - ymin) * i / 5.0;
    svg << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << py(y) << "\" x2=\"" << kLeft << "\" y2=\"" << py(y)
        << "\" stroke=\"black\"/><text x=\"" << kLeft - 8 << "\" y=\"" << py(y) + 4
        << "\" text-anchor=\"end\">" << format_double(std::round(y * 1000.0) / 1000.0) << "</text>\n";
  }
  svg << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 15 << "\" text-anchor=\"middle\">" << x_label
      << "</text>\n";
  svg << "<text transform=\"translate(18," << kTop + ph / 2 << ") rotate(-90)\" text-anchor=\"middle\">"
      << y_label << "</text>\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& s = series[i];
    const char* color = kColors[i % std::size(kColors)];
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (std::size_t p = 0; p < s.x.size() && p < s.y.size(); ++p) {
      svg << px(s.x[p]) << ',' << py(s.y[p]) << ' ';
    }
    svg << "\"/>\n";
    for (std::size_t p = 0; p < s.x.size() && p < s.y.size(); ++p) {
      svg << "<circle cx=\"" << px(s.x[p]) << "\" cy=\"" << py(s.y[p]) << "\" r=\"3\" fill=\"" << color
          << "\"/>\n";
    }
    const double ly = kTop + 10 + 18.0 * static_cast<double>(i);
    svg << "<line x1=\"" << kLeft + pw + 15 << "\" y1=\"" << ly << "\" x2=\"" << kLeft + pw + 35 << "\" y2=\""
        << ly << "\" stroke=\"" << color << "\" stroke-width=\"2\"/><text x=\"" << kLeft + pw + 40
        << "\" y=\"" << ly + 4 << "\">" << s.label << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw std::runtime_error("cannot create directory '" + path.parent_path().string() + "': " + ec.message());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << contents;
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

std::vector<std::filesystem::path> emit_outputs(const SweepResult& result, const std::filesystem::path& out_dir,
                                                bool plots) {
  std::vector<std::filesystem::path> written;
  {
    std::ostringstream s;
    write_trials_csv(s, result.records);
    write_text_file(out_dir / "trials.csv", s.str());
    written.push_back(out_dir / "trials.csv");
  }
  {
    std::ostringstream s;
    write_aggregate_csv(s, result.aggregates);
    write_text_file(out_dir / "aggregate.csv", s.str());
    written.push_back(out_dir / "aggregate.csv");
  }
  if (plots) {
    // One series per (circuit kind, alpha); rows arrive ordered by shots.
    std::map<std::pair<std::string, double>, std::pair<PlotSeries, PlotSeries>> by_key;
    std::vector<std::pair<std::string, double>> order;
    for (const AggregateRow& r : result.aggregates) {
      auto key = std::pair{r.circuit_kind, r.alpha};
      auto [it, inserted] = by_key.try_emplace(key);
      if (inserted) {
        order.push_back(key);
        const std::string label = r.circuit_kind + " a=" + format_double(r.alpha);
        it->second.first.label = label;
        it->second.second.label = label;
      }
      const double rate = r.circuit_kind == "non-golden" ? r.reject_rate : r.golden_rate;
      it->second.first.x.push_back(static_cast<double>(r.shots));
      it->second.first.y.push_back(rate);
      it->second.second.x.push_back(static_cast<double>(r.shots));
      it->second.second.y.push_back(r.l2_median);
    }
    std::vector<PlotSeries> rates;
    std::vector<PlotSeries> errors;
    for (const auto& key : order) {
      rates.push_back(by_key[key].first);
      errors.push_back(by_key[key].second);
    }
    write_text_file(out_dir / "rates.svg",
                    svg_line_plot("Correct classification rate", "shots", "rate", rates));
    write_text_file(out_dir / "l2_error.svg",
                    svg_line_plot("Median reconstruction error", "shots", "median l2 error", errors));
    written.push_back(out_dir / "rates.svg");
    written.push_back(out_dir / "l2_error.svg");
  }
  return written;
}

}  // namespace goldcut
