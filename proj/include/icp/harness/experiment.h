// Copyright 2026 The ICP Simulator Authors
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

#ifndef ICP_HARNESS_EXPERIMENT_H_
#define ICP_HARNESS_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "icp/harness/config.h"
#include "icp/learn/bundle_io.h"
#include "icp/learn/delayed_map.h"
#include "icp/learn/trainer.h"

namespace icp::harness {

struct SeedResult {
  uint64_t seed = 0;
  learn::EvalSummary final_eval;
  std::vector<learn::CurvePoint> curve;
  learn::PolicyBundle bundle;
  std::optional<learn::ShuffleStudy> shuffle;
  double wall_seconds = 0.0;
};

struct SummaryRow {
  std::string label;  // seed number, "mean" or "std"
  double mean_return = 0.0;
  double mean_length = 0.0;
};

struct RunSummary {
  std::vector<SummaryRow> per_seed;
  SummaryRow mean;
  SummaryRow std;  // sample standard deviation; 0 for a single seed
};

// Trains and evaluates one seed.
SeedResult RunSeed(const ExperimentConfig& config, uint64_t seed);

// Aggregates per-seed final evaluations.
RunSummary Summarize(const std::vector<SeedResult>& results);

// "train_step,mean_return,mean_ep_len,epsilon,seed" plus one row per point.
std::string CurveCsv(const std::vector<learn::CurvePoint>& curve);
std::string SummaryCsv(const RunSummary& summary);

// Worker count: ICP_SIM_THREADS when set (>= 1), else the hardware count.
int WorkerLimit();

// Runs every seed on up to `workers` threads. Each worker writes its own
// seed's files (curve_seed<s>.csv, bundle_seed<s>.txt) when `write_files`
// is set; the summary.csv is written after all seeds finish. Results are in
// config order.
std::vector<SeedResult> RunExperiment(const ExperimentConfig& config,
                                      int workers, bool write_files);

// Curve values use 10 significant digits, summary values 17.
std::string FormatNumber(double v);
std::string FormatExact(double v);

}  // namespace icp::harness

#endif  // ICP_HARNESS_EXPERIMENT_H_
