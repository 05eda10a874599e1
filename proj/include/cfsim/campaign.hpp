// cfsim: compute-and-forward simulator for the cell-free massive MIMO uplink
// Copyright (C) 2026 cfsim contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cfsim/evaluation.hpp"

namespace cfsim {

// One full work unit: layout, channel and evaluation for realization
// `index` on substreams derived from (master_seed, index). Identical
// output regardless of which thread runs it.
RealizationOutcome run_single(const RunConfig& cfg, int index);

// All realizations in index order. workers == 1 runs the serial reference
// loop; workers != 1 runs the OpenMP kernel (workers <= 0 uses every
// core). Both produce identical outcomes.
std::vector<RealizationOutcome> run_realizations(const RunConfig& cfg, int workers = 0);

struct CampaignOutputs {
    CampaignStats stats;
    std::vector<std::filesystem::path> files; // everything written, manifest last
    double duration_s = 0.0;
};

// Executes the campaign and writes rank-cdf.csv, outage-cdf.csv,
// throughput-cdf.csv, rates-example.csv, one SVG per CDF and the run
// manifest into out_dir. Output bytes depend only on (cfg, master_seed),
// never on the worker count.
CampaignOutputs run_campaign(const RunConfig& cfg, const std::filesystem::path& out_dir,
                             int workers = 0, const std::string& scenario = "");

} // namespace cfsim
