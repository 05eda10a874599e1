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

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cfsim/evaluation.hpp"

namespace cfsim {

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

// RFC-4180-style field quoting (only when the field needs it).
std::string csv_field(std::string_view s);

// CSV tables. Columns:
//   rank-cdf.csv:       m_rank,cdf
//   outage-cdf.csv:     scheme,n_outage,cdf
//   throughput-cdf.csv: scheme,throughput_bpcu,cdf
//   rates-example.csv:  index,cnf_rate,mrc_rate,sc_rate   (each column sorted)
std::string rank_cdf_csv(const CampaignStats& stats);
std::string outage_cdf_csv(const CampaignStats& stats);
std::string throughput_cdf_csv(const CampaignStats& stats);
std::string rates_example_csv(const RealizationOutcome& outcome);

struct SvgSeries {
    std::string label;
    std::string color;
    const Cdf* cdf = nullptr;
};

// Deterministic SVG 1.1 step plot with axes, ticks and a legend.
std::string render_cdf_svg(std::span<const SvgSeries> series, const std::string& x_label,
                           const std::string& y_label);

// 64-bit FNV-1a content checksum, hex encoded.
std::string fnv1a64_hex(std::string_view data);

// Write via a temp file and rename, so readers never see partial output.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

std::string read_file(const std::filesystem::path& path);

const char* scheme_name(Scheme s); // "cnf", "mrc", "sc"

} // namespace cfsim
