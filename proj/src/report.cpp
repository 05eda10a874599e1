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

#include "cfsim/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "cfsim/errors.hpp"

namespace cfsim {

std::string format_double(double v) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw std::logic_error("format_double failed");
    return {buf, end};
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::Mrc: return "mrc";
        case Scheme::SmallCell: return "sc";
        default: return "cnf";
    }
}

std::string rank_cdf_csv(const CampaignStats& stats) {
    std::string out = "m_rank,cdf\n";
    for (const auto& p : stats.rank_cdf)
        out += format_double(p.value) + "," + format_double(p.fraction) + "\n";
    return out;
}

std::string outage_cdf_csv(const CampaignStats& stats) {
    std::string out = "scheme,n_outage,cdf\n";
    for (int s = 0; s < 3; ++s) {
        const char* name = scheme_name(static_cast<Scheme>(s));
        for (const auto& p : stats.outage_cdf[s])
            out += std::string(name) + "," + format_double(p.value) + "," +
                   format_double(p.fraction) + "\n";
    }
    return out;
}

std::string throughput_cdf_csv(const CampaignStats& stats) {
    std::string out = "scheme,throughput_bpcu,cdf\n";
    for (int s = 0; s < 3; ++s) {
        const char* name = scheme_name(static_cast<Scheme>(s));
        for (const auto& p : stats.throughput_cdf[s])
            out += std::string(name) + "," + format_double(p.value) + "," +
                   format_double(p.fraction) + "\n";
    }
    return out;
}

std::string rates_example_csv(const RealizationOutcome& outcome) {
    std::string out = "index,cnf_rate,mrc_rate,sc_rate\n";
    const std::size_t l = outcome.cnf_rates.size();
    for (std::size_t i = 0; i < l; ++i)
        out += std::to_string(i + 1) + "," + format_double(outcome.cnf_rates[i]) + "," +
               format_double(outcome.mrc_rates[i]) + "," + format_double(outcome.sc_rates[i]) +
               "\n";
    return out;
}

// ------------------------------------------------------------------- SVG

namespace {

constexpr double kWidth = 640.0, kHeight = 480.0;
constexpr double kLeft = 70.0, kRight = 610.0, kTop = 30.0, kBottom = 430.0;

std::string fmt_coord(double v) {
    // two decimals is plenty for pixel coordinates and keeps files stable
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string xml_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

// Round tick spacing to 1/2/5 times a power of ten.
double nice_step(double span, int target_ticks) {
    const double raw = span / target_ticks;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double norm = raw / mag;
    if (norm <= 1.0) return mag;
    if (norm <= 2.0) return 2.0 * mag;
    if (norm <= 5.0) return 5.0 * mag;
    return 10.0 * mag;
}

} // namespace

std::string render_cdf_svg(std::span<const SvgSeries> series, const std::string& x_label,
                           const std::string& y_label) {
    if (series.empty()) throw ConfigError("render_cdf_svg: no series");
    double x_min = 0.0, x_max = 0.0;
    bool first = true;
    for (const auto& s : series) {
        if (s.cdf == nullptr || s.cdf->empty()) throw ConfigError("render_cdf_svg: empty CDF table");
        const double lo = s.cdf->front().value, hi = s.cdf->back().value;
        x_min = first ? lo : std::min(x_min, lo);
        x_max = first ? hi : std::max(x_max, hi);
        first = false;
    }
    if (x_min == x_max) {
        x_min -= 1.0;
        x_max += 1.0;
    }
    const double pad = 0.03 * (x_max - x_min);
    x_min -= pad;
    x_max += pad;

    const auto sx = [&](double v) {
        return kLeft + (v - x_min) / (x_max - x_min) * (kRight - kLeft);
    };
    const auto sy = [&](double f) { return kBottom - f * (kBottom - kTop); };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
           "viewBox=\"0 0 640 480\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" fill=\"white\"/>\n";

    // frame
    svg << "<rect x=\"" << fmt_coord(kLeft) << "\" y=\"" << fmt_coord(kTop) << "\" width=\""
        << fmt_coord(kRight - kLeft) << "\" height=\"" << fmt_coord(kBottom - kTop)
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

    // y ticks at 0, 0.2 .. 1
    for (int i = 0; i <= 5; ++i) {
        const double f = i / 5.0;
        const double y = sy(f);
        svg << "<line x1=\"" << fmt_coord(kLeft - 5) << "\" y1=\"" << fmt_coord(y) << "\" x2=\""
            << fmt_coord(kLeft) << "\" y2=\"" << fmt_coord(y) << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << fmt_coord(kLeft - 9) << "\" y=\"" << fmt_coord(y + 4)
            << "\" font-size=\"12\" text-anchor=\"end\">" << format_double(f) << "</text>\n";
    }
    // x ticks
    const double step = nice_step(x_max - x_min, 6);
    const double tick0 = std::ceil(x_min / step) * step;
    for (double v = tick0; v <= x_max + 1e-12 * step; v += step) {
        const double x = sx(v);
        const double shown = std::abs(v) < 1e-12 * step ? 0.0 : v;
        svg << "<line x1=\"" << fmt_coord(x) << "\" y1=\"" << fmt_coord(kBottom) << "\" x2=\""
            << fmt_coord(x) << "\" y2=\"" << fmt_coord(kBottom + 5) << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << fmt_coord(x) << "\" y=\"" << fmt_coord(kBottom + 20)
            << "\" font-size=\"12\" text-anchor=\"middle\">" << format_double(shown)
            << "</text>\n";
    }

    svg << "<text x=\"" << fmt_coord((kLeft + kRight) / 2) << "\" y=\"" << fmt_coord(kHeight - 12)
        << "\" font-size=\"14\" text-anchor=\"middle\">" << xml_escape(x_label) << "</text>\n"
        << "<text x=\"18\" y=\"" << fmt_coord((kTop + kBottom) / 2)
        << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << fmt_coord((kTop + kBottom) / 2) << ")\">" << xml_escape(y_label) << "</text>\n";

    // step curves
    for (const auto& s : series) {
        std::ostringstream pts;
        const Cdf& cdf = *s.cdf;
        pts << fmt_coord(sx(cdf.front().value)) << ',' << fmt_coord(sy(0.0));
        double prev_f = 0.0;
        for (const auto& p : cdf) {
            pts << ' ' << fmt_coord(sx(p.value)) << ',' << fmt_coord(sy(prev_f));
            pts << ' ' << fmt_coord(sx(p.value)) << ',' << fmt_coord(sy(p.fraction));
            prev_f = p.fraction;
        }
        pts << ' ' << fmt_coord(sx(x_max)) << ',' << fmt_coord(sy(prev_f));
        svg << "<polyline fill=\"none\" stroke=\"" << s.color
            << "\" stroke-width=\"1.8\" points=\"" << pts.str() << "\"/>\n";
    }

    // legend, top-left corner of the frame
    double ly = kTop + 18;
    for (const auto& s : series) {
        svg << "<line x1=\"" << fmt_coord(kLeft + 12) << "\" y1=\"" << fmt_coord(ly - 4)
            << "\" x2=\"" << fmt_coord(kLeft + 40) << "\" y2=\"" << fmt_coord(ly - 4)
            << "\" stroke=\"" << s.color << "\" stroke-width=\"1.8\"/>\n"
            << "<text x=\"" << fmt_coord(kLeft + 46) << "\" y=\"" << fmt_coord(ly)
            << "\" font-size=\"13\">" << xml_escape(s.label) << "</text>\n";
        ly += 18;
    }

    svg << "</svg>\n";
    return svg.str();
}

std::string fnv1a64_hex(std::string_view data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open for writing: " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw IoError("write failed: " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError("rename failed for " + path.string() + ": " + ec.message());
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace cfsim
