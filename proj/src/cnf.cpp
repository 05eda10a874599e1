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

#include "cfsim/cnf.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cfsim/errors.hpp"

namespace cfsim {

namespace {

double channel_norm2(Cvec g) {
    double s = 0.0;
    for (const auto& v : g) s += std::norm(v);
    return s;
}

// g^H a
std::complex<double> channel_inner(Cvec g, const CoeffVector& a) {
    std::complex<double> s{0.0, 0.0};
    for (std::size_t l = 0; l < g.size(); ++l) s += std::conj(g[l]) * to_complex(a[l]);
    return s;
}

// a^H M a = ||a||^2 - SNR |g^H a|^2 / (1 + SNR ||g||^2), clamped from below
// by its Cauchy-Schwarz floor ||a||^2 / (1 + SNR ||g||^2) so rounding can
// never drive it to zero or below.
double quad_form(Cvec g, const CoeffVector& a, double snr) {
    const double na = static_cast<double>(norm2(a));
    const double denom = 1.0 + snr * channel_norm2(g);
    const double q = na - snr * std::norm(channel_inner(g, a)) / denom;
    return std::max(q, na / denom);
}

double rate_from_quad(double q) { return std::max(0.0, -std::log2(q)); }

int strongest_user(Cvec g) {
    int best = 0;
    double best_mag = -1.0;
    for (std::size_t l = 0; l < g.size(); ++l) {
        const double m = std::abs(g[l]);
        if (m > best_mag) {
            best_mag = m;
            best = static_cast<int>(l);
        }
    }
    return best;
}

CoeffVector unit_vector(std::size_t len, int l) {
    CoeffVector a(len);
    a[l] = GaussInt{1, 0};
    return a;
}

} // namespace

double effective_noise_variance(std::complex<double> alpha, Cvec g, const CoeffVector& a,
                                double p, double sigma2) {
    if (g.size() != a.size())
        throw ConfigError("effective_noise_variance: g and a dimensions differ");
    double quant = 0.0;
    for (std::size_t l = 0; l < g.size(); ++l) quant += std::norm(alpha * g[l] - to_complex(a[l]));
    return quant * p + std::norm(alpha) * sigma2;
}

std::complex<double> alpha_opt(Cvec g, const CoeffVector& a, double snr) {
    if (g.size() != a.size()) throw ConfigError("alpha_opt: g and a dimensions differ");
    if (is_zero(a)) throw ConfigError("alpha_opt: a must be nonzero");
    return snr * channel_inner(g, a) / (1.0 + snr * channel_norm2(g));
}

double computation_rate(Cvec g, const CoeffVector& a, double snr) {
    if (g.size() != a.size()) throw ConfigError("computation_rate: g and a dimensions differ");
    if (is_zero(a)) throw ConfigError("computation_rate: a must be nonzero");
    return rate_from_quad(quad_form(g, a, snr));
}

PruneResult prune_users(Cvec g, double snr, double sigma2, double p, PruneCriterion criterion) {
    if (snr <= 0.0) throw ConfigError("prune_users: snr must be > 0");
    const double alpha_ub = std::sqrt(snr);
    PruneResult pr;
    double pruned_power = 0.0;
    for (std::size_t l = 0; l < g.size(); ++l) {
        const bool keep = criterion == PruneCriterion::Magnitude
                              ? alpha_ub * std::abs(g[l]) >= 0.5
                              : !nearest_gauss(alpha_ub * g[l]).is_zero();
        if (keep)
            pr.active.push_back(static_cast<int>(l));
        else
            pruned_power += std::norm(g[l]);
    }
    pr.snr_eff = p / (sigma2 + pruned_power * p);
    return pr;
}

Equation best_coeff_search(Cvec g, double snr, const SearchOptions& opts, int ap_index) {
    opts.validate();
    const std::size_t len = g.size();
    if (len == 0 || channel_norm2(g) == 0.0)
        throw ConfigError("best_coeff_search: g must be nonzero");

    const double denom = 1.0 + snr * channel_norm2(g);

    Equation best;
    best.ap_index = ap_index;
    best.coeffs = unit_vector(len, strongest_user(g));
    double best_q = quad_form(g, best.coeffs, snr);

    // snr_eff only shapes the search region; rates are always evaluated on
    // the full channel at full SNR.
    const PruneResult pr = prune_users(g, snr, 1.0, snr, opts.criterion);

    if (!pr.active.empty()) {
        for (int l : pr.active) {
            const CoeffVector e = unit_vector(len, l);
            const double q = quad_form(g, e, snr);
            if (q < best_q) {
                best_q = q;
                best.coeffs = e;
            }
        }

        const double r_max = std::sqrt(pr.snr_eff);

        // One quantization-boundary crossing of round(r * e^{i theta} * g_l)
        // along the magnitude axis.
        struct Crossing {
            double r;
            int user;       // index into pr.active
            std::uint8_t part; // 0 = real, 1 = imag
            std::int8_t step;  // +1 or -1
        };
        std::vector<Crossing> events;
        CoeffVector cur(len);

        for (int k = 0; k < opts.phase_samples; ++k) {
            const double theta =
                (std::numbers::pi / 2.0) * static_cast<double>(k) / opts.phase_samples;
            const std::complex<double> rot{std::cos(theta), std::sin(theta)};

            events.clear();
            for (std::size_t ai = 0; ai < pr.active.size(); ++ai) {
                const std::complex<double> gl = rot * g[pr.active[ai]];
                const double comps[2] = {gl.real(), gl.imag()};
                for (int part = 0; part < 2; ++part) {
                    const double c = comps[part];
                    const double ac = std::abs(c);
                    if (ac == 0.0) continue;
                    const auto count = static_cast<std::int64_t>(std::floor(r_max * ac + 0.5));
                    for (std::int64_t j = 0; j < count; ++j) {
                        events.push_back({(static_cast<double>(j) + 0.5) / ac,
                                          static_cast<int>(ai), static_cast<std::uint8_t>(part),
                                          static_cast<std::int8_t>(c > 0.0 ? 1 : -1)});
                    }
                }
            }
            if (events.empty()) continue;
            std::sort(events.begin(), events.end(), [](const Crossing& a, const Crossing& b) {
                if (a.r != b.r) return a.r < b.r;
                if (a.user != b.user) return a.user < b.user;
                return a.part < b.part;
            });

            // Walk the cells between crossings, maintaining a, ||a||^2 and
            // g^H a incrementally; the vector is constant inside each cell.
            for (int l : pr.active) cur[l] = GaussInt{0, 0};
            std::int64_t na = 0;
            std::complex<double> ip{0.0, 0.0};

            for (std::size_t e = 0; e < events.size(); ++e) {
                const Crossing& ev = events[e];
                const int l = pr.active[ev.user];
                GaussInt& al = cur[l];
                const std::int64_t before = al.norm2();
                std::complex<double> delta;
                if (ev.part == 0) {
                    al.re += ev.step;
                    delta = {static_cast<double>(ev.step), 0.0};
                } else {
                    al.im += ev.step;
                    delta = {0.0, static_cast<double>(ev.step)};
                }
                na += al.norm2() - before;
                ip += std::conj(g[l]) * delta;

                // Evaluate once per cell, after the last event at this r.
                if (e + 1 < events.size() && events[e + 1].r == ev.r) continue;
                if (na == 0) continue;
                const double q = std::max(static_cast<double>(na) - snr * std::norm(ip) / denom,
                                          static_cast<double>(na) / denom);
                if (q < best_q) {
                    best_q = q;
                    best.coeffs = cur;
                }
            }
        }
    }

    best.rate = computation_rate(g, best.coeffs, snr);
    best.alpha = alpha_opt(g, best.coeffs, snr);
    return best;
}

namespace {

// Depth-first enumeration of Gaussian-integer vectors under a norm budget
// that tightens as better candidates appear. The first nonzero component
// is restricted to re > 0, im >= 0, one representative per unit class.
struct BruteForceState {
    Cvec g;
    double snr = 0.0;
    double denom = 0.0;
    std::vector<int> order;
    CoeffVector cur;
    CoeffVector best;
    double best_q = 0.0;
    std::uint64_t visited = 0;
    std::uint64_t cap = 0;

    double budget() const { return best_q * denom * (1.0 + 1e-12) + 1e-9; }

    void walk(std::size_t depth, std::int64_t pnorm, std::complex<double> ip, bool nonzero) {
        if (depth == order.size()) {
            if (!nonzero) return;
            if (++visited > cap)
                throw InfeasibleError("brute_force_best: candidate cap exceeded");
            const double q = std::max(static_cast<double>(pnorm) - snr * std::norm(ip) / denom,
                                      static_cast<double>(pnorm) / denom);
            if (q < best_q) {
                best_q = q;
                best = cur;
            }
            return;
        }
        const int l = order[depth];
        const std::complex<double> glc = std::conj(g[l]);
        const double rem = budget() - static_cast<double>(pnorm);
        if (rem < 0.0) return;
        const auto xmax = static_cast<std::int64_t>(std::floor(std::sqrt(rem)));
        const std::int64_t xmin = nonzero ? -xmax : 0;
        for (std::int64_t x = xmin; x <= xmax; ++x) {
            const double remx = budget() - static_cast<double>(pnorm + x * x);
            if (remx < 0.0) continue;
            const auto ymax = static_cast<std::int64_t>(std::floor(std::sqrt(remx)));
            std::int64_t ymin = -ymax;
            if (!nonzero) {
                // canonical first nonzero: re > 0 with im >= 0, or zero
                if (x == 0) {
                    cur[l] = GaussInt{0, 0};
                    walk(depth + 1, pnorm, ip, false);
                    continue;
                }
                ymin = 0;
            }
            for (std::int64_t y = ymin; y <= ymax; ++y) {
                cur[l] = GaussInt{x, y};
                walk(depth + 1, pnorm + x * x + y * y,
                     ip + glc * std::complex<double>(static_cast<double>(x),
                                                     static_cast<double>(y)),
                     true);
            }
        }
        cur[l] = GaussInt{0, 0};
    }
};

} // namespace

Equation brute_force_best(Cvec g, double snr, const BruteForceOptions& opts, int ap_index) {
    const std::size_t len = g.size();
    if (len == 0 || channel_norm2(g) == 0.0)
        throw ConfigError("brute_force_best: g must be nonzero");

    const double bound = 1.0 + snr * channel_norm2(g);
    // Lattice-point count of the ||a||^2 <= B ball, one complex dimension
    // at a time, with a boundary pad.
    double estimate = 1.0;
    for (std::size_t k = 1; k <= len; ++k)
        estimate *= std::numbers::pi * (bound + 4.0 * std::sqrt(bound) + 4.0) / static_cast<double>(k);
    if (estimate > static_cast<double>(opts.max_candidates))
        throw InfeasibleError("brute_force_best: candidate set too large for the cap");

    BruteForceState st;
    st.g = g;
    st.snr = snr;
    st.denom = bound;
    st.cur.assign(len, GaussInt{});
    st.cap = opts.max_candidates;
    st.order.resize(len);
    for (std::size_t l = 0; l < len; ++l) st.order[l] = static_cast<int>(l);
    std::sort(st.order.begin(), st.order.end(), [&](int a, int b) {
        const double ma = std::abs(g[a]), mb = std::abs(g[b]);
        if (ma != mb) return ma > mb;
        return a < b;
    });

    st.best = unit_vector(len, strongest_user(g));
    st.best_q = quad_form(g, st.best, snr);

    st.walk(0, 0, {0.0, 0.0}, false);

    Equation eq;
    eq.ap_index = ap_index;
    eq.coeffs = std::move(st.best);
    eq.rate = computation_rate(g, eq.coeffs, snr);
    eq.alpha = alpha_opt(g, eq.coeffs, snr);
    return eq;
}

} // namespace cfsim
