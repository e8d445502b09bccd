// SPDX-License-Identifier: Apache-2.0
//
// a2a-pathloss: low-altitude air-to-air mmWave path loss modelling
// Copyright (C) 2026 The a2a-pathloss authors
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

#include "a2a/geometry.hpp"
#include "a2a/random.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace a2a
{

inline constexpr double deg_to_rad(double deg) { return deg * pi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / pi; }

/*!
 * Uniform linear array with Gaussian boresight wobble.
 *
 * Wobble standard deviations are in radians. `elements` defaults to 2, which
 * puts the main-lobe edge (1/N rad) near 28.6 deg; `gain_floor` is the linear
 * gain assumed outside the main lobe.
 */
struct AntennaConfig
{
    int elements = 2;
    double exponent = 2.0;
    double sigma_w_tx = 0.0;
    double sigma_w_rx = 0.0;
    double gain_floor = 1.0e-3;

    void validate() const
    {
        if (elements < 1)
            throw std::domain_error("AntennaConfig: element count must be >= 1");
        if (!(exponent > 0.0))
            throw std::domain_error("AntennaConfig: pattern exponent must be positive");
        if (!(sigma_w_tx >= 0.0) || !(sigma_w_rx >= 0.0))
            throw std::domain_error("AntennaConfig: wobble standard deviations must be >= 0");
        if (!(gain_floor > 0.0 && gain_floor <= 1.0))
            throw std::domain_error("AntennaConfig: gain floor must lie in (0, 1]");
    }

    static AntennaConfig symmetric(int elements, double sigma_w_rad)
    {
        AntennaConfig cfg;
        cfg.elements = elements;
        cfg.sigma_w_tx = sigma_w_rad;
        cfg.sigma_w_rx = sigma_w_rad;
        return cfg;
    }
};

inline bool in_main_lobe(double pointing_error, int elements)
{
    return std::abs(pointing_error) <= 1.0 / elements;
}

// Linear gain N cos((pi N / 2)(theta + theta_w))^m inside the main lobe, the floor elsewhere.
inline double ula_gain(double theta, double theta_w, const AntennaConfig &cfg)
{
    const double error = theta + theta_w;
    if (!in_main_lobe(error, cfg.elements))
        return cfg.gain_floor;
    const double n = static_cast<double>(cfg.elements);
    const double g = n * std::pow(std::cos(pi * n / 2.0 * error), cfg.exponent);
    return std::max(g, cfg.gain_floor);
}

struct PlfSample
{
    double plf_db;
    bool main_lobe; // both terminals inside their main lobes
};

// One path-loss-fluctuation draw for aligned beams: -10 log10(G_t G_r).
template <class Urbg>
PlfSample sample_plf(const AntennaConfig &cfg, Urbg &rng)
{
    const double wt = cfg.sigma_w_tx * standard_normal(rng);
    const double wr = cfg.sigma_w_rx * standard_normal(rng);
    const double g = ula_gain(0.0, wt, cfg) * ula_gain(0.0, wr, cfg);
    return {-10.0 * std::log10(g), in_main_lobe(wt, cfg.elements) && in_main_lobe(wr, cfg.elements)};
}

struct TailFit
{
    double c1 = std::numeric_limits<double>::quiet_NaN();
    double c2 = std::numeric_limits<double>::quiet_NaN();
    double r_squared = std::numeric_limits<double>::quiet_NaN();     // on CCDF values
    double log_r_squared = std::numeric_limits<double>::quiet_NaN(); // on ln CCDF, log-linear fit
    std::size_t points = 0;
};

/*!
 * Fit CCDF(x) ~ c1 exp(c2 x) to the upper half of a sorted sample.
 *
 * Uses up to `max_points` order statistics. A log-linear least-squares fit
 * seeds a Gauss-Newton refinement on the CCDF values themselves;
 * `r_squared` is the coefficient of determination of the refined curve and
 * `log_r_squared` that of the log-linear seed. Samples with fewer than 3
 * distinct points in the upper half yield NaN.
 */
inline TailFit exponential_tail_fit(std::span<const double> sorted, std::size_t max_points = 200)
{
    TailFit fit;
    const std::size_t n = sorted.size();
    if (n < 8)
        return fit;
    const std::size_t first = n / 2;
    const std::size_t last = n - 2; // CCDF at the maximum is zero
    const std::size_t span = last - first;
    const std::size_t count = std::min(max_points, span + 1);

    std::vector<double> xs, ccdf, logs;
    xs.reserve(count);
    ccdf.reserve(count);
    logs.reserve(count);
    std::size_t distinct = 0;
    for (std::size_t k = 0; k < count; ++k)
    {
        const std::size_t i = first + (count > 1 ? k * span / (count - 1) : 0);
        if (xs.empty() || sorted[i] != xs.back())
            ++distinct;
        xs.push_back(sorted[i]);
        ccdf.push_back(static_cast<double>(n - i - 1) / static_cast<double>(n));
        logs.push_back(std::log(ccdf.back()));
    }
    if (distinct < 3)
        return fit;

    const double cnt = static_cast<double>(count);
    double mx = 0, my = 0, mc = 0;
    for (std::size_t k = 0; k < count; ++k)
    {
        mx += xs[k];
        my += logs[k];
        mc += ccdf[k];
    }
    mx /= cnt;
    my /= cnt;
    mc /= cnt;
    double sxx = 0, sxy = 0, syy = 0, scc = 0;
    for (std::size_t k = 0; k < count; ++k)
    {
        sxx += (xs[k] - mx) * (xs[k] - mx);
        sxy += (xs[k] - mx) * (logs[k] - my);
        syy += (logs[k] - my) * (logs[k] - my);
        scc += (ccdf[k] - mc) * (ccdf[k] - mc);
    }
    if (!(sxx > 0.0) || !(syy > 0.0) || !(scc > 0.0))
        return fit;

    const double slope = sxy / sxx;
    double log_res = 0;
    for (std::size_t k = 0; k < count; ++k)
    {
        const double r = logs[k] - (my + slope * (xs[k] - mx));
        log_res += r * r;
    }
    fit.log_r_squared = 1.0 - log_res / syy;

    // Refine a exp(b u) on u = (x - mx) / scale; scaling keeps the normal equations conditioned.
    const double scale = std::sqrt(sxx / cnt);
    std::vector<double> us(count);
    for (std::size_t k = 0; k < count; ++k)
        us[k] = (xs[k] - mx) / scale;
    double a = std::exp(my), b = slope * scale;
    auto residual = [&](double aa, double bb)
    {
        double ss = 0;
        for (std::size_t k = 0; k < count; ++k)
        {
            const double r = ccdf[k] - aa * std::exp(bb * us[k]);
            ss += r * r;
        }
        return ss;
    };
    double ss = residual(a, b);
    for (int iter = 0; iter < 100; ++iter)
    {
        double j11 = 0, j12 = 0, j22 = 0, g1 = 0, g2 = 0;
        for (std::size_t k = 0; k < count; ++k)
        {
            const double e = std::exp(b * us[k]);
            const double r = ccdf[k] - a * e;
            const double da = e, db = a * us[k] * e;
            j11 += da * da;
            j12 += da * db;
            j22 += db * db;
            g1 += da * r;
            g2 += db * r;
        }
        const double det = j11 * j22 - j12 * j12;
        if (!(det > 0.0))
            break;
        double step_a = (j22 * g1 - j12 * g2) / det;
        double step_b = (j11 * g2 - j12 * g1) / det;
        double trial = residual(a + step_a, b + step_b);
        for (int halve = 0; halve < 30 && !(trial < ss); ++halve)
        {
            step_a *= 0.5;
            step_b *= 0.5;
            trial = residual(a + step_a, b + step_b);
        }
        if (!(trial < ss))
            break;
        const bool converged = ss - trial <= 1e-14 * ss;
        a += step_a;
        b += step_b;
        ss = trial;
        if (converged)
            break;
    }

    fit.c2 = b / scale;
    fit.c1 = a * std::exp(-b * mx / scale);
    fit.r_squared = 1.0 - ss / scc;
    fit.points = count;
    return fit;
}

inline constexpr std::size_t min_plf_trials = 10000;

struct PlfStatistics
{
    std::vector<double> samples;           // sorted ascending
    std::vector<double> main_lobe_samples; // sorted, both beams inside the main lobe
    double mean = 0.0;
    double sigma_f = 0.0;
    double sigma_f_standard_error = 0.0;
    TailFit tail_fit; // exponential screen on the main-lobe samples

    // Empirical CDF, fraction of samples <= x.
    double cdf(double x) const
    {
        if (samples.empty())
            return 0.0;
        const auto it = std::upper_bound(samples.begin(), samples.end(), x);
        return static_cast<double>(it - samples.begin()) / static_cast<double>(samples.size());
    }

    double quantile(double p) const
    {
        if (samples.empty())
            return std::numeric_limits<double>::quiet_NaN();
        p = std::clamp(p, 0.0, 1.0);
        const auto i = static_cast<std::size_t>(std::llround(p * static_cast<double>(samples.size() - 1)));
        return samples[i];
    }
};

/*!
 * Sample the path-loss fluctuation `trials` times and summarise it.
 *
 * Trial i draws from sub-stream substream_seed(seed, i), so the result does
 * not depend on `threads`. Throws std::invalid_argument below
 * min_plf_trials samples.
 */
inline PlfStatistics plf_statistics(const AntennaConfig &cfg, std::size_t trials, std::uint64_t seed,
                                    unsigned threads = 0)
{
    cfg.validate();
    if (trials < min_plf_trials)
        throw std::invalid_argument("plf_statistics: at least 10000 trials are required for a stable sigma_f estimate");

    std::vector<PlfSample> raw(trials);
    for_each_chunk(trials, 8192, threads, [&](std::size_t, std::size_t begin, std::size_t end)
                   {
                       for (std::size_t i = begin; i < end; ++i)
                       {
                           SplitMix64 rng(substream_seed(seed, i));
                           raw[i] = sample_plf(cfg, rng);
                       } });

    PlfStatistics out;
    out.samples.reserve(trials);
    RunningMoments moments;
    double m4 = 0.0;
    for (const auto &s : raw)
    {
        out.samples.push_back(s.plf_db);
        if (s.main_lobe)
            out.main_lobe_samples.push_back(s.plf_db);
        moments.add(s.plf_db);
    }
    for (const double x : out.samples)
    {
        const double dx = x - moments.mean;
        m4 += dx * dx * dx * dx;
    }
    m4 /= static_cast<double>(trials);

    std::sort(out.samples.begin(), out.samples.end());
    std::sort(out.main_lobe_samples.begin(), out.main_lobe_samples.end());
    out.mean = moments.mean;
    out.sigma_f = moments.stddev();

    // Delta-method standard error of the sample standard deviation.
    const double n = static_cast<double>(trials);
    const double var = moments.variance();
    if (out.sigma_f > 0.0)
    {
        const double var_of_var = std::max(0.0, (m4 - var * var * (n - 3.0) / (n - 1.0)) / n);
        out.sigma_f_standard_error = std::sqrt(var_of_var) / (2.0 * out.sigma_f);
    }
    out.tail_fit = exponential_tail_fit(out.main_lobe_samples);
    return out;
}

// Reference curve sigma_f = 18.7 exp(-((sigma - 27.7) / 11.1)^2), sigma in degrees.
inline double sigma_f_reference_fit(double sigma_deg)
{
    if (!(sigma_deg >= 0.0))
        throw std::domain_error("sigma_f_reference_fit: misalignment level must be >= 0");
    const double z = (sigma_deg - 27.7) / 11.1;
    return 18.7 * std::exp(-z * z);
}

} // namespace a2a
