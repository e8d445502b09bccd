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

// Geometric simulation oracles. Buildings are zero-width vertical screens on
// the Tx-Rx ground line with uniform position and Rayleigh height; nothing
// here reuses the closed forms it is meant to check.

#pragma once

#include "a2a/antenna.hpp"
#include "a2a/environment.hpp"
#include "a2a/geometry.hpp"
#include "a2a/pathloss.hpp"
#include "a2a/random.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace a2a
{

enum class CountMode
{
    poisson,     // building count ~ Poisson(E(b))
    fixed_round  // building count = round(E(b))
};

inline std::string_view to_string(CountMode mode)
{
    return mode == CountMode::poisson ? "poisson" : "fixed-round";
}

inline CountMode parse_count_mode(std::string_view tag)
{
    if (tag == "poisson")
        return CountMode::poisson;
    if (tag == "fixed-round")
        return CountMode::fixed_round;
    throw std::invalid_argument("unknown count mode '" + std::string(tag) + "' (expected poisson or fixed-round)");
}

/*!
 * Monte Carlo settings. Trial i always draws from sub-stream
 * substream_seed(seed, i); `threads` only changes who computes which chunk,
 * so outputs are bit-identical for any thread count.
 */
struct McConfig
{
    std::size_t trials = 100000;
    std::uint64_t seed = 1;
    CountMode count_mode = CountMode::poisson;
    unsigned threads = 0;

    void validate() const
    {
        if (trials < 1)
            throw std::invalid_argument("McConfig: trials must be >= 1");
    }
};

struct Estimate
{
    double value = 0.0;
    double standard_error = 0.0;
    std::size_t trials = 0;
};

namespace detail
{
inline constexpr std::size_t mc_chunk = 4096;

// Mean of `trial(rng)` over the configured trials, reduced in chunk order.
template <class Trial>
Estimate mc_mean(const McConfig &mc, Trial &&trial)
{
    mc.validate();
    const std::size_t chunks = (mc.trials + mc_chunk - 1) / mc_chunk;
    std::vector<RunningMoments> partial(chunks);
    for_each_chunk(mc.trials, mc_chunk, mc.threads, [&](std::size_t c, std::size_t begin, std::size_t end)
                   {
                       RunningMoments m;
                       for (std::size_t i = begin; i < end; ++i)
                       {
                           SplitMix64 rng(substream_seed(mc.seed, i));
                           m.add(trial(rng));
                       }
                       partial[c] = m; });
    RunningMoments total;
    for (const auto &m : partial)
        total.merge(m);
    return {total.mean, total.standard_error(), mc.trials};
}

template <class Urbg>
std::uint64_t draw_count(Urbg &rng, double expected, CountMode mode)
{
    if (mode == CountMode::poisson)
        return poisson(rng, expected);
    const double n = std::round(expected);
    return n <= 0.0 ? 0 : static_cast<std::uint64_t>(n);
}

// Whether any of `count` random buildings reaches a ray rising linearly from
// `low` (position 0) to `high` (position 1).
template <class Urbg>
bool ray_blocked(Urbg &rng, std::uint64_t count, double low, double high, double sigma_h)
{
    bool blocked = false;
    for (std::uint64_t k = 0; k < count; ++k)
    {
        const double s = uniform_open01(rng);
        const double h = sample_height(rng, sigma_h);
        if (h >= low + s * (high - low))
            blocked = true;
    }
    return blocked;
}
} // namespace detail

// Oracle for the single-building LOS probability.
inline Estimate mc_plos_single_building(double tx_height, double rx_height, double sigma_h, const McConfig &mc)
{
    return detail::mc_mean(mc, [&](SplitMix64 &rng)
                           {
                               const double s = uniform_open01(rng);
                               const double h = sample_height(rng, sigma_h);
                               return h < s * tx_height + (1.0 - s) * rx_height ? 1.0 : 0.0; });
}

// Oracle for the link LOS probability with a random (or rounded) building count.
inline Estimate mc_plos(const LinkGeometry &geom, const Environment &env, const Carrier &carrier, const McConfig &mc)
{
    const double expected = expected_building_count(geom, carrier.wavelength(), env);
    return detail::mc_mean(mc, [&](SplitMix64 &rng)
                           {
                               const auto count = detail::draw_count(rng, expected, mc.count_mode);
                               const bool blocked = detail::ray_blocked(rng, count, geom.rx_height(), geom.tx_height(), env.sigma_h());
                               return blocked ? 0.0 : 1.0; });
}

// Oracle for the tail integral: mean of max(tallest - h_min, 0) over `count` Rayleigh heights.
inline Estimate mc_expected_max_height(int count, double sigma_h, double h_min, const McConfig &mc)
{
    if (count < 1)
        throw std::domain_error("mc_expected_max_height: building count must be >= 1");
    return detail::mc_mean(mc, [&](SplitMix64 &rng)
                           {
                               double tallest = 0.0;
                               for (int k = 0; k < count; ++k)
                                   tallest = std::max(tallest, sample_height(rng, sigma_h));
                               return std::max(tallest - h_min, 0.0); });
}

struct TotalLossSamples
{
    double mean_db = 0.0;
    double standard_error = 0.0;
    double los_fraction = 0.0;        // trials with a clear direct ray
    double reflection_fraction = 0.0; // clear direct ray and clear reflected ray
    std::vector<double> samples;      // per-trial loss in dB, trial order
};

/*!
 * End-to-end oracle for the blended path loss.
 *
 * Per trial, buildings are realised on the direct path (count from the link
 * footprint) and on each leg of the ground-reflected path (count from that
 * leg's footprint). A clear direct ray gives the two-ray loss with the
 * reflected ray either fully present or fully absent; a blocked ray gives
 * free space plus knife-edge loss over the blocker that rises highest above
 * the ray, with the exact Fresnel-Kirchhoff parameter for its position.
 */
inline TotalLossSamples mc_total_loss(const LinkGeometry &geom, const Environment &env, const Carrier &carrier,
                                      double gain, const McConfig &mc, const PathLossOptions &options = {})
{
    mc.validate();
    const double lambda = carrier.wavelength();
    const double d = geom.horizontal_distance();
    const double ht = geom.tx_height();
    const double hr = geom.rx_height();
    const double sigma = env.sigma_h();
    const double free_space = friis_db(geom.los_distance(), lambda, gain);
    const double direct_count = expected_building_count(geom, lambda, env);

    double tx_leg_count = 0.0, rx_leg_count = 0.0;
    if (ht + hr > 0.0)
    {
        const double dt = d * ht / (ht + hr);
        const double dr = d - dt;
        if (dt > 0.0)
            tx_leg_count = expected_building_count(LinkGeometry(ht, 0.0, dt), lambda, env);
        if (dr > 0.0)
            rx_leg_count = expected_building_count(LinkGeometry(hr, 0.0, dr), lambda, env);
    }

    TotalLossSamples out;
    out.samples.resize(mc.trials);
    std::vector<std::uint8_t> state(mc.trials); // 0 blocked, 1 LOS without reflection, 2 LOS with reflection

    for_each_chunk(mc.trials, detail::mc_chunk, mc.threads, [&](std::size_t, std::size_t begin, std::size_t end)
                   {
        for (std::size_t i = begin; i < end; ++i)
        {
            SplitMix64 rng(substream_seed(mc.seed, i));
            const auto count = detail::draw_count(rng, direct_count, mc.count_mode);

            // Highest excess over the direct ray; s measured from the receiver.
            double worst_excess = 0.0, worst_s = 0.5;
            bool blocked = false;
            for (std::uint64_t k = 0; k < count; ++k)
            {
                const double s = uniform_open01(rng);
                const double h = sample_height(rng, sigma);
                const double excess = h - (s * ht + (1.0 - s) * hr);
                if (excess >= 0.0 && (!blocked || excess > worst_excess))
                {
                    blocked = true;
                    worst_excess = excess;
                    worst_s = s;
                }
            }

            if (blocked)
            {
                const double d_rx = worst_s * d;
                const double d_tx = d - d_rx;
                const double v = worst_excess * std::sqrt(2.0 * d / (lambda * d_tx * d_rx));
                out.samples[i] = free_space + knife_edge_loss(v).loss_db;
                state[i] = 0;
                continue;
            }

            // Each leg rises from the ground point (0 m) to its terminal.
            const bool tx_leg_blocked = detail::ray_blocked(rng, detail::draw_count(rng, tx_leg_count, mc.count_mode), 0.0, ht, sigma);
            const bool rx_leg_blocked = detail::ray_blocked(rng, detail::draw_count(rng, rx_leg_count, mc.count_mode), 0.0, hr, sigma);
            const bool reflected = !tx_leg_blocked && !rx_leg_blocked;
            out.samples[i] = two_ray_loss(geom, carrier, gain, reflected ? 1.0 : 0.0, options).loss_db;
            state[i] = reflected ? 2 : 1;
        } });

    const std::size_t chunks = (mc.trials + detail::mc_chunk - 1) / detail::mc_chunk;
    RunningMoments total;
    std::size_t los = 0, refl = 0;
    for (std::size_t c = 0; c < chunks; ++c)
    {
        RunningMoments m;
        const std::size_t end = std::min(mc.trials, (c + 1) * detail::mc_chunk);
        for (std::size_t i = c * detail::mc_chunk; i < end; ++i)
            m.add(out.samples[i]);
        total.merge(m);
    }
    for (const auto s : state)
    {
        los += s != 0;
        refl += s == 2;
    }
    out.mean_db = total.mean;
    out.standard_error = total.standard_error();
    out.los_fraction = static_cast<double>(los) / static_cast<double>(mc.trials);
    out.reflection_fraction = static_cast<double>(refl) / static_cast<double>(mc.trials);
    return out;
}

// PLF oracle run with the Monte Carlo stream settings.
inline PlfStatistics mc_plf(const AntennaConfig &cfg, const McConfig &mc)
{
    return plf_statistics(cfg, mc.trials, mc.seed, mc.threads);
}

} // namespace a2a
