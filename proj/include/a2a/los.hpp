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

#include "a2a/environment.hpp"
#include "a2a/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace a2a
{

struct LosQuery
{
    LinkGeometry geom;
    Environment env;
    Carrier carrier;
};

// Below this height difference the equal-height form is used (avoids 0/0).
inline constexpr double equal_height_tolerance = 1.0e-9; // m

// Equal-height form, 1 - exp(-H^2 / (2 sigma_h^2)) with H the mean terminal height.
inline double plos_single_building_equal_heights(double tx_height, double rx_height, double sigma_h)
{
    const double h = 0.5 * (tx_height + rx_height);
    return -std::expm1(-h * h / (2.0 * sigma_h * sigma_h));
}

// Distinct-height form, 1 - sqrt(pi/2) sigma_h (erf(h_t/(sqrt2 sigma_h)) - erf(h_r/(sqrt2 sigma_h))) / (h_t - h_r).
inline double plos_single_building_distinct_heights(double tx_height, double rx_height, double sigma_h)
{
    const double scale = std::sqrt(2.0) * sigma_h;
    // Order the difference so the result is bit-identical under swapping.
    const double hi = std::max(tx_height, rx_height);
    const double lo = std::min(tx_height, rx_height);
    const double slope = (std::erf(hi / scale) - std::erf(lo / scale)) / (hi - lo);
    return 1.0 - std::sqrt(pi / 2.0) * sigma_h * slope;
}

/*!
 * Probability that a single building, placed uniformly along the link and
 * with Rayleigh height, stays below the direct ray.
 *
 * This is the Rayleigh CDF of the ray height averaged over the building
 * position. The distinct-height form tends to the equal-height form as
 * h_t -> h_r; below `equal_height_tolerance` the latter is used directly.
 */
inline double plos_single_building(double tx_height, double rx_height, double sigma_h)
{
    if (!(tx_height >= 0.0) || !(rx_height >= 0.0))
        throw std::domain_error("plos_single_building: heights must be non-negative");
    if (!(sigma_h >= 0.0))
        throw std::domain_error("plos_single_building: sigma_h must be non-negative");
    if (sigma_h == 0.0)
        return 1.0;

    const double p = std::abs(tx_height - rx_height) < equal_height_tolerance
                         ? plos_single_building_equal_heights(tx_height, rx_height, sigma_h)
                         : plos_single_building_distinct_heights(tx_height, rx_height, sigma_h);
    return std::clamp(p, 0.0, 1.0);
}

// LOS probability of the link: single-building probability raised to the
// (real-valued) expected building count E(b). No buildings means LOS.
inline double plos(const LosQuery &query)
{
    const double expected = expected_building_count(query.geom, query.carrier.wavelength(), query.env);
    if (expected == 0.0)
        return 1.0;
    const double single = plos_single_building(query.geom.tx_height(), query.geom.rx_height(), query.env.sigma_h());
    return std::pow(single, expected);
}

inline double plos(const LinkGeometry &geom, const Environment &env, const Carrier &carrier)
{
    return plos(LosQuery{geom, env, carrier});
}

/*!
 * Probability that the ground-reflected ray is unobstructed.
 *
 * The specular point splits the horizontal distance into d_t = d h_t/(h_t+h_r)
 * and d_r = d h_r/(h_t+h_r). Each leg is a link from one terminal down to a
 * ground-level point and gets its own footprint and expected building count.
 * A zero-length leg (terminal on the ground) is always clear.
 */
inline double ground_reflection_probability(const LinkGeometry &geom, const Environment &env, const Carrier &carrier)
{
    const double ht = geom.tx_height();
    const double hr = geom.rx_height();
    if (!(ht + hr > 0.0))
        throw std::domain_error("ground_reflection_probability: both terminals on the ground, reflection point undefined");

    const double d = geom.horizontal_distance();
    auto leg = [&](double height, double run)
    {
        if (!(run > 0.0))
            return 1.0;
        return plos(LinkGeometry(height, 0.0, run), env, carrier);
    };
    return leg(ht, d * ht / (ht + hr)) * leg(hr, d * hr / (ht + hr));
}

} // namespace a2a
