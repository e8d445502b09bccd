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
#include "a2a/los.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace a2a
{

enum class BlendDomain
{
    decibel, // convex blend of the two losses in dB (default)
    linear   // blend of received-power fractions, converted back to a loss in dB
};

struct PathLossOptions
{
    double reflection_coefficient = 1.0;
    double loss_ceiling_db = 300.0; // applied when the two-ray sum hits an interference null
    BlendDomain blend = BlendDomain::decibel;
    OrderStatisticForm order_statistic = OrderStatisticForm::corrected;
};

struct PathLossBreakdown
{
    double p_los = 1.0;
    double pl_los_db = 0.0;
    double pl_nlos_db = 0.0;
    double total_db = 0.0;
    int n_buildings = 1;              // discrete count fed to the order statistics
    double e_obstacle_height = 0.0;   // m, may be negative (ray clears the expected tallest building)
    double diffraction_parameter = 0.0;
    double ground_reflection_probability = 0.0;
    bool los_clamped = false;         // two-ray loss hit the ceiling
    bool ked_out_of_domain = false;   // v < -0.78, diffraction loss set to 0 dB
};

inline double to_db(double linear) { return 10.0 * std::log10(linear); }
inline double from_db(double db) { return std::pow(10.0, db / 10.0); }

// Free-space loss, 20 log10(4 pi d / lambda) - 10 log10(G).
inline double friis_db(double los_distance, double wavelength, double gain = 1.0)
{
    if (!(los_distance > 0.0))
        throw std::domain_error("friis_db: distance must be positive");
    if (!(wavelength > 0.0))
        throw std::domain_error("friis_db: wavelength must be positive");
    if (!(gain > 0.0))
        throw std::domain_error("friis_db: gain must be positive");
    return 20.0 * std::log10(4.0 * pi * los_distance / wavelength) - 10.0 * std::log10(gain);
}

// Phase of the ground-reflected ray relative to the direct ray, in radians.
inline double two_ray_phase_difference(const LinkGeometry &geom, double wavelength)
{
    // r_refl - r_los = 4 h_t h_r / (r_refl + r_los), without the cancellation.
    const double excess = 4.0 * geom.tx_height() * geom.rx_height() /
                          (geom.reflected_distance() + geom.los_distance());
    return 2.0 * pi / wavelength * excess;
}

struct TwoRayLoss
{
    double loss_db;
    bool clamped;
};

/*!
 * Two-ray loss for a given reflection weight `p_reflect` (probability the
 * reflected ray is clear, or a 0/1 realisation of it):
 *
 *   -10 log10( G (lambda / 4 pi d_los)^2 |1 - p_reflect Gamma e^{j dphi}|^2 )
 *
 * An exact null is clamped to `options.loss_ceiling_db` and flagged.
 */
inline TwoRayLoss two_ray_loss(const LinkGeometry &geom, const Carrier &carrier, double gain, double p_reflect,
                               const PathLossOptions &options = {})
{
    const double lambda = carrier.wavelength();
    const double free_space = friis_db(geom.los_distance(), lambda, gain);
    const double a = p_reflect * options.reflection_coefficient;
    const double phase = two_ray_phase_difference(geom, lambda);
    const double magnitude2 = std::max(0.0, 1.0 - 2.0 * a * std::cos(phase) + a * a);
    if (magnitude2 == 0.0)
        return {options.loss_ceiling_db, true};
    const double loss = free_space - to_db(magnitude2);
    if (loss > options.loss_ceiling_db)
        return {options.loss_ceiling_db, true};
    return {loss, false};
}

// Probabilistic two-ray LOS loss; the reflected ray is weighted by P_GR.
inline double two_ray_los_db(const LinkGeometry &geom, const Carrier &carrier, double gain, const Environment &env,
                             const PathLossOptions &options = {})
{
    return two_ray_loss(geom, carrier, gain, ground_reflection_probability(geom, env, carrier), options).loss_db;
}

// Lower bound of the Fresnel-Kirchhoff parameter, v = h sqrt(8 / (lambda d)).
inline double diffraction_parameter(double obstacle_height, double distance, double wavelength)
{
    if (!(distance > 0.0) || !(wavelength > 0.0))
        throw std::domain_error("diffraction_parameter: distance and wavelength must be positive");
    return obstacle_height * std::sqrt(8.0 / (wavelength * distance));
}

inline constexpr double ked_min_parameter = -0.78;

struct KnifeEdgeLoss
{
    double loss_db;
    bool out_of_domain;
};

// Single knife-edge loss 6.9 + 20 log10(sqrt((v-0.1)^2 + 1) + v - 0.1), valid for v >= -0.78.
inline KnifeEdgeLoss knife_edge_loss(double v)
{
    if (v < ked_min_parameter)
        return {0.0, true};
    const double w = v - 0.1;
    return {6.9 + 20.0 * std::log10(std::sqrt(w * w + 1.0) + w), false};
}

inline double ked_loss_db(double v) { return knife_edge_loss(v).loss_db; }

/*!
 * Expected height of the tallest building above the direct ray:
 *   E(h) = E(h_b^max) - h_r/2 - h_t/2,
 * with E(h_b^max) the tail integral from min(h_t, h_r). Negative values mean
 * the ray clears the expected tallest building.
 */
inline double expected_obstacle_height(const LinkGeometry &geom, const Environment &env, int building_count,
                                       OrderStatisticForm form = OrderStatisticForm::corrected)
{
    const double lower = std::min(geom.tx_height(), geom.rx_height());
    return expected_max_height(building_count, env.sigma_h(), lower, form) -
           0.5 * geom.rx_height() - 0.5 * geom.tx_height();
}

struct NlosLoss
{
    double loss_db;
    int n_buildings;
    double obstacle_height;
    double diffraction_parameter;
    bool ked_out_of_domain;
};

// Free-space loss plus knife-edge diffraction over the expected tallest building.
inline NlosLoss nlos_loss(const LinkGeometry &geom, const Environment &env, const Carrier &carrier, double gain,
                          const PathLossOptions &options = {})
{
    const double lambda = carrier.wavelength();
    const int count = discrete_building_count(expected_building_count(geom, lambda, env));
    const double h = expected_obstacle_height(geom, env, count, options.order_statistic);
    const double v = diffraction_parameter(h, geom.horizontal_distance(), lambda);
    const KnifeEdgeLoss ked = knife_edge_loss(v);
    return {friis_db(geom.los_distance(), lambda, gain) + ked.loss_db, count, h, v, ked.out_of_domain};
}

inline double nlos_loss_db(const LinkGeometry &geom, const Environment &env, const Carrier &carrier, double gain,
                           const PathLossOptions &options = {})
{
    return nlos_loss(geom, env, carrier, gain, options).loss_db;
}

inline double blend_losses(double p_los, double los_db, double nlos_db, BlendDomain domain)
{
    if (p_los >= 1.0)
        return los_db;
    if (p_los <= 0.0)
        return nlos_db;
    if (domain == BlendDomain::decibel)
        return p_los * los_db + (1.0 - p_los) * nlos_db;
    return -to_db(p_los * from_db(-los_db) + (1.0 - p_los) * from_db(-nlos_db));
}

// LOS-probability-weighted total path loss with its components.
inline PathLossBreakdown total_loss(const LinkGeometry &geom, const Environment &env, const Carrier &carrier,
                                    double gain = 1.0, const PathLossOptions &options = {})
{
    PathLossBreakdown out;
    out.p_los = plos(geom, env, carrier);
    out.ground_reflection_probability = ground_reflection_probability(geom, env, carrier);

    const TwoRayLoss los = two_ray_loss(geom, carrier, gain, out.ground_reflection_probability, options);
    out.pl_los_db = los.loss_db;
    out.los_clamped = los.clamped;

    const NlosLoss nlos = nlos_loss(geom, env, carrier, gain, options);
    out.pl_nlos_db = nlos.loss_db;
    out.n_buildings = nlos.n_buildings;
    out.e_obstacle_height = nlos.obstacle_height;
    out.diffraction_parameter = nlos.diffraction_parameter;
    out.ked_out_of_domain = nlos.ked_out_of_domain;

    out.total_db = blend_losses(out.p_los, out.pl_los_db, out.pl_nlos_db, options.blend);
    return out;
}

} // namespace a2a
