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

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace a2a
{

inline constexpr double speed_of_light = 299792458.0; // m/s
inline constexpr double pi = std::numbers::pi;

// Carrier frequency. The wavelength is always derived from the frequency.
class Carrier
{
public:
    explicit Carrier(double frequency_hz) : frequency_hz_(frequency_hz)
    {
        if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz))
            throw std::domain_error("Carrier: frequency must be positive and finite");
    }

    static Carrier from_ghz(double ghz) { return Carrier(ghz * 1.0e9); }

    double frequency() const { return frequency_hz_; }
    double wavelength() const { return speed_of_light / frequency_hz_; }

private:
    double frequency_hz_;
};

/*!
 * Transceiver heights and horizontal separation of an air-to-air link.
 *
 * Heights are measured above flat ground. The straight-line (LOS) distance
 * is derived, never stored, so it cannot drift from the three inputs.
 */
class LinkGeometry
{
public:
    LinkGeometry(double tx_height, double rx_height, double horizontal_distance)
        : tx_height_(tx_height), rx_height_(rx_height), distance_(horizontal_distance)
    {
        if (!(tx_height >= 0.0) || !(rx_height >= 0.0))
            throw std::domain_error("LinkGeometry: heights must be non-negative");
        if (!(horizontal_distance > 0.0))
            throw std::domain_error("LinkGeometry: horizontal distance must be positive");
        if (!std::isfinite(tx_height) || !std::isfinite(rx_height) || !std::isfinite(horizontal_distance))
            throw std::domain_error("LinkGeometry: values must be finite");
    }

    double tx_height() const { return tx_height_; }
    double rx_height() const { return rx_height_; }
    double horizontal_distance() const { return distance_; }

    double los_distance() const { return std::hypot(distance_, tx_height_ - rx_height_); }

    // Path length of the ray mirrored in the ground plane.
    double reflected_distance() const { return std::hypot(distance_, tx_height_ + rx_height_); }

private:
    double tx_height_;
    double rx_height_;
    double distance_;
};

// Radius of the n-th Fresnel zone at distances d1 and d2 from the two ends.
inline double fresnel_radius(int zone, double d1, double d2, double wavelength)
{
    if (zone < 1)
        throw std::domain_error("fresnel_radius: zone index must be >= 1");
    if (!(d1 > 0.0) || !(d2 > 0.0) || !(wavelength > 0.0))
        throw std::domain_error("fresnel_radius: d1, d2 and wavelength must be positive");
    return std::sqrt(zone * wavelength * d1 * d2 / (d1 + d2));
}

// Minor semi-axis of the n-th Fresnel ellipsoid (radius at mid-path).
inline double fresnel_max_radius(int zone, double los_distance, double wavelength)
{
    if (zone < 1)
        throw std::domain_error("fresnel_max_radius: zone index must be >= 1");
    if (!(los_distance >= 0.0) || !(wavelength > 0.0))
        throw std::domain_error("fresnel_max_radius: distance must be >= 0 and wavelength > 0");
    return std::sqrt(zone * wavelength * los_distance) / 2.0;
}

/*!
 * Area of the ground projection of the first Fresnel zone.
 *
 * Approximated as half an ellipse with the horizontal distance as major
 * extent: S = (pi d / 2) * r1max, where r1max uses the LOS distance.
 */
inline double fresnel_footprint_area(const LinkGeometry &geom, double wavelength)
{
    return pi * geom.horizontal_distance() / 2.0 * fresnel_max_radius(1, geom.los_distance(), wavelength);
}

/*!
 * Height of the direct ray above ground at normalised horizontal position s.
 *
 * s is measured from the receiver: s = 0 at the receiver, s = 1 at the
 * transmitter. A building of exactly this height just touches the ray.
 */
inline double critical_height(const LinkGeometry &geom, double s)
{
    if (!(s >= 0.0 && s <= 1.0))
        throw std::domain_error("critical_height: position must lie in [0, 1]");
    return s * geom.tx_height() + (1.0 - s) * geom.rx_height();
}

} // namespace a2a
