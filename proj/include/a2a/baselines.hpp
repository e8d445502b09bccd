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

#include "a2a/pathloss.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace a2a
{

enum class BaselineKind
{
    umi_3gpp_los, // 3GPP TR 36.777 UMi LOS probability; no path-loss curve
    free_space,
    los_only
};

inline std::string_view to_string(BaselineKind kind)
{
    switch (kind)
    {
    case BaselineKind::umi_3gpp_los:
        return "3gpp-umi-los";
    case BaselineKind::free_space:
        return "free-space";
    case BaselineKind::los_only:
        return "los-only";
    }
    return "?";
}

inline BaselineKind parse_baseline_kind(std::string_view tag)
{
    if (tag == "3gpp-umi-los")
        return BaselineKind::umi_3gpp_los;
    if (tag == "free-space")
        return BaselineKind::free_space;
    if (tag == "los-only")
        return BaselineKind::los_only;
    throw std::invalid_argument("unknown baseline '" + std::string(tag) +
                                "' (expected 3gpp-umi-los, free-space or los-only)");
}

class UnsupportedModel : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr double umi_min_ue_height = 1.5;  // m
inline constexpr double umi_max_ue_height = 300.0; // m

// 3GPP UMi aerial-UE LOS probability at horizontal distance d and UE height h_r.
inline double plos_3gpp_umi(double distance, double ue_height)
{
    if (!(ue_height >= umi_min_ue_height && ue_height <= umi_max_ue_height))
        throw std::domain_error("plos_3gpp_umi: UE height must lie in [1.5, 300] m (3GPP aerial UE height limit is 300 m)");
    if (!(distance >= 0.0))
        throw std::domain_error("plos_3gpp_umi: distance must be non-negative");

    const double lg = std::log10(ue_height);
    const double d0 = std::max(18.0, 294.05 * lg - 432.94);
    const double p1 = 233.98 * lg - 0.95;
    if (distance <= d0)
        return 1.0;
    return d0 / distance + std::exp(-distance / p1) * (1.0 - d0 / distance);
}

// Reference path-loss curves. The 3GPP kind has no path-loss formula here.
inline double baseline_loss_db(BaselineKind kind, const LinkGeometry &geom, const Carrier &carrier, double gain,
                               const Environment &env, const PathLossOptions &options = {})
{
    switch (kind)
    {
    case BaselineKind::free_space:
        return friis_db(geom.los_distance(), carrier.wavelength(), gain);
    case BaselineKind::los_only:
        return blend_losses(1.0, two_ray_los_db(geom, carrier, gain, env, options), 0.0, options.blend);
    case BaselineKind::umi_3gpp_los:
        break;
    }
    throw UnsupportedModel("baseline_loss_db: no path-loss model for '" + std::string(to_string(kind)) +
                           "'; only its LOS probability is available");
}

} // namespace a2a
