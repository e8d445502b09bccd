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

#include "a2a/geometry.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace a2a;

namespace
{
const Carrier mmwave = Carrier::from_ghz(28.0);
}

TEST(Carrier, WavelengthAt28GHz)
{
    EXPECT_NEAR(mmwave.wavelength(), 0.0107068735, 1e-10);
    EXPECT_DOUBLE_EQ(mmwave.frequency(), 28.0e9);
}

TEST(Carrier, RejectsNonPositiveFrequency)
{
    EXPECT_THROW(Carrier(0.0), std::domain_error);
    EXPECT_THROW(Carrier(-1.0), std::domain_error);
}

TEST(LinkGeometry, Distances)
{
    const LinkGeometry g(10.0, 100.0, 300.0);
    EXPECT_DOUBLE_EQ(g.los_distance(), std::hypot(300.0, 90.0));
    EXPECT_DOUBLE_EQ(g.reflected_distance(), std::hypot(300.0, 110.0));
    EXPECT_GE(g.reflected_distance(), g.los_distance());
}

TEST(LinkGeometry, RejectsInvalidInputs)
{
    EXPECT_THROW(LinkGeometry(-1.0, 10.0, 100.0), std::domain_error);
    EXPECT_THROW(LinkGeometry(10.0, -1.0, 100.0), std::domain_error);
    EXPECT_THROW(LinkGeometry(10.0, 10.0, 0.0), std::domain_error);
    EXPECT_THROW(LinkGeometry(10.0, 10.0, std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST(Fresnel, RadiusMidpoint)
{
    EXPECT_NEAR(fresnel_radius(1, 150.0, 150.0, mmwave.wavelength()), 0.8961113282, 1e-9);
}

TEST(Fresnel, MaxRadiusMatchesMidpointRadius)
{
    const double lambda = mmwave.wavelength();
    EXPECT_NEAR(fresnel_max_radius(1, 300.0, lambda), 0.8961113282, 1e-9);
    EXPECT_NEAR(fresnel_max_radius(1, 300.0, lambda), fresnel_radius(1, 150.0, 150.0, lambda), 1e-12);
}

TEST(Fresnel, MaxRadiusScalesWithSquareRootOfDistance)
{
    const double lambda = mmwave.wavelength();
    EXPECT_NEAR(fresnel_max_radius(1, 75.0, lambda), 0.4480556641, 1e-9);
    EXPECT_NEAR(fresnel_max_radius(1, 300.0, lambda) / fresnel_max_radius(1, 75.0, lambda), 2.0, 1e-12);
    EXPECT_NEAR(fresnel_max_radius(4, 300.0, lambda) / fresnel_max_radius(1, 300.0, lambda), 2.0, 1e-12);
}

TEST(Fresnel, RadiusIsLargestAtMidpoint)
{
    const double lambda = mmwave.wavelength();
    const double mid = fresnel_radius(1, 150.0, 150.0, lambda);
    for (double d1 = 1.0; d1 < 300.0; d1 += 7.0)
        EXPECT_LE(fresnel_radius(1, d1, 300.0 - d1, lambda), mid + 1e-12);
}

TEST(Fresnel, MaxRadiusZeroDistance)
{
    EXPECT_EQ(fresnel_max_radius(1, 0.0, mmwave.wavelength()), 0.0);
}

TEST(Fresnel, RejectsInvalidInputs)
{
    EXPECT_THROW(fresnel_radius(0, 1.0, 1.0, 0.01), std::domain_error);
    EXPECT_THROW(fresnel_radius(1, 0.0, 1.0, 0.01), std::domain_error);
    EXPECT_THROW(fresnel_max_radius(1, -1.0, 0.01), std::domain_error);
    EXPECT_THROW(fresnel_max_radius(1, 1.0, 0.0), std::domain_error);
}

TEST(Footprint, HalfEllipseArea)
{
    const LinkGeometry g(50.0, 50.0, 500.0);
    EXPECT_NEAR(fresnel_footprint_area(g, mmwave.wavelength()), 908.6073040, 1e-6);
    const double r = fresnel_max_radius(1, g.los_distance(), mmwave.wavelength());
    EXPECT_NEAR(fresnel_footprint_area(g, mmwave.wavelength()), oracle::pi * 500.0 / 2.0 * r, 1e-9);
}

TEST(Footprint, GrowsWithDistance)
{
    double prev = 0.0;
    for (double d = 10.0; d <= 1000.0; d += 10.0)
    {
        const double s = fresnel_footprint_area(LinkGeometry(10.0, 100.0, d), mmwave.wavelength());
        EXPECT_GT(s, prev);
        prev = s;
    }
}

TEST(CriticalHeight, EndpointsAndLinearity)
{
    const LinkGeometry g(10.0, 100.0, 400.0);
    EXPECT_DOUBLE_EQ(critical_height(g, 0.0), 100.0);
    EXPECT_DOUBLE_EQ(critical_height(g, 1.0), 10.0);
    EXPECT_DOUBLE_EQ(critical_height(g, 0.5), 55.0);
    EXPECT_THROW(critical_height(g, -0.01), std::domain_error);
    EXPECT_THROW(critical_height(g, 1.01), std::domain_error);
}
