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

#include "a2a/los.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace a2a;

namespace
{
const Carrier mmwave = Carrier::from_ghz(28.0);
const double grid_heights[] = {10.0, 30.0, 100.0};
const double grid_sigmas[] = {10.0, 20.0, 40.0};
} // namespace

TEST(SingleBuilding, FrozenValues)
{
    EXPECT_NEAR(plos_single_building(10.0, 30.0, 20.0), 0.3940719013, 1e-9);
    EXPECT_NEAR(plos_single_building(20.0, 20.0, 20.0), 0.3934693403, 1e-9);
}

TEST(SingleBuilding, MatchesPositionAverageOfRayleighCdf)
{
    for (double ht : grid_heights)
        for (double hr : grid_heights)
            for (double sigma : grid_sigmas)
                EXPECT_NEAR(plos_single_building(ht, hr, sigma), oracle::single_building_clear(ht, hr, sigma), 1e-10)
                    << ht << " " << hr << " " << sigma;
}

TEST(SingleBuilding, SymmetricInTerminals)
{
    for (double ht : grid_heights)
        for (double hr : grid_heights)
            EXPECT_EQ(plos_single_building(ht, hr, 20.0), plos_single_building(hr, ht, 20.0));
}

TEST(SingleBuilding, ContinuousAcrossEqualHeights)
{
    for (double h : grid_heights)
        for (double sigma : grid_sigmas)
            EXPECT_LT(std::abs(plos_single_building(h + 1e-6, h, sigma) - plos_single_building(h, h, sigma)), 1e-5);
}

TEST(SingleBuilding, BranchesAgreeNearTolerance)
{
    for (double h : grid_heights)
        for (double sigma : grid_sigmas)
        {
            const double dh = 1e-4;
            EXPECT_NEAR(plos_single_building_distinct_heights(h + dh, h, sigma),
                        plos_single_building_equal_heights(h + dh, h, sigma), 1e-8);
        }
}

TEST(SingleBuilding, MonotoneInHeightsAndSigma)
{
    double prev = 0.0;
    for (double h = 0.0; h <= 200.0; h += 5.0)
    {
        const double p = plos_single_building(h, 50.0, 20.0);
        EXPECT_GE(p, prev);
        prev = p;
    }
    prev = 1.0;
    for (double s = 1.0; s <= 80.0; s += 1.0)
    {
        const double p = plos_single_building(10.0, 100.0, s);
        EXPECT_LE(p, prev);
        prev = p;
    }
}

TEST(SingleBuilding, EdgeCases)
{
    EXPECT_EQ(plos_single_building(10.0, 100.0, 0.0), 1.0);
    EXPECT_EQ(plos_single_building(0.0, 0.0, 20.0), 0.0);
    EXPECT_THROW(plos_single_building(-1.0, 10.0, 20.0), std::domain_error);
    EXPECT_THROW(plos_single_building(10.0, 10.0, -1.0), std::domain_error);
}

TEST(LinkPlos, PowerOfSingleBuilding)
{
    const LinkGeometry g(50.0, 50.0, 500.0);
    const Environment env = Environment::urban();
    const double eb = expected_building_count(g, mmwave.wavelength(), env);
    EXPECT_NEAR(plos(g, env, mmwave), std::pow(plos_single_building(50.0, 50.0, 30.0), eb), 1e-15);
    EXPECT_EQ(plos(LosQuery{g, env, mmwave}), plos(g, env, mmwave));
}

TEST(LinkPlos, BoundsAndTrivialEnvironments)
{
    EXPECT_EQ(plos(LinkGeometry(10.0, 100.0, 500.0), Environment(0.0, 3e-3), mmwave), 1.0);
    EXPECT_EQ(plos(LinkGeometry(10.0, 100.0, 500.0), Environment(20.0, 0.0), mmwave), 1.0);
    EXPECT_EQ(plos(LinkGeometry(0.0, 0.0, 500.0), Environment(20.0, 0.0), mmwave), 1.0);
    for (double d = 10.0; d <= 1000.0; d += 10.0)
    {
        const double p = plos(LinkGeometry(10.0, 100.0, d), Environment::dense_urban(), mmwave);
        EXPECT_GE(p, 0.0);
        EXPECT_LE(p, 1.0);
    }
}

TEST(LinkPlos, DecreasesWithDistanceAndDensity)
{
    double prev = 1.0;
    for (double d = 10.0; d <= 1000.0; d += 10.0)
    {
        const double p = plos(LinkGeometry(10.0, 100.0, d), Environment(20.0, 3e-3), mmwave);
        EXPECT_LT(p, prev);
        prev = p;
    }
    const LinkGeometry g(10.0, 100.0, 400.0);
    EXPECT_GT(plos(g, Environment::suburban(), mmwave), plos(g, Environment::urban(), mmwave));
    EXPECT_GT(plos(g, Environment::urban(), mmwave), plos(g, Environment::dense_urban(), mmwave));
}

TEST(GroundReflection, ProductOfLegs)
{
    const LinkGeometry g(10.0, 100.0, 550.0);
    const Environment env = Environment::urban();
    const double leg_t = plos(LinkGeometry(10.0, 0.0, 50.0), env, mmwave);
    const double leg_r = plos(LinkGeometry(100.0, 0.0, 500.0), env, mmwave);
    EXPECT_NEAR(ground_reflection_probability(g, env, mmwave), leg_t * leg_r, 1e-15);
}

TEST(GroundReflection, BoundedByDirectPathAndEdgeCases)
{
    const Environment env = Environment::urban();
    for (double d = 50.0; d <= 1000.0; d += 50.0)
    {
        const LinkGeometry g(50.0, 50.0, d);
        const double pgr = ground_reflection_probability(g, env, mmwave);
        EXPECT_GE(pgr, 0.0);
        EXPECT_LE(pgr, plos(g, env, mmwave));
    }
    EXPECT_EQ(ground_reflection_probability(LinkGeometry(10.0, 100.0, 300.0), Environment(20.0, 0.0), mmwave), 1.0);
    EXPECT_THROW(ground_reflection_probability(LinkGeometry(0.0, 0.0, 300.0), env, mmwave), std::domain_error);
    EXPECT_NO_THROW(ground_reflection_probability(LinkGeometry(0.0, 20.0, 300.0), env, mmwave));
}
