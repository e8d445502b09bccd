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

#include "a2a/pathloss.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace a2a;

namespace
{
const Carrier mmwave = Carrier::from_ghz(28.0);
}

TEST(Friis, FrozenValueAndGain)
{
    EXPECT_NEAR(friis_db(100.0, mmwave.wavelength()), 101.3909438, 1e-6);
    EXPECT_NEAR(friis_db(100.0, mmwave.wavelength()), oracle::friis_db(100.0, 28e9), 1e-9);
    EXPECT_NEAR(friis_db(200.0, mmwave.wavelength()) - friis_db(100.0, mmwave.wavelength()), 20.0 * std::log10(2.0),
                1e-12);
    EXPECT_NEAR(friis_db(100.0, mmwave.wavelength(), 10.0), 101.3909438 - 10.0, 1e-6);
    EXPECT_THROW(friis_db(0.0, mmwave.wavelength()), std::domain_error);
    EXPECT_THROW(friis_db(1.0, mmwave.wavelength(), 0.0), std::domain_error);
}

TEST(TwoRay, PhaseDifferenceMatchesPathLengths)
{
    for (double d : {10.0, 100.0, 1000.0})
    {
        const LinkGeometry g(10.0, 100.0, d);
        const long double excess = std::hypot((long double)d, 110.0L) - std::hypot((long double)d, 90.0L);
        EXPECT_NEAR(two_ray_phase_difference(g, mmwave.wavelength()),
                    static_cast<double>(2.0L * oracle::pi * excess / mmwave.wavelength()), 1e-7);
    }
}

TEST(TwoRay, MatchesComplexPhasorSum)
{
    for (double d = 20.0; d <= 1000.0; d += 37.0)
        for (double p : {0.0, 0.3, 0.8})
        {
            const LinkGeometry g(10.0, 100.0, d);
            EXPECT_NEAR(two_ray_loss(g, mmwave, 1.0, p).loss_db, oracle::two_ray_loss_db(10.0, 100.0, d, 28e9, p), 1e-5)
                << d << " " << p;
        }
}

TEST(TwoRay, NoReflectionIsFreeSpace)
{
    const LinkGeometry g(50.0, 50.0, 400.0);
    EXPECT_NEAR(two_ray_loss(g, mmwave, 1.0, 0.0).loss_db, friis_db(g.los_distance(), mmwave.wavelength()), 1e-12);
    PathLossOptions opt;
    opt.reflection_coefficient = 0.0;
    EXPECT_NEAR(two_ray_loss(g, mmwave, 1.0, 1.0, opt).loss_db, friis_db(g.los_distance(), mmwave.wavelength()), 1e-12);
}

TEST(TwoRay, ExcursionBounds)
{
    // |1 - a e^{j phi}| lies in [1 - a, 1 + a].
    for (double d = 10.0; d <= 1000.0; d += 10.0)
    {
        const LinkGeometry g(10.0, 100.0, d);
        const double fs = friis_db(g.los_distance(), mmwave.wavelength());
        const double l = two_ray_loss(g, mmwave, 1.0, 0.5).loss_db;
        EXPECT_GE(l, fs - 20.0 * std::log10(1.5) - 1e-9);
        EXPECT_LE(l, fs - 20.0 * std::log10(0.5) + 1e-9);
    }
}

TEST(TwoRay, CeilingClampsAndFlags)
{
    PathLossOptions opt;
    opt.loss_ceiling_db = 90.0;
    const auto r = two_ray_loss(LinkGeometry(10.0, 100.0, 500.0), mmwave, 1.0, 1.0, opt);
    EXPECT_TRUE(r.clamped);
    EXPECT_EQ(r.loss_db, 90.0);
}

TEST(Diffraction, Parameter)
{
    EXPECT_NEAR(diffraction_parameter(10.0, 500.0, mmwave.wavelength()), 12.22443106, 1e-7);
    EXPECT_EQ(diffraction_parameter(0.0, 500.0, mmwave.wavelength()), 0.0);
    EXPECT_LT(diffraction_parameter(-5.0, 500.0, mmwave.wavelength()), 0.0);
    EXPECT_THROW(diffraction_parameter(1.0, 0.0, mmwave.wavelength()), std::domain_error);
}

TEST(KnifeEdge, ReferenceValues)
{
    EXPECT_NEAR(ked_loss_db(-0.78), 0.004038, 1e-5);
    EXPECT_NEAR(ked_loss_db(0.0), 6.032852, 1e-6);
    EXPECT_NEAR(ked_loss_db(1.0), 13.925729, 1e-6);
}

TEST(KnifeEdge, OutOfDomainIsZeroAndFlagged)
{
    const auto r = knife_edge_loss(-0.79);
    EXPECT_TRUE(r.out_of_domain);
    EXPECT_EQ(r.loss_db, 0.0);
    EXPECT_FALSE(knife_edge_loss(-0.78).out_of_domain);
}

TEST(KnifeEdge, MonotoneIncreasing)
{
    double prev = ked_loss_db(-0.78);
    for (double v = -0.7; v <= 20.0; v += 0.1)
    {
        const double l = ked_loss_db(v);
        EXPECT_GT(l, prev);
        prev = l;
    }
}

TEST(ObstacleHeight, ExpectedTallestMinusMidRay)
{
    const LinkGeometry g(10.0, 100.0, 500.0);
    const Environment env(20.0, 3e-3);
    EXPECT_NEAR(expected_obstacle_height(g, env, 3), expected_max_height(3, 20.0, 10.0) - 55.0, 1e-12);
    EXPECT_LT(expected_obstacle_height(g, Environment(10.0, 3e-3), 3), 0.0);
}

TEST(Nlos, FreeSpacePlusDiffraction)
{
    const LinkGeometry g(10.0, 20.0, 800.0);
    const Environment env = Environment::dense_urban();
    const auto n = nlos_loss(g, env, mmwave, 1.0);
    const double fs = friis_db(g.los_distance(), mmwave.wavelength());
    EXPECT_FALSE(n.ked_out_of_domain);
    EXPECT_GT(n.loss_db, fs + 6.0);
    EXPECT_NEAR(n.loss_db, fs + ked_loss_db(n.diffraction_parameter), 1e-12);
    EXPECT_EQ(n.n_buildings, discrete_building_count(expected_building_count(g, mmwave.wavelength(), env)));
}

TEST(Nlos, RayAboveExpectedTallestGivesFreeSpace)
{
    const LinkGeometry g(10.0, 100.0, 500.0);
    const auto n = nlos_loss(g, Environment(10.0, 3e-3), mmwave, 1.0);
    EXPECT_TRUE(n.ked_out_of_domain);
    EXPECT_EQ(n.loss_db, friis_db(g.los_distance(), mmwave.wavelength()));
}

TEST(Nlos, NeverBelowFreeSpace)
{
    for (double d = 10.0; d <= 1000.0; d += 30.0)
        for (const auto &env : {Environment::suburban(), Environment::urban(), Environment::dense_urban()})
        {
            const LinkGeometry g(20.0, 30.0, d);
            EXPECT_GE(nlos_loss_db(g, env, mmwave, 1.0), friis_db(g.los_distance(), mmwave.wavelength()));
        }
}

TEST(Blend, EndpointsAndConvexity)
{
    EXPECT_EQ(blend_losses(1.0, 100.0, 130.0, BlendDomain::decibel), 100.0);
    EXPECT_EQ(blend_losses(0.0, 100.0, 130.0, BlendDomain::decibel), 130.0);
    EXPECT_EQ(blend_losses(1.0, 100.0, 130.0, BlendDomain::linear), 100.0);
    EXPECT_EQ(blend_losses(0.0, 100.0, 130.0, BlendDomain::linear), 130.0);
    EXPECT_DOUBLE_EQ(blend_losses(0.25, 100.0, 120.0, BlendDomain::decibel), 115.0);
    const double lin = blend_losses(0.5, 100.0, 120.0, BlendDomain::linear);
    EXPECT_NEAR(lin, -10.0 * std::log10(0.5e-10 + 0.5e-12), 1e-9);
    EXPECT_LT(lin, blend_losses(0.5, 100.0, 120.0, BlendDomain::decibel));
}

TEST(TotalLoss, ComponentsAreConsistent)
{
    const LinkGeometry g(10.0, 100.0, 700.0);
    const Environment env = Environment::urban();
    const auto b = total_loss(g, env, mmwave);
    EXPECT_EQ(b.p_los, plos(g, env, mmwave));
    EXPECT_EQ(b.pl_los_db, two_ray_los_db(g, mmwave, 1.0, env));
    EXPECT_EQ(b.pl_nlos_db, nlos_loss_db(g, env, mmwave, 1.0));
    EXPECT_NEAR(b.total_db, b.p_los * b.pl_los_db + (1.0 - b.p_los) * b.pl_nlos_db, 1e-12);
    EXPECT_GE(b.total_db, std::min(b.pl_los_db, b.pl_nlos_db));
    EXPECT_LE(b.total_db, std::max(b.pl_los_db, b.pl_nlos_db));
}

TEST(TotalLoss, NoBuildingsIsTwoRayWithFullReflection)
{
    const LinkGeometry g(10.0, 100.0, 700.0);
    const auto b = total_loss(g, Environment(20.0, 0.0), mmwave);
    EXPECT_EQ(b.p_los, 1.0);
    EXPECT_EQ(b.ground_reflection_probability, 1.0);
    EXPECT_EQ(b.total_db, two_ray_loss(g, mmwave, 1.0, 1.0).loss_db);
}

TEST(Nlos, NonDecreasingInHeightSpreadAndDensity)
{
    const LinkGeometry g(10.0, 20.0, 800.0);
    double prev = 0.0;
    for (double sigma = 5.0; sigma <= 60.0; sigma += 5.0)
    {
        const double l = nlos_loss_db(g, Environment(sigma, 3e-3), mmwave, 1.0);
        EXPECT_GE(l, prev) << sigma;
        prev = l;
    }
    prev = 0.0;
    for (double beta = 1e-3; beta <= 8e-3; beta += 1e-3)
    {
        const double l = nlos_loss_db(g, Environment(30.0, beta), mmwave, 1.0);
        EXPECT_GE(l, prev) << beta;
        prev = l;
    }
}
