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

#include "a2a/baselines.hpp"

#include <gtest/gtest.h>

using namespace a2a;

TEST(Umi, FrozenValue)
{
    EXPECT_NEAR(plos_3gpp_umi(300.0, 100.0), 0.7711704592, 1e-9);
}

TEST(Umi, UnityInsideBreakpoint)
{
    EXPECT_EQ(plos_3gpp_umi(10.0, 100.0), 1.0);
    EXPECT_EQ(plos_3gpp_umi(18.0, 1.5), 1.0);
    // d0 = 294.05 log10(100) - 432.94 = 155.16 m
    EXPECT_EQ(plos_3gpp_umi(155.0, 100.0), 1.0);
    EXPECT_LT(plos_3gpp_umi(156.0, 100.0), 1.0);
}

TEST(Umi, DecreasingAndBounded)
{
    double prev = 1.0;
    for (double d = 160.0; d <= 5000.0; d += 20.0)
    {
        const double p = plos_3gpp_umi(d, 100.0);
        EXPECT_LT(p, prev);
        EXPECT_GT(p, 0.0);
        prev = p;
    }
}

TEST(Umi, HeightRange)
{
    EXPECT_THROW(plos_3gpp_umi(100.0, 1.0), std::domain_error);
    EXPECT_THROW(plos_3gpp_umi(100.0, 301.0), std::domain_error);
    EXPECT_NO_THROW(plos_3gpp_umi(100.0, 300.0));
    EXPECT_THROW(plos_3gpp_umi(-1.0, 100.0), std::domain_error);
}

TEST(Baselines, TagsRoundTrip)
{
    for (auto k : {BaselineKind::umi_3gpp_los, BaselineKind::free_space, BaselineKind::los_only})
        EXPECT_EQ(parse_baseline_kind(to_string(k)), k);
    EXPECT_THROW(parse_baseline_kind("itu"), std::invalid_argument);
}

TEST(Baselines, LossCurves)
{
    const Carrier c = Carrier::from_ghz(28.0);
    const LinkGeometry g(10.0, 100.0, 400.0);
    const Environment env = Environment::urban();
    EXPECT_EQ(baseline_loss_db(BaselineKind::free_space, g, c, 1.0, env), friis_db(g.los_distance(), c.wavelength()));
    EXPECT_EQ(baseline_loss_db(BaselineKind::los_only, g, c, 1.0, env), two_ray_los_db(g, c, 1.0, env));
    EXPECT_THROW(baseline_loss_db(BaselineKind::umi_3gpp_los, g, c, 1.0, env), UnsupportedModel);
}
