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

#include "a2a/antenna.hpp"
#include "a2a/baselines.hpp"
#include "a2a/environment.hpp"
#include "a2a/geometry.hpp"
#include "a2a/los.hpp"
#include "a2a/montecarlo.hpp"
#include "a2a/pathloss.hpp"
#include "a2a/random.hpp"
