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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <thread>
#include <atomic>
#include <vector>

namespace a2a
{

// SplitMix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/*!
 * SplitMix64 generator, usable wherever a UniformRandomBitGenerator is expected.
 *
 * The n-th output is mix64(state0 + n * gamma), so a stream is fully
 * determined by its starting state. Sub-streams for parallel work are derived
 * with `substream_seed(seed, index)`; the derivation depends only on the
 * index, never on which thread consumes the stream.
 */
class SplitMix64
{
public:
    using result_type = std::uint64_t;

    explicit constexpr SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    constexpr result_type operator()()
    {
        state_ += golden_gamma;
        return mix64(state_);
    }

    static constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ULL;

private:
    std::uint64_t state_;
};

// Starting state of sub-stream `index` under master seed `seed`.
constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index)
{
    return mix64(mix64(seed) ^ mix64(index + 0x632BE59BD9B4E019ULL));
}

// Uniform draw on the open interval (0, 1) with 53 random bits.
template <class Urbg>
double uniform_open01(Urbg &rng)
{
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

// Standard normal draw (Box-Muller, one output per call, no cached state).
template <class Urbg>
double standard_normal(Urbg &rng)
{
    const double u1 = uniform_open01(rng);
    const double u2 = uniform_open01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

// Poisson draw by inversion of the CDF; adequate for the small means used here.
template <class Urbg>
std::uint64_t poisson(Urbg &rng, double mean)
{
    if (!(mean > 0.0))
        return 0;
    if (mean > 500.0)
    {
        // Normal approximation keeps the inversion loop bounded for huge means.
        const double x = std::round(mean + std::sqrt(mean) * standard_normal(rng));
        return x < 0.0 ? 0 : static_cast<std::uint64_t>(x);
    }
    const double u = uniform_open01(rng);
    double p = std::exp(-mean);
    double cdf = p;
    std::uint64_t k = 0;
    while (u > cdf && p > 0.0)
    {
        ++k;
        p *= mean / static_cast<double>(k);
        cdf += p;
    }
    return k;
}

/*!
 * Run `body(chunk_index, begin, end)` over [0, count) split into fixed-size
 * chunks, on `threads` workers (0 = hardware concurrency).
 *
 * Chunk boundaries depend only on `count` and `chunk_size`, so any reduction
 * the caller performs over chunk results in chunk order is bit-identical for
 * every thread count.
 */
template <class Body>
void for_each_chunk(std::size_t count, std::size_t chunk_size, unsigned threads, Body &&body)
{
    if (count == 0)
        return;
    chunk_size = std::max<std::size_t>(chunk_size, 1);
    const std::size_t chunks = (count + chunk_size - 1) / chunk_size;
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, chunks));

    auto run = [&](std::size_t c)
    {
        const std::size_t begin = c * chunk_size;
        body(c, begin, std::min(count, begin + chunk_size));
    };

    if (threads <= 1)
    {
        for (std::size_t c = 0; c < chunks; ++c)
            run(c);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&]
                          {
                              for (std::size_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1))
                                  run(c); });
}

// Welford accumulator; `merge` uses the pairwise update so merged results
// depend only on the order of merges.
struct RunningMoments
{
    std::uint64_t count = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x)
    {
        ++count;
        const double delta = x - mean;
        mean += delta / static_cast<double>(count);
        m2 += delta * (x - mean);
    }

    void merge(const RunningMoments &other)
    {
        if (other.count == 0)
            return;
        if (count == 0)
        {
            *this = other;
            return;
        }
        const double n_a = static_cast<double>(count);
        const double n_b = static_cast<double>(other.count);
        const double n = n_a + n_b;
        const double delta = other.mean - mean;
        mean += delta * n_b / n;
        m2 += other.m2 + delta * delta * n_a * n_b / n;
        count += other.count;
    }

    double variance() const { return count > 1 ? m2 / static_cast<double>(count - 1) : 0.0; }
    double stddev() const { return std::sqrt(variance()); }
    double standard_error() const { return count > 0 ? std::sqrt(variance() / static_cast<double>(count)) : 0.0; }
};

} // namespace a2a
