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

#include "a2a/geometry.hpp"
#include "a2a/random.hpp"

#include <array>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/math/quadrature/exp_sinh.hpp>

namespace a2a
{

/*!
 * Statistical description of a built-up area.
 *
 * Building heights are Rayleigh distributed with scale `sigma_h` (m) and
 * buildings occur with area density `beta_h`. The density is taken per
 * square metre: the reference values (2..4 x 1e-3) correspond to roughly
 * 2000..4000 buildings per km^2. Read per km^2 they would leave every link
 * clear.
 */
class Environment
{
public:
    Environment(double sigma_h, double beta_h, std::string label = {})
        : sigma_h_(sigma_h), beta_h_(beta_h), label_(std::move(label))
    {
        if (!(sigma_h >= 0.0) || !std::isfinite(sigma_h))
            throw std::domain_error("Environment: sigma_h must be finite and >= 0");
        if (!(beta_h >= 0.0) || !std::isfinite(beta_h))
            throw std::domain_error("Environment: beta_h must be finite and >= 0");
    }

    static Environment suburban() { return {20.0, 2.0e-3, "suburban"}; }
    static Environment urban() { return {30.0, 3.0e-3, "urban"}; }
    static Environment dense_urban() { return {40.0, 4.0e-3, "dense-urban"}; }

    static constexpr std::array<std::string_view, 3> preset_names{"suburban", "urban", "dense-urban"};

    static Environment preset(std::string_view name)
    {
        if (name == "suburban")
            return suburban();
        if (name == "urban")
            return urban();
        if (name == "dense-urban")
            return dense_urban();
        throw std::invalid_argument("unknown environment preset '" + std::string(name) +
                                    "' (expected suburban, urban or dense-urban)");
    }

    double sigma_h() const { return sigma_h_; }
    double beta_h() const { return beta_h_; }
    const std::string &label() const { return label_; }

private:
    double sigma_h_;
    double beta_h_;
    std::string label_;
};

// Rayleigh building-height density.
inline double height_pdf(double height, double sigma_h)
{
    if (!(sigma_h > 0.0))
        throw std::domain_error("height_pdf: sigma_h must be positive (sigma_h = 0 is a point mass at 0)");
    if (height < 0.0)
        return 0.0;
    const double s2 = sigma_h * sigma_h;
    return height / s2 * std::exp(-height * height / (2.0 * s2));
}

inline double height_cdf(double height, double sigma_h)
{
    if (sigma_h == 0.0)
        return height >= 0.0 ? 1.0 : 0.0;
    if (height <= 0.0)
        return 0.0;
    return -std::expm1(-height * height / (2.0 * sigma_h * sigma_h));
}

inline double mean_height(double sigma_h)
{
    if (sigma_h < 0.0)
        throw std::domain_error("mean_height: sigma_h must be >= 0");
    return std::sqrt(2.0 * pi) / 2.0 * sigma_h;
}

// Rayleigh draw by inversion.
template <class Urbg>
double sample_height(Urbg &rng, double sigma_h)
{
    if (sigma_h == 0.0)
        return 0.0;
    return sigma_h * std::sqrt(-2.0 * std::log(uniform_open01(rng)));
}

// Mean number of buildings inside the first-Fresnel-zone footprint, E(b) = S * beta_h.
inline double expected_building_count(const LinkGeometry &geom, double wavelength, const Environment &env)
{
    return fresnel_footprint_area(geom, wavelength) * env.beta_h();
}

// Integer building count used by the order statistics: max(1, round(E(b))).
inline int discrete_building_count(double expected_count)
{
    const double n = std::round(expected_count);
    return n < 1.0 ? 1 : static_cast<int>(n);
}

// CDF of the tallest of `count` i.i.d. Rayleigh heights.
inline double max_height_cdf(double height, int count, double sigma_h)
{
    if (count < 1)
        throw std::domain_error("max_height_cdf: building count must be >= 1");
    return std::pow(height_cdf(height, sigma_h), count);
}

enum class OrderStatisticForm
{
    corrected, // direct binomial expansion of the tail integral
    literal    // alternative constants sigma_h sqrt(n pi)/n and erfc(h sqrt(n)/(2 sigma_h)), for comparison
};

namespace detail
{
// 1 - F(x)^N, evaluated without cancellation in the far tail.
inline double max_height_survival(double x, int count, double sigma_h)
{
    if (x <= 0.0)
        return 1.0;
    const double tail = std::exp(-x * x / (2.0 * sigma_h * sigma_h));
    return -std::expm1(count * std::log1p(-tail));
}

inline double binomial(int n, int k)
{
    double c = 1.0;
    for (int i = 1; i <= k; ++i)
        c = c * (n - k + i) / i;
    return c;
}
} // namespace detail

// Largest count evaluated through the alternating binomial sum; beyond it the
// cancellation costs more digits than a double carries.
inline constexpr int max_closed_form_building_count = 30;

/*!
 * Tail integral of the tallest-building height above `h_min`:
 *
 *   E = int_{h_min}^inf (1 - F_max(x)) dx
 *     = sum_{n=1}^{N} (-1)^{n-1} C(N,n) sigma_h sqrt(pi/(2n)) erfc(h_min sqrt(n) / (sqrt(2) sigma_h))
 *
 * For N > max_closed_form_building_count the corrected form integrates
 * numerically instead. The literal form uses the coefficient
 * sigma_h sqrt(n pi)/n and erfc argument h sqrt(n)/(2 sigma_h); it does not
 * recover the Rayleigh mean at N = 1 (1.7725 sigma_h instead of 1.2533 sigma_h).
 */
inline double expected_max_height(int count, double sigma_h, double h_min,
                                  OrderStatisticForm form = OrderStatisticForm::corrected)
{
    if (count < 1)
        throw std::domain_error("expected_max_height: building count must be >= 1");
    if (!(sigma_h >= 0.0))
        throw std::domain_error("expected_max_height: sigma_h must be >= 0");
    if (!(h_min >= 0.0))
        throw std::domain_error("expected_max_height: h_min must be >= 0");
    if (sigma_h == 0.0)
        return 0.0;

    if (form == OrderStatisticForm::literal)
    {
        double sum = 0.0;
        for (int n = 1; n <= count; ++n)
        {
            const double sign = (n % 2 == 1) ? 1.0 : -1.0;
            sum += sign * detail::binomial(count, n) / n * sigma_h * std::sqrt(n * pi) *
                   std::erfc(h_min * std::sqrt(double(n)) / (2.0 * sigma_h));
        }
        return sum;
    }

    if (count > max_closed_form_building_count)
    {
        boost::math::quadrature::exp_sinh<double> integrator;
        auto survival = [&](double x) { return detail::max_height_survival(x, count, sigma_h); };
        return integrator.integrate(survival, h_min, std::numeric_limits<double>::infinity());
    }

    double sum = 0.0;
    for (int n = 1; n <= count; ++n)
    {
        const double sign = (n % 2 == 1) ? 1.0 : -1.0;
        sum += sign * detail::binomial(count, n) * sigma_h * std::sqrt(pi / (2.0 * n)) *
               std::erfc(h_min * std::sqrt(double(n)) / (std::sqrt(2.0) * sigma_h));
    }
    return std::max(sum, 0.0);
}

} // namespace a2a
