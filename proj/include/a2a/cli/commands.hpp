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
#include "a2a/los.hpp"
#include "a2a/montecarlo.hpp"
#include "a2a/pathloss.hpp"
#include "a2a/random.hpp"
#include "a2a/cli/scenario.hpp"
#include "a2a/cli/table.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <json.hpp>

namespace a2a::cli
{

inline constexpr double nan = std::numeric_limits<double>::quiet_NaN();

namespace detail
{
// Evaluate `row(i)` for every index in parallel; rows come back in index order.
template <class Row>
std::vector<std::vector<Cell>> parallel_rows(std::size_t count, unsigned threads, Row &&row)
{
    std::vector<std::vector<Cell>> rows(count);
    for_each_chunk(count, 1, threads, [&](std::size_t, std::size_t begin, std::size_t end)
                   {
                       for (std::size_t i = begin; i < end; ++i)
                           rows[i] = row(i); });
    return rows;
}

inline double plos_3gpp_or_nan(double distance, double ue_height)
{
    if (!(ue_height >= umi_min_ue_height && ue_height <= umi_max_ue_height))
        return nan;
    return plos_3gpp_umi(distance, ue_height);
}
} // namespace detail

// Columns: swept variable, p_los, p_los_3gpp (empty outside the 3GPP height range).
inline Table run_plos_sweep(const Scenario &sc)
{
    const auto points = sweep_points(sc);
    const Carrier carrier = sc.carrier();
    Table table;
    table.columns = {std::string(to_string(swept_axis(sc))), "p_los"};
    if (sc.baseline_3gpp)
        table.columns.push_back("p_los_3gpp");
    table.rows = detail::parallel_rows(points.size(), sc.mc.threads, [&](std::size_t i)
                                       {
        const auto &p = points[i];
        const LinkGeometry geom(p.h_t, p.h_r, p.d);
        std::vector<Cell> row{p.axis_value, plos(geom, sc.environment_at(p.sigma_index), carrier)};
        if (sc.baseline_3gpp)
            row.emplace_back(detail::plos_3gpp_or_nan(p.d, p.h_r));
        return row; });
    return table;
}

inline Table run_pathloss_sweep(const Scenario &sc)
{
    const auto points = sweep_points(sc);
    const Carrier carrier = sc.carrier();
    Table table;
    table.columns = {std::string(to_string(swept_axis(sc))),
                     "total_db",
                     "pl_los_db",
                     "pl_nlos_db",
                     "p_los",
                     "free_space_db",
                     "los_only_db",
                     "n_buildings",
                     "los_clamped",
                     "ked_out_of_domain"};
    table.rows = detail::parallel_rows(points.size(), sc.mc.threads, [&](std::size_t i)
                                       {
        const auto &p = points[i];
        const LinkGeometry geom(p.h_t, p.h_r, p.d);
        const Environment env = sc.environment_at(p.sigma_index);
        const auto b = total_loss(geom, env, carrier, sc.gain, sc.options);
        return std::vector<Cell>{p.axis_value,
                                 b.total_db,
                                 b.pl_los_db,
                                 b.pl_nlos_db,
                                 b.p_los,
                                 baseline_loss_db(BaselineKind::free_space, geom, carrier, sc.gain, env, sc.options),
                                 baseline_loss_db(BaselineKind::los_only, geom, carrier, sc.gain, env, sc.options),
                                 std::int64_t{b.n_buildings},
                                 b.los_clamped,
                                 b.ked_out_of_domain}; });
    return table;
}

/*!
 * Path-loss fluctuation per wobble level. One row per (sigma_w_deg, CDF
 * point): the summary columns repeat on every row of a level and
 * (plf_db, cdf) trace its empirical CDF at evenly spaced probabilities.
 * Level j uses seed substream_seed(seed, j).
 */
inline Table run_plf(const Scenario &sc)
{
    if (sc.mc.trials < min_plf_trials)
        throw std::invalid_argument("plf needs at least 10000 trials per wobble level (got " +
                                    std::to_string(sc.mc.trials) + ")");
    Table table;
    table.columns = {"sigma_w_deg", "sigma_f_db", "sigma_f_standard_error_db", "sigma_f_reference_db",
                     "tail_r_squared", "tail_log_r_squared", "plf_db", "cdf"};
    for (std::size_t j = 0; j < sc.sigma_w_deg.size(); ++j)
    {
        const double sigma_deg = sc.sigma_w_deg[j];
        AntennaConfig cfg = sc.antenna;
        cfg.sigma_w_tx = deg_to_rad(sigma_deg);
        cfg.sigma_w_rx = cfg.sigma_w_tx;
        const auto stats = plf_statistics(cfg, sc.mc.trials, substream_seed(sc.mc.seed, j), sc.mc.threads);
        const double reference = sigma_f_reference_fit(sigma_deg);
        for (int k = 0; k < sc.cdf_points; ++k)
        {
            const double p = static_cast<double>(k) / static_cast<double>(sc.cdf_points - 1);
            const double x = stats.quantile(p);
            table.add_row({sigma_deg, stats.sigma_f, stats.sigma_f_standard_error, reference, stats.tail_fit.r_squared,
                           stats.tail_fit.log_r_squared, x, stats.cdf(x)});
        }
    }
    return table;
}

// ---------------------------------------------------------------------------
// validate

enum class CheckStatus
{
    pass,
    fail,
    info,
    insufficient_precision
};

inline std::string_view to_string(CheckStatus s)
{
    switch (s)
    {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::fail:
        return "fail";
    case CheckStatus::info:
        return "info";
    case CheckStatus::insufficient_precision:
        return "insufficient_precision";
    }
    return "info";
}

struct Check
{
    std::string name;
    double value = 0.0;
    double reference = 0.0;
    double delta = 0.0; // |value - reference|
    double band = 0.0;  // pass iff delta <= band
    CheckStatus status = CheckStatus::info;
    std::string note;
};

struct ValidationReport
{
    std::vector<Check> checks;
    double h_t = 0.0, h_r = 0.0, d = 0.0;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    bool precision_limited = false;

    bool passed() const
    {
        for (const auto &c : checks)
            if (c.status == CheckStatus::fail)
                return false;
        return true;
    }

    std::string_view status() const
    {
        if (!passed())
            return "fail";
        return precision_limited ? "insufficient_precision" : "pass";
    }
};

// Below this many trials Monte Carlo checks report instead of failing.
inline constexpr std::size_t min_validation_trials = 10000;

namespace detail
{
inline Check band_check(std::string name, double value, double reference, double band, std::string note = {})
{
    Check c{std::move(name), value, reference, std::abs(value - reference), band, CheckStatus::pass, std::move(note)};
    c.status = c.delta <= band ? CheckStatus::pass : CheckStatus::fail;
    return c;
}

inline Check mc_check(std::string name, double value, double reference, double band, bool precise, std::string note = {})
{
    Check c = band_check(std::move(name), value, reference, band, std::move(note));
    if (!precise)
        c.status = CheckStatus::insufficient_precision;
    return c;
}

inline Check info_check(std::string name, double value, double reference, std::string note)
{
    return {std::move(name), value, reference, std::abs(value - reference), nan, CheckStatus::info, std::move(note)};
}

// Binomial standard error with a one-count floor so p in {0, 1} keeps a nonzero band.
inline double binomial_se(double p, std::size_t n)
{
    const double nn = static_cast<double>(n);
    return std::max(std::sqrt(std::max(p * (1.0 - p), 0.0) / nn), 1.0 / nn);
}

inline double tail_quadrature(int count, double sigma_h, double h_min)
{
    boost::math::quadrature::exp_sinh<double> integrator;
    auto survival = [&](double x) { return a2a::detail::max_height_survival(x, count, sigma_h); };
    return integrator.integrate(survival, h_min, std::numeric_limits<double>::infinity());
}

// Standard error of the mean of max(tallest - h_min, 0) over `trials` draws,
// from its second moment 2 int (x - h_min)(1 - F_max(x)) dx.
inline double tail_standard_error(int count, double sigma_h, double h_min, std::size_t trials)
{
    boost::math::quadrature::exp_sinh<double> integrator;
    auto weighted = [&](double x) { return 2.0 * (x - h_min) * a2a::detail::max_height_survival(x, count, sigma_h); };
    const double second = integrator.integrate(weighted, h_min, std::numeric_limits<double>::infinity());
    const double mean = tail_quadrature(count, sigma_h, h_min);
    return std::sqrt(std::max(second - mean * mean, 0.0) / static_cast<double>(trials));
}
} // namespace detail

/*!
 * Oracle suite at the validation point (first h_t, first h_r, middle d of
 * the sweep). Monte Carlo checks use a 3 standard-error band. Analytic
 * total loss is compared against the geometric simulation with a 3 dB band
 * only where the link is mostly LOS (p_los >= 0.9); elsewhere, and with the
 * ground reflection included, the gap is reported.
 */
inline ValidationReport run_validate(const Scenario &sc)
{
    ValidationReport rep;
    const auto points = sweep_points(sc);
    const auto &mid = points[points.size() / 2];
    rep.h_t = sc.h_t.front();
    rep.h_r = sc.h_r.front();
    rep.d = mid.d;
    rep.seed = sc.mc.seed;
    rep.trials = sc.mc.trials;
    rep.precision_limited = sc.mc.trials < min_validation_trials;
    const bool precise = !rep.precision_limited;

    const Environment env = sc.environment_at(mid.sigma_index);
    const Carrier carrier = sc.carrier();
    const LinkGeometry geom(rep.h_t, rep.h_r, rep.d);
    const double sigma = env.sigma_h();
    const double lambda = carrier.wavelength();

    // Each Monte Carlo check draws from its own sub-stream family.
    auto mc_for = [&](std::uint64_t k, CountMode mode = CountMode::poisson)
    {
        McConfig mc = sc.mc;
        mc.seed = substream_seed(sc.mc.seed, k);
        mc.count_mode = mode;
        return mc;
    };

    // Single-building LOS probability against the geometric simulation.
    {
        const double p = plos_single_building(rep.h_t, rep.h_r, sigma);
        const auto est = mc_plos_single_building(rep.h_t, rep.h_r, sigma, mc_for(1));
        rep.checks.push_back(detail::mc_check("plos_single_building_mc", est.value, p,
                                              3.0 * detail::binomial_se(p, est.trials), precise));
    }

    // Link LOS probability with the count rounded to an integer: tests independence across buildings.
    const double expected = expected_building_count(geom, lambda, env);
    const double single = plos_single_building(rep.h_t, rep.h_r, sigma);
    {
        const double n = std::round(expected);
        const double p = std::pow(single, n);
        const auto est = mc_plos(geom, env, carrier, mc_for(2, CountMode::fixed_round));
        rep.checks.push_back(detail::mc_check("plos_fixed_count_mc", est.value, p,
                                              3.0 * detail::binomial_se(p, est.trials), precise));
    }

    // Poisson building count against its own closed form exp(-E(b) (1 - p)).
    const auto poisson_est = mc_plos(geom, env, carrier, mc_for(3, CountMode::poisson));
    {
        const double p = std::exp(-expected * (1.0 - single));
        rep.checks.push_back(detail::mc_check("plos_poisson_count_mc", poisson_est.value, p,
                                              3.0 * detail::binomial_se(p, poisson_est.trials), precise));
    }
    rep.checks.push_back(detail::info_check("plos_poisson_gap", poisson_est.value, plos(geom, env, carrier),
                                            "real-exponent closed form vs Poisson building count"));

    // Continuity across the equal-height branch, and agreement of the two forms next to it.
    {
        const double h = rep.h_r;
        const double equal = plos_single_building(h, h, sigma);
        const double near = plos_single_building(h + 1e-6, h, sigma);
        rep.checks.push_back(detail::band_check("plos_continuity", near, equal, 1e-5));
        if (sigma > 0.0)
        {
            const double distinct = plos_single_building_distinct_heights(h + 1e-6, h, sigma);
            const double limit = plos_single_building_equal_heights(h + 1e-6, h, sigma);
            rep.checks.push_back(detail::band_check("plos_branch_agreement", distinct, limit, 1e-7));
        }
    }

    // Tail integral of the tallest building: closed form vs quadrature vs simulation.
    if (sigma > 0.0)
    {
        const int count = discrete_building_count(expected);
        const double h_min = std::min(rep.h_t, rep.h_r);
        const auto form = sc.options.order_statistic;
        auto quadrature_check = [&](std::string name, int n, double h0)
        {
            const double closed = expected_max_height(n, sigma, h0, form);
            const double quad = detail::tail_quadrature(n, sigma, h0);
            return detail::band_check(std::move(name), closed, quad, 1e-6 * std::max(std::abs(quad), 1e-9 * sigma));
        };
        rep.checks.push_back(quadrature_check("max_height_quadrature", count, h_min));
        rep.checks.push_back(quadrature_check("max_height_quadrature_single", 1, 0.0));

        auto mc_tail_check = [&](std::string name, int n, double h0, std::uint64_t k)
        {
            const double closed = expected_max_height(n, sigma, h0, form);
            const auto est = mc_expected_max_height(n, sigma, h0, mc_for(k));
            const double se = detail::tail_standard_error(n, sigma, h0, est.trials);
            return detail::mc_check(std::move(name), est.value, closed, 3.0 * std::max(est.standard_error, se), precise);
        };
        rep.checks.push_back(mc_tail_check("max_height_mc", count, h_min, 4));
        rep.checks.push_back(mc_tail_check("max_height_mc_pair", 2, 0.0, 5));
    }

    // End-to-end loss against the geometric simulation. The gated checks drop
    // the ground reflection on both sides: the analytic form weights the
    // reflected amplitude by P_GR while the simulation switches it on or off,
    // and near an interference null those disagree by design.
    PathLossOptions direct_only = sc.options;
    direct_only.reflection_coefficient = 0.0;
    {
        const auto analytic = total_loss(geom, env, carrier, sc.gain, sc.options);
        const auto sim = mc_total_loss(geom, env, carrier, sc.gain, mc_for(6), sc.options);
        rep.checks.push_back(detail::info_check("total_loss_mc", sim.mean_db, analytic.total_db,
                                                "with ground reflection; amplitude weighting vs on/off reflection"));
    }
    {
        const auto analytic = total_loss(geom, env, carrier, sc.gain, direct_only);
        const auto sim = mc_total_loss(geom, env, carrier, sc.gain, mc_for(6), direct_only);
        if (analytic.p_los >= 0.9)
            rep.checks.push_back(detail::mc_check("total_loss_mc_direct", sim.mean_db, analytic.total_db,
                                                  3.0 + 3.0 * sim.standard_error, precise, "ground reflection removed"));
        else
            rep.checks.push_back(detail::info_check("total_loss_mc_direct", sim.mean_db, analytic.total_db,
                                                    "p_los < 0.9: expected-height diffraction is not a per-trial model"));
    }
    {
        const LinkGeometry ref_geom(50.0, 50.0, 500.0);
        const Environment ref_env = Environment::suburban();
        const auto analytic = total_loss(ref_geom, ref_env, carrier, sc.gain, direct_only);
        const auto sim = mc_total_loss(ref_geom, ref_env, carrier, sc.gain, mc_for(7), direct_only);
        rep.checks.push_back(detail::mc_check("total_loss_mc_reference", sim.mean_db, analytic.total_db,
                                              3.0 + 3.0 * sim.standard_error, precise,
                                              "h_t = h_r = 50 m, d = 500 m, suburban, ground reflection removed"));
    }
    return rep;
}

inline Table validation_table(const ValidationReport &rep)
{
    Table table;
    table.columns = {"check", "status", "value", "reference", "delta", "band", "note"};
    for (const auto &c : rep.checks)
        table.add_row({c.name, std::string(to_string(c.status)), c.value, c.reference, c.delta, c.band, c.note});
    return table;
}

inline nlohmann::ordered_json validation_summary(const ValidationReport &rep)
{
    nlohmann::ordered_json extra;
    extra["status"] = rep.status();
    extra["seed"] = rep.seed;
    extra["trials"] = rep.trials;
    extra["point"] = {{"h_t", rep.h_t}, {"h_r", rep.h_r}, {"d", rep.d}};
    return extra;
}

} // namespace a2a::cli
