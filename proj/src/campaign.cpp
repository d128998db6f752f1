/*
 * Copyright (c) 2026 The sigmadet Authors. All Rights Reserved
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <sigmadet/campaign.hpp>
#include <sigmadet/confluence.hpp>
#include <sigmadet/error.hpp>
#include <sigmadet/identities.hpp>
#include <sigmadet/kiepert.hpp>
#include <sigmadet/lattice.hpp>
#include <sigmadet/sampling.hpp>
#include <sigmadet/tolerances.hpp>
#include <sigmadet/weierstrass.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <memory>
#include <string>
#include <thread>

namespace sigmadet
{

std::string_view to_string(IdentityKind kind) noexcept
{
    switch (kind) {
        case IdentityKind::fs:
            return "fs";
        case IdentityKind::hermite:
            return "hermite";
        case IdentityKind::kiepert:
            return "kiepert";
        case IdentityKind::confluence:
            return "confluence";
        case IdentityKind::multiplication:
            return "multiplication";
    }
    return "unknown";
}

std::optional<IdentityKind> parse_identity(std::string_view name) noexcept
{
    for (auto k : {IdentityKind::fs, IdentityKind::hermite, IdentityKind::kiepert, IdentityKind::confluence,
                   IdentityKind::multiplication}) {
        if (to_string(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

std::string_view to_string(ConfluenceFamily family) noexcept
{
    return family == ConfluenceFamily::pe ? "pe" : "polynomial";
}

std::optional<ConfluenceFamily> parse_family(std::string_view name) noexcept
{
    if (name == "pe") {
        return ConfluenceFamily::pe;
    }
    if (name == "polynomial" || name == "poly") {
        return ConfluenceFamily::polynomial;
    }
    return std::nullopt;
}

std::uint64_t trial_seed(std::uint64_t seed, int trial) noexcept
{
    // splitmix64 of (seed, trial)
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(trial) + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void validate(const CampaignConfig &config)
{
    const auto fail = [](const char *arg, const std::string &msg) {
        throw Error(ErrorKind::InvalidArgument, arg, msg);
    };
    if (config.trials < 1) {
        fail("trials", "trials must be at least 1");
    }
    if (!(config.tolerance > 0.0)) {
        fail("tol", "tolerance must be positive");
    }
    (void)make_lattice(config.omega1, config.omega2);

    const int n = config.n_or_m;
    switch (config.identity) {
        case IdentityKind::fs:
            if (n < 0 || n + 2 > tolerances.max_determinant_dim) {
                fail("n", "fs needs 0 <= n <= " + std::to_string(tolerances.max_determinant_dim - 2));
            }
            break;
        case IdentityKind::hermite:
            if (n < 1 || n + 1 > tolerances.max_determinant_dim) {
                fail("n", "hermite needs 1 <= n <= " + std::to_string(tolerances.max_determinant_dim - 1));
            }
            break;
        case IdentityKind::kiepert:
            if (n < 1 || n > tolerances.max_kiepert_n) {
                fail("n", "kiepert needs 1 <= n <= " + std::to_string(tolerances.max_kiepert_n));
            }
            break;
        case IdentityKind::confluence:
            if (n < 0 || n + 1 > tolerances.max_determinant_dim) {
                fail("n", "confluence needs 0 <= n <= " + std::to_string(tolerances.max_determinant_dim - 1));
            }
            break;
        case IdentityKind::multiplication:
            if (n < tolerances.min_multiplication_m || n > tolerances.max_multiplication_m) {
                fail("m", "multiplication needs " + std::to_string(tolerances.min_multiplication_m) +
                              " <= m <= " + std::to_string(tolerances.max_multiplication_m));
            }
            break;
    }
}

namespace
{

std::string digest_with_seed(std::uint64_t seed, int trial, const std::string &digest)
{
    return "seed=" + std::to_string(seed) + ";trial=" + std::to_string(trial) + ";" + digest;
}

TrialRecord skipped(int trial, std::string reason)
{
    TrialRecord r;
    r.trial = trial;
    r.skipped = true;
    r.skip_reason = std::move(reason);
    return r;
}

TrialRecord run_trial(const CampaignConfig &config, const Lattice &lat, int trial)
{
    SafeSampler sampler(lat, trial_seed(config.seed, trial));
    const int n = config.n_or_m;
    TrialRecord rec;
    rec.trial = trial;

    switch (config.identity) {
        case IdentityKind::fs: {
            const auto p = sampler.fs_points(n);
            if (!p) {
                rec = skipped(trial, "no safe sample");
                break;
            }
            const auto r = fs_residual(lat, p->us, p->vs);
            rec.lhs = r.lhs;
            rec.rhs = r.rhs;
            rec.residual = r.relative_residual;
            rec.condition = r.condition_estimate;
            rec.inputs_digest = r.inputs_digest;
            break;
        }
        case IdentityKind::hermite: {
            const auto us = sampler.hermite_points(n);
            if (!us) {
                rec = skipped(trial, "no safe sample");
                break;
            }
            const auto r = hermite_residual(lat, *us);
            rec.lhs = r.lhs;
            rec.rhs = r.rhs;
            rec.residual = r.relative_residual;
            rec.condition = r.condition_estimate;
            rec.inputs_digest = r.inputs_digest;
            break;
        }
        case IdentityKind::kiepert: {
            const int multiples[] = {n + 1};
            const auto u = sampler.point_with_multiples(multiples);
            if (!u) {
                rec = skipped(trial, "no safe sample");
                break;
            }
            const auto r = kiepert_report(lat, *u, n);
            rec.lhs = r.hankel;
            rec.rhs = r.sigma_ratio;
            rec.residual = r.relative_residual;
            rec.condition = det(kiepert_hankel_matrix(lat, *u, n)).condition_estimate;
            const Complex args[] = {*u};
            rec.inputs_digest = inputs_digest(lat, args);
            break;
        }
        case IdentityKind::confluence: {
            std::unique_ptr<DerivableFamily> family;
            if (config.family == ConfluenceFamily::pe) {
                family = std::make_unique<PeFamily>(lat);
            } else {
                family = std::make_unique<PolynomialFamily>();
            }
            const double h0 = family->default_step();
            const auto u = sampler.point_where([&](Complex x) {
                for (Complex p : confluence_stencil(x, n, h0)) {
                    if (!sampler.is_safe(p)) {
                        return false;
                    }
                }
                return true;
            });
            if (!u) {
                rec = skipped(trial, "no safe sample");
                break;
            }
            const ConfluenceResult r = confluent_limit(*family, *u, n, h0);
            rec.lhs = r.extrapolated;
            rec.rhs = r.direct;
            rec.residual = r.agreement;
            rec.condition = 0.0;
            const Complex args[] = {*u};
            rec.inputs_digest = inputs_digest(lat, args);
            break;
        }
        case IdentityKind::multiplication: {
            const int m = n;
            const int multiples[] = {m};
            const auto u = sampler.point_with_multiples(multiples);
            if (!u) {
                rec = skipped(trial, "no safe sample");
                break;
            }
            const Complex psi_m = psi_division_value(lat, *u, m, DivisionMethod::hankel);
            if (std::abs(psi_m) < tolerances.division_value_floor) {
                rec = skipped(trial, "|psi_" + std::to_string(m) + "| below division-value floor");
                break;
            }
            rec.lhs = pe_multiplication(lat, *u, m, DivisionMethod::hankel);
            rec.rhs = pe(lat, static_cast<double>(m) * *u);
            rec.residual = relative_residual(rec.lhs, rec.rhs);
            rec.condition = 0.0;
            const Complex args[] = {*u};
            rec.inputs_digest = inputs_digest(lat, args);
            break;
        }
    }
    rec.rejections = sampler.rejections();
    if (!rec.skipped) {
        rec.inputs_digest = digest_with_seed(config.seed, trial, rec.inputs_digest);
    }
    return rec;
}

} // namespace

CampaignResult run_campaign(const CampaignConfig &config)
{
    validate(config);
    const Lattice lat = make_lattice(config.omega1, config.omega2);

    CampaignResult result;
    result.config = config;
    result.trials.resize(static_cast<std::size_t>(config.trials));

    unsigned workers = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(config.trials));
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    const auto work = [&] {
        for (int t = next++; t < config.trials; t = next++) {
            try {
                result.trials[static_cast<std::size_t>(t)] = run_trial(config, lat, t);
            } catch (...) {
                if (!failed.exchange(true)) {
                    failure = std::current_exception();
                }
                return;
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    auto &s = result.summary;
    std::vector<double> residuals;
    for (const auto &t : result.trials) {
        s.rejections += t.rejections;
        if (t.skipped) {
            ++s.skipped;
            continue;
        }
        ++s.evaluated;
        // a non-finite residual is a failure, never a silent NaN in the sort
        residuals.push_back(std::isfinite(t.residual) ? t.residual : std::numeric_limits<double>::infinity());
    }
    if (!residuals.empty()) {
        std::sort(residuals.begin(), residuals.end());
        s.max_residual = residuals.back();
        const std::size_t mid = residuals.size() / 2;
        s.median_residual =
            residuals.size() % 2 == 1 ? residuals[mid] : 0.5 * (residuals[mid - 1] + residuals[mid]);
    }
    s.passed = s.evaluated > 0 && s.max_residual <= config.tolerance;
    return result;
}

} // namespace sigmadet
