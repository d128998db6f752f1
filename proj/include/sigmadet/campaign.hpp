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

#ifndef SIGMADET_CAMPAIGN_HPP
#define SIGMADET_CAMPAIGN_HPP

// Seeded verification campaigns: draw safe random arguments, evaluate both
// sides of one identity per trial, summarize. Trial k uses its own generator
// derived from (seed, k), so results do not depend on scheduling.

#include <sigmadet/complex.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sigmadet
{

enum class IdentityKind { fs, hermite, kiepert, confluence, multiplication };

std::string_view to_string(IdentityKind kind) noexcept;
std::optional<IdentityKind> parse_identity(std::string_view name) noexcept;

enum class ConfluenceFamily { pe, polynomial };

std::string_view to_string(ConfluenceFamily family) noexcept;
std::optional<ConfluenceFamily> parse_family(std::string_view name) noexcept;

struct CampaignConfig {
    IdentityKind identity = IdentityKind::fs;
    Complex omega1{2.0, 0.0};
    Complex omega2{0.0, 2.0};
    // n for fs / hermite / kiepert / confluence, m for multiplication
    int n_or_m = 1;
    int trials = 100;
    std::uint64_t seed = 0;
    double tolerance = 1e-8;
    ConfluenceFamily family = ConfluenceFamily::pe;
    // 0 = hardware concurrency
    unsigned threads = 0;
};

// Throws InvalidArgument (or DegenerateLattice) for an unusable config.
void validate(const CampaignConfig &config);

struct TrialRecord {
    int trial = 0;
    Complex lhs;
    Complex rhs;
    double residual = 0.0;
    double condition = 0.0;
    bool skipped = false;
    std::string skip_reason;
    std::string inputs_digest;
    std::uint64_t rejections = 0;
};

struct CampaignSummary {
    int evaluated = 0;
    int skipped = 0;
    std::uint64_t rejections = 0;
    double max_residual = 0.0;
    double median_residual = 0.0;
    bool passed = false;
};

struct CampaignResult {
    CampaignConfig config;
    std::vector<TrialRecord> trials;
    CampaignSummary summary;
};

CampaignResult run_campaign(const CampaignConfig &config);

// Per-trial seed.
std::uint64_t trial_seed(std::uint64_t seed, int trial) noexcept;

} // namespace sigmadet

#endif
