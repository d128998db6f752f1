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

#ifndef SIGMADET_CLI_REPORT_WRITER_HPP
#define SIGMADET_CLI_REPORT_WRITER_HPP

#include <sigmadet/campaign.hpp>

#include <optional>
#include <ostream>
#include <string_view>

namespace sigmadet::cli
{

enum class OutputFormat { json, csv, human };

std::optional<OutputFormat> parse_format(std::string_view name) noexcept;

inline constexpr int report_schema_version = 1;

// JSON: one object per line. A header record, then one record per trial with
// fields in the order
//   identity, n, seed, trial, lhs_re, lhs_im, rhs_re, rhs_im, residual, condition, skipped
// then a summary record. Header and summary carry "schema": 1.
// CSV: "# schema: 1", a column header with the same fields, one row per
// trial, then "# summary ..." comment lines.
void write_report(const CampaignResult &result, OutputFormat format, std::ostream &out);

} // namespace sigmadet::cli

#endif
