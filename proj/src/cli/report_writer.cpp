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

#include <sigmadet/cli/complex_literal.hpp>
#include <sigmadet/cli/report_writer.hpp>

#include <json.hpp>

#include <cstdio>
#include <map>
#include <string>

namespace sigmadet::cli
{

namespace
{

using ordered_json = nlohmann::ordered_json;

ordered_json number_or_null(double x, bool present)
{
    if (!present || !std::isfinite(x)) {
        return nullptr;
    }
    return x;
}

std::map<std::string, int> skip_reasons(const CampaignResult &result)
{
    std::map<std::string, int> reasons;
    for (const auto &t : result.trials) {
        if (t.skipped) {
            ++reasons[t.skip_reason];
        }
    }
    return reasons;
}

void write_json(const CampaignResult &result, std::ostream &out)
{
    const auto &c = result.config;
    ordered_json header;
    header["schema"] = report_schema_version;
    header["record"] = "header";
    header["identity"] = std::string(to_string(c.identity));
    header["lattice"] = format_complex(c.omega1) + "," + format_complex(c.omega2);
    header["n"] = c.n_or_m;
    header["trials"] = c.trials;
    header["seed"] = c.seed;
    header["tolerance"] = c.tolerance;
    if (c.identity == IdentityKind::confluence) {
        header["family"] = std::string(to_string(c.family));
    }
    out << header.dump() << '\n';

    for (const auto &t : result.trials) {
        const bool have = !t.skipped;
        ordered_json rec;
        rec["identity"] = std::string(to_string(c.identity));
        rec["n"] = c.n_or_m;
        rec["seed"] = c.seed;
        rec["trial"] = t.trial;
        rec["lhs_re"] = number_or_null(t.lhs.real(), have);
        rec["lhs_im"] = number_or_null(t.lhs.imag(), have);
        rec["rhs_re"] = number_or_null(t.rhs.real(), have);
        rec["rhs_im"] = number_or_null(t.rhs.imag(), have);
        rec["residual"] = number_or_null(t.residual, have);
        rec["condition"] = number_or_null(t.condition, have);
        rec["skipped"] = t.skipped;
        out << rec.dump() << '\n';
    }

    const auto &s = result.summary;
    ordered_json summary;
    summary["schema"] = report_schema_version;
    summary["record"] = "summary";
    summary["evaluated"] = s.evaluated;
    summary["skipped"] = s.skipped;
    summary["rejected_draws"] = s.rejections;
    summary["max_residual"] = s.max_residual;
    summary["median_residual"] = s.median_residual;
    summary["tolerance"] = c.tolerance;
    summary["passed"] = s.passed;
    ordered_json reasons = ordered_json::object();
    for (const auto &[reason, count] : skip_reasons(result)) {
        reasons[reason] = count;
    }
    summary["skip_reasons"] = reasons;
    out << summary.dump() << '\n';
}

std::string csv_number(double x, bool present)
{
    return present ? format_real(x) : std::string();
}

void write_csv(const CampaignResult &result, std::ostream &out)
{
    const auto &c = result.config;
    out << "# schema: " << report_schema_version << '\n';
    out << "identity,n,seed,trial,lhs_re,lhs_im,rhs_re,rhs_im,residual,condition,skipped\n";
    for (const auto &t : result.trials) {
        const bool have = !t.skipped;
        out << to_string(c.identity) << ',' << c.n_or_m << ',' << c.seed << ',' << t.trial << ','
            << csv_number(t.lhs.real(), have) << ',' << csv_number(t.lhs.imag(), have) << ','
            << csv_number(t.rhs.real(), have) << ',' << csv_number(t.rhs.imag(), have) << ','
            << csv_number(t.residual, have) << ',' << csv_number(t.condition, have) << ','
            << (t.skipped ? "true" : "false") << '\n';
    }
    const auto &s = result.summary;
    out << "# summary: evaluated=" << s.evaluated << " skipped=" << s.skipped << " rejected_draws=" << s.rejections
        << " max_residual=" << format_real(s.max_residual) << " median_residual=" << format_real(s.median_residual)
        << " tolerance=" << format_real(c.tolerance) << " passed=" << (s.passed ? "true" : "false") << '\n';
}

void write_human(const CampaignResult &result, std::ostream &out)
{
    const auto &c = result.config;
    out << "identity " << to_string(c.identity) << "  n=" << c.n_or_m << "  lattice " << format_complex(c.omega1)
        << ", " << format_complex(c.omega2) << "  seed " << c.seed << "  trials " << c.trials << '\n';
    char line[160];
    for (const auto &t : result.trials) {
        if (t.skipped) {
            std::snprintf(line, sizeof line, "  %4d  skipped (%s)\n", t.trial, t.skip_reason.c_str());
        } else {
            std::snprintf(line, sizeof line, "  %4d  residual %.3e  condition %.3e\n", t.trial, t.residual,
                          t.condition);
        }
        out << line;
    }
    const auto &s = result.summary;
    std::snprintf(line, sizeof line, "max residual %.6e  median %.6e  tolerance %.1e  skipped %d  rejected draws %llu\n",
                  s.max_residual, s.median_residual, c.tolerance, s.skipped,
                  static_cast<unsigned long long>(s.rejections));
    out << line << (s.passed ? "PASS" : "FAIL") << '\n';
}

} // namespace

std::optional<OutputFormat> parse_format(std::string_view name) noexcept
{
    if (name == "json") {
        return OutputFormat::json;
    }
    if (name == "csv") {
        return OutputFormat::csv;
    }
    if (name == "human") {
        return OutputFormat::human;
    }
    return std::nullopt;
}

void write_report(const CampaignResult &result, OutputFormat format, std::ostream &out)
{
    switch (format) {
        case OutputFormat::json:
            write_json(result, out);
            break;
        case OutputFormat::csv:
            write_csv(result, out);
            break;
        case OutputFormat::human:
            write_human(result, out);
            break;
    }
}

} // namespace sigmadet::cli
