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
#include <sigmadet/cli/commands.hpp>
#include <sigmadet/cli/complex_literal.hpp>
#include <sigmadet/cli/report_writer.hpp>
#include <sigmadet/error.hpp>
#include <sigmadet/kernels/kernels.hpp>
#include <sigmadet/lattice.hpp>
#include <sigmadet/weierstrass.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <sstream>

namespace sigmadet::cli
{

namespace
{

constexpr const char *default_lattice = "2,2i";

int report_error(std::ostream &out, std::ostream &err, std::string_view kind, std::string_view arg,
                 std::string_view value, std::string_view message)
{
    out << "error kind=" << kind << " arg=" << arg << " value=" << nlohmann::json(std::string(value)).dump() << '\n';
    err << "sigmadet: " << message << '\n';
    return exit_error;
}

// Names the command-line option responsible for a library error. `given`
// maps option names to the text the user passed.
int report_library_error(const Error &e, const std::map<std::string, std::string> &given, std::ostream &out,
                         std::ostream &err)
{
    std::string arg = e.argument();
    if (e.kind() == ErrorKind::DegenerateLattice || arg == "omega") {
        arg = "lattice";
    } else if (e.kind() == ErrorKind::TooCloseToPole && given.count("u") != 0) {
        arg = "u";
    } else if (arg == "m" && given.count("m") == 0) {
        arg = "n";
    }
    const auto it = given.find(arg);
    const std::string value = it != given.end() ? it->second : e.argument();
    return report_error(out, err, to_string(e.kind()), arg, value, e.what());
}

struct LatticeOption {
    std::string text = default_lattice;
    Complex omega1;
    Complex omega2;
};

bool parse_lattice_option(LatticeOption &opt)
{
    const auto parsed = parse_lattice_spec(opt.text);
    if (!parsed) {
        return false;
    }
    opt.omega1 = parsed->first;
    opt.omega2 = parsed->second;
    return true;
}

struct EvalOptions {
    LatticeOption lattice;
    std::string fn;
    std::string u;
    int k = 0;
};

struct VerifyOptions {
    LatticeOption lattice;
    std::string identity;
    int n = 1;
    int trials = 100;
    std::string seed;
    double tol = 1e-8;
    std::string format = "json";
    std::string family = "pe";
    unsigned threads = 0;
};

int cmd_eval(const EvalOptions &o, std::ostream &out, std::ostream &err)
{
    LatticeOption lattice = o.lattice;
    if (!parse_lattice_option(lattice)) {
        return report_error(out, err, "InvalidArgument", "lattice", lattice.text,
                            "lattice must be two comma-separated complex literals, e.g. 2,2i");
    }
    const auto u = parse_complex(o.u);
    if (!u) {
        return report_error(out, err, "InvalidArgument", "u", o.u, "u must be a complex literal such as 0.5+0.5i");
    }
    const std::map<std::string, std::string> given{
        {"lattice", lattice.text}, {"u", o.u}, {"k", std::to_string(o.k)}, {"fn", o.fn}};
    try {
        const Lattice lat = make_lattice(lattice.omega1, lattice.omega2);
        Complex value;
        if (o.fn == "sigma") {
            value = sigma(lat, *u);
        } else if (o.fn == "zeta") {
            value = zeta(lat, *u);
        } else if (o.fn == "pe") {
            value = pe(lat, *u);
        } else if (o.fn == "pe_k") {
            value = pe_derivative(lat, *u, o.k);
        } else {
            return report_error(out, err, "InvalidArgument", "fn", o.fn, "fn must be one of sigma, zeta, pe, pe_k");
        }
        out << format_complex(value) << '\n';
        return exit_pass;
    } catch (const Error &e) {
        return report_library_error(e, given, out, err);
    }
}

std::optional<std::uint64_t> parse_seed(std::string_view text)
{
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        return std::nullopt;
    }
    return value;
}

int cmd_verify(const VerifyOptions &o, bool m_given, std::ostream &out, std::ostream &err)
{
    const char *n_name = m_given ? "m" : "n";
    LatticeOption lattice = o.lattice;
    if (!parse_lattice_option(lattice)) {
        return report_error(out, err, "InvalidArgument", "lattice", lattice.text,
                            "lattice must be two comma-separated complex literals, e.g. 2,2i");
    }
    const auto identity = parse_identity(o.identity);
    if (!identity) {
        return report_error(out, err, "InvalidArgument", "identity", o.identity,
                            "identity must be one of fs, hermite, kiepert, confluence, multiplication");
    }
    const auto format = parse_format(o.format);
    if (!format) {
        return report_error(out, err, "InvalidArgument", "format", o.format, "format must be json, csv or human");
    }
    const auto family = parse_family(o.family);
    if (!family) {
        return report_error(out, err, "InvalidArgument", "family", o.family, "family must be pe or polynomial");
    }

    std::string seed_arg = "seed";
    std::string seed_text = o.seed;
    if (seed_text.empty()) {
        const char *env = std::getenv("SIGMADET_SEED");
        seed_arg = "SIGMADET_SEED";
        seed_text = env != nullptr ? env : "0";
    }
    const auto seed = parse_seed(seed_text);
    if (!seed) {
        return report_error(out, err, "InvalidArgument", seed_arg, seed_text, "seed must be an unsigned integer");
    }

    CampaignConfig config;
    config.identity = *identity;
    config.omega1 = lattice.omega1;
    config.omega2 = lattice.omega2;
    config.n_or_m = o.n;
    config.trials = o.trials;
    config.seed = *seed;
    config.tolerance = o.tol;
    config.family = *family;
    config.threads = o.threads;

    std::ostringstream tol_text;
    tol_text << o.tol;
    const std::map<std::string, std::string> given{{"lattice", lattice.text},
                                                   {n_name, std::to_string(o.n)},
                                                   {"trials", std::to_string(o.trials)},
                                                   {"tol", tol_text.str()}};
    CampaignResult result;
    try {
        validate(config);
        result = run_campaign(config);
    } catch (const Error &e) {
        Error renamed = e;
        if (e.argument() == "n" || e.argument() == "m") {
            renamed = Error(e.kind(), n_name, e.what());
        }
        return report_library_error(renamed, given, out, err);
    }

    // buffered so that nothing reaches `out` unless the campaign completed
    std::ostringstream report;
    write_report(result, *format, report);
    out << report.str();
    return result.summary.passed ? exit_pass : exit_tolerance_failure;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Weierstrass sigma/zeta/pe evaluation and determinant identity checks", "sigmadet"};
    app.require_subcommand(1);

    EvalOptions eval;
    auto *eval_cmd = app.add_subcommand("eval", "evaluate sigma, zeta, pe or a pe derivative at one point");
    eval_cmd->add_option("--lattice", eval.lattice.text, "periods as two complex literals")
        ->capture_default_str();
    eval_cmd->add_option("--fn", eval.fn, "sigma | zeta | pe | pe_k")->required();
    eval_cmd->add_option("--u", eval.u, "argument, e.g. 0.5+0.5i")->required();
    eval_cmd->add_option("--k", eval.k, "derivative order for pe_k")->capture_default_str();

    VerifyOptions verify;
    auto *verify_cmd = app.add_subcommand("verify", "run a seeded verification campaign");
    verify_cmd->add_option("--identity", verify.identity, "fs | hermite | kiepert | confluence | multiplication")
        ->required();
    auto *n_opt = verify_cmd->add_option("--n", verify.n, "determinant order")->capture_default_str();
    auto *m_opt = verify_cmd->add_option("--m", verify.n, "multiplier (multiplication identity)");
    n_opt->excludes(m_opt);
    verify_cmd->add_option("--trials", verify.trials)->capture_default_str();
    verify_cmd->add_option("--seed", verify.seed, "default: $SIGMADET_SEED, else 0");
    verify_cmd->add_option("--tol", verify.tol)->capture_default_str();
    verify_cmd->add_option("--lattice", verify.lattice.text)->capture_default_str();
    verify_cmd->add_option("--format", verify.format, "json | csv | human")->capture_default_str();
    verify_cmd->add_option("--family", verify.family, "confluence family: pe | polynomial")->capture_default_str();
    verify_cmd->add_option("--threads", verify.threads, "0 = all cores")->capture_default_str();

    auto *info_cmd = app.add_subcommand("info", "print the selected kernel variant");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_pass;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_pass;
    } catch (const CLI::ParseError &e) {
        const std::string offending = args.empty() ? std::string() : args.front();
        return report_error(out, err, "InvalidArgument", "command", offending, e.what());
    }

    if (eval_cmd->parsed()) {
        return cmd_eval(eval, out, err);
    }
    if (verify_cmd->parsed()) {
        return cmd_verify(verify, m_opt->count() > 0, out, err);
    }
    if (info_cmd->parsed()) {
        out << "kernel " << kernels::isa_name(kernels::active_isa()) << '\n';
        return exit_pass;
    }
    return exit_error;
}

} // namespace sigmadet::cli
