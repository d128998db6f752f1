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

#include "support.hpp"

#include <sigmadet/cli/commands.hpp>
#include <sigmadet/cli/complex_literal.hpp>
#include <sigmadet/cli/report_writer.hpp>
#include <sigmadet/weierstrass.hpp>

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <sstream>

using namespace sigmadet;
using namespace sigmadet::cli;

namespace
{

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

int count_lines(const std::string &s)
{
    return static_cast<int>(std::count(s.begin(), s.end(), '\n'));
}

} // namespace

TEST_CASE("complex literals")
{
    CHECK(parse_complex("2") == Complex(2.0, 0.0));
    CHECK(parse_complex("2i") == Complex(0.0, 2.0));
    CHECK(parse_complex("-i") == Complex(0.0, -1.0));
    CHECK(parse_complex("+i") == Complex(0.0, 1.0));
    CHECK(parse_complex("0.5+0.5i") == Complex(0.5, 0.5));
    CHECK(parse_complex("1e-3-2.5e2i") == Complex(1e-3, -250.0));
    CHECK(parse_complex("-1e+2+1e-2i") == Complex(-100.0, 0.01));
    CHECK(parse_complex("1-i") == Complex(1.0, -1.0));
    CHECK_FALSE(parse_complex("").has_value());
    CHECK_FALSE(parse_complex("1 + 2i").has_value());
    CHECK_FALSE(parse_complex("1+2j").has_value());
    CHECK_FALSE(parse_complex("i1").has_value());
    CHECK_FALSE(parse_complex("inf").has_value());
    CHECK_FALSE(parse_complex("nani").has_value());
    CHECK_FALSE(parse_complex("1+2i+3").has_value());

    const auto lat = parse_lattice_spec("2,2i");
    REQUIRE(lat.has_value());
    CHECK(lat->first == Complex(2.0, 0.0));
    CHECK(lat->second == Complex(0.0, 2.0));
    CHECK_FALSE(parse_lattice_spec("2").has_value());
    CHECK_FALSE(parse_lattice_spec("2,2i,3").has_value());
}

TEST_CASE("formatting round-trips exactly")
{
    for (const Complex z : {Complex(0.1, -0.2), Complex(1.0 / 3.0, 1e-300), Complex(-0.0, 0.0),
                            Complex(123456789.123, -9.87654321e-12)}) {
        const auto back = parse_complex(format_complex(z));
        REQUIRE(back.has_value());
        CHECK(back->real() == z.real());
        CHECK(back->imag() == z.imag());
    }
}

TEST_CASE("eval passes the library value through")
{
    const auto r = call({"eval", "--lattice", "2,2i", "--fn", "pe", "--u", "0.5+0.5i"});
    CHECK(r.code == exit_pass);
    const Complex want = pe(test::square(), Complex(0.5, 0.5));
    CHECK(r.out == format_complex(want) + "\n");

    const auto k3 = call({"eval", "--lattice", "1,0.3+1.1i", "--fn", "pe_k", "--k", "3", "--u", "0.41+0.33i"});
    CHECK(k3.code == exit_pass);
    const auto got = parse_complex(k3.out.substr(0, k3.out.size() - 1));
    REQUIRE(got.has_value());
    const Lattice lat = test::generic();
    const Complex u(0.41, 0.33);
    CHECK(test::rel(*got, 12.0 * pe(lat, u) * pe_prime(lat, u)) < 1e-12);

    for (const char *fn : {"sigma", "zeta"}) {
        const auto v = call({"eval", "--fn", fn, "--u", "0.3-0.2i"});
        CHECK(v.code == exit_pass);
        CHECK(count_lines(v.out) == 1);
    }
}

TEST_CASE("eval errors")
{
    const auto pole = call({"eval", "--fn", "zeta", "--u", "0"});
    CHECK(pole.code == exit_error);
    CHECK(pole.out == "error kind=TooCloseToPole arg=u value=\"0\"\n");
    CHECK_FALSE(pole.err.empty());

    const auto degenerate = call({"eval", "--lattice", "1,2", "--fn", "pe", "--u", "0.3"});
    CHECK(degenerate.code == exit_error);
    CHECK(degenerate.out == "error kind=DegenerateLattice arg=lattice value=\"1,2\"\n");

    CHECK(call({"eval", "--fn", "pe", "--u", "0.3+x"}).out.rfind("error kind=InvalidArgument arg=u ", 0) == 0);
    CHECK(call({"eval", "--fn", "theta", "--u", "0.3"}).out.rfind("error kind=InvalidArgument arg=fn ", 0) == 0);
    CHECK(call({"eval", "--fn", "pe_k", "--k", "30", "--u", "0.3"}).out ==
          "error kind=OrderTooLarge arg=k value=\"30\"\n");
    CHECK(call({"frobnicate"}).code == exit_error);
    CHECK(call({}).code == exit_error);
    CHECK(call({"--help"}).code == exit_pass);
}

TEST_CASE("verify exit codes and report")
{
    const auto ok = call({"verify", "--identity", "kiepert", "--n", "1", "--trials", "100", "--seed", "7", "--tol",
                          "1e-9"});
    CHECK(ok.code == exit_pass);
    CHECK(count_lines(ok.out) == 102);

    const auto failing = call({"verify", "--identity", "kiepert", "--n", "3", "--trials", "5", "--tol", "1e-20"});
    CHECK(failing.code == exit_tolerance_failure);
    CHECK(count_lines(failing.out) == 7);

    const auto bad = call({"verify", "--identity", "fs", "--n", "-1"});
    CHECK(bad.code == exit_error);
    CHECK(bad.out == "error kind=InvalidArgument arg=n value=\"-1\"\n");
    CHECK(call({"verify", "--identity", "multiplication", "--m", "9"}).out ==
          "error kind=InvalidArgument arg=m value=\"9\"\n");
    CHECK(call({"verify", "--identity", "fs", "--trials", "0"}).out ==
          "error kind=InvalidArgument arg=trials value=\"0\"\n");
    CHECK(call({"verify", "--identity", "fs", "--lattice", "1,-1"}).out ==
          "error kind=DegenerateLattice arg=lattice value=\"1,-1\"\n");
    CHECK(call({"verify", "--identity", "nope"}).out.rfind("error kind=InvalidArgument arg=identity ", 0) == 0);
    CHECK(call({"verify", "--identity", "fs", "--format", "xml"}).out.rfind("error kind=InvalidArgument arg=format", 0) ==
          0);
}

TEST_CASE("json schema")
{
    const auto r = call({"verify", "--identity", "fs", "--n", "0", "--trials", "10"});
    CHECK(r.code == exit_pass);
    std::istringstream lines(r.out);
    std::string line;
    std::vector<nlohmann::json> records;
    while (std::getline(lines, line)) {
        records.push_back(nlohmann::json::parse(line));
    }
    REQUIRE(records.size() == 12);
    CHECK(records.front()["schema"] == 1);
    CHECK(records.front()["record"] == "header");
    CHECK(records.back()["schema"] == 1);
    CHECK(records.back()["record"] == "summary");
    CHECK(records.back()["skipped"] == 0);

    const std::vector<std::string> order{"identity", "n",      "seed",     "trial",     "lhs_re", "lhs_im",
                                         "rhs_re",   "rhs_im", "residual", "condition", "skipped"};
    const nlohmann::ordered_json first = nlohmann::ordered_json::parse(r.out.substr(r.out.find('\n') + 1,
                                                                                    r.out.find('\n', r.out.find('\n') + 1) -
                                                                                        r.out.find('\n') - 1));
    std::vector<std::string> keys;
    for (const auto &item : first.items()) {
        keys.push_back(item.key());
    }
    CHECK(keys == order);
    for (std::size_t i = 1; i + 1 < records.size(); ++i) {
        CHECK(records[i]["residual"].get<double>() < 1e-12);
        CHECK(records[i]["lhs_re"].get<double>() == 1.0);
    }
}

TEST_CASE("csv and human formats")
{
    const auto csv = call({"verify", "--identity", "hermite", "--n", "2", "--trials", "4", "--format", "csv"});
    CHECK(csv.code == exit_pass);
    CHECK(csv.out.rfind("# schema: 1\nidentity,n,seed,trial,lhs_re,lhs_im,rhs_re,rhs_im,residual,condition,skipped\n",
                        0) == 0);
    CHECK(count_lines(csv.out) == 7);
    CHECK(csv.out.find("# summary: evaluated=4 skipped=0") != std::string::npos);

    const auto human = call({"verify", "--identity", "hermite", "--n", "2", "--trials", "4", "--format", "human"});
    CHECK(human.code == exit_pass);
    CHECK(human.out.substr(human.out.size() - 5) == "PASS\n");
}

TEST_CASE("seeded output is byte-identical")
{
    const std::vector<std::string> args{"verify", "--identity", "multiplication", "--m", "3", "--trials", "25",
                                        "--seed", "99",     "--lattice",      "1,0.3+1.1i"};
    auto threaded = args;
    threaded.insert(threaded.end(), {"--threads", "3"});
    const auto a = call(args);
    CHECK(a.out == call(args).out);
    CHECK(a.out == call(threaded).out);
    CHECK(a.out != call({"verify", "--identity", "multiplication", "--m", "3", "--trials", "25", "--seed", "100",
                         "--lattice", "1,0.3+1.1i"})
                       .out);
}

TEST_CASE("default seed comes from the environment")
{
    const std::vector<std::string> base{"verify", "--identity", "fs", "--n", "1", "--trials", "3"};
    auto explicit_seed = base;
    explicit_seed.insert(explicit_seed.end(), {"--seed", "424242"});
    ::setenv("SIGMADET_SEED", "424242", 1);
    const auto from_env = call(base);
    ::setenv("SIGMADET_SEED", "oops", 1);
    const auto bad_env = call(base);
    ::unsetenv("SIGMADET_SEED");
    const auto default_seed = call(base);
    auto zero_seed = base;
    zero_seed.insert(zero_seed.end(), {"--seed", "0"});

    CHECK(from_env.out == call(explicit_seed).out);
    CHECK(default_seed.out == call(zero_seed).out);
    CHECK(bad_env.code == exit_error);
    CHECK(bad_env.out == "error kind=InvalidArgument arg=SIGMADET_SEED value=\"oops\"\n");
}
