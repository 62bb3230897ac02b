// Copyright 2026 The dcc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#ifndef DCC_CLI_PATH
#error "DCC_CLI_PATH must point at the dcc binary"
#endif

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string &args, const std::string &env = "") {
    std::string cmd = env + " " + DCC_CLI_PATH + std::string(" ") + args + " 2>/dev/null";
    Run r;
    FILE *p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::vector<std::string> data_lines(const std::string &text) {
    std::vector<std::string> v;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#') v.push_back(line);
    return v;
}

std::string field(const std::string &line, int idx) {
    std::istringstream in(line);
    std::string f;
    for (int i = 0; i <= idx; i++) std::getline(in, f, ',');
    return f;
}

}  // namespace

TEST_CASE("predict") {
    Run r = run("predict --probe otoc8 --N 4 --k 0..8");
    CHECK(r.code == 0);
    auto rows = data_lines(r.out);
    REQUIRE(rows.size() == 10);
    CHECK(rows[0] == "probe,d,dA,k,theta,state,value,value_float,mc_mean,mc_stderr,z,samples,seed");
    CHECK(field(rows[1], 6) == "-1/255");
    CHECK(field(rows[1], 3) == "0");
    // The printed doped expression at k = 0 does not reduce to its own Clifford value.
    CHECK(field(data_lines(run("predict --probe otoc8 --N 4 --k 0 --form printed").out)[1], 6) == "16192/2380833");
    CHECK(field(data_lines(run("predict --probe purity-fluct --N 4 --k 0 --state stabilizer").out)[1], 6) == "25/578");
    CHECK(field(data_lines(run("predict --probe purity-mean --dA 4 --dB 4").out)[1], 6) == "8/17");
    CHECK(field(data_lines(run("predict --probe purity-fluct --N 4 --k inf").out)[1], 6) == "25/5491");
    CHECK(run("predict --probe otoc8 --N 2 --k 0").out.find("formal") != std::string::npos);
}

TEST_CASE("json output") {
    Run r = run("predict --probe otoc8 --N 4 --k 0,2 --format json");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "predict");
    CHECK(j.contains("version"));
    CHECK(j.contains("config"));
    REQUIRE(j["rows"].size() == 2);
    CHECK(j["rows"][0]["value"]["num"] == -1);
    CHECK(j["rows"][0]["value"]["den"] == 255);
    CHECK(j["rows"][1]["value"]["num"] == -3842623);
    CHECK(j["rows"][1]["d"] == 16);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("simulate --probe otoc8 --N 4 --k 0 --samples 0").code == 2);
    CHECK(run("predict --probe nonsense --N 4").code == 2);
    CHECK(run("predict --probe otoc8 --d 3 --k 0").code == 2);
    CHECK(run("predict --probe purity-fluct --N 3 --k 0").code == 2);
    CHECK(run("simulate --probe otoc8 --N 7 --k 0 --samples 10").code == 2);
    CHECK(run("simulate --probe purity-fluct --N 15 --k 0 --samples 10").code == 2);
    CHECK(run("--no-such-flag").code == 2);
    CHECK(run("").code == 2);
}

TEST_CASE("simulate is reproducible from its header") {
    std::string args = "simulate --probe purity-fluct --N 4 --NA 2 --k 0,2 --samples 400 --seed 9";
    Run a = run(args), b = run(args, "DCC_THREADS=3"), c = run(args, "DCC_THREADS=1");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    // Replay the embedded argv line.
    std::istringstream in(a.out);
    std::string line, argv;
    while (std::getline(in, line))
        if (line.rfind("# argv: ", 0) == 0) argv = line.substr(8);
    REQUIRE(!argv.empty());
    CHECK(run(argv).out == a.out);
    auto rows = data_lines(a.out);
    REQUIRE(rows.size() == 3);
    CHECK(field(rows[1], 11) == "400");
    CHECK(field(rows[1], 12) == "9");
    CHECK(!field(rows[1], 8).empty());
    CHECK(!field(rows[1], 9).empty());
}

TEST_CASE("threshold") {
    Run r = run("threshold --probe otoc8 --N-min 4 --N-max 12");
    REQUIRE(r.code == 0);
    auto rows = data_lines(r.out);
    REQUIRE(rows.size() == 10);
    CHECK(rows[0] == "probe,N,d,r,theta,k_star");
    CHECK(r.out.find("# fit:") != std::string::npos);
    Run big = run("threshold --probe purity-fluct --N-min 4 --N-max 8 --ratio 1e9");
    for (size_t i = 1; i < data_lines(big.out).size(); i++) CHECK(field(data_lines(big.out)[i], 5) == "0");
}

TEST_CASE("validate") {
    Run r = run("validate --level fast");
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("oracle.n1,PASS") != std::string::npos);
    // Fields containing commas are quoted.
    CHECK(r.out.find("\"W G = delta") != std::string::npos);
    Run j = run("validate --level fast --format json");
    auto doc = nlohmann::json::parse(j.out);
    REQUIRE(doc["checks"].is_array());
    for (const auto &c : doc["checks"]) {
        CHECK(c.contains("name"));
        CHECK(c.contains("pass"));
        CHECK(c.contains("detail"));
    }
    CHECK(run("validate --level nope").code == 2);
}
