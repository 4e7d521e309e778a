// Copyright 2026 The netseq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <limits>
#include <sstream>

#include "netseq/generators.hpp"
#include "netseq/gm_classes.hpp"
#include "netseq/io.hpp"

using namespace netseq;

namespace {

TwoSidedSequence random_sequence(std::uint64_t seed, std::int64_t size) {
    FamilyParams params;
    params.seed = seed;
    return make_family(FamilyKind::RandomComplex, params, size);
}

}  // namespace

TEST_CASE("json sequence round trip is exact") {
    const TwoSidedSequence a = random_sequence(201, 40);
    std::stringstream buf;
    write_sequence_json(a, buf);
    const TwoSidedSequence b = read_sequence_json(buf);
    CHECK(a == b);
}

TEST_CASE("csv sequence round trip is exact") {
    const TwoSidedSequence a = random_sequence(202, 25);
    std::stringstream buf;
    write_sequence_csv(a, buf);
    const TwoSidedSequence b = read_sequence_csv(buf);
    CHECK(a == b);
}

TEST_CASE("writers are deterministic") {
    const TwoSidedSequence a = random_sequence(203, 18);
    std::stringstream s1, s2;
    write_sequence_json(a, s1);
    write_sequence_json(a, s2);
    CHECK(s1.str() == s2.str());
    std::stringstream c1, c2;
    write_sequence_csv(a, c1);
    write_sequence_csv(a, c2);
    CHECK(c1.str() == c2.str());
}

TEST_CASE("readers reject malformed input") {
    std::stringstream mismatched(
        R"({"offset": 0, "re": [1.0, 2.0], "im": [0.0]})");
    CHECK_THROWS_AS(read_sequence_json(mismatched), std::runtime_error);

    std::stringstream nan_entry(
        R"({"offset": 0, "re": [1.0], "im": [null]})");
    CHECK_THROWS_AS(read_sequence_json(nan_entry), std::runtime_error);

    std::stringstream missing(R"({"offset": 0, "re": [1.0]})");
    CHECK_THROWS_AS(read_sequence_json(missing), std::runtime_error);

    std::stringstream fractional_offset(
        R"({"offset": 0.5, "re": [1.0], "im": [0.0]})");
    CHECK_THROWS_AS(read_sequence_json(fractional_offset), std::runtime_error);

    std::stringstream bad_row("0,1.0\n");
    CHECK_THROWS_AS(read_sequence_csv(bad_row), std::runtime_error);

    std::stringstream bad_number("0,1.0,oops\n");
    CHECK_THROWS_AS(read_sequence_csv(bad_number), std::runtime_error);

    std::stringstream duplicate("0,1.0,0.0\n0,2.0,0.0\n");
    CHECK_THROWS_AS(read_sequence_csv(duplicate), std::runtime_error);

    std::stringstream empty("");
    CHECK_THROWS_AS(read_sequence_csv(empty), std::runtime_error);

    std::stringstream inf_entry("0,inf,0.0\n");
    CHECK_THROWS_AS(read_sequence_csv(inf_entry), std::runtime_error);
}

TEST_CASE("csv gaps read as zeros") {
    std::stringstream sparse("# comment\n-2,1.0,0.0\n3,0.0,2.0\n");
    const TwoSidedSequence a = read_sequence_csv(sparse);
    CHECK(a.k_min() == -2);
    CHECK(a.k_max() == 3);
    CHECK(a.at(0) == Complex(0, 0));
    CHECK(a.at(3) == Complex(0, 2));
}

TEST_CASE("norm report serializes with the exact field names") {
    NormReport r;
    r.p = 2.0;
    r.p_prime = 2.0;
    r.ratios = {{"lp_over_j_p", 1.5},
                {"net_norm_over_lp",
                 std::numeric_limits<double>::infinity()}};
    const auto doc = to_json(r);
    const std::vector<std::string> expected = {
        "p",        "p_prime",      "j_p",
        "j_p_star", "i_p",          "net_norm",
        "lorentz_norm", "lp_quadrature", "ratios"};
    std::vector<std::string> got;
    for (auto it = doc.begin(); it != doc.end(); ++it) got.push_back(it.key());
    CHECK(got == expected);
    CHECK(doc["ratios"]["lp_over_j_p"] == 1.5);
    CHECK(doc["ratios"]["net_norm_over_lp"] == "inf");
}

TEST_CASE("diagnostic CSV uses the documented columns") {
    ClassDiagnostic d;
    d.class_name = SequenceClass::GmBar;
    d.block_index = {0, 2};
    d.numerator = {1.0, 0.5};
    d.denominator = {2.0, 0.0};
    d.ratio = {0.5, std::numeric_limits<double>::infinity()};
    d.best_constant = d.ratio[1];
    d.witness = 2;
    d.verdict = Verdict::Growing;
    std::stringstream buf;
    write_diagnostic_csv(d, buf);
    std::string line;
    std::getline(buf, line);
    CHECK(line == std::string("n,numerator,denominator,ratio"));
    std::getline(buf, line);
    CHECK(line == std::string("0,1,2,0.5"));
    std::getline(buf, line);
    CHECK(line == std::string("2,0.5,0,inf"));

    const auto doc = to_json(d);
    CHECK(doc["verdict"] == "growing");
    CHECK(doc["ratio"][1] == "inf");
    CHECK(doc["class"] == "gm-bar");
}

TEST_CASE("profile and grid CSV headers") {
    const TwoSidedSequence a = random_sequence(207, 6);
    std::stringstream buf;
    write_profile_csv(make_dyadic_profile(a), buf);
    std::string line;
    std::getline(buf, line);
    CHECK(line ==
          std::string("n,theta,tilde_avg,hat_avg,majorant_tilde,majorant_hat"));

    std::stringstream grid_buf;
    const std::vector<double> x = {0.0, 0.5};
    const std::vector<Complex> f = {{1, 2}, {3, 4}};
    write_grid_csv(x, f, grid_buf);
    std::getline(grid_buf, line);
    CHECK(line == std::string("x,re_f,im_f"));
    std::getline(grid_buf, line);
    CHECK(line == std::string("0,1,2"));
}

TEST_CASE("fmt17 round-trips doubles") {
    for (double x : {1.0 / 3.0, 2.5066282746310002, -0.0, 1e-300}) {
        CHECK(std::stod(fmt17(x)) == x);
    }
}
