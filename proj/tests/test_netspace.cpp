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

#include <cmath>
#include <limits>
#include <numbers>

#include "netseq/frozen.hpp"
#include "netseq/functionals.hpp"
#include "netseq/generators.hpp"
#include "netseq/netspace.hpp"
#include "oracles.hpp"

using namespace netseq;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

TwoSidedSequence random_sequence(std::uint64_t seed, std::int64_t size) {
    FamilyParams params;
    params.seed = seed;
    return make_family(FamilyKind::RandomComplex, params, size);
}

TwoSidedSequence halve_origin(const TwoSidedSequence& a) {
    std::vector<Complex> v = a.values();
    const std::int64_t zero_pos = -a.k_min();
    if (zero_pos >= 0 && zero_pos < static_cast<std::int64_t>(v.size())) {
        v[static_cast<std::size_t>(zero_pos)] *= 0.5;
    }
    return {a.k_min(), std::move(v)};
}

}  // namespace

TEST_CASE("prefix sums evaluate interval sums exactly") {
    const TwoSidedSequence a = random_sequence(5, 12);
    const PrefixSums ps(a);
    for (std::int64_t i = -15; i <= 15; ++i) {
        for (std::int64_t j = i; j <= 15; ++j) {
            Complex direct{};
            for (std::int64_t k = i; k <= j; ++k) direct += a.at(k);
            CHECK(std::abs(ps.interval(i, j) - direct) < 1e-12);
        }
    }
}

TEST_CASE("tilde average closed cases") {
    const TwoSidedSequence d(0, {Complex(1, 0)});
    CHECK(tilde_average(d, 1) == doctest::Approx(1.0));
    CHECK(tilde_average(d, 4) == doctest::Approx(0.25));
    CHECK_THROWS_AS(tilde_average(d, 0), std::invalid_argument);

    std::vector<Complex> ones(8, Complex(1, 0));
    const TwoSidedSequence c(1, ones);
    CHECK(tilde_average(c, 2) == doctest::Approx(1.0));
    CHECK(tilde_average(TwoSidedSequence::zero(), 3) == 0.0);
}

TEST_CASE("tilde average agrees with the exhaustive window oracle") {
    const std::vector<TwoSidedSequence> fixtures = {
        random_sequence(21, 10),
        random_sequence(22, 33),
        make_example(ExampleName::Prop7Lacunary, 5),
        make_family(FamilyKind::Power, {0.75, 1}, 24),
    };
    for (const auto& a : fixtures) {
        for (std::int64_t k : {1, 2, 3, 5, 8, 16, 70, 200}) {
            const double got = tilde_average(a, k);
            const double want = oracle::tilde_average(a, k);
            CHECK(got == doctest::Approx(want).epsilon(1e-12));
        }
    }
}

TEST_CASE("tilde table matches per-k evaluation including the tail") {
    const TwoSidedSequence a = random_sequence(31, 40);
    const TildeTable table = tilde_table(a);
    for (std::int64_t k : {1, 2, 7, 41, 81, 200, 1000}) {
        CHECK(table.at(k) ==
              doctest::Approx(tilde_average(a, k)).epsilon(1e-12));
    }
    // nonincreasing in k
    for (std::int64_t k = 2; k <= 120; ++k) {
        CHECK(table.at(k) <= table.at(k - 1) * (1 + 1e-15));
    }
}

TEST_CASE("prop-6 interval average dominates (3/4)(2/3)^n") {
    const int nmax = 8;
    const TwoSidedSequence c = make_example(ExampleName::Prop6Compensated, nmax);
    const TildeTable table = tilde_table(c);
    for (int n = 4; n <= nmax; ++n) {
        CHECK(table.at(std::int64_t{1} << n) >=
              0.75 * std::pow(2.0 / 3.0, n));
    }
}

TEST_CASE("hat average closed cases and oracle agreement") {
    const TwoSidedSequence d(0, {Complex(1, 0)});
    CHECK(hat_average(d, 0) == doctest::Approx(0.5));
    const TwoSidedSequence a = random_sequence(41, 30);
    for (int level = 0; level <= 7; ++level) {
        CHECK(hat_average(a, level) ==
              doctest::Approx(oracle::hat_average(a, level)).epsilon(1e-12));
    }
}

TEST_CASE("prop-7 hat averages: negative side decays, full side stays fat") {
    const int nmax = 8;
    const TwoSidedSequence c = make_example(ExampleName::Prop7Lacunary, nmax);
    const TwoSidedSequence neg = restricted(c, c.k_min(), 0);
    for (int k = 1; k <= nmax; ++k) {
        CHECK(hat_average(neg, k) * std::exp2(k) <=
              frozen().prop7_neg_hat_upper);
    }
    // the two-sided sequence keeps mass near level n+2 (holds from n = 2 on)
    for (int n = 2; n + 3 <= nmax; ++n) {
        CHECK(hat_average(c, n + 2) >= 0.75 * std::pow(2.0 / 3.0, n));
    }
}

TEST_CASE("tilde almost-monotone: a~_{2^k} <= 5 a~_{2^{k+1}}") {
    for (std::uint64_t seed = 50; seed < 58; ++seed) {
        const TwoSidedSequence a = random_sequence(seed, 60);
        const TildeTable table = tilde_table(a);
        for (int k = 0; k <= 9; ++k) {
            CHECK(table.at(std::int64_t{1} << k) <=
                  5.0 * table.at(std::int64_t{1} << (k + 1)));
        }
    }
}

TEST_CASE("halving the origin grows no interval average past 6x") {
    for (std::uint64_t seed = 60; seed < 66; ++seed) {
        const TwoSidedSequence a = random_sequence(seed, 35);
        const TwoSidedSequence b = halve_origin(a);
        const TildeTable ta = tilde_table(a);
        const TildeTable tb = tilde_table(b);
        for (int r = 0; r <= 8; ++r) {
            CHECK(tb.at(std::int64_t{1} << r) <=
                  6.0 * ta.at(std::int64_t{1} << r));
        }
    }
}

TEST_CASE("rearranged top-k mean dominates every interval average") {
    const std::vector<TwoSidedSequence> fixtures = {
        random_sequence(71, 45),
        make_family(FamilyKind::Power, {0.6, 1}, 32),
        make_example(ExampleName::Prop6Compensated, 6),
    };
    for (const auto& a : fixtures) {
        const TildeTable table = tilde_table(a);
        const RearrangedSequence r = symmetric_rearrangement(a);
        double top_sum = 0.0;
        const std::int64_t diameter = static_cast<std::int64_t>(a.size());
        for (std::int64_t k = 1; k <= 2 * diameter; ++k) {
            top_sum += r.one_sided(static_cast<std::size_t>(k));
            CHECK(table.at(k) <=
                  (top_sum / static_cast<double>(k)) * (1 + 1e-12));
        }
    }
}

TEST_CASE("anchored averages never exceed interval averages") {
    for (std::uint64_t seed = 80; seed < 86; ++seed) {
        const TwoSidedSequence a = random_sequence(seed, 50);
        const TildeTable table = tilde_table(a);
        for (int level = 0; level <= 8; ++level) {
            CHECK(hat_average(a, level) <=
                  table.at(std::int64_t{1} << level) * (1 + 1e-12));
        }
    }
}

TEST_CASE("net norm of the unit impulse is sqrt(pi^2/6)") {
    const TwoSidedSequence d(0, {Complex(1, 0)});
    const double got = net_norm(d, 2.0, 2.0);
    CHECK(got == doctest::Approx(std::sqrt(std::numbers::pi *
                                           std::numbers::pi / 6.0))
                     .epsilon(1e-10));
    // partial-sum bracket: sum_{k>K} k^-2 lies in (1/(K+1), 1/K)
    const std::int64_t cutoff = 1000000;
    double partial = 0.0;
    for (std::int64_t k = cutoff; k >= 1; --k) {
        partial += 1.0 / (static_cast<double>(k) * static_cast<double>(k));
    }
    CHECK(got * got > partial + 1.0 / static_cast<double>(cutoff + 1));
    CHECK(got * got < partial + 1.0 / static_cast<double>(cutoff));
}

TEST_CASE("net norm edge cases and validation") {
    CHECK(net_norm(TwoSidedSequence::zero(), 2.0, 2.0) == 0.0);
    const TwoSidedSequence d(0, {Complex(1, 0)});
    // q = inf: sup_k k^{1/p} a~_k with a~_k = 1/k peaks at k = 1
    CHECK(net_norm(d, 2.0, kInf) == doctest::Approx(1.0));
    CHECK(net_norm(d, kInf, kInf) == doctest::Approx(1.0));  // p = inf allowed
    CHECK_THROWS_AS(net_norm(d, 1.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(net_norm(d, 0.5, kInf), std::invalid_argument);
    CHECK_THROWS_AS(net_norm(d, 2.0, -1.0), std::invalid_argument);
}

TEST_CASE("net norm sits within the frozen gap of its dyadic-sum form") {
    const double cap = frozen().net_dyadic_equiv_max;
    REQUIRE(cap > 1.0);
    for (int i = 0; i < 100; ++i) {
        FamilyParams params;
        params.seed = 300 + static_cast<std::uint64_t>(i);
        const TwoSidedSequence a = make_family(
            FamilyKind::RandomComplex, params, 1 + (i * 13) % 120);
        const TildeTable table = tilde_table(a);
        for (double p : {1.5, 2.0, 3.0}) {
            const double p_prime = p / (p - 1.0);
            const double net = net_norm(table, p_prime, p);
            const std::int64_t diameter =
                static_cast<std::int64_t>(table.by_length.size());
            int top = 0;
            while ((std::int64_t{1} << top) < diameter) ++top;
            double sum = 0.0;
            for (int k = 0; k <= top; ++k) {
                sum += std::pow(std::exp2(static_cast<double>(k) / p_prime) *
                                    table.at(std::int64_t{1} << k),
                                p);
            }
            // geometric tail: terms halve past the table
            sum += std::pow(std::exp2(static_cast<double>(top + 1) / p_prime) *
                                (table.tail_numerator / std::exp2(top + 1)),
                            p) *
                   2.0;
            const double dyadic = std::pow(sum, 1.0 / p);
            CHECK(dyadic / net <= cap);
            CHECK(net / dyadic <= cap);
        }
    }
}

TEST_CASE("lorentz norm closed cases") {
    const TwoSidedSequence single(7, {Complex(0, -3)});
    CHECK(lorentz_norm(single, 2.0, 2.0) == doctest::Approx(3.0));
    CHECK(lorentz_norm(single, 1.5, 3.0) == doctest::Approx(3.0));
    const TwoSidedSequence abc(-1, {{3, 0}, {1, 0}, {2, 0}});
    CHECK(lorentz_norm(abc, 2.0, 2.0) ==
          doctest::Approx(std::sqrt(14.0)).epsilon(1e-14));
    CHECK_THROWS_AS(lorentz_norm(abc, 2.0, kInf), std::invalid_argument);
    CHECK_THROWS_AS(lorentz_norm(abc, 1.0, 2.0), std::invalid_argument);
}

TEST_CASE("rearranged functional stays within the frozen gap of the lorentz norm") {
    const double cap = frozen().jpstar_lorentz_max;
    REQUIRE(cap > 1.0);
    for (std::uint64_t seed = 400; seed < 430; ++seed) {
        const TwoSidedSequence a =
            random_sequence(seed, 5 + static_cast<std::int64_t>(seed % 90));
        for (double p : {1.25, 1.5, 2.0, 3.0, 4.0}) {
            const double star = j_p_star(a, p);
            const double lor = lorentz_norm(a, p / (p - 1.0), p);
            CHECK(star / lor <= cap);
            CHECK(lor / star <= cap);
        }
    }
}
