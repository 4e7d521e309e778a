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

// Acceptance suite.  One line per criterion; exit 0 only when every
// criterion passes within its stated tolerance and runtime budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "netseq/experiments.hpp"
#include "netseq/frozen.hpp"
#include "netseq/io.hpp"
#include "netseq/netspace.hpp"
#include "oracles.hpp"

using namespace netseq;

namespace {

struct Criterion {
    std::string label;
    double budget_seconds;
    std::function<bool(std::string&)> body;
};

// Shared fixture pool: the three reference constructions at nmax = 12, the
// power families, and a slice of the seeded random family.
std::vector<TwoSidedSequence> fixture_pool() {
    std::vector<TwoSidedSequence> pool;
    pool.push_back(make_example(ExampleName::Prop5Gap, 12));
    pool.push_back(make_example(ExampleName::Prop6Compensated, 12));
    pool.push_back(make_example(ExampleName::Prop7Lacunary, 12));
    for (double alpha : {0.6, 0.75, 0.9}) {
        FamilyParams params;
        params.alpha = alpha;
        pool.push_back(make_family(FamilyKind::Power, params, 1024));
    }
    pool.push_back(TwoSidedSequence(0, {Complex(1.0, 0.0)}));
    for (int i = 0; i < 30; ++i) pool.push_back(reference_family(i));
    return pool;
}

TwoSidedSequence halve_origin(const TwoSidedSequence& a) {
    std::vector<Complex> v = a.values();
    const std::int64_t zero_pos = -a.k_min();
    if (zero_pos >= 0 && zero_pos < static_cast<std::int64_t>(v.size())) {
        v[static_cast<std::size_t>(zero_pos)] *= 0.5;
    }
    return {a.k_min(), std::move(v)};
}

int levels_for(const TwoSidedSequence& a) {
    int top = 0;
    while ((std::int64_t{1} << (top + 1)) <=
           2 * static_cast<std::int64_t>(a.size())) {
        ++top;
    }
    return top;
}

bool criterion_1a(std::string& detail) {
    int violations = 0;
    for (int i = 0; i < frozen().family_count; ++i) {
        const TwoSidedSequence a = reference_family(i);
        const TildeTable table = tilde_table(a);
        for (int k = 0; k <= levels_for(a); ++k) {
            if (table.at(std::int64_t{1} << k) >
                5.0 * table.at(std::int64_t{1} << (k + 1))) {
                ++violations;
            }
        }
    }
    detail = "violations=" + std::to_string(violations);
    return violations == 0;
}

bool criterion_1b(std::string& detail) {
    int violations = 0;
    for (int i = 0; i < frozen().family_count; ++i) {
        const TwoSidedSequence a = reference_family(i);
        const TildeTable ta = tilde_table(a);
        const TildeTable tb = tilde_table(halve_origin(a));
        for (int r = 0; r <= levels_for(a); ++r) {
            if (tb.at(std::int64_t{1} << r) >
                6.0 * ta.at(std::int64_t{1} << r)) {
                ++violations;
            }
        }
    }
    detail = "violations=" + std::to_string(violations);
    return violations == 0;
}

bool criterion_1c(std::string& detail) {
    int violations = 0;
    for (int i = 0; i < frozen().family_count; ++i) {
        const TwoSidedSequence a = reference_family(i);
        int top = 0;
        while ((std::int64_t{1} << top) < a.support_radius()) ++top;
        for (const double p : {1.25, 1.5, 2.0, 3.0, 4.0}) {
            const double cap =
                std::exp2(1.0 / conjugate_exponent(p)) * i_p(a, p);
            for (int n = 0; n <= top + 1; ++n) {
                if (i_p(partial_sum(a, n), p) > cap) ++violations;
            }
        }
    }
    detail = "violations=" + std::to_string(violations);
    return violations == 0;
}

bool criterion_2(std::string& detail) {
    double worst = 0.0;
    for (const TwoSidedSequence& a : fixture_pool()) {
        const double direct = oracle::parseval_l2(a);
        if (direct == 0.0) continue;
        const double quad = lp_norm(a, 2.0).value;
        worst = std::max(worst, std::abs(quad - direct) / direct);
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "max_rel_err=%.3g", worst);
    detail = buf;
    return worst <= 1e-8;
}

bool criterion_3(std::string& detail) {
    int failed = 0;
    int total = 0;
    for (const auto name :
         {ExampleName::Prop5Gap, ExampleName::Prop6Compensated,
          ExampleName::Prop7Lacunary}) {
        const ReproduceReport report = reproduce_report(name, 12);
        for (const ReproduceRow& row : report.rows) {
            ++total;
            if (!row.pass) {
                ++failed;
                std::fprintf(stderr, "  reproduce %s: %s n=%lld FAILED\n",
                             to_string(name).c_str(), row.check.c_str(),
                             static_cast<long long>(row.level));
            }
        }
    }
    detail = std::to_string(total - failed) + "/" + std::to_string(total) +
             " rows";
    return failed == 0;
}

bool criterion_4(std::string& detail) {
    bool ok = true;
    double worst_spread = 0.0;
    double worst_cauchy = 0.0;
    for (const double alpha : {0.6, 0.75, 0.9}) {
        for (const double p : {1.5, 2.0, 3.0}) {
            if (!(alpha > 1.0 / conjugate_exponent(p))) continue;
            FamilyParams params;
            params.alpha = alpha;
            std::vector<double> ratios;
            for (std::int64_t size = 64; size <= 4096; size *= 2) {
                const TwoSidedSequence a =
                    make_family(FamilyKind::Power, params, size);
                ratios.push_back(lp_norm(a, p).value / j_p(a, p));
            }
            double lo = ratios[0], hi = ratios[0];
            for (double r : ratios) {
                lo = std::min(lo, r);
                hi = std::max(hi, r);
            }
            const double spread = hi / lo;
            const double cauchy =
                std::abs(ratios.back() - ratios[ratios.size() - 2]) /
                ratios.back();
            worst_spread = std::max(worst_spread, spread);
            worst_cauchy = std::max(worst_cauchy, cauchy);
            if (spread > 2.0 || cauchy >= 0.05) ok = false;
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "max_spread=%.4f max_last_step=%.4f",
                  worst_spread, worst_cauchy);
    detail = buf;
    return ok;
}

bool criterion_5(std::string& detail) {
    double worst = 0.0;
    bool exact = true;
    for (const TwoSidedSequence& a : fixture_pool()) {
        const TwoSidedSequence b =
            apply_multiplier(a, MultiplierKind::Alternating);
        for (const double p : {1.5, 2.0, 3.0}) {
            // bitwise contract, on the raw and the sorted magnitudes
            if (j_p(a, p) != j_p(b, p)) exact = false;
            if (j_p_star(a, p) != j_p_star(b, p)) exact = false;
            const double la = lp_norm(a, p).value;
            const double lb = lp_norm(b, p).value;
            if (la > 0.0) worst = std::max(worst, std::abs(la - lb) / la);
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "j_p bitwise=%s lp_rel=%.3g",
                  exact ? "yes" : "NO", worst);
    detail = buf;
    return exact && worst <= 1e-6;
}

bool criterion_6(std::string& detail) {
    double worst_tilde = 0.0;
    double worst_lp = 0.0;
    for (const TwoSidedSequence& a : fixture_pool()) {
        if (a.size() > 256) continue;
        for (const std::int64_t k : {1, 2, 3, 5, 9, 17, 33, 80, 300}) {
            const double got = tilde_average(a, k);
            const double want = oracle::tilde_average(a, k);
            if (want == 0.0) {
                worst_tilde = std::max(worst_tilde, got);
            } else {
                worst_tilde =
                    std::max(worst_tilde, std::abs(got - want) / want);
            }
        }
        for (const double p : {1.5, 2.0, 3.0}) {
            const double got = lp_norm_at(a, p, 2048);
            const double want = oracle::lp_norm_at(a, p, 2048);
            worst_lp = std::max(worst_lp, std::abs(got - want) / want);
        }
    }
    char buf[80];
    std::snprintf(buf, sizeof buf, "tilde_rel=%.3g lp_rel=%.3g", worst_tilde,
                  worst_lp);
    detail = buf;
    return worst_tilde <= 1e-12 && worst_lp <= 1e-10;
}

bool criterion_7(std::string& detail) {
    int violations = 0;
    for (const TwoSidedSequence& a : fixture_pool()) {
        const TildeTable table = tilde_table(a);
        const RearrangedSequence r = symmetric_rearrangement(a);
        double top_sum = 0.0;
        const std::int64_t diameter = static_cast<std::int64_t>(a.size());
        for (std::int64_t k = 1; k <= 2 * diameter; ++k) {
            top_sum += r.one_sided(static_cast<std::size_t>(k));
            const double mean = top_sum / static_cast<double>(k);
            // exact mathematical inequality; 1e-12 absorbs the differing
            // rounding of the two evaluation routes at equality cases
            if (table.at(k) > mean * (1.0 + 1e-12)) ++violations;
        }
    }
    detail = "violations=" + std::to_string(violations);
    return violations == 0;
}

bool criterion_8(std::string& detail) {
    double worst_slack = 1e300;
    int violations = 0;
    for (int i = 0; i < frozen().family_count; ++i) {
        const TwoSidedSequence a = reference_family(i);
        const TildeTable table = tilde_table(a);
        for (int gi = 0; gi < FrozenConstants::kFourierGridSize; ++gi) {
            const double p = FrozenConstants::kFourierGrid[gi];
            const double net = net_norm(table, conjugate_exponent(p), p);
            const double lp = lp_norm(a, p).value;
            const double cap = frozen().fourier_net_over_lp_max[gi];
            if (net / lp > cap) ++violations;
            worst_slack = std::min(worst_slack, cap - net / lp);
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "violations=%d min_slack=%.3g", violations,
                  worst_slack);
    detail = buf;
    return violations == 0;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"1a interval-average almost-monotonicity (factor 5)", 30.0,
         criterion_1a},
        {"1b origin-halving stability (factor 6)", 30.0, criterion_1b},
        {"1c partial-sum contraction of I_p (factor 2^{1/p'})", 30.0,
         criterion_1c},
        {"2  quadrature matches the coefficient-sum L_2 value (1e-8)", 10.0,
         criterion_2},
        {"3  named-example reproductions at nmax=12", 60.0, criterion_3},
        {"4  lp/j_p ratio sweeps stabilize (spread<=2, step<5%)", 300.0,
         criterion_4},
        {"5  alternating multiplier invariances", 60.0, criterion_5},
        {"6  brute-force oracle agreement (1e-12 / 1e-10)", 120.0,
         criterion_6},
        {"7  rearranged top-k mean dominates interval averages", 60.0,
         criterion_7},
        {"8  net-norm/L_p caps on the seeded family", 120.0, criterion_8},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        const bool in_budget = seconds < c.budget_seconds;
        if (!ok || !in_budget) ++failures;
        std::printf("%s  %-58s %s  [%.1fs/%.0fs]\n",
                    ok && in_budget ? "PASS" : "FAIL", c.label.c_str(),
                    detail.c_str(), seconds, c.budget_seconds);
        std::fflush(stdout);
    }
    if (failures > 0) {
        std::printf("ACCEPTANCE: %d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("ACCEPTANCE: all criteria passed\n");
    return 0;
}
