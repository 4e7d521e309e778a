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

#include "netseq/gm_classes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "netseq/detail/kahan.hpp"

namespace netseq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool all_zero(const TwoSidedSequence& a) {
    return std::all_of(a.values().begin(), a.values().end(),
                       [](const Complex& v) { return v == Complex{}; });
}

// Assembles the curve from (block, numerator, denominator) triples applying
// the skip/score rules, then applies the verdict heuristic.  Entries at or
// beyond edge_floor reach past the stored support (their difference sums
// include the jump onto the zero extension) and are kept out of the growth
// comparison whenever anything else remains.
ClassDiagnostic score(SequenceClass cls,
                      const std::vector<std::int64_t>& blocks,
                      const std::vector<double>& nums,
                      const std::vector<double>& dens,
                      std::int64_t edge_floor) {
    ClassDiagnostic d;
    d.class_name = cls;
    bool saw_inf = false;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const double num = nums[i];
        const double den = dens[i];
        if (num == 0.0 && den == 0.0) continue;  // skipped, not scored
        double r;
        if (den == 0.0) {
            r = kInf;
            saw_inf = true;
        } else {
            r = num / den;
        }
        d.block_index.push_back(blocks[i]);
        d.numerator.push_back(num);
        d.denominator.push_back(den);
        d.ratio.push_back(r);
    }
    if (d.ratio.empty()) {
        d.verdict = Verdict::Inconclusive;
        return d;
    }
    const auto peak = std::max_element(d.ratio.begin(), d.ratio.end());
    d.best_constant = *peak;
    d.witness =
        d.block_index[static_cast<std::size_t>(peak - d.ratio.begin())];
    if (saw_inf) {
        d.verdict = Verdict::Growing;
        return d;
    }
    // The verdict window spans the first through the last block carrying
    // numerator mass: blocks outside it score 0 against a positive majorant
    // purely because the support is a finite window, and say nothing about
    // the class constant.
    std::size_t hi = d.ratio.size();
    while (hi > 0 && d.numerator[hi - 1] == 0.0) --hi;
    std::size_t lo = 0;
    while (lo < hi && d.numerator[lo] == 0.0) ++lo;
    if (lo >= hi) {
        // real blocks were scored but none carries difference mass: the
        // curve is identically zero and any constant dominates it
        d.verdict = Verdict::Bounded;
        return d;
    }
    // Strip the edge-contaminated tail; when every positive entry sits in
    // the edge regime, keep the window but drop its final (worst) entry.
    std::size_t trimmed = hi;
    while (trimmed > lo && d.block_index[trimmed - 1] >= edge_floor) {
        --trimmed;
    }
    if (trimmed > lo) {
        hi = trimmed;
    } else if (hi - lo >= 2) {
        --hi;
    }
    const std::size_t n = hi - lo;
    const std::size_t third = std::max<std::size_t>(n / 3, 1);
    double head_max = 0.0;
    for (std::size_t i = lo; i < lo + third; ++i) {
        head_max = std::max(head_max, d.ratio[i]);
    }
    double tail_min = kInf;
    for (std::size_t i = hi - third; i < hi; ++i) {
        tail_min = std::min(tail_min, d.ratio[i]);
    }
    d.verdict = (tail_min > 0.0 && tail_min >= 1.5 * head_max)
                    ? Verdict::Growing
                    : Verdict::Bounded;
    return d;
}

ClassDiagnostic profile_diagnostic(SequenceClass cls,
                                   const DyadicProfile& profile,
                                   const std::vector<double>& majorant) {
    std::vector<std::int64_t> blocks;
    std::vector<double> nums;
    std::vector<double> dens;
    for (int n = 0; n < profile.levels; ++n) {
        blocks.push_back(n);
        nums.push_back(profile.theta[static_cast<std::size_t>(n)]);
        dens.push_back(majorant[static_cast<std::size_t>(n)]);
    }
    // the last block with difference mass holds the support's extreme index
    // and with it the jump onto the zero extension
    std::int64_t edge_floor = std::numeric_limits<std::int64_t>::max();
    for (int n = profile.levels; n-- > 0;) {
        if (profile.theta[static_cast<std::size_t>(n)] > 0.0) {
            edge_floor = n;
            break;
        }
    }
    return score(cls, blocks, nums, dens, edge_floor);
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Bounded: return "bounded";
        case Verdict::Growing: return "growing";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::string to_string(SequenceClass c) {
    switch (c) {
        case SequenceClass::GmStar: return "gm-star";
        case SequenceClass::GmBar: return "gm-bar";
        case SequenceClass::GmClassic: return "gm";
        case SequenceClass::Wm: return "wm";
    }
    return "?";
}

ClassDiagnostic gm_star_diagnostic(const TwoSidedSequence& a) {
    if (all_zero(a)) {
        throw std::invalid_argument("gm_star_diagnostic: all-zero input");
    }
    return gm_star_diagnostic(make_dyadic_profile(a));
}

ClassDiagnostic gm_star_diagnostic(const DyadicProfile& profile) {
    return profile_diagnostic(SequenceClass::GmStar, profile,
                              profile.majorant_tilde);
}

ClassDiagnostic gm_bar_diagnostic(const TwoSidedSequence& a) {
    if (all_zero(a)) {
        throw std::invalid_argument("gm_bar_diagnostic: all-zero input");
    }
    return gm_bar_diagnostic(make_dyadic_profile(a));
}

ClassDiagnostic gm_bar_diagnostic(const DyadicProfile& profile) {
    return profile_diagnostic(SequenceClass::GmBar, profile,
                              profile.majorant_hat);
}

ClassDiagnostic gm_classic_diagnostic(const OneSidedView& a, double lambda,
                                      bool full_grid) {
    if (!(lambda > 1.0)) {
        throw std::invalid_argument("gm_classic_diagnostic: need lambda > 1");
    }
    const std::int64_t top = static_cast<std::int64_t>(a.max_index());
    std::vector<std::int64_t> probes;
    if (full_grid) {
        for (std::int64_t n = 1; n <= top; ++n) probes.push_back(n);
    } else {
        for (std::int64_t n = 1; n <= top; n *= 2) probes.push_back(n);
    }
    std::vector<double> nums;
    std::vector<double> dens;
    for (const std::int64_t n : probes) {
        detail::KahanSum lhs;
        for (std::int64_t k = n; k <= 2 * n; ++k) {
            lhs.add(std::abs(a.at(static_cast<std::size_t>(k)) -
                             a.at(static_cast<std::size_t>(k + 1))));
        }
        const std::int64_t lo = static_cast<std::int64_t>(
            std::ceil(static_cast<double>(n) / lambda));
        const std::int64_t hi = static_cast<std::int64_t>(
            std::floor(lambda * static_cast<double>(n)));
        detail::KahanSum rhs;
        for (std::int64_t k = std::max<std::int64_t>(lo, 1); k <= hi; ++k) {
            rhs.add(std::abs(a.at(static_cast<std::size_t>(k))));
        }
        nums.push_back(static_cast<double>(n) * lhs.value());
        dens.push_back(rhs.value());
    }
    // probes with 2n >= max_index include the difference onto the zero
    // extension past the last stored coefficient
    return score(SequenceClass::GmClassic, probes, nums, dens, (top + 1) / 2);
}

ClassDiagnostic wm_diagnostic(const OneSidedView& a) {
    std::vector<std::int64_t> probes;
    std::vector<double> nums;
    std::vector<double> dens;
    Complex partial{};
    for (std::size_t n = 1; n <= a.max_index(); ++n) {
        partial += a.at(n);
        probes.push_back(static_cast<std::int64_t>(n));
        nums.push_back(static_cast<double>(n) * std::abs(a.at(n)));
        dens.push_back(std::abs(partial));
    }
    // partial sums never look past n: no truncation artifact to strip
    return score(SequenceClass::Wm, probes, nums, dens,
                 std::numeric_limits<std::int64_t>::max());
}

SectorResult sector_check(const OneSidedView& a, double alpha, double beta) {
    for (std::size_t k = 1; k <= a.max_index(); ++k) {
        const Complex v = a.at(k);
        if (v == Complex{}) continue;
        const double diff =
            std::remainder(std::arg(v) - alpha, 2.0 * std::numbers::pi);
        if (std::abs(diff) > beta) {
            return {false, static_cast<std::int64_t>(k)};
        }
    }
    return {true, std::nullopt};
}

double block_harmonic_sum(const OneSidedView& a, int n) {
    if (n < 0 || n > 61) {
        throw std::invalid_argument("block_harmonic_sum: n out of range");
    }
    detail::KahanSum acc;
    const std::int64_t lo = std::int64_t{1} << n;
    const std::int64_t hi = std::int64_t{2} << n;  // inclusive
    const std::int64_t top =
        std::min<std::int64_t>(hi, static_cast<std::int64_t>(a.max_index()));
    for (std::int64_t k = lo; k <= top; ++k) {
        acc.add(std::abs(a.at(static_cast<std::size_t>(k))) /
                static_cast<double>(k));
    }
    return acc.value();
}

}  // namespace netseq
