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

#include "netseq/netspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "netseq/detail/kahan.hpp"

namespace netseq {

namespace {

double sq_abs(const Complex& z) {
    return z.real() * z.real() + z.imag() * z.imag();
}

// Largest |interval sum| over windows of length exactly len.  Positions run
// over every placement that meets the stored range; the window sum equals
// the sum over the clamped intersection because everything else is zero.
double best_window_norm(const PrefixSums& ps, std::int64_t k_min,
                        std::int64_t k_max, std::int64_t len) {
    double best = 0.0;
    for (std::int64_t s = k_min - len + 1; s <= k_max; ++s) {
        const std::int64_t i = std::max(s, k_min);
        const std::int64_t j = std::min(s + len - 1, k_max);
        best = std::max(best, sq_abs(ps.interval(i, j)));
    }
    return std::sqrt(best);
}

// Tail sum_{k=from}^{inf} k^{-s} for s > 1: explicit terms up to a safe
// start, then Euler-Maclaurin.  Absolute error O(start^{-s-5}).
double power_tail(std::int64_t from, double s) {
    detail::KahanSum acc;
    const std::int64_t start = std::max<std::int64_t>(from, 1 << 14);
    for (std::int64_t k = from; k < start; ++k) {
        acc.add(std::pow(static_cast<double>(k), -s));
    }
    const double a = static_cast<double>(start);
    acc.add(std::pow(a, 1.0 - s) / (s - 1.0));
    acc.add(0.5 * std::pow(a, -s));
    acc.add(s * std::pow(a, -s - 1.0) / 12.0);
    acc.add(-s * (s + 1.0) * (s + 2.0) * std::pow(a, -s - 3.0) / 720.0);
    return acc.value();
}

}  // namespace

PrefixSums::PrefixSums(const TwoSidedSequence& a) : base_(a.k_min() - 1) {
    table_.resize(a.size() + 1);
    table_[0] = Complex{};
    for (std::size_t i = 0; i < a.size(); ++i) {
        table_[i + 1] = table_[i] + a.values()[i];
    }
}

double tilde_average(const TwoSidedSequence& a, std::int64_t k) {
    if (k < 1) throw std::invalid_argument("tilde_average: k must be >= 1");
    const PrefixSums ps(a);
    const std::int64_t diameter = static_cast<std::int64_t>(a.size());
    const std::int64_t top = std::max(k, diameter);
    double best = 0.0;
    for (std::int64_t len = k; len <= top; ++len) {
        best = std::max(best,
                        best_window_norm(ps, a.k_min(), a.k_max(), len) /
                            static_cast<double>(len));
    }
    return best;
}

TildeTable tilde_table(const TwoSidedSequence& a) {
    const PrefixSums ps(a);
    const std::int64_t diameter = static_cast<std::int64_t>(a.size());
    std::vector<double> ratio(static_cast<std::size_t>(diameter));
    for (std::int64_t len = 1; len <= diameter; ++len) {
        ratio[static_cast<std::size_t>(len - 1)] =
            best_window_norm(ps, a.k_min(), a.k_max(), len) /
            static_cast<double>(len);
    }
    TildeTable out;
    out.tail_numerator =
        ratio.empty() ? 0.0 : ratio.back() * static_cast<double>(diameter);
    // a~_k = max over lengths >= k; lengths past D only lower the ratio.
    out.by_length.assign(ratio.size(), 0.0);
    double running = 0.0;
    for (std::int64_t len = diameter; len >= 1; --len) {
        running = std::max(running, ratio[static_cast<std::size_t>(len - 1)]);
        out.by_length[static_cast<std::size_t>(len - 1)] = running;
    }
    return out;
}

double hat_average(const TwoSidedSequence& a, int level) {
    if (level < 0) throw std::invalid_argument("hat_average: level must be >= 0");
    if (level > 62) throw std::invalid_argument("hat_average: level too large");
    const PrefixSums ps(a);
    const std::int64_t lo = std::int64_t{1} << level;
    const std::int64_t hi = (std::int64_t{2} << level) - 1;
    double best = 0.0;
    const auto consider = [&](std::int64_t m) {
        const Complex sum =
            m > 0 ? ps.interval(0, m) : ps.interval(m, 0);
        best = std::max(best, sq_abs(sum) /
                                  (static_cast<double>(std::abs(m)) + 1.0) /
                                  (static_cast<double>(std::abs(m)) + 1.0));
    };
    // Past the support the anchored sum is constant and the ratio decreases
    // in |m|, so one representative per side is enough out there.
    const std::int64_t pos_top = std::min(hi, std::max(lo, a.k_max() + 1));
    for (std::int64_t m = lo; m <= pos_top; ++m) consider(m);
    const std::int64_t neg_top = std::min(hi, std::max(lo, -a.k_min() + 1));
    for (std::int64_t m = lo; m <= neg_top; ++m) consider(-m);
    return std::sqrt(best);
}

double net_norm(const TwoSidedSequence& a, double p, double q) {
    return net_norm(tilde_table(a), p, q);
}

double net_norm(const TildeTable& table, double p, double q) {
    const bool q_inf = std::isinf(q);
    if (q_inf) {
        if (!(p > 1.0)) {
            throw std::invalid_argument("net_norm: need p > 1");
        }
    } else {
        if (!(p > 1.0) || std::isinf(p) || !(q > 0.0)) {
            throw std::invalid_argument(
                "net_norm: need 1 < p < inf and 0 < q <= inf");
        }
    }
    const std::int64_t diameter =
        static_cast<std::int64_t>(table.by_length.size());
    if (q_inf) {
        // k^{1/p} * M/k decreases for k > D, so the sup sits in the table.
        double best = 0.0;
        for (std::int64_t k = 1; k <= diameter; ++k) {
            best = std::max(best, std::pow(static_cast<double>(k),
                                           std::isinf(p) ? 0.0 : 1.0 / p) *
                                      table.at(k));
        }
        return best;
    }
    detail::KahanSum acc;
    for (std::int64_t k = 1; k <= diameter; ++k) {
        acc.add(std::pow(static_cast<double>(k), q / p - 1.0) *
                std::pow(table.at(k), q));
    }
    const double m = table.tail_numerator;
    if (m > 0.0) {
        const double s = 1.0 + q - q / p;  // > 1 since p > 1
        acc.add(std::pow(m, q) * power_tail(diameter + 1, s));
    }
    return std::pow(acc.value(), 1.0 / q);
}

double lorentz_norm(const TwoSidedSequence& a, double p, double q) {
    if (!(p > 1.0) || std::isinf(p) || !(q > 0.0) || std::isinf(q)) {
        throw std::invalid_argument(
            "lorentz_norm: need 1 < p < inf and 0 < q < inf");
    }
    const RearrangedSequence r = symmetric_rearrangement(a);
    detail::KahanSum acc;
    for (std::size_t n = 1; n <= r.sorted.size(); ++n) {
        acc.add(std::pow(static_cast<double>(n), q / p - 1.0) *
                std::pow(r.sorted[n - 1], q));
    }
    return std::pow(acc.value(), 1.0 / q);
}

}  // namespace netseq
