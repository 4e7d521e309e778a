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

#include "netseq/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "netseq/detail/kahan.hpp"
#include "netseq/netspace.hpp"

namespace netseq {

namespace {

void require_p(double p, const char* who) {
    if (!(p > 1.0) || std::isinf(p)) {
        throw std::invalid_argument(std::string(who) + ": need 1 < p < inf");
    }
}

}  // namespace

double conjugate_exponent(double p) {
    require_p(p, "conjugate_exponent");
    return p / (p - 1.0);
}

int default_levels(const TwoSidedSequence& a) {
    const std::int64_t radius = a.support_radius();
    if (radius == 0) return 1;
    int top = 0;
    while ((std::int64_t{1} << top) < radius + 1) ++top;  // ceil(log2(r+1))
    return top + 1;
}

int diagnostic_levels(const TwoSidedSequence& a) {
    return default_levels(a) + 1;
}

std::vector<double> theta_blocks(const TwoSidedSequence& a, int levels) {
    if (levels < 1) throw std::invalid_argument("theta_blocks: levels >= 1");
    if (levels > 62) throw std::invalid_argument("theta_blocks: levels too large");
    std::vector<double> theta(static_cast<std::size_t>(levels), 0.0);
    theta[0] = delta_abs(a, 0);
    for (int n = 1; n < levels; ++n) {
        const std::int64_t lo = std::int64_t{1} << (n - 1);
        const std::int64_t hi = (std::int64_t{1} << n) - 1;
        detail::KahanSum acc;
        // |Delta a_m| vanishes once both neighbours sit past the support.
        const std::int64_t pos_hi = std::min(hi, a.k_max());
        for (std::int64_t m = lo; m <= pos_hi; ++m) acc.add(delta_abs(a, m));
        const std::int64_t neg_hi = std::min(hi, -a.k_min());
        for (std::int64_t m = lo; m <= neg_hi; ++m) acc.add(delta_abs(a, -m));
        theta[static_cast<std::size_t>(n)] = acc.value();
    }
    return theta;
}

double j_p(const TwoSidedSequence& a, double p) {
    require_p(p, "j_p");
    const std::int64_t radius = a.support_radius();
    detail::KahanSum acc;
    const auto add = [&](std::int64_t k) {
        const double mag = std::abs(a.at(k));
        if (mag == 0.0) return;
        acc.add(std::pow(static_cast<double>(std::abs(k)) + 1.0, p - 2.0) *
                std::pow(mag, p));
    };
    add(0);
    for (std::int64_t m = 1; m <= radius; ++m) {
        add(-m);
        add(m);
    }
    return std::pow(acc.value(), 1.0 / p);
}

double j_p_star(const TwoSidedSequence& a, double p) {
    require_p(p, "j_p_star");
    return j_p(symmetric_rearrangement(a).as_two_sided(), p);
}

double i_p(const TwoSidedSequence& a, double p, int levels) {
    require_p(p, "i_p");
    if (levels < 1 || levels > 62) {
        throw std::invalid_argument("i_p: levels out of range");
    }
    // Exactness needs every block at or beyond `levels` empty.
    if ((std::int64_t{1} << (levels - 1)) <= a.support_radius()) {
        throw std::invalid_argument("i_p: levels do not cover the support");
    }
    const double p_prime = conjugate_exponent(p);
    const std::vector<double> theta = theta_blocks(a, levels);
    detail::KahanSum acc;
    for (int k = 0; k < levels; ++k) {
        if (theta[static_cast<std::size_t>(k)] == 0.0) continue;
        acc.add(std::pow(std::exp2(static_cast<double>(k) / p_prime) *
                             theta[static_cast<std::size_t>(k)],
                         p));
    }
    return std::pow(acc.value(), 1.0 / p);
}

double i_p(const TwoSidedSequence& a, double p) {
    return i_p(a, p, default_levels(a));
}

HardyPair hardy_lhs_rhs(std::span<const double> a, double alpha, double q,
                        HardyKind kind) {
    if (!(alpha > 0.0) || !(alpha < 1.0)) {
        throw std::invalid_argument("hardy_lhs_rhs: need 0 < alpha < 1");
    }
    if (!(q > 1.0) || std::isinf(q)) {
        throw std::invalid_argument("hardy_lhs_rhs: need 1 < q < inf");
    }
    for (double x : a) {
        if (!(x >= 0.0) || !std::isfinite(x)) {
            throw std::invalid_argument(
                "hardy_lhs_rhs: entries must be nonnegative and finite");
        }
    }
    const std::size_t n = a.size();
    detail::KahanSum lhs_acc;
    detail::KahanSum rhs_acc;
    if (kind == HardyKind::Tail) {
        double suffix = 0.0;
        std::vector<double> suffixes(n, 0.0);
        for (std::size_t k = n; k-- > 0;) {
            suffix += a[k];
            suffixes[k] = suffix;
        }
        for (std::size_t k = 0; k < n; ++k) {
            const double w = std::exp2(alpha * static_cast<double>(k));
            lhs_acc.add(std::pow(w * suffixes[k], q));
            rhs_acc.add(std::pow(w * a[k], q));
        }
    } else {
        // T_k = sum_{m<=k} 2^{(alpha-1)(k-m)} 2^{alpha m} a_m, accumulated by
        // the recurrence T_k = 2^{alpha-1} T_{k-1} + 2^{alpha k} a_k; this
        // equals 2^{(alpha-1)k} sum_{m<=k} 2^m a_m without overflowing the
        // bare inner sum.
        double t = 0.0;
        const double decay = std::exp2(alpha - 1.0);
        for (std::size_t k = 0; k < n; ++k) {
            const double w = std::exp2(alpha * static_cast<double>(k));
            t = decay * t + w * a[k];
            lhs_acc.add(std::pow(t, q));
            rhs_acc.add(std::pow(w * a[k], q));
        }
    }
    return {std::pow(lhs_acc.value(), 1.0 / q),
            std::pow(rhs_acc.value(), 1.0 / q)};
}

DyadicProfile make_dyadic_profile(const TwoSidedSequence& a) {
    return make_dyadic_profile(a, diagnostic_levels(a));
}

DyadicProfile make_dyadic_profile(const TwoSidedSequence& a, int levels) {
    if (levels < 1 || levels > 62) {
        throw std::invalid_argument("make_dyadic_profile: levels out of range");
    }
    DyadicProfile out;
    out.levels = levels;
    out.theta = theta_blocks(a, levels);
    const TildeTable table = tilde_table(a);
    out.tilde_avg.resize(static_cast<std::size_t>(levels));
    out.hat_avg.resize(static_cast<std::size_t>(levels));
    for (int k = 0; k < levels; ++k) {
        out.tilde_avg[static_cast<std::size_t>(k)] =
            table.at(std::int64_t{1} << k);
        out.hat_avg[static_cast<std::size_t>(k)] = hat_average(a, k);
    }
    // sup_k min(1, 2^{k-n}) avg_{2^k}.  Levels past the table are dominated:
    // a~ is nonincreasing and a^ decays like 1/2^k out there, so the top
    // stored level already carries the supremum of the remainder.
    const auto majorant = [&](const std::vector<double>& avg, int n) {
        double best = 0.0;
        for (int k = 0; k < levels; ++k) {
            const double weight =
                k >= n ? 1.0 : std::exp2(static_cast<double>(k - n));
            best = std::max(best, weight * avg[static_cast<std::size_t>(k)]);
        }
        return best;
    };
    out.majorant_tilde.resize(static_cast<std::size_t>(levels));
    out.majorant_hat.resize(static_cast<std::size_t>(levels));
    for (int n = 0; n < levels; ++n) {
        out.majorant_tilde[static_cast<std::size_t>(n)] =
            majorant(out.tilde_avg, n);
        out.majorant_hat[static_cast<std::size_t>(n)] = majorant(out.hat_avg, n);
    }
    return out;
}

}  // namespace netseq
