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

#include "netseq/trig.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "netseq/detail/kahan.hpp"

namespace netseq {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// In-place radix-2 transform V[j] = sum_m v[m] e^{+2 pi i j m / n}.
void fft_plus(std::vector<Complex>& v) {
    const std::size_t n = v.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(v[i], v[j]);
    }
    std::vector<Complex> root(n / 2);
    for (std::size_t r = 0; r < n / 2; ++r) {
        root[r] = std::polar(1.0, 2.0 * kPi * static_cast<double>(r) /
                                      static_cast<double>(n));
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const Complex u = v[i + k];
                const Complex t = root[k * stride] * v[i + k + len / 2];
                v[i + k] = u + t;
                v[i + k + len / 2] = u - t;
            }
        }
    }
}

void require_uniform(std::span<const double> grid) {
    const std::size_t m = grid.size();
    if (m == 0) throw std::invalid_argument("evaluate: empty grid");
    const double step = 2.0 * kPi / static_cast<double>(m);
    for (std::size_t j = 0; j < m; ++j) {
        const double expected = -kPi + step * static_cast<double>(j);
        if (std::abs(grid[j] - expected) > 1e-9) {
            throw std::invalid_argument(
                "evaluate: grid must be uniform over [-pi, pi)");
        }
    }
}

int dyadic_block(std::int64_t abs_k) {  // n with 2^{n-1} <= |k| < 2^n
    int n = 1;
    while ((std::int64_t{1} << n) <= abs_k) ++n;
    return n;
}

}  // namespace

std::vector<double> uniform_grid(int m) {
    if (m < 1) throw std::invalid_argument("uniform_grid: m must be >= 1");
    std::vector<double> x(static_cast<std::size_t>(m));
    const double step = 2.0 * kPi / static_cast<double>(m);
    for (int j = 0; j < m; ++j) {
        x[static_cast<std::size_t>(j)] = -kPi + step * static_cast<double>(j);
    }
    return x;
}

std::vector<Complex> evaluate(const TwoSidedSequence& a,
                              std::span<const double> grid) {
    require_uniform(grid);
    const std::size_t m = grid.size();
    if (is_pow2(m) && m >= 2) {
        // At the nodes x_j = -pi + 2pi j/m with m even, e^{ikx_j} equals
        // (-1)^k w^{jk} with w = e^{2pi i/m}, and k and k+m give identical
        // node values.  Folding coefficients mod m is therefore exact.
        std::vector<Complex> bins(m, Complex{});
        for (std::int64_t k = a.k_min(); k <= a.k_max(); ++k) {
            const std::size_t idx = static_cast<std::size_t>(
                ((k % static_cast<std::int64_t>(m)) +
                 static_cast<std::int64_t>(m)) %
                static_cast<std::int64_t>(m));
            const double sign = (k & 1) ? -1.0 : 1.0;
            bins[idx] += sign * a.at(k);
        }
        fft_plus(bins);
        return bins;
    }
    std::vector<Complex> out(m, Complex{});
    for (std::size_t j = 0; j < m; ++j) {
        Complex sum{};
        for (std::int64_t k = a.k_min(); k <= a.k_max(); ++k) {
            sum += a.at(k) * std::polar(1.0, static_cast<double>(k) * grid[j]);
        }
        out[j] = sum;
    }
    return out;
}

double lp_norm_at(const TwoSidedSequence& a, double p, int m) {
    if (!(p > 1.0) || std::isinf(p)) {
        throw std::invalid_argument("lp_norm_at: need 1 < p < inf");
    }
    if (m < 2 || !is_pow2(static_cast<std::size_t>(m))) {
        throw std::invalid_argument("lp_norm_at: m must be a power of two");
    }
    const std::vector<Complex> f = evaluate(a, uniform_grid(m));
    detail::KahanSum acc;
    for (const Complex& v : f) acc.add(std::pow(std::abs(v), p));
    return std::pow(acc.value() * 2.0 * kPi / static_cast<double>(m), 1.0 / p);
}

LpNorm lp_norm(const TwoSidedSequence& a, double p, const QuadratureSpec& spec) {
    if (!(p > 1.0) || std::isinf(p)) {
        throw std::invalid_argument("lp_norm: need 1 < p < inf");
    }
    if (spec.sample_count < 2 ||
        !is_pow2(static_cast<std::size_t>(spec.sample_count))) {
        throw std::invalid_argument("lp_norm: sample_count must be a power of two");
    }
    if (spec.oversample < 4) {
        throw std::invalid_argument("lp_norm: oversample must be >= 4");
    }
    if (!(spec.refine_tolerance > 0.0)) {
        throw std::invalid_argument("lp_norm: refine_tolerance must be > 0");
    }
    const std::int64_t needed =
        static_cast<std::int64_t>(spec.oversample) *
        (2 * a.support_radius() + 1);
    std::int64_t m = spec.sample_count;
    while (m < needed) m <<= 1;
    if (m > (std::int64_t{1} << 26)) {
        throw std::invalid_argument("lp_norm: grid too large at this support");
    }
    double prev = lp_norm_at(a, p, static_cast<int>(m));
    for (int d = 0; d < spec.max_doublings; ++d) {
        m <<= 1;
        const double cur = lp_norm_at(a, p, static_cast<int>(m));
        if (std::abs(cur - prev) <= spec.refine_tolerance * std::abs(cur)) {
            return {cur, true, static_cast<int>(m)};
        }
        prev = cur;
    }
    return {prev, false, static_cast<int>(m)};
}

TwoSidedSequence partial_sum(const TwoSidedSequence& a, int n) {
    if (n < 0 || n > 61) {
        throw std::invalid_argument("partial_sum: n out of range");
    }
    const std::int64_t cutoff = std::int64_t{1} << n;
    return restricted(a, -cutoff, cutoff);
}

TwoSidedSequence apply_multiplier(const TwoSidedSequence& a,
                                  MultiplierKind kind) {
    std::vector<Complex> v(a.size());
    for (std::int64_t k = a.k_min(); k <= a.k_max(); ++k) {
        double sign = 1.0;
        if (kind == MultiplierKind::Alternating) {
            sign = (k & 1) ? -1.0 : 1.0;
        } else if (k != 0) {
            sign = (dyadic_block(std::abs(k)) & 1) ? -1.0 : 1.0;
        }
        v[static_cast<std::size_t>(k - a.k_min())] = sign * a.at(k);
    }
    return TwoSidedSequence(a.k_min(), std::move(v));
}

TwoSidedSequence apply_multiplier(const TwoSidedSequence& a,
                                  std::span<const int> signs) {
    if (signs.size() != a.size()) {
        throw std::invalid_argument(
            "apply_multiplier: signs must match the stored window");
    }
    std::vector<Complex> v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (signs[i] != 1 && signs[i] != -1) {
            throw std::invalid_argument("apply_multiplier: entries must be +-1");
        }
        v[i] = static_cast<double>(signs[i]) * a.values()[i];
    }
    return TwoSidedSequence(a.k_min(), std::move(v));
}

}  // namespace netseq
