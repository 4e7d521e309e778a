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

#include "netseq/generators.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace netseq {

namespace {

// mt19937_64 output mapped to [0, 1) through the top 53 bits.  The engine's
// stream is fully specified by the standard; avoiding the (implementation
// defined) std distributions keeps generated sequences identical across
// platforms.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

int isqrt_floor(int n) {
    int r = static_cast<int>(std::sqrt(static_cast<double>(n)));
    while ((r + 1) * (r + 1) <= n) ++r;
    while (r * r > n) --r;
    return r;
}

// dyadic block index of k >= 1: the n with 2^n <= k < 2^{n+1}
int block_of(std::int64_t k) {
    int n = 0;
    while ((std::int64_t{1} << (n + 1)) <= k) ++n;
    return n;
}

TwoSidedSequence make_prop5_gap(int nmax) {
    const std::int64_t lo = 16;  // blocks start at n = 4
    const std::int64_t hi = (std::int64_t{1} << (nmax + 1)) - 1;
    std::vector<Complex> v(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t k = lo; k <= hi; ++k) {
        const int n = block_of(k);
        const double value = std::ldexp(1.0, -n);
        const std::int64_t gap = (std::int64_t{1} << n) + isqrt_floor(n);
        double a = 0.0;
        if (k % 2 != 0) {
            a = value;
        } else if (k >= gap) {
            a = value;
        }
        v[static_cast<std::size_t>(k - lo)] = Complex(a, 0.0);
    }
    return TwoSidedSequence(lo, std::move(v));
}

TwoSidedSequence make_prop6_compensated(int nmax) {
    const std::int64_t hi = (std::int64_t{1} << (nmax + 1)) - 1;
    std::vector<Complex> v(static_cast<std::size_t>(hi));
    for (std::int64_t k = 1; k <= hi; ++k) {
        const int n = block_of(k);
        const double re =
            (k % 2 == 0 ? 1.0 : -1.0) * std::pow(2.0, -1.75 * n);
        const double im = std::pow(2.0 / 3.0, n);
        v[static_cast<std::size_t>(k - 1)] = Complex(re, im);
    }
    return TwoSidedSequence(1, std::move(v));
}

TwoSidedSequence make_prop7_lacunary(int nmax) {
    const std::int64_t lo = -(std::int64_t{1} << nmax);
    const std::int64_t hi = (std::int64_t{1} << (nmax + 1)) - 1;
    std::vector<Complex> v(static_cast<std::size_t>(hi - lo + 1));
    for (int n = 0; n <= nmax; ++n) {
        const double value = std::pow(2.0 / 3.0, n);
        v[static_cast<std::size_t>(-(std::int64_t{1} << n) - lo)] =
            Complex(value, 0.0);
        for (std::int64_t k = std::int64_t{1} << n;
             k < (std::int64_t{1} << (n + 1)); ++k) {
            v[static_cast<std::size_t>(k - lo)] = Complex(value, 0.0);
        }
    }
    return TwoSidedSequence(lo, std::move(v));
}

}  // namespace

TwoSidedSequence make_example(ExampleName name, int nmax) {
    if (nmax < 5 || nmax > 21) {
        throw std::invalid_argument(
            "make_example: nmax must lie in [5, 21]");
    }
    switch (name) {
        case ExampleName::Prop5Gap:
            return make_prop5_gap(nmax);
        case ExampleName::Prop6Compensated:
            return make_prop6_compensated(nmax);
        case ExampleName::Prop7Lacunary:
            return make_prop7_lacunary(nmax);
    }
    throw std::invalid_argument("make_example: unknown example name");
}

ExampleName example_by_name(const std::string& name) {
    if (name == "prop-5-gap") return ExampleName::Prop5Gap;
    if (name == "prop-6-compensated") return ExampleName::Prop6Compensated;
    if (name == "prop-7-lacunary") return ExampleName::Prop7Lacunary;
    throw std::invalid_argument("unknown example name: " + name);
}

std::string to_string(ExampleName name) {
    switch (name) {
        case ExampleName::Prop5Gap: return "prop-5-gap";
        case ExampleName::Prop6Compensated: return "prop-6-compensated";
        case ExampleName::Prop7Lacunary: return "prop-7-lacunary";
    }
    return "?";
}

TwoSidedSequence make_family(FamilyKind kind, const FamilyParams& params,
                             std::int64_t size) {
    if (size < 1) throw std::invalid_argument("make_family: size must be >= 1");
    switch (kind) {
        case FamilyKind::Power: {
            if (params.alpha <= 0) {
                throw std::invalid_argument("make_family: alpha must be > 0");
            }
            std::vector<Complex> v(static_cast<std::size_t>(2 * size + 1));
            for (std::int64_t k = -size; k <= size; ++k) {
                v[static_cast<std::size_t>(k + size)] = Complex(
                    std::pow(static_cast<double>(std::abs(k)) + 1.0,
                             -params.alpha),
                    0.0);
            }
            return TwoSidedSequence(-size, std::move(v));
        }
        case FamilyKind::OneSidedPower: {
            if (params.alpha <= 0) {
                throw std::invalid_argument("make_family: alpha must be > 0");
            }
            std::vector<Complex> v(static_cast<std::size_t>(size));
            for (std::int64_t k = 1; k <= size; ++k) {
                v[static_cast<std::size_t>(k - 1)] = Complex(
                    std::pow(static_cast<double>(k), -params.alpha), 0.0);
            }
            return TwoSidedSequence(1, std::move(v));
        }
        case FamilyKind::RandomGm: {
            if (params.alpha <= 0) {
                throw std::invalid_argument("make_family: alpha must be > 0");
            }
            std::mt19937_64 rng(params.seed);
            std::vector<double> jitter;
            for (std::int64_t top = 1; top <= size; top <<= 1) {
                jitter.push_back(uniform(rng, 0.5, 1.5));
            }
            std::vector<Complex> v(static_cast<std::size_t>(size));
            for (std::int64_t k = 1; k <= size; ++k) {
                v[static_cast<std::size_t>(k - 1)] = Complex(
                    std::pow(static_cast<double>(k), -params.alpha) *
                        jitter[static_cast<std::size_t>(block_of(k))],
                    0.0);
            }
            return TwoSidedSequence(1, std::move(v));
        }
        case FamilyKind::RandomComplex: {
            std::mt19937_64 rng(params.seed);
            std::vector<Complex> v(static_cast<std::size_t>(2 * size + 1));
            for (std::int64_t k = -size; k <= size; ++k) {
                const double re = uniform(rng, -1.0, 1.0);
                const double im = uniform(rng, -1.0, 1.0);
                v[static_cast<std::size_t>(k + size)] = Complex(re, im);
            }
            return TwoSidedSequence(-size, std::move(v));
        }
    }
    throw std::invalid_argument("make_family: unknown family");
}

}  // namespace netseq
