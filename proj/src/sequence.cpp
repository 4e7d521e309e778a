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

#include "netseq/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace netseq {

TwoSidedSequence::TwoSidedSequence(std::int64_t offset,
                                   std::vector<Complex> values)
    : offset_(offset), values_(std::move(values)) {
    if (values_.empty()) {
        throw std::invalid_argument("TwoSidedSequence: values must be non-empty");
    }
    for (const Complex& v : values_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw std::invalid_argument(
                "TwoSidedSequence: values must be finite");
        }
    }
}

TwoSidedSequence TwoSidedSequence::zero() {
    return TwoSidedSequence(0, {Complex{}});
}

std::int64_t TwoSidedSequence::support_radius() const {
    return std::max<std::int64_t>(std::abs(k_min()), std::abs(k_max()));
}

TwoSidedSequence reflect(const TwoSidedSequence& a) {
    std::vector<Complex> v(a.values().rbegin(), a.values().rend());
    return TwoSidedSequence(-a.k_max(), std::move(v));
}

TwoSidedSequence restricted(const TwoSidedSequence& a, std::int64_t lo,
                            std::int64_t hi) {
    const std::int64_t i = std::max(lo, a.k_min());
    const std::int64_t j = std::min(hi, a.k_max());
    if (i > j) return TwoSidedSequence::zero();
    const auto first = a.values().begin() + (i - a.k_min());
    return TwoSidedSequence(i, std::vector<Complex>(first, first + (j - i + 1)));
}

double delta_abs(const TwoSidedSequence& a, std::int64_t k) {
    if (k > 0) return std::abs(a.at(k) - a.at(k + 1));
    if (k < 0) return std::abs(a.at(k) - a.at(k - 1));
    return std::abs(a.at(0) - a.at(1)) + std::abs(a.at(0) - a.at(-1));
}

double RearrangedSequence::symmetric_at(std::int64_t k) const {
    // zigzag position: 0 -> 0, -m -> 2m-1, +m -> 2m
    const std::uint64_t pos =
        k > 0 ? 2 * static_cast<std::uint64_t>(k)
              : (k < 0 ? 2 * static_cast<std::uint64_t>(-k) - 1 : 0);
    return pos < sorted.size() ? sorted[pos] : 0.0;
}

TwoSidedSequence RearrangedSequence::as_two_sided() const {
    if (sorted.empty()) return TwoSidedSequence::zero();
    // positions 0,1,2,... land on indices 0,-1,+1,-2,+2,...
    const std::int64_t n = static_cast<std::int64_t>(sorted.size());
    const std::int64_t lo = -(n / 2);
    const std::int64_t hi = (n - 1) / 2;
    std::vector<Complex> v(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t k = lo; k <= hi; ++k) {
        v[static_cast<std::size_t>(k - lo)] = Complex(symmetric_at(k), 0.0);
    }
    return TwoSidedSequence(lo, std::move(v));
}

RearrangedSequence symmetric_rearrangement(const TwoSidedSequence& a) {
    struct Entry {
        double magnitude;
        std::int64_t abs_index;
        int negative;  // 0 for k >= 0, 1 for k < 0: positive sorts first
    };
    std::vector<Entry> entries;
    entries.reserve(a.size());
    for (std::int64_t k = a.k_min(); k <= a.k_max(); ++k) {
        entries.push_back({std::abs(a.at(k)), std::abs(k), k < 0 ? 1 : 0});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
        return std::tie(y.magnitude, y.abs_index, x.negative) <
               std::tie(x.magnitude, x.abs_index, y.negative);
    });
    RearrangedSequence out;
    out.sorted.reserve(entries.size());
    for (const Entry& e : entries) out.sorted.push_back(e.magnitude);
    return out;
}

OneSidedView positive_part(const TwoSidedSequence& a) {
    std::vector<Complex> v;
    const std::int64_t n = a.k_max();
    v.reserve(n > 0 ? static_cast<std::size_t>(n) : 0);
    for (std::int64_t k = 1; k <= n; ++k) v.push_back(a.at(k));
    return OneSidedView(std::move(v));
}

OneSidedView real_part(const OneSidedView& a) {
    std::vector<Complex> v;
    v.reserve(a.max_index());
    for (std::size_t k = 1; k <= a.max_index(); ++k) {
        v.emplace_back(a.at(k).real(), 0.0);
    }
    return OneSidedView(std::move(v));
}

}  // namespace netseq
