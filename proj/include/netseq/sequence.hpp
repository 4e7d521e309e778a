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

#ifndef NETSEQ_SEQUENCE_HPP
#define NETSEQ_SEQUENCE_HPP

#include <complex>
#include <cstdint>
#include <vector>

namespace netseq {

using Complex = std::complex<double>;

/// A finite-support, two-sided sequence a_k, k in [k_min, k_max] subset of Z.
///
/// Every coefficient sequence handled by this library lives here.  Indices
/// outside the stored window read as exact zero, so lookups are total over Z.
/// Stored values must be finite; construction rejects NaN and infinities.
/// Instances are immutable after construction and safe to share across
/// threads.
class TwoSidedSequence {
public:
    /// offset is the index of the first stored coefficient (may be negative).
    TwoSidedSequence(std::int64_t offset, std::vector<Complex> values);

    /// The canonical zero sequence: a single stored 0 at index 0.
    static TwoSidedSequence zero();

    std::int64_t k_min() const { return offset_; }
    std::int64_t k_max() const {
        return offset_ + static_cast<std::int64_t>(values_.size()) - 1;
    }
    std::int64_t offset() const { return offset_; }
    std::size_t size() const { return values_.size(); }

    /// max(|k_min|, k_max): every nonzero index m satisfies |m| <= radius.
    std::int64_t support_radius() const;

    /// Total lookup: stored value, or exact zero outside [k_min, k_max].
    Complex at(std::int64_t k) const {
        if (k < offset_) return {};
        const std::int64_t i = k - offset_;
        if (i >= static_cast<std::int64_t>(values_.size())) return {};
        return values_[static_cast<std::size_t>(i)];
    }

    const std::vector<Complex>& values() const { return values_; }

    bool operator==(const TwoSidedSequence&) const = default;

private:
    std::int64_t offset_;
    std::vector<Complex> values_;
};

/// a_k -> a_{-k}.
TwoSidedSequence reflect(const TwoSidedSequence& a);

/// Zeroes every coefficient outside [lo, hi]; the stored window shrinks to
/// the intersection (or to the canonical zero sequence when it is empty).
TwoSidedSequence restricted(const TwoSidedSequence& a, std::int64_t lo,
                            std::int64_t hi);

/// The symmetric difference |Delta a_k|:
///   |a_k - a_{k+1}|               for k > 0,
///   |a_k - a_{k-1}|               for k < 0,
///   |a_0 - a_1| + |a_0 - a_{-1}|  for k = 0.
double delta_abs(const TwoSidedSequence& a, std::int64_t k);

/// Magnitudes of a sequence sorted into the symmetric nonincreasing
/// rearrangement a*_0 >= a*_{-1} >= a*_1 >= a*_{-2} >= a*_2 >= ...
///
/// `sorted` holds the magnitudes in descending order; the zigzag index
/// order 0, -1, 1, -2, 2, ... maps position j to sorted[j].  Ties are broken
/// by descending |original index|, then positive index before negative, so
/// the layout is deterministic and bit-comparable across implementations.
struct RearrangedSequence {
    std::vector<double> sorted;

    /// a*_k for any k in Z (zero beyond the stored magnitudes).
    double symmetric_at(std::int64_t k) const;

    /// One-sided view a*_1 >= a*_2 >= ... (n is 1-based).
    double one_sided(std::size_t n) const {
        return n >= 1 && n <= sorted.size() ? sorted[n - 1] : 0.0;
    }

    /// The zigzag layout materialized as a two-sided sequence.
    TwoSidedSequence as_two_sided() const;
};

RearrangedSequence symmetric_rearrangement(const TwoSidedSequence& a);

/// One-sided access a_1, a_2, ... used by the classic GM/WM diagnostics.
class OneSidedView {
public:
    /// Adopts v as a_1..a_N.
    explicit OneSidedView(std::vector<Complex> v) : values_(std::move(v)) {}

    std::size_t max_index() const { return values_.size(); }

    Complex at(std::size_t k) const {
        return k >= 1 && k <= values_.size() ? values_[k - 1] : Complex{};
    }

private:
    std::vector<Complex> values_;
};

/// The coefficients a_1..a_{k_max} of a two-sided sequence.
OneSidedView positive_part(const TwoSidedSequence& a);

/// Real parts of a one-sided view, as a one-sided view.
OneSidedView real_part(const OneSidedView& a);

}  // namespace netseq

#endif  // NETSEQ_SEQUENCE_HPP
