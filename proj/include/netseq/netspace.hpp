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

#ifndef NETSEQ_NETSPACE_HPP
#define NETSEQ_NETSPACE_HPP

#include <cstdint>
#include <vector>

#include "netseq/sequence.hpp"

namespace netseq {

/// Cumulative sums P(c) = sum_{j <= c} a_j over the padded support range.
/// P is constant outside [k_min - 1, k_max], so any interval sum is an exact
/// difference of two stored values.
class PrefixSums {
public:
    explicit PrefixSums(const TwoSidedSequence& a);

    Complex prefix(std::int64_t c) const {
        if (c < base_) return {};
        const std::int64_t i = c - base_;
        if (i >= static_cast<std::int64_t>(table_.size())) return table_.back();
        return table_[static_cast<std::size_t>(i)];
    }

    /// sum_{j=i}^{j=jj} a_j, for i <= jj.
    Complex interval(std::int64_t i, std::int64_t jj) const {
        return prefix(jj) - prefix(i - 1);
    }

private:
    std::int64_t base_;  // index of P(k_min - 1) == 0
    std::vector<Complex> table_;
};

/// The interval-sup average
///     a~_k = sup over intervals w of Z with |w| >= k of |sum_{j in w} a_j| / |w|.
///
/// The supremum ranges over infinitely many intervals, but is exactly
/// computable for finite supports.  Write D for the stored window length.
/// Any interval w with |w| > max(k, D) contains its own intersection with
/// the support inside some interval of length exactly max(k, D): shrinking w
/// to that interval keeps the numerator (the dropped indices carry zeros)
/// and lowers the denominator.  Hence the sup is attained with
/// |w| <= max(k, D), and an exhaustive scan over lengths L in [k, max(k, D)]
/// and all placements via PrefixSums evaluates it exactly.  Cost O(D^2) per
/// call in the worst case; see TildeTable for the batched form.
double tilde_average(const TwoSidedSequence& a, std::int64_t k);

/// All interval-sup averages of one sequence, computed in a single O(D^2)
/// sweep over (length, position) pairs.
///
/// For k <= D the value is tabulated; for k > D the shrink reduction gives
/// the exact tail a~_k = M / k, where M = max |interval sum| over prefixes
/// and suffixes of the support (attained by length-D windows).
struct TildeTable {
    std::vector<double> by_length;  // a~_1 .. a~_D
    double tail_numerator = 0.0;    // M

    double at(std::int64_t k) const {
        if (k <= static_cast<std::int64_t>(by_length.size())) {
            return by_length[static_cast<std::size_t>(k - 1)];
        }
        return tail_numerator / static_cast<double>(k);
    }
};

TildeTable tilde_table(const TwoSidedSequence& a);

/// The zero-anchored average
///     a^_{2^level} = sup over 2^level <= |m| < 2^{level+1} of
///                    |sum_{j between 0 and m} a_j| / (|m| + 1),
/// where for m < 0 the anchored sum reads sum_{j=m}^{0} a_j.  Both signs of
/// m participate in the sup.
double hat_average(const TwoSidedSequence& a, int level);

/// Discrete net-space norm
///     ||a||_{n_{p,q}} = (sum_{k>=1} k^{q/p-1} a~_k^q)^{1/q},
/// or sup_{k>=1} k^{1/p} a~_k when q is +infinity.
///
/// The sum over k > D enters the analytic tail regime a~_k = M/k and is
/// accumulated in closed form (Euler-Maclaurin after an explicit stretch);
/// it converges because q/p - 1 - q < -1 for every p > 1.
double net_norm(const TwoSidedSequence& a, double p, double q);
double net_norm(const TildeTable& table, double p, double q);

/// Discrete Lorentz norm over the one-sided nonincreasing rearrangement:
///     ||a||_{l_{p,q}} = (sum_{n>=1} n^{q/p-1} (a*_n)^q)^{1/q}.
double lorentz_norm(const TwoSidedSequence& a, double p, double q);

}  // namespace netseq

#endif  // NETSEQ_NETSPACE_HPP
