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

#ifndef NETSEQ_DETAIL_KAHAN_HPP
#define NETSEQ_DETAIL_KAHAN_HPP

#include <cmath>

namespace netseq::detail {

// Neumaier compensated accumulator.  Norm sums add terms in a fixed order
// (ascending |k|, negative index before positive); compensation keeps the
// result stable when supports grow past 2^15 terms.
class KahanSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace netseq::detail

#endif  // NETSEQ_DETAIL_KAHAN_HPP
