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

#ifndef NETSEQ_GENERATORS_HPP
#define NETSEQ_GENERATORS_HPP

#include <cstdint>
#include <string>

#include "netseq/sequence.hpp"

namespace netseq {

/// The three reference constructions.
///
/// Prop5Gap: one-sided, a_k = 1/2^n on the dyadic block 2^n <= k < 2^{n+1}
///   for n >= 4 and odd k; even positions are zero on the first [sqrt(n)]
///   slots of each block and 1/2^n afterwards; a_k = 0 for k <= 15.
/// Prop6Compensated: c_k = a_k + i*b_k for k >= 1, zero for k <= 0, with
///   a_k = (-1)^k * 2^{-7n/4} and b_k = (2/3)^n on 2^n <= k < 2^{n+1}.
/// Prop7Lacunary: c_k = (2/3)^n on 2^n <= k < 2^{n+1} for k > 0;
///   c_{-2^n} = (2/3)^n and zero at every other k <= 0.
enum class ExampleName { Prop5Gap, Prop6Compensated, Prop7Lacunary };

/// Builds an example truncated after the dyadic block n = nmax.  The result
/// matches the defining formulas exactly on [-2^{nmax+1}, 2^{nmax+1}] and is
/// zero outside.  Requires nmax >= 5.
TwoSidedSequence make_example(ExampleName name, int nmax);

ExampleName example_by_name(const std::string& name);
std::string to_string(ExampleName name);

/// Parametric test families, all pure: the same inputs give bitwise
/// identical sequences on every run and platform.
///
/// Power:         a_k = (|k|+1)^{-alpha} on [-size, size].
/// OneSidedPower: a_k = k^{-alpha} on [1, size].
/// RandomGm:      a_k = k^{-alpha} * j_n on [1, size], with one jitter
///                factor j_n drawn uniformly from [0.5, 1.5] per dyadic
///                block 2^n <= k < 2^{n+1}.  Real, positive, vanishing.
/// RandomComplex: independent re/im uniform in [-1, 1] on [-size, size].
enum class FamilyKind { Power, OneSidedPower, RandomGm, RandomComplex };

struct FamilyParams {
    double alpha = 0.75;
    std::uint64_t seed = 1;
};

TwoSidedSequence make_family(FamilyKind kind, const FamilyParams& params,
                             std::int64_t size);

}  // namespace netseq

#endif  // NETSEQ_GENERATORS_HPP
