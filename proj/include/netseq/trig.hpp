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

#ifndef NETSEQ_TRIG_HPP
#define NETSEQ_TRIG_HPP

#include <span>
#include <vector>

#include "netseq/sequence.hpp"

namespace netseq {

// Coefficient convention: a_k = (1/2pi) int_{-pi}^{pi} f(x) e^{-ikx} dx,
// so Parseval reads ||f||_2^2 = 2pi sum |a_k|^2.

/// Periodic rectangle-rule settings.  sample_count must be a power of two
/// and is raised to at least oversample * (2 * support_radius + 1) before
/// use; refinement doubles the grid until two successive norm values agree
/// to refine_tolerance (relative) or max_doublings is exhausted.
struct QuadratureSpec {
    int sample_count = 1 << 10;
    int oversample = 4;
    double refine_tolerance = 1e-6;
    int max_doublings = 8;
};

/// x_j = -pi + 2*pi*j/m, j = 0..m-1.
std::vector<double> uniform_grid(int m);

/// f(x_j) = sum_k a_k e^{i k x_j} on a uniform grid.  Power-of-two grids go
/// through an FFT; other uniform sizes fall back to direct summation.  The
/// contract is the values, not the method.
std::vector<Complex> evaluate(const TwoSidedSequence& a,
                              std::span<const double> grid);

/// Single rectangle-rule value (2pi/m * sum |f(x_j)|^p)^{1/p} at grid size m
/// (power of two).
double lp_norm_at(const TwoSidedSequence& a, double p, int m);

struct LpNorm {
    double value = 0.0;
    bool converged = true;  // false: doubling budget ran out first
    int samples = 0;        // final grid size
};

/// Refined L_p norm over [-pi, pi], 1 < p < inf.  Non-convergence is
/// reported through the flag, never thrown.
LpNorm lp_norm(const TwoSidedSequence& a, double p,
               const QuadratureSpec& spec = {});

/// Zeroes every coefficient outside [-2^n, 2^n].
TwoSidedSequence partial_sum(const TwoSidedSequence& a, int n);

/// Alternating: lambda_k = (-1)^k.
/// DyadicSign:  lambda_k = (-1)^n on 2^{n-1} <= |k| < 2^n (n >= 1), +1 at 0.
enum class MultiplierKind { Alternating, DyadicSign };

TwoSidedSequence apply_multiplier(const TwoSidedSequence& a,
                                  MultiplierKind kind);

/// Explicit signs aligned with the stored window: signs[i] multiplies the
/// coefficient at k_min + i.  Entries must be +1 or -1.
TwoSidedSequence apply_multiplier(const TwoSidedSequence& a,
                                  std::span<const int> signs);

}  // namespace netseq

#endif  // NETSEQ_TRIG_HPP
