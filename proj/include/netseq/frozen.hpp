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

#ifndef NETSEQ_FROZEN_HPP
#define NETSEQ_FROZEN_HPP

#include <cstdint>

namespace netseq {

/// Empirical constants behind every finite-range check of an asymptotic
/// claim.  None of these numbers is typed in by hand: tools/freeze_constants
/// measures each one on its reference computation (with the safety margins
/// noted per field) and emits src/frozen_constants.cpp together with the
/// provenance record tests/fixtures/frozen_constants.json.  Regenerate with
///
///   ./build/freeze-constants --src src/frozen_constants.cpp
///                            --json tests/fixtures/frozen_constants.json
struct FrozenConstants {
    // prop-5-gap at nmax = 12.
    // Theta_n * 2^n / sqrt(n) over n in [5, 12]; margins 0.9 / 1.1.
    double prop5_theta_ratio_min;
    double prop5_theta_ratio_max;
    // GM-form block sum (sum_{k=2^n}^{2^{n+1}} |a_k - a_{k+1}|) * 2^n/sqrt(n)
    // over n in [5, 12]; margins 0.9 / 1.1.
    double prop5_gm_num_ratio_min;
    double prop5_gm_num_ratio_max;
    // min over n in [5, 12] of hat_{2^n} * 2^n / n, margin 0.9.
    double prop5_hat_ratio_min;
    // gm-bar best constant cap, margin 1.25.
    double prop5_gmbar_best_upper;

    // prop-6-compensated at nmax = 12: min consecutive growth factor of the
    // one-sided real part's gm ratio across dyadic probes n in [16, 2048],
    // margin 0.9.  Values above 1 certify growth.
    double prop6_gm_growth_min;

    // prop-7-lacunary at nmax = 12.
    // max over k in [1, 12] of negative-side hat_{2^k} * 2^k, margin 1.1.
    double prop7_neg_hat_upper;
    // full-sequence gm-bar best constant cap, margin 1.25.
    double prop7_full_gmbar_best_upper;

    // Reference random family (see reference_family): per-p caps on
    // net_norm(a, p', p) / lp_norm(a, p), margin 1.25.
    static constexpr int kFourierGridSize = 5;
    static constexpr double kFourierGrid[kFourierGridSize] = {1.25, 1.5, 2.0,
                                                              3.0, 4.0};
    double fourier_net_over_lp_max[kFourierGridSize];

    // Two-sided equivalence caps c (value and reciprocal both <= c),
    // margin 1.25.
    double net_dyadic_equiv_max;   // net_norm vs its dyadic-sum form
    double jpstar_lorentz_max;     // J_p* vs l_{p',p}

    // Random slow-jitter monotone family: cap on
    // block_harmonic_sum / majorant_hat, margin 1.25.
    double gmr_harmonic_ratio_max;

    // Reference norm report (power alpha = 0.75, size 1024, p = 2): the four
    // ratio values, reproduced to 1e-6 relative.
    double norms_ref_lp_over_jp;
    double norms_ref_lp_over_jpstar;
    double norms_ref_lp_over_ip;
    double norms_ref_net_over_lp;

    // Reference family parameters, recorded so every consumer agrees.
    std::uint64_t family_seed_base;
    int family_count;
};

const FrozenConstants& frozen();

}  // namespace netseq

#endif  // NETSEQ_FROZEN_HPP
