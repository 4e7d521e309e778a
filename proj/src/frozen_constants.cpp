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

// GENERATED by tools/freeze_constants -- do not edit by hand.
// Provenance: tests/fixtures/frozen_constants.json

#include "netseq/frozen.hpp"

namespace netseq {

const FrozenConstants& frozen() {
    static const FrozenConstants k = {
        /* prop5_theta_ratio_min */ 1.2,
        /* prop5_theta_ratio_max */ 2.7828043409481742,
        /* prop5_gm_num_ratio_min */ 0.63639610306789274,
        /* prop5_gm_num_ratio_max */ 1.6500000000000001,
        /* prop5_hat_ratio_min */ 0.17156250000000001,
        /* prop5_gmbar_best_upper */ 5.2459016393442628,
        /* prop6_gm_growth_min */ 1.8000362343635568,
        /* prop7_neg_hat_upper */ 3.2922629839546382,
        /* prop7_full_gmbar_best_upper */ 4.2857142857142856,
        /* fourier_net_over_lp_max */ {0.39988999824556404, 0.47982756306929381, 0.60469010122752453, 0.76852595298028226, 0.87714217563727392},
        /* net_dyadic_equiv_max */ 1.6299659819170478,
        /* jpstar_lorentz_max */ 1.7612570865554897,
        /* gmr_harmonic_ratio_max */ 3.1091577152490304,
        /* norms_ref_lp_over_jp */ 2.5066282746310002,
        /* norms_ref_lp_over_jpstar */ 2.5066282746310002,
        /* norms_ref_lp_over_ip */ 2.9185672929386821,
        /* norms_ref_net_over_lp */ 0.7215798624558557,
        /* family_seed_base */ 9000,
        /* family_count */ 500,
    };
    return k;
}

}  // namespace netseq
