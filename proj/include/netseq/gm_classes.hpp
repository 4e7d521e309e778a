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

#ifndef NETSEQ_GM_CLASSES_HPP
#define NETSEQ_GM_CLASSES_HPP

#include <optional>
#include <string>
#include <vector>

#include "netseq/functionals.hpp"
#include "netseq/sequence.hpp"

namespace netseq {

/// Membership of a finite truncation in an asymptotic sequence class is not
/// decidable, so diagnostics report the computed ratio range plus a verdict
/// about that range only.  The verdict window spans the first through the
/// last scored block with a positive numerator; blocks outside it score 0
/// against a positive majorant purely because the support is a finite
/// window, and carry no class information.  Entries whose difference sums
/// reach the jump onto the zero extension past the support (the final
/// theta block; classic-gm probes with 2n >= max_index) are likewise kept
/// out of the growth comparison, though everything stays in the table.
///
///   Growing       some ratio is +inf, or every entry of the last third of
///                 the window is positive and at least 1.5x the maximum of
///                 the first third;
///   Bounded       otherwise (an all-zero curve is bounded by any constant);
///   Inconclusive  nothing could be scored at all.
enum class Verdict { Bounded, Growing, Inconclusive };

enum class SequenceClass { GmStar, GmBar, GmClassic, Wm };

std::string to_string(Verdict v);
std::string to_string(SequenceClass c);

/// One ratio curve numerator[n] / denominator[n] with its running maximum.
/// Blocks with numerator == denominator == 0 are skipped, not scored, so
/// sparse sequences are not penalized; a positive numerator over a zero
/// denominator scores +inf.
struct ClassDiagnostic {
    SequenceClass class_name = SequenceClass::GmStar;
    std::vector<std::int64_t> block_index;
    std::vector<double> numerator;
    std::vector<double> denominator;
    std::vector<double> ratio;
    double best_constant = 0.0;
    std::int64_t witness = -1;
    Verdict verdict = Verdict::Inconclusive;
};

/// Theta_n against sup_k min(1, 2^{k-n}) a~_{2^k}, per dyadic block.
ClassDiagnostic gm_star_diagnostic(const TwoSidedSequence& a);
ClassDiagnostic gm_star_diagnostic(const DyadicProfile& profile);

/// Theta_n against sup_k min(1, 2^{k-n}) a^_{2^k}, per dyadic block.
ClassDiagnostic gm_bar_diagnostic(const TwoSidedSequence& a);
ClassDiagnostic gm_bar_diagnostic(const DyadicProfile& profile);

/// The classic one-sided test: for each probe index n,
///   numerator   = n * sum_{k=n}^{2n} |a_k - a_{k+1}|
///   denominator = sum over ceil(n/lambda) <= k <= floor(lambda*n) of |a_k|.
/// Probes run over the dyadic grid n = 1, 2, 4, ... by default (full_grid
/// evaluates every n up to the support end).  Requires lambda > 1.
ClassDiagnostic gm_classic_diagnostic(const OneSidedView& a,
                                      double lambda = 2.0,
                                      bool full_grid = false);

/// ratio[n] = n * |a_n| / |sum_{j<=n} a_j|; +inf where the partial sum
/// vanishes under a nonzero a_n.
ClassDiagnostic wm_diagnostic(const OneSidedView& a);

/// Closed-sector membership: every nonzero a_k must satisfy
/// |arg a_k - alpha| <= beta with the difference reduced mod 2*pi into
/// (-pi, pi].
struct SectorResult {
    bool inside = true;
    std::optional<std::int64_t> first_violation;
};

SectorResult sector_check(const OneSidedView& a, double alpha, double beta);

/// sum_{k=2^n}^{2^{n+1}} |a_k| / k: the block quantity whose domination by
/// the hat majorant witnesses that vanishing real general monotone
/// one-sided sequences satisfy the two-sided hat condition.
double block_harmonic_sum(const OneSidedView& a, int n);

}  // namespace netseq

#endif  // NETSEQ_GM_CLASSES_HPP
