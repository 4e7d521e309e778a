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

#ifndef NETSEQ_FUNCTIONALS_HPP
#define NETSEQ_FUNCTIONALS_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "netseq/sequence.hpp"

namespace netseq {

/// p' = p/(p-1).
double conjugate_exponent(double p);

/// Smallest level count whose dyadic blocks cover the support:
/// ceil(log2(max(|k_min|, k_max) + 1)) + 1.
int default_levels(const TwoSidedSequence& a);

/// Block count for diagnostics: every block that meets the support plus one
/// empty block beyond it, to expose truncation boundary effects.
int diagnostic_levels(const TwoSidedSequence& a);

/// Theta_n = sum of |Delta a_m| over the symmetric dyadic block
/// [2^{n-1}] <= |m| < 2^n (floor convention: the block n = 0 is m = 0 only).
std::vector<double> theta_blocks(const TwoSidedSequence& a, int levels);

/// J_p = (sum_k (|k|+1)^{p-2} |a_k|^p)^{1/p}, 1 < p < inf.  Terms are added
/// in ascending |k| with the negative index first at equal |k|.
double j_p(const TwoSidedSequence& a, double p);

/// J_p over the symmetric nonincreasing rearrangement laid out as a
/// two-sided sequence.
double j_p_star(const TwoSidedSequence& a, double p);

/// I_p = (sum_{k=0}^{levels-1} (2^{k/p'} Theta_k)^p)^{1/p}.  `levels` must
/// put every block at or beyond it past the support, which makes the finite
/// sum exact; the overload without `levels` uses default_levels.
double i_p(const TwoSidedSequence& a, double p, int levels);
double i_p(const TwoSidedSequence& a, double p);

/// The two discrete Hardy-type dyadic sums over a finite nonnegative list
/// indexed by k = 0, 1, ..., evaluated exactly:
///
///   Tail: LHS = (sum_k (2^{alpha k} sum_{m>=k} a_m)^q)^{1/q}
///   Head: LHS = (sum_k (2^{(alpha-1)k} sum_{m<=k} 2^m a_m)^q)^{1/q}
///
/// with RHS = (sum_k (2^{alpha k} a_k)^q)^{1/q} in both cases.  Geometric
/// telescoping bounds LHS <= RHS / (1 - 2^{-alpha}) for the tail form and
/// LHS <= RHS / (1 - 2^{alpha-1}) for the head form.
enum class HardyKind { Tail, Head };

struct HardyPair {
    double lhs;
    double rhs;
};

HardyPair hardy_lhs_rhs(std::span<const double> a, double alpha, double q,
                        HardyKind kind);

/// Per-level dyadic summary of one sequence: Theta blocks, interval-sup and
/// zero-anchored averages at dyadic lengths, and the majorants
/// sup_k min(1, 2^{k-n}) * avg_{2^k} that the class diagnostics divide by.
struct DyadicProfile {
    int levels = 0;
    std::vector<double> theta;
    std::vector<double> tilde_avg;
    std::vector<double> hat_avg;
    std::vector<double> majorant_tilde;
    std::vector<double> majorant_hat;
};

DyadicProfile make_dyadic_profile(const TwoSidedSequence& a);
DyadicProfile make_dyadic_profile(const TwoSidedSequence& a, int levels);

/// All functionals of one sequence at one exponent p, plus the quadrature
/// L_p norm and the ratios the equivalence experiments track.
struct NormReport {
    double p = 0.0;
    double p_prime = 0.0;
    double j_p = 0.0;
    double j_p_star = 0.0;
    double i_p = 0.0;
    double net_norm = 0.0;
    double lorentz_norm = 0.0;
    double lp_quadrature = 0.0;
    std::vector<std::pair<std::string, double>> ratios;
};

}  // namespace netseq

#endif  // NETSEQ_FUNCTIONALS_HPP
