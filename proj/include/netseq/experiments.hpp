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

#ifndef NETSEQ_EXPERIMENTS_HPP
#define NETSEQ_EXPERIMENTS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "netseq/functionals.hpp"
#include "netseq/generators.hpp"
#include "netseq/gm_classes.hpp"
#include "netseq/trig.hpp"

namespace netseq {

// Exit code contract: 0 all checks pass, 1 any reproduction check fails,
// 2 configuration error (bad flags, unreadable input, invalid parameters).
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitConfig = 2;

/// `power:alpha=0.75`, `one-sided-power:alpha=0.6`, `random:seed=7`,
/// `random-gm:alpha=0.5,seed=3`.
std::pair<FamilyKind, FamilyParams> parse_family_spec(const std::string& spec);

/// `64..4096` or `2^6..2^12` (doubling), `64,128,256`, or a single value.
std::vector<std::int64_t> parse_sizes(const std::string& spec);

/// Where a command gets its sequence: a file on disk, or a family spec plus
/// a truncation size.
struct SequenceSource {
    std::string input_path;   // empty when family is used
    std::string family_spec;  // empty when input_path is used
    std::int64_t size = 256;
};

TwoSidedSequence load_sequence(const SequenceSource& source);

NormReport build_norm_report(const TwoSidedSequence& a, double p,
                             const QuadratureSpec& quad);

struct NormsOptions {
    SequenceSource source;
    std::vector<double> p_grid;
    std::string out_path;        // empty: stdout
    std::string dump_grid_path;  // empty: no grid dump
    QuadratureSpec quad;
};
int run_norms(const NormsOptions& opt, std::ostream& out, std::ostream& err);

struct ClassifyOptions {
    SequenceSource source;
    std::vector<std::string> classes;  // gm-star, gm-bar, gm, wm
    double lambda = 2.0;
    bool full_grid = false;
    std::string format = "json";  // json | csv
    std::string out_path;
    std::string profile_path;  // empty: no dyadic profile dump
};
int run_classify(const ClassifyOptions& opt, std::ostream& out,
                 std::ostream& err);

/// One finite-range check of a documented inequality, at one level (or -1
/// for a whole-curve verdict row).
struct ReproduceRow {
    std::string check;
    std::int64_t level = -1;
    double lhs = 0.0;
    double rhs = 0.0;
    std::string relation;  // "<=", "<", ">=", "=="
    bool pass = false;
};

struct ReproduceReport {
    ExampleName name = ExampleName::Prop5Gap;
    int nmax = 0;
    std::vector<ReproduceRow> rows;
    bool all_pass() const;
};

/// Evaluates every per-level check and verdict for one example; nmax must
/// lie in [6, 20].
ReproduceReport reproduce_report(ExampleName name, int nmax);

struct ReproduceOptions {
    std::string name;
    int nmax = 12;
    std::string out_path;
};
int run_reproduce(const ReproduceOptions& opt, std::ostream& out,
                  std::ostream& err);

struct EquivalenceOptions {
    std::string family_spec;
    std::vector<double> p_grid;
    std::vector<std::int64_t> sizes;
    std::string out_path;
    QuadratureSpec quad;
};
int run_equivalence(const EquivalenceOptions& opt, std::ostream& out,
                    std::ostream& err);

struct MultiplierOptions {
    SequenceSource source;
    std::string kind;  // alternating | dyadic-sign
    std::string out_path;
};
int run_multiplier(const MultiplierOptions& opt, std::ostream& out,
                   std::ostream& err);

/// The seeded random-complex family every family-level frozen constant and
/// acceptance check runs over: index i gives seed
/// frozen().family_seed_base + i and a stored window of at most 512
/// coefficients.
TwoSidedSequence reference_family(int index);

/// Seeded slow-jitter monotone family (real, positive, vanishing) used by
/// the hat-domination checks; 100 members.
TwoSidedSequence reference_gm_family(int index);

}  // namespace netseq

#endif  // NETSEQ_EXPERIMENTS_HPP
