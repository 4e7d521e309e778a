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

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "netseq/experiments.hpp"

namespace {

void add_source_flags(CLI::App* cmd, netseq::SequenceSource& source) {
    cmd->add_option("--input", source.input_path,
                    "Sequence file (.json or CSV rows k,re,im)");
    cmd->add_option(
        "--family", source.family_spec,
        "Family spec: power:alpha=A, one-sided-power:alpha=A, random:seed=S, "
        "random-gm:alpha=A,seed=S, or prop-5-gap:nmax=N / prop-6-compensated / "
        "prop-7-lacunary");
    cmd->add_option("--size", source.size,
                    "Truncation size for parametric families");
}

void add_quadrature_flags(CLI::App* cmd, netseq::QuadratureSpec& quad) {
    cmd->add_option("--quad-samples", quad.sample_count,
                    "Initial quadrature grid (power of two)");
    cmd->add_option("--quad-oversample", quad.oversample,
                    "Grid oversampling factor (>= 4)");
    cmd->add_option("--quad-tol", quad.refine_tolerance,
                    "Relative refinement tolerance");
    cmd->add_option("--quad-doublings", quad.max_doublings,
                    "Refinement budget");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Sequence-class diagnostics, net-space norms and L_p norm "
        "equivalence experiments for two-sided coefficient sequences"};
    app.require_subcommand(1);

    netseq::NormsOptions norms;
    auto* norms_cmd = app.add_subcommand(
        "norms", "All functionals, norms and ratios for one sequence");
    add_source_flags(norms_cmd, norms.source);
    norms_cmd->add_option("--p", norms.p_grid, "Exponents in (1, inf)")
        ->required()
        ->delimiter(',');
    norms_cmd->add_option("--out", norms.out_path, "Write JSON here");
    norms_cmd->add_option("--dump-grid", norms.dump_grid_path,
                          "Write the sampled values as CSV (x, re_f, im_f)");
    add_quadrature_flags(norms_cmd, norms.quad);

    netseq::ClassifyOptions classify;
    auto* classify_cmd =
        app.add_subcommand("classify", "Per-block class diagnostics");
    add_source_flags(classify_cmd, classify.source);
    classify_cmd
        ->add_option("--classes", classify.classes,
                     "Any of: gm-star gm-bar gm wm")
        ->required()
        ->delimiter(',');
    classify_cmd->add_option("--lambda", classify.lambda,
                             "Window parameter for the gm class (> 1)");
    classify_cmd->add_flag("--full-grid", classify.full_grid,
                           "Probe every n instead of the dyadic grid");
    classify_cmd->add_option("--format", classify.format, "json or csv");
    classify_cmd->add_option("--out", classify.out_path, "Write output here");
    classify_cmd->add_option("--profile", classify.profile_path,
                             "Also write the dyadic profile CSV here");

    netseq::ReproduceOptions reproduce;
    auto* reproduce_cmd = app.add_subcommand(
        "reproduce", "Check the documented inequalities of a named example");
    reproduce_cmd
        ->add_option("name", reproduce.name,
                     "prop-5-gap, prop-6-compensated or prop-7-lacunary")
        ->required();
    reproduce_cmd->add_option("--nmax", reproduce.nmax,
                              "Top dyadic block, in [6, 20]");
    reproduce_cmd->add_option("--out", reproduce.out_path,
                              "Also write the table as CSV here");

    netseq::EquivalenceOptions equivalence;
    auto* equivalence_cmd = app.add_subcommand(
        "equivalence", "lp/j_p ratio sweep across truncation sizes");
    equivalence_cmd
        ->add_option("--family", equivalence.family_spec, "Family spec")
        ->required();
    equivalence_cmd->add_option("--p", equivalence.p_grid, "Exponents")
        ->required()
        ->delimiter(',');
    std::string sizes_spec;
    equivalence_cmd
        ->add_option("--sizes", sizes_spec,
                     "Size range: 2^6..2^12, 64..4096 (doubling) or a comma "
                     "list")
        ->required();
    equivalence_cmd->add_option("--out", equivalence.out_path,
                                "Write CSV here");
    add_quadrature_flags(equivalence_cmd, equivalence.quad);

    netseq::MultiplierOptions multiplier;
    auto* multiplier_cmd = app.add_subcommand(
        "multiplier", "Apply a +-1 multiplier and write the sequence");
    add_source_flags(multiplier_cmd, multiplier.source);
    multiplier_cmd
        ->add_option("--kind", multiplier.kind, "alternating or dyadic-sign")
        ->required();
    multiplier_cmd->add_option("--out", multiplier.out_path,
                               "Write JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : netseq::kExitConfig;
    }

    if (norms_cmd->parsed()) {
        return netseq::run_norms(norms, std::cout, std::cerr);
    }
    if (classify_cmd->parsed()) {
        return netseq::run_classify(classify, std::cout, std::cerr);
    }
    if (reproduce_cmd->parsed()) {
        return netseq::run_reproduce(reproduce, std::cout, std::cerr);
    }
    if (equivalence_cmd->parsed()) {
        try {
            equivalence.sizes = netseq::parse_sizes(sizes_spec);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return netseq::kExitConfig;
        }
        return netseq::run_equivalence(equivalence, std::cout, std::cerr);
    }
    if (multiplier_cmd->parsed()) {
        return netseq::run_multiplier(multiplier, std::cout, std::cerr);
    }
    return netseq::kExitConfig;
}
