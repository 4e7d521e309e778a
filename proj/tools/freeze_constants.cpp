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

// Measures every frozen constant on its reference computation and emits
// src/frozen_constants.cpp plus the provenance record
// tests/fixtures/frozen_constants.json.  Nothing in those two files is ever
// edited by hand.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "netseq/experiments.hpp"
#include "netseq/frozen.hpp"
#include "netseq/io.hpp"
#include "netseq/netspace.hpp"

using namespace netseq;

namespace {

constexpr double kWidenLo = 0.9;   // lower bounds shrink by this factor
constexpr double kWidenHi = 1.1;   // tight upper bounds grow by this factor
constexpr double kWidenCap = 1.25; // family-dependent caps grow by this factor

// Calibration range for the reproduction brackets.  Interior blocks carry
// the same values at every truncation, but the top block contains the
// truncation edge, so every nmax in the supported range is measured.
constexpr int kNmaxLo = 6;
constexpr int kNmaxHi = 14;

struct Measured {
    FrozenConstants out{};
    nlohmann::ordered_json raw;
};

double two_sided_gap(double ratio) {
    return std::max(ratio, 1.0 / ratio);
}

void measure_prop5(Measured& m) {
    double theta_lo = std::numeric_limits<double>::infinity(), theta_hi = 0.0;
    double gm_lo = theta_lo, gm_hi = 0.0;
    double hat_lo = theta_lo;
    double bar_best = 0.0;
    for (int nmax = kNmaxLo; nmax <= kNmaxHi; ++nmax) {
        const TwoSidedSequence a = make_example(ExampleName::Prop5Gap, nmax);
        const std::vector<double> theta = theta_blocks(a, default_levels(a));
        for (int n = 5; n <= nmax; ++n) {
            const double scale =
                std::exp2(n) / std::sqrt(static_cast<double>(n));
            const double tr = theta[static_cast<std::size_t>(n)] * scale;
            theta_lo = std::min(theta_lo, tr);
            theta_hi = std::max(theta_hi, tr);
            double block = 0.0;
            for (std::int64_t k = std::int64_t{1} << n;
                 k <= std::int64_t{1} << (n + 1); ++k) {
                block += std::abs(a.at(k) - a.at(k + 1));
            }
            gm_lo = std::min(gm_lo, block * scale);
            gm_hi = std::max(gm_hi, block * scale);
            hat_lo = std::min(hat_lo, hat_average(a, n) * std::exp2(n) / n);
        }
        bar_best = std::max(bar_best, gm_bar_diagnostic(a).best_constant);
    }
    m.out.prop5_theta_ratio_min = theta_lo * kWidenLo;
    m.out.prop5_theta_ratio_max = theta_hi * kWidenHi;
    m.out.prop5_gm_num_ratio_min = gm_lo * kWidenLo;
    m.out.prop5_gm_num_ratio_max = gm_hi * kWidenHi;
    m.out.prop5_hat_ratio_min = hat_lo * kWidenLo;
    m.out.prop5_gmbar_best_upper = bar_best * kWidenCap;
    m.raw["prop5"] = {{"theta_ratio", {theta_lo, theta_hi}},
                      {"gm_num_ratio", {gm_lo, gm_hi}},
                      {"hat_ratio_min", hat_lo},
                      {"gmbar_best", bar_best}};
}

void measure_prop6(Measured& m) {
    double min_growth = std::numeric_limits<double>::infinity();
    for (int nmax = kNmaxLo; nmax <= kNmaxHi; ++nmax) {
        const TwoSidedSequence c =
            make_example(ExampleName::Prop6Compensated, nmax);
        const ClassDiagnostic d =
            gm_classic_diagnostic(real_part(positive_part(c)));
        for (std::size_t i = 0; i + 1 < d.block_index.size(); ++i) {
            const std::int64_t n = d.block_index[i];
            if (n < 16 ||
                d.block_index[i + 1] > (std::int64_t{1} << (nmax - 1))) {
                continue;
            }
            if (d.ratio[i] > 0.0 && std::isfinite(d.ratio[i]) &&
                std::isfinite(d.ratio[i + 1])) {
                min_growth =
                    std::min(min_growth, d.ratio[i + 1] / d.ratio[i]);
            }
        }
    }
    m.out.prop6_gm_growth_min = min_growth * kWidenLo;
    m.raw["prop6"] = {{"gm_growth_min", min_growth}};
}

void measure_prop7(Measured& m) {
    double hat_hi = 0.0;
    double full_best = 0.0;
    for (int nmax = kNmaxLo; nmax <= kNmaxHi; ++nmax) {
        const TwoSidedSequence c =
            make_example(ExampleName::Prop7Lacunary, nmax);
        const TwoSidedSequence neg = restricted(c, c.k_min(), 0);
        for (int k = 1; k <= nmax; ++k) {
            hat_hi = std::max(hat_hi, hat_average(neg, k) * std::exp2(k));
        }
        full_best = std::max(full_best, gm_bar_diagnostic(c).best_constant);
    }
    m.out.prop7_neg_hat_upper = hat_hi * kWidenHi;
    m.out.prop7_full_gmbar_best_upper = full_best * kWidenCap;
    m.raw["prop7"] = {{"neg_hat_max", hat_hi}, {"full_gmbar_best", full_best}};
}

void measure_family(Measured& m) {
    const int count = frozen().family_count;
    double fourier_max[FrozenConstants::kFourierGridSize] = {};
    double dyadic_gap = 1.0;
    double jpstar_gap = 1.0;
    const QuadratureSpec quad;
    for (int i = 0; i < count; ++i) {
        const TwoSidedSequence a = reference_family(i);
        const TildeTable table = tilde_table(a);
        for (int gi = 0; gi < FrozenConstants::kFourierGridSize; ++gi) {
            const double p = FrozenConstants::kFourierGrid[gi];
            const double p_prime = conjugate_exponent(p);
            const double net = net_norm(table, p_prime, p);
            const double lp = lp_norm(a, p, quad).value;
            fourier_max[gi] = std::max(fourier_max[gi], net / lp);
            jpstar_gap = std::max(
                jpstar_gap,
                two_sided_gap(j_p_star(a, p) / lorentz_norm(a, p_prime, p)));
            if (i < 100) {
                // dyadic-sum form of the net norm, exact geometric tail
                const std::int64_t diameter =
                    static_cast<std::int64_t>(table.by_length.size());
                int top = 0;
                while ((std::int64_t{1} << top) < diameter) ++top;
                double sum = 0.0;
                for (int k = 0; k <= top; ++k) {
                    sum += std::pow(std::exp2(static_cast<double>(k) / p_prime) *
                                        table.at(std::int64_t{1} << k),
                                    p);
                }
                // past the table a~_{2^k} = M/2^k, so the terms decay
                // geometrically with ratio g = 2^{p(1/p'-1)} = 1/2
                const double g = std::exp2(p * (1.0 / p_prime - 1.0));
                const double first = std::pow(
                    std::exp2(static_cast<double>(top + 1) / p_prime) *
                        (table.tail_numerator / std::exp2(top + 1)),
                    p);
                sum += first / (1.0 - g);
                const double dyadic = std::pow(sum, 1.0 / p);
                dyadic_gap = std::max(dyadic_gap,
                                      two_sided_gap(dyadic / net));
            }
        }
    }
    for (int gi = 0; gi < FrozenConstants::kFourierGridSize; ++gi) {
        m.out.fourier_net_over_lp_max[gi] = fourier_max[gi] * kWidenCap;
    }
    m.out.net_dyadic_equiv_max = dyadic_gap * kWidenCap;
    m.out.jpstar_lorentz_max = jpstar_gap * kWidenCap;
    m.raw["family"] = {
        {"fourier_net_over_lp",
         std::vector<double>(fourier_max,
                             fourier_max + FrozenConstants::kFourierGridSize)},
        {"net_dyadic_gap", dyadic_gap},
        {"jpstar_lorentz_gap", jpstar_gap}};
}

void measure_gm_family(Measured& m) {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const TwoSidedSequence a = reference_gm_family(i);
        const DyadicProfile profile = make_dyadic_profile(a);
        const OneSidedView view = positive_part(a);
        for (int n = 0; (std::int64_t{1} << n) <= a.k_max(); ++n) {
            const double lhs = block_harmonic_sum(view, n);
            const double den = profile.majorant_hat[static_cast<std::size_t>(n)];
            if (den > 0.0) worst = std::max(worst, lhs / den);
        }
    }
    m.out.gmr_harmonic_ratio_max = worst * kWidenCap;
    m.raw["gm_family"] = {{"harmonic_ratio_max", worst}};
}

void measure_norms_reference(Measured& m) {
    FamilyParams params;
    params.alpha = 0.75;
    const TwoSidedSequence a = make_family(FamilyKind::Power, params, 1024);
    const NormReport r = build_norm_report(a, 2.0, QuadratureSpec{});
    m.out.norms_ref_lp_over_jp = r.ratios[0].second;
    m.out.norms_ref_lp_over_jpstar = r.ratios[1].second;
    m.out.norms_ref_lp_over_ip = r.ratios[2].second;
    m.out.norms_ref_net_over_lp = r.ratios[3].second;
    m.raw["norms_reference"] = {
        {"lp_over_j_p", r.ratios[0].second},
        {"lp_over_j_p_star", r.ratios[1].second},
        {"lp_over_i_p", r.ratios[2].second},
        {"net_norm_over_lp", r.ratios[3].second}};
}

void emit_source(const FrozenConstants& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "// Copyright 2026 The netseq Authors\n"
           "//\n"
           "// Licensed under the Apache License, Version 2.0 (the "
           "\"License\");\n"
           "// you may not use this file except in compliance with the "
           "License.\n"
           "// You may obtain a copy of the License at\n"
           "//\n"
           "//     http://www.apache.org/licenses/LICENSE-2.0\n"
           "//\n"
           "// Unless required by applicable law or agreed to in writing, "
           "software\n"
           "// distributed under the License is distributed on an \"AS IS\" "
           "BASIS,\n"
           "// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express "
           "or implied.\n"
           "// See the License for the specific language governing "
           "permissions and\n"
           "// limitations under the License.\n"
           "\n"
           "// GENERATED by tools/freeze_constants -- do not edit by hand.\n"
           "// Provenance: tests/fixtures/frozen_constants.json\n"
           "\n"
           "#include \"netseq/frozen.hpp\"\n"
           "\n"
           "namespace netseq {\n"
           "\n"
           "const FrozenConstants& frozen() {\n"
           "    static const FrozenConstants k = {\n";
    const auto field = [&](const char* name, double v) {
        out << "        /* " << name << " */ " << fmt17(v) << ",\n";
    };
    field("prop5_theta_ratio_min", c.prop5_theta_ratio_min);
    field("prop5_theta_ratio_max", c.prop5_theta_ratio_max);
    field("prop5_gm_num_ratio_min", c.prop5_gm_num_ratio_min);
    field("prop5_gm_num_ratio_max", c.prop5_gm_num_ratio_max);
    field("prop5_hat_ratio_min", c.prop5_hat_ratio_min);
    field("prop5_gmbar_best_upper", c.prop5_gmbar_best_upper);
    field("prop6_gm_growth_min", c.prop6_gm_growth_min);
    field("prop7_neg_hat_upper", c.prop7_neg_hat_upper);
    field("prop7_full_gmbar_best_upper", c.prop7_full_gmbar_best_upper);
    out << "        /* fourier_net_over_lp_max */ {";
    for (int i = 0; i < FrozenConstants::kFourierGridSize; ++i) {
        out << (i ? ", " : "") << fmt17(c.fourier_net_over_lp_max[i]);
    }
    out << "},\n";
    field("net_dyadic_equiv_max", c.net_dyadic_equiv_max);
    field("jpstar_lorentz_max", c.jpstar_lorentz_max);
    field("gmr_harmonic_ratio_max", c.gmr_harmonic_ratio_max);
    field("norms_ref_lp_over_jp", c.norms_ref_lp_over_jp);
    field("norms_ref_lp_over_jpstar", c.norms_ref_lp_over_jpstar);
    field("norms_ref_lp_over_ip", c.norms_ref_lp_over_ip);
    field("norms_ref_net_over_lp", c.norms_ref_net_over_lp);
    out << "        /* family_seed_base */ " << c.family_seed_base << ",\n";
    out << "        /* family_count */ " << c.family_count << ",\n";
    out << "    };\n    return k;\n}\n\n}  // namespace netseq\n";
}

void emit_json(const Measured& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    nlohmann::ordered_json doc;
    doc["generator"] = "tools/freeze_constants.cpp";
    doc["reproduce_nmax_range"] = {kNmaxLo, kNmaxHi};
    doc["family_seed_base"] = m.out.family_seed_base;
    doc["family_count"] = m.out.family_count;
    doc["margins"] = {{"lower_bounds", kWidenLo},
                      {"tight_upper_bounds", kWidenHi},
                      {"family_caps", kWidenCap}};
    doc["measured"] = m.raw;
    nlohmann::ordered_json fr;
    fr["prop5_theta_ratio_min"] = m.out.prop5_theta_ratio_min;
    fr["prop5_theta_ratio_max"] = m.out.prop5_theta_ratio_max;
    fr["prop5_gm_num_ratio_min"] = m.out.prop5_gm_num_ratio_min;
    fr["prop5_gm_num_ratio_max"] = m.out.prop5_gm_num_ratio_max;
    fr["prop5_hat_ratio_min"] = m.out.prop5_hat_ratio_min;
    fr["prop5_gmbar_best_upper"] = m.out.prop5_gmbar_best_upper;
    fr["prop6_gm_growth_min"] = m.out.prop6_gm_growth_min;
    fr["prop7_neg_hat_upper"] = m.out.prop7_neg_hat_upper;
    fr["prop7_full_gmbar_best_upper"] = m.out.prop7_full_gmbar_best_upper;
    fr["fourier_net_over_lp_max"] = std::vector<double>(
        m.out.fourier_net_over_lp_max,
        m.out.fourier_net_over_lp_max + FrozenConstants::kFourierGridSize);
    fr["net_dyadic_equiv_max"] = m.out.net_dyadic_equiv_max;
    fr["jpstar_lorentz_max"] = m.out.jpstar_lorentz_max;
    fr["gmr_harmonic_ratio_max"] = m.out.gmr_harmonic_ratio_max;
    fr["norms_ref_lp_over_jp"] = m.out.norms_ref_lp_over_jp;
    fr["norms_ref_lp_over_jpstar"] = m.out.norms_ref_lp_over_jpstar;
    fr["norms_ref_lp_over_ip"] = m.out.norms_ref_lp_over_ip;
    fr["norms_ref_net_over_lp"] = m.out.norms_ref_net_over_lp;
    doc["frozen"] = fr;
    out << doc.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    std::string src_path = "src/frozen_constants.cpp";
    std::string json_path = "tests/fixtures/frozen_constants.json";
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        if (flag == "--src") src_path = argv[i + 1];
        else if (flag == "--json") json_path = argv[i + 1];
        else {
            std::cerr << "unknown flag: " << flag << '\n';
            return 2;
        }
    }
    try {
        Measured m;
        m.out.family_seed_base = frozen().family_seed_base;
        m.out.family_count = frozen().family_count;
        std::cerr << "measuring prop-5-gap...\n";
        measure_prop5(m);
        std::cerr << "measuring prop-6-compensated...\n";
        measure_prop6(m);
        std::cerr << "measuring prop-7-lacunary...\n";
        measure_prop7(m);
        std::cerr << "measuring reference family...\n";
        measure_family(m);
        std::cerr << "measuring slow-jitter monotone family...\n";
        measure_gm_family(m);
        std::cerr << "measuring norms reference...\n";
        measure_norms_reference(m);
        emit_source(m.out, src_path);
        emit_json(m, json_path);
        std::cerr << "wrote " << src_path << " and " << json_path << '\n';
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
