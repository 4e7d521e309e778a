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

#include "netseq/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "netseq/frozen.hpp"
#include "netseq/io.hpp"
#include "netseq/netspace.hpp"

namespace netseq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::map<std::string, std::string> parse_kv(const std::string& text) {
    std::map<std::string, std::string> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw std::invalid_argument("bad key=value item: " + item);
        }
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

double parse_double(const std::string& s) {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad number: " + s);
    return v;
}

std::int64_t parse_size_token(const std::string& s) {
    if (s.rfind("2^", 0) == 0) {
        const int e = std::stoi(s.substr(2));
        if (e < 0 || e > 40) throw std::invalid_argument("bad size: " + s);
        return std::int64_t{1} << e;
    }
    std::size_t used = 0;
    const std::int64_t v = std::stoll(s, &used);
    if (used != s.size() || v < 1) throw std::invalid_argument("bad size: " + s);
    return v;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    return f;
}

void require_p_grid(const std::vector<double>& grid) {
    if (grid.empty()) throw std::invalid_argument("empty p grid");
    for (double p : grid) {
        if (!(p > 1.0) || std::isinf(p)) {
            throw std::invalid_argument("p values must lie in (1, inf)");
        }
    }
}

double safe_ratio(double num, double den) {
    if (den == 0.0) return num == 0.0 ? 0.0 : kInf;
    return num / den;
}

NormReport report_with_table(const TwoSidedSequence& a, const TildeTable& table,
                             double p, const QuadratureSpec& quad) {
    NormReport r;
    r.p = p;
    r.p_prime = conjugate_exponent(p);
    r.j_p = j_p(a, p);
    r.j_p_star = j_p_star(a, p);
    r.i_p = i_p(a, p);
    r.net_norm = net_norm(table, r.p_prime, p);
    r.lorentz_norm = lorentz_norm(a, r.p_prime, p);
    r.lp_quadrature = lp_norm(a, p, quad).value;
    r.ratios = {
        {"lp_over_j_p", safe_ratio(r.lp_quadrature, r.j_p)},
        {"lp_over_j_p_star", safe_ratio(r.lp_quadrature, r.j_p_star)},
        {"lp_over_i_p", safe_ratio(r.lp_quadrature, r.i_p)},
        {"net_norm_over_lp", safe_ratio(r.net_norm, r.lp_quadrature)},
    };
    return r;
}

bool is_example_spec(const std::string& spec) {
    return spec.rfind("prop-", 0) == 0;
}

TwoSidedSequence sequence_from_example_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    int nmax = 8;
    if (colon != std::string::npos) {
        const auto kv = parse_kv(spec.substr(colon + 1));
        for (const auto& [key, value] : kv) {
            if (key == "nmax") {
                nmax = std::stoi(value);
            } else {
                throw std::invalid_argument("unknown example parameter: " + key);
            }
        }
    }
    return make_example(example_by_name(name), nmax);
}

ClassDiagnostic diagnostic_by_name(const std::string& cls,
                                   const TwoSidedSequence& a,
                                   const DyadicProfile& profile, double lambda,
                                   bool full_grid) {
    if (cls == "gm-star") return gm_star_diagnostic(profile);
    if (cls == "gm-bar") return gm_bar_diagnostic(profile);
    if (cls == "gm") {
        return gm_classic_diagnostic(positive_part(a), lambda, full_grid);
    }
    if (cls == "wm") return wm_diagnostic(positive_part(a));
    throw std::invalid_argument("unknown class: " + cls +
                                " (expected gm-star, gm-bar, gm, wm)");
}

// --- reproduction rows ------------------------------------------------------

ReproduceRow row(std::string check, std::int64_t level, double lhs, double rhs,
                 std::string relation) {
    ReproduceRow r;
    r.check = std::move(check);
    r.level = level;
    r.lhs = lhs;
    r.rhs = rhs;
    r.relation = std::move(relation);
    if (r.relation == "<=") r.pass = lhs <= rhs;
    else if (r.relation == "<") r.pass = lhs < rhs;
    else if (r.relation == ">=") r.pass = lhs >= rhs;
    else r.pass = lhs == rhs;
    return r;
}

ReproduceRow verdict_row(std::string check, Verdict got, Verdict expected) {
    return row(std::move(check), -1, got == expected ? 1.0 : 0.0, 1.0, "==");
}

void reproduce_prop5(int nmax, std::vector<ReproduceRow>& rows) {
    const FrozenConstants& fc = frozen();
    const TwoSidedSequence a = make_example(ExampleName::Prop5Gap, nmax);
    for (int n = 5; n <= nmax; ++n) {
        const std::int64_t lo = std::int64_t{1} << n;
        const std::int64_t hi = std::int64_t{1} << (n + 1);
        double block = 0.0;
        for (std::int64_t k = lo; k <= hi; ++k) block += delta_abs(a, k);
        const double scaled =
            block * std::exp2(n) / std::sqrt(static_cast<double>(n));
        rows.push_back(row("gm-numerator-ratio-lo", n, scaled,
                           fc.prop5_gm_num_ratio_min, ">="));
        rows.push_back(row("gm-numerator-ratio-hi", n, scaled,
                           fc.prop5_gm_num_ratio_max, "<="));
        double rhs_sum = 0.0;
        for (std::int64_t k = lo / 2; k <= 2 * lo; ++k) {
            rhs_sum += std::abs(a.at(k));
        }
        rows.push_back(row("gm-rhs-bound", n, rhs_sum,
                           3.0 + 2.0 * std::log2(2.0), "<="));
        const double hat = hat_average(a, n) * std::exp2(n) / n;
        rows.push_back(row("hat-lower", n, hat, fc.prop5_hat_ratio_min, ">="));
    }
    const ClassDiagnostic bar = gm_bar_diagnostic(a);
    rows.push_back(verdict_row("gm-bar-verdict-bounded", bar.verdict,
                               Verdict::Bounded));
    rows.push_back(row("gm-bar-best-constant", -1, bar.best_constant,
                       fc.prop5_gmbar_best_upper, "<="));
    const ClassDiagnostic classic = gm_classic_diagnostic(positive_part(a));
    rows.push_back(verdict_row("gm-classic-verdict-growing", classic.verdict,
                               Verdict::Growing));
}

void reproduce_prop6(int nmax, std::vector<ReproduceRow>& rows) {
    const FrozenConstants& fc = frozen();
    const TwoSidedSequence c = make_example(ExampleName::Prop6Compensated, nmax);
    const DyadicProfile profile = make_dyadic_profile(c);
    for (int n = 4; n <= nmax; ++n) {
        const std::int64_t lo = std::int64_t{1} << n;
        const std::int64_t hi = (std::int64_t{1} << (n + 1)) - 1;
        double block = 0.0;
        for (std::int64_t k = lo; k <= hi; ++k) block += delta_abs(c, k);
        const double bound = 5.0 * std::pow(2.0 / 3.0, n);
        rows.push_back(row("delta-block-bound", n, block, bound, "<"));
        rows.push_back(row("tilde-lower", n,
                           profile.tilde_avg[static_cast<std::size_t>(n)],
                           0.75 * std::pow(2.0 / 3.0, n), ">="));
    }
    rows.push_back(verdict_row("gm-bar-verdict-bounded",
                               gm_bar_diagnostic(profile).verdict,
                               Verdict::Bounded));
    // The real part alone must fail the classic one-sided test: its ratio
    // curve grows by at least the frozen factor per dyadic probe.
    const ClassDiagnostic classic =
        gm_classic_diagnostic(real_part(positive_part(c)));
    double min_growth = kInf;
    for (std::size_t i = 0; i + 1 < classic.block_index.size(); ++i) {
        const std::int64_t n = classic.block_index[i];
        if (n < 16 || classic.block_index[i + 1] > (std::int64_t{1} << (nmax - 1))) {
            continue;
        }
        if (classic.ratio[i] > 0.0 && std::isfinite(classic.ratio[i]) &&
            std::isfinite(classic.ratio[i + 1])) {
            min_growth = std::min(min_growth,
                                  classic.ratio[i + 1] / classic.ratio[i]);
        }
    }
    rows.push_back(row("real-part-gm-ratio-growth", -1, min_growth,
                       fc.prop6_gm_growth_min, ">="));
}

void reproduce_prop7(int nmax, std::vector<ReproduceRow>& rows) {
    const FrozenConstants& fc = frozen();
    const TwoSidedSequence c = make_example(ExampleName::Prop7Lacunary, nmax);
    const TwoSidedSequence neg = restricted(c, c.k_min(), 0);
    for (int k = 1; k <= nmax; ++k) {
        rows.push_back(row("neg-hat-decay", k, hat_average(neg, k) * std::exp2(k),
                           fc.prop7_neg_hat_upper, "<="));
    }
    rows.push_back(verdict_row("neg-gm-bar-verdict-growing",
                               gm_bar_diagnostic(neg).verdict,
                               Verdict::Growing));
    const ClassDiagnostic full = gm_bar_diagnostic(c);
    rows.push_back(verdict_row("full-gm-bar-verdict-bounded", full.verdict,
                               Verdict::Bounded));
    rows.push_back(row("full-gm-bar-best-constant", -1, full.best_constant,
                       fc.prop7_full_gmbar_best_upper, "<="));
}

}  // namespace

std::pair<FamilyKind, FamilyParams> parse_family_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    FamilyParams params;
    bool saw_alpha = false;
    bool saw_seed = false;
    if (colon != std::string::npos) {
        for (const auto& [key, value] : parse_kv(spec.substr(colon + 1))) {
            if (key == "alpha") {
                params.alpha = parse_double(value);
                saw_alpha = true;
            } else if (key == "seed") {
                params.seed = static_cast<std::uint64_t>(std::stoull(value));
                saw_seed = true;
            } else {
                throw std::invalid_argument("unknown family parameter: " + key);
            }
        }
    }
    FamilyKind kind;
    if (name == "power") {
        kind = FamilyKind::Power;
    } else if (name == "one-sided-power") {
        kind = FamilyKind::OneSidedPower;
    } else if (name == "random" || name == "random-complex") {
        kind = FamilyKind::RandomComplex;
    } else if (name == "random-gm") {
        kind = FamilyKind::RandomGm;
    } else {
        throw std::invalid_argument("unknown family: " + name);
    }
    if (kind == FamilyKind::RandomComplex && saw_alpha) {
        throw std::invalid_argument("random family takes no alpha");
    }
    if ((kind == FamilyKind::Power || kind == FamilyKind::OneSidedPower) &&
        saw_seed) {
        throw std::invalid_argument("power families take no seed");
    }
    return {kind, params};
}

std::vector<std::int64_t> parse_sizes(const std::string& spec) {
    std::vector<std::int64_t> sizes;
    const auto dots = spec.find("..");
    if (dots != std::string::npos) {
        const std::int64_t lo = parse_size_token(spec.substr(0, dots));
        const std::int64_t hi = parse_size_token(spec.substr(dots + 2));
        if (hi < lo) throw std::invalid_argument("descending size range");
        for (std::int64_t s = lo; s <= hi; s *= 2) sizes.push_back(s);
    } else {
        std::istringstream in(spec);
        std::string item;
        while (std::getline(in, item, ',')) {
            sizes.push_back(parse_size_token(item));
        }
    }
    if (sizes.empty()) throw std::invalid_argument("empty size list");
    if (!std::is_sorted(sizes.begin(), sizes.end())) {
        throw std::invalid_argument("sizes must ascend");
    }
    return sizes;
}

TwoSidedSequence load_sequence(const SequenceSource& source) {
    const bool have_file = !source.input_path.empty();
    const bool have_family = !source.family_spec.empty();
    if (have_file == have_family) {
        throw std::invalid_argument(
            "exactly one of --input and --family is required");
    }
    if (have_file) return read_sequence(source.input_path);
    if (is_example_spec(source.family_spec)) {
        return sequence_from_example_spec(source.family_spec);
    }
    const auto [kind, params] = parse_family_spec(source.family_spec);
    return make_family(kind, params, source.size);
}

NormReport build_norm_report(const TwoSidedSequence& a, double p,
                             const QuadratureSpec& quad) {
    return report_with_table(a, tilde_table(a), p, quad);
}

int run_norms(const NormsOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        require_p_grid(opt.p_grid);
        const TwoSidedSequence a = load_sequence(opt.source);
        const TildeTable table = tilde_table(a);
        nlohmann::ordered_json reports = nlohmann::ordered_json::array();
        for (double p : opt.p_grid) {
            reports.push_back(to_json(report_with_table(a, table, p, opt.quad)));
        }
        if (!opt.dump_grid_path.empty()) {
            const std::int64_t needed =
                static_cast<std::int64_t>(opt.quad.oversample) *
                (2 * a.support_radius() + 1);
            std::int64_t m = opt.quad.sample_count;
            while (m < needed) m <<= 1;
            const std::vector<double> x = uniform_grid(static_cast<int>(m));
            auto f = open_out(opt.dump_grid_path);
            write_grid_csv(x, evaluate(a, x), f);
        }
        if (opt.out_path.empty()) {
            out << reports.dump(2) << '\n';
        } else {
            open_out(opt.out_path) << reports.dump(2) << '\n';
        }
        return kExitPass;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}

int run_classify(const ClassifyOptions& opt, std::ostream& out,
                 std::ostream& err) {
    try {
        if (opt.classes.empty()) {
            throw std::invalid_argument("no classes requested");
        }
        if (opt.format != "json" && opt.format != "csv") {
            throw std::invalid_argument("format must be json or csv");
        }
        const TwoSidedSequence a = load_sequence(opt.source);
        const DyadicProfile profile = make_dyadic_profile(a);
        std::vector<ClassDiagnostic> diagnostics;
        for (const std::string& cls : opt.classes) {
            diagnostics.push_back(diagnostic_by_name(cls, a, profile,
                                                     opt.lambda,
                                                     opt.full_grid));
        }
        if (!opt.profile_path.empty()) {
            auto f = open_out(opt.profile_path);
            write_profile_csv(profile, f);
        }
        std::ostringstream body;
        if (opt.format == "json") {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& d : diagnostics) arr.push_back(to_json(d));
            body << arr.dump(2) << '\n';
        } else {
            for (const auto& d : diagnostics) {
                body << "# class: " << to_string(d.class_name) << '\n';
                write_diagnostic_csv(d, body);
            }
        }
        if (opt.out_path.empty()) {
            out << body.str();
        } else {
            open_out(opt.out_path) << body.str();
        }
        return kExitPass;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}

bool ReproduceReport::all_pass() const {
    return std::all_of(rows.begin(), rows.end(),
                       [](const ReproduceRow& r) { return r.pass; });
}

ReproduceReport reproduce_report(ExampleName name, int nmax) {
    if (nmax < 6 || nmax > 20) {
        throw std::invalid_argument("reproduce: nmax must lie in [6, 20]");
    }
    ReproduceReport report;
    report.name = name;
    report.nmax = nmax;
    switch (name) {
        case ExampleName::Prop5Gap:
            reproduce_prop5(nmax, report.rows);
            break;
        case ExampleName::Prop6Compensated:
            reproduce_prop6(nmax, report.rows);
            break;
        case ExampleName::Prop7Lacunary:
            reproduce_prop7(nmax, report.rows);
            break;
    }
    return report;
}

int run_reproduce(const ReproduceOptions& opt, std::ostream& out,
                  std::ostream& err) {
    ReproduceReport report;
    try {
        report = reproduce_report(example_by_name(opt.name), opt.nmax);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    out << opt.name << " nmax=" << opt.nmax << '\n';
    out << std::left << std::setw(30) << "check" << std::setw(6) << "n"
        << std::setw(26) << "lhs" << std::setw(5) << "rel" << std::setw(26)
        << "rhs" << "status" << '\n';
    for (const ReproduceRow& r : report.rows) {
        out << std::left << std::setw(30) << r.check << std::setw(6) << r.level
            << std::setw(26) << fmt17(r.lhs) << std::setw(5) << r.relation
            << std::setw(26) << fmt17(r.rhs) << (r.pass ? "PASS" : "FAIL")
            << '\n';
    }
    const std::size_t failed = static_cast<std::size_t>(
        std::count_if(report.rows.begin(), report.rows.end(),
                      [](const ReproduceRow& r) { return !r.pass; }));
    out << (report.all_pass() ? "ALL PASS" : "FAILED") << " ("
        << report.rows.size() - failed << '/' << report.rows.size()
        << " checks)\n";
    if (!opt.out_path.empty()) {
        try {
            auto f = open_out(opt.out_path);
            f << "check,n,lhs,relation,rhs,status\n";
            for (const ReproduceRow& r : report.rows) {
                f << r.check << ',' << r.level << ',' << fmt17(r.lhs) << ','
                  << r.relation << ',' << fmt17(r.rhs) << ','
                  << (r.pass ? "PASS" : "FAIL") << '\n';
            }
        } catch (const std::exception& e) {
            err << "error: " << e.what() << '\n';
            return kExitConfig;
        }
    }
    return report.all_pass() ? kExitPass : kExitFail;
}

int run_equivalence(const EquivalenceOptions& opt, std::ostream& out,
                    std::ostream& err) {
    try {
        require_p_grid(opt.p_grid);
        if (opt.sizes.empty()) throw std::invalid_argument("no sizes given");
        if (opt.family_spec.empty() || is_example_spec(opt.family_spec)) {
            throw std::invalid_argument(
                "equivalence needs a parametric family spec");
        }
        const auto [kind, params] = parse_family_spec(opt.family_spec);
        const TwoSidedSequence largest =
            make_family(kind, params, opt.sizes.back());
        if (std::all_of(largest.values().begin(), largest.values().end(),
                        [](const Complex& v) { return v == Complex{}; })) {
            throw std::invalid_argument("family is identically zero");
        }
        if (gm_bar_diagnostic(largest).verdict == Verdict::Growing) {
            err << "warning: family fails the two-sided hat diagnostic; "
                   "the ratio sweep may not stabilize\n";
        }
        std::map<double, std::vector<std::pair<std::int64_t, NormReport>>> all;
        for (const std::int64_t size : opt.sizes) {
            const TwoSidedSequence a = make_family(kind, params, size);
            for (double p : opt.p_grid) {
                NormReport r;
                r.p = p;
                r.j_p = j_p(a, p);
                r.lp_quadrature = lp_norm(a, p, opt.quad).value;
                all[p].emplace_back(size, r);
            }
        }
        std::ostringstream csv;
        csv << "size,p,lp,j_p,ratio,ratio_min,ratio_max\n";
        for (double p : opt.p_grid) {
            double lo = kInf, hi = 0.0;
            for (const auto& [size, r] : all[p]) {
                const double ratio = safe_ratio(r.lp_quadrature, r.j_p);
                lo = std::min(lo, ratio);
                hi = std::max(hi, ratio);
            }
            for (const auto& [size, r] : all[p]) {
                csv << size << ',' << fmt17(p) << ',' << fmt17(r.lp_quadrature)
                    << ',' << fmt17(r.j_p) << ','
                    << fmt17(safe_ratio(r.lp_quadrature, r.j_p)) << ','
                    << fmt17(lo) << ',' << fmt17(hi) << '\n';
            }
        }
        if (opt.out_path.empty()) {
            out << csv.str();
        } else {
            open_out(opt.out_path) << csv.str();
        }
        return kExitPass;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}

int run_multiplier(const MultiplierOptions& opt, std::ostream& out,
                   std::ostream& err) {
    try {
        MultiplierKind kind;
        if (opt.kind == "alternating") {
            kind = MultiplierKind::Alternating;
        } else if (opt.kind == "dyadic-sign") {
            kind = MultiplierKind::DyadicSign;
        } else {
            throw std::invalid_argument(
                "kind must be alternating or dyadic-sign");
        }
        const TwoSidedSequence a = load_sequence(opt.source);
        const TwoSidedSequence b = apply_multiplier(a, kind);
        if (opt.out_path.empty()) {
            write_sequence_json(b, out);
        } else {
            auto f = open_out(opt.out_path);
            write_sequence_json(b, f);
        }
        return kExitPass;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}

TwoSidedSequence reference_family(int index) {
    FamilyParams params;
    params.seed = frozen().family_seed_base + static_cast<std::uint64_t>(index);
    const std::int64_t size = 1 + (static_cast<std::int64_t>(index) * 97) % 255;
    return make_family(FamilyKind::RandomComplex, params, size);
}

TwoSidedSequence reference_gm_family(int index) {
    FamilyParams params;
    params.seed = frozen().family_seed_base + 100000 +
                  static_cast<std::uint64_t>(index);
    params.alpha = 0.25 + 0.15 * (index % 5);
    const std::int64_t size =
        64 + (static_cast<std::int64_t>(index) * 53) % 449;
    return make_family(FamilyKind::RandomGm, params, size);
}

}  // namespace netseq
