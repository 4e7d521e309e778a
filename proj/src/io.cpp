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

#include "netseq/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace netseq {

namespace {

double require_finite(double x, const char* what) {
    if (!std::isfinite(x)) {
        throw std::runtime_error(std::string("sequence reader: non-finite ") +
                                 what);
    }
    return x;
}

// JSON cannot carry inf; ratio entries may be +inf by contract, so those are
// written as the string "inf".
nlohmann::ordered_json json_number(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return x;
}

}  // namespace

TwoSidedSequence read_sequence_json(std::istream& in) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("sequence reader: bad JSON: ") +
                                 e.what());
    }
    if (!doc.is_object() || !doc.contains("offset") || !doc.contains("re") ||
        !doc.contains("im")) {
        throw std::runtime_error(
            "sequence reader: need fields offset, re, im");
    }
    if (!doc["offset"].is_number_integer()) {
        throw std::runtime_error("sequence reader: offset must be an integer");
    }
    const auto& re = doc["re"];
    const auto& im = doc["im"];
    if (!re.is_array() || !im.is_array() || re.size() != im.size() ||
        re.empty()) {
        throw std::runtime_error(
            "sequence reader: re and im must be equal-length non-empty arrays");
    }
    std::vector<Complex> values(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) {
        if (!re[i].is_number() || !im[i].is_number()) {
            throw std::runtime_error("sequence reader: non-numeric entry");
        }
        values[i] = Complex(require_finite(re[i].get<double>(), "re entry"),
                            require_finite(im[i].get<double>(), "im entry"));
    }
    return TwoSidedSequence(doc["offset"].get<std::int64_t>(),
                            std::move(values));
}

TwoSidedSequence read_sequence_csv(std::istream& in) {
    std::map<std::int64_t, Complex> entries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        std::string field;
        std::int64_t k = 0;
        double re = 0.0, im = 0.0;
        try {
            if (!std::getline(row, field, ',')) throw std::invalid_argument("");
            k = std::stoll(field);
            if (!std::getline(row, field, ',')) throw std::invalid_argument("");
            re = std::stod(field);
            if (!std::getline(row, field, ',')) throw std::invalid_argument("");
            im = std::stod(field);
        } catch (const std::exception&) {
            throw std::runtime_error("sequence reader: malformed CSV row " +
                                     std::to_string(line_no));
        }
        require_finite(re, "re entry");
        require_finite(im, "im entry");
        if (!entries.emplace(k, Complex(re, im)).second) {
            throw std::runtime_error("sequence reader: duplicate index " +
                                     std::to_string(k));
        }
    }
    if (entries.empty()) {
        throw std::runtime_error("sequence reader: empty CSV input");
    }
    const std::int64_t lo = entries.begin()->first;
    const std::int64_t hi = entries.rbegin()->first;
    std::vector<Complex> values(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [k, v] : entries) {
        values[static_cast<std::size_t>(k - lo)] = v;
    }
    return TwoSidedSequence(lo, std::move(values));
}

TwoSidedSequence read_sequence(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open input file: " + path.string());
    }
    if (path.extension() == ".json") return read_sequence_json(in);
    return read_sequence_csv(in);
}

void write_sequence_json(const TwoSidedSequence& a, std::ostream& out) {
    nlohmann::ordered_json doc;
    doc["offset"] = a.offset();
    std::vector<double> re(a.size()), im(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        re[i] = a.values()[i].real();
        im[i] = a.values()[i].imag();
    }
    doc["re"] = re;
    doc["im"] = im;
    out << doc.dump(2) << '\n';
}

void write_sequence_csv(const TwoSidedSequence& a, std::ostream& out) {
    for (std::int64_t k = a.k_min(); k <= a.k_max(); ++k) {
        const Complex v = a.at(k);
        out << k << ',' << fmt17(v.real()) << ',' << fmt17(v.imag()) << '\n';
    }
}

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

nlohmann::ordered_json to_json(const NormReport& report) {
    nlohmann::ordered_json doc;
    doc["p"] = report.p;
    doc["p_prime"] = report.p_prime;
    doc["j_p"] = report.j_p;
    doc["j_p_star"] = report.j_p_star;
    doc["i_p"] = report.i_p;
    doc["net_norm"] = report.net_norm;
    doc["lorentz_norm"] = report.lorentz_norm;
    doc["lp_quadrature"] = report.lp_quadrature;
    nlohmann::ordered_json ratios;
    for (const auto& [label, value] : report.ratios) {
        ratios[label] = json_number(value);
    }
    doc["ratios"] = ratios;
    return doc;
}

nlohmann::ordered_json to_json(const ClassDiagnostic& d) {
    nlohmann::ordered_json doc;
    doc["class"] = to_string(d.class_name);
    doc["blocks"] = d.block_index;
    doc["numerator"] = d.numerator;
    doc["denominator"] = d.denominator;
    nlohmann::ordered_json ratios = nlohmann::ordered_json::array();
    for (double r : d.ratio) ratios.push_back(json_number(r));
    doc["ratio"] = ratios;
    doc["best_constant"] = json_number(d.best_constant);
    doc["witness"] = d.witness;
    doc["verdict"] = to_string(d.verdict);
    return doc;
}

void write_diagnostic_csv(const ClassDiagnostic& d, std::ostream& out) {
    out << "n,numerator,denominator,ratio\n";
    for (std::size_t i = 0; i < d.block_index.size(); ++i) {
        out << d.block_index[i] << ',' << fmt17(d.numerator[i]) << ','
            << fmt17(d.denominator[i]) << ',' << fmt17(d.ratio[i]) << '\n';
    }
}

void write_profile_csv(const DyadicProfile& profile, std::ostream& out) {
    out << "n,theta,tilde_avg,hat_avg,majorant_tilde,majorant_hat\n";
    for (int n = 0; n < profile.levels; ++n) {
        const auto i = static_cast<std::size_t>(n);
        out << n << ',' << fmt17(profile.theta[i]) << ','
            << fmt17(profile.tilde_avg[i]) << ',' << fmt17(profile.hat_avg[i])
            << ',' << fmt17(profile.majorant_tilde[i]) << ','
            << fmt17(profile.majorant_hat[i]) << '\n';
    }
}

void write_grid_csv(std::span<const double> x, std::span<const Complex> f,
                    std::ostream& out) {
    out << "x,re_f,im_f\n";
    for (std::size_t j = 0; j < x.size() && j < f.size(); ++j) {
        out << fmt17(x[j]) << ',' << fmt17(f[j].real()) << ','
            << fmt17(f[j].imag()) << '\n';
    }
}

}  // namespace netseq
