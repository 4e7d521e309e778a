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

#ifndef NETSEQ_IO_HPP
#define NETSEQ_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

#include "netseq/functionals.hpp"
#include "netseq/gm_classes.hpp"
#include "netseq/sequence.hpp"

namespace netseq {

// Sequence file formats.
//   JSON: {"offset": int, "re": [float...], "im": [float...]},
//         re and im of equal nonzero length.
//   CSV:  rows "k,re,im"; distinct indices, gaps read as zero.
// Readers reject mismatched lengths, malformed rows and non-finite entries.

TwoSidedSequence read_sequence_json(std::istream& in);
TwoSidedSequence read_sequence_csv(std::istream& in);

/// Dispatches on the extension: ".json" or anything else as CSV.
TwoSidedSequence read_sequence(const std::filesystem::path& path);

void write_sequence_json(const TwoSidedSequence& a, std::ostream& out);
void write_sequence_csv(const TwoSidedSequence& a, std::ostream& out);

/// 17 significant digits; every CSV number goes through this.
std::string fmt17(double x);

nlohmann::ordered_json to_json(const NormReport& report);
nlohmann::ordered_json to_json(const ClassDiagnostic& d);

/// Columns: n, numerator, denominator, ratio (scored blocks only).
void write_diagnostic_csv(const ClassDiagnostic& d, std::ostream& out);

/// Columns: n, theta, tilde_avg, hat_avg, majorant_tilde, majorant_hat.
void write_profile_csv(const DyadicProfile& profile, std::ostream& out);

/// Columns: x, re_f, im_f.
void write_grid_csv(std::span<const double> x, std::span<const Complex> f,
                    std::ostream& out);

}  // namespace netseq

#endif  // NETSEQ_IO_HPP
