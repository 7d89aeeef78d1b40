// Copyright 2026 The entangle Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// File formats.
//
// State JSON:  {"dim_u": 2, "dim_v": 2, "re": [...], "im": [...]}
//   re / im are row-major with dim_u * dim_v entries each. A norm within 1e-6
//   of 1 is accepted and renormalized (with a warning); anything else is
//   rejected.
//
// CSV: header row, then one record per line, numbers as %.12e.
//   spectrum:  k,lambda,f_p
//   radial:    k,lambda,f_p,weight      (lambda holds Omega * rho~(k))
//   schmidt:   index,lambda,cumulative
//   scan:      decay,rank,purity,entropy,delta_p,regime_flag

#ifndef ENTANGLE_IO_HPP
#define ENTANGLE_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "entangle/bipartite.hpp"
#include "entangle/homogeneous.hpp"
#include "entangle/hydrogen.hpp"
#include "entangle/lattice.hpp"

namespace entangle::io {

inline constexpr double kInputNormTol = 1e-6;

struct LoadedState {
  PureBipartiteState state;
  std::optional<std::string> warning;
};

/// Throws ValidationError with a parse or schema diagnostic.
LoadedState parse_state_json(std::string_view text);
LoadedState load_state_json(const std::string &path);
std::string state_to_json(const PureBipartiteState &state);

/// printf("%.12e").
std::string format_number(double x);

void write_spectrum_csv(std::ostream &os, const SpectralDistribution &spec);
void write_radial_csv(std::ostream &os, const hydrogen::RadialSpectrum &spec);
void write_schmidt_csv(std::ostream &os, const std::vector<double> &lambdas);
void write_scan_csv(std::ostream &os, const std::vector<lattice::ScanRow> &rows);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Parses a numeric CSV with a mandatory header. Throws ValidationError on a
/// missing header, ragged rows or unparsable numbers.
CsvTable parse_csv(std::string_view text);

/// Re-validating readers for the files written above.
SpectralDistribution read_spectrum_csv(std::string_view text, double hbar);
hydrogen::RadialSpectrum read_radial_csv(std::string_view text, double hbar, double a0);
std::vector<double> read_schmidt_csv(std::string_view text);
std::vector<lattice::ScanRow> read_scan_csv(std::string_view text);

/// Flat, insertion-ordered JSON object whose numbers print as %.12e.
class JsonSummary {
 public:
  using Value = std::variant<double, std::int64_t, bool, std::string, std::vector<double>,
                             std::vector<std::string>>;

  JsonSummary &set(std::string key, Value value);
  std::string dump() const;

 private:
  std::vector<std::pair<std::string, Value>> fields_;
};

}  // namespace entangle::io

#endif  // ENTANGLE_IO_HPP
