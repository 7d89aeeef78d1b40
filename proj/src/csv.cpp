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

#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "entangle/error.hpp"
#include "entangle/io.hpp"

namespace entangle::io {

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

void require_header(const CsvTable &t, std::initializer_list<const char *> expected,
                    const char *kind) {
  std::vector<std::string> want(expected.begin(), expected.end());
  if (t.header != want) {
    std::string joined;
    for (const auto &h : want) joined += (joined.empty() ? "" : ",") + h;
    throw ValidationError(std::string(kind) + " CSV: expected header '" + joined + "'");
  }
}

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), 1e-300});
}

std::string escape(const std::string &s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

}  // namespace

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12e", x);
  return buf;
}

void write_spectrum_csv(std::ostream &os, const SpectralDistribution &spec) {
  os << "k,lambda,f_p\n";
  const auto f = spec.momentum_density();
  for (std::size_t i = 0; i < spec.size(); ++i) {
    os << format_number(spec.k_values()[i]) << ',' << format_number(spec.lambdas()[i]) << ','
       << format_number(f[i]) << '\n';
  }
}

void write_radial_csv(std::ostream &os, const hydrogen::RadialSpectrum &spec) {
  os << "k,lambda,f_p,weight\n";
  for (std::size_t i = 0; i < spec.size(); ++i) {
    os << format_number(spec.k[i]) << ',' << format_number(spec.omega_rho[i]) << ','
       << format_number(spec.f_p[i]) << ',' << format_number(spec.weight[i]) << '\n';
  }
}

void write_schmidt_csv(std::ostream &os, const std::vector<double> &lambdas) {
  os << "index,lambda,cumulative\n";
  double cum = 0.0;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    cum += lambdas[i];
    os << i << ',' << format_number(lambdas[i]) << ',' << format_number(cum) << '\n';
  }
}

void write_scan_csv(std::ostream &os, const std::vector<lattice::ScanRow> &rows) {
  os << "decay,rank,purity,entropy,delta_p,regime_flag\n";
  for (const auto &r : rows) {
    os << format_number(r.decay) << ',' << r.rank << ',' << format_number(r.purity) << ','
       << format_number(r.entropy) << ',' << format_number(r.delta_p) << ','
       << (r.well_resolved ? 1 : 0) << '\n';
  }
}

CsvTable parse_csv(std::string_view text) {
  CsvTable t;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const auto line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (t.header.empty()) {
      for (auto c : cells) t.header.emplace_back(trim(c));
      continue;
    }
    if (cells.size() != t.header.size()) {
      throw ValidationError("CSV: line " + std::to_string(line_no) + " has " +
                            std::to_string(cells.size()) + " fields, header has " +
                            std::to_string(t.header.size()));
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (auto c : cells) {
      c = trim(c);
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), v);
      if (ec != std::errc{} || ptr != c.data() + c.size()) {
        throw ValidationError("CSV: line " + std::to_string(line_no) + ": cannot parse '" +
                              std::string(c) + "'");
      }
      row.push_back(v);
    }
    t.rows.push_back(std::move(row));
  }
  if (t.header.empty()) throw ValidationError("CSV: missing header row");
  return t;
}

SpectralDistribution read_spectrum_csv(std::string_view text, double hbar) {
  const auto t = parse_csv(text);
  require_header(t, {"k", "lambda", "f_p"}, "spectrum");
  if (t.rows.size() < 2) throw ValidationError("spectrum CSV: need at least two rows");
  std::vector<double> k, lambda;
  for (const auto &r : t.rows) {
    k.push_back(r[0]);
    lambda.push_back(r[1]);
  }
  const double dk = k[1] - k[0];
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (!close_rel(t.rows[i][2], lambda[i] / (hbar * dk), 1e-9) &&
        std::abs(t.rows[i][2] - lambda[i] / (hbar * dk)) > 1e-12) {
      throw ValidationError("spectrum CSV: f_p inconsistent with lambda at row " +
                            std::to_string(i + 1));
    }
  }
  return SpectralDistribution::create(std::move(k), std::move(lambda), hbar, dk);
}

hydrogen::RadialSpectrum read_radial_csv(std::string_view text, double hbar, double a0) {
  const auto t = parse_csv(text);
  require_header(t, {"k", "lambda", "f_p", "weight"}, "radial");
  if (t.rows.size() < 16) throw ValidationError("radial CSV: need at least 16 bins");
  hydrogen::RadialSpectrum s;
  s.hbar = hbar;
  s.a0 = a0;
  s.dk = 2.0 * t.rows[0][0];
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto &r = t.rows[i];
    if (!close_rel(r[1], hydrogen::rho_tilde_int(r[0], a0), 1e-10) ||
        !close_rel(r[2], hydrogen::f_int(hbar * r[0], a0, hbar), 1e-10) || !(r[3] > 0.0)) {
      throw ValidationError("radial CSV: row " + std::to_string(i + 1) +
                            " does not match the 1s momentum distribution");
    }
    s.k.push_back(r[0]);
    s.omega_rho.push_back(r[1]);
    s.f_p.push_back(r[2]);
    s.weight.push_back(r[3]);
  }
  const double mass = s.weighted_moment(0);
  if (!(mass > 0.0) || mass > 1.0 + 1e-6) {
    throw ValidationError("radial CSV: weighted trace " + format_number(mass) +
                          " is outside (0, 1]");
  }
  s.tail_mass = 1.0 - mass;
  return s;
}

std::vector<double> read_schmidt_csv(std::string_view text) {
  const auto t = parse_csv(text);
  require_header(t, {"index", "lambda", "cumulative"}, "schmidt");
  std::vector<double> lambdas;
  double cum = 0.0;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto &r = t.rows[i];
    if (r[0] != static_cast<double>(i)) throw ValidationError("schmidt CSV: index out of sequence");
    if (r[1] < -kLambdaClamp) throw ValidationError("schmidt CSV: negative lambda");
    if (i > 0 && r[1] > lambdas.back() + 1e-10) {
      throw ValidationError("schmidt CSV: lambdas are not descending");
    }
    cum += r[1];
    if (std::abs(cum - r[2]) > 1e-10) throw ValidationError("schmidt CSV: cumulative column inconsistent");
    lambdas.push_back(r[1]);
  }
  if (std::abs(cum - 1.0) > 1e-10) throw ValidationError("schmidt CSV: lambdas do not sum to 1");
  return lambdas;
}

std::vector<lattice::ScanRow> read_scan_csv(std::string_view text) {
  const auto t = parse_csv(text);
  require_header(t, {"decay", "rank", "purity", "entropy", "delta_p", "regime_flag"}, "scan");
  std::vector<lattice::ScanRow> rows;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto &r = t.rows[i];
    const bool ok = r[0] > 0.0 && r[1] >= 1.0 && r[1] == std::floor(r[1]) && r[2] > 0.0 &&
                    r[2] <= 1.0 + 1e-9 && r[3] >= 0.0 && r[4] >= 0.0 &&
                    (r[5] == 0.0 || r[5] == 1.0);
    if (!ok) throw ValidationError("scan CSV: row " + std::to_string(i + 1) + " is out of range");
    rows.push_back({r[0], static_cast<std::size_t>(r[1]), r[2], r[3], r[4], r[5] == 1.0});
  }
  return rows;
}

JsonSummary &JsonSummary::set(std::string key, Value value) {
  for (auto &f : fields_) {
    if (f.first == key) {
      f.second = std::move(value);
      return *this;
    }
  }
  fields_.emplace_back(std::move(key), std::move(value));
  return *this;
}

std::string JsonSummary::dump() const {
  std::ostringstream os;
  os << "{\n";
  for (std::size_t i = 0; i < fields_.size(); ++i) {
    os << "  \"" << escape(fields_[i].first) << "\": ";
    std::visit(
        [&os](const auto &v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, double>) {
            os << format_number(v);
          } else if constexpr (std::is_same_v<T, std::int64_t>) {
            os << v;
          } else if constexpr (std::is_same_v<T, bool>) {
            os << (v ? "true" : "false");
          } else if constexpr (std::is_same_v<T, std::string>) {
            os << '"' << escape(v) << '"';
          } else if constexpr (std::is_same_v<T, std::vector<double>>) {
            os << '[';
            for (std::size_t j = 0; j < v.size(); ++j) os << (j ? ", " : "") << format_number(v[j]);
            os << ']';
          } else {
            os << '[';
            for (std::size_t j = 0; j < v.size(); ++j) os << (j ? ", " : "") << '"' << escape(v[j]) << '"';
            os << ']';
          }
        },
        fields_[i].second);
    os << (i + 1 < fields_.size() ? ",\n" : "\n");
  }
  os << "}\n";
  return os.str();
}

}  // namespace entangle::io
