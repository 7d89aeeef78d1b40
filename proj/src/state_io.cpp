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

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "entangle/error.hpp"
#include "entangle/io.hpp"

namespace entangle::io {

using nlohmann::json;

namespace {

std::size_t read_dim(const json &doc, const char *key) {
  if (!doc.contains(key)) throw ValidationError(std::string("state JSON: missing \"") + key + "\"");
  const auto &v = doc.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 1) {
    throw ValidationError(std::string("state JSON: \"") + key + "\" must be a positive integer");
  }
  return v.get<std::size_t>();
}

std::vector<double> read_array(const json &doc, const char *key, std::size_t expected) {
  if (!doc.contains(key)) throw ValidationError(std::string("state JSON: missing \"") + key + "\"");
  const auto &v = doc.at(key);
  if (!v.is_array()) throw ValidationError(std::string("state JSON: \"") + key + "\" must be an array");
  if (v.size() != expected) {
    throw ValidationError(std::string("state JSON: \"") + key + "\" has " +
                          std::to_string(v.size()) + " entries, expected dim_u*dim_v = " +
                          std::to_string(expected));
  }
  std::vector<double> out;
  out.reserve(expected);
  for (const auto &x : v) {
    if (!x.is_number()) throw ValidationError(std::string("state JSON: \"") + key + "\" holds a non-number");
    out.push_back(x.get<double>());
  }
  return out;
}

}  // namespace

LoadedState parse_state_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw ValidationError(std::string("state JSON: parse error: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("state JSON: top level must be an object");

  const std::size_t du = read_dim(doc, "dim_u");
  const std::size_t dv = read_dim(doc, "dim_v");
  const auto re = read_array(doc, "re", du * dv);
  const auto im = read_array(doc, "im", du * dv);

  std::vector<cplx> entries(du * dv);
  double n2 = 0.0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    entries[i] = {re[i], im[i]};
    n2 += std::norm(entries[i]);
  }
  const double norm = std::sqrt(n2);
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > kInputNormTol) {
    std::ostringstream os;
    os.precision(15);
    os << "state JSON: norm invariant violated (norm = " << norm << ", must be within 1e-6 of 1)";
    throw ValidationError(os.str());
  }
  LoadedState out{PureBipartiteState::normalized(ComplexMatrix(du, dv, std::move(entries))),
                  std::nullopt};
  if (std::abs(n2 - 1.0) > kNormTol) {
    std::ostringstream os;
    os.precision(15);
    os << "input norm " << norm << " renormalized to 1";
    out.warning = os.str();
  }
  return out;
}

LoadedState load_state_json(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("state JSON: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_json(buf.str());
}

std::string state_to_json(const PureBipartiteState &state) {
  json doc;
  doc["dim_u"] = state.dim_u();
  doc["dim_v"] = state.dim_v();
  json re = json::array();
  json im = json::array();
  for (const auto &z : state.coefficients().entries()) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  doc["re"] = std::move(re);
  doc["im"] = std::move(im);
  return doc.dump();
}

}  // namespace entangle::io
