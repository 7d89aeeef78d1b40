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

#ifndef ENTANGLE_ERROR_HPP
#define ENTANGLE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace entangle {

/// Bad input: shape mismatch, broken invariant, malformed file.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string &what) : std::runtime_error(what) {}
};

/// A computation that could not reach its stated accuracy.
class NumericalFailure : public std::runtime_error {
 public:
  explicit NumericalFailure(const std::string &what) : std::runtime_error(what) {}
};

}  // namespace entangle

#endif  // ENTANGLE_ERROR_HPP
