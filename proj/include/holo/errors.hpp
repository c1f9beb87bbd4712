// Copyright 2026 The holo Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace holo {

// Bad input: a precondition of some operation does not hold.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The numerics broke down, e.g. the Wilson line stepped across a subspace
// discontinuity. `where()` is the loop parameter s at which it happened.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double where)
      : std::runtime_error(what), where_(where) {}
  double where() const noexcept { return where_; }

 private:
  double where_;
};

}  // namespace holo
