// Copyright 2026 The qfreeze Authors
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

namespace qfreeze {

// Invalid input to an operation (bad index, out-of-range parameter,
// dimension mismatch).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A matrix or correlation triple that does not describe a physical state.
class NonphysicalStateError : public std::domain_error {
 public:
  NonphysicalStateError(const std::string& what, double eigenvalue)
      : std::domain_error(what), eigenvalue_(eigenvalue) {}
  double eigenvalue() const noexcept { return eigenvalue_; }

 private:
  double eigenvalue_;
};

// S(rho||tau) is +infinity because supp(rho) is not inside supp(tau).
class InfiniteDivergence : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A quantity that must be real (or otherwise self-consistent) was not.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Triple too close to the physicality boundary to carry a perturbation.
class NoMarginError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace qfreeze
