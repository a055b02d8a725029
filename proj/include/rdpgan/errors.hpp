//
// Copyright 2026 The rdpgan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
#pragma once

#include <stdexcept>
#include <string>

namespace rdpgan {

// Invalid argument passed to a library operation.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A theorem-style validity condition failed. Carries both sides of the
// inequality `lhs >= rhs` that was required, so callers can decide on a
// fallback.
class ConditionViolation : public std::domain_error {
 public:
  ConditionViolation(const std::string& what, double lhs, double rhs)
      : std::domain_error(what), lhs_(lhs), rhs_(rhs) {}

  double lhs() const { return lhs_; }
  double rhs() const { return rhs_; }

 private:
  double lhs_;
  double rhs_;
};

// Noise calibration cannot meet the requested budget. Carries the largest
// epsilon_total for which calibration would succeed with the other
// parameters unchanged.
class CalibrationError : public std::runtime_error {
 public:
  CalibrationError(const std::string& what, double tightest_feasible_total)
      : std::runtime_error(what), tightest_(tightest_feasible_total) {}

  double tightest_feasible_epsilon_total() const { return tightest_; }

 private:
  double tightest_;
};

// A log-domain reduction still produced a non-finite value.
class OverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Training produced a non-finite loss. Carries the generator iteration at
// which the blow-up was detected.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& what, long iteration)
      : std::runtime_error(what), iteration_(iteration) {}

  long iteration() const { return iteration_; }

 private:
  long iteration_;
};

// Every candidate in a parameter-selection run diverged.
class SelectionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed experiment configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rdpgan
