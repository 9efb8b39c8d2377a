// Copyright 2026 The QPR Authors
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

#include <cstddef>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace qpr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numeric argument is outside its admissible range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// An operation was invoked in a combination it does not support
/// (e.g. ranking with the pure-dephasing scheme).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Malformed edge-list input. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A density state drifted outside the physical set by more than the
/// repair tolerance. `drift()` is the offending magnitude.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, double drift)
      : Error(what + " (drift " + format(drift) + ")"), drift_(drift) {}
  double drift() const noexcept { return drift_; }

 private:
  static std::string format(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
  }
  double drift_;
};

/// The evolution horizon was too short for the requested measurement.
class StationarityError : public Error {
 public:
  using Error::Error;
};

}  // namespace qpr
