// Copyright 2026 The vcsc Authors.
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

#ifndef VCSC_ERRORS_H_
#define VCSC_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vcsc {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violated by the caller (index out of range, unrealizable
// sample, dimension mismatch, budget exceeded).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed text input. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what),
        line_(line),
        detail_(what) {}
  int line() const { return line_; }
  const std::string& detail() const { return detail_; }

 private:
  int line_;
  std::string detail_;
};

// Malformed binary input. Carries the byte offset where decoding failed.
class DecodeError : public Error {
 public:
  DecodeError(std::size_t offset, const std::string& what)
      : Error("byte " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Randomized approximation did not certify within its retry budget.
class ApproximationBudgetExceeded : public Error {
 public:
  ApproximationBudgetExceeded(const std::string& what, double best_deviation)
      : Error(what), best_deviation_(best_deviation) {}
  double best_deviation() const { return best_deviation_; }

 private:
  double best_deviation_;
};

// Iterative game solver hit its iteration cap.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double last_exploitability)
      : Error(what), last_exploitability_(last_exploitability) {}
  double last_exploitability() const { return last_exploitability_; }

 private:
  double last_exploitability_;
};

// No subset budget up to the cap yields a certified weak learner.
class WeakLearningFailed : public Error {
 public:
  using Error::Error;
};

// A compressed sample is internally inconsistent (corruption).
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// Bad generator parameters or suite configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace vcsc

#endif  // VCSC_ERRORS_H_
