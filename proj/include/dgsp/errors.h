// Copyright 2026 The DGSP Authors.
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

#ifndef DGSP_ERRORS_H_
#define DGSP_ERRORS_H_

#include <stdexcept>
#include <string>

namespace dgsp {

// Base class for all library errors. The CLI maps each subclass onto a
// process exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad parameters supplied by the caller (sizes, counts, options).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// Input data that violates a structural invariant (bad indices, self-loops,
// duplicate edges, non-finite weights).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Malformed text input. Carries the 1-based line number of the offending row.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Operand shapes that do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An input is outside the domain an operation requires (e.g. a matrix that
// should be unitary is not, within tolerance).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A modelling assumption does not hold, e.g. a derogatory or singular shift
// operator handed to the perturbation analysis.
class AssumptionError : public Error {
 public:
  using Error::Error;
};

// Decomposition failure or non-finite intermediate values.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// A scalar spectral filter could not be evaluated on some kernel entry.
class FilterEvaluationError : public Error {
 public:
  FilterEvaluationError(const std::string& what, int row, int col)
      : Error(what + " at entry (" + std::to_string(row) + "," +
              std::to_string(col) + ")"),
        row_(row),
        col_(col) {}
  int row() const { return row_; }
  int col() const { return col_; }

 private:
  int row_;
  int col_;
};

}  // namespace dgsp

#endif  // DGSP_ERRORS_H_
