// Copyright 2026 The sntest Authors
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

#ifndef SNTEST_ERRORS_HPP
#define SNTEST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sntest {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user-facing configuration: flags, config files, alpha out of range.
/// CLI exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Problems with the data being analyzed. CLI exit code 3.
class DataError : public Error {
 public:
  using Error::Error;
};

class IoError : public DataError {
 public:
  using DataError::DataError;
};

class SchemaError : public DataError {
 public:
  using DataError::DataError;
};

class EmptyDataError : public DataError {
 public:
  using DataError::DataError;
};

class SampleTooSmallError : public DataError {
 public:
  using DataError::DataError;
};

class DegenerateSampleError : public DataError {
 public:
  using DataError::DataError;
};

class UnsupportedSizeError : public DataError {
 public:
  using DataError::DataError;
};

/// Numerical preconditions violated: non-finite inputs, invalid distribution
/// parameters, malformed call arguments. CLI exit code 4.
class NumericError : public Error {
 public:
  using Error::Error;
};

class DomainError : public NumericError {
 public:
  using NumericError::NumericError;
};

class ParameterError : public NumericError {
 public:
  using NumericError::NumericError;
};

class ArgumentError : public NumericError {
 public:
  using NumericError::NumericError;
};

class InadmissibleSkewnessError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

}  // namespace sntest

#endif  // SNTEST_ERRORS_HPP
