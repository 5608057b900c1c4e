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

#ifndef SNTEST_SAMPLE_HPP
#define SNTEST_SAMPLE_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace sntest {

/// An ordered collection of finite observations plus where they came from.
struct Sample {
  std::vector<double> values;
  std::string source;                  ///< provenance, e.g. "marks.csv:Total"
  std::vector<std::string> warnings;   ///< diagnostics attached during ingest

  Sample() = default;
  explicit Sample(std::vector<double> v, std::string src = {})
      : values(std::move(v)), source(std::move(src)) {}

  std::size_t size() const { return values.size(); }
  bool empty() const { return values.empty(); }
};

}  // namespace sntest

#endif  // SNTEST_SAMPLE_HPP
