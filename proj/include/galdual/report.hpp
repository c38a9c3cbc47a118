// Copyright 2026 The galdual Authors
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

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "galdual/io.hpp"

namespace galdual {

/// Outcome of a law check or a computation with its sanity law.
struct Report {
  std::string law;
  /// One-line statement of what was asserted.
  std::string statement;
  std::string instance_digest;
  bool passed = false;
  std::optional<Json> witness;
  std::optional<Json> counterexample;
  double timing_ms = 0;
  Json details = Json::object();
};

/// 64-bit FNV-1a, as 16 hex digits.
std::string digest(std::string_view canonical);

Json report_to_json(const Report& report);
std::string report_to_text(const Report& report);

/// Folds per-instance reports into one: passes iff all do; the digest covers
/// every instance; the first failure supplies the counterexample.
Report combine_reports(std::string law, std::string statement,
                       const std::vector<Report>& parts);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace galdual
