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

#include "galdual/report.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>

namespace galdual {

std::string digest(std::string_view canonical) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016" PRIx64, h);
  return buffer;
}

Json report_to_json(const Report& report) {
  Json out;
  out["law"] = report.law;
  out["statement"] = report.statement;
  out["instance_digest"] = report.instance_digest;
  out["verdict"] = report.passed ? "pass" : "fail";
  if (report.witness) out["witness"] = *report.witness;
  if (report.counterexample) out["counterexample"] = *report.counterexample;
  out["timing_ms"] = report.timing_ms;
  out["details"] = report.details;
  return out;
}

std::string report_to_text(const Report& report) {
  std::string out;
  out += "law:       " + report.law + "\n";
  out += "statement: " + report.statement + "\n";
  out += "instance:  " + report.instance_digest + "\n";
  out += std::string("verdict:   ") + (report.passed ? "PASS" : "FAIL") + "\n";
  for (const auto& [key, value] : report.details.items()) {
    out += "  " + key + ": " +
           (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
  }
  if (report.witness) {
    out += "witness: " +
           (report.witness->is_string() ? report.witness->get<std::string>()
                                        : report.witness->dump()) +
           "\n";
  }
  if (report.counterexample) {
    out += "counterexample: " + report.counterexample->dump() + "\n";
  }
  char timing[64];
  std::snprintf(timing, sizeof timing, "time: %.1f ms\n", report.timing_ms);
  return out + timing;
}

Report combine_reports(std::string law, std::string statement,
                       const std::vector<Report>& parts) {
  Report out;
  out.law = std::move(law);
  out.statement = std::move(statement);
  out.passed = true;
  std::string digests;
  Json instances = Json::array();
  for (const Report& part : parts) {
    digests += part.instance_digest;
    out.timing_ms += part.timing_ms;
    Json item;
    item["instance_digest"] = part.instance_digest;
    item["verdict"] = part.passed ? "pass" : "fail";
    item["details"] = part.details;
    instances.push_back(std::move(item));
    if (!part.passed && out.passed) {
      out.passed = false;
      Json failure;
      failure["instance_digest"] = part.instance_digest;
      if (part.counterexample) failure["counterexample"] = *part.counterexample;
      failure["details"] = part.details;
      out.counterexample = std::move(failure);
    }
  }
  out.instance_digest = digest(digests);
  out.details["instances"] = parts.size();
  out.details["failed"] = static_cast<std::size_t>(
      std::count_if(parts.begin(), parts.end(),
                    [](const Report& r) { return !r.passed; }));
  out.details["runs"] = std::move(instances);
  return out;
}

}  // namespace galdual
