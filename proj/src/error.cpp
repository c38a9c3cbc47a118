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

#include "galdual/error.hpp"

#include <limits>
#include <string>

#include "galdual/limits.hpp"

namespace galdual {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDomainMismatch: return "domain-mismatch";
    case ErrorKind::kResourceLimit: return "resource-limit";
    case ErrorKind::kPrecondition: return "precondition";
    case ErrorKind::kUnresolvedName: return "unresolved-name";
    case ErrorKind::kArityMismatch: return "arity-mismatch";
    case ErrorKind::kUnboundVariable: return "unbound-variable";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kValidation: return "validation";
    case ErrorKind::kInvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base)
      return std::numeric_limits<std::uint64_t>::max();
    result *= base;
  }
  return result;
}

void require_index_space(std::uint64_t size, const Limits& limits,
                         const char* what) {
  if (size > limits.max_tuples) {
    fail(ErrorKind::kResourceLimit,
         std::string(what) + ": index space of " +
             (size == std::numeric_limits<std::uint64_t>::max()
                  ? std::string("overflowing size")
                  : std::to_string(size)) +
             " exceeds the enumeration guard max_tuples=" +
             std::to_string(limits.max_tuples));
  }
}

}  // namespace galdual
