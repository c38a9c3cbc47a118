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

#include <cstddef>
#include <cstdint>

namespace galdual {

/// Enumeration guards. Every exhaustive search in the library checks the
/// relevant bound before allocating and fails with a resource-limit error
/// naming the bound it exceeded.
struct Limits {
  /// Upper bound on the size of any enumerated index space: n^k tuples for
  /// relation spaces, 2^(bits) for member spaces and subset sequences.
  std::uint64_t max_tuples = std::uint64_t{1} << 20;
  /// Largest degree for which full permutation groups (n!) are enumerated.
  std::size_t max_group_degree = 8;
  /// Largest degree for which the 2^(n^2) similarity space is enumerated.
  std::size_t max_similarity_degree = 3;
  /// Number of orbit blocks above which invariant objects are not listed.
  std::size_t max_listed_objects = 4096;
};

void require_index_space(std::uint64_t size, const Limits& limits,
                         const char* what);

/// n^k, or UINT64_MAX on overflow.
std::uint64_t checked_power(std::uint64_t base, std::uint64_t exponent);

}  // namespace galdual
