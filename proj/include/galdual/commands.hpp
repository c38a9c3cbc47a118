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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "galdual/io.hpp"
#include "galdual/laws.hpp"
#include "galdual/report.hpp"

namespace galdual {

// Computations packaged as reports. Each also asserts a cheap sanity law on
// its own output (e.g. every automorphism found preserves the structure), so
// the verdict is meaningful for plain computations too.

Report run_aut(const Structure& structure, const Limits& limits = {});
/// Invariants of the group generated by the permutations, or, when the
/// document holds similarities, of the similarity set (permutations are
/// added to it as similarities).
Report run_inv(const TransformDocument& transforms, unsigned arity,
               const std::vector<QuantifierType>& types,
               const Limits& limits = {});
/// mode: "group", "k=<K>", "sets=<M>" or "full-monoid".
Report run_closure(const TransformDocument& transforms, std::string_view mode,
                   const Limits& limits = {});
Report run_define(const Structure& structure, const Target& target,
                  bool with_equality, const Limits& limits = {});
Report run_sim(const Structure& structure, const Limits& limits = {});
Report run_quotient(const Structure& structure, const Limits& limits = {});

/// Inputs for a law check. Absent inputs are replaced by `samples` seeded
/// random instances on `n` elements.
struct CheckInput {
  std::optional<Structure> structure;
  std::optional<Target> target;
  std::optional<TransformDocument> transforms;
  std::size_t n = 3;
  /// 0 selects the law's default (n for kras-group, 2 for mcgee).
  unsigned arity = 0;
  std::vector<QuantifierType> types;
};

/// law: kras-group, kras-def, mcgee, cor, respect, allisgood, propaut or
/// bijective. Throws kInvalidArgument for other names.
Report run_check(std::string_view law, const CheckInput& input,
                 const LawOptions& options = {});

const std::vector<std::string>& law_names();

/// "1" is type (1); "2,1" is (2,1); several types are separated by ';'.
std::vector<QuantifierType> parse_quantifier_types(std::string_view text);

}  // namespace galdual
