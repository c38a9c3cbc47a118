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
#include <variant>

#include "galdual/describe.hpp"
#include "galdual/limits.hpp"
#include "galdual/model.hpp"
#include "galdual/similarity.hpp"

namespace galdual {

/// The object whose definability is asked about.
using Target = std::variant<Relation, Quantifier>;

struct DefinabilityVerdict {
  bool definable = false;
  /// Defining formula, present when definable.
  std::optional<PhiFormula> witness;
  /// The structure the witness is read in. For the equality-free case this
  /// is the input expanded by the indistinguishability relation under the
  /// name `equivalence_symbol`, which stands in for equality.
  std::optional<Structure> witness_structure;
  std::string equivalence_symbol;
  /// Counterexample for the case with equality.
  std::optional<Permutation> automorphism;
  /// Counterexample for the equality-free case.
  std::optional<Similarity> similarity;
  std::string reason;
};

/// With equality, the target is definable iff every automorphism of the
/// structure fixes it. Without equality, a relation is definable iff it is
/// saturated under the indistinguishability equivalence ~ and its quotient
/// is fixed by the automorphisms of the quotient structure; for a quantifier
/// only the quotient condition applies and the witness defines Q restricted
/// to saturated arguments. Equality-free witnesses are built on the quotient
/// and translated by replacing = with ~.
DefinabilityVerdict is_definable(const Structure& structure,
                                 const Target& target, bool with_equality,
                                 const Limits& limits = {});

std::size_t domain_of(const Target& target);

}  // namespace galdual
