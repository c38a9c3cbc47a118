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

#include <cstdint>
#include <vector>

#include "galdual/definability.hpp"
#include "galdual/groups.hpp"
#include "galdual/report.hpp"
#include "galdual/similarity.hpp"

namespace galdual {

// Law verifiers. Each computes both sides of an identity by separate code
// paths and reports the verdict with a witness or counterexample. Laws over
// similarities enumerate the 2^(n^2) similarity space and are guarded by
// Limits::max_similarity_degree.

struct LawOptions {
  std::uint64_t seed = 1;
  /// Random extra instances for laws that sample (respect).
  std::size_t samples = 8;
  Limits limits;
};

/// aut(canonical_structure(⟨H⟩, k)) equals the k-closure of H computed by
/// filtering S_n; for k = n both equal ⟨H⟩. For k < n the report records
/// whether ⟨H⟩ was recovered without asserting it.
Report check_kras_group(const PermutationSet& h, unsigned k,
                        const LawOptions& options = {});

/// The target is fixed by aut(S) iff the φ formula accepts exactly the
/// target. Otherwise a relation formula accepts the least invariant
/// superset and a quantifier formula the members whose orbit lies in Q.
Report check_kras_definability(const Structure& structure, const Target& target,
                               const LawOptions& options = {});

/// Invariants of S_n: counts are 2^(orbit blocks); the blocks match the
/// closed formulas for tuple orbits (partitions of the k positions into at
/// most n classes) and for all-unary types (multisets of size n over the
/// 2^m membership patterns); small spaces are also counted by brute force.
Report check_mcgee(std::size_t n, unsigned k_max,
                   const std::vector<QuantifierType>& types,
                   const LawOptions& options = {});

/// For a similarity set: Sim(Inv(P)) by quotient and lift equals the
/// full-monoid fixpoint, the closure is extensive and idempotent, ≈_P is the
/// indistinguishability relation of Inv(P), and Sim(Inv(P)) is a full monoid.
Report check_cor(const SimilaritySet& set, const LawOptions& options = {});
/// For a structure: each quantifier's restriction to saturated arguments has
/// an equality-free definition; ~ equals ≈ of sim(S); sim(S) is a full
/// monoid fixed by Sim∘Inv.
Report check_cor(const Structure& structure, const LawOptions& options = {});

/// Definable (equality-free, with parameters) relations of arity 1 and 2 are
/// exactly the ~-saturated ones; restriction of a quantifier equals the lift
/// of its quotient, for the structure's quantifiers and random ones.
Report check_respect(const Structure& structure, const LawOptions& options = {});

/// ~ of the structure equals ≈ of its brute-force similarity set, and ≈ of
/// that set equals ~ of its invariants.
Report check_allisgood(const Structure& structure,
                       const LawOptions& options = {});
/// ≈_P equals ~ of Inv(P).
Report check_allisgood(const SimilaritySet& set, const LawOptions& options = {});

/// Block permutations induced by the brute-force similarity set are exactly
/// the automorphisms of the quotient; sim(S) agrees with the brute-force set
/// and passes the four full-monoid flag checks.
Report check_propaut(const Structure& structure, const LawOptions& options = {});

/// Every similarity of the structure induces a block permutation, and maps
/// each saturated relation of arity 1 or 2 onto a relation it lifts to.
Report check_bijective(const Structure& structure,
                       const LawOptions& options = {});

}  // namespace galdual
