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
#include <random>

#include "galdual/groups.hpp"
#include "galdual/model.hpp"
#include "galdual/similarity.hpp"

namespace galdual {

// Seeded instance generators for the law checks. Results depend only on the
// seed and the arguments.

using Rng = std::mt19937_64;

Permutation random_permutation(std::size_t n, Rng& rng);
/// Between 1 and max_generators uniformly random permutations.
PermutationSet random_generator_set(std::size_t n, Rng& rng,
                                    std::size_t max_generators = 3);
/// Each tuple independently with probability `density`.
Relation random_relation(std::size_t n, unsigned arity, Rng& rng,
                         double density = 0.5);
Quantifier random_quantifier(std::size_t n, const QuantifierType& type,
                             Rng& rng, double density = 0.5,
                             const Limits& limits = {});

struct StructureShape {
  std::size_t max_relations = 2;
  unsigned max_arity = 2;
  std::size_t max_quantifiers = 1;
  QuantifierType quantifier_type{1};
};

/// Relations "R<i>" and quantifiers "Q<i>". Half of the draws build every
/// object as a union of orbits of a random group, so that structures with
/// non-trivial symmetry are common.
Structure random_structure(std::size_t n, Rng& rng,
                           const StructureShape& shape = {},
                           const Limits& limits = {});

/// A total and surjective relation: a random permutation with extra pairs
/// added at the given density.
Similarity random_similarity(std::size_t n, Rng& rng, double density = 0.25);
/// Between 1 and max_members random similarities.
SimilaritySet random_similarity_set(std::size_t n, Rng& rng,
                                    std::size_t max_members = 3);

}  // namespace galdual
