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

#include "galdual/random.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "galdual/duality.hpp"

namespace galdual {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// Union of randomly chosen blocks of a partition of an index space.
std::vector<bool> random_union(const OrbitPartition& orbits, Rng& rng,
                               double density) {
  std::vector<bool> chosen(orbits.block_count());
  for (std::size_t b = 0; b < chosen.size(); ++b) chosen[b] = coin(rng, density);
  std::vector<bool> out(orbits.space_size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = chosen[orbits.block_of(i)];
  return out;
}

}  // namespace

Permutation random_permutation(std::size_t n, Rng& rng) {
  std::vector<Element> images(n);
  std::iota(images.begin(), images.end(), Element{0});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

PermutationSet random_generator_set(std::size_t n, Rng& rng,
                                    std::size_t max_generators) {
  const std::size_t count = uniform(rng, 1, std::max<std::size_t>(1, max_generators));
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < count; ++i) gens.push_back(random_permutation(n, rng));
  return PermutationSet(n, std::move(gens));
}

Relation random_relation(std::size_t n, unsigned arity, Rng& rng,
                         double density) {
  Relation r(n, arity);
  for (std::size_t i = 0; i < r.tuple_space(); ++i) {
    if (coin(rng, density)) r.insert_index(i);
  }
  return r;
}

Quantifier random_quantifier(std::size_t n, const QuantifierType& type,
                             Rng& rng, double density, const Limits& limits) {
  const MemberSpace space(n, type, limits);
  Quantifier q(n, type);
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    if (coin(rng, density)) q.insert(space.member(i));
  }
  return q;
}

Structure random_structure(std::size_t n, Rng& rng, const StructureShape& shape,
                           const Limits& limits) {
  Structure s(n);
  const bool symmetric = coin(rng, 0.5);
  const PermutationSet group =
      symmetric ? generate(random_generator_set(n, rng, 2), limits)
                : PermutationSet(n, {Permutation::identity(n)});
  const std::size_t relations = uniform(rng, 0, shape.max_relations);
  for (std::size_t i = 0; i < relations; ++i) {
    const unsigned arity =
        static_cast<unsigned>(uniform(rng, 1, std::max(1u, shape.max_arity)));
    const double density = 0.2 + 0.6 * std::uniform_real_distribution<>()(rng);
    Relation r(n, arity);
    if (symmetric) {
      const auto in = random_union(orbits(group, arity, limits), rng, density);
      for (std::size_t t = 0; t < in.size(); ++t) {
        if (in[t]) r.insert_index(t);
      }
    } else {
      r = random_relation(n, arity, rng, density);
    }
    s.add_relation("R" + std::to_string(i), std::move(r));
  }
  const std::size_t quantifiers = uniform(rng, 0, shape.max_quantifiers);
  for (std::size_t i = 0; i < quantifiers; ++i) {
    const MemberSpace space(n, shape.quantifier_type, limits);
    Quantifier q(n, shape.quantifier_type);
    if (symmetric) {
      const InvariantFamily family =
          inv(group, 1, {shape.quantifier_type}, limits);
      const auto in =
          random_union(family.member_orbits(shape.quantifier_type), rng, 0.5);
      for (std::uint64_t m = 0; m < space.size(); ++m) {
        if (in[m]) q.insert(space.member(m));
      }
    } else {
      q = random_quantifier(n, shape.quantifier_type, rng, 0.5, limits);
    }
    s.add_quantifier("Q" + std::to_string(i), std::move(q));
  }
  return s;
}

Similarity random_similarity(std::size_t n, Rng& rng, double density) {
  const Permutation g = random_permutation(n, rng);
  std::uint64_t mask = Similarity::from_permutation(g).mask();
  for (std::size_t bit = 0; bit < n * n; ++bit) {
    if (coin(rng, density)) mask |= std::uint64_t{1} << bit;
  }
  return Similarity(n, mask);
}

SimilaritySet random_similarity_set(std::size_t n, Rng& rng,
                                    std::size_t max_members) {
  const std::size_t count = uniform(rng, 1, std::max<std::size_t>(1, max_members));
  std::vector<Similarity> members;
  for (std::size_t i = 0; i < count; ++i) {
    const double density = coin(rng, 0.5) ? 0.0 : 0.3 * std::uniform_real_distribution<>()(rng);
    members.push_back(random_similarity(n, rng, density));
  }
  return SimilaritySet(n, std::move(members));
}

}  // namespace galdual
