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

#include "galdual/definability.hpp"

#include <algorithm>
#include <string>

#include "galdual/duality.hpp"
#include "galdual/error.hpp"
#include "galdual/formula.hpp"

namespace galdual {

namespace {

constexpr std::size_t kMaxSimilarityDomain = 8;

std::optional<Permutation> violation(const PermutationSet& group,
                                     const Target& target) {
  return std::visit(
      [&](const auto& object) { return violating_permutation(group, object); },
      target);
}

PhiFormula build_phi(const Structure& structure, const Target& target,
                     const Limits& limits) {
  if (const auto* r = std::get_if<Relation>(&target)) {
    return build_phi_relation(structure, *r, limits);
  }
  return build_phi_quantifier(structure, std::get<Quantifier>(target), limits);
}

Target quotient_target(const Target& target, const EquivalencePartition& e) {
  if (const auto* r = std::get_if<Relation>(&target)) {
    return quotient_relation(*r, e);
  }
  return quotient_quantifier(std::get<Quantifier>(target), e);
}

// A tuple of R and a ~-equivalent tuple outside R.
std::string unsaturated_reason(const Relation& relation,
                               const EquivalencePartition& e) {
  const std::size_t n = relation.domain_size();
  for (const Tuple& a : relation.tuples()) {
    for (std::size_t i = 0; i < relation.tuple_space(); ++i) {
      if (relation.contains_index(i)) continue;
      const Tuple b = decode_tuple(n, relation.arity(), i);
      bool related = true;
      for (std::size_t l = 0; l < a.size() && related; ++l) {
        related = e.same(a[l], b[l]);
      }
      if (related) {
        return "not saturated: " + tuple_to_string(a) + " is in the target, " +
               tuple_to_string(b) + " is indistinguishable from it but not";
      }
    }
  }
  return "not saturated";
}

}  // namespace

std::size_t domain_of(const Target& target) {
  return std::visit([](const auto& object) { return object.domain_size(); },
                    target);
}

DefinabilityVerdict is_definable(const Structure& structure,
                                 const Target& target, bool with_equality,
                                 const Limits& limits) {
  if (domain_of(target) != structure.domain_size()) {
    fail(ErrorKind::kDomainMismatch, "target and structure domains differ");
  }
  DefinabilityVerdict verdict;
  if (with_equality) {
    const PermutationSet group = aut(structure, limits);
    if (auto g = violation(group, target)) {
      verdict.automorphism = *g;
      verdict.reason = "moved by the automorphism " + g->to_cycle_string();
      return verdict;
    }
    verdict.definable = true;
    verdict.witness = build_phi(structure, target, limits);
    verdict.witness_structure = structure;
    verdict.reason = "fixed by all " + std::to_string(group.size()) +
                     " automorphisms";
    return verdict;
  }

  const std::size_t n = structure.domain_size();
  const EquivalencePartition e = sim_equiv(structure, limits);
  const bool can_name_similarity = n <= kMaxSimilarityDomain;
  if (const auto* r = std::get_if<Relation>(&target);
      r && !saturated(*r, e)) {
    verdict.reason = unsaturated_reason(*r, e);
    if (can_name_similarity) {
      verdict.similarity =
          lift_permutation(Permutation::identity(e.block_count()), e);
    }
    return verdict;
  }
  const Structure quotient = quotient_structure(structure, e);
  const PermutationSet quotient_aut = aut(quotient, limits);
  const Target reduced = quotient_target(target, e);
  if (auto f = violation(quotient_aut, reduced)) {
    verdict.reason = "quotient moved by the block permutation " +
                     f->to_cycle_string();
    if (can_name_similarity) verdict.similarity = lift_permutation(*f, e);
    return verdict;
  }

  PhiFormula phi = build_phi(quotient, reduced, limits);
  std::string symbol = structure.fresh_name("sim");
  for (std::size_t i = 0; std::find(phi.symbols.begin(), phi.symbols.end(),
                                    symbol) != phi.symbols.end();
       ++i) {
    symbol = structure.fresh_name("sim" + std::to_string(i));
  }
  phi.formula = translate_eq_to_sim(phi.formula, symbol);
  Structure expanded = structure;
  expanded.add_relation(symbol, e.as_relation());
  verdict.definable = true;
  verdict.witness = std::move(phi);
  verdict.witness_structure = std::move(expanded);
  verdict.equivalence_symbol = symbol;
  verdict.reason = "saturated quotient fixed by all " +
                   std::to_string(quotient_aut.size()) +
                   " automorphisms of the quotient";
  return verdict;
}

}  // namespace galdual
