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

#include <map>
#include <optional>
#include <vector>

#include "galdual/groups.hpp"
#include "galdual/limits.hpp"
#include "galdual/model.hpp"

namespace galdual {

/// Permutations preserving every relation and quantifier of the structure,
/// by backtracking over the images of 0, 1, ...: a partial assignment is cut
/// as soon as a relation tuple whose entries are all assigned changes
/// membership. Quantifiers are checked on complete candidates.
PermutationSet aut(const Structure& structure, const Limits& limits = {});

/// gx = x for every generator g.
bool is_invariant(const PermutationSet& h, const Relation& relation);
bool is_invariant(const PermutationSet& h, const Quantifier& quantifier);
/// A generator moving x, if any.
std::optional<Permutation> violating_permutation(const PermutationSet& h,
                                                 const Relation& relation);
std::optional<Permutation> violating_permutation(const PermutationSet& h,
                                                 const Quantifier& quantifier);

/// Image table of g on the member space (sequences of relations).
std::vector<std::uint32_t> member_action(const Permutation& g,
                                         const MemberSpace& space);

/// The relations and quantifiers invariant under a group, held as orbit
/// partitions: tuple orbits per arity, member-space orbits per type. An
/// object is invariant iff it is a union of blocks.
class InvariantFamily {
 public:
  InvariantFamily(PermutationSet group, std::vector<OrbitPartition> tuples,
                  std::map<QuantifierType, OrbitPartition> members);

  const PermutationSet& group() const { return group_; }
  std::size_t domain_size() const { return group_.degree(); }
  unsigned max_arity() const {
    return static_cast<unsigned>(tuple_orbits_.size());
  }
  std::vector<QuantifierType> types() const;

  /// Tuple orbits on Ω^k, 1 <= k <= max_arity().
  const OrbitPartition& tuple_orbits(unsigned arity) const;
  const OrbitPartition& member_orbits(const QuantifierType& type) const;

  bool contains(const Relation& relation) const;
  bool contains(const Quantifier& quantifier) const;

  /// Invariant objects number 2^blocks.
  std::size_t relation_blocks(unsigned arity) const {
    return tuple_orbits(arity).block_count();
  }
  std::size_t quantifier_blocks(const QuantifierType& type) const {
    return member_orbits(type).block_count();
  }

  /// Enumeration, guarded by max_listed_objects.
  std::vector<Relation> relations(unsigned arity,
                                  const Limits& limits = {}) const;
  std::vector<Quantifier> quantifiers(const QuantifierType& type,
                                      const Limits& limits = {}) const;

 private:
  PermutationSet group_;
  std::vector<OrbitPartition> tuple_orbits_;
  std::map<QuantifierType, OrbitPartition> member_orbits_;
};

InvariantFamily inv(const PermutationSet& h, unsigned k_max,
                    const std::vector<QuantifierType>& types,
                    const Limits& limits = {});

/// The invariants of the full symmetric group, i.e. of the empty structure.
struct McGeeClass {
  /// Representative orbit members, one per block.
  std::vector<std::string> representatives;
  std::size_t blocks = 0;
};

struct McGeeCatalogue {
  std::size_t domain_size = 0;
  std::map<unsigned, McGeeClass> relations;
  std::map<QuantifierType, McGeeClass> quantifiers;
};

McGeeCatalogue mcgee_invariants(std::size_t n, unsigned k_max,
                                const std::vector<QuantifierType>& types,
                                const Limits& limits = {});

std::string tuple_to_string(const Tuple& t);
std::string member_to_string(const Member& m);

}  // namespace galdual
