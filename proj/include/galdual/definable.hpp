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
#include <vector>

#include "galdual/limits.hpp"
#include "galdual/model.hpp"

namespace galdual {

/// A Boolean algebra of k-ary relations, given by its atoms: a partition of
/// Ω^k. Atom ids are numbered by least tuple index.
class AtomPartition {
 public:
  AtomPartition(std::size_t n, unsigned arity, std::vector<std::uint32_t> atom);

  unsigned arity() const { return arity_; }
  std::size_t atom_count() const { return count_; }
  std::uint32_t atom_of(std::size_t index) const { return atom_[index]; }
  const std::vector<std::uint32_t>& atom_ids() const { return atom_; }

  /// True when the relation is a union of atoms.
  bool contains(const Relation& relation) const;
  /// The relation made of the atoms whose bit is set in `mask`.
  Relation union_of(std::uint64_t mask) const;

 private:
  std::size_t n_;
  unsigned arity_;
  std::vector<std::uint32_t> atom_;
  std::size_t count_ = 0;
};

/// Relations of arity <= A definable without equality from a structure's
/// relations and quantifiers, optionally with parameters.
class DefinableClosure {
 public:
  DefinableClosure(std::size_t n, unsigned arity_bound, bool with_params,
                   std::vector<AtomPartition> atoms, std::size_t rounds);

  std::size_t domain_size() const { return n_; }
  unsigned arity_bound() const { return arity_bound_; }
  bool with_params() const { return with_params_; }
  std::size_t rounds() const { return rounds_; }

  const AtomPartition& atoms(unsigned arity) const;
  /// Throws kInvalidArgument when the arity exceeds the bound.
  bool contains(const Relation& relation) const;
  /// All definable relations of one arity, in order of atom bitmask. Throws
  /// kResourceLimit past max_listed_objects.
  std::vector<Relation> relations(unsigned arity,
                                  const Limits& limits = {}) const;

  /// a ~ b iff every definable binary relation has equal rows at a and b.
  EquivalencePartition binary_equivalence() const;
  /// The same test over every arity up to the bound, first coordinate.
  EquivalencePartition full_equivalence() const;

 private:
  std::size_t n_;
  unsigned arity_bound_;
  bool with_params_;
  std::vector<AtomPartition> atoms_;
  std::size_t rounds_;
};

/// Least family containing the structure's relations and closed under
/// Boolean operations, permutation, identification and addition of
/// coordinates, existential projection, quantifier application, and (with
/// params) pinning a coordinate to a domain element. Equality is not
/// available. Throws kPrecondition when a relation's arity exceeds the
/// bound.
DefinableClosure definable_closure_eqfree(const Structure& structure,
                                          unsigned arity_bound,
                                          bool with_params,
                                          const Limits& limits = {});

/// max(3, largest relation arity, largest quantifier slot arity).
unsigned default_arity_bound(const Structure& structure);

struct SimEquivResult {
  EquivalencePartition equivalence;
  /// Smallest bound tried at which the equivalence stopped changing.
  unsigned arity_bound;
  /// False when the guard stopped escalation before stability was seen.
  bool confirmed;
};

/// The indistinguishability equivalence of the structure, computed from
/// binary definables with parameters; the arity bound is raised from
/// `start_bound` (0 = default) until the result is stable.
SimEquivResult sim_equiv_detailed(const Structure& structure,
                                  const Limits& limits = {},
                                  unsigned start_bound = 0);
EquivalencePartition sim_equiv(const Structure& structure,
                               const Limits& limits = {});

}  // namespace galdual
