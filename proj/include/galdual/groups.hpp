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

/// A set of permutations of one domain, kept sorted and unique.
///
/// Sets produced by generate() remember the generators they came from and
/// carry the is-group flag; orbit computations act through generators()
/// so a large group never has to be traversed element by element.
class PermutationSet {
 public:
  explicit PermutationSet(std::size_t n);
  PermutationSet(std::size_t n, std::vector<Permutation> elements);

  std::size_t degree() const { return n_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(const Permutation& g) const;

  bool is_group() const { return is_group_; }
  /// Exhaustive check: contains the identity, closed under composition and
  /// inverse.
  bool verify_group() const;

  /// The generating set used by orbit computations: the original generators
  /// for generated groups, otherwise the elements themselves.
  const std::vector<Permutation>& generators() const;

  bool operator==(const PermutationSet& other) const {
    return n_ == other.n_ && elements_ == other.elements_;
  }

 private:
  friend PermutationSet generate(const PermutationSet&, const Limits&);
  friend PermutationSet mark_group(PermutationSet);

  std::size_t n_;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
  bool is_group_ = false;
};

/// Flags a set already known to be a group (e.g. a filter of S_n by an
/// invariance condition) without re-checking it.
PermutationSet mark_group(PermutationSet set);

/// The subgroup generated by `gens`, by breadth-first word enumeration.
PermutationSet generate(const PermutationSet& gens, const Limits& limits = {});

/// Every permutation of the domain, in lexicographic order of images.
PermutationSet all_permutations(std::size_t n, const Limits& limits = {});

PermutationSet symmetric_generators(std::size_t n);
PermutationSet alternating_generators(std::size_t n);
PermutationSet cyclic_generators(std::size_t n);

/// Partition of an index space (tuples, subset sequences) into orbits. Block
/// ids are numbered by least member.
class OrbitPartition {
 public:
  OrbitPartition(unsigned arity, std::vector<std::uint32_t> block,
                 std::size_t block_count);

  unsigned arity() const { return arity_; }
  std::size_t space_size() const { return block_.size(); }
  std::size_t block_count() const { return block_count_; }
  std::uint32_t block_of(std::size_t index) const { return block_[index]; }
  const std::vector<std::uint32_t>& block_ids() const { return block_; }
  /// Members of every block in increasing index order.
  std::vector<std::vector<std::size_t>> orbits() const;

 private:
  unsigned arity_;
  std::vector<std::uint32_t> block_;
  std::size_t block_count_;
};

/// Orbits of an index space under the closure of the given actions; each
/// action is a permutation of 0..size-1 given as an image table.
OrbitPartition orbits_of_actions(
    std::size_t size, unsigned arity,
    const std::vector<std::vector<std::uint32_t>>& actions);

/// ⟨H⟩-orbits on Ω^k.
OrbitPartition orbits(const PermutationSet& h, unsigned arity,
                      const Limits& limits = {});

/// One relation "orb_<k>_<i>" per ⟨H⟩-orbit on Ω^k, 1 <= k <= k_max, with
/// i numbering orbits by least representative.
Structure canonical_structure(const PermutationSet& h, unsigned k_max,
                              const Limits& limits = {});

/// {g : g(a) = b}. Empty when the repeated-entry patterns differ.
PermutationSet tuple_coset(std::size_t n, const Tuple& a, const Tuple& b,
                           const Limits& limits = {});

/// Permutations agreeing with some element of ⟨H⟩ on every k-tuple.
PermutationSet k_closure(const PermutationSet& h, unsigned k,
                         const Limits& limits = {});

/// The induced permutation g* of the 2^n subsets, as an image table over
/// subset bitmasks.
std::vector<std::uint32_t> set_action(const Permutation& g,
                                      const Limits& limits = {});

/// Permutations g such that g* agrees with some h* (h in ⟨H⟩) on every
/// m-sequence of subsets.
PermutationSet set_closure(const PermutationSet& h, unsigned m,
                           const Limits& limits = {});

/// ⟨H⟩*-orbits of m-sequences of subsets, each as a type-(1,...,1)
/// quantifier named "sorb_<m>_<i>".
Structure canonical_monadic_structure(const PermutationSet& h, unsigned m,
                                      const Limits& limits = {});

/// {h : h(ord) = g(ord)} for a strict total order `ord`.
PermutationSet order_coset(const Permutation& g, const Relation& ord,
                           const Limits& limits = {});

/// Points moved by g.
std::vector<Element> support(const Permutation& g);

/// Throws kPrecondition unless `ord` is irreflexive, transitive and total.
void require_strict_total_order(const Relation& ord);

}  // namespace galdual
