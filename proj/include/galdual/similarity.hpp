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

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "galdual/definable.hpp"
#include "galdual/duality.hpp"
#include "galdual/groups.hpp"
#include "galdual/limits.hpp"
#include "galdual/model.hpp"

namespace galdual {

/// A total and surjective binary relation on the domain, stored as an n×n
/// bit matrix (bit a*n + b set iff a is related to b). Domains up to 8
/// elements.
class Similarity {
 public:
  /// Throws kInvalidArgument unless the mask is total and surjective.
  Similarity(std::size_t n, std::uint64_t mask);

  static Similarity identity(std::size_t n);
  static Similarity full(std::size_t n);
  static Similarity from_permutation(const Permutation& g);
  static Similarity from_pairs(
      std::size_t n, const std::vector<std::pair<Element, Element>>& pairs);

  std::size_t domain_size() const { return n_; }
  std::uint64_t mask() const { return mask_; }
  bool related(Element a, Element b) const {
    return (mask_ >> (a * n_ + b)) & 1u;
  }
  std::size_t size() const;
  std::vector<std::pair<Element, Element>> pairs() const;
  Relation as_relation() const;
  /// Row of a: bit b set iff a is related to b.
  std::uint32_t row(Element a) const;

  bool is_permutation() const;
  std::optional<Permutation> as_permutation() const;
  bool subset_of(const Similarity& other) const {
    return (mask_ & ~other.mask_) == 0;
  }

  auto operator<=>(const Similarity&) const = default;
  bool operator==(const Similarity&) const = default;

 private:
  std::size_t n_;
  std::uint64_t mask_;
};

bool is_similarity_mask(std::size_t n, std::uint64_t mask);
bool is_similarity(const Relation& relation);

/// Relational composition, p first: a (p;q) c iff a p b and b q c for some b.
Similarity compose(const Similarity& p, const Similarity& q);
Similarity converse(const Similarity& p);

/// π(R) = { b̄ : ā π b̄ componentwise for some ā ∈ R }.
Relation similarity_image(const Similarity& p, const Relation& relation);
/// For all ā π b̄ componentwise: ā ∈ R iff b̄ ∈ S.
bool lift_holds(const Similarity& p, const Relation& r, const Relation& s);
/// Every similarity contained in p, in increasing mask order.
std::vector<Similarity> subsimilarities(const Similarity& p);

/// Closure properties of a similarity set.
struct MonoidFlags {
  bool composition = false;
  bool converse = false;
  bool contains_approx = false;
  bool subsimilarities = false;

  bool monoid_with_involution() const { return composition && converse; }
  bool full() const {
    return composition && converse && contains_approx && subsimilarities;
  }
};

/// A set of similarities on one domain, kept sorted and unique.
class SimilaritySet {
 public:
  explicit SimilaritySet(std::size_t n);
  SimilaritySet(std::size_t n, std::vector<Similarity> members);

  std::size_t domain_size() const { return n_; }
  const std::vector<Similarity>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const Similarity& p) const;

  /// Exhaustively verified closure properties.
  MonoidFlags flags() const;

  bool operator==(const SimilaritySet&) const = default;

 private:
  std::size_t n_;
  std::vector<Similarity> members_;
};

/// Members not strictly contained in another member.
SimilaritySet maxima(const SimilaritySet& set);
/// Closure under composition and converse, with the identity added.
SimilaritySet monoid_closure(const SimilaritySet& set);
/// All subsimilarities of members.
SimilaritySet downward_closure(const SimilaritySet& set,
                               const Limits& limits = {});
/// All similarities on n elements. Guarded by max_similarity_degree.
SimilaritySet all_similarities(std::size_t n, const Limits& limits = {});

/// a ≈ b iff some member of the monoid-with-involution closure of the set
/// contains the diagonal together with (a, b). The input is closed first.
EquivalencePartition approx_equiv(const SimilaritySet& set);

/// Least full monoid containing the set: closure under composition,
/// converse and subsimilarities, with ≈ added, repeated until stable.
SimilaritySet full_monoid_closure(const SimilaritySet& set,
                                  const Limits& limits = {});

// Quotient and lift maps for an equivalence E with blocks numbered as in
// the partition.
Relation quotient_relation(const Relation& relation,
                           const EquivalencePartition& e);
Relation lift_relation(const Relation& relation, const EquivalencePartition& e);
/// Sequences of block relations whose lifts form a member.
Quantifier quotient_quantifier(const Quantifier& quantifier,
                               const EquivalencePartition& e);
Quantifier lift_quantifier(const Quantifier& quantifier,
                           const EquivalencePartition& e);
Structure quotient_structure(const Structure& structure,
                             const EquivalencePartition& e);
Structure lift_structure(const Structure& structure,
                         const EquivalencePartition& e);
/// The block permutation induced by p. Throws kPrecondition naming the
/// offending block when p relates a block to several blocks or two blocks
/// to one.
Permutation quotient_similarity(const Similarity& p,
                                const EquivalencePartition& e);
/// π_f = { (a, b) : f([a]) = [b] }.
Similarity lift_permutation(const Permutation& f, const EquivalencePartition& e);

/// Relation invariance under a similarity (lift with S = R).
bool sim_invariant(const Similarity& p, const Relation& relation);
/// Q is e-invariant under p: for e-saturated argument sequences R̄ p S̄,
/// R̄ ∈ Q iff S̄ ∈ Q.
bool sim_invariant(const Similarity& p, const Quantifier& quantifier,
                   const EquivalencePartition& e, const Limits& limits = {});

/// The same condition over every argument sequence, saturated or not. No
/// correspondence is claimed for this variant; it is exposed for
/// experiments only.
bool sim_invariant_unrestricted(const Similarity& p, const Quantifier& quantifier,
                                const Limits& limits = {});

struct SimResult {
  EquivalencePartition equivalence;
  unsigned arity_bound;
  Structure quotient;
  PermutationSet quotient_aut;
  SimilaritySet members;
};

/// Similarities under which every relation is invariant and every
/// quantifier is ~-invariant, obtained as the subsimilarities of the lifts
/// π_f of the quotient's automorphisms.
SimResult sim_detailed(const Structure& structure, const Limits& limits = {});
SimilaritySet sim(const Structure& structure, const Limits& limits = {});
/// The same set by filtering every similarity directly.
SimilaritySet sim_bruteforce(const Structure& structure,
                             const EquivalencePartition& e,
                             const Limits& limits = {});

/// Objects ≈-invariant under every member of a similarity set, decided on
/// the quotient by ≈ through the induced block permutations.
class SimInvariantFamily {
 public:
  SimInvariantFamily(EquivalencePartition approx, InvariantFamily quotient);

  const EquivalencePartition& approx() const { return approx_; }
  const InvariantFamily& quotient() const { return quotient_; }

  bool contains(const Relation& relation) const;
  bool contains(const Quantifier& quantifier) const;

 private:
  EquivalencePartition approx_;
  InvariantFamily quotient_;
};

/// The group generated by the block permutations π/≈ of the set's
/// monoid-with-involution closure.
PermutationSet quotient_group(const SimilaritySet& set,
                              const EquivalencePartition& approx,
                              const Limits& limits = {});
SimInvariantFamily inv_sim(const SimilaritySet& set, unsigned k_max,
                           const std::vector<QuantifierType>& types,
                           const Limits& limits = {});
/// The relational part of Inv(set): the canonical structure of the quotient
/// group (all arities up to the block count) lifted back to the domain.
Structure inv_sim_structure(const SimilaritySet& set, const Limits& limits = {});
/// Sim(Inv(set)) computed through inv_sim_structure.
SimilaritySet sim_of_inv(const SimilaritySet& set, const Limits& limits = {});

/// Members of Q all of whose slots are definable with parameters without
/// equality.
Quantifier restrict_quantifier(const Structure& structure,
                               const Quantifier& quantifier,
                               const Limits& limits = {});

}  // namespace galdual
