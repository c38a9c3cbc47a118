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
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "galdual/limits.hpp"

namespace galdual {

using Element = std::uint32_t;
using Tuple = std::vector<Element>;
using Bits = boost::dynamic_bitset<std::uint64_t>;

/// A finite domain {0, ..., n-1}.
class Domain {
 public:
  explicit Domain(std::size_t size);

  std::size_t size() const { return size_; }
  bool operator==(const Domain&) const = default;

 private:
  std::size_t size_;
};

// Tuples over an n-element domain are numbered in base n with the first
// coordinate most significant, so index order is lexicographic order.
std::size_t tuple_count(std::size_t n, unsigned arity);
std::size_t encode_tuple(std::size_t n, std::span<const Element> tuple);
Tuple decode_tuple(std::size_t n, unsigned arity, std::size_t index);

class Permutation {
 public:
  /// Throws kInvalidArgument unless `images` is a bijection of 0..n-1.
  explicit Permutation(std::vector<Element> images);

  static Permutation identity(std::size_t n);
  /// Builds a permutation of degree n from disjoint cycles, e.g. {{0, 1, 2}}.
  static Permutation from_cycles(
      std::size_t n, const std::vector<std::vector<Element>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Element operator()(Element a) const { return images_[a]; }
  const std::vector<Element>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  /// Cycle notation with fixed points omitted, "()" for the identity.
  std::string to_cycle_string() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<Element> images_;
};

/// (g ∘ h)(x) = g(h(x)).
Permutation compose(const Permutation& g, const Permutation& h);

/// A k-ary relation on an n-element domain as a characteristic bitset over
/// the n^k tuple indices.
class Relation {
 public:
  Relation(std::size_t n, unsigned arity);

  static Relation full(std::size_t n, unsigned arity);
  static Relation from_tuples(std::size_t n, unsigned arity,
                              const std::vector<Tuple>& tuples);
  static Relation from_bits(std::size_t n, unsigned arity, Bits bits);
  /// Unary relation from a subset bitmask (bit a set iff a is a member).
  static Relation from_subset_mask(std::size_t n, std::uint64_t mask);

  std::size_t domain_size() const { return n_; }
  unsigned arity() const { return arity_; }
  std::size_t tuple_space() const { return bits_.size(); }

  bool contains(std::span<const Element> tuple) const;
  bool contains_index(std::size_t index) const { return bits_.test(index); }
  void insert(std::span<const Element> tuple);
  void insert_index(std::size_t index) { bits_.set(index); }

  std::size_t cardinality() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool is_full() const { return bits_.all(); }

  /// Member tuples in lexicographic order.
  std::vector<Tuple> tuples() const;
  std::vector<std::size_t> indices() const;
  const Bits& bits() const { return bits_; }

  Relation complement() const;

  bool operator==(const Relation& other) const;
  bool operator<(const Relation& other) const;

 private:
  std::size_t n_;
  unsigned arity_;
  Bits bits_;
};

/// Slot arities (i_1, ..., i_k) of a second-order relation.
class QuantifierType {
 public:
  QuantifierType(std::initializer_list<unsigned> slots);
  explicit QuantifierType(std::vector<unsigned> slots);

  const std::vector<unsigned>& slots() const { return slots_; }
  std::size_t size() const { return slots_.size(); }
  unsigned operator[](std::size_t j) const { return slots_[j]; }
  std::string to_string() const;

  auto operator<=>(const QuantifierType&) const = default;
  bool operator==(const QuantifierType&) const = default;

 private:
  std::vector<unsigned> slots_;
};

using Member = std::vector<Relation>;

/// A set of k-sequences of relations matching a QuantifierType. Members are
/// kept sorted and unique so equality is structural.
class Quantifier {
 public:
  Quantifier(std::size_t n, QuantifierType type);
  Quantifier(std::size_t n, QuantifierType type, std::vector<Member> members);

  std::size_t domain_size() const { return n_; }
  const QuantifierType& type() const { return type_; }
  const std::vector<Member>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  bool contains(const Member& member) const;
  void insert(Member member);

  bool operator==(const Quantifier& other) const;

 private:
  void check_member(const Member& member) const;

  std::size_t n_;
  QuantifierType type_;
  std::vector<Member> members_;
};

/// A first- or second-order structure: named relations and quantifiers over
/// one domain. Names are unique across both maps.
class Structure {
 public:
  explicit Structure(std::size_t n);

  std::size_t domain_size() const { return n_; }

  void add_relation(std::string name, Relation relation);
  void add_quantifier(std::string name, Quantifier quantifier);

  const std::map<std::string, Relation, std::less<>>& relations() const {
    return relations_;
  }
  const std::map<std::string, Quantifier, std::less<>>& quantifiers() const {
    return quantifiers_;
  }

  const Relation* find_relation(std::string_view name) const;
  const Quantifier* find_quantifier(std::string_view name) const;
  bool has_name(std::string_view name) const;
  /// `base` if unused, otherwise base followed by the first free "_<i>".
  std::string fresh_name(std::string_view base) const;

  unsigned max_relation_arity() const;
  unsigned max_slot_arity() const;

  bool operator==(const Structure& other) const;

 private:
  std::size_t n_;
  std::map<std::string, Relation, std::less<>> relations_;
  std::map<std::string, Quantifier, std::less<>> quantifiers_;
};

/// Block assignment of an equivalence relation. Block ids are canonical:
/// numbered 0, 1, ... in order of each block's least element.
class EquivalencePartition {
 public:
  explicit EquivalencePartition(std::vector<std::uint32_t> block_ids);

  static EquivalencePartition equality(std::size_t n);
  static EquivalencePartition single_block(std::size_t n);
  /// Throws kPrecondition unless `relation` is a binary equivalence.
  static EquivalencePartition from_relation(const Relation& relation);

  std::size_t domain_size() const { return block_.size(); }
  std::size_t block_count() const { return block_count_; }
  std::uint32_t block_of(Element a) const { return block_[a]; }
  bool same(Element a, Element b) const { return block_[a] == block_[b]; }
  bool is_equality() const { return block_count_ == block_.size(); }
  const std::vector<std::uint32_t>& block_ids() const { return block_; }

  std::vector<std::vector<Element>> blocks() const;
  Relation as_relation() const;
  /// True when every block of *this lies inside a block of `coarser`.
  bool refines(const EquivalencePartition& coarser) const;

  bool operator==(const EquivalencePartition&) const = default;

 private:
  std::vector<std::uint32_t> block_;
  std::size_t block_count_ = 0;
};

// Group action on tuples, relations and quantifiers.
Tuple apply_perm_tuple(const Permutation& g, std::span<const Element> tuple);
Relation apply_perm_relation(const Permutation& g, const Relation& relation);
Quantifier apply_perm_quantifier(const Permutation& g,
                                 const Quantifier& quantifier);
bool preserves(const Permutation& g, const Structure& structure);

/// image[i] = index of g applied to tuple i, over all n^k tuples.
std::vector<std::uint32_t> index_action(const Permutation& g, unsigned arity);

/// True iff membership in `relation` is constant on products of blocks.
bool saturated(const Relation& relation, const EquivalencePartition& blocks);

/// Lazy range over all 2^(n^k) relations of one arity, ordered by the
/// numeric value of the characteristic bitset (tuple 0 least significant).
class RelationRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Relation;
    using difference_type = std::ptrdiff_t;
    using pointer = const Relation*;
    using reference = const Relation&;

    iterator() = default;
    iterator(std::size_t n, unsigned arity, bool at_end);

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int);
    bool operator==(const iterator& other) const;

   private:
    Relation current_{1, 0};
    bool at_end_ = true;
  };

  RelationRange(std::size_t n, unsigned arity) : n_(n), arity_(arity) {}

  iterator begin() const { return {n_, arity_, false}; }
  iterator end() const { return {n_, arity_, true}; }
  /// The range holds 2^bits() relations.
  std::size_t bits() const { return tuple_count(n_, arity_); }

 private:
  std::size_t n_;
  unsigned arity_;
};

/// Throws kResourceLimit when n^k exceeds the tuple guard.
RelationRange enumerate_relations(const Domain& domain, unsigned arity,
                                  const Limits& limits = {});

/// Relation with characteristic bits taken from the low n^k bits of `mask`.
Relation relation_from_mask(std::size_t n, unsigned arity, std::uint64_t mask);
std::uint64_t relation_mask(const Relation& relation);

/// All k-sequences of relations fitting a quantifier type. A sequence is
/// numbered by concatenating its slot bitsets, slot 0 least significant.
class MemberSpace {
 public:
  /// Throws kResourceLimit when the space exceeds the tuple guard.
  MemberSpace(std::size_t n, QuantifierType type, const Limits& limits = {});

  std::size_t domain_size() const { return n_; }
  const QuantifierType& type() const { return type_; }
  unsigned bits() const { return bits_; }
  std::uint64_t size() const { return std::uint64_t{1} << bits_; }
  unsigned slot_offset(std::size_t j) const { return offsets_[j]; }
  unsigned slot_bits(std::size_t j) const { return widths_[j]; }

  Member member(std::uint64_t index) const;
  std::uint64_t index(const Member& member) const;

 private:
  std::size_t n_;
  QuantifierType type_;
  std::vector<unsigned> offsets_;
  std::vector<unsigned> widths_;
  unsigned bits_ = 0;
};

}  // namespace galdual
