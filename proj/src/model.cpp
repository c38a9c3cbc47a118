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

#include "galdual/model.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "galdual/error.hpp"

namespace galdual {

namespace {

constexpr std::uint64_t kMaxRelationBits = std::uint64_t{1} << 32;

void check_element(std::size_t n, Element a) {
  if (a >= n) {
    fail(ErrorKind::kDomainMismatch, "element " + std::to_string(a) +
                                         " is outside a domain of size " +
                                         std::to_string(n));
  }
}

}  // namespace

Domain::Domain(std::size_t size) : size_(size) {
  if (size == 0) fail(ErrorKind::kInvalidArgument, "domain size must be >= 1");
}

std::size_t tuple_count(std::size_t n, unsigned arity) {
  std::uint64_t count = checked_power(n, arity);
  if (count > kMaxRelationBits) {
    fail(ErrorKind::kResourceLimit,
         "tuple space " + std::to_string(n) + "^" + std::to_string(arity) +
             " is too large to index");
  }
  return static_cast<std::size_t>(count);
}

std::size_t encode_tuple(std::size_t n, std::span<const Element> tuple) {
  std::size_t index = 0;
  for (Element a : tuple) {
    check_element(n, a);
    index = index * n + a;
  }
  return index;
}

Tuple decode_tuple(std::size_t n, unsigned arity, std::size_t index) {
  Tuple tuple(arity);
  for (unsigned i = arity; i-- > 0;) {
    tuple[i] = static_cast<Element>(index % n);
    index /= n;
  }
  return tuple;
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<Element> images)
    : images_(std::move(images)) {
  const std::size_t n = images_.size();
  if (n == 0) fail(ErrorKind::kInvalidArgument, "permutation of empty domain");
  std::vector<bool> seen(n, false);
  for (Element image : images_) {
    if (image >= n || seen[image]) {
      fail(ErrorKind::kInvalidArgument,
           "image sequence is not a bijection of 0.." + std::to_string(n - 1));
    }
    seen[image] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Element> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Element>(i);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(
    std::size_t n, const std::vector<std::vector<Element>>& cycles) {
  std::vector<Element> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Element>(i);
  std::vector<bool> used(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Element a = cycle[i];
      check_element(n, a);
      if (used[a]) {
        fail(ErrorKind::kInvalidArgument, "cycles are not disjoint");
      }
      used[a] = true;
      images[a] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Element> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i]] = static_cast<Element>(i);
  }
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    any = true;
    out << '(';
    Element a = static_cast<Element>(start);
    bool first = true;
    while (!seen[a]) {
      seen[a] = true;
      if (!first) out << ' ';
      out << a;
      first = false;
      a = images_[a];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Permutation compose(const Permutation& g, const Permutation& h) {
  if (g.degree() != h.degree()) {
    fail(ErrorKind::kDomainMismatch, "composing permutations of degree " +
                                         std::to_string(g.degree()) + " and " +
                                         std::to_string(h.degree()));
  }
  std::vector<Element> images(g.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = g(h(i));
  return Permutation(std::move(images));
}

// ---------------------------------------------------------------------------
// Relation

Relation::Relation(std::size_t n, unsigned arity)
    : n_(n), arity_(arity), bits_(tuple_count(n, arity)) {
  if (n == 0) fail(ErrorKind::kInvalidArgument, "relation over empty domain");
}

Relation Relation::full(std::size_t n, unsigned arity) {
  Relation r(n, arity);
  r.bits_.set();
  return r;
}

Relation Relation::from_tuples(std::size_t n, unsigned arity,
                               const std::vector<Tuple>& tuples) {
  Relation r(n, arity);
  for (const Tuple& t : tuples) r.insert(t);
  return r;
}

Relation Relation::from_bits(std::size_t n, unsigned arity, Bits bits) {
  Relation r(n, arity);
  if (bits.size() != r.bits_.size()) {
    fail(ErrorKind::kArityMismatch, "bitset length does not match n^k");
  }
  r.bits_ = std::move(bits);
  return r;
}

Relation Relation::from_subset_mask(std::size_t n, std::uint64_t mask) {
  return relation_from_mask(n, 1, mask);
}

bool Relation::contains(std::span<const Element> tuple) const {
  if (tuple.size() != arity_) {
    fail(ErrorKind::kArityMismatch, "tuple of length " +
                                        std::to_string(tuple.size()) +
                                        " against arity " +
                                        std::to_string(arity_));
  }
  return bits_.test(encode_tuple(n_, tuple));
}

void Relation::insert(std::span<const Element> tuple) {
  if (tuple.size() != arity_) {
    fail(ErrorKind::kArityMismatch, "tuple of length " +
                                        std::to_string(tuple.size()) +
                                        " against arity " +
                                        std::to_string(arity_));
  }
  bits_.set(encode_tuple(n_, tuple));
}

std::vector<std::size_t> Relation::indices() const {
  std::vector<std::size_t> out;
  out.reserve(bits_.count());
  for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) {
    out.push_back(i);
  }
  return out;
}

std::vector<Tuple> Relation::tuples() const {
  std::vector<Tuple> out;
  for (std::size_t i : indices()) out.push_back(decode_tuple(n_, arity_, i));
  return out;
}

Relation Relation::complement() const {
  Relation r = *this;
  r.bits_.flip();
  return r;
}

bool Relation::operator==(const Relation& other) const {
  return n_ == other.n_ && arity_ == other.arity_ && bits_ == other.bits_;
}

bool Relation::operator<(const Relation& other) const {
  if (n_ != other.n_) return n_ < other.n_;
  if (arity_ != other.arity_) return arity_ < other.arity_;
  return bits_ < other.bits_;
}

Relation relation_from_mask(std::size_t n, unsigned arity,
                            std::uint64_t mask) {
  Relation r(n, arity);
  const std::size_t size = r.tuple_space();
  if (size > 64) fail(ErrorKind::kResourceLimit, "mask wider than 64 bits");
  Bits bits(size);
  for (std::size_t i = 0; i < size; ++i) {
    if ((mask >> i) & 1u) bits.set(i);
  }
  return Relation::from_bits(n, arity, std::move(bits));
}

std::uint64_t relation_mask(const Relation& relation) {
  if (relation.tuple_space() > 64) {
    fail(ErrorKind::kResourceLimit, "relation wider than 64 tuples");
  }
  std::uint64_t mask = 0;
  for (std::size_t i : relation.indices()) mask |= std::uint64_t{1} << i;
  return mask;
}

MemberSpace::MemberSpace(std::size_t n, QuantifierType type,
                         const Limits& limits)
    : n_(n), type_(std::move(type)) {
  for (unsigned arity : type_.slots()) {
    const std::uint64_t width = checked_power(n, arity);
    if (width >= 64 || bits_ + width >= 64) {
      fail(ErrorKind::kResourceLimit,
           "member space of type " + type_.to_string() + " on " +
               std::to_string(n) + " elements exceeds 2^63 sequences");
    }
    offsets_.push_back(bits_);
    widths_.push_back(static_cast<unsigned>(width));
    bits_ += static_cast<unsigned>(width);
  }
  require_index_space(size(), limits, "member space");
}

Member MemberSpace::member(std::uint64_t index) const {
  Member out;
  out.reserve(type_.size());
  for (std::size_t j = 0; j < type_.size(); ++j) {
    const std::uint64_t mask =
        (index >> offsets_[j]) & ((std::uint64_t{1} << widths_[j]) - 1);
    out.push_back(relation_from_mask(n_, type_[j], mask));
  }
  return out;
}

std::uint64_t MemberSpace::index(const Member& member) const {
  if (member.size() != type_.size()) {
    fail(ErrorKind::kArityMismatch, "member does not match type " +
                                        type_.to_string());
  }
  std::uint64_t out = 0;
  for (std::size_t j = 0; j < member.size(); ++j) {
    if (member[j].arity() != type_[j] || member[j].domain_size() != n_) {
      fail(ErrorKind::kArityMismatch, "member does not match type " +
                                          type_.to_string());
    }
    out |= relation_mask(member[j]) << offsets_[j];
  }
  return out;
}

// ---------------------------------------------------------------------------
// QuantifierType / Quantifier

QuantifierType::QuantifierType(std::initializer_list<unsigned> slots)
    : QuantifierType(std::vector<unsigned>(slots)) {}

QuantifierType::QuantifierType(std::vector<unsigned> slots)
    : slots_(std::move(slots)) {
  if (slots_.empty()) {
    fail(ErrorKind::kInvalidArgument, "quantifier type needs at least 1 slot");
  }
  for (unsigned s : slots_) {
    if (s == 0) fail(ErrorKind::kInvalidArgument, "slot arity must be >= 1");
  }
}

std::string QuantifierType::to_string() const {
  std::string out = "(";
  for (std::size_t j = 0; j < slots_.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(slots_[j]);
  }
  return out + ")";
}

Quantifier::Quantifier(std::size_t n, QuantifierType type)
    : n_(n), type_(std::move(type)) {
  if (n == 0) fail(ErrorKind::kInvalidArgument, "quantifier over empty domain");
}

Quantifier::Quantifier(std::size_t n, QuantifierType type,
                       std::vector<Member> members)
    : Quantifier(n, std::move(type)) {
  for (const Member& m : members) check_member(m);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  members_ = std::move(members);
}

void Quantifier::check_member(const Member& member) const {
  if (member.size() != type_.size()) {
    fail(ErrorKind::kArityMismatch,
         "member with " + std::to_string(member.size()) +
             " slots for quantifier type " + type_.to_string());
  }
  for (std::size_t j = 0; j < member.size(); ++j) {
    if (member[j].domain_size() != n_) {
      fail(ErrorKind::kDomainMismatch, "member relation on another domain");
    }
    if (member[j].arity() != type_[j]) {
      fail(ErrorKind::kArityMismatch,
           "slot " + std::to_string(j) + " has arity " +
               std::to_string(member[j].arity()) + ", type " +
               type_.to_string() + " expects " + std::to_string(type_[j]));
    }
  }
}

bool Quantifier::contains(const Member& member) const {
  return std::binary_search(members_.begin(), members_.end(), member);
}

void Quantifier::insert(Member member) {
  check_member(member);
  auto it = std::lower_bound(members_.begin(), members_.end(), member);
  if (it == members_.end() || *it != member) {
    members_.insert(it, std::move(member));
  }
}

bool Quantifier::operator==(const Quantifier& other) const {
  return n_ == other.n_ && type_ == other.type_ && members_ == other.members_;
}

// ---------------------------------------------------------------------------
// Structure

Structure::Structure(std::size_t n) : n_(n) {
  if (n == 0) fail(ErrorKind::kInvalidArgument, "structure over empty domain");
}

void Structure::add_relation(std::string name, Relation relation) {
  if (relation.domain_size() != n_) {
    fail(ErrorKind::kDomainMismatch, "relation '" + name +
                                         "' lives on a domain of size " +
                                         std::to_string(relation.domain_size()));
  }
  if (has_name(name)) {
    fail(ErrorKind::kInvalidArgument, "duplicate symbol '" + name + "'");
  }
  relations_.emplace(std::move(name), std::move(relation));
}

void Structure::add_quantifier(std::string name, Quantifier quantifier) {
  if (quantifier.domain_size() != n_) {
    fail(ErrorKind::kDomainMismatch,
         "quantifier '" + name + "' lives on a domain of size " +
             std::to_string(quantifier.domain_size()));
  }
  if (has_name(name)) {
    fail(ErrorKind::kInvalidArgument, "duplicate symbol '" + name + "'");
  }
  quantifiers_.emplace(std::move(name), std::move(quantifier));
}

const Relation* Structure::find_relation(std::string_view name) const {
  auto it = relations_.find(name);
  return it == relations_.end() ? nullptr : &it->second;
}

const Quantifier* Structure::find_quantifier(std::string_view name) const {
  auto it = quantifiers_.find(name);
  return it == quantifiers_.end() ? nullptr : &it->second;
}

bool Structure::has_name(std::string_view name) const {
  return relations_.count(name) > 0 || quantifiers_.count(name) > 0;
}

std::string Structure::fresh_name(std::string_view base) const {
  std::string name(base);
  for (int i = 0; has_name(name); ++i) {
    name = std::string(base) + "_" + std::to_string(i);
  }
  return name;
}

unsigned Structure::max_relation_arity() const {
  unsigned best = 0;
  for (const auto& [name, r] : relations_) best = std::max(best, r.arity());
  return best;
}

unsigned Structure::max_slot_arity() const {
  unsigned best = 0;
  for (const auto& [name, q] : quantifiers_) {
    for (unsigned s : q.type().slots()) best = std::max(best, s);
  }
  return best;
}

bool Structure::operator==(const Structure& other) const {
  return n_ == other.n_ && relations_ == other.relations_ &&
         quantifiers_ == other.quantifiers_;
}

// ---------------------------------------------------------------------------
// EquivalencePartition

EquivalencePartition::EquivalencePartition(std::vector<std::uint32_t> block_ids)
    : block_(std::move(block_ids)) {
  if (block_.empty()) fail(ErrorKind::kInvalidArgument, "empty partition");
  std::map<std::uint32_t, std::uint32_t> renumber;
  for (auto& id : block_) {
    auto [it, inserted] =
        renumber.emplace(id, static_cast<std::uint32_t>(renumber.size()));
    id = it->second;
  }
  block_count_ = renumber.size();
}

EquivalencePartition EquivalencePartition::equality(std::size_t n) {
  std::vector<std::uint32_t> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<std::uint32_t>(i);
  return EquivalencePartition(std::move(ids));
}

EquivalencePartition EquivalencePartition::single_block(std::size_t n) {
  return EquivalencePartition(std::vector<std::uint32_t>(n, 0));
}

EquivalencePartition EquivalencePartition::from_relation(
    const Relation& relation) {
  if (relation.arity() != 2) {
    fail(ErrorKind::kPrecondition, "equivalence must be a binary relation");
  }
  const std::size_t n = relation.domain_size();
  auto holds = [&](Element a, Element b) {
    return relation.contains_index(a * n + b);
  };
  std::vector<std::uint32_t> ids(n);
  for (Element a = 0; a < n; ++a) {
    if (!holds(a, a)) fail(ErrorKind::kPrecondition, "relation not reflexive");
    ids[a] = a;
    for (Element b = 0; b < a; ++b) {
      if (holds(a, b)) {
        ids[a] = ids[b];
        break;
      }
    }
  }
  EquivalencePartition result(std::move(ids));
  if (!(result.as_relation() == relation)) {
    fail(ErrorKind::kPrecondition,
         "relation is not symmetric and transitive");
  }
  return result;
}

std::vector<std::vector<Element>> EquivalencePartition::blocks() const {
  std::vector<std::vector<Element>> out(block_count_);
  for (std::size_t a = 0; a < block_.size(); ++a) {
    out[block_[a]].push_back(static_cast<Element>(a));
  }
  return out;
}

Relation EquivalencePartition::as_relation() const {
  const std::size_t n = block_.size();
  Relation r(n, 2);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (block_[a] == block_[b]) r.insert_index(a * n + b);
    }
  }
  return r;
}

bool EquivalencePartition::refines(const EquivalencePartition& coarser) const {
  if (coarser.domain_size() != domain_size()) {
    fail(ErrorKind::kDomainMismatch, "partitions of different domains");
  }
  std::vector<std::int64_t> image(block_count_, -1);
  for (std::size_t a = 0; a < block_.size(); ++a) {
    auto& slot = image[block_[a]];
    if (slot < 0) {
      slot = coarser.block_[a];
    } else if (slot != coarser.block_[a]) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Actions

Tuple apply_perm_tuple(const Permutation& g, std::span<const Element> tuple) {
  Tuple out(tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    check_element(g.degree(), tuple[i]);
    out[i] = g(tuple[i]);
  }
  return out;
}

std::vector<std::uint32_t> index_action(const Permutation& g, unsigned arity) {
  const std::size_t n = g.degree();
  const std::size_t size = tuple_count(n, arity);
  std::vector<std::uint32_t> image(size);
  // Odometer over tuples keeps this O(n^k * k) without division.
  Tuple t(arity, 0);
  for (std::size_t i = 0; i < size; ++i) {
    std::size_t j = 0;
    for (unsigned c = 0; c < arity; ++c) j = j * n + g(t[c]);
    image[i] = static_cast<std::uint32_t>(j);
    for (unsigned c = arity; c-- > 0;) {
      if (++t[c] < n) break;
      t[c] = 0;
    }
  }
  return image;
}

Relation apply_perm_relation(const Permutation& g, const Relation& relation) {
  if (g.degree() != relation.domain_size()) {
    fail(ErrorKind::kDomainMismatch,
         "permutation of degree " + std::to_string(g.degree()) +
             " applied to a relation on " +
             std::to_string(relation.domain_size()) + " elements");
  }
  const std::size_t n = relation.domain_size();
  const unsigned k = relation.arity();
  Relation out(n, k);
  for (std::size_t i : relation.indices()) {
    std::size_t rest = i, image = 0, scale = 1;
    for (unsigned c = 0; c < k; ++c) {
      image += g(static_cast<Element>(rest % n)) * scale;
      rest /= n;
      scale *= n;
    }
    out.insert_index(image);
  }
  return out;
}

Quantifier apply_perm_quantifier(const Permutation& g,
                                 const Quantifier& quantifier) {
  if (g.degree() != quantifier.domain_size()) {
    fail(ErrorKind::kDomainMismatch,
         "permutation of degree " + std::to_string(g.degree()) +
             " applied to a quantifier on " +
             std::to_string(quantifier.domain_size()) + " elements");
  }
  std::vector<Member> members;
  members.reserve(quantifier.size());
  for (const Member& m : quantifier.members()) {
    Member image;
    image.reserve(m.size());
    for (const Relation& r : m) image.push_back(apply_perm_relation(g, r));
    members.push_back(std::move(image));
  }
  return Quantifier(quantifier.domain_size(), quantifier.type(),
                    std::move(members));
}

bool preserves(const Permutation& g, const Structure& structure) {
  if (g.degree() != structure.domain_size()) {
    fail(ErrorKind::kDomainMismatch, "permutation and structure differ in size");
  }
  for (const auto& [name, r] : structure.relations()) {
    if (!(apply_perm_relation(g, r) == r)) return false;
  }
  for (const auto& [name, q] : structure.quantifiers()) {
    for (const Member& m : q.members()) {
      Member image;
      for (const Relation& r : m) image.push_back(apply_perm_relation(g, r));
      if (!q.contains(image)) return false;
    }
  }
  return true;
}

bool saturated(const Relation& relation, const EquivalencePartition& blocks) {
  if (relation.domain_size() != blocks.domain_size()) {
    fail(ErrorKind::kDomainMismatch, "relation and partition differ in size");
  }
  const std::size_t n = relation.domain_size();
  const unsigned k = relation.arity();
  const auto members = blocks.blocks();
  // Closure under single-coordinate swaps inside a block is enough: any two
  // blockwise-equivalent tuples are connected by such swaps.
  for (std::size_t i : relation.indices()) {
    Tuple t = decode_tuple(n, k, i);
    for (unsigned c = 0; c < k; ++c) {
      const Element original = t[c];
      for (Element b : members[blocks.block_of(original)]) {
        t[c] = b;
        if (!relation.contains_index(encode_tuple(n, t))) return false;
      }
      t[c] = original;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration

RelationRange::iterator::iterator(std::size_t n, unsigned arity, bool at_end)
    : current_(n, arity), at_end_(at_end) {}

RelationRange::iterator& RelationRange::iterator::operator++() {
  Bits bits = current_.bits();
  std::size_t i = 0;
  while (i < bits.size() && bits.test(i)) bits.reset(i++);
  if (i == bits.size()) {
    at_end_ = true;
  } else {
    bits.set(i);
  }
  current_ = Relation::from_bits(current_.domain_size(), current_.arity(),
                                 std::move(bits));
  return *this;
}

RelationRange::iterator RelationRange::iterator::operator++(int) {
  iterator copy = *this;
  ++*this;
  return copy;
}

bool RelationRange::iterator::operator==(const iterator& other) const {
  if (at_end_ || other.at_end_) return at_end_ == other.at_end_;
  return current_ == other.current_;
}

RelationRange enumerate_relations(const Domain& domain, unsigned arity,
                                  const Limits& limits) {
  require_index_space(checked_power(domain.size(), arity), limits,
                      "enumerate_relations");
  return RelationRange(domain.size(), arity);
}

}  // namespace galdual
