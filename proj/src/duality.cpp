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

#include "galdual/duality.hpp"

#include <algorithm>

#include "galdual/error.hpp"

namespace galdual {

namespace {

struct RelationCheck {
  const Relation* relation;
  // tuples[m]: member flag and tuple for every tuple whose largest entry is m.
  std::vector<std::vector<std::pair<Tuple, bool>>> tuples;
};

class AutSearch {
 public:
  AutSearch(const Structure& structure)
      : n_(structure.domain_size()), image_(n_), used_(n_, false) {
    for (const auto& [name, r] : structure.relations()) {
      if (r.arity() == 0) continue;
      RelationCheck check{&r, std::vector<std::vector<std::pair<Tuple, bool>>>(n_)};
      for (std::size_t i = 0; i < r.tuple_space(); ++i) {
        Tuple t = decode_tuple(n_, r.arity(), i);
        const Element top = *std::max_element(t.begin(), t.end());
        check.tuples[top].emplace_back(std::move(t), r.contains_index(i));
      }
      checks_.push_back(std::move(check));
    }
    std::stable_sort(checks_.begin(), checks_.end(),
                     [](const RelationCheck& a, const RelationCheck& b) {
                       return a.relation->arity() < b.relation->arity();
                     });
    for (const auto& [name, q] : structure.quantifiers()) {
      quantifiers_.push_back(&q);
    }
  }

  std::vector<Permutation> run() {
    extend(0);
    return std::move(found_);
  }

 private:
  bool consistent(Element m) const {
    for (const RelationCheck& check : checks_) {
      for (const auto& [t, in] : check.tuples[m]) {
        std::size_t index = 0;
        for (Element a : t) index = index * n_ + image_[a];
        if (check.relation->contains_index(index) != in) return false;
      }
    }
    return true;
  }

  bool preserves_quantifiers(const Permutation& g) const {
    for (const Quantifier* q : quantifiers_) {
      for (const Member& member : q->members()) {
        Member moved;
        moved.reserve(member.size());
        for (const Relation& r : member) {
          moved.push_back(apply_perm_relation(g, r));
        }
        if (!q->contains(moved)) return false;
      }
    }
    return true;
  }

  void extend(Element m) {
    if (m == n_) {
      Permutation g(image_);
      if (preserves_quantifiers(g)) found_.push_back(std::move(g));
      return;
    }
    for (Element b = 0; b < n_; ++b) {
      if (used_[b]) continue;
      image_[m] = b;
      used_[b] = true;
      if (consistent(m)) extend(m + 1);
      used_[b] = false;
    }
  }

  std::size_t n_;
  std::vector<Element> image_;
  std::vector<bool> used_;
  std::vector<RelationCheck> checks_;
  std::vector<const Quantifier*> quantifiers_;
  std::vector<Permutation> found_;
};

template <class Object, class Apply>
std::optional<Permutation> first_violation(const PermutationSet& h,
                                           const Object& x, Apply apply) {
  if (x.domain_size() != h.degree()) {
    fail(ErrorKind::kDomainMismatch, "object and group domains differ");
  }
  for (const Permutation& g : h.generators()) {
    if (!(apply(g, x) == x)) return g;
  }
  return std::nullopt;
}

std::string slot_to_string(const Relation& r) {
  std::string out = "{";
  bool first = true;
  for (const Tuple& t : r.tuples()) {
    if (!first) out += ",";
    first = false;
    out += r.arity() == 1 ? std::to_string(t[0]) : tuple_to_string(t);
  }
  return out + "}";
}

}  // namespace

PermutationSet aut(const Structure& structure, const Limits& limits) {
  const std::size_t n = structure.domain_size();
  if (n > limits.max_group_degree) {
    fail(ErrorKind::kResourceLimit,
         "aut: degree " + std::to_string(n) +
             " exceeds the group guard max_group_degree=" +
             std::to_string(limits.max_group_degree));
  }
  return mark_group(PermutationSet(n, AutSearch(structure).run()));
}

bool is_invariant(const PermutationSet& h, const Relation& relation) {
  return !violating_permutation(h, relation);
}

bool is_invariant(const PermutationSet& h, const Quantifier& quantifier) {
  return !violating_permutation(h, quantifier);
}

std::optional<Permutation> violating_permutation(const PermutationSet& h,
                                                 const Relation& relation) {
  return first_violation(h, relation, [](const Permutation& g, const Relation& r) {
    return apply_perm_relation(g, r);
  });
}

std::optional<Permutation> violating_permutation(const PermutationSet& h,
                                                 const Quantifier& quantifier) {
  return first_violation(h, quantifier,
                         [](const Permutation& g, const Quantifier& q) {
                           return apply_perm_quantifier(g, q);
                         });
}

std::vector<std::uint32_t> member_action(const Permutation& g,
                                         const MemberSpace& space) {
  const QuantifierType& type = space.type();
  std::vector<std::vector<std::uint32_t>> slot_actions;
  for (unsigned arity : type.slots()) {
    slot_actions.push_back(index_action(g, arity));
  }
  std::vector<std::uint32_t> image(space.size());
  for (std::uint64_t index = 0; index < space.size(); ++index) {
    std::uint64_t out = 0;
    for (std::size_t j = 0; j < type.size(); ++j) {
      const unsigned offset = space.slot_offset(j);
      for (unsigned t = 0; t < space.slot_bits(j); ++t) {
        if ((index >> (offset + t)) & 1u) {
          out |= std::uint64_t{1} << (offset + slot_actions[j][t]);
        }
      }
    }
    image[index] = static_cast<std::uint32_t>(out);
  }
  return image;
}

InvariantFamily::InvariantFamily(PermutationSet group,
                                 std::vector<OrbitPartition> tuples,
                                 std::map<QuantifierType, OrbitPartition> members)
    : group_(std::move(group)),
      tuple_orbits_(std::move(tuples)),
      member_orbits_(std::move(members)) {}

std::vector<QuantifierType> InvariantFamily::types() const {
  std::vector<QuantifierType> out;
  for (const auto& [type, orbits] : member_orbits_) out.push_back(type);
  return out;
}

const OrbitPartition& InvariantFamily::tuple_orbits(unsigned arity) const {
  if (arity == 0 || arity > tuple_orbits_.size()) {
    fail(ErrorKind::kInvalidArgument,
         "arity " + std::to_string(arity) + " outside the family's range 1.." +
             std::to_string(tuple_orbits_.size()));
  }
  return tuple_orbits_[arity - 1];
}

const OrbitPartition& InvariantFamily::member_orbits(
    const QuantifierType& type) const {
  auto it = member_orbits_.find(type);
  if (it == member_orbits_.end()) {
    fail(ErrorKind::kInvalidArgument,
         "type " + type.to_string() + " was not requested for this family");
  }
  return it->second;
}

bool InvariantFamily::contains(const Relation& relation) const {
  if (relation.domain_size() != domain_size()) {
    fail(ErrorKind::kDomainMismatch, "relation and family domains differ");
  }
  if (relation.arity() == 0) return true;
  const OrbitPartition& orbits = tuple_orbits(relation.arity());
  std::vector<int> seen(orbits.block_count(), -1);
  for (std::size_t t = 0; t < orbits.space_size(); ++t) {
    const int in = relation.contains_index(t) ? 1 : 0;
    int& s = seen[orbits.block_of(t)];
    if (s == -1) s = in;
    if (s != in) return false;
  }
  return true;
}

bool InvariantFamily::contains(const Quantifier& quantifier) const {
  if (quantifier.domain_size() != domain_size()) {
    fail(ErrorKind::kDomainMismatch, "quantifier and family domains differ");
  }
  const OrbitPartition& orbits = member_orbits(quantifier.type());
  const MemberSpace space(domain_size(), quantifier.type());
  std::vector<bool> in(space.size(), false);
  for (const Member& m : quantifier.members()) in[space.index(m)] = true;
  std::vector<int> seen(orbits.block_count(), -1);
  for (std::size_t i = 0; i < orbits.space_size(); ++i) {
    int& s = seen[orbits.block_of(i)];
    if (s == -1) s = in[i];
    if (s != static_cast<int>(in[i])) return false;
  }
  return true;
}

namespace {

void require_listable(std::size_t blocks, const Limits& limits) {
  if (blocks >= 63 ||
      (std::uint64_t{1} << blocks) > limits.max_listed_objects) {
    fail(ErrorKind::kResourceLimit,
         "listing 2^" + std::to_string(blocks) +
             " invariant objects exceeds max_listed_objects=" +
             std::to_string(limits.max_listed_objects));
  }
}

}  // namespace

std::vector<Relation> InvariantFamily::relations(unsigned arity,
                                                 const Limits& limits) const {
  const OrbitPartition& orbits = tuple_orbits(arity);
  require_listable(orbits.block_count(), limits);
  std::vector<Relation> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << orbits.block_count());
       ++mask) {
    Relation r(domain_size(), arity);
    for (std::size_t t = 0; t < orbits.space_size(); ++t) {
      if ((mask >> orbits.block_of(t)) & 1u) r.insert_index(t);
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Quantifier> InvariantFamily::quantifiers(
    const QuantifierType& type, const Limits& limits) const {
  const OrbitPartition& orbits = member_orbits(type);
  require_listable(orbits.block_count(), limits);
  const MemberSpace space(domain_size(), type, limits);
  std::vector<Quantifier> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << orbits.block_count());
       ++mask) {
    std::vector<Member> members;
    for (std::size_t i = 0; i < orbits.space_size(); ++i) {
      if ((mask >> orbits.block_of(i)) & 1u) members.push_back(space.member(i));
    }
    out.emplace_back(domain_size(), type, std::move(members));
  }
  return out;
}

InvariantFamily inv(const PermutationSet& h, unsigned k_max,
                    const std::vector<QuantifierType>& types,
                    const Limits& limits) {
  std::vector<OrbitPartition> tuples;
  for (unsigned k = 1; k <= k_max; ++k) tuples.push_back(orbits(h, k, limits));
  std::map<QuantifierType, OrbitPartition> members;
  for (const QuantifierType& type : types) {
    if (members.count(type)) continue;
    const MemberSpace space(h.degree(), type, limits);
    std::vector<std::vector<std::uint32_t>> actions;
    for (const Permutation& g : h.generators()) {
      actions.push_back(member_action(g, space));
    }
    members.emplace(type,
                    orbits_of_actions(space.size(),
                                      static_cast<unsigned>(type.size()),
                                      actions));
  }
  return InvariantFamily(h, std::move(tuples), std::move(members));
}

McGeeCatalogue mcgee_invariants(std::size_t n, unsigned k_max,
                                const std::vector<QuantifierType>& types,
                                const Limits& limits) {
  const PermutationSet full = generate(symmetric_generators(n), limits);
  const InvariantFamily family = inv(full, k_max, types, limits);
  McGeeCatalogue out;
  out.domain_size = n;
  for (unsigned k = 1; k <= k_max; ++k) {
    McGeeClass cls;
    const OrbitPartition& orbits = family.tuple_orbits(k);
    cls.blocks = orbits.block_count();
    for (const auto& block : orbits.orbits()) {
      cls.representatives.push_back(
          tuple_to_string(decode_tuple(n, k, block.front())));
    }
    out.relations[k] = std::move(cls);
  }
  for (const QuantifierType& type : family.types()) {
    McGeeClass cls;
    const OrbitPartition& orbits = family.member_orbits(type);
    const MemberSpace space(n, type, limits);
    cls.blocks = orbits.block_count();
    for (const auto& block : orbits.orbits()) {
      cls.representatives.push_back(member_to_string(space.member(block.front())));
    }
    out.quantifiers.emplace(type, std::move(cls));
  }
  return out;
}

std::string tuple_to_string(const Tuple& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(t[i]);
  }
  return out + ")";
}

std::string member_to_string(const Member& m) {
  std::string out = "(";
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (j) out += ", ";
    out += slot_to_string(m[j]);
  }
  return out + ")";
}

}  // namespace galdual
