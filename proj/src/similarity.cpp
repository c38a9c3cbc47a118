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

#include "galdual/similarity.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <string>

#include "galdual/error.hpp"

namespace galdual {

namespace {

constexpr std::size_t kMaxSimilarityDomain = 8;

void require_similarity_space(std::size_t n, const Limits& limits,
                              const char* what) {
  if (n > limits.max_similarity_degree) {
    fail(ErrorKind::kResourceLimit,
         std::string(what) + ": domain size " + std::to_string(n) +
             " exceeds the similarity guard max_similarity_degree=" +
             std::to_string(limits.max_similarity_degree));
  }
  if (n * n > 26) {
    fail(ErrorKind::kResourceLimit,
         std::string(what) + ": 2^" + std::to_string(n * n) +
             " binary relations cannot be indexed");
  }
}

// Calls visit(index of b̄) for every b̄ with a_l p b_l for all l.
template <class Visit>
void for_each_image(const Similarity& p, const Tuple& a, Visit visit) {
  const std::size_t n = p.domain_size();
  const std::size_t k = a.size();
  std::vector<std::vector<Element>> options(k);
  for (std::size_t l = 0; l < k; ++l) {
    const std::uint32_t row = p.row(a[l]);
    for (Element b = 0; b < n; ++b) {
      if ((row >> b) & 1u) options[l].push_back(b);
    }
  }
  std::vector<std::size_t> pick(k, 0);
  while (true) {
    std::size_t index = 0;
    for (std::size_t l = 0; l < k; ++l) index = index * n + options[l][pick[l]];
    visit(index);
    std::size_t l = k;
    while (l-- > 0) {
      if (++pick[l] < options[l].size()) break;
      pick[l] = 0;
    }
    if (l == static_cast<std::size_t>(-1)) return;
  }
}

std::string block_to_string(const std::vector<Element>& block) {
  std::string out = "{";
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(block[i]);
  }
  return out + "}";
}

std::vector<Similarity> from_flags(std::size_t n, const std::vector<bool>& in) {
  std::vector<Similarity> out;
  for (std::uint64_t mask = 0; mask < in.size(); ++mask) {
    if (in[mask]) out.emplace_back(n, mask);
  }
  return out;
}

void mark_subsimilarities(const Similarity& p, std::vector<bool>& seen) {
  const std::size_t n = p.domain_size();
  const std::uint64_t m = p.mask();
  for (std::uint64_t s = m;; s = (s - 1) & m) {
    if (!seen[s] && is_similarity_mask(n, s)) seen[s] = true;
    if (s == 0) break;
  }
}

// Member sequences all of whose slots are saturated, with membership flags.
struct SaturatedMembers {
  std::vector<Member> members;
  std::vector<bool> in;
};

SaturatedMembers saturated_members(const Quantifier& q,
                                   const EquivalencePartition& e,
                                   const Limits& limits) {
  SaturatedMembers out;
  const MemberSpace space(q.domain_size(), q.type(), limits);
  for (std::uint64_t index = 0; index < space.size(); ++index) {
    Member m = space.member(index);
    bool ok = true;
    for (const Relation& r : m) ok = ok && saturated(r, e);
    if (!ok) continue;
    out.in.push_back(q.contains(m));
    out.members.push_back(std::move(m));
  }
  return out;
}

bool sim_invariant_on(const Similarity& p, const Quantifier& q,
                      const EquivalencePartition& e,
                      const SaturatedMembers& candidates) {
  for (std::size_t i = 0; i < candidates.members.size(); ++i) {
    const Member& r = candidates.members[i];
    Member s;
    bool related = true;
    for (const Relation& slot : r) {
      Relation image = similarity_image(p, slot);
      if (!saturated(image, e) || !lift_holds(p, slot, image)) {
        related = false;
        break;
      }
      s.push_back(std::move(image));
    }
    if (related && q.contains(s) != candidates.in[i]) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Similarity

Similarity::Similarity(std::size_t n, std::uint64_t mask) : n_(n), mask_(mask) {
  if (n == 0 || n > kMaxSimilarityDomain) {
    fail(ErrorKind::kResourceLimit, "similarities are supported on 1.." +
                                        std::to_string(kMaxSimilarityDomain) +
                                        " elements");
  }
  if (n * n < 64 && (mask >> (n * n)) != 0) {
    fail(ErrorKind::kInvalidArgument, "similarity mask has stray bits");
  }
  if (!is_similarity_mask(n, mask)) {
    fail(ErrorKind::kInvalidArgument,
         "relation is not total and surjective, so not a similarity");
  }
}

Similarity Similarity::identity(std::size_t n) {
  std::uint64_t mask = 0;
  for (std::size_t a = 0; a < n; ++a) mask |= std::uint64_t{1} << (a * n + a);
  return Similarity(n, mask);
}

Similarity Similarity::full(std::size_t n) {
  return Similarity(n, n * n == 64 ? ~std::uint64_t{0}
                                   : (std::uint64_t{1} << (n * n)) - 1);
}

Similarity Similarity::from_permutation(const Permutation& g) {
  const std::size_t n = g.degree();
  std::uint64_t mask = 0;
  for (Element a = 0; a < n; ++a) mask |= std::uint64_t{1} << (a * n + g(a));
  return Similarity(n, mask);
}

Similarity Similarity::from_pairs(
    std::size_t n, const std::vector<std::pair<Element, Element>>& pairs) {
  std::uint64_t mask = 0;
  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n) {
      fail(ErrorKind::kDomainMismatch, "similarity pair outside the domain");
    }
    mask |= std::uint64_t{1} << (a * n + b);
  }
  return Similarity(n, mask);
}

std::size_t Similarity::size() const { return std::popcount(mask_); }

std::vector<std::pair<Element, Element>> Similarity::pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element a = 0; a < n_; ++a) {
    for (Element b = 0; b < n_; ++b) {
      if (related(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

Relation Similarity::as_relation() const {
  Relation r(n_, 2);
  for (const auto& [a, b] : pairs()) r.insert_index(a * n_ + b);
  return r;
}

std::uint32_t Similarity::row(Element a) const {
  return static_cast<std::uint32_t>((mask_ >> (a * n_)) & ((1u << n_) - 1));
}

bool Similarity::is_permutation() const { return size() == n_; }

std::optional<Permutation> Similarity::as_permutation() const {
  if (!is_permutation()) return std::nullopt;
  std::vector<Element> images(n_);
  for (Element a = 0; a < n_; ++a) {
    images[a] = static_cast<Element>(std::countr_zero(row(a)));
  }
  return Permutation(std::move(images));
}

bool is_similarity_mask(std::size_t n, std::uint64_t mask) {
  std::uint32_t columns = 0;
  const std::uint32_t all = (1u << n) - 1;
  for (std::size_t a = 0; a < n; ++a) {
    const std::uint32_t row = static_cast<std::uint32_t>((mask >> (a * n)) & all);
    if (row == 0) return false;
    columns |= row;
  }
  return columns == all;
}

bool is_similarity(const Relation& relation) {
  if (relation.arity() != 2) return false;
  const std::size_t n = relation.domain_size();
  if (n > kMaxSimilarityDomain) {
    fail(ErrorKind::kResourceLimit, "similarity test beyond 8 elements");
  }
  return is_similarity_mask(n, relation_mask(relation));
}

Similarity compose(const Similarity& p, const Similarity& q) {
  if (p.domain_size() != q.domain_size()) {
    fail(ErrorKind::kDomainMismatch, "composing similarities of different domains");
  }
  const std::size_t n = p.domain_size();
  std::uint64_t mask = 0;
  for (Element a = 0; a < n; ++a) {
    std::uint32_t row = 0;
    const std::uint32_t via = p.row(a);
    for (Element b = 0; b < n; ++b) {
      if ((via >> b) & 1u) row |= q.row(b);
    }
    mask |= static_cast<std::uint64_t>(row) << (a * n);
  }
  return Similarity(n, mask);
}

Similarity converse(const Similarity& p) {
  const std::size_t n = p.domain_size();
  std::uint64_t mask = 0;
  for (const auto& [a, b] : p.pairs()) mask |= std::uint64_t{1} << (b * n + a);
  return Similarity(n, mask);
}

Relation similarity_image(const Similarity& p, const Relation& relation) {
  if (p.domain_size() != relation.domain_size()) {
    fail(ErrorKind::kDomainMismatch, "similarity and relation domains differ");
  }
  Relation out(relation.domain_size(), relation.arity());
  for (const Tuple& a : relation.tuples()) {
    for_each_image(p, a, [&](std::size_t b) { out.insert_index(b); });
  }
  return out;
}

bool lift_holds(const Similarity& p, const Relation& r, const Relation& s) {
  if (r.arity() != s.arity()) {
    fail(ErrorKind::kArityMismatch, "lift between relations of arity " +
                                        std::to_string(r.arity()) + " and " +
                                        std::to_string(s.arity()));
  }
  if (p.domain_size() != r.domain_size() || r.domain_size() != s.domain_size()) {
    fail(ErrorKind::kDomainMismatch, "lift across different domains");
  }
  const std::size_t n = r.domain_size();
  for (std::size_t i = 0; i < r.tuple_space(); ++i) {
    const bool in = r.contains_index(i);
    bool ok = true;
    for_each_image(p, decode_tuple(n, r.arity(), i), [&](std::size_t b) {
      if (s.contains_index(b) != in) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

std::vector<Similarity> subsimilarities(const Similarity& p) {
  std::vector<Similarity> out;
  const std::uint64_t m = p.mask();
  for (std::uint64_t s = m;; s = (s - 1) & m) {
    if (is_similarity_mask(p.domain_size(), s)) out.emplace_back(p.domain_size(), s);
    if (s == 0) break;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// SimilaritySet

SimilaritySet::SimilaritySet(std::size_t n) : n_(n) {}

SimilaritySet::SimilaritySet(std::size_t n, std::vector<Similarity> members)
    : n_(n) {
  for (const Similarity& p : members) {
    if (p.domain_size() != n) {
      fail(ErrorKind::kDomainMismatch, "similarity of another domain in set");
    }
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  members_ = std::move(members);
}

bool SimilaritySet::contains(const Similarity& p) const {
  return std::binary_search(members_.begin(), members_.end(), p);
}

MonoidFlags SimilaritySet::flags() const {
  MonoidFlags out;
  out.subsimilarities = true;
  for (const Similarity& p : members_) {
    for (std::uint64_t bits = p.mask(); bits && out.subsimilarities;
         bits &= bits - 1) {
      const std::uint64_t smaller = p.mask() & ~(bits & -bits);
      if (is_similarity_mask(n_, smaller) &&
          !contains(Similarity(n_, smaller))) {
        out.subsimilarities = false;
      }
    }
    if (!out.subsimilarities) break;
  }
  // In a downward-closed set every composite or converse lies below one
  // built from maximal members, so those suffice.
  const std::vector<Similarity> probe =
      out.subsimilarities ? maxima(*this).members() : members_;
  out.composition = true;
  out.converse = true;
  for (const Similarity& p : probe) {
    if (!contains(converse(p))) out.converse = false;
    for (const Similarity& q : probe) {
      if (!contains(compose(p, q))) {
        out.composition = false;
        break;
      }
    }
  }
  if (!members_.empty()) {
    const Relation approx = approx_equiv(*this).as_relation();
    out.contains_approx = contains(Similarity(n_, relation_mask(approx)));
  }
  return out;
}

SimilaritySet maxima(const SimilaritySet& set) {
  std::vector<Similarity> sorted = set.members();
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Similarity& a, const Similarity& b) {
                     return a.size() > b.size();
                   });
  std::vector<Similarity> top;
  for (const Similarity& p : sorted) {
    bool covered = false;
    for (const Similarity& m : top) {
      if (p.subset_of(m)) {
        covered = true;
        break;
      }
    }
    if (!covered) top.push_back(p);
  }
  return SimilaritySet(set.domain_size(), std::move(top));
}

SimilaritySet monoid_closure(const SimilaritySet& set) {
  const std::size_t n = set.domain_size();
  std::set<Similarity> seen(set.members().begin(), set.members().end());
  seen.insert(Similarity::identity(n));
  std::vector<Similarity> all(seen.begin(), seen.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    auto add = [&](Similarity p) {
      if (seen.insert(p).second) all.push_back(std::move(p));
    };
    add(converse(all[i]));
    for (std::size_t j = 0; j <= i; ++j) {
      add(compose(all[i], all[j]));
      add(compose(all[j], all[i]));
    }
  }
  return SimilaritySet(n, std::move(all));
}

SimilaritySet downward_closure(const SimilaritySet& set, const Limits& limits) {
  const std::size_t n = set.domain_size();
  require_similarity_space(n, limits, "downward_closure");
  std::vector<bool> seen(std::size_t{1} << (n * n), false);
  const auto top = maxima(set);
  for (const Similarity& p : top.members()) mark_subsimilarities(p, seen);
  return SimilaritySet(n, from_flags(n, seen));
}

SimilaritySet all_similarities(std::size_t n, const Limits& limits) {
  require_similarity_space(n, limits, "all_similarities");
  return downward_closure(SimilaritySet(n, {Similarity::full(n)}), limits);
}

EquivalencePartition approx_equiv(const SimilaritySet& set) {
  const std::size_t n = set.domain_size();
  const SimilaritySet closed = monoid_closure(maxima(set));
  const std::uint64_t diagonal = Similarity::identity(n).mask();
  // Union-find is unnecessary: the relation is an equivalence on a closed
  // set, and block ids are assigned by least related element.
  std::vector<std::uint32_t> block(n);
  for (Element a = 0; a < n; ++a) {
    block[a] = a;
    for (Element b = 0; b < a; ++b) {
      const std::uint64_t need = diagonal | (std::uint64_t{1} << (a * n + b));
      bool related = false;
      for (const Similarity& p : closed.members()) {
        if ((p.mask() & need) == need) {
          related = true;
          break;
        }
      }
      if (related) {
        block[a] = block[b];
        break;
      }
    }
  }
  return EquivalencePartition(std::move(block));
}

SimilaritySet full_monoid_closure(const SimilaritySet& set,
                                  const Limits& limits) {
  const std::size_t n = set.domain_size();
  require_similarity_space(n, limits, "full_monoid_closure");
  SimilaritySet current = downward_closure(set, limits);
  while (true) {
    SimilaritySet closed = monoid_closure(maxima(current));
    std::vector<Similarity> grown = closed.members();
    grown.emplace_back(n, relation_mask(approx_equiv(closed).as_relation()));
    SimilaritySet next =
        downward_closure(SimilaritySet(n, std::move(grown)), limits);
    if (next == current) return current;
    current = std::move(next);
  }
}

// ---------------------------------------------------------------------------
// Quotients

Relation quotient_relation(const Relation& relation,
                           const EquivalencePartition& e) {
  if (relation.domain_size() != e.domain_size()) {
    fail(ErrorKind::kDomainMismatch, "relation and partition domains differ");
  }
  Relation out(e.block_count(), relation.arity());
  for (const Tuple& t : relation.tuples()) {
    Tuple q(t.size());
    for (std::size_t l = 0; l < t.size(); ++l) q[l] = e.block_of(t[l]);
    out.insert(q);
  }
  return out;
}

Relation lift_relation(const Relation& relation, const EquivalencePartition& e) {
  if (relation.domain_size() != e.block_count()) {
    fail(ErrorKind::kDomainMismatch, "relation does not live on the blocks");
  }
  const std::size_t n = e.domain_size();
  Relation out(n, relation.arity());
  for (std::size_t i = 0; i < out.tuple_space(); ++i) {
    Tuple t = decode_tuple(n, relation.arity(), i);
    for (Element& a : t) a = e.block_of(a);
    if (relation.contains(t)) out.insert_index(i);
  }
  return out;
}

Quantifier quotient_quantifier(const Quantifier& quantifier,
                               const EquivalencePartition& e) {
  std::vector<Member> members;
  for (const Member& m : quantifier.members()) {
    bool ok = true;
    for (const Relation& r : m) ok = ok && saturated(r, e);
    if (!ok) continue;
    Member q;
    for (const Relation& r : m) q.push_back(quotient_relation(r, e));
    members.push_back(std::move(q));
  }
  return Quantifier(e.block_count(), quantifier.type(), std::move(members));
}

Quantifier lift_quantifier(const Quantifier& quantifier,
                           const EquivalencePartition& e) {
  std::vector<Member> members;
  for (const Member& m : quantifier.members()) {
    Member lifted;
    for (const Relation& r : m) lifted.push_back(lift_relation(r, e));
    members.push_back(std::move(lifted));
  }
  return Quantifier(e.domain_size(), quantifier.type(), std::move(members));
}

Structure quotient_structure(const Structure& structure,
                             const EquivalencePartition& e) {
  Structure out(e.block_count());
  for (const auto& [name, r] : structure.relations()) {
    out.add_relation(name, quotient_relation(r, e));
  }
  for (const auto& [name, q] : structure.quantifiers()) {
    out.add_quantifier(name, quotient_quantifier(q, e));
  }
  return out;
}

Structure lift_structure(const Structure& structure,
                         const EquivalencePartition& e) {
  Structure out(e.domain_size());
  for (const auto& [name, r] : structure.relations()) {
    out.add_relation(name, lift_relation(r, e));
  }
  for (const auto& [name, q] : structure.quantifiers()) {
    out.add_quantifier(name, lift_quantifier(q, e));
  }
  return out;
}

Permutation quotient_similarity(const Similarity& p,
                                const EquivalencePartition& e) {
  const auto blocks = e.blocks();
  const std::size_t m = blocks.size();
  std::vector<Element> images(m);
  std::vector<int> preimage(m, -1);
  for (std::size_t i = 0; i < m; ++i) {
    std::set<std::uint32_t> targets;
    for (Element a : blocks[i]) {
      for (Element b = 0; b < p.domain_size(); ++b) {
        if (p.related(a, b)) targets.insert(e.block_of(b));
      }
    }
    if (targets.size() != 1) {
      std::string names;
      for (std::uint32_t t : targets) names += " " + block_to_string(blocks[t]);
      fail(ErrorKind::kPrecondition, "quotient is not functional: block " +
                                         block_to_string(blocks[i]) +
                                         " is related to blocks" + names);
    }
    const std::uint32_t target = *targets.begin();
    if (preimage[target] != -1) {
      fail(ErrorKind::kPrecondition,
           "quotient is not injective: blocks " +
               block_to_string(blocks[preimage[target]]) + " and " +
               block_to_string(blocks[i]) + " both map to " +
               block_to_string(blocks[target]));
    }
    preimage[target] = static_cast<int>(i);
    images[i] = target;
  }
  return Permutation(std::move(images));
}

Similarity lift_permutation(const Permutation& f, const EquivalencePartition& e) {
  if (f.degree() != e.block_count()) {
    fail(ErrorKind::kDomainMismatch, "permutation does not act on the blocks");
  }
  const std::size_t n = e.domain_size();
  std::uint64_t mask = 0;
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (f(e.block_of(a)) == e.block_of(b)) {
        mask |= std::uint64_t{1} << (a * n + b);
      }
    }
  }
  return Similarity(n, mask);
}

// ---------------------------------------------------------------------------
// Sim and Inv

bool sim_invariant(const Similarity& p, const Relation& relation) {
  return lift_holds(p, relation, relation);
}

bool sim_invariant(const Similarity& p, const Quantifier& quantifier,
                   const EquivalencePartition& e, const Limits& limits) {
  return sim_invariant_on(p, quantifier, e,
                          saturated_members(quantifier, e, limits));
}

bool sim_invariant_unrestricted(const Similarity& p, const Quantifier& quantifier,
                                const Limits& limits) {
  const MemberSpace space(quantifier.domain_size(), quantifier.type(), limits);
  for (std::uint64_t index = 0; index < space.size(); ++index) {
    const Member r = space.member(index);
    Member s;
    bool related = true;
    for (const Relation& slot : r) {
      Relation image = similarity_image(p, slot);
      if (!lift_holds(p, slot, image)) {
        related = false;
        break;
      }
      s.push_back(std::move(image));
    }
    if (related && quantifier.contains(r) != quantifier.contains(s)) return false;
  }
  return true;
}

SimResult sim_detailed(const Structure& structure, const Limits& limits) {
  const std::size_t n = structure.domain_size();
  require_similarity_space(n, limits, "sim");
  SimEquivResult equiv = sim_equiv_detailed(structure, limits);
  Structure quotient = quotient_structure(structure, equiv.equivalence);
  PermutationSet group = aut(quotient, limits);
  std::vector<bool> seen(std::size_t{1} << (n * n), false);
  for (const Permutation& f : group.elements()) {
    mark_subsimilarities(lift_permutation(f, equiv.equivalence), seen);
  }
  return {equiv.equivalence, equiv.arity_bound, std::move(quotient),
          std::move(group), SimilaritySet(n, from_flags(n, seen))};
}

SimilaritySet sim(const Structure& structure, const Limits& limits) {
  return sim_detailed(structure, limits).members;
}

SimilaritySet sim_bruteforce(const Structure& structure,
                             const EquivalencePartition& e,
                             const Limits& limits) {
  const std::size_t n = structure.domain_size();
  require_similarity_space(n, limits, "sim_bruteforce");
  std::vector<std::pair<const Quantifier*, SaturatedMembers>> quantifiers;
  for (const auto& [name, q] : structure.quantifiers()) {
    quantifiers.emplace_back(&q, saturated_members(q, e, limits));
  }
  std::vector<Similarity> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask) {
    if (!is_similarity_mask(n, mask)) continue;
    const Similarity p(n, mask);
    bool ok = true;
    for (const auto& [name, r] : structure.relations()) {
      if (!sim_invariant(p, r)) {
        ok = false;
        break;
      }
    }
    for (std::size_t i = 0; ok && i < quantifiers.size(); ++i) {
      ok = sim_invariant_on(p, *quantifiers[i].first, e, quantifiers[i].second);
    }
    if (ok) out.push_back(p);
  }
  return SimilaritySet(n, std::move(out));
}

SimInvariantFamily::SimInvariantFamily(EquivalencePartition approx,
                                       InvariantFamily quotient)
    : approx_(std::move(approx)), quotient_(std::move(quotient)) {}

bool SimInvariantFamily::contains(const Relation& relation) const {
  return saturated(relation, approx_) &&
         quotient_.contains(quotient_relation(relation, approx_));
}

bool SimInvariantFamily::contains(const Quantifier& quantifier) const {
  return quotient_.contains(quotient_quantifier(quantifier, approx_));
}

PermutationSet quotient_group(const SimilaritySet& set,
                              const EquivalencePartition& approx,
                              const Limits& limits) {
  const SimilaritySet closed = monoid_closure(maxima(set));
  std::vector<Permutation> gens;
  const auto top = maxima(closed);
  for (const Similarity& p : top.members()) {
    gens.push_back(quotient_similarity(p, approx));
  }
  return generate(PermutationSet(approx.block_count(), std::move(gens)), limits);
}

SimInvariantFamily inv_sim(const SimilaritySet& set, unsigned k_max,
                           const std::vector<QuantifierType>& types,
                           const Limits& limits) {
  EquivalencePartition approx = approx_equiv(set);
  PermutationSet group = quotient_group(set, approx, limits);
  return SimInvariantFamily(approx, inv(group, k_max, types, limits));
}

Structure inv_sim_structure(const SimilaritySet& set, const Limits& limits) {
  const EquivalencePartition approx = approx_equiv(set);
  const PermutationSet group = quotient_group(set, approx, limits);
  const Structure canonical = canonical_structure(
      group, static_cast<unsigned>(approx.block_count()), limits);
  return lift_structure(canonical, approx);
}

SimilaritySet sim_of_inv(const SimilaritySet& set, const Limits& limits) {
  return sim(inv_sim_structure(set, limits), limits);
}

Quantifier restrict_quantifier(const Structure& structure,
                               const Quantifier& quantifier,
                               const Limits& limits) {
  if (quantifier.domain_size() != structure.domain_size()) {
    fail(ErrorKind::kDomainMismatch, "quantifier and structure domains differ");
  }
  const SimEquivResult equiv = sim_equiv_detailed(structure, limits);
  unsigned bound = equiv.arity_bound;
  for (unsigned arity : quantifier.type().slots()) bound = std::max(bound, arity);
  const DefinableClosure closure =
      definable_closure_eqfree(structure, bound, true, limits);
  std::vector<Member> kept;
  for (const Member& m : quantifier.members()) {
    bool ok = true;
    for (const Relation& r : m) ok = ok && closure.contains(r);
    if (ok) kept.push_back(m);
  }
  return Quantifier(quantifier.domain_size(), quantifier.type(), std::move(kept));
}

}  // namespace galdual
