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

#include "galdual/groups.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "galdual/error.hpp"

namespace galdual {

namespace {

void require_degree(std::size_t n, const Limits& limits, const char* what) {
  if (n > limits.max_group_degree) {
    fail(ErrorKind::kResourceLimit,
         std::string(what) + ": degree " + std::to_string(n) +
             " exceeds the group guard max_group_degree=" +
             std::to_string(limits.max_group_degree));
  }
}

std::uint64_t subset_space(std::size_t n, unsigned m, const Limits& limits,
                           const char* what) {
  const std::uint64_t bits = static_cast<std::uint64_t>(n) * m;
  if (bits >= 63) {
    require_index_space(std::numeric_limits<std::uint64_t>::max(), limits,
                        what);
  }
  const std::uint64_t size = std::uint64_t{1} << bits;
  require_index_space(size, limits, what);
  return size;
}

// Action of g* on m-sequences of subsets, sequences packed as m groups of
// n bits with slot 0 least significant.
std::vector<std::uint32_t> sequence_action(
    const std::vector<std::uint32_t>& subset_table, std::size_t n, unsigned m) {
  const std::size_t size = std::size_t{1} << (n * m);
  const std::uint32_t slot_mask = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint32_t> image(size);
  for (std::size_t seq = 0; seq < size; ++seq) {
    std::uint32_t out = 0;
    for (unsigned j = 0; j < m; ++j) {
      const std::uint32_t subset = (seq >> (j * n)) & slot_mask;
      out |= subset_table[subset] << (j * n);
    }
    image[seq] = out;
  }
  return image;
}

bool preserves_blocks(const OrbitPartition& orbits,
                      const std::vector<std::uint32_t>& action) {
  for (std::size_t i = 0; i < action.size(); ++i) {
    if (orbits.block_of(action[i]) != orbits.block_of(i)) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// PermutationSet

PermutationSet::PermutationSet(std::size_t n) : n_(n) {
  if (n == 0) fail(ErrorKind::kInvalidArgument, "permutation set of degree 0");
}

PermutationSet::PermutationSet(std::size_t n, std::vector<Permutation> elements)
    : PermutationSet(n) {
  for (const Permutation& g : elements) {
    if (g.degree() != n) {
      fail(ErrorKind::kDomainMismatch,
           "permutation of degree " + std::to_string(g.degree()) +
               " in a set of degree " + std::to_string(n));
    }
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  elements_ = std::move(elements);
}

bool PermutationSet::contains(const Permutation& g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

bool PermutationSet::verify_group() const {
  if (!contains(Permutation::identity(n_))) return false;
  for (const Permutation& g : elements_) {
    if (!contains(g.inverse())) return false;
    for (const Permutation& h : elements_) {
      if (!contains(compose(g, h))) return false;
    }
  }
  return true;
}

const std::vector<Permutation>& PermutationSet::generators() const {
  return is_group_ && !generators_.empty() ? generators_ : elements_;
}

PermutationSet mark_group(PermutationSet set) {
  set.is_group_ = true;
  return set;
}

PermutationSet generate(const PermutationSet& gens, const Limits& limits) {
  const std::size_t n = gens.degree();
  require_degree(n, limits, "generate");
  std::set<Permutation> seen;
  std::deque<Permutation> queue;
  const Permutation id = Permutation::identity(n);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const Permutation& s : gens.elements()) {
      Permutation y = compose(s, x);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  PermutationSet result(n, std::vector<Permutation>(seen.begin(), seen.end()));
  result.is_group_ = true;
  for (const Permutation& s : gens.elements()) {
    if (!s.is_identity()) result.generators_.push_back(s);
  }
  if (result.generators_.empty()) result.generators_.push_back(id);
  return result;
}

PermutationSet all_permutations(std::size_t n, const Limits& limits) {
  require_degree(n, limits, "all_permutations");
  std::vector<Element> images(n);
  std::iota(images.begin(), images.end(), Element{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  PermutationSet result(n, std::move(out));
  return mark_group(std::move(result));
}

PermutationSet symmetric_generators(std::size_t n) {
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
  if (n >= 3) {
    std::vector<Element> cycle(n);
    std::iota(cycle.begin(), cycle.end(), Element{0});
    gens.push_back(Permutation::from_cycles(n, {cycle}));
  }
  return PermutationSet(n, std::move(gens));
}

PermutationSet alternating_generators(std::size_t n) {
  std::vector<Permutation> gens;
  for (Element i = 2; i < n; ++i) {
    gens.push_back(Permutation::from_cycles(n, {{0, 1, i}}));
  }
  return PermutationSet(n, std::move(gens));
}

PermutationSet cyclic_generators(std::size_t n) {
  std::vector<Element> cycle(n);
  std::iota(cycle.begin(), cycle.end(), Element{0});
  if (n == 1) return PermutationSet(n);
  return PermutationSet(n, {Permutation::from_cycles(n, {cycle})});
}

// ---------------------------------------------------------------------------
// Orbits

OrbitPartition::OrbitPartition(unsigned arity, std::vector<std::uint32_t> block,
                               std::size_t block_count)
    : arity_(arity), block_(std::move(block)), block_count_(block_count) {}

std::vector<std::vector<std::size_t>> OrbitPartition::orbits() const {
  std::vector<std::vector<std::size_t>> out(block_count_);
  for (std::size_t i = 0; i < block_.size(); ++i) out[block_[i]].push_back(i);
  return out;
}

OrbitPartition orbits_of_actions(
    std::size_t size, unsigned arity,
    const std::vector<std::vector<std::uint32_t>>& actions) {
  constexpr std::uint32_t kUnseen = ~std::uint32_t{0};
  std::vector<std::uint32_t> block(size, kUnseen);
  std::uint32_t next = 0;
  std::vector<std::uint32_t> stack;
  for (std::size_t start = 0; start < size; ++start) {
    if (block[start] != kUnseen) continue;
    block[start] = next;
    stack.push_back(static_cast<std::uint32_t>(start));
    while (!stack.empty()) {
      std::uint32_t i = stack.back();
      stack.pop_back();
      for (const auto& action : actions) {
        std::uint32_t j = action[i];
        if (block[j] == kUnseen) {
          block[j] = next;
          stack.push_back(j);
        }
      }
    }
    ++next;
  }
  return OrbitPartition(arity, std::move(block), next);
}

OrbitPartition orbits(const PermutationSet& h, unsigned arity,
                      const Limits& limits) {
  const std::size_t n = h.degree();
  require_index_space(checked_power(n, arity), limits, "orbits");
  std::vector<std::vector<std::uint32_t>> actions;
  for (const Permutation& g : h.generators()) {
    actions.push_back(index_action(g, arity));
  }
  return orbits_of_actions(tuple_count(n, arity), arity, actions);
}

Structure canonical_structure(const PermutationSet& h, unsigned k_max,
                              const Limits& limits) {
  const std::size_t n = h.degree();
  Structure structure(n);
  for (unsigned k = 1; k <= k_max; ++k) {
    const OrbitPartition partition = orbits(h, k, limits);
    const auto blocks = partition.orbits();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      Relation r(n, k);
      for (std::size_t index : blocks[i]) r.insert_index(index);
      structure.add_relation(
          "orb_" + std::to_string(k) + "_" + std::to_string(i), std::move(r));
    }
  }
  return structure;
}

PermutationSet tuple_coset(std::size_t n, const Tuple& a, const Tuple& b,
                           const Limits& limits) {
  if (a.size() != b.size()) {
    fail(ErrorKind::kInvalidArgument, "tuple_coset: tuples of length " +
                                          std::to_string(a.size()) + " and " +
                                          std::to_string(b.size()));
  }
  constexpr Element kUnset = ~Element{0};
  std::vector<Element> forward(n, kUnset), backward(n, kUnset);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] >= n || b[i] >= n) {
      fail(ErrorKind::kDomainMismatch, "tuple_coset: entry outside domain");
    }
    if (forward[a[i]] == kUnset && backward[b[i]] == kUnset) {
      forward[a[i]] = b[i];
      backward[b[i]] = a[i];
    } else if (forward[a[i]] != b[i] || backward[b[i]] != a[i]) {
      return PermutationSet(n);
    }
  }
  std::vector<Element> free_points, free_images;
  for (Element x = 0; x < n; ++x) {
    if (forward[x] == kUnset) free_points.push_back(x);
    if (backward[x] == kUnset) free_images.push_back(x);
  }
  require_degree(free_points.size(), limits, "tuple_coset");
  std::vector<Permutation> out;
  do {
    std::vector<Element> images = forward;
    for (std::size_t i = 0; i < free_points.size(); ++i) {
      images[free_points[i]] = free_images[i];
    }
    out.emplace_back(std::move(images));
  } while (std::next_permutation(free_images.begin(), free_images.end()));
  return PermutationSet(n, std::move(out));
}

PermutationSet k_closure(const PermutationSet& h, unsigned k,
                         const Limits& limits) {
  const std::size_t n = h.degree();
  require_degree(n, limits, "k_closure");
  const OrbitPartition partition = orbits(h, k, limits);
  std::vector<Permutation> kept;
  const auto candidates = all_permutations(n, limits);
  for (const Permutation& g : candidates.elements()) {
    if (preserves_blocks(partition, index_action(g, k))) kept.push_back(g);
  }
  return mark_group(PermutationSet(n, std::move(kept)));
}

std::vector<std::uint32_t> set_action(const Permutation& g,
                                      const Limits& limits) {
  const std::size_t n = g.degree();
  const std::uint64_t size = subset_space(n, 1, limits, "set_action");
  std::vector<std::uint32_t> image(size);
  for (std::uint64_t subset = 0; subset < size; ++subset) {
    std::uint32_t out = 0;
    for (Element a = 0; a < n; ++a) {
      if ((subset >> a) & 1u) out |= std::uint32_t{1} << g(a);
    }
    image[subset] = out;
  }
  return image;
}

namespace {

OrbitPartition sequence_orbits(const PermutationSet& h, unsigned m,
                               const Limits& limits) {
  const std::size_t n = h.degree();
  const std::uint64_t size = subset_space(n, m, limits, "subset sequences");
  std::vector<std::vector<std::uint32_t>> actions;
  for (const Permutation& g : h.generators()) {
    actions.push_back(sequence_action(set_action(g, limits), n, m));
  }
  return orbits_of_actions(size, m, actions);
}

}  // namespace

PermutationSet set_closure(const PermutationSet& h, unsigned m,
                           const Limits& limits) {
  const std::size_t n = h.degree();
  require_degree(n, limits, "set_closure");
  const OrbitPartition partition = sequence_orbits(h, m, limits);
  std::vector<Permutation> kept;
  const auto candidates = all_permutations(n, limits);
  for (const Permutation& g : candidates.elements()) {
    if (preserves_blocks(partition,
                         sequence_action(set_action(g, limits), n, m))) {
      kept.push_back(g);
    }
  }
  return mark_group(PermutationSet(n, std::move(kept)));
}

Structure canonical_monadic_structure(const PermutationSet& h, unsigned m,
                                      const Limits& limits) {
  if (m == 0) fail(ErrorKind::kInvalidArgument, "slot count must be >= 1");
  const std::size_t n = h.degree();
  const OrbitPartition partition = sequence_orbits(h, m, limits);
  const std::uint64_t slot_mask = (std::uint64_t{1} << n) - 1;
  const QuantifierType type(std::vector<unsigned>(m, 1));
  Structure structure(n);
  const auto blocks = partition.orbits();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    std::vector<Member> members;
    members.reserve(blocks[i].size());
    for (std::size_t seq : blocks[i]) {
      Member member;
      for (unsigned j = 0; j < m; ++j) {
        member.push_back(
            Relation::from_subset_mask(n, (seq >> (j * n)) & slot_mask));
      }
      members.push_back(std::move(member));
    }
    structure.add_quantifier(
        "sorb_" + std::to_string(m) + "_" + std::to_string(i),
        Quantifier(n, type, std::move(members)));
  }
  return structure;
}

void require_strict_total_order(const Relation& ord) {
  if (ord.arity() != 2) {
    fail(ErrorKind::kPrecondition, "order must be a binary relation");
  }
  const std::size_t n = ord.domain_size();
  auto less = [&](Element a, Element b) {
    return ord.contains_index(a * n + b);
  };
  for (Element a = 0; a < n; ++a) {
    if (less(a, a)) fail(ErrorKind::kPrecondition, "order is not irreflexive");
    for (Element b = 0; b < n; ++b) {
      if (a != b && less(a, b) == less(b, a)) {
        fail(ErrorKind::kPrecondition,
             "order is not total and antisymmetric at (" + std::to_string(a) +
                 "," + std::to_string(b) + ")");
      }
      for (Element c = 0; c < n; ++c) {
        if (less(a, b) && less(b, c) && !less(a, c)) {
          fail(ErrorKind::kPrecondition, "order is not transitive");
        }
      }
    }
  }
}

PermutationSet order_coset(const Permutation& g, const Relation& ord,
                           const Limits& limits) {
  if (g.degree() != ord.domain_size()) {
    fail(ErrorKind::kDomainMismatch, "order and permutation differ in size");
  }
  require_strict_total_order(ord);
  const Relation target = apply_perm_relation(g, ord);
  std::vector<Permutation> kept;
  const auto candidates = all_permutations(g.degree(), limits);
  for (const Permutation& h : candidates.elements()) {
    if (apply_perm_relation(h, ord) == target) kept.push_back(h);
  }
  return PermutationSet(g.degree(), std::move(kept));
}

std::vector<Element> support(const Permutation& g) {
  std::vector<Element> moved;
  for (Element a = 0; a < g.degree(); ++a) {
    if (g(a) != a) moved.push_back(a);
  }
  return moved;
}

}  // namespace galdual
