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

#include <gtest/gtest.h>

#include <random>

#include "galdual/duality.hpp"
#include "galdual/error.hpp"
#include "galdual/groups.hpp"
#include "oracles.hpp"

using namespace galdual;

namespace {

PermutationSet c3() { return PermutationSet(3, {Permutation::from_cycles(3, {{0, 1, 2}})}); }

std::set<oracle::Images> as_images(const PermutationSet& set) {
  std::set<oracle::Images> out;
  for (const Permutation& g : set.elements()) out.insert(g.images());
  return out;
}

// { g : every k-tuple is moved by g as by some element of the group }.
std::set<oracle::Images> naive_k_closure(std::size_t n,
                                         const std::set<oracle::Images>& group,
                                         unsigned k) {
  std::set<oracle::Images> out;
  for (const auto& g : oracle::all_images(n)) {
    bool ok = true;
    for (std::size_t i = 0; i < tuple_count(n, k) && ok; ++i) {
      const Tuple a = decode_tuple(n, k, i);
      bool matched = false;
      for (const auto& h : group) {
        bool same = true;
        for (Element x : a) same = same && g[x] == h[x];
        if (same) {
          matched = true;
          break;
        }
      }
      ok = matched;
    }
    if (ok) out.insert(g);
  }
  return out;
}

std::set<oracle::Images> naive_set_closure(std::size_t n,
                                           const std::set<oracle::Images>& group,
                                           unsigned m) {
  auto image = [](const oracle::Images& g, unsigned subset) {
    unsigned out = 0;
    for (std::size_t a = 0; a < g.size(); ++a) {
      if ((subset >> a) & 1u) out |= 1u << g[a];
    }
    return out;
  };
  const unsigned subsets = 1u << n;
  std::uint64_t sequences = 1;
  for (unsigned i = 0; i < m; ++i) sequences *= subsets;
  std::set<oracle::Images> out;
  for (const auto& g : oracle::all_images(n)) {
    bool ok = true;
    for (std::uint64_t s = 0; s < sequences && ok; ++s) {
      bool matched = false;
      for (const auto& h : group) {
        bool same = true;
        std::uint64_t rest = s;
        for (unsigned i = 0; i < m; ++i, rest /= subsets) {
          const unsigned a = static_cast<unsigned>(rest % subsets);
          same = same && image(g, a) == image(h, a);
        }
        if (same) {
          matched = true;
          break;
        }
      }
      ok = matched;
    }
    if (ok) out.insert(g);
  }
  return out;
}

}  // namespace

TEST(Generate, Examples) {
  EXPECT_EQ(generate(PermutationSet(3)).size(), 1u);
  EXPECT_EQ(generate(PermutationSet(2, {Permutation({1, 0})})).size(), 2u);
  EXPECT_EQ(generate(symmetric_generators(3)).size(), 6u);
  EXPECT_EQ(generate(alternating_generators(4)).size(), 12u);
  EXPECT_EQ(generate(cyclic_generators(5)).size(), 5u);
  EXPECT_TRUE(generate(alternating_generators(4)).verify_group());
}

TEST(Generate, MatchesWordClosureOracle) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    const auto all = oracle::all_images(n);
    std::vector<Permutation> gens;
    std::vector<oracle::Images> raw;
    for (int i = 0; i < 1 + static_cast<int>(rng() % 3); ++i) {
      raw.push_back(all[rng() % all.size()]);
      gens.emplace_back(raw.back());
    }
    const PermutationSet g = generate(PermutationSet(n, gens));
    EXPECT_EQ(as_images(g), oracle::closure(n, raw));
    EXPECT_TRUE(g.is_group());
  }
}

TEST(Generate, GuardOnDegree) {
  Limits tight;
  tight.max_group_degree = 4;
  EXPECT_THROW(generate(symmetric_generators(5), tight), Error);
}

TEST(Orbits, Examples) {
  const OrbitPartition trivial = orbits(PermutationSet(2), 1);
  EXPECT_EQ(trivial.block_count(), 2u);
  EXPECT_EQ(orbits(generate(symmetric_generators(3)), 1).block_count(), 1u);
  const OrbitPartition pairs = orbits(c3(), 2);
  ASSERT_EQ(pairs.block_count(), 3u);
  // Blocks are the differences b - a mod 3.
  for (std::size_t i = 0; i < 9; ++i) {
    const Tuple t = decode_tuple(3, 2, i);
    EXPECT_EQ(pairs.block_of(i), (t[1] + 3 - t[0]) % 3 == 0 ? 0u
                                 : (t[1] + 3 - t[0]) % 3 == 1 ? 1u
                                                              : 2u);
  }
}

TEST(CanonicalStructure, Examples) {
  const Structure s3 = canonical_structure(generate(symmetric_generators(3)), 1);
  ASSERT_EQ(s3.relations().size(), 1u);
  EXPECT_TRUE(s3.relations().begin()->second.is_full());

  const Structure id2 = canonical_structure(PermutationSet(2), 1);
  ASSERT_EQ(id2.relations().size(), 2u);
  EXPECT_EQ(*id2.find_relation("orb_1_0"), Relation::from_tuples(2, 1, {{0}}));
  EXPECT_EQ(*id2.find_relation("orb_1_1"), Relation::from_tuples(2, 1, {{1}}));

  const Structure a4 = canonical_structure(generate(alternating_generators(4)), 2);
  ASSERT_EQ(a4.relations().size(), 3u);
  const Relation& diagonal = *a4.find_relation("orb_2_0");
  const Relation& distinct = *a4.find_relation("orb_2_1");
  EXPECT_EQ(diagonal.cardinality(), 4u);
  EXPECT_EQ(distinct.cardinality(), 12u);
  EXPECT_TRUE(diagonal.contains(Tuple{2, 2}));
}

TEST(TupleCoset, Examples) {
  EXPECT_EQ(tuple_coset(2, {}, {}).size(), 2u);
  const PermutationSet swap = tuple_coset(2, {0, 1}, {1, 0});
  ASSERT_EQ(swap.size(), 1u);
  EXPECT_EQ(swap.elements()[0], Permutation({1, 0}));
  EXPECT_EQ(tuple_coset(3, {0}, {1}).size(), 2u);
  EXPECT_TRUE(tuple_coset(3, {0, 0}, {0, 1}).empty());
  EXPECT_TRUE(tuple_coset(3, {0, 1}, {2, 2}).empty());
  EXPECT_THROW(tuple_coset(3, {0}, {0, 1}), Error);
}

TEST(KClosure, Examples) {
  EXPECT_EQ(k_closure(PermutationSet(3), 1).size(), 1u);
  EXPECT_EQ(k_closure(c3(), 1).size(), 6u);
  EXPECT_EQ(k_closure(c3(), 2), generate(c3()));
  EXPECT_EQ(k_closure(alternating_generators(4), 2).size(), 24u);
  EXPECT_EQ(k_closure(alternating_generators(4), 3).size(), 12u);
}

TEST(KClosure, MatchesDefinitionAndChainLaws) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 3 + rng() % 2;
    const auto all = oracle::all_images(n);
    std::vector<Permutation> gens{Permutation(all[rng() % all.size()])};
    if (rng() % 2) gens.emplace_back(all[rng() % all.size()]);
    const PermutationSet h(n, gens);
    const PermutationSet group = generate(h);
    PermutationSet previous = all_permutations(n);
    for (unsigned k = 1; k <= n; ++k) {
      const PermutationSet closure = k_closure(h, k);
      EXPECT_EQ(as_images(closure), naive_k_closure(n, as_images(group), k));
      for (const Permutation& g : group.elements()) EXPECT_TRUE(closure.contains(g));
      for (const Permutation& g : closure.elements()) EXPECT_TRUE(previous.contains(g));
      EXPECT_EQ(k_closure(closure, k), closure);
      EXPECT_EQ(aut(canonical_structure(group, k)), closure);
      EXPECT_TRUE(closure.verify_group());
      previous = closure;
    }
    EXPECT_EQ(k_closure(h, static_cast<unsigned>(n)), group);
  }
}

TEST(SetAction, ExamplesAndHomomorphism) {
  const auto id = set_action(Permutation::identity(3));
  for (std::uint32_t a = 0; a < 8; ++a) EXPECT_EQ(id[a], a);
  EXPECT_EQ(set_action(Permutation({1, 0}))[0b01], 0b10u);
  EXPECT_EQ(set_action(Permutation::from_cycles(3, {{0, 1, 2}}))[0b101], 0b011u);
  const auto all = oracle::all_images(4);
  for (std::size_t i = 0; i < all.size(); i += 5) {
    for (std::size_t j = 0; j < all.size(); j += 7) {
      const Permutation g(all[i]);
      const Permutation h(all[j]);
      const auto gh = set_action(compose(g, h));
      const auto gs = set_action(g);
      const auto hs = set_action(h);
      for (std::uint32_t a = 0; a < 16; ++a) {
        EXPECT_EQ(gh[a], gs[hs[a]]);
        EXPECT_EQ(gs[a ^ 15u], gs[a] ^ 15u);
      }
    }
  }
}

TEST(SetClosure, Examples) {
  EXPECT_EQ(set_closure(PermutationSet(3), 1).size(), 1u);
  EXPECT_EQ(set_closure(c3(), 1).size(), 6u);
  EXPECT_EQ(set_closure(alternating_generators(4), 4).size(), 12u);
}

TEST(SetClosure, MatchesDefinitionAndIsAntitone) {
  const std::vector<PermutationSet> cases = {
      c3(), PermutationSet(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}})}),
      PermutationSet(4, {Permutation::from_cycles(4, {{0, 1, 2, 3}})})};
  for (const PermutationSet& h : cases) {
    const std::size_t n = h.degree();
    const PermutationSet group = generate(h);
    PermutationSet previous = all_permutations(n);
    for (unsigned m = 1; m <= 2; ++m) {
      const PermutationSet closure = set_closure(h, m);
      EXPECT_EQ(as_images(closure), naive_set_closure(n, as_images(group), m));
      for (const Permutation& g : closure.elements()) EXPECT_TRUE(previous.contains(g));
      previous = closure;
    }
    EXPECT_EQ(set_closure(h, static_cast<unsigned>(n)), group);
  }
}

TEST(CanonicalMonadicStructure, Examples) {
  const Structure sizes = canonical_monadic_structure(generate(symmetric_generators(4)), 1);
  EXPECT_EQ(sizes.quantifiers().size(), 5u);
  for (const auto& [name, q] : sizes.quantifiers()) {
    std::set<std::size_t> cardinalities;
    for (const Member& m : q.members()) cardinalities.insert(m[0].cardinality());
    EXPECT_EQ(cardinalities.size(), 1u) << name;
  }
  EXPECT_EQ(canonical_monadic_structure(PermutationSet(2), 1).quantifiers().size(), 4u);
  const PermutationSet a4 = generate(alternating_generators(4));
  EXPECT_EQ(aut(canonical_monadic_structure(a4, 4)), a4);
}

TEST(OrderCoset, AlwaysSingleton) {
  const Relation less3 = Relation::from_tuples(3, 2, {{0, 1}, {0, 2}, {1, 2}});
  EXPECT_EQ(order_coset(Permutation::identity(3), less3).size(), 1u);
  const Relation less2 = Relation::from_tuples(2, 2, {{0, 1}});
  EXPECT_EQ(order_coset(Permutation({1, 0}), less2).elements(),
            std::vector<Permutation>{Permutation({1, 0})});
  Relation less4(4, 2);
  for (Element a = 0; a < 4; ++a) {
    for (Element b = a + 1; b < 4; ++b) less4.insert(Tuple{a, b});
  }
  const PermutationSet s4 = all_permutations(4);
  for (const Permutation& g : s4.elements()) {
    EXPECT_EQ(order_coset(g, less4).elements(), std::vector<Permutation>{g});
  }
}

TEST(OrderCoset, RejectsNonOrders) {
  const Relation partial = Relation::from_tuples(3, 2, {{0, 1}});
  try {
    order_coset(Permutation::identity(3), partial);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kPrecondition);
  }
  EXPECT_THROW(require_strict_total_order(Relation::from_tuples(2, 2, {{0, 0}, {0, 1}})),
               Error);
}

TEST(Support, Examples) {
  EXPECT_TRUE(support(Permutation::identity(3)).empty());
  EXPECT_EQ(support(Permutation::from_cycles(3, {{0, 1}})), (std::vector<Element>{0, 1}));
  EXPECT_EQ(support(Permutation::from_cycles(4, {{0, 1, 2}})),
            (std::vector<Element>{0, 1, 2}));
}
