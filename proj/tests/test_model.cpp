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

#include "galdual/error.hpp"
#include "galdual/model.hpp"
#include "oracles.hpp"

using namespace galdual;

namespace {

Relation unary(std::size_t n, std::vector<Element> elements) {
  std::vector<Tuple> tuples;
  for (Element a : elements) tuples.push_back({a});
  return Relation::from_tuples(n, 1, tuples);
}

Permutation cycle012() { return Permutation::from_cycles(3, {{0, 1, 2}}); }

}  // namespace

TEST(TupleCoding, LexicographicIndices) {
  EXPECT_EQ(tuple_count(3, 2), 9u);
  EXPECT_EQ(tuple_count(4, 0), 1u);
  const Tuple t{1, 0, 2};
  EXPECT_EQ(encode_tuple(3, t), 11u);
  EXPECT_EQ(decode_tuple(3, 3, 11), t);
  for (std::size_t i = 0; i < 27; ++i) {
    EXPECT_EQ(encode_tuple(3, decode_tuple(3, 3, i)), i);
  }
}

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation({0, 0}), Error);
  EXPECT_THROW(Permutation({0, 2}), Error);
}

TEST(Permutation, CyclesAndInverse) {
  const Permutation g = cycle012();
  EXPECT_EQ(g.images(), (std::vector<Element>{1, 2, 0}));
  EXPECT_EQ(g.to_cycle_string(), "(0 1 2)");
  EXPECT_EQ(Permutation::identity(3).to_cycle_string(), "()");
  EXPECT_TRUE(compose(g, g.inverse()).is_identity());
  // g(h(x)): apply h first.
  const Permutation h = Permutation::from_cycles(3, {{0, 1}});
  EXPECT_EQ(compose(g, h)(0), g(h(0)));
}

TEST(ApplyPermTuple, Examples) {
  EXPECT_EQ(apply_perm_tuple(Permutation::identity(3), Tuple{0, 2}), (Tuple{0, 2}));
  EXPECT_EQ(apply_perm_tuple(Permutation({1, 0}), Tuple{0, 1}), (Tuple{1, 0}));
  EXPECT_EQ(apply_perm_tuple(cycle012(), Tuple{0, 0, 2}), (Tuple{1, 1, 0}));
  EXPECT_THROW(apply_perm_tuple(Permutation({1, 0}), Tuple{0, 2}), Error);
}

TEST(ApplyPermRelation, Examples) {
  EXPECT_EQ(apply_perm_relation(Permutation::identity(2), unary(2, {0})), unary(2, {0}));
  EXPECT_EQ(apply_perm_relation(Permutation({1, 0}), unary(2, {0})), unary(2, {1}));
  const Relation r = Relation::from_tuples(3, 2, {{0, 1}, {1, 2}});
  EXPECT_EQ(apply_perm_relation(cycle012(), r),
            Relation::from_tuples(3, 2, {{1, 2}, {2, 0}}));
  EXPECT_THROW(apply_perm_relation(cycle012(), unary(2, {0})), Error);
}

TEST(ApplyPermQuantifier, Examples) {
  const Quantifier q(2, QuantifierType{1}, {Member{unary(2, {0})}});
  EXPECT_EQ(apply_perm_quantifier(Permutation::identity(2), q), q);
  EXPECT_EQ(apply_perm_quantifier(Permutation({1, 0}), q),
            Quantifier(2, QuantifierType{1}, {Member{unary(2, {1})}}));
  const Quantifier q3(3, QuantifierType{1}, {Member{unary(3, {0, 2})}});
  EXPECT_EQ(apply_perm_quantifier(cycle012(), q3),
            Quantifier(3, QuantifierType{1}, {Member{unary(3, {0, 1})}}));
}

TEST(Quantifier, MembersMustMatchType) {
  Quantifier q(3, QuantifierType{1, 2});
  EXPECT_THROW(q.insert(Member{unary(3, {0})}), Error);
  EXPECT_THROW(q.insert(Member{unary(3, {0}), unary(3, {1})}), Error);
  q.insert(Member{unary(3, {0}), Relation(3, 2)});
  q.insert(Member{unary(3, {0}), Relation(3, 2)});
  EXPECT_EQ(q.size(), 1u);
}

TEST(Preserves, Examples) {
  Structure any(2);
  any.add_relation("P", unary(2, {0}));
  EXPECT_TRUE(preserves(Permutation::identity(2), any));
  EXPECT_FALSE(preserves(Permutation({1, 0}), any));
  Structure s(3);
  s.add_quantifier("Q", Quantifier(3, QuantifierType{1}, {Member{unary(3, {0, 1})}}));
  EXPECT_TRUE(preserves(Permutation({1, 0, 2}), s));
  EXPECT_FALSE(preserves(Permutation({2, 1, 0}), s));
}

TEST(Structure, NamesAreUniqueAcrossKinds) {
  Structure s(2);
  s.add_relation("P", unary(2, {0}));
  EXPECT_THROW(s.add_quantifier("P", Quantifier(2, QuantifierType{1})), Error);
  EXPECT_THROW(s.add_relation("Q", unary(3, {0})), Error);
  EXPECT_EQ(s.fresh_name("P"), "P_0");
  EXPECT_EQ(s.fresh_name("R"), "R");
}

TEST(Saturated, Examples) {
  EXPECT_TRUE(saturated(unary(3, {0}), EquivalencePartition::equality(3)));
  EXPECT_FALSE(saturated(unary(2, {0}), EquivalencePartition::single_block(2)));
  EXPECT_TRUE(saturated(unary(3, {0, 1}), EquivalencePartition({0, 0, 1})));
  EXPECT_TRUE(saturated(Relation(3, 2), EquivalencePartition::single_block(3)));
  EXPECT_TRUE(saturated(Relation::full(3, 2), EquivalencePartition({0, 1, 0})));
}

TEST(Saturated, AgreesWithPairwiseOracle) {
  std::mt19937_64 rng(7);
  for (const auto& blocks : oracle::set_partitions(3)) {
    const EquivalencePartition e(blocks);
    for (int i = 0; i < 20; ++i) {
      Relation r(3, 2);
      for (std::size_t t = 0; t < 9; ++t) {
        if (rng() % 3 == 0) r.insert_index(t);
      }
      EXPECT_EQ(saturated(r, e), oracle::saturated_by(r, blocks));
    }
  }
}

TEST(EquivalencePartition, CanonicalIds) {
  const EquivalencePartition e({5, 2, 5, 7});
  EXPECT_EQ(e.block_ids(), (std::vector<std::uint32_t>{0, 1, 0, 2}));
  EXPECT_EQ(e.block_count(), 3u);
  EXPECT_EQ(e.blocks(), (std::vector<std::vector<Element>>{{0, 2}, {1}, {3}}));
  EXPECT_EQ(EquivalencePartition::from_relation(e.as_relation()), e);
  EXPECT_TRUE(EquivalencePartition::equality(4).refines(e));
  EXPECT_FALSE(e.refines(EquivalencePartition::equality(4)));
  EXPECT_THROW(EquivalencePartition::from_relation(Relation::from_tuples(2, 2, {{0, 1}})),
               Error);
}

TEST(EnumerateRelations, Counts) {
  auto count = [](std::size_t n, unsigned k) {
    std::size_t c = 0;
    for (const Relation& r : enumerate_relations(Domain(n), k)) {
      (void)r;
      ++c;
    }
    return c;
  };
  EXPECT_EQ(count(1, 1), 2u);
  EXPECT_EQ(count(2, 1), 4u);
  EXPECT_EQ(count(2, 2), 16u);
  std::vector<Relation> first;
  for (const Relation& r : enumerate_relations(Domain(1), 1)) first.push_back(r);
  EXPECT_TRUE(first[0].empty());
  EXPECT_TRUE(first[1].is_full());
}

TEST(EnumerateRelations, GuardNamesTheBound) {
  Limits tight;
  tight.max_tuples = 8;
  try {
    enumerate_relations(Domain(3), 2, tight);
    FAIL() << "expected a resource-limit error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kResourceLimit);
    EXPECT_NE(std::string(e.what()).find("max_tuples"), std::string::npos);
  }
}

TEST(MemberSpace, RoundTripsIndices) {
  const MemberSpace space(3, QuantifierType{1, 2}, Limits{});
  EXPECT_EQ(space.size(), std::uint64_t{1} << 12);
  for (std::uint64_t i = 0; i < space.size(); i += 37) {
    EXPECT_EQ(space.index(space.member(i)), i);
  }
}

// Action laws over random permutations and relations.
TEST(ActionLaws, CompositionIdentityAndCardinality) {
  std::mt19937_64 rng(11);
  const auto perms = oracle::all_images(4);
  for (int trial = 0; trial < 60; ++trial) {
    const Permutation g(perms[rng() % perms.size()]);
    const Permutation h(perms[rng() % perms.size()]);
    Relation r(4, 2);
    for (std::size_t t = 0; t < 16; ++t) {
      if (rng() % 2) r.insert_index(t);
    }
    EXPECT_EQ(apply_perm_relation(compose(g, h), r),
              apply_perm_relation(g, apply_perm_relation(h, r)));
    EXPECT_EQ(apply_perm_relation(Permutation::identity(4), r), r);
    EXPECT_EQ(apply_perm_relation(g, r).cardinality(), r.cardinality());
    EXPECT_EQ(apply_perm_relation(g, r), oracle::image_of(g.images(), r));

    Quantifier q(4, QuantifierType{1});
    for (int m = 0; m < 4; ++m) {
      q.insert(Member{Relation::from_subset_mask(4, rng() % 16)});
    }
    EXPECT_EQ(apply_perm_quantifier(compose(g, h), q),
              apply_perm_quantifier(g, apply_perm_quantifier(h, q)));
    EXPECT_EQ(apply_perm_quantifier(g, q).size(), q.size());
  }
}

TEST(ActionLaws, PreservingPermutationsFormAGroup) {
  Structure s(4);
  s.add_relation("E", Relation::from_tuples(4, 2, {{0, 1}, {1, 0}, {2, 3}, {3, 2}}));
  std::vector<Permutation> kept;
  for (const auto& images : oracle::all_images(4)) {
    if (preserves(Permutation(images), s)) kept.emplace_back(images);
  }
  for (const Permutation& g : kept) {
    EXPECT_TRUE(preserves(g.inverse(), s));
    for (const Permutation& h : kept) EXPECT_TRUE(preserves(compose(g, h), s));
  }
  EXPECT_EQ(kept.size(), 8u);
}
