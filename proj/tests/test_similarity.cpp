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

#include <queue>

#include "galdual/definable.hpp"
#include "galdual/error.hpp"
#include "galdual/laws.hpp"
#include "galdual/random.hpp"
#include "galdual/similarity.hpp"
#include "oracles.hpp"

using namespace galdual;

namespace {

Relation unary(std::size_t n, std::initializer_list<Element> elements) {
  Relation r(n, 1);
  for (Element a : elements) r.insert(Tuple{a});
  return r;
}

Structure qe_structure() {
  Structure s(4);
  s.add_relation("bot", Relation(4, 1));
  s.add_relation("top", Relation::full(4, 1));
  s.add_quantifier("QE", Quantifier(4, {1}, {{unary(4, {0, 2})}}));
  return s;
}

Limits degree4() {
  Limits limits;
  limits.max_similarity_degree = 4;
  return limits;
}

oracle::Pairs pairs_of(const Similarity& p) {
  return oracle::pairs_of_mask(p.domain_size(), p.mask());
}

Similarity from_pair_set(std::size_t n, const oracle::Pairs& pairs) {
  return Similarity::from_pairs(n, {pairs.begin(), pairs.end()});
}

// Closure under composition and converse with the identity, by search over
// pair sets.
std::set<oracle::Pairs> pair_monoid(std::size_t n, const SimilaritySet& set) {
  std::set<oracle::Pairs> out;
  std::queue<oracle::Pairs> todo;
  auto add = [&](const oracle::Pairs& p) {
    if (out.insert(p).second) todo.push(p);
  };
  oracle::Pairs id;
  for (Element a = 0; a < n; ++a) id.insert({a, a});
  add(id);
  for (const Similarity& p : set.members()) add(pairs_of(p));
  while (!todo.empty()) {
    const oracle::Pairs p = todo.front();
    todo.pop();
    add(oracle::converse(p));
    const std::vector<oracle::Pairs> current(out.begin(), out.end());
    for (const oracle::Pairs& q : current) {
      add(oracle::compose(p, q));
      add(oracle::compose(q, p));
    }
  }
  return out;
}

std::vector<std::uint32_t> approx_oracle(std::size_t n, const SimilaritySet& set) {
  const auto monoid = pair_monoid(n, set);
  std::vector<std::uint32_t> block(n);
  std::uint32_t next = 0;
  std::vector<bool> assigned(n, false);
  for (Element a = 0; a < n; ++a) {
    if (assigned[a]) continue;
    for (Element b = a; b < n; ++b) {
      bool related = false;
      for (const oracle::Pairs& p : monoid) {
        bool diagonal = true;
        for (Element c = 0; c < n; ++c) diagonal = diagonal && p.count({c, c});
        related = related || (diagonal && p.count({a, b}));
      }
      if (related) {
        block[b] = next;
        assigned[b] = true;
      }
    }
    ++next;
  }
  return block;
}

// Every subset of a member that is still total and onto.
bool downward_closed(const SimilaritySet& set) {
  const std::size_t n = set.domain_size();
  for (const Similarity& p : set.members()) {
    const std::uint64_t m = p.mask();
    for (std::uint64_t sub = m;; sub = (sub - 1) & m) {
      if (oracle::total_and_onto(n, oracle::pairs_of_mask(n, sub)) &&
          !set.contains(Similarity(n, sub))) {
        return false;
      }
      if (sub == 0) break;
    }
  }
  return true;
}

MonoidFlags naive_flags(const SimilaritySet& set) {
  const std::size_t n = set.domain_size();
  MonoidFlags f;
  f.composition = true;
  f.converse = true;
  for (const Similarity& p : set.members()) {
    f.converse = f.converse && set.contains(from_pair_set(n, oracle::converse(pairs_of(p))));
    for (const Similarity& q : set.members()) {
      f.composition = f.composition &&
                      set.contains(from_pair_set(n, oracle::compose(pairs_of(p), pairs_of(q))));
    }
  }
  const EquivalencePartition approx(approx_oracle(n, set));
  f.contains_approx = set.contains(Similarity(n, relation_mask(approx.as_relation())));
  f.subsimilarities = downward_closed(set);
  return f;
}

bool same_flags(const MonoidFlags& a, const MonoidFlags& b) {
  return a.composition == b.composition && a.converse == b.converse &&
         a.contains_approx == b.contains_approx && a.subsimilarities == b.subsimilarities;
}

}  // namespace

TEST(Similarity, IsSimilarity) {
  EXPECT_TRUE(is_similarity(Similarity::identity(3).as_relation()));
  EXPECT_FALSE(is_similarity(Relation(3, 2)));
  EXPECT_THROW(Similarity(2, 0b0001), Error);
  for (std::size_t n = 1; n <= 3; ++n) {
    std::size_t count = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n * n)); ++m) {
      const bool expected = oracle::total_and_onto(n, oracle::pairs_of_mask(n, m));
      EXPECT_EQ(is_similarity_mask(n, m), expected);
      count += expected;
    }
    EXPECT_EQ(count, n == 1 ? 1u : n == 2 ? 7u : 265u);
    EXPECT_EQ(all_similarities(n).size(), count);
  }
}

TEST(Similarity, ComposeAndConverse) {
  const Similarity p = Similarity::from_pairs(3, {{0, 1}, {1, 0}, {2, 2}});
  EXPECT_EQ(compose(Similarity::identity(3), p), p);
  EXPECT_EQ(compose(p, p), Similarity::identity(3));
  EXPECT_EQ(converse(converse(p)), p);
  Rng rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const Similarity a = random_similarity(n, rng);
    const Similarity b = random_similarity(n, rng);
    EXPECT_EQ(pairs_of(compose(a, b)), oracle::compose(pairs_of(a), pairs_of(b)));
    EXPECT_EQ(pairs_of(converse(a)), oracle::converse(pairs_of(a)));
    // Permutations are exactly the functional injective similarities.
    bool functional = true;
    for (Element x = 0; x < n; ++x) functional = functional && std::popcount(a.row(x)) == 1;
    EXPECT_EQ(a.is_permutation(), functional);
    if (functional) {
      EXPECT_EQ(Similarity::from_permutation(*a.as_permutation()), a);
    }
  }
}

TEST(Similarity, LiftHolds) {
  const Relation r = unary(3, {0, 1});
  EXPECT_TRUE(lift_holds(Similarity::identity(3), r, r));
  EXPECT_FALSE(lift_holds(Similarity::identity(3), r, unary(3, {0})));
  EXPECT_TRUE(lift_holds(Similarity::full(3), Relation(3, 2), Relation(3, 2)));
  EXPECT_THROW(lift_holds(Similarity::identity(3), r, Relation(3, 2)), Error);
  Rng rng(67);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const unsigned k = 1 + trial % 2;
    const Similarity p = random_similarity(n, rng, 0.15);
    const Relation a = random_relation(n, k, rng);
    const Relation b = trial % 3 ? similarity_image(p, a) : random_relation(n, k, rng);
    EXPECT_EQ(lift_holds(p, a, b), oracle::lifts(pairs_of(p), a, b));
  }
}

TEST(Similarity, Subsimilarities) {
  EXPECT_EQ(subsimilarities(Similarity::full(2)).size(), 7u);
  EXPECT_EQ(subsimilarities(Similarity::identity(3)),
            std::vector<Similarity>{Similarity::identity(3)});
}

TEST(SimilaritySet, FlagsMatchNaiveChecks) {
  Rng rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 2;
    SimilaritySet set = random_similarity_set(n, rng);
    if (trial % 4 == 1) set = monoid_closure(set);
    if (trial % 4 == 2) set = downward_closure(monoid_closure(set));
    if (trial % 4 == 3) set = full_monoid_closure(set);
    EXPECT_TRUE(same_flags(set.flags(), naive_flags(set))) << "trial " << trial;
  }
}

TEST(ApproxEquiv, Examples) {
  EXPECT_TRUE(approx_equiv(SimilaritySet(3, {Similarity::identity(3)})).is_equality());
  EXPECT_EQ(approx_equiv(SimilaritySet(3, {Similarity::full(3)})).block_count(), 1u);
  const Similarity p = Similarity::from_pairs(3, {{0, 1}, {1, 0}, {2, 2}});
  EXPECT_EQ(monoid_closure(SimilaritySet(3, {p})).size(), 2u);
  EXPECT_TRUE(approx_equiv(SimilaritySet(3, {p})).is_equality());
}

TEST(ApproxEquiv, MatchesOracleAndIsMonotone) {
  Rng rng(73);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const SimilaritySet set = random_similarity_set(n, rng, 2);
    const EquivalencePartition e = approx_equiv(set);
    EXPECT_EQ(e.block_ids(), approx_oracle(n, set));
    std::vector<Similarity> more = set.members();
    more.push_back(random_similarity(n, rng));
    EXPECT_TRUE(e.refines(approx_equiv(SimilaritySet(n, more))));
  }
}

TEST(FullMonoidClosure, Examples) {
  EXPECT_EQ(full_monoid_closure(SimilaritySet(3, {Similarity::identity(3)})).size(), 1u);
  EXPECT_EQ(full_monoid_closure(SimilaritySet(2, {Similarity::full(2)})), all_similarities(2));
  const Similarity p = Similarity::from_pairs(3, {{0, 1}, {1, 0}, {2, 2}});
  EXPECT_EQ(full_monoid_closure(SimilaritySet(3, {p})),
            SimilaritySet(3, {p, Similarity::identity(3)}));
  EXPECT_THROW(full_monoid_closure(SimilaritySet(4, {Similarity::identity(4)})), Error);
}

TEST(FullMonoidClosure, ClosureLaws) {
  Rng rng(79);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const SimilaritySet set = random_similarity_set(n, rng, 2);
    const SimilaritySet closed = full_monoid_closure(set);
    EXPECT_TRUE(closed.flags().full());
    EXPECT_TRUE(naive_flags(closed).full());
    for (const Similarity& p : set.members()) EXPECT_TRUE(closed.contains(p));
    EXPECT_EQ(full_monoid_closure(closed), closed);
    std::vector<Similarity> more = set.members();
    more.push_back(random_similarity(n, rng));
    const SimilaritySet bigger = full_monoid_closure(SimilaritySet(n, more));
    for (const Similarity& p : closed.members()) EXPECT_TRUE(bigger.contains(p));
    // Sim(Inv(P)) computed through invariants gives the same set.
    EXPECT_EQ(sim_of_inv(set), closed);
  }
}

TEST(Quotient, Maps) {
  const EquivalencePartition e({0, 0, 1});
  const Relation r = unary(3, {0, 1});
  EXPECT_EQ(quotient_relation(r, e), unary(2, {0}));
  EXPECT_EQ(lift_relation(quotient_relation(r, e), e), r);
  const EquivalencePartition eq = EquivalencePartition::equality(3);
  EXPECT_EQ(quotient_relation(unary(3, {2}), eq), unary(3, {2}));
  EXPECT_EQ(quotient_similarity(Similarity::identity(3), eq), Permutation::identity(3));

  Structure p(3);
  p.add_relation("P", r);
  const Similarity pi_id = lift_permutation(Permutation::identity(2), e);
  EXPECT_TRUE(sim(p).contains(pi_id));
  EXPECT_EQ(quotient_similarity(pi_id, e), Permutation::identity(2));
  try {
    quotient_similarity(Similarity::full(3), e);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::kPrecondition);
    EXPECT_NE(std::string(err.what()).find("block"), std::string::npos);
  }

  Rng rng(83);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + trial % 2;
    const EquivalencePartition blocks(
        oracle::set_partitions(n)[rng() % oracle::set_partitions(n).size()]);
    const Relation x = lift_relation(random_relation(blocks.block_count(), 2, rng), blocks);
    EXPECT_TRUE(saturated(x, blocks));
    EXPECT_EQ(lift_relation(quotient_relation(x, blocks), blocks), x);
    const Quantifier q = lift_quantifier(
        random_quantifier(blocks.block_count(), {1}, rng, 0.3), blocks);
    EXPECT_EQ(lift_quantifier(quotient_quantifier(q, blocks), blocks), q);
  }
}

TEST(Sim, Examples) {
  Structure with_eq(3);
  with_eq.add_relation("eq", EquivalencePartition::equality(3).as_relation());
  with_eq.add_relation("P", unary(3, {0}));
  const SimilaritySet s = sim(with_eq);
  ASSERT_EQ(s.size(), 2u);
  for (const Similarity& p : s.members()) EXPECT_TRUE(p.is_permutation());

  Structure trivial(2);
  trivial.add_relation("bot", Relation(2, 1));
  trivial.add_relation("top", Relation::full(2, 1));
  EXPECT_EQ(sim(trivial).size(), 7u);

  Structure p(3);
  p.add_relation("P", unary(3, {0, 1}));
  EXPECT_EQ(sim(p).size(), 7u);
}

TEST(Sim, MatchesBruteForceAndIsFull) {
  Rng rng(89);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const Structure s = random_structure(n, rng);
    const SimResult r = sim_detailed(s);
    EXPECT_EQ(r.members, sim_bruteforce(s, r.equivalence)) << "trial " << trial;
    EXPECT_TRUE(r.members.flags().full());
    EXPECT_EQ(approx_equiv(r.members), r.equivalence);
    // Every member induces a permutation of the blocks, which is an
    // automorphism of the quotient, and carries saturated relations to
    // relations they lift to.
    std::set<Permutation> induced;
    for (const Similarity& p : r.members.members()) {
      const Permutation f = quotient_similarity(p, r.equivalence);
      EXPECT_TRUE(r.quotient_aut.contains(f));
      induced.insert(f);
      for (int i = 0; i < 3; ++i) {
        const Relation x =
            lift_relation(random_relation(r.equivalence.block_count(), 2, rng), r.equivalence);
        EXPECT_TRUE(lift_holds(p, x, similarity_image(p, x)));
      }
    }
    EXPECT_EQ(induced.size(), r.quotient_aut.size());
  }
}

TEST(RestrictQuantifier, Examples) {
  Structure with_eq(3);
  with_eq.add_relation("eq", EquivalencePartition::equality(3).as_relation());
  Rng rng(97);
  const Quantifier q = random_quantifier(3, {1}, rng);
  EXPECT_EQ(restrict_quantifier(with_eq, q), q);

  const Structure qe = qe_structure();
  EXPECT_EQ(restrict_quantifier(qe, *qe.find_quantifier("QE"), degree4()).size(), 0u);

  const Quantifier ends(3, {1}, {{Relation(3, 1)}, {Relation::full(3, 1)}});
  Structure p(3);
  p.add_relation("P", unary(3, {0, 1}));
  EXPECT_EQ(restrict_quantifier(p, ends), ends);
  EXPECT_EQ(restrict_quantifier(Structure(3), ends), ends);
}

TEST(RestrictQuantifier, EqualsLiftOfQuotient) {
  Rng rng(101);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const Structure s = random_structure(n, rng);
    const EquivalencePartition e(oracle::coarsest_saturating(s));
    const Quantifier q = random_quantifier(n, trial % 2 ? QuantifierType{1} : QuantifierType{1, 1}, rng);
    const Quantifier restricted = restrict_quantifier(s, q);
    EXPECT_EQ(restricted, lift_quantifier(quotient_quantifier(q, e), e));
    Quantifier expected(n, q.type());
    for (const Member& m : q.members()) {
      bool ok = true;
      for (const Relation& r : m) {
        ok = ok && oracle::saturated_by(r, e.block_ids());
      }
      if (ok) expected.insert(m);
    }
    EXPECT_EQ(restricted, expected);
  }
}

TEST(InvSim, Examples) {
  const SimInvariantFamily all = inv_sim(all_similarities(3), 1, {{1}});
  EXPECT_EQ(all.quotient().relations(1).size(), 2u);
  EXPECT_TRUE(all.contains(Relation::full(3, 1)));
  EXPECT_FALSE(all.contains(unary(3, {0})));

  const SimInvariantFamily id = inv_sim(SimilaritySet(3, {Similarity::identity(3)}), 2, {{1}});
  Rng rng(103);
  for (int i = 0; i < 10; ++i) {
    EXPECT_TRUE(id.contains(random_relation(3, 2, rng)));
    EXPECT_TRUE(id.contains(random_quantifier(3, {1}, rng)));
  }

  const Limits limits = degree4();
  const SimilaritySet s = sim(qe_structure(), limits);
  const SimInvariantFamily f = inv_sim(s, 1, {{1}}, limits);
  EXPECT_TRUE(f.contains(Quantifier(4, {1}, {{unary(4, {1, 3})}})));
  EXPECT_TRUE(f.contains(*qe_structure().find_quantifier("QE")));
}

TEST(InvSim, MatchesDirectInvariance) {
  Rng rng(107);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const SimilaritySet set = random_similarity_set(n, rng, 2);
    const SimInvariantFamily f = inv_sim(set, 2, {{1}});
    const SimilaritySet closed = monoid_closure(set);
    const EquivalencePartition approx = approx_equiv(set);
    for (int i = 0; i < 6; ++i) {
      const Relation r = random_relation(n, 1 + i % 2, rng, 0.4);
      bool direct = true;
      for (const Similarity& p : set.members()) {
        direct = direct && oracle::lifts(pairs_of(p), r, r);
      }
      EXPECT_EQ(f.contains(r), direct);

      const Quantifier q = random_quantifier(n, {1}, rng, 0.4);
      bool qdirect = true;
      for (const Similarity& p : closed.members()) {
        qdirect = qdirect && sim_invariant(p, q, approx);
      }
      EXPECT_EQ(f.contains(q), qdirect);
    }
  }
}

TEST(SimInvariantUnrestricted, AgreesWithPermutationInvariance) {
  Rng rng(109);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const Permutation g = random_permutation(n, rng);
    const Quantifier q = random_quantifier(n, {1}, rng, 0.3);
    EXPECT_EQ(sim_invariant_unrestricted(Similarity::from_permutation(g), q),
              is_invariant(PermutationSet(n, {g}), q));
  }
  const Quantifier q(2, {1}, {{unary(2, {0})}});
  EXPECT_FALSE(sim_invariant_unrestricted(Similarity::from_pairs(2, {{0, 1}, {1, 0}}), q));
  // Under the full relation only ∅ and Ω lift to anything.
  EXPECT_TRUE(sim_invariant_unrestricted(Similarity::full(2), q));
}

TEST(Laws, CorOnSimilaritySets) {
  EXPECT_TRUE(check_cor(SimilaritySet(2, {Similarity::identity(2)})).passed);
  const Report full = check_cor(SimilaritySet(2, {Similarity::full(2)}));
  EXPECT_TRUE(full.passed);
  EXPECT_EQ(sim_of_inv(SimilaritySet(2, {Similarity::full(2)})).size(), 7u);
  Rng rng(113);
  for (int trial = 0; trial < 10; ++trial) {
    const SimilaritySet set = random_similarity_set(2 + trial % 2, rng);
    EXPECT_TRUE(check_cor(set).passed);
    EXPECT_TRUE(check_allisgood(set).passed);
  }
}

TEST(Laws, StructureLawsOnRandomInstances) {
  Rng rng(127);
  for (int trial = 0; trial < 12; ++trial) {
    const Structure s = random_structure(2 + trial % 2, rng);
    LawOptions options;
    options.seed = static_cast<std::uint64_t>(trial);
    EXPECT_TRUE(check_cor(s, options).passed) << trial;
    EXPECT_TRUE(check_respect(s, options).passed) << trial;
    EXPECT_TRUE(check_allisgood(s, options).passed) << trial;
    EXPECT_TRUE(check_propaut(s, options).passed) << trial;
    EXPECT_TRUE(check_bijective(s, options).passed) << trial;
  }
}
