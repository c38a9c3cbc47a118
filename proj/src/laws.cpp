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

#include "galdual/laws.hpp"

#include <set>
#include <string>

#include "galdual/definable.hpp"
#include "galdual/describe.hpp"
#include "galdual/duality.hpp"
#include "galdual/error.hpp"
#include "galdual/formula.hpp"
#include "galdual/random.hpp"

namespace galdual {

namespace {

Json perm_json(const Permutation& g) {
  Json out;
  out["cycles"] = g.to_cycle_string();
  out["images"] = permutation_to_json(g);
  return out;
}

// A permutation in exactly one of the two sets.
std::optional<Permutation> difference(const PermutationSet& a,
                                      const PermutationSet& b) {
  for (const Permutation& g : a.elements()) {
    if (!b.contains(g)) return g;
  }
  for (const Permutation& g : b.elements()) {
    if (!a.contains(g)) return g;
  }
  return std::nullopt;
}

std::optional<Similarity> difference(const SimilaritySet& a,
                                     const SimilaritySet& b) {
  for (const Similarity& p : a.members()) {
    if (!b.contains(p)) return p;
  }
  for (const Similarity& p : b.members()) {
    if (!a.contains(p)) return p;
  }
  return std::nullopt;
}

// Accumulates named sub-checks into a report.
class Checks {
 public:
  explicit Checks(Report& report) : report_(report) { report_.passed = true; }

  void expect(const std::string& name, bool ok, Json counterexample = nullptr) {
    report_.details["checks"][name] = ok;
    if (!ok && report_.passed) {
      report_.passed = false;
      Json c;
      c["check"] = name;
      if (!counterexample.is_null()) c["object"] = std::move(counterexample);
      report_.counterexample = std::move(c);
    }
  }

 private:
  Report& report_;
};

Report start(std::string law, std::string statement, const std::string& canonical) {
  Report r;
  r.law = std::move(law);
  r.statement = std::move(statement);
  r.instance_digest = digest(canonical);
  return r;
}

std::string canonical_of(const SimilaritySet& set) {
  TransformDocument doc;
  doc.domain_size = set.domain_size();
  doc.similarities = set.members();
  return render_transforms(doc);
}

std::string canonical_of(const PermutationSet& h) {
  TransformDocument doc;
  doc.domain_size = h.degree();
  doc.permutations = h.elements();
  return render_transforms(doc);
}

Relation invariant_closure(const PermutationSet& group, const Relation& r) {
  Relation out(r.domain_size(), r.arity());
  for (const Permutation& g : group.elements()) {
    for (std::size_t i : apply_perm_relation(g, r).indices()) out.insert_index(i);
  }
  return out;
}

// Members whose whole orbit lies in q.
Quantifier invariant_kernel(const PermutationSet& group, const Quantifier& q) {
  Quantifier out(q.domain_size(), q.type());
  for (const Member& m : q.members()) {
    bool inside = true;
    for (const Permutation& g : group.elements()) {
      Member image;
      for (const Relation& r : m) image.push_back(apply_perm_relation(g, r));
      inside = inside && q.contains(image);
    }
    if (inside) out.insert(m);
  }
  return out;
}

std::uint64_t stirling_sum(unsigned k, std::size_t n) {
  // Σ_{j <= n} S(k, j): set partitions of k positions into at most n classes.
  std::vector<std::vector<std::uint64_t>> s(k + 1,
                                            std::vector<std::uint64_t>(k + 1, 0));
  s[0][0] = 1;
  for (unsigned i = 1; i <= k; ++i) {
    for (unsigned j = 1; j <= i; ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  }
  std::uint64_t total = 0;
  for (unsigned j = 0; j <= k && j <= n; ++j) total += s[k][j];
  return total;
}

std::uint64_t binomial(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= b; ++i) out = out * (a - b + i) / i;
  return out;
}

// Every relation of the given arity on the blocks of e, lifted.
std::vector<Relation> saturated_relations(const EquivalencePartition& e,
                                          unsigned arity) {
  std::vector<Relation> out;
  const std::size_t m = e.block_count();
  const std::size_t space = tuple_count(m, arity);
  if (space > 16) fail(ErrorKind::kResourceLimit, "too many saturated relations");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << space); ++mask) {
    out.push_back(lift_relation(relation_from_mask(m, arity, mask), e));
  }
  return out;
}

std::vector<Quantifier> quantifiers_of(const Structure& s) {
  std::vector<Quantifier> out;
  for (const auto& [name, q] : s.quantifiers()) out.push_back(q);
  return out;
}

}  // namespace

Report check_kras_group(const PermutationSet& h, unsigned k,
                        const LawOptions& options) {
  Stopwatch clock;
  const std::size_t n = h.degree();
  Report r = start("kras-group",
                   "aut of the arity-" + std::to_string(k) +
                       " orbit structure of <H> equals the " +
                       std::to_string(k) + "-closure of H" +
                       (k >= n ? ", which is <H>" : ""),
                   canonical_of(h) + "k=" + std::to_string(k));
  Checks checks(r);
  const PermutationSet group = generate(h, options.limits);
  const Structure canonical = canonical_structure(group, k, options.limits);
  const PermutationSet recovered = aut(canonical, options.limits);
  const PermutationSet closure = k_closure(h, k, options.limits);
  const auto diff = difference(recovered, closure);
  checks.expect("aut_equals_k_closure", !diff,
                diff ? perm_json(*diff) : Json(nullptr));
  const bool is_group = recovered == group;
  if (k >= n) {
    const auto miss = difference(recovered, group);
    checks.expect("aut_equals_generated_group", is_group,
                  miss ? perm_json(*miss) : Json(nullptr));
  }
  r.details["degree"] = n;
  r.details["arity"] = k;
  r.details["generated_order"] = group.size();
  r.details["recovered_order"] = recovered.size();
  r.details["k_closure_order"] = closure.size();
  r.details["recovered"] = is_group;
  r.witness = permutation_set_to_json(PermutationSet(n, group.generators()));
  r.timing_ms = clock.elapsed_ms();
  return r;
}

Report check_kras_definability(const Structure& structure, const Target& target,
                               const LawOptions& options) {
  Stopwatch clock;
  Structure doc = structure;
  std::visit(
      [&](const auto& object) {
        using T = std::decay_t<decltype(object)>;
        if constexpr (std::is_same_v<T, Relation>) {
          doc.add_relation(structure.fresh_name("target"), object);
        } else {
          doc.add_quantifier(structure.fresh_name("target"), object);
        }
      },
      target);
  Report r = start("kras-def",
                   "the target is invariant under aut(S) iff its phi formula "
                   "accepts exactly the target",
                   render_structure(doc));
  Checks checks(r);
  const PermutationSet group = aut(structure, options.limits);
  bool invariant = false;
  bool exact = false;
  bool closure_ok = false;
  std::optional<Permutation> moved;
  PhiFormula phi;
  if (const auto* rel = std::get_if<Relation>(&target)) {
    moved = violating_permutation(group, *rel);
    invariant = !moved;
    phi = build_phi_relation(structure, *rel, options.limits);
    const Relation accepted = accepted_tuples(structure, phi);
    exact = accepted == *rel;
    closure_ok = accepted == invariant_closure(group, *rel);
    r.details["accepted"] = relation_to_json(accepted);
  } else {
    const Quantifier& q = std::get<Quantifier>(target);
    moved = violating_permutation(group, q);
    invariant = !moved;
    phi = build_phi_quantifier(structure, q, options.limits);
    const Quantifier accepted =
        accepted_members(structure, phi, q.type(), nullptr, options.limits);
    exact = accepted == q;
    // The universal form keeps only whole orbits inside the target.
    closure_ok = accepted == invariant_kernel(group, q);
    r.details["accepted_members"] = accepted.size();
    r.details["target_members"] = q.size();
  }
  checks.expect("invariant_iff_phi_exact", invariant == exact,
                moved ? perm_json(*moved) : Json(nullptr));
  checks.expect("phi_accepts_invariant_hull_or_kernel", closure_ok);
  r.details["aut_order"] = group.size();
  r.details["invariant"] = invariant;
  r.details["phi_exact"] = exact;
  r.details["formula_size"] = formula_size(*phi.formula);
  if (invariant) {
    r.witness = render(*phi.formula);
  } else if (moved && r.passed) {
    Json c;
    c["violating_automorphism"] = perm_json(*moved);
    r.counterexample = std::move(c);
  }
  r.timing_ms = clock.elapsed_ms();
  return r;
}

Report check_mcgee(std::size_t n, unsigned k_max,
                   const std::vector<QuantifierType>& types,
                   const LawOptions& options) {
  Stopwatch clock;
  std::string canonical = "n=" + std::to_string(n) + ";k=" + std::to_string(k_max);
  for (const QuantifierType& t : types) canonical += ";" + t.to_string();
  Report r = start("mcgee",
                   "objects invariant under the full symmetric group number 2 "
                   "to the number of orbit blocks",
                   canonical);
  Checks checks(r);
  const McGeeCatalogue catalogue = mcgee_invariants(n, k_max, types, options.limits);
  const PermutationSet everything = all_permutations(n, options.limits);
  constexpr std::size_t kBruteBits = 12;

  Json counts = Json::object();
  for (const auto& [arity, cls] : catalogue.relations) {
    const std::string key = "relations_arity_" + std::to_string(arity);
    counts[key] = cls.blocks < 64 ? Json(std::uint64_t{1} << cls.blocks)
                                  : Json("2^" + std::to_string(cls.blocks));
    checks.expect(key + "_blocks_formula",
                  cls.blocks == stirling_sum(arity, n));
    const std::size_t space = tuple_count(n, arity);
    if (space <= kBruteBits) {
      std::uint64_t brute = 0;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << space); ++mask) {
        const Relation rel = relation_from_mask(n, arity, mask);
        bool fixed = true;
        for (const Permutation& g : everything.elements()) {
          if (!(apply_perm_relation(g, rel) == rel)) {
            fixed = false;
            break;
          }
        }
        brute += fixed;
      }
      r.details["brute_force"][key] = brute;
      checks.expect(key + "_brute_force", brute == (std::uint64_t{1} << cls.blocks));
    }
  }
  for (const auto& [type, cls] : catalogue.quantifiers) {
    const std::string key = "quantifiers_type_" + type.to_string();
    counts[key] = cls.blocks < 64 ? Json(std::uint64_t{1} << cls.blocks)
                                  : Json("2^" + std::to_string(cls.blocks));
    bool unary = true;
    for (unsigned s : type.slots()) unary = unary && s == 1;
    if (unary && type.size() < 6) {
      const std::uint64_t patterns = std::uint64_t{1} << type.size();
      checks.expect(key + "_blocks_formula",
                    cls.blocks == binomial(n + patterns - 1, n));
    }
    const MemberSpace space(n, type, options.limits);
    if (space.size() <= kBruteBits) {
      std::uint64_t brute = 0;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << space.size());
           ++mask) {
        std::vector<Member> members;
        for (std::uint64_t i = 0; i < space.size(); ++i) {
          if ((mask >> i) & 1u) members.push_back(space.member(i));
        }
        const Quantifier q(n, type, std::move(members));
        bool fixed = true;
        for (const Permutation& g : everything.elements()) {
          if (!(apply_perm_quantifier(g, q) == q)) {
            fixed = false;
            break;
          }
        }
        brute += fixed;
      }
      r.details["brute_force"][key] = brute;
      checks.expect(key + "_brute_force", brute == (std::uint64_t{1} << cls.blocks));
    }
  }
  r.details["counts"] = counts;
  Json classes = Json::object();
  for (const auto& [type, cls] : catalogue.quantifiers) {
    classes[type.to_string()] = cls.representatives;
  }
  for (const auto& [arity, cls] : catalogue.relations) {
    classes["arity " + std::to_string(arity)] = cls.representatives;
  }
  r.witness = classes;
  r.timing_ms = clock.elapsed_ms();
  return r;
}

Report check_cor(const SimilaritySet& set, const LawOptions& options) {
  Stopwatch clock;
  Report r = start("cor",
                   "Sim(Inv(P)) is the least full monoid including P",
                   canonical_of(set));
  Checks checks(r);
  const SimilaritySet lifted = sim_of_inv(set, options.limits);
  const SimilaritySet fixpoint = full_monoid_closure(set, options.limits);
  const auto diff = difference(lifted, fixpoint);
  checks.expect("sim_inv_equals_full_monoid_closure", !diff,
                diff ? similarity_to_json(*diff) : Json(nullptr));
  bool extensive = true;
  for (const Similarity& p : set.members()) extensive = extensive && fixpoint.contains(p);
  checks.expect("closure_extensive", extensive);
  checks.expect("closure_idempotent",
                full_monoid_closure(fixpoint, options.limits) == fixpoint);
  const EquivalencePartition approx = approx_equiv(set);
  const EquivalencePartition indist =
      sim_equiv(inv_sim_structure(set, options.limits), options.limits);
  checks.expect("approx_equals_inv_indistinguishability", approx == indist,
                partition_to_json(indist));
  const MonoidFlags flags = lifted.flags();
  checks.expect("sim_inv_is_full_monoid", flags.full());
  r.details["input_size"] = set.size();
  r.details["sim_inv_size"] = lifted.size();
  r.details["full_monoid_closure_size"] = fixpoint.size();
  r.details["approx_blocks"] = partition_to_json(approx);
  r.witness = similarity_set_to_json(maxima(fixpoint));
  r.timing_ms = clock.elapsed_ms();
  return r;
}

Report check_cor(const Structure& structure, const LawOptions& options) {
  Stopwatch clock;
  Report r = start("cor",
                   "restrictions of quantifiers are equality-free definable; "
                   "~ equals the approximation relation of sim(S); sim(S) is a "
                   "full monoid fixed by Sim of Inv",
                   render_structure(structure));
  Checks checks(r);
  const SimResult result = sim_detailed(structure, options.limits);
  const EquivalencePartition& e = result.equivalence;
  Json witnesses = Json::object();
  for (const auto& [name, q] : structure.quantifiers()) {
    const DefinabilityVerdict verdict =
        is_definable(structure, Target{q}, false, options.limits);
    bool ok = verdict.definable;
    if (ok) {
      const Quantifier accepted =
          accepted_members(*verdict.witness_structure, *verdict.witness,
                           q.type(), &e, options.limits);
      ok = accepted == restrict_quantifier(structure, q, options.limits);
      r.details["restricted_members"][name] = accepted.size();
      witnesses[name] = render(*verdict.witness->formula);
    }
    checks.expect("restriction_definable_" + name, ok);
  }
  const EquivalencePartition approx = approx_equiv(result.members);
  checks.expect("indistinguishability_equals_approx", approx == e,
                partition_to_json(approx));
  checks.expect("sim_is_full_monoid", result.members.flags().full());
  const SimilaritySet again = sim_of_inv(result.members, options.limits);
  const auto diff = difference(again, result.members);
  checks.expect("sim_inv_sim_fixed", !diff,
                diff ? similarity_to_json(*diff) : Json(nullptr));
  r.details["blocks"] = partition_to_json(e);
  r.details["arity_bound"] = result.arity_bound;
  r.details["sim_size"] = result.members.size();
  if (!witnesses.empty()) r.witness = witnesses;
  r.timing_ms = clock.elapsed_ms();
  return r;
}

Report check_respect(const Structure& structure, const LawOptions& options) {
  Stopwatch clock;
  Report r = start("respect",
                   "equality-free definable relations are the ~-saturated "
                   "ones; the restriction of Q is the lift of Q/~",
                   render_structure(structure) + "samples=" +
                       std::to_string(options.samples) +
                       ";seed=" + std::to_string(options.seed));
  Checks checks(r);
  const std::size_t n = structure.domain_size();
  const SimEquivResult equiv = sim_equiv_detailed(structure, options.limits);
  const EquivalencePartition& e = equiv.equivalence;
  const DefinableClosure closure = definable_closure_eqfree(
      structure, equiv.arity_bound, true, options.limits);
  Rng rng(options.seed);
  for (unsigned arity = 1; arity <= 2; ++arity) {
    const std::size_t space = tuple_count(n, arity);
    std::optional<Relation> bad;
    auto test = [&](const Relation& rel) {
      if (!bad && closure.contains(rel) != saturated(rel, e)) bad = rel;
    };
    if (space <= 12) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << space); ++mask) {
        test(relation_from_mask(n, arity, mask));
      }
    } else {
      for (std::size_t i = 0; i < 64 * options.samples; ++i) {
        test(random_relation(n, arity, rng));
      }
      for (const Relation& rel : saturated_relations(e, arity)) test(rel);
    }
    checks.expect("definable_iff_saturated_arity_" + std::to_string(arity), !bad,
                  bad ? relation_to_json(*bad) : Json(nullptr));
  }
  std::vector<Quantifier> probes = quantifiers_of(structure);
  for (std::size_t i = 0; i < options.samples; ++i) {
    probes.push_back(random_quantifier(n, QuantifierType{1}, rng, 0.5,
                                       options.limits));
  }
  std::size_t agreed = 0;
  for (const Quantifier& q : probes) {
    const Quantifier restricted = restrict_quantifier(structure, q, options.limits);
    const Quantifier lifted = lift_quantifier(quotient_quantifier(q, e), e);
    if (restricted == lifted) {
      ++agreed;
    } else {
      checks.expect("restriction_is_lift_of_quotient", false,
                    quantifier_to_json(q));
    }
  }
  checks.expect("restriction_is_lift_of_quotient", agreed == probes.size());
  r.details["blocks"] = partition_to_json(e);
  r.details["arity_bound"] = equiv.arity_bound;
  r.details["quantifiers_checked"] = probes.size();
  r.timing_ms = clock.elapsed_ms();
  return r;
}

Report check_allisgood(const Structure& structure, const LawOptions& options) {
  Stopwatch clock;
  Report r = start("allisgood",
                   "~ of S equals the approximation relation of Sim(S), which "
                   "equals ~ of Inv(Sim(S))",
                   render_structure(structure));
  Checks checks(r);
  const EquivalencePartition e = sim_equiv(structure, options.limits);
  const SimilaritySet brute = sim_bruteforce(structure, e, options.limits);
  const EquivalencePartition approx = approx_equiv(brute);
  checks.expect("indistinguishability_equals_approx", approx == e,
                partition_to_json(approx));
  const EquivalencePartition back =
      sim_equiv(inv_sim_structure(brute, options.limits), options.limits);
  checks.expect("approx_equals_inv_indistinguishability", back == approx,
                partition_to_json(back));
  r.details["blocks"] = partition_to_json(e);
  r.details["sim_size"] = brute.size();
  r.timing_ms = clock.elapsed_ms();
  return r;
}

Report check_allisgood(const SimilaritySet& set, const LawOptions& options) {
  Stopwatch clock;
  Report r = start("allisgood",
                   "the approximation relation of P equals ~ of Inv(P)",
                   canonical_of(set));
  Checks checks(r);
  const EquivalencePartition approx = approx_equiv(set);
  const EquivalencePartition back =
      sim_equiv(inv_sim_structure(set, options.limits), options.limits);
  checks.expect("approx_equals_inv_indistinguishability", back == approx,
                partition_to_json(back));
  r.details["blocks"] = partition_to_json(approx);
  r.timing_ms = clock.elapsed_ms();
  return r;
}

Report check_propaut(const Structure& structure, const LawOptions& options) {
  Stopwatch clock;
  Report r = start("propaut",
                   "Sim(S)/~ is Aut(S/~); sim(S) matches the brute-force "
                   "filter and is a full monoid",
                   render_structure(structure));
  Checks checks(r);
  const SimResult result = sim_detailed(structure, options.limits);
  const EquivalencePartition& e = result.equivalence;
  const SimilaritySet brute = sim_bruteforce(structure, e, options.limits);
  std::vector<Permutation> induced;
  for (const Similarity& p : brute.members()) {
    induced.push_back(quotient_similarity(p, e));
  }
  const PermutationSet quotients(e.block_count(), std::move(induced));
  const PermutationSet quotient_aut =
      aut(quotient_structure(structure, e), options.limits);
  const auto diff = difference(quotients, quotient_aut);
  checks.expect("induced_equals_quotient_aut", !diff,
                diff ? perm_json(*diff) : Json(nullptr));
  const auto sdiff = difference(result.members, brute);
  checks.expect("sim_equals_bruteforce", !sdiff,
                sdiff ? similarity_to_json(*sdiff) : Json(nullptr));
  const MonoidFlags flags = result.members.flags();
  checks.expect("flag_composition", flags.composition);
  checks.expect("flag_converse", flags.converse);
  checks.expect("flag_contains_approx", flags.contains_approx);
  checks.expect("flag_subsimilarities", flags.subsimilarities);
  r.details["blocks"] = partition_to_json(e);
  r.details["quotient_aut_order"] = quotient_aut.size();
  r.details["sim_size"] = result.members.size();
  r.witness = permutation_set_to_json(quotient_aut);
  r.timing_ms = clock.elapsed_ms();
  return r;
}

Report check_bijective(const Structure& structure, const LawOptions& options) {
  Stopwatch clock;
  Report r = start("bijective",
                   "each similarity of S permutes the ~-blocks and lifts every "
                   "saturated relation onto its image",
                   render_structure(structure));
  Checks checks(r);
  const EquivalencePartition e = sim_equiv(structure, options.limits);
  const SimilaritySet members = sim_bruteforce(structure, e, options.limits);
  std::optional<Similarity> not_permuting;
  for (const Similarity& p : members.members()) {
    try {
      quotient_similarity(p, e);
    } catch (const Error& error) {
      if (error.kind() != ErrorKind::kPrecondition) throw;
      if (!not_permuting) not_permuting = p;
    }
  }
  checks.expect("induces_block_permutation", !not_permuting,
                not_permuting ? similarity_to_json(*not_permuting) : Json(nullptr));
  std::size_t checked = 0;
  std::optional<Json> bad;
  for (unsigned arity = 1; arity <= 2; ++arity) {
    if (tuple_count(e.block_count(), arity) > 16) continue;
    for (const Relation& rel : saturated_relations(e, arity)) {
      for (const Similarity& p : members.members()) {
        ++checked;
        const Relation image = similarity_image(p, rel);
        if (!bad && !lift_holds(p, rel, image)) {
          Json c;
          c["similarity"] = similarity_to_json(p);
          c["relation"] = relation_to_json(rel);
          bad = std::move(c);
        }
      }
    }
  }
  checks.expect("saturated_relations_lift_to_images", !bad,
                bad ? *bad : Json(nullptr));
  r.details["blocks"] = partition_to_json(e);
  r.details["sim_size"] = members.size();
  r.details["lifts_checked"] = checked;
  r.timing_ms = clock.elapsed_ms();
  return r;
}

}  // namespace galdual
