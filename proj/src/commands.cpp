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

#include "galdual/commands.hpp"

#include <charconv>

#include "galdual/definable.hpp"
#include "galdual/describe.hpp"
#include "galdual/duality.hpp"
#include "galdual/error.hpp"
#include "galdual/formula.hpp"
#include "galdual/random.hpp"

namespace galdual {

namespace {

class Checks {
 public:
  explicit Checks(Report& report) : report_(report) { report_.passed = true; }
  void expect(const std::string& name, bool ok) {
    report_.details["checks"][name] = ok;
    if (!ok && report_.passed) {
      report_.passed = false;
      report_.counterexample = Json{{"check", name}};
    }
  }

 private:
  Report& report_;
};

Json cycles_json(const PermutationSet& set, const Limits& limits) {
  Json out = Json::array();
  if (set.size() > limits.max_listed_objects) return out;
  for (const Permutation& g : set.elements()) out.push_back(g.to_cycle_string());
  return out;
}

Json count_json(std::size_t blocks) {
  return blocks < 64 ? Json(std::uint64_t{1} << blocks)
                     : Json("2^" + std::to_string(blocks));
}

SimilaritySet as_similarity_set(const TransformDocument& doc) {
  std::vector<Similarity> members = doc.similarities;
  for (const Permutation& g : doc.permutations) {
    members.push_back(Similarity::from_permutation(g));
  }
  return SimilaritySet(doc.domain_size, std::move(members));
}

PermutationSet as_permutation_set(const TransformDocument& doc) {
  if (!doc.similarities.empty()) {
    fail(ErrorKind::kInvalidArgument,
         "this mode takes permutations only; the document lists similarities");
  }
  return PermutationSet(doc.domain_size, doc.permutations);
}

unsigned parse_mode_number(std::string_view text, std::string_view mode) {
  unsigned value = 0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || value == 0) {
    fail(ErrorKind::kInvalidArgument,
         "bad closure mode \"" + std::string(mode) + "\"");
  }
  return value;
}

std::string canonical_of(const TransformDocument& doc) {
  return render_transforms(doc);
}

Json target_json(const Target& target) {
  if (const auto* r = std::get_if<Relation>(&target)) return relation_to_json(*r);
  return quantifier_to_json(std::get<Quantifier>(target));
}

}  // namespace

Report run_aut(const Structure& structure, const Limits& limits) {
  Stopwatch clock;
  Report r;
  r.law = "aut";
  r.statement = "every listed permutation preserves the structure and they form a group";
  r.instance_digest = digest(render_structure(structure));
  Checks checks(r);
  const PermutationSet group = aut(structure, limits);
  bool all = true;
  for (const Permutation& g : group.elements()) all = all && preserves(g, structure);
  checks.expect("preserves_structure", all);
  checks.expect("is_group", group.verify_group());
  r.details["order"] = group.size();
  r.witness = cycles_json(group, limits);
  r.timing_ms = clock.elapsed_ms();
  return r;
}

Report run_inv(const TransformDocument& transforms, unsigned arity,
               const std::vector<QuantifierType>& types, const Limits& limits) {
  Stopwatch clock;
  Report r;
  r.law = "inv";
  r.instance_digest = digest(canonical_of(transforms) + "arity=" +
                             std::to_string(arity));
  Checks checks(r);
  if (transforms.similarities.empty()) {
    r.statement = "every orbit of the generated group is an invariant object";
    const PermutationSet group =
        generate(PermutationSet(transforms.domain_size, transforms.permutations),
                 limits);
    const InvariantFamily family = inv(group, arity, types, limits);
    bool ok = true;
    Json counts = Json::object();
    Json reps = Json::object();
    for (unsigned k = 1; k <= arity; ++k) {
      const OrbitPartition& orbits = family.tuple_orbits(k);
      counts["relations_arity_" + std::to_string(k)] =
          count_json(orbits.block_count());
      Json list = Json::array();
      for (const auto& orbit : orbits.orbits()) {
        Relation block(transforms.domain_size, k);
        for (std::size_t i : orbit) block.insert_index(i);
        ok = ok && is_invariant(group, block);
        if (list.size() < limits.max_listed_objects) {
          list.push_back(tuple_to_string(decode_tuple(transforms.domain_size, k, orbit.front())));
        }
      }
      reps["arity " + std::to_string(k)] = std::move(list);
    }
    for (const QuantifierType& type : types) {
      counts["quantifiers_type_" + type.to_string()] =
          count_json(family.quantifier_blocks(type));
      const MemberSpace space(transforms.domain_size, type, limits);
      Json list = Json::array();
      for (const auto& orbit : family.member_orbits(type).orbits()) {
        std::vector<Member> members;
        for (std::size_t i : orbit) members.push_back(space.member(i));
        if (list.size() < limits.max_listed_objects) {
          list.push_back(member_to_string(members.front()));
        }
        ok = ok && is_invariant(group, Quantifier(transforms.domain_size, type,
                                                  std::move(members)));
      }
      reps[type.to_string()] = std::move(list);
    }
    checks.expect("orbits_invariant", ok);
    r.details["group_order"] = group.size();
    r.details["counts"] = counts;
    r.witness = reps;
  } else {
    r.statement = "every approx-saturated lift of a quotient orbit is invariant "
                  "under every similarity";
    const SimilaritySet set = as_similarity_set(transforms);
    const SimInvariantFamily family = inv_sim(set, arity, types, limits);
    const EquivalencePartition& approx = family.approx();
    bool ok = true;
    Json counts = Json::object();
    for (unsigned k = 1; k <= arity; ++k) {
      const OrbitPartition& orbits = family.quotient().tuple_orbits(k);
      counts["relations_arity_" + std::to_string(k)] =
          count_json(orbits.block_count());
      for (const auto& orbit : orbits.orbits()) {
        Relation block(approx.block_count(), k);
        for (std::size_t i : orbit) block.insert_index(i);
        const Relation lifted = lift_relation(block, approx);
        for (const Similarity& p : set.members()) {
          ok = ok && sim_invariant(p, lifted);
        }
      }
    }
    for (const QuantifierType& type : types) {
      counts["quantifiers_type_" + type.to_string()] =
          count_json(family.quotient().quantifier_blocks(type));
    }
    checks.expect("lifted_orbits_invariant", ok);
    r.details["approx_blocks"] = partition_to_json(approx);
    r.details["quotient_group_order"] = family.quotient().group().size();
    r.details["counts"] = counts;
  }
  r.timing_ms = clock.elapsed_ms();
  return r;
}

Report run_closure(const TransformDocument& transforms, std::string_view mode,
                   const Limits& limits) {
  Stopwatch clock;
  Report r;
  r.law = "closure";
  r.instance_digest = digest(canonical_of(transforms) + std::string(mode));
  r.details["mode"] = std::string(mode);
  Checks checks(r);
  if (mode == "group") {
    r.statement = "the generated set is a group containing the generators";
    const PermutationSet h = as_permutation_set(transforms);
    const PermutationSet group = generate(h, limits);
    bool has = true;
    for (const Permutation& g : h.elements()) has = has && group.contains(g);
    checks.expect("contains_generators", has);
    checks.expect("is_group", group.verify_group());
    r.details["order"] = group.size();
    r.witness = cycles_json(group, limits);
  } else if (mode.starts_with("k=")) {
    const unsigned k = parse_mode_number(mode.substr(2), mode);
    r.statement = "the " + std::to_string(k) +
                  "-closure equals aut of the arity-" + std::to_string(k) +
                  " orbit structure";
    const PermutationSet h = as_permutation_set(transforms);
    const PermutationSet closure = k_closure(h, k, limits);
    const PermutationSet other =
        aut(canonical_structure(generate(h, limits), k, limits), limits);
    checks.expect("equals_aut_of_canonical_structure", closure == other);
    r.details["order"] = closure.size();
    r.details["generated_order"] = generate(h, limits).size();
    r.witness = cycles_json(closure, limits);
  } else if (mode.starts_with("sets=")) {
    const unsigned m = parse_mode_number(mode.substr(5), mode);
    r.statement = "the set-" + std::to_string(m) +
                  " closure equals aut of the canonical monadic structure";
    const PermutationSet h = as_permutation_set(transforms);
    const PermutationSet closure = set_closure(h, m, limits);
    const PermutationSet other =
        aut(canonical_monadic_structure(h, m, limits), limits);
    checks.expect("equals_aut_of_canonical_monadic_structure", closure == other);
    r.details["order"] = closure.size();
    r.details["generated_order"] = generate(h, limits).size();
    r.witness = cycles_json(closure, limits);
  } else if (mode == "full-monoid") {
    r.statement = "the closure is a full monoid including the input";
    const SimilaritySet set = as_similarity_set(transforms);
    const SimilaritySet closure = full_monoid_closure(set, limits);
    bool has = true;
    for (const Similarity& p : set.members()) has = has && closure.contains(p);
    checks.expect("contains_input", has);
    checks.expect("is_full_monoid", closure.flags().full());
    r.details["size"] = closure.size();
    r.details["approx_blocks"] = partition_to_json(approx_equiv(closure));
    r.witness = similarity_set_to_json(maxima(closure));
  } else {
    fail(ErrorKind::kInvalidArgument,
         "unknown closure mode \"" + std::string(mode) +
             "\"; expected group, k=K, sets=M or full-monoid");
  }
  r.timing_ms = clock.elapsed_ms();
  return r;
}

Report run_define(const Structure& structure, const Target& target,
                  bool with_equality, const Limits& limits) {
  Stopwatch clock;
  Report r;
  r.law = "define";
  r.statement = with_equality
                    ? "the witness defines the target, or the counterexample "
                      "is an automorphism moving it"
                    : "the equality-free witness defines the target on "
                      "saturated arguments, or the counterexample is a "
                      "similarity of the structure not respecting it";
  Structure doc = structure;
  if (const auto* rel = std::get_if<Relation>(&target)) {
    doc.add_relation(structure.fresh_name("target"), *rel);
  } else {
    doc.add_quantifier(structure.fresh_name("target"), std::get<Quantifier>(target));
  }
  r.instance_digest =
      digest(render_structure(doc) + (with_equality ? "eq" : "no-eq"));
  Checks checks(r);
  const DefinabilityVerdict verdict =
      is_definable(structure, target, with_equality, limits);
  r.details["definable"] = verdict.definable;
  r.details["reason"] = verdict.reason;
  if (verdict.definable) {
    const PhiFormula& phi = *verdict.witness;
    const Structure& ws = *verdict.witness_structure;
    bool ok = false;
    if (const auto* rel = std::get_if<Relation>(&target)) {
      ok = accepted_tuples(ws, phi) == *rel;
    } else {
      const Quantifier& q = std::get<Quantifier>(target);
      if (with_equality) {
        ok = accepted_members(ws, phi, q.type(), nullptr, limits) == q;
      } else {
        const EquivalencePartition e = sim_equiv(structure, limits);
        ok = accepted_members(ws, phi, q.type(), &e, limits) ==
             lift_quantifier(quotient_quantifier(q, e), e);
      }
    }
    checks.expect("witness_defines_target", ok);
    if (!with_equality) {
      checks.expect("witness_equality_free", is_equality_free(*phi.formula));
      r.details["equivalence_symbol"] = verdict.equivalence_symbol;
      r.details["equivalence"] =
          relation_to_json(*ws.find_relation(verdict.equivalence_symbol));
    }
    Json vars = Json::array();
    for (Var v : phi.free_vars) vars.push_back("x" + std::to_string(v));
    r.details["free_variables"] = vars;
    r.details["second_order_variables"] = phi.symbols;
    r.details["formula_size"] = formula_size(*phi.formula);
    r.witness = render(*phi.formula);
  } else if (verdict.automorphism) {
    const Permutation& g = *verdict.automorphism;
    const bool moves = std::visit(
        [&](const auto& object) {
          if constexpr (std::is_same_v<std::decay_t<decltype(object)>, Relation>) {
            return !(apply_perm_relation(g, object) == object);
          } else {
            return !(apply_perm_quantifier(g, object) == object);
          }
        },
        target);
    checks.expect("counterexample_is_automorphism", preserves(g, structure));
    checks.expect("counterexample_moves_target", moves);
    r.counterexample = Json{{"automorphism", g.to_cycle_string()},
                            {"images", permutation_to_json(g)}};
  } else if (verdict.similarity) {
    const Similarity& p = *verdict.similarity;
    const EquivalencePartition e = sim_equiv(structure, limits);
    bool respects_structure = true;
    for (const auto& [name, rel] : structure.relations()) {
      respects_structure = respects_structure && sim_invariant(p, rel);
    }
    for (const auto& [name, q] : structure.quantifiers()) {
      respects_structure = respects_structure && sim_invariant(p, q, e, limits);
    }
    bool breaks = false;
    if (const auto* rel = std::get_if<Relation>(&target)) {
      breaks = !sim_invariant(p, *rel);
    } else {
      breaks = !sim_invariant(p, std::get<Quantifier>(target), e, limits);
    }
    checks.expect("counterexample_is_similarity_of_structure", respects_structure);
    checks.expect("counterexample_breaks_target", breaks);
    r.counterexample = Json{{"similarity", similarity_to_json(p)}};
  }
  r.details["target"] = target_json(target);
  r.timing_ms = clock.elapsed_ms();
  return r;
}

Report run_sim(const Structure& structure, const Limits& limits) {
  Stopwatch clock;
  Report r;
  r.law = "sim";
  r.statement = "sim(S) is a full monoid whose maximal members respect every relation";
  r.instance_digest = digest(render_structure(structure));
  Checks checks(r);
  const SimResult result = sim_detailed(structure, limits);
  const MonoidFlags flags = result.members.flags();
  checks.expect("flag_composition", flags.composition);
  checks.expect("flag_converse", flags.converse);
  checks.expect("flag_contains_approx", flags.contains_approx);
  checks.expect("flag_subsimilarities", flags.subsimilarities);
  const SimilaritySet top = maxima(result.members);
  bool respects = true;
  for (const Similarity& p : top.members()) {
    for (const auto& [name, rel] : structure.relations()) {
      respects = respects && sim_invariant(p, rel);
    }
  }
  checks.expect("maxima_respect_relations", respects);
  r.details["size"] = result.members.size();
  r.details["blocks"] = partition_to_json(result.equivalence);
  r.details["arity_bound"] = result.arity_bound;
  r.details["quotient_aut_order"] = result.quotient_aut.size();
  r.details["maxima"] = similarity_set_to_json(top);
  if (result.members.size() <= limits.max_listed_objects) {
    r.witness = similarity_set_to_json(result.members);
  }
  r.timing_ms = clock.elapsed_ms();
  return r;
}

Report run_quotient(const Structure& structure, const Limits& limits) {
  Stopwatch clock;
  Report r;
  r.law = "quotient";
  r.statement = "every relation is saturated and equals the lift of its quotient";
  r.instance_digest = digest(render_structure(structure));
  Checks checks(r);
  const SimEquivResult equiv = sim_equiv_detailed(structure, limits);
  const EquivalencePartition& e = equiv.equivalence;
  bool ok = true;
  for (const auto& [name, rel] : structure.relations()) {
    ok = ok && saturated(rel, e) && lift_relation(quotient_relation(rel, e), e) == rel;
  }
  checks.expect("relations_are_lifts", ok);
  const Structure quotient = quotient_structure(structure, e);
  r.details["blocks"] = partition_to_json(e);
  r.details["arity_bound"] = equiv.arity_bound;
  r.details["bound_confirmed"] = equiv.confirmed;
  r.details["quotient_aut_order"] = aut(quotient, limits).size();
  r.witness = structure_to_json(quotient);
  r.timing_ms = clock.elapsed_ms();
  return r;
}

const std::vector<std::string>& law_names() {
  static const std::vector<std::string> names = {
      "kras-group", "kras-def", "mcgee",   "cor",
      "respect",    "allisgood", "propaut", "bijective"};
  return names;
}

std::vector<QuantifierType> parse_quantifier_types(std::string_view text) {
  std::vector<QuantifierType> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    const std::string_view item = text.substr(start, end - start);
    std::vector<unsigned> slots;
    std::size_t p = 0;
    while (p <= item.size()) {
      const std::size_t q = std::min(item.find(',', p), item.size());
      unsigned value = 0;
      const auto [ptr, ec] =
          std::from_chars(item.data() + p, item.data() + q, value);
      if (ec != std::errc() || ptr != item.data() + q || value > 8) {
        fail(ErrorKind::kInvalidArgument,
             "bad quantifier type \"" + std::string(item) +
                 "\"; expected slot arities such as 1 or 2,1");
      }
      slots.push_back(value);
      p = q + 1;
    }
    out.emplace_back(std::move(slots));
    start = end + 1;
  }
  return out;
}

Report run_check(std::string_view law, const CheckInput& input,
                 const LawOptions& options) {
  const std::string name(law);
  Rng rng(options.seed);
  const std::size_t n =
      input.structure     ? input.structure->domain_size()
      : input.transforms  ? input.transforms->domain_size
                          : input.n;
  const std::size_t samples = std::max<std::size_t>(1, options.samples);
  const std::vector<QuantifierType> types =
      input.types.empty() ? std::vector<QuantifierType>{QuantifierType{1}}
                          : input.types;

  auto structures = [&](auto law_fn, const std::string& statement) {
    if (input.structure) return law_fn(*input.structure, options);
    std::vector<Report> parts;
    for (std::size_t i = 0; i < samples; ++i) {
      parts.push_back(law_fn(random_structure(n, rng, {}, options.limits), options));
    }
    return combine_reports(name, statement, parts);
  };

  if (name == "kras-group") {
    if (input.transforms) {
      const PermutationSet h = as_permutation_set(*input.transforms);
      return check_kras_group(h, input.arity ? input.arity : h.degree(), options);
    }
    std::vector<Report> parts;
    for (std::size_t i = 0; i < samples; ++i) {
      const PermutationSet h = random_generator_set(n, rng);
      parts.push_back(check_kras_group(
          h, input.arity ? input.arity : static_cast<unsigned>(n), options));
    }
    return combine_reports(name, parts.front().statement, parts);
  }
  if (name == "kras-def") {
    if (input.structure) {
      if (!input.target) {
        fail(ErrorKind::kInvalidArgument, "kras-def needs a target document");
      }
      return check_kras_definability(*input.structure, *input.target, options);
    }
    std::vector<Report> parts;
    for (std::size_t i = 0; i < samples; ++i) {
      const Structure s = random_structure(n, rng, {}, options.limits);
      const Target t = i % 2 == 0
                           ? Target{random_relation(n, 1, rng)}
                           : Target{random_quantifier(n, types.front(), rng, 0.5,
                                                      options.limits)};
      parts.push_back(check_kras_definability(s, t, options));
    }
    return combine_reports(name, parts.front().statement, parts);
  }
  if (name == "mcgee") {
    return check_mcgee(n, input.arity ? input.arity : 2, types, options);
  }
  if (name == "cor") {
    if (input.transforms) return check_cor(as_similarity_set(*input.transforms), options);
    if (input.structure) return check_cor(*input.structure, options);
    std::vector<Report> parts;
    for (std::size_t i = 0; i < samples; ++i) {
      parts.push_back(check_cor(random_similarity_set(n, rng), options));
    }
    return combine_reports(name, parts.front().statement, parts);
  }
  if (name == "respect") {
    return structures([](const Structure& s, const LawOptions& o) {
      return check_respect(s, o);
    }, "definable iff saturated; restriction is the lift of the quotient");
  }
  if (name == "allisgood") {
    if (input.transforms) {
      return check_allisgood(as_similarity_set(*input.transforms), options);
    }
    return structures([](const Structure& s, const LawOptions& o) {
      return check_allisgood(s, o);
    }, "~ equals the approximation relation of Sim(S)");
  }
  if (name == "propaut") {
    return structures([](const Structure& s, const LawOptions& o) {
      return check_propaut(s, o);
    }, "Sim(S)/~ is Aut(S/~)");
  }
  if (name == "bijective") {
    return structures([](const Structure& s, const LawOptions& o) {
      return check_bijective(s, o);
    }, "similarities permute blocks and lift saturated relations");
  }
  std::string known;
  for (const std::string& l : law_names()) known += " " + l;
  fail(ErrorKind::kInvalidArgument,
       "unknown law \"" + name + "\"; expected one of:" + known);
}

}  // namespace galdual
