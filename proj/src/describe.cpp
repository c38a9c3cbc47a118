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

#include "galdual/describe.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "galdual/error.hpp"
#include "galdual/eval.hpp"

namespace galdual {

namespace {

std::vector<Var> canonical_block(std::size_t n) {
  std::vector<Var> xs(n);
  std::iota(xs.begin(), xs.end(), Var{0});
  return xs;
}

std::vector<Var> as_vars(const Tuple& t) {
  return std::vector<Var>(t.begin(), t.end());
}

// Fresh symbols for the target's slots: "R" for one slot, "R_j" otherwise.
std::vector<std::string> fresh_symbols(const Structure& structure,
                                       std::size_t count) {
  std::vector<std::string> out;
  std::set<std::string> taken;
  for (std::size_t j = 0; j < count; ++j) {
    std::string base = count == 1 ? "R" : "R_" + std::to_string(j);
    std::string name = structure.fresh_name(base);
    for (int i = 0; taken.count(name); ++i) {
      name = structure.fresh_name(base + "_" + std::to_string(i));
    }
    taken.insert(name);
    out.push_back(std::move(name));
  }
  return out;
}

// Largest number of variables bound by one quantifier literal.
Var bound_width(const Structure& structure) {
  Var width = 1;
  for (const auto& [name, q] : structure.quantifiers()) {
    const auto& slots = q.type().slots();
    width = std::max<Var>(
        width, std::accumulate(slots.begin(), slots.end(), Var{0}));
  }
  return width;
}

}  // namespace

FormulaPtr describe_relation(const Relation& relation,
                             std::string_view symbol) {
  const std::size_t n = relation.domain_size();
  std::vector<FormulaPtr> literals;
  literals.reserve(relation.tuple_space());
  for (std::size_t i = 0; i < relation.tuple_space(); ++i) {
    FormulaPtr atom = pred(std::string(symbol),
                           as_vars(decode_tuple(n, relation.arity(), i)));
    literals.push_back(relation.contains_index(i) ? atom : neg(atom));
  }
  return conj(std::move(literals));
}

FormulaPtr describe_quantifier(const Quantifier& quantifier,
                               std::string_view symbol, Var first_bound,
                               const Limits& limits) {
  const std::size_t n = quantifier.domain_size();
  const QuantifierType& type = quantifier.type();
  const MemberSpace space(n, type, limits);

  std::vector<std::vector<Var>> bound(type.size());
  Var next = first_bound;
  for (std::size_t j = 0; j < type.size(); ++j) {
    for (unsigned l = 0; l < type[j]; ++l) bound[j].push_back(next++);
  }

  std::vector<FormulaPtr> literals;
  for (std::uint64_t index = 0; index < space.size(); ++index) {
    const Member member = space.member(index);
    std::vector<QuantifierSlot> slots;
    for (std::size_t j = 0; j < type.size(); ++j) {
      std::vector<FormulaPtr> cases;
      for (const Tuple& t : member[j].tuples()) {
        std::vector<FormulaPtr> pins;
        for (unsigned l = 0; l < type[j]; ++l) pins.push_back(eq(bound[j][l], t[l]));
        cases.push_back(conj(std::move(pins)));
      }
      slots.push_back({bound[j], disj(std::move(cases))});
    }
    FormulaPtr atom = quant(std::string(symbol), std::move(slots));
    literals.push_back(quantifier.contains(member) ? atom : neg(atom));
  }
  return conj(std::move(literals));
}

FormulaPtr describe_structure(const Structure& structure,
                              const Limits& limits) {
  const Var first_bound = static_cast<Var>(structure.domain_size());
  std::vector<FormulaPtr> parts;
  for (const auto& [name, r] : structure.relations()) {
    parts.push_back(describe_relation(r, name));
  }
  for (const auto& [name, q] : structure.quantifiers()) {
    parts.push_back(describe_quantifier(q, name, first_bound, limits));
  }
  return conj(std::move(parts));
}

FormulaPtr bijection_psi(std::size_t n) {
  std::vector<FormulaPtr> parts;
  for (Var i = 0; i < n; ++i) {
    for (Var j = i + 1; j < n; ++j) parts.push_back(neg(eq(i, j)));
  }
  const Var y = static_cast<Var>(n);
  std::vector<FormulaPtr> cases;
  for (Var i = 0; i < n; ++i) cases.push_back(eq(y, i));
  parts.push_back(forall({y}, disj(std::move(cases))));
  return conj(std::move(parts));
}

PhiFormula build_phi_quantifier(const Structure& structure,
                                const Quantifier& target,
                                const Limits& limits) {
  const std::size_t n = structure.domain_size();
  if (target.domain_size() != n) {
    fail(ErrorKind::kDomainMismatch, "target and structure domains differ");
  }
  PhiFormula phi;
  phi.symbols = fresh_symbols(structure, target.type().size());
  std::vector<FormulaPtr> options;
  for (const Member& u : target.members()) {
    std::vector<FormulaPtr> slots;
    for (std::size_t j = 0; j < u.size(); ++j) {
      slots.push_back(describe_relation(u[j], phi.symbols[j]));
    }
    options.push_back(conj(std::move(slots)));
  }
  FormulaPtr antecedent = conj({describe_structure(structure, limits),
                                bijection_psi(n)});
  phi.formula = forall(canonical_block(n),
                       implies(antecedent, disj(std::move(options))));
  return phi;
}

PhiFormula build_phi_relation(const Structure& structure,
                              const Relation& target, const Limits& limits) {
  const std::size_t n = structure.domain_size();
  if (target.domain_size() != n) {
    fail(ErrorKind::kDomainMismatch, "target and structure domains differ");
  }
  PhiFormula phi;
  const Var z0 = static_cast<Var>(n) + bound_width(structure);
  for (unsigned l = 0; l < target.arity(); ++l) phi.free_vars.push_back(z0 + l);
  std::vector<FormulaPtr> options;
  for (const Tuple& t : target.tuples()) {
    std::vector<FormulaPtr> pins;
    for (unsigned l = 0; l < target.arity(); ++l) {
      pins.push_back(eq(phi.free_vars[l], t[l]));
    }
    options.push_back(conj(std::move(pins)));
  }
  phi.formula =
      exists(canonical_block(n),
             conj({describe_structure(structure, limits), bijection_psi(n),
                   disj(std::move(options))}));
  return phi;
}

Quantifier accepted_members(const Structure& structure, const PhiFormula& phi,
                            const QuantifierType& type,
                            const EquivalencePartition* only_saturated,
                            const Limits& limits) {
  const std::size_t n = structure.domain_size();
  if (phi.symbols.size() != type.size()) {
    fail(ErrorKind::kArityMismatch, "formula has " +
                                        std::to_string(phi.symbols.size()) +
                                        " second-order variables, type " +
                                        type.to_string());
  }
  const MemberSpace space(n, type, limits);
  std::vector<Relation> slots;
  slots.reserve(type.size());
  for (std::size_t j = 0; j < type.size(); ++j) slots.emplace_back(n, type[j]);
  Interpretation interpretation(structure);
  for (std::size_t j = 0; j < type.size(); ++j) {
    interpretation.bind_relation(phi.symbols[j], &slots[j]);
  }
  const CompiledFormula compiled(interpretation, *phi.formula);

  std::vector<Member> accepted;
  for (std::uint64_t index = 0; index < space.size(); ++index) {
    Member candidate = space.member(index);
    if (only_saturated) {
      bool ok = true;
      for (const Relation& r : candidate) ok = ok && saturated(r, *only_saturated);
      if (!ok) continue;
    }
    for (std::size_t j = 0; j < type.size(); ++j) slots[j] = candidate[j];
    if (compiled.eval({})) accepted.push_back(std::move(candidate));
  }
  return Quantifier(n, type, std::move(accepted));
}

Relation accepted_tuples(const Structure& structure, const PhiFormula& phi) {
  return extension(structure, *phi.formula, phi.free_vars);
}

}  // namespace galdual
