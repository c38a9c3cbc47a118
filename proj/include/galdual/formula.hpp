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

#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace galdual {

/// Variables are plain indices; x_i is rendered "x<i>".
using Var = std::uint32_t;

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct PredicateAtom {
  std::string name;
  std::vector<Var> args;
};

struct EqualityAtom {
  Var lhs;
  Var rhs;
};

/// One argument of a quantifier application: the formula's extension over
/// `bound` is the relation handed to the quantifier in this slot.
struct QuantifierSlot {
  std::vector<Var> bound;
  FormulaPtr body;
};

struct QuantifierApplication {
  std::string name;
  std::vector<QuantifierSlot> slots;
};

struct Negation {
  FormulaPtr body;
};

/// The empty conjunction is truth.
struct Conjunction {
  std::vector<FormulaPtr> parts;
};

/// The empty disjunction is falsity.
struct Disjunction {
  std::vector<FormulaPtr> parts;
};

struct ExistsBlock {
  std::vector<Var> vars;
  FormulaPtr body;
};

struct ForallBlock {
  std::vector<Var> vars;
  FormulaPtr body;
};

class Formula {
 public:
  using Node = std::variant<PredicateAtom, EqualityAtom, QuantifierApplication,
                            Negation, Conjunction, Disjunction, ExistsBlock,
                            ForallBlock>;

  explicit Formula(Node node) : node_(std::move(node)) {}
  const Node& node() const { return node_; }

 private:
  Node node_;
};

FormulaPtr pred(std::string name, std::vector<Var> args);
FormulaPtr eq(Var lhs, Var rhs);
FormulaPtr quant(std::string name, std::vector<QuantifierSlot> slots);
FormulaPtr neg(FormulaPtr body);
/// A single-part conjunction or disjunction collapses to its part.
FormulaPtr conj(std::vector<FormulaPtr> parts);
FormulaPtr disj(std::vector<FormulaPtr> parts);
FormulaPtr exists(std::vector<Var> vars, FormulaPtr body);
FormulaPtr forall(std::vector<Var> vars, FormulaPtr body);
/// Rendered as (or (not a) b).
FormulaPtr implies(FormulaPtr a, FormulaPtr b);
FormulaPtr truth();
FormulaPtr falsity();

std::set<Var> free_variables(const Formula& phi);
bool is_equality_free(const Formula& phi);
/// Number of nodes, used in reports.
std::size_t formula_size(const Formula& phi);

/// Replaces every equality atom v = w by the predicate atom name(v, w).
FormulaPtr translate_eq_to_sim(const FormulaPtr& phi, std::string_view name);

/// Canonical prefix rendering:
///   (pred P x0 x1)  (= x0 x1)  (not F)  (and F...)  (or F...)
///   (exists (x3 x4) F)  (forall (x3) F)  (quant Q ((x3) F) ((x4 x5) G))
std::string render(const Formula& phi);
/// Inverse of render(). Throws kParse with the offending character offset.
FormulaPtr parse_formula(std::string_view text);

}  // namespace galdual
