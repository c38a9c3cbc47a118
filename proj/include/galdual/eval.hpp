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

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "galdual/formula.hpp"
#include "galdual/model.hpp"

namespace galdual {

using Assignment = std::map<Var, Element>;

/// Symbol table for evaluation: the structure's own symbols plus extra
/// bindings (used for the free second-order variables of a formula). Extra
/// bindings are held by pointer, so a caller may rebind the pointee between
/// evaluations of one compiled formula.
class Interpretation {
 public:
  explicit Interpretation(const Structure& structure);

  std::size_t domain_size() const { return structure_->domain_size(); }

  void bind_relation(std::string name, const Relation* relation);
  void bind_quantifier(std::string name, const Quantifier* quantifier);

  const Relation* relation(std::string_view name) const;
  const Quantifier* quantifier(std::string_view name) const;

 private:
  const Structure* structure_;
  std::map<std::string, const Relation*, std::less<>> extra_relations_;
  std::map<std::string, const Quantifier*, std::less<>> extra_quantifiers_;
};

/// A formula with names resolved and arities checked against an
/// interpretation.
class CompiledFormula {
 public:
  /// Throws kUnresolvedName or kArityMismatch.
  CompiledFormula(const Interpretation& interpretation, const Formula& phi);

  const std::set<Var>& free_variables() const { return free_; }

  /// Throws kUnboundVariable unless sigma covers the free variables.
  bool eval(const Assignment& sigma) const;
  /// Tuples over `vars` satisfying the formula, other free variables taken
  /// from sigma.
  Relation extension(const std::vector<Var>& vars,
                     const Assignment& sigma) const;

 private:
  enum class Kind { kPred, kEq, kQuant, kNot, kAnd, kOr, kExists, kForall };
  struct Node {
    Kind kind;
    const Relation* relation = nullptr;
    const Quantifier* quantifier = nullptr;
    std::vector<Var> vars;
    std::vector<std::uint32_t> children;
    std::vector<std::vector<Var>> slot_bound;
  };

  std::uint32_t compile(const Interpretation& interpretation,
                        const Formula& phi);
  bool eval_node(std::uint32_t id, std::vector<Element>& env) const;
  bool eval_block(const Node& node, std::vector<Element>& env,
                  bool universal) const;
  std::vector<Element> make_env(const Assignment& sigma,
                                const std::set<Var>& exempt) const;

  std::size_t n_;
  std::vector<Node> nodes_;
  std::uint32_t root_ = 0;
  Var max_var_ = 0;
  std::set<Var> free_;
};

bool eval(const Structure& structure, const Formula& phi,
          const Assignment& sigma);
Relation extension(const Structure& structure, const Formula& phi,
                   const std::vector<Var>& vars, const Assignment& sigma = {});

}  // namespace galdual
