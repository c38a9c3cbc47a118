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

#include "galdual/eval.hpp"

#include <algorithm>

#include "galdual/error.hpp"

namespace galdual {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

// Steps vars through all n^|vars| assignments in lexicographic order;
// returns false after the last one.
bool advance(const std::vector<Var>& vars, std::vector<Element>& env,
             std::size_t n) {
  for (std::size_t i = vars.size(); i-- > 0;) {
    Element& e = env[vars[i]];
    if (++e < n) return true;
    e = 0;
  }
  return false;
}

}  // namespace

Interpretation::Interpretation(const Structure& structure)
    : structure_(&structure) {}

void Interpretation::bind_relation(std::string name, const Relation* relation) {
  if (relation->domain_size() != domain_size()) {
    fail(ErrorKind::kDomainMismatch, "bound relation '" + name +
                                         "' lives on a different domain");
  }
  if (structure_->has_name(name)) {
    fail(ErrorKind::kInvalidArgument,
         "binding '" + name + "' would shadow a structure symbol");
  }
  extra_relations_[std::move(name)] = relation;
}

void Interpretation::bind_quantifier(std::string name,
                                     const Quantifier* quantifier) {
  if (quantifier->domain_size() != domain_size()) {
    fail(ErrorKind::kDomainMismatch, "bound quantifier '" + name +
                                         "' lives on a different domain");
  }
  if (structure_->has_name(name)) {
    fail(ErrorKind::kInvalidArgument,
         "binding '" + name + "' would shadow a structure symbol");
  }
  extra_quantifiers_[std::move(name)] = quantifier;
}

const Relation* Interpretation::relation(std::string_view name) const {
  if (const Relation* r = structure_->find_relation(name)) return r;
  auto it = extra_relations_.find(name);
  return it == extra_relations_.end() ? nullptr : it->second;
}

const Quantifier* Interpretation::quantifier(std::string_view name) const {
  if (const Quantifier* q = structure_->find_quantifier(name)) return q;
  auto it = extra_quantifiers_.find(name);
  return it == extra_quantifiers_.end() ? nullptr : it->second;
}

CompiledFormula::CompiledFormula(const Interpretation& interpretation,
                                 const Formula& phi)
    : n_(interpretation.domain_size()) {
  root_ = compile(interpretation, phi);
  free_ = galdual::free_variables(phi);
}

std::uint32_t CompiledFormula::compile(const Interpretation& interpretation,
                                       const Formula& phi) {
  Node node;
  node.kind = Kind::kAnd;
  auto note = [&](const std::vector<Var>& vars) {
    for (Var v : vars) max_var_ = std::max(max_var_, v);
  };
  std::visit(
      Overloaded{
          [&](const PredicateAtom& a) {
            node.kind = Kind::kPred;
            node.relation = interpretation.relation(a.name);
            if (!node.relation) {
              fail(ErrorKind::kUnresolvedName,
                   "no relation named '" + a.name + "'");
            }
            if (node.relation->arity() != a.args.size()) {
              fail(ErrorKind::kArityMismatch,
                   "relation '" + a.name + "' has arity " +
                       std::to_string(node.relation->arity()) + ", applied to " +
                       std::to_string(a.args.size()) + " variables");
            }
            node.vars = a.args;
          },
          [&](const EqualityAtom& a) {
            node.kind = Kind::kEq;
            node.vars = {a.lhs, a.rhs};
          },
          [&](const QuantifierApplication& a) {
            node.kind = Kind::kQuant;
            node.quantifier = interpretation.quantifier(a.name);
            if (!node.quantifier) {
              fail(ErrorKind::kUnresolvedName,
                   "no quantifier named '" + a.name + "'");
            }
            const QuantifierType& type = node.quantifier->type();
            if (type.size() != a.slots.size()) {
              fail(ErrorKind::kArityMismatch,
                   "quantifier '" + a.name + "' of type " + type.to_string() +
                       " applied to " + std::to_string(a.slots.size()) +
                       " slots");
            }
            for (std::size_t j = 0; j < a.slots.size(); ++j) {
              if (a.slots[j].bound.size() != type[j]) {
                fail(ErrorKind::kArityMismatch,
                     "slot " + std::to_string(j) + " of quantifier '" + a.name +
                         "' binds " + std::to_string(a.slots[j].bound.size()) +
                         " variables, type " + type.to_string());
              }
              node.slot_bound.push_back(a.slots[j].bound);
            }
          },
          [&](const Negation&) { node.kind = Kind::kNot; },
          [&](const Conjunction&) { node.kind = Kind::kAnd; },
          [&](const Disjunction&) { node.kind = Kind::kOr; },
          [&](const ExistsBlock& a) {
            node.kind = Kind::kExists;
            node.vars = a.vars;
          },
          [&](const ForallBlock& a) {
            node.kind = Kind::kForall;
            node.vars = a.vars;
          },
      },
      phi.node());
  note(node.vars);
  for (const auto& bound : node.slot_bound) note(bound);

  std::vector<std::uint32_t> children;
  std::visit(
      Overloaded{
          [](const PredicateAtom&) {},
          [](const EqualityAtom&) {},
          [&](const QuantifierApplication& a) {
            for (const auto& s : a.slots) {
              children.push_back(compile(interpretation, *s.body));
            }
          },
          [&](const Negation& a) {
            children.push_back(compile(interpretation, *a.body));
          },
          [&](const Conjunction& a) {
            for (const auto& p : a.parts) {
              children.push_back(compile(interpretation, *p));
            }
          },
          [&](const Disjunction& a) {
            for (const auto& p : a.parts) {
              children.push_back(compile(interpretation, *p));
            }
          },
          [&](const ExistsBlock& a) {
            children.push_back(compile(interpretation, *a.body));
          },
          [&](const ForallBlock& a) {
            children.push_back(compile(interpretation, *a.body));
          },
      },
      phi.node());
  node.children = std::move(children);
  nodes_.push_back(std::move(node));
  return static_cast<std::uint32_t>(nodes_.size() - 1);
}

bool CompiledFormula::eval_block(const Node& node, std::vector<Element>& env,
                                 bool universal) const {
  std::vector<Element> saved;
  saved.reserve(node.vars.size());
  for (Var v : node.vars) {
    saved.push_back(env[v]);
    env[v] = 0;
  }
  bool result = universal;
  do {
    if (eval_node(node.children[0], env) != universal) {
      result = !universal;
      break;
    }
  } while (advance(node.vars, env, n_));
  for (std::size_t i = 0; i < node.vars.size(); ++i) {
    env[node.vars[i]] = saved[i];
  }
  return result;
}

bool CompiledFormula::eval_node(std::uint32_t id,
                                std::vector<Element>& env) const {
  const Node& node = nodes_[id];
  switch (node.kind) {
    case Kind::kPred: {
      std::size_t index = 0;
      for (Var v : node.vars) index = index * n_ + env[v];
      return node.relation->contains_index(index);
    }
    case Kind::kEq:
      return env[node.vars[0]] == env[node.vars[1]];
    case Kind::kNot:
      return !eval_node(node.children[0], env);
    case Kind::kAnd:
      for (std::uint32_t c : node.children) {
        if (!eval_node(c, env)) return false;
      }
      return true;
    case Kind::kOr:
      for (std::uint32_t c : node.children) {
        if (eval_node(c, env)) return true;
      }
      return false;
    case Kind::kExists:
      return eval_block(node, env, false);
    case Kind::kForall:
      return eval_block(node, env, true);
    case Kind::kQuant: {
      Member member;
      member.reserve(node.children.size());
      for (std::size_t j = 0; j < node.children.size(); ++j) {
        const std::vector<Var>& bound = node.slot_bound[j];
        std::vector<Element> saved;
        for (Var v : bound) {
          saved.push_back(env[v]);
          env[v] = 0;
        }
        Relation slot(n_, static_cast<unsigned>(bound.size()));
        std::size_t index = 0;
        do {
          if (eval_node(node.children[j], env)) slot.insert_index(index);
          ++index;
        } while (advance(bound, env, n_));
        for (std::size_t i = 0; i < bound.size(); ++i) env[bound[i]] = saved[i];
        member.push_back(std::move(slot));
      }
      return node.quantifier->contains(member);
    }
  }
  return false;
}

std::vector<Element> CompiledFormula::make_env(
    const Assignment& sigma, const std::set<Var>& exempt) const {
  Var top = max_var_;
  for (const auto& [v, e] : sigma) top = std::max(top, v);
  for (Var v : exempt) top = std::max(top, v);
  std::vector<Element> env(static_cast<std::size_t>(top) + 1, 0);
  for (Var v : free_) {
    if (exempt.count(v)) continue;
    auto it = sigma.find(v);
    if (it == sigma.end()) {
      fail(ErrorKind::kUnboundVariable,
           "free variable x" + std::to_string(v) + " is not assigned");
    }
  }
  for (const auto& [v, e] : sigma) {
    if (e >= n_) {
      fail(ErrorKind::kDomainMismatch,
           "assignment maps x" + std::to_string(v) + " outside the domain");
    }
    env[v] = e;
  }
  return env;
}

bool CompiledFormula::eval(const Assignment& sigma) const {
  std::vector<Element> env = make_env(sigma, {});
  return eval_node(root_, env);
}

Relation CompiledFormula::extension(const std::vector<Var>& vars,
                                    const Assignment& sigma) const {
  const std::set<Var> exempt(vars.begin(), vars.end());
  if (exempt.size() != vars.size()) {
    fail(ErrorKind::kInvalidArgument, "extension variables must be distinct");
  }
  std::vector<Element> env = make_env(sigma, exempt);
  for (Var v : vars) env[v] = 0;
  Relation out(n_, static_cast<unsigned>(vars.size()));
  std::size_t index = 0;
  do {
    if (eval_node(root_, env)) out.insert_index(index);
    ++index;
  } while (advance(vars, env, n_));
  return out;
}

bool eval(const Structure& structure, const Formula& phi,
          const Assignment& sigma) {
  Interpretation interpretation(structure);
  return CompiledFormula(interpretation, phi).eval(sigma);
}

Relation extension(const Structure& structure, const Formula& phi,
                   const std::vector<Var>& vars, const Assignment& sigma) {
  Interpretation interpretation(structure);
  return CompiledFormula(interpretation, phi).extension(vars, sigma);
}

}  // namespace galdual
