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

#include "galdual/formula.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "galdual/error.hpp"

namespace galdual {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

void require_distinct(const std::vector<Var>& vars, const char* what) {
  std::set<Var> seen(vars.begin(), vars.end());
  if (seen.size() != vars.size()) {
    fail(ErrorKind::kInvalidArgument,
         std::string(what) + " binds a variable twice");
  }
}

FormulaPtr make(Formula::Node node) {
  return std::make_shared<const Formula>(std::move(node));
}

void collect_free(const Formula& phi, std::set<Var>& bound,
                  std::set<Var>& out) {
  auto visit_bound = [&](const std::vector<Var>& vars, const Formula& body) {
    std::vector<Var> added;
    for (Var v : vars) {
      if (bound.insert(v).second) added.push_back(v);
    }
    collect_free(body, bound, out);
    for (Var v : added) bound.erase(v);
  };
  std::visit(
      Overloaded{
          [&](const PredicateAtom& a) {
            for (Var v : a.args) {
              if (!bound.count(v)) out.insert(v);
            }
          },
          [&](const EqualityAtom& a) {
            if (!bound.count(a.lhs)) out.insert(a.lhs);
            if (!bound.count(a.rhs)) out.insert(a.rhs);
          },
          [&](const QuantifierApplication& a) {
            for (const auto& slot : a.slots) visit_bound(slot.bound, *slot.body);
          },
          [&](const Negation& a) { collect_free(*a.body, bound, out); },
          [&](const Conjunction& a) {
            for (const auto& p : a.parts) collect_free(*p, bound, out);
          },
          [&](const Disjunction& a) {
            for (const auto& p : a.parts) collect_free(*p, bound, out);
          },
          [&](const ExistsBlock& a) { visit_bound(a.vars, *a.body); },
          [&](const ForallBlock& a) { visit_bound(a.vars, *a.body); },
      },
      phi.node());
}

void render_vars(std::ostream& os, const std::vector<Var>& vars) {
  os << '(';
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) os << ' ';
    os << 'x' << vars[i];
  }
  os << ')';
}

void render_to(std::ostream& os, const Formula& phi) {
  std::visit(
      Overloaded{
          [&](const PredicateAtom& a) {
            os << "(pred " << a.name;
            for (Var v : a.args) os << " x" << v;
            os << ')';
          },
          [&](const EqualityAtom& a) {
            os << "(= x" << a.lhs << " x" << a.rhs << ')';
          },
          [&](const QuantifierApplication& a) {
            os << "(quant " << a.name;
            for (const auto& slot : a.slots) {
              os << " (";
              render_vars(os, slot.bound);
              os << ' ';
              render_to(os, *slot.body);
              os << ')';
            }
            os << ')';
          },
          [&](const Negation& a) {
            os << "(not ";
            render_to(os, *a.body);
            os << ')';
          },
          [&](const Conjunction& a) {
            os << "(and";
            for (const auto& p : a.parts) {
              os << ' ';
              render_to(os, *p);
            }
            os << ')';
          },
          [&](const Disjunction& a) {
            os << "(or";
            for (const auto& p : a.parts) {
              os << ' ';
              render_to(os, *p);
            }
            os << ')';
          },
          [&](const ExistsBlock& a) {
            os << "(exists ";
            render_vars(os, a.vars);
            os << ' ';
            render_to(os, *a.body);
            os << ')';
          },
          [&](const ForallBlock& a) {
            os << "(forall ";
            render_vars(os, a.vars);
            os << ' ';
            render_to(os, *a.body);
            os << ')';
          },
      },
      phi.node());
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FormulaPtr parse_all() {
    FormulaPtr phi = formula();
    skip_space();
    if (pos_ != text_.size()) error("trailing input");
    return phi;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::kParse,
         "formula: " + what + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      error(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  std::string_view word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) error("expected a symbol");
    return text_.substr(start, pos_ - start);
  }

  Var variable() {
    const std::size_t start = pos_;
    std::string_view w = word();
    Var v = 0;
    if (w.size() < 2 || w[0] != 'x') {
      pos_ = start;
      skip_space();
      error("expected a variable x<i>");
    }
    auto [ptr, ec] = std::from_chars(w.data() + 1, w.data() + w.size(), v);
    if (ec != std::errc() || ptr != w.data() + w.size()) {
      pos_ = start;
      skip_space();
      error("malformed variable '" + std::string(w) + "'");
    }
    return v;
  }

  std::vector<Var> variable_list() {
    expect('(');
    std::vector<Var> vars;
    while (!peek(')')) vars.push_back(variable());
    expect(')');
    return vars;
  }

  FormulaPtr formula() {
    expect('(');
    const std::string_view head = word();
    FormulaPtr out;
    if (head == "pred") {
      std::string name(word());
      std::vector<Var> args;
      while (!peek(')')) args.push_back(variable());
      out = pred(std::move(name), std::move(args));
    } else if (head == "=") {
      Var a = variable();
      Var b = variable();
      out = eq(a, b);
    } else if (head == "not") {
      out = neg(formula());
    } else if (head == "and" || head == "or") {
      std::vector<FormulaPtr> parts;
      while (!peek(')')) parts.push_back(formula());
      out = head == "and" ? make(Conjunction{std::move(parts)})
                          : make(Disjunction{std::move(parts)});
    } else if (head == "exists" || head == "forall") {
      std::vector<Var> vars = variable_list();
      FormulaPtr body = formula();
      out = head == "exists" ? exists(std::move(vars), std::move(body))
                             : forall(std::move(vars), std::move(body));
    } else if (head == "quant") {
      std::string name(word());
      std::vector<QuantifierSlot> slots;
      while (!peek(')')) {
        expect('(');
        std::vector<Var> bound = variable_list();
        FormulaPtr body = formula();
        expect(')');
        slots.push_back({std::move(bound), std::move(body)});
      }
      out = quant(std::move(name), std::move(slots));
    } else {
      error("unknown connective '" + std::string(head) + "'");
    }
    expect(')');
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FormulaPtr pred(std::string name, std::vector<Var> args) {
  return make(PredicateAtom{std::move(name), std::move(args)});
}

FormulaPtr eq(Var lhs, Var rhs) { return make(EqualityAtom{lhs, rhs}); }

FormulaPtr quant(std::string name, std::vector<QuantifierSlot> slots) {
  if (slots.empty()) {
    fail(ErrorKind::kInvalidArgument, "quantifier application without slots");
  }
  for (const auto& slot : slots) require_distinct(slot.bound, "quantifier slot");
  return make(QuantifierApplication{std::move(name), std::move(slots)});
}

FormulaPtr neg(FormulaPtr body) { return make(Negation{std::move(body)}); }

FormulaPtr conj(std::vector<FormulaPtr> parts) {
  if (parts.size() == 1) return parts.front();
  return make(Conjunction{std::move(parts)});
}

FormulaPtr disj(std::vector<FormulaPtr> parts) {
  if (parts.size() == 1) return parts.front();
  return make(Disjunction{std::move(parts)});
}

FormulaPtr exists(std::vector<Var> vars, FormulaPtr body) {
  require_distinct(vars, "exists");
  return make(ExistsBlock{std::move(vars), std::move(body)});
}

FormulaPtr forall(std::vector<Var> vars, FormulaPtr body) {
  require_distinct(vars, "forall");
  return make(ForallBlock{std::move(vars), std::move(body)});
}

FormulaPtr implies(FormulaPtr a, FormulaPtr b) {
  return make(Disjunction{{neg(std::move(a)), std::move(b)}});
}

FormulaPtr truth() { return make(Conjunction{}); }
FormulaPtr falsity() { return make(Disjunction{}); }

std::set<Var> free_variables(const Formula& phi) {
  std::set<Var> bound, out;
  collect_free(phi, bound, out);
  return out;
}

bool is_equality_free(const Formula& phi) {
  return std::visit(
      Overloaded{
          [](const PredicateAtom&) { return true; },
          [](const EqualityAtom&) { return false; },
          [](const QuantifierApplication& a) {
            for (const auto& s : a.slots) {
              if (!is_equality_free(*s.body)) return false;
            }
            return true;
          },
          [](const Negation& a) { return is_equality_free(*a.body); },
          [](const Conjunction& a) {
            for (const auto& p : a.parts) {
              if (!is_equality_free(*p)) return false;
            }
            return true;
          },
          [](const Disjunction& a) {
            for (const auto& p : a.parts) {
              if (!is_equality_free(*p)) return false;
            }
            return true;
          },
          [](const ExistsBlock& a) { return is_equality_free(*a.body); },
          [](const ForallBlock& a) { return is_equality_free(*a.body); },
      },
      phi.node());
}

std::size_t formula_size(const Formula& phi) {
  return std::visit(
      Overloaded{
          [](const PredicateAtom&) -> std::size_t { return 1; },
          [](const EqualityAtom&) -> std::size_t { return 1; },
          [](const QuantifierApplication& a) {
            std::size_t total = 1;
            for (const auto& s : a.slots) total += formula_size(*s.body);
            return total;
          },
          [](const Negation& a) { return 1 + formula_size(*a.body); },
          [](const Conjunction& a) {
            std::size_t total = 1;
            for (const auto& p : a.parts) total += formula_size(*p);
            return total;
          },
          [](const Disjunction& a) {
            std::size_t total = 1;
            for (const auto& p : a.parts) total += formula_size(*p);
            return total;
          },
          [](const ExistsBlock& a) { return 1 + formula_size(*a.body); },
          [](const ForallBlock& a) { return 1 + formula_size(*a.body); },
      },
      phi.node());
}

FormulaPtr translate_eq_to_sim(const FormulaPtr& phi, std::string_view name) {
  auto map_all = [&](const std::vector<FormulaPtr>& parts) {
    std::vector<FormulaPtr> out;
    out.reserve(parts.size());
    for (const auto& p : parts) out.push_back(translate_eq_to_sim(p, name));
    return out;
  };
  return std::visit(
      Overloaded{
          [&](const PredicateAtom&) { return phi; },
          [&](const EqualityAtom& a) {
            return pred(std::string(name), {a.lhs, a.rhs});
          },
          [&](const QuantifierApplication& a) {
            std::vector<QuantifierSlot> slots;
            for (const auto& s : a.slots) {
              slots.push_back({s.bound, translate_eq_to_sim(s.body, name)});
            }
            return make(QuantifierApplication{a.name, std::move(slots)});
          },
          [&](const Negation& a) {
            return neg(translate_eq_to_sim(a.body, name));
          },
          [&](const Conjunction& a) {
            return make(Conjunction{map_all(a.parts)});
          },
          [&](const Disjunction& a) {
            return make(Disjunction{map_all(a.parts)});
          },
          [&](const ExistsBlock& a) {
            return make(ExistsBlock{a.vars, translate_eq_to_sim(a.body, name)});
          },
          [&](const ForallBlock& a) {
            return make(ForallBlock{a.vars, translate_eq_to_sim(a.body, name)});
          },
      },
      phi->node());
}

std::string render(const Formula& phi) {
  std::ostringstream os;
  render_to(os, phi);
  return os.str();
}

FormulaPtr parse_formula(std::string_view text) {
  return Parser(text).parse_all();
}

}  // namespace galdual
