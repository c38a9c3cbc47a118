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

#include "galdual/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "galdual/error.hpp"

namespace galdual {

namespace {

using InJson = nlohmann::json;

[[noreturn]] void invalid(const std::string& path, const std::string& message) {
  fail(ErrorKind::kValidation, path + ": " + message);
}

InJson parse_json(std::string_view text) {
  try {
    return InJson::parse(text);
  } catch (const InJson::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte, text.size() + 1);
    for (std::size_t i = 0; i + 1 < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto cut = what.find("syntax error"); cut != std::string::npos) {
      what = what.substr(cut);
    }
    fail(ErrorKind::kParse, "line " + std::to_string(line) + ", column " +
                                std::to_string(column) + ": " + what);
  }
}

void check_fields(const InJson& object, const std::string& path,
                  const std::vector<std::string>& required,
                  const std::vector<std::string>& optional = {}) {
  if (!object.is_object()) invalid(path, "expected an object");
  for (const auto& [key, value] : object.items()) {
    if (std::find(required.begin(), required.end(), key) == required.end() &&
        std::find(optional.begin(), optional.end(), key) == optional.end()) {
      invalid(path, "unknown field \"" + key + "\"");
    }
  }
  for (const std::string& key : required) {
    if (!object.contains(key)) invalid(path, "missing field \"" + key + "\"");
  }
}

const InJson& array_at(const InJson& value, const std::string& path) {
  if (!value.is_array()) invalid(path, "expected an array");
  return value;
}

std::size_t natural(const InJson& value, const std::string& path) {
  if (!value.is_number_unsigned()) {
    if (value.is_number_integer() && value.get<std::int64_t>() >= 0) {
      return value.get<std::size_t>();
    }
    invalid(path, "expected a non-negative integer");
  }
  return value.get<std::size_t>();
}

Element element(const InJson& value, std::size_t n, const std::string& path) {
  const std::size_t a = natural(value, path);
  if (a >= n) {
    invalid(path, "element " + std::to_string(a) +
                      " outside the domain of size " + std::to_string(n));
  }
  return static_cast<Element>(a);
}

std::string name_at(const InJson& value, const std::string& path) {
  if (!value.is_string() || value.get<std::string>().empty()) {
    invalid(path, "expected a non-empty string");
  }
  const std::string name = value.get<std::string>();
  for (char c : name) {
    if (c == '(' || c == ')' || c == ' ' || c == '\t' || c == '\n') {
      invalid(path, "name \"" + name + "\" contains a reserved character");
    }
  }
  return name;
}

Relation read_tuples(const InJson& value, std::size_t n, unsigned arity,
                     const std::string& path) {
  require_index_space(checked_power(n, arity), Limits{}, "relation document");
  Relation relation(n, arity);
  const InJson& tuples = array_at(value, path);
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    const std::string at = path + "[" + std::to_string(i) + "]";
    const InJson& t = array_at(tuples[i], at);
    if (t.size() != arity) {
      invalid(at, "tuple of length " + std::to_string(t.size()) +
                      " in a relation of arity " + std::to_string(arity));
    }
    Tuple tuple(arity);
    for (unsigned l = 0; l < arity; ++l) {
      tuple[l] = element(t[l], n, at + "[" + std::to_string(l) + "]");
    }
    if (relation.contains(tuple)) invalid(at, "duplicate tuple");
    relation.insert(tuple);
  }
  return relation;
}

std::size_t read_domain(const InJson& doc) {
  const std::size_t n = natural(doc.at("domain_size"), "domain_size");
  if (n == 0) invalid("domain_size", "the domain must be non-empty");
  return n;
}

Structure structure_from_json(const InJson& doc) {
  check_fields(doc, "document", {"domain_size"}, {"relations", "quantifiers"});
  const std::size_t n = read_domain(doc);
  Structure structure(n);
  std::set<std::string> names;
  auto claim = [&](const std::string& name, const std::string& path) {
    if (!names.insert(name).second) {
      invalid(path, "duplicate name \"" + name + "\"");
    }
  };
  if (doc.contains("relations")) {
    const InJson& list = array_at(doc.at("relations"), "relations");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string path = "relations[" + std::to_string(i) + "]";
      check_fields(list[i], path, {"name", "arity", "tuples"});
      const std::string name = name_at(list[i].at("name"), path + ".name");
      claim(name, path + ".name");
      const std::size_t arity = natural(list[i].at("arity"), path + ".arity");
      if (arity > 64) invalid(path + ".arity", "arity too large");
      structure.add_relation(
          name, read_tuples(list[i].at("tuples"), n,
                            static_cast<unsigned>(arity), path + ".tuples"));
    }
  }
  if (doc.contains("quantifiers")) {
    const InJson& list = array_at(doc.at("quantifiers"), "quantifiers");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string path = "quantifiers[" + std::to_string(i) + "]";
      check_fields(list[i], path, {"name", "type", "members"});
      const std::string name = name_at(list[i].at("name"), path + ".name");
      claim(name, path + ".name");
      const InJson& type_json = array_at(list[i].at("type"), path + ".type");
      if (type_json.empty()) invalid(path + ".type", "a type has at least one slot");
      std::vector<unsigned> slots;
      for (std::size_t j = 0; j < type_json.size(); ++j) {
        const std::size_t arity =
            natural(type_json[j], path + ".type[" + std::to_string(j) + "]");
        if (arity > 64) invalid(path + ".type", "slot arity too large");
        slots.push_back(static_cast<unsigned>(arity));
      }
      Quantifier quantifier(n, QuantifierType(slots));
      const InJson& members = array_at(list[i].at("members"), path + ".members");
      for (std::size_t m = 0; m < members.size(); ++m) {
        const std::string at = path + ".members[" + std::to_string(m) + "]";
        const InJson& member_json = array_at(members[m], at);
        if (member_json.size() != slots.size()) {
          invalid(at, "member with " + std::to_string(member_json.size()) +
                          " slots for a type with " +
                          std::to_string(slots.size()));
        }
        Member member;
        for (std::size_t j = 0; j < slots.size(); ++j) {
          member.push_back(read_tuples(member_json[j], n, slots[j],
                                       at + "[" + std::to_string(j) + "]"));
        }
        if (quantifier.contains(member)) invalid(at, "duplicate member");
        quantifier.insert(std::move(member));
      }
      structure.add_quantifier(name, std::move(quantifier));
    }
  }
  return structure;
}

TransformDocument transforms_from_json(const InJson& doc) {
  check_fields(doc, "document", {"domain_size"},
               {"permutations", "similarities"});
  TransformDocument out;
  out.domain_size = read_domain(doc);
  const std::size_t n = out.domain_size;
  if (doc.contains("permutations")) {
    const InJson& list = array_at(doc.at("permutations"), "permutations");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string path = "permutations[" + std::to_string(i) + "]";
      const InJson& images = array_at(list[i], path);
      if (images.size() != n) {
        invalid(path, "expected " + std::to_string(n) + " images, got " +
                          std::to_string(images.size()));
      }
      std::vector<Element> map(n);
      std::vector<bool> hit(n, false);
      for (std::size_t a = 0; a < n; ++a) {
        map[a] = element(images[a], n, path + "[" + std::to_string(a) + "]");
        if (hit[map[a]]) {
          invalid(path, "not a bijection: " + std::to_string(map[a]) +
                            " is hit twice");
        }
        hit[map[a]] = true;
      }
      out.permutations.emplace_back(std::move(map));
    }
  }
  if (doc.contains("similarities")) {
    const InJson& list = array_at(doc.at("similarities"), "similarities");
    if (!list.empty() && n > 8) {
      invalid("similarities", "similarities are supported on at most 8 elements");
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string path = "similarities[" + std::to_string(i) + "]";
      const InJson& pairs = array_at(list[i], path);
      std::uint64_t mask = 0;
      for (std::size_t j = 0; j < pairs.size(); ++j) {
        const std::string at = path + "[" + std::to_string(j) + "]";
        const InJson& pair = array_at(pairs[j], at);
        if (pair.size() != 2) invalid(at, "expected a pair");
        const Element a = element(pair[0], n, at + "[0]");
        const Element b = element(pair[1], n, at + "[1]");
        const std::uint64_t bit = std::uint64_t{1} << (a * n + b);
        if (mask & bit) invalid(at, "duplicate pair");
        mask |= bit;
      }
      if (!is_similarity_mask(n, mask)) {
        invalid(path, "not total and surjective");
      }
      out.similarities.emplace_back(n, mask);
    }
  }
  return out;
}

void pretty(const Json& value, int depth, std::string& out) {
  const bool nested =
      (value.is_object() && !value.empty()) ||
      (value.is_array() &&
       std::any_of(value.begin(), value.end(),
                   [](const Json& v) { return v.is_object(); }));
  if (!nested) {
    out += value.dump();
    return;
  }
  const std::string pad(2 * (depth + 1), ' ');
  out += value.is_object() ? "{\n" : "[\n";
  bool first = true;
  if (value.is_object()) {
    for (const auto& [key, item] : value.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + Json(key).dump() + ": ";
      pretty(item, depth + 1, out);
    }
  } else {
    for (const Json& item : value) {
      if (!first) out += ",\n";
      first = false;
      out += pad;
      pretty(item, depth + 1, out);
    }
  }
  out += "\n" + std::string(2 * depth, ' ') + (value.is_object() ? "}" : "]");
}

}  // namespace

Json tuple_to_json(const Tuple& tuple) {
  Json out = Json::array();
  for (Element a : tuple) out.push_back(a);
  return out;
}

Json relation_to_json(const Relation& relation) {
  Json out = Json::array();
  for (const Tuple& t : relation.tuples()) out.push_back(tuple_to_json(t));
  return out;
}

Json member_to_json(const Member& member) {
  Json out = Json::array();
  for (const Relation& r : member) out.push_back(relation_to_json(r));
  return out;
}

Json quantifier_to_json(const Quantifier& quantifier) {
  Json out = Json::array();
  for (const Member& m : quantifier.members()) out.push_back(member_to_json(m));
  return out;
}

Json permutation_to_json(const Permutation& g) {
  Json out = Json::array();
  for (Element a = 0; a < g.degree(); ++a) out.push_back(g(a));
  return out;
}

Json similarity_to_json(const Similarity& p) {
  Json out = Json::array();
  for (const auto& [a, b] : p.pairs()) out.push_back(Json::array({a, b}));
  return out;
}

Json permutation_set_to_json(const PermutationSet& set) {
  Json out = Json::array();
  for (const Permutation& g : set.elements()) out.push_back(permutation_to_json(g));
  return out;
}

Json similarity_set_to_json(const SimilaritySet& set) {
  // Lexicographic on pair lists.
  std::vector<Json> items;
  for (const Similarity& p : set.members()) items.push_back(similarity_to_json(p));
  std::sort(items.begin(), items.end());
  return Json(items);
}

Json partition_to_json(const EquivalencePartition& partition) {
  Json out = Json::array();
  for (const auto& block : partition.blocks()) {
    Json b = Json::array();
    for (Element a : block) b.push_back(a);
    out.push_back(std::move(b));
  }
  return out;
}

Json structure_to_json(const Structure& structure) {
  Json doc;
  doc["domain_size"] = structure.domain_size();
  Json relations = Json::array();
  for (const auto& [name, r] : structure.relations()) {
    Json item;
    item["name"] = name;
    item["arity"] = r.arity();
    item["tuples"] = relation_to_json(r);
    relations.push_back(std::move(item));
  }
  Json quantifiers = Json::array();
  for (const auto& [name, q] : structure.quantifiers()) {
    Json item;
    item["name"] = name;
    item["type"] = q.type().slots();
    item["members"] = quantifier_to_json(q);
    quantifiers.push_back(std::move(item));
  }
  doc["relations"] = std::move(relations);
  doc["quantifiers"] = std::move(quantifiers);
  return doc;
}

Json transforms_to_json(const TransformDocument& document) {
  Json doc;
  doc["domain_size"] = document.domain_size;
  Json perms = Json::array();
  for (const Permutation& g : document.permutations) {
    perms.push_back(permutation_to_json(g));
  }
  Json sims = Json::array();
  for (const Similarity& p : document.similarities) {
    sims.push_back(similarity_to_json(p));
  }
  doc["permutations"] = std::move(perms);
  doc["similarities"] = std::move(sims);
  return doc;
}

Structure parse_structure(std::string_view text) {
  return structure_from_json(parse_json(text));
}

TransformDocument parse_transforms(std::string_view text) {
  return transforms_from_json(parse_json(text));
}

Target parse_target(std::string_view text) {
  const Structure s = parse_structure(text);
  if (s.relations().size() + s.quantifiers().size() != 1) {
    invalid("document", "a target document holds exactly one relation or "
                        "quantifier");
  }
  if (!s.relations().empty()) return s.relations().begin()->second;
  return s.quantifiers().begin()->second;
}

std::string render_structure(const Structure& structure) {
  std::string out;
  pretty(structure_to_json(structure), 0, out);
  return out + "\n";
}

std::string render_transforms(const TransformDocument& document) {
  std::string out;
  pretty(transforms_to_json(document), 0, out);
  return out + "\n";
}

DocumentKind detect_document(std::string_view text) {
  const InJson doc = parse_json(text);
  if (!doc.is_object()) invalid("document", "expected an object");
  if (doc.contains("permutations") || doc.contains("similarities")) {
    return DocumentKind::kTransforms;
  }
  return DocumentKind::kStructure;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::kInvalidArgument, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace galdual
