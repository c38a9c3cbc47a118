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

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "galdual/definability.hpp"
#include "galdual/model.hpp"
#include "galdual/similarity.hpp"

namespace galdual {

using Json = nlohmann::ordered_json;

// JSON documents. Writers emit fields in a fixed order with names sorted and
// tuples in lexicographic order, so rendering is byte-stable. Readers reject
// unknown fields and report the offending path.
//
// Structure document:
//   {"domain_size": 3,
//    "relations": [{"name": "P", "arity": 1, "tuples": [[0], [1]]}],
//    "quantifiers": [{"name": "Q", "type": [1], "members": [[[[0], [2]]]]}]}
// A quantifier member is a list of slots, each slot a list of tuples.
//
// Transform document:
//   {"domain_size": 3, "permutations": [[1, 0, 2]],
//    "similarities": [[[0, 0], [0, 1], [1, 0], [1, 1], [2, 2]]]}

struct TransformDocument {
  std::size_t domain_size = 0;
  std::vector<Permutation> permutations;
  std::vector<Similarity> similarities;

  bool operator==(const TransformDocument&) const = default;
};

Json tuple_to_json(const Tuple& tuple);
Json relation_to_json(const Relation& relation);
Json member_to_json(const Member& member);
Json quantifier_to_json(const Quantifier& quantifier);
Json permutation_to_json(const Permutation& g);
Json similarity_to_json(const Similarity& p);
Json permutation_set_to_json(const PermutationSet& set);
Json similarity_set_to_json(const SimilaritySet& set);
Json partition_to_json(const EquivalencePartition& partition);

Json structure_to_json(const Structure& structure);
Json transforms_to_json(const TransformDocument& document);

/// Parses JSON text. Syntax errors are kParse with line and column;
/// schema errors are kValidation with the path of the offending field.
Structure parse_structure(std::string_view text);
TransformDocument parse_transforms(std::string_view text);
/// A structure document holding exactly one relation or quantifier.
Target parse_target(std::string_view text);

std::string render_structure(const Structure& structure);
std::string render_transforms(const TransformDocument& document);

enum class DocumentKind { kStructure, kTransforms };
/// Decided by the top-level fields present.
DocumentKind detect_document(std::string_view text);

/// Whole file contents; kInvalidArgument when it cannot be read.
std::string read_file(const std::string& path);

}  // namespace galdual
