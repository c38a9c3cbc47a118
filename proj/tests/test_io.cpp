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

#include "galdual/error.hpp"
#include "galdual/io.hpp"
#include "galdual/random.hpp"
#include "galdual/report.hpp"

using namespace galdual;

namespace {

std::string error_text(ErrorKind expected, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), expected) << e.what();
    return e.what();
  }
  ADD_FAILURE() << "no error thrown";
  return {};
}

const char* kQeCanonical = R"({
  "domain_size": 4,
  "relations": [
    {
      "name": "bot",
      "arity": 1,
      "tuples": []
    },
    {
      "name": "top",
      "arity": 1,
      "tuples": [[0],[1],[2],[3]]
    }
  ],
  "quantifiers": [
    {
      "name": "QE",
      "type": [1],
      "members": [[[[0],[2]]]]
    }
  ]
}
)";

}  // namespace

TEST(Io, StructureGoldenIsByteStable) {
  const std::string loose = R"({"quantifiers": [{"members": [[[[2], [0]]]], "type": [1], "name": "QE"}],
    "relations": [{"name": "top", "arity": 1, "tuples": [[3], [1], [2], [0]]},
                  {"name": "bot", "arity": 1, "tuples": []}],
    "domain_size": 4})";
  const Structure s = parse_structure(loose);
  EXPECT_EQ(render_structure(s), kQeCanonical);
  EXPECT_EQ(render_structure(parse_structure(kQeCanonical)), kQeCanonical);
}

TEST(Io, RoundTripRandomDocuments) {
  Rng rng(131);
  for (int trial = 0; trial < 40; ++trial) {
    StructureShape shape;
    shape.max_relations = 3;
    shape.max_arity = 3;
    shape.max_quantifiers = 2;
    shape.quantifier_type = trial % 2 ? QuantifierType{1} : QuantifierType{1, 1};
    const std::size_t n = 2 + trial % 3;
    const Structure s = random_structure(n, rng, shape);
    const std::string text = render_structure(s);
    const Structure back = parse_structure(text);
    EXPECT_EQ(back, s);
    EXPECT_EQ(render_structure(back), text);

    TransformDocument doc{n, {}, {}};
    doc.permutations = random_generator_set(n, rng).elements();
    doc.similarities = random_similarity_set(n, rng).members();
    const std::string ttext = render_transforms(doc);
    const TransformDocument tback = parse_transforms(ttext);
    EXPECT_EQ(tback.permutations, doc.permutations);
    EXPECT_EQ(tback.similarities, doc.similarities);
    EXPECT_EQ(render_transforms(tback), ttext);
  }
}

TEST(Io, ParseErrorsCarryLineAndColumn) {
  const std::string msg = error_text(ErrorKind::kParse, [] {
    parse_structure("{\n  \"domain_size\": 3,\n  \"relations\": [ x ]\n}\n");
  });
  EXPECT_NE(msg.find("line 3, column"), std::string::npos) << msg;
}

TEST(Io, ValidationErrorsNameThePath) {
  EXPECT_EQ(error_text(ErrorKind::kValidation,
                       [] {
                         parse_structure(R"({"domain_size": 3, "relations": [
                           {"name": "R", "arity": 1, "tuples": [[0], [5]]}]})");
                       }),
            "relations[0].tuples[1][0]: element 5 outside the domain of size 3");
  EXPECT_EQ(error_text(ErrorKind::kValidation,
                       [] { parse_structure(R"({"domain_size": 3, "colour": 1})"); }),
            "document: unknown field \"colour\"");
  error_text(ErrorKind::kValidation, [] { parse_structure(R"({"relations": []})"); });
  error_text(ErrorKind::kValidation, [] {
    parse_structure(R"({"domain_size": 2, "relations": [
      {"name": "R", "arity": 1, "tuples": [[0], [0]]}]})");
  });
  error_text(ErrorKind::kValidation, [] {
    parse_structure(R"({"domain_size": 2, "relations": [
      {"name": "R", "arity": 1, "tuples": []}, {"name": "R", "arity": 2, "tuples": []}]})");
  });
  error_text(ErrorKind::kValidation, [] {
    parse_structure(R"({"domain_size": 2, "relations": [
      {"name": "R", "arity": 2, "tuples": [[0]]}]})");
  });
  error_text(ErrorKind::kValidation, [] {
    parse_structure(R"({"domain_size": 2, "quantifiers": [
      {"name": "Q", "type": [1], "members": [[[[0]], [[1]]]]}]})");
  });
  error_text(ErrorKind::kValidation, [] {
    parse_structure(R"({"domain_size": 2, "relations": [
      {"name": "a b", "arity": 1, "tuples": []}]})");
  });
  const std::string bijection = error_text(ErrorKind::kValidation, [] {
    parse_transforms(R"({"domain_size": 3, "permutations": [[0, 0, 1]]})");
  });
  EXPECT_NE(bijection.find("permutations[0]"), std::string::npos) << bijection;
  const std::string total = error_text(ErrorKind::kValidation, [] {
    parse_transforms(R"({"domain_size": 2, "similarities": [[[0, 0]]]})");
  });
  EXPECT_NE(total.find("total and surjective"), std::string::npos) << total;
}

TEST(Io, TargetsAndDocumentKinds) {
  const Target r = parse_target(R"({"domain_size": 2, "relations": [
    {"name": "T", "arity": 1, "tuples": [[0]]}]})");
  ASSERT_TRUE(std::holds_alternative<Relation>(r));
  EXPECT_TRUE(std::get<Relation>(r).contains(Tuple{0}));
  const Target q = parse_target(R"({"domain_size": 2, "quantifiers": [
    {"name": "T", "type": [1], "members": [[[[1]]]]}]})");
  ASSERT_TRUE(std::holds_alternative<Quantifier>(q));
  error_text(ErrorKind::kValidation, [] { parse_target(R"({"domain_size": 2})"); });

  EXPECT_EQ(detect_document(kQeCanonical), DocumentKind::kStructure);
  EXPECT_EQ(detect_document(R"({"domain_size": 2, "permutations": [[1, 0]]})"),
            DocumentKind::kTransforms);
}

TEST(Report, DigestAndSchema) {
  EXPECT_EQ(digest(""), "cbf29ce484222325");
  EXPECT_EQ(digest("a"), "af63dc4c8601ec8c");

  Report r;
  r.law = "demo";
  r.statement = "a statement";
  r.instance_digest = digest("x");
  r.passed = false;
  r.counterexample = Json{{"permutation", "(0 1)"}};
  r.timing_ms = 1.5;
  const Json j = report_to_json(r);
  EXPECT_EQ(j["law"], "demo");
  EXPECT_EQ(j["verdict"], "fail");
  EXPECT_EQ(j["instance_digest"], r.instance_digest);
  EXPECT_TRUE(j.contains("timing_ms"));
  EXPECT_TRUE(j.contains("counterexample"));
  EXPECT_FALSE(j.contains("witness"));
  EXPECT_NE(report_to_text(r).find("verdict:   FAIL"), std::string::npos);

  Report ok = r;
  ok.passed = true;
  ok.counterexample.reset();
  const Report both = combine_reports("demo", "all", {ok, r});
  EXPECT_FALSE(both.passed);
  EXPECT_TRUE(both.counterexample.has_value());
  EXPECT_TRUE(combine_reports("demo", "all", {ok, ok}).passed);
}
