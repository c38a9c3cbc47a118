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

// Exercises the shared library through its C interface only.
#include <gtest/gtest.h>

#include <json.hpp>
#include <string>

#include "galdual/galdual.h"

namespace {

const char* kP0 =
    R"({"domain_size": 2, "relations": [{"name": "P", "arity": 1, "tuples": [[0]]}]})";
const char* kQe = R"({"domain_size": 4,
  "relations": [{"name": "bot", "arity": 1, "tuples": []},
                {"name": "top", "arity": 1, "tuples": [[0], [1], [2], [3]]}],
  "quantifiers": [{"name": "QE", "type": [1], "members": [[[[0], [2]]]]}]})";

nlohmann::json report_json(gd_report* report) {
  char* text = nullptr;
  EXPECT_EQ(gd_report_json(report, &text), GD_OK);
  nlohmann::json j = nlohmann::json::parse(text);
  gd_string_free(text);
  return j;
}

gd_structure* parse(const char* text) {
  gd_structure* s = nullptr;
  EXPECT_EQ(gd_structure_parse(text, &s), GD_OK) << gd_last_error();
  return s;
}

}  // namespace

TEST(CApi, VersionAndStatusNames) {
  EXPECT_NE(std::string(gd_version()), "");
  EXPECT_EQ(std::string(gd_status_name(GD_OK)), "ok");
  EXPECT_NE(std::string(gd_status_name(GD_ERROR_PARSE)), "ok");
}

TEST(CApi, StructureLifecycleAndRender) {
  gd_structure* s = parse(kP0);
  EXPECT_EQ(gd_structure_domain_size(s), 2u);
  char* text = nullptr;
  ASSERT_EQ(gd_structure_render(s, &text), GD_OK);
  gd_structure* again = parse(text);
  char* text2 = nullptr;
  ASSERT_EQ(gd_structure_render(again, &text2), GD_OK);
  EXPECT_STREQ(text, text2);
  gd_string_free(text);
  gd_string_free(text2);
  gd_structure_free(again);
  gd_structure_free(s);
}

TEST(CApi, ErrorsAreReportedByStatus) {
  gd_structure* s = nullptr;
  EXPECT_EQ(gd_structure_parse("{\"domain_size\": ", &s), GD_ERROR_PARSE);
  EXPECT_EQ(s, nullptr);
  EXPECT_NE(std::string(gd_last_error()).find("line 1"), std::string::npos);
  EXPECT_EQ(gd_structure_parse(R"({"domain_size": 2, "x": 1})", &s), GD_ERROR_VALIDATION);
  EXPECT_EQ(gd_structure_parse(nullptr, &s), GD_ERROR_INVALID_ARGUMENT);

  gd_transforms* t = nullptr;
  ASSERT_EQ(gd_transforms_parse(R"({"domain_size": 5, "permutations": [[1, 0, 2, 3, 4]]})", &t),
            GD_OK);
  gd_limits limits;
  gd_limits_default(&limits);
  limits.max_group_degree = 4;
  gd_report* report = nullptr;
  EXPECT_EQ(gd_closure(t, "group", &limits, &report), GD_ERROR_RESOURCE_LIMIT);
  EXPECT_EQ(report, nullptr);
  EXPECT_EQ(gd_closure(t, "bogus", nullptr, &report), GD_ERROR_INVALID_ARGUMENT);
  gd_transforms_free(t);

  gd_check_options options;
  gd_check_options_default(&options);
  EXPECT_EQ(gd_check("no-such-law", &options, nullptr, &report), GD_ERROR_INVALID_ARGUMENT);
}

TEST(CApi, AutReport) {
  gd_structure* s = parse(kP0);
  gd_report* report = nullptr;
  ASSERT_EQ(gd_aut(s, nullptr, &report), GD_OK);
  EXPECT_EQ(gd_report_passed(report), 1);
  const nlohmann::json j = report_json(report);
  EXPECT_EQ(j["law"], "aut");
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(j["witness"], nlohmann::json::array({"()"}));
  char* text = nullptr;
  ASSERT_EQ(gd_report_text(report, &text), GD_OK);
  EXPECT_NE(std::string(text).find("PASS"), std::string::npos);
  gd_string_free(text);
  gd_report_free(report);
  gd_structure_free(s);
}

TEST(CApi, DefineAndSimOnQe) {
  gd_structure* s = parse(kQe);
  gd_structure* target =
      parse(R"({"domain_size": 4, "quantifiers": [{"name": "T", "type": [1], "members": [[[[1], [3]]]]}]})");
  gd_limits limits;
  gd_limits_default(&limits);
  gd_report* report = nullptr;
  EXPECT_EQ(gd_sim(s, &limits, &report), GD_ERROR_RESOURCE_LIMIT);
  limits.max_similarity_degree = 4;
  ASSERT_EQ(gd_sim(s, &limits, &report), GD_OK) << gd_last_error();
  EXPECT_EQ(gd_report_passed(report), 1);
  gd_report_free(report);

  ASSERT_EQ(gd_define(s, target, 0, &limits, &report), GD_OK) << gd_last_error();
  EXPECT_EQ(gd_report_passed(report), 1);
  gd_report_free(report);
  gd_structure_free(target);
  gd_structure_free(s);
}

TEST(CApi, CheckIsDeterministicForASeed) {
  gd_check_options options;
  gd_check_options_default(&options);
  options.n = 3;
  options.seed = 7;
  gd_report* a = nullptr;
  gd_report* b = nullptr;
  ASSERT_EQ(gd_check("cor", &options, nullptr, &a), GD_OK) << gd_last_error();
  ASSERT_EQ(gd_check("cor", &options, nullptr, &b), GD_OK);
  EXPECT_EQ(gd_report_passed(a), 1);
  nlohmann::json ja = report_json(a);
  nlohmann::json jb = report_json(b);
  EXPECT_EQ(ja["instance_digest"], jb["instance_digest"]);
  ja.erase("timing_ms");
  jb.erase("timing_ms");
  ja["details"].erase("runs");
  jb["details"].erase("runs");
  EXPECT_EQ(ja, jb);
  gd_report_free(a);
  gd_report_free(b);

  options.qtypes = "1";
  gd_report* m = nullptr;
  ASSERT_EQ(gd_check("mcgee", &options, nullptr, &m), GD_OK);
  EXPECT_EQ(report_json(m)["details"]["counts"]["quantifiers_type_(1)"], 16);
  gd_report_free(m);
}
