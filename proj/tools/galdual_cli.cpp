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

// Command-line front end. Talks to the engine only through the C API.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "galdual/galdual.h"

namespace {

constexpr int kExitLawFailed = 1;
constexpr int kExitError = 2;

struct Settings {
  bool json = false;
  uint64_t seed = 1;
  uint32_t similarity_degree = 0;
  uint64_t max_tuples = 0;
};

class CliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void check(gd_status status, const std::string& context) {
  if (status != GD_OK) {
    throw CliError(context + ": " + gd_status_name(status) + ": " +
                   gd_last_error());
  }
}

struct StructureDeleter {
  void operator()(gd_structure* p) const { gd_structure_free(p); }
};
struct TransformsDeleter {
  void operator()(gd_transforms* p) const { gd_transforms_free(p); }
};
struct ReportDeleter {
  void operator()(gd_report* p) const { gd_report_free(p); }
};
using StructurePtr = std::unique_ptr<gd_structure, StructureDeleter>;
using TransformsPtr = std::unique_ptr<gd_transforms, TransformsDeleter>;
using ReportPtr = std::unique_ptr<gd_report, ReportDeleter>;

StructurePtr load_structure(const std::string& path) {
  gd_structure* out = nullptr;
  check(gd_structure_parse(slurp(path).c_str(), &out), path);
  return StructurePtr(out);
}

TransformsPtr load_transforms(const std::string& path) {
  gd_transforms* out = nullptr;
  check(gd_transforms_parse(slurp(path).c_str(), &out), path);
  return TransformsPtr(out);
}

gd_limits limits_of(const Settings& settings) {
  gd_limits limits;
  gd_limits_default(&limits);
  if (settings.similarity_degree) {
    limits.max_similarity_degree = settings.similarity_degree;
  }
  if (settings.max_tuples) limits.max_tuples = settings.max_tuples;
  return limits;
}

int emit(gd_status status, gd_report* const& raw, const Settings& settings,
         const std::string& context) {
  check(status, context);
  ReportPtr report(raw);
  char* text = nullptr;
  check(settings.json ? gd_report_json(report.get(), &text)
                      : gd_report_text(report.get(), &text),
        "rendering the report");
  std::fputs(text, stdout);
  gd_string_free(text);
  return gd_report_passed(report.get()) ? 0 : kExitLawFailed;
}

void common_flags(CLI::App* cmd, Settings& settings) {
  cmd->add_flag("--json", settings.json, "Machine-readable report");
  cmd->add_option("--seed", settings.seed, "Seed for randomized sampling");
  cmd->add_option("--similarity-degree", settings.similarity_degree,
                  "Raise the similarity-space guard (default 3)");
  cmd->add_option("--max-tuples", settings.max_tuples,
                  "Raise the index-space guard");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galois duality engine for finite permutation groups, "
               "similarity monoids, relations and quantifiers"};
  app.require_subcommand(1);
  Settings settings;
  std::string input;
  std::string target;
  std::string mode = "group";
  std::string qtype;
  std::string law;
  uint32_t arity = 0;
  uint32_t n = 0;
  uint32_t samples = 0;
  bool no_equality = false;

  auto* aut = app.add_subcommand("aut", "Automorphism group of a structure");
  aut->add_option("structure", input, "Structure document")->required();
  common_flags(aut, settings);

  auto* inv = app.add_subcommand(
      "inv", "Invariant relations and quantifiers of a transform set");
  inv->add_option("transforms", input, "Transform document")->required();
  inv->add_option("--arity", arity, "Largest relation arity (default 1)");
  inv->add_option("--qtype", qtype, "Quantifier types, e.g. 1 or 1;2,1");
  common_flags(inv, settings);

  auto* closure = app.add_subcommand("closure", "Closure of a transform set");
  closure->add_option("transforms", input, "Transform document")->required();
  closure->add_option("--mode", mode, "group | k=K | sets=M | full-monoid");
  common_flags(closure, settings);

  auto* define = app.add_subcommand(
      "define", "Decide definability of a target and give a witness");
  define->add_option("structure", input, "Structure document")->required();
  define->add_option("target", target, "Document with one relation or quantifier")
      ->required();
  define->add_flag("--no-equality", no_equality, "Equality-free language");
  common_flags(define, settings);

  auto* sim = app.add_subcommand("sim", "Similarity monoid of a structure");
  sim->add_option("structure", input, "Structure document")->required();
  common_flags(sim, settings);

  auto* quotient = app.add_subcommand(
      "quotient", "Indistinguishability blocks and the quotient structure");
  quotient->add_option("structure", input, "Structure document")->required();
  common_flags(quotient, settings);

  auto* checkcmd = app.add_subcommand("check", "Verify a law");
  checkcmd->add_option("input", input,
                       "Structure or transform document; random instances "
                       "when omitted");
  checkcmd
      ->add_option("--law", law,
                   "kras-group | kras-def | mcgee | cor | respect | "
                   "allisgood | propaut | bijective")
      ->required();
  checkcmd->add_option("--target", target, "Target document for kras-def");
  checkcmd->add_option("--n", n, "Domain size for generated instances");
  checkcmd->add_option("--arity", arity, "Arity (kras-group k, mcgee k_max)");
  checkcmd->add_option("--qtype", qtype, "Quantifier types, e.g. 1 or 1;1,1");
  checkcmd->add_option("--samples", samples, "Number of generated instances");
  common_flags(checkcmd, settings);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    const gd_limits limits = limits_of(settings);
    gd_report* report = nullptr;
    if (aut->parsed()) {
      auto s = load_structure(input);
      return emit(gd_aut(s.get(), &limits, &report), report, settings, "aut");
    }
    if (inv->parsed()) {
      auto t = load_transforms(input);
      return emit(gd_inv(t.get(), arity, qtype.c_str(), &limits, &report), report,
                  settings, "inv");
    }
    if (closure->parsed()) {
      auto t = load_transforms(input);
      return emit(gd_closure(t.get(), mode.c_str(), &limits, &report), report,
                  settings, "closure");
    }
    if (define->parsed()) {
      auto s = load_structure(input);
      auto t = load_structure(target);
      return emit(gd_define(s.get(), t.get(), no_equality ? 0 : 1, &limits,
                            &report),
                  report, settings, "define");
    }
    if (sim->parsed()) {
      auto s = load_structure(input);
      return emit(gd_sim(s.get(), &limits, &report), report, settings, "sim");
    }
    if (quotient->parsed()) {
      auto s = load_structure(input);
      return emit(gd_quotient(s.get(), &limits, &report), report, settings,
                  "quotient");
    }
    gd_check_options options;
    gd_check_options_default(&options);
    StructurePtr structure;
    StructurePtr target_doc;
    TransformsPtr transforms;
    if (!input.empty()) {
      const std::string text = slurp(input);
      int is_transforms = 0;
      check(gd_document_kind(text.c_str(), &is_transforms), input);
      if (is_transforms) {
        transforms = load_transforms(input);
        options.transforms = transforms.get();
      } else {
        structure = load_structure(input);
        options.structure = structure.get();
      }
    }
    if (!target.empty()) {
      target_doc = load_structure(target);
      options.target = target_doc.get();
    }
    if (n) options.n = n;
    options.arity = arity;
    options.qtypes = qtype.empty() ? nullptr : qtype.c_str();
    options.seed = settings.seed;
    if (samples) options.samples = samples;
    return emit(gd_check(law.c_str(), &options, &limits, &report), report,
                settings, "check");
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitError;
  }
}
