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

#include "galdual/galdual.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "galdual/commands.hpp"
#include "galdual/error.hpp"

struct gd_structure {
  galdual::Structure value;
};
struct gd_transforms {
  galdual::TransformDocument value;
};
struct gd_report {
  galdual::Report value;
};

namespace {

thread_local std::string last_error;

gd_status status_of(galdual::ErrorKind kind) {
  using galdual::ErrorKind;
  switch (kind) {
    case ErrorKind::kParse: return GD_ERROR_PARSE;
    case ErrorKind::kValidation: return GD_ERROR_VALIDATION;
    case ErrorKind::kDomainMismatch: return GD_ERROR_DOMAIN_MISMATCH;
    case ErrorKind::kResourceLimit: return GD_ERROR_RESOURCE_LIMIT;
    case ErrorKind::kPrecondition: return GD_ERROR_PRECONDITION;
    case ErrorKind::kUnresolvedName:
    case ErrorKind::kUnboundVariable: return GD_ERROR_NAME;
    case ErrorKind::kArityMismatch:
    case ErrorKind::kInvalidArgument: return GD_ERROR_INVALID_ARGUMENT;
  }
  return GD_ERROR_INTERNAL;
}

// Runs body, mapping exceptions onto status codes.
template <class Body>
gd_status guarded(Body body) {
  last_error.clear();
  try {
    body();
    return GD_OK;
  } catch (const galdual::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return GD_ERROR_RESOURCE_LIMIT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return GD_ERROR_INTERNAL;
  }
}

gd_status null_argument(const char* what) {
  last_error = std::string("null argument: ") + what;
  return GD_ERROR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

galdual::Limits to_limits(const gd_limits* limits) {
  galdual::Limits out;
  if (limits) {
    out.max_tuples = limits->max_tuples;
    out.max_group_degree = limits->max_group_degree;
    out.max_similarity_degree = limits->max_similarity_degree;
    out.max_listed_objects = limits->max_listed_objects;
  }
  return out;
}

template <class Run>
gd_status make_report(gd_report** out, Run run) {
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = new gd_report{run()}; });
}

}  // namespace

extern "C" {

const char* gd_version(void) { return "0.1.0"; }

const char* gd_last_error(void) { return last_error.c_str(); }

const char* gd_status_name(gd_status status) {
  switch (status) {
    case GD_OK: return "ok";
    case GD_ERROR_PARSE: return "parse error";
    case GD_ERROR_VALIDATION: return "validation error";
    case GD_ERROR_DOMAIN_MISMATCH: return "domain mismatch";
    case GD_ERROR_RESOURCE_LIMIT: return "resource limit";
    case GD_ERROR_PRECONDITION: return "precondition violated";
    case GD_ERROR_NAME: return "unresolved name";
    case GD_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case GD_ERROR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void gd_limits_default(gd_limits* out) {
  if (!out) return;
  const galdual::Limits d;
  out->max_tuples = d.max_tuples;
  out->max_group_degree = static_cast<uint32_t>(d.max_group_degree);
  out->max_similarity_degree = static_cast<uint32_t>(d.max_similarity_degree);
  out->max_listed_objects = static_cast<uint32_t>(d.max_listed_objects);
}

void gd_check_options_default(gd_check_options* out) {
  if (!out) return;
  *out = gd_check_options{};
  out->n = 3;
  out->seed = 1;
  out->samples = 8;
}

void gd_string_free(char* text) { std::free(text); }

gd_status gd_structure_parse(const char* text, gd_structure** out) {
  if (!text) return null_argument("text");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = new gd_structure{galdual::parse_structure(text)}; });
}

gd_status gd_structure_render(const gd_structure* structure, char** out) {
  if (!structure) return null_argument("structure");
  if (!out) return null_argument("out");
  return guarded(
      [&] { *out = copy_string(galdual::render_structure(structure->value)); });
}

size_t gd_structure_domain_size(const gd_structure* structure) {
  return structure ? structure->value.domain_size() : 0;
}

void gd_structure_free(gd_structure* structure) { delete structure; }

gd_status gd_document_kind(const char* text, int* is_transforms) {
  if (!text) return null_argument("text");
  if (!is_transforms) return null_argument("is_transforms");
  return guarded([&] {
    *is_transforms = galdual::detect_document(text) ==
                     galdual::DocumentKind::kTransforms;
  });
}

gd_status gd_transforms_parse(const char* text, gd_transforms** out) {
  if (!text) return null_argument("text");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded(
      [&] { *out = new gd_transforms{galdual::parse_transforms(text)}; });
}

gd_status gd_transforms_render(const gd_transforms* transforms, char** out) {
  if (!transforms) return null_argument("transforms");
  if (!out) return null_argument("out");
  return guarded(
      [&] { *out = copy_string(galdual::render_transforms(transforms->value)); });
}

size_t gd_transforms_domain_size(const gd_transforms* transforms) {
  return transforms ? transforms->value.domain_size : 0;
}

void gd_transforms_free(gd_transforms* transforms) { delete transforms; }

gd_status gd_aut(const gd_structure* structure, const gd_limits* limits,
                 gd_report** out) {
  if (!structure) return null_argument("structure");
  return make_report(out, [&] {
    return galdual::run_aut(structure->value, to_limits(limits));
  });
}

gd_status gd_inv(const gd_transforms* transforms, uint32_t arity,
                 const char* qtypes, const gd_limits* limits, gd_report** out) {
  if (!transforms) return null_argument("transforms");
  return make_report(out, [&] {
    const auto types = qtypes && *qtypes
                           ? galdual::parse_quantifier_types(qtypes)
                           : std::vector<galdual::QuantifierType>{};
    return galdual::run_inv(transforms->value, arity ? arity : 1, types,
                            to_limits(limits));
  });
}

gd_status gd_closure(const gd_transforms* transforms, const char* mode,
                     const gd_limits* limits, gd_report** out) {
  if (!transforms) return null_argument("transforms");
  if (!mode) return null_argument("mode");
  return make_report(out, [&] {
    return galdual::run_closure(transforms->value, mode, to_limits(limits));
  });
}

gd_status gd_define(const gd_structure* structure, const gd_structure* target,
                    int with_equality, const gd_limits* limits,
                    gd_report** out) {
  if (!structure) return null_argument("structure");
  if (!target) return null_argument("target");
  return make_report(out, [&] {
    const galdual::Structure& t = target->value;
    if (t.relations().size() + t.quantifiers().size() != 1) {
      galdual::fail(galdual::ErrorKind::kValidation,
                    "document: a target document holds exactly one relation "
                    "or quantifier");
    }
    const galdual::Target object =
        t.relations().empty() ? galdual::Target{t.quantifiers().begin()->second}
                              : galdual::Target{t.relations().begin()->second};
    return galdual::run_define(structure->value, object, with_equality != 0,
                               to_limits(limits));
  });
}

gd_status gd_sim(const gd_structure* structure, const gd_limits* limits,
                 gd_report** out) {
  if (!structure) return null_argument("structure");
  return make_report(out, [&] {
    return galdual::run_sim(structure->value, to_limits(limits));
  });
}

gd_status gd_quotient(const gd_structure* structure, const gd_limits* limits,
                      gd_report** out) {
  if (!structure) return null_argument("structure");
  return make_report(out, [&] {
    return galdual::run_quotient(structure->value, to_limits(limits));
  });
}

gd_status gd_check(const char* law, const gd_check_options* options,
                   const gd_limits* limits, gd_report** out) {
  if (!law) return null_argument("law");
  return make_report(out, [&] {
    gd_check_options opts;
    gd_check_options_default(&opts);
    if (options) opts = *options;
    galdual::CheckInput input;
    if (opts.structure) input.structure = opts.structure->value;
    if (opts.transforms) input.transforms = opts.transforms->value;
    if (opts.target) {
      const galdual::Structure& t = opts.target->value;
      if (t.relations().size() + t.quantifiers().size() != 1) {
        galdual::fail(galdual::ErrorKind::kValidation,
                      "document: a target document holds exactly one "
                      "relation or quantifier");
      }
      input.target = t.relations().empty()
                         ? galdual::Target{t.quantifiers().begin()->second}
                         : galdual::Target{t.relations().begin()->second};
    }
    if (opts.n) input.n = opts.n;
    input.arity = opts.arity;
    if (opts.qtypes && *opts.qtypes) {
      input.types = galdual::parse_quantifier_types(opts.qtypes);
    }
    galdual::LawOptions law_options;
    law_options.seed = opts.seed;
    law_options.samples = opts.samples ? opts.samples : 8;
    law_options.limits = to_limits(limits);
    return galdual::run_check(law, input, law_options);
  });
}

int gd_report_passed(const gd_report* report) {
  return report && report->value.passed ? 1 : 0;
}

gd_status gd_report_json(const gd_report* report, char** out) {
  if (!report) return null_argument("report");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = copy_string(galdual::report_to_json(report->value).dump(2) + "\n");
  });
}

gd_status gd_report_text(const gd_report* report, char** out) {
  if (!report) return null_argument("report");
  if (!out) return null_argument("out");
  return guarded(
      [&] { *out = copy_string(galdual::report_to_text(report->value)); });
}

void gd_report_free(gd_report* report) { delete report; }

}  // extern "C"
