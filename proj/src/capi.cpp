#include "ppcode.h"

#include <cstring>
#include <sstream>
#include <string>

#include "analysis.hpp"
#include "errors.hpp"
#include "fixtures.hpp"
#include "io.hpp"

struct ppcode_analysis {
  ppcode::Analysis a;
};

namespace {

thread_local std::string g_last_error;

ppcode_status fail(ppcode_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

ppcode_status guard(const std::exception& e) {
  if (dynamic_cast<const ppcode::input_error*>(&e))
    return fail(PPCODE_ERROR_INPUT, e.what());
  if (dynamic_cast<const ppcode::budget_error*>(&e))
    return fail(PPCODE_ERROR_BUDGET, e.what());
  return fail(PPCODE_ERROR_INTERNAL, e.what());
}

ppcode::InputKind parse_kind(const char* kind) {
  if (!kind) throw ppcode::input_error("kind must not be NULL");
  const std::string k = kind;
  if (k == "matrix") return ppcode::InputKind::matrix;
  if (k == "graph") return ppcode::InputKind::graph;
  if (k == "clutter") return ppcode::InputKind::clutter;
  throw ppcode::input_error("unknown kind \"" + k + "\" (want matrix, graph or clutter)");
}

ppcode::RunConfig make_config(ppcode::InputKind kind, const ppcode_options* opts) {
  ppcode::RunConfig cfg;
  cfg.kind = kind;
  if (opts) {
    cfg.d_max = opts->d_max;
    cfg.exact_budget = opts->exact_budget;
    cfg.delta_ceil = opts->delta_ceil != 0;
  }
  return cfg;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Fn>
ppcode_status analyze(const char* kind, const ppcode_options* opts, ppcode_analysis** out,
                      Fn parse) {
  if (!out) return fail(PPCODE_ERROR_INPUT, "out must not be NULL");
  *out = nullptr;
  try {
    ppcode::InputKind k = parse_kind(kind);
    ppcode::ParsedInput in = parse(k);
    ppcode::Analysis a = ppcode::run_analysis(in, make_config(k, opts));
    *out = new ppcode_analysis{std::move(a)};
    return PPCODE_OK;
  } catch (const std::exception& e) {
    return guard(e);
  }
}

}  // namespace

extern "C" {

void ppcode_options_init(ppcode_options* opts) {
  if (!opts) return;
  opts->d_max = -1;
  opts->exact_budget = 0;
  opts->delta_ceil = 0;
}

ppcode_status ppcode_analyze_text(const char* text, const char* kind,
                                  const ppcode_options* opts, ppcode_analysis** out) {
  if (!text) return fail(PPCODE_ERROR_INPUT, "text must not be NULL");
  return analyze(kind, opts, out, [&](ppcode::InputKind k) {
    return ppcode::parse_input_text(text, k);
  });
}

ppcode_status ppcode_analyze_file(const char* path, const char* kind,
                                  const ppcode_options* opts, ppcode_analysis** out) {
  if (!path) return fail(PPCODE_ERROR_INPUT, "path must not be NULL");
  return analyze(kind, opts, out, [&](ppcode::InputKind k) {
    return ppcode::parse_input_file(path, k);
  });
}

void ppcode_analysis_free(ppcode_analysis* a) { delete a; }

ppcode_status ppcode_analysis_render(const ppcode_analysis* a, const char* format,
                                     char** out) {
  if (!a || !format || !out) return fail(PPCODE_ERROR_INPUT, "NULL argument");
  *out = nullptr;
  try {
    *out = dup_string(ppcode::render(a->a, format));
    return PPCODE_OK;
  } catch (const std::exception& e) {
    return guard(e);
  }
}

void ppcode_string_free(char* s) { delete[] s; }

int64_t ppcode_analysis_length(const ppcode_analysis* a) {
  return a ? a->a.cert.x_size : -1;
}

int64_t ppcode_analysis_kernel_size(const ppcode_analysis* a) {
  return a ? a->a.cert.m_size : -1;
}

int64_t ppcode_analysis_regularity(const ppcode_analysis* a) {
  return a ? a->a.profile.r_x : -1;
}

int64_t ppcode_analysis_row_count(const ppcode_analysis* a) {
  return a ? (int64_t)a->a.rows.size() : -1;
}

ppcode_status ppcode_analysis_row(const ppcode_analysis* a, int64_t index,
                                  ppcode_row* out) {
  if (!a || !out) return fail(PPCODE_ERROR_INPUT, "NULL argument");
  if (index < 0 || index >= (int64_t)a->a.rows.size())
    return fail(PPCODE_ERROR_INPUT, "row index out of range");
  const ppcode::DegreeRow& r = a->a.rows[index];
  *out = ppcode_row{};
  out->d = r.d;
  out->h_x = r.h_x;
  out->h_t = r.h_t;
  out->h_bar = r.h_bar;
  out->singleton = r.singleton;
  out->has_delta_lower = r.delta_lower.has_value();
  out->delta_lower = r.delta_lower.value_or(0);
  out->has_delta_upper = r.delta_upper.has_value();
  out->delta_upper = r.delta_upper.value_or(0);
  out->has_delta_exact = r.delta_exact.has_value();
  out->delta_exact = r.delta_exact.value_or(0);
  out->delta_exact_is_exact = r.delta_exact_is_exact;
  return PPCODE_OK;
}

ppcode_status ppcode_fixtures_run(char** report) {
  if (report) *report = nullptr;
  try {
    std::ostringstream o;
    bool ok = true;
    for (const auto& ex : ppcode::builtin_examples()) {
      std::vector<std::string> bad = ppcode::check_example(ex);
      if (bad.empty()) {
        o << ex.name << ": ok\n";
      } else {
        ok = false;
        for (const auto& msg : bad) o << msg << "\n";
      }
    }
    if (report) *report = dup_string(o.str());
    if (ok) return PPCODE_OK;
    return fail(PPCODE_ERROR_INTERNAL, "built-in examples disagree with frozen tables");
  } catch (const std::exception& e) {
    return guard(e);
  }
}

const char* ppcode_last_error(void) { return g_last_error.c_str(); }

const char* ppcode_version(void) { return "1.0.0"; }

}  // extern "C"
