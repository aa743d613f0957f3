#include "drinfilt/drinfilt.h"

#include <cstring>
#include <stdexcept>
#include <string>

#include "report.hpp"
#include "verify.hpp"

#ifndef DRINFILT_VERSION
#define DRINFILT_VERSION "0.0.0"
#endif

struct df_report {
  drinfilt::ReportDocument doc;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

df_status fail(df_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

}  // namespace

extern "C" {

df_status df_report_create(int d, const long long* lambda, size_t lambda_len,
                           long long pole_bound, df_report** out) {
  if (!lambda || !out) return fail(DF_ERROR_INVALID_ARGUMENT, "null argument");
  if (d < 1 || d > 12)
    return fail(DF_ERROR_INVALID_ARGUMENT, "d must be between 1 and 12");
  *out = nullptr;
  try {
    drinfilt::Weight w(std::vector<long long>(lambda, lambda + lambda_len));
    auto* rep = new df_report{drinfilt::build_report_document(d, w, pole_bound)};
    *out = rep;
    return DF_OK;
  } catch (const std::domain_error& e) {
    return fail(DF_ERROR_PRECONDITION, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(DF_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(DF_ERROR_INTERNAL, e.what());
  }
}

df_status df_report_render_text(const df_report* report, char** out) {
  if (!report || !out) return fail(DF_ERROR_INVALID_ARGUMENT, "null argument");
  try {
    *out = dup_string(drinfilt::render_report_text(report->doc));
    return *out ? DF_OK : fail(DF_ERROR_INTERNAL, "allocation failed");
  } catch (const std::exception& e) {
    return fail(DF_ERROR_INTERNAL, e.what());
  }
}

df_status df_report_render_json(const df_report* report, char** out) {
  if (!report || !out) return fail(DF_ERROR_INVALID_ARGUMENT, "null argument");
  try {
    *out = dup_string(drinfilt::render_report_json(report->doc));
    return *out ? DF_OK : fail(DF_ERROR_INTERNAL, "allocation failed");
  } catch (const std::exception& e) {
    return fail(DF_ERROR_INTERNAL, e.what());
  }
}

void df_report_free(df_report* report) { delete report; }

df_status df_verify(const char* suite, const char* size, long long p, int n,
                    char** out_log, int* out_failures) {
  if (!suite || !size || !out_log || !out_failures)
    return fail(DF_ERROR_INVALID_ARGUMENT, "null argument");
  std::string sz(size);
  if (sz != "smoke" && sz != "desk")
    return fail(DF_ERROR_INVALID_ARGUMENT, "size must be smoke or desk");
  try {
    drinfilt::VerifyOptions opts;
    opts.desk = sz == "desk";
    opts.p = p;
    opts.n = n;
    drinfilt::VerifyOutcome outcome = drinfilt::run_verify_suite(suite, opts);
    *out_log = dup_string(outcome.log);
    *out_failures = outcome.failures;
    if (!*out_log) return fail(DF_ERROR_INTERNAL, "allocation failed");
    return outcome.passed() ? DF_OK : fail(DF_ERROR_VERIFICATION, "verification failures");
  } catch (const std::invalid_argument& e) {
    return fail(DF_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(DF_ERROR_INTERNAL, e.what());
  }
}

void df_string_free(char* s) { std::free(s); }

const char* df_last_error(void) { return g_last_error.c_str(); }

const char* df_version(void) { return DRINFILT_VERSION; }

}  // extern "C"
