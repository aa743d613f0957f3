// Command line front end; talks to the core only through the C API.
#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "drinfilt/drinfilt.h"

namespace {

int parse_lambda(const std::string& text, std::vector<long long>& out) {
  out.clear();
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (cur.empty()) return 1;
      try {
        size_t used = 0;
        out.push_back(std::stoll(cur, &used));
        if (used != cur.size()) return 1;
      } catch (...) {
        return 1;
      }
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out.empty() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"filtration combinatorics of equivariant bundles on Drinfeld's upper half space"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(df_version()));

  auto* report = app.add_subcommand("report", "compute a filtration report");
  int d = 2;
  std::string lambda_text;
  long long pole_bound = 4;
  std::string format = "text";
  report->add_option("--d", d, "projective space dimension")->required();
  report->add_option("--lambda", lambda_text, "weight, comma separated integers")->required();
  report->add_option("--pole-bound", pole_bound, "kernel summary bound (0 skips kernels)");
  report->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::string suite = "all";
  std::string size = "smoke";
  long long p = 0;
  int n = 0;
  verify->add_option("--suite", suite, "weights|bott|pieri|filtration|localcoh|building|all")
      ->check(CLI::IsMember({"weights", "bott", "pieri", "filtration", "localcoh", "building", "all"}));
  verify->add_option("--size", size, "smoke | desk")->check(CLI::IsMember({"smoke", "desk"}));
  verify->add_option("--p", p, "narrow the building suite to this prime");
  verify->add_option("--n", n, "narrow the building suite to this level");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (report->parsed()) {
    std::vector<long long> lambda;
    if (parse_lambda(lambda_text, lambda) != 0) {
      std::fprintf(stderr, "error: could not parse --lambda '%s'\n", lambda_text.c_str());
      return 2;
    }
    df_report* handle = nullptr;
    df_status st = df_report_create(d, lambda.data(), lambda.size(), pole_bound, &handle);
    if (st != DF_OK) {
      std::fprintf(stderr, "error: %s\n", df_last_error());
      return 2;
    }
    char* text = nullptr;
    st = format == "json" ? df_report_render_json(handle, &text)
                          : df_report_render_text(handle, &text);
    if (st != DF_OK) {
      std::fprintf(stderr, "error: %s\n", df_last_error());
      df_report_free(handle);
      return 2;
    }
    std::fputs(text, stdout);
    df_string_free(text);
    df_report_free(handle);
    return 0;
  }

  char* log = nullptr;
  int failures = 0;
  df_status st = df_verify(suite.c_str(), size.c_str(), p, n, &log, &failures);
  if (st == DF_ERROR_INVALID_ARGUMENT || st == DF_ERROR_INTERNAL) {
    std::fprintf(stderr, "error: %s\n", df_last_error());
    return 2;
  }
  if (log) {
    std::fputs(log, stdout);
    df_string_free(log);
  }
  if (failures > 0) {
    std::fprintf(stderr, "%d verification check(s) failed\n", failures);
    return 1;
  }
  std::printf("all checks passed\n");
  return 0;
}
