// Command-line front end; everything goes through the public C API.
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "ppcode.h"

int main(int argc, char** argv) {
  CLI::App app{"Parameterized linear codes from integer exponent matrices: "
               "block length, dimension table, regularity and distance bounds."};

  std::string input, kind = "matrix", format = "table", convention = "floor";
  long long d_max = -1;
  unsigned long long exact_budget = 0;
  bool fixtures = false;

  app.add_option("-i,--input", input, "JSON input file");
  app.add_option("-k,--kind", kind, "input kind: matrix, graph or clutter")
      ->check(CLI::IsMember({"matrix", "graph", "clutter"}));
  app.add_option("-d,--dmax", d_max,
                 "largest degree in the table (default: torus regularity - 1)");
  app.add_option("--exact-budget", exact_budget,
                 "work budget for exact minimum distances (0 = skip)");
  app.add_option("--delta-convention", convention,
                 "round the fractional distance bound down or up")
      ->check(CLI::IsMember({"floor", "ceil"}));
  app.add_option("-f,--format", format, "output format: table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_flag("--fixtures", fixtures,
               "run the built-in worked examples against their frozen tables");

  CLI11_PARSE(app, argc, argv);

  if (fixtures) {
    char* report = nullptr;
    ppcode_status s = ppcode_fixtures_run(&report);
    if (report) {
      std::fputs(report, stdout);
      ppcode_string_free(report);
    }
    if (s != PPCODE_OK) std::fprintf(stderr, "error: %s\n", ppcode_last_error());
    return (int)s;
  }

  if (input.empty()) {
    std::fprintf(stderr, "error: --input is required (or use --fixtures)\n");
    return (int)PPCODE_ERROR_INPUT;
  }

  ppcode_options opts;
  ppcode_options_init(&opts);
  opts.d_max = d_max;
  opts.exact_budget = exact_budget;
  opts.delta_ceil = convention == "ceil";

  ppcode_analysis* a = nullptr;
  ppcode_status s = ppcode_analyze_file(input.c_str(), kind.c_str(), &opts, &a);
  if (s != PPCODE_OK) {
    std::fprintf(stderr, "error: %s\n", ppcode_last_error());
    return (int)s;
  }

  char* out = nullptr;
  s = ppcode_analysis_render(a, format.c_str(), &out);
  if (s == PPCODE_OK) {
    std::fputs(out, stdout);
    ppcode_string_free(out);
  } else {
    std::fprintf(stderr, "error: %s\n", ppcode_last_error());
  }
  ppcode_analysis_free(a);
  return (int)s;
}
