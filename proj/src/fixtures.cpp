#include "fixtures.hpp"

#include <sstream>

#include "errors.hpp"

namespace ppcode {
namespace {

GoldenExample two_triangles_example() {
  GoldenExample ex;
  ex.name = "two triangles sharing a vertex";
  ex.q = 7;
  ex.kind = InputKind::graph;
  ex.vertices = 5;
  ex.edges = {{1, 2}, {2, 3}, {1, 3}, {1, 4}, {4, 5}, {1, 5}};
  ex.y_sizes = {6, 6, 6, 6, 6};
  ex.m_size = 6;
  ex.x_size = 1296;
  ex.n_size = 1;
  ex.r_x = 10;
  ex.h_x = {6, 21, 55, 120, 231, 401, 627, 885, 1130, 1296};
  ex.h_t = {6, 21, 56, 126, 252, 457, 762, 1182, 1722, 2373};
  ex.h_bar = {0, 0, 1, 6, 21, 56, 135, 297, 592, 1077};
  ex.delta_lower = {864, 432, 180, 108, 36, 24, 12, 5, 3, 1};
  ex.singleton = {1291, 1276, 1242, 1177, 1066, 896, 670, 412, 167, 1};
  return ex;
}

GoldenExample hexagon_example() {
  GoldenExample ex;
  ex.name = "hexagon triples";
  ex.q = 9;
  ex.kind = InputKind::clutter;
  ex.vertices = 6;
  ex.edges = {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}, {1, 5, 6}, {1, 2, 6}};
  ex.y_sizes = {8, 8, 8, 8, 8, 8};
  ex.m_size = 512;
  ex.x_size = 512;
  ex.n_size = 64;
  ex.r_x = 11;
  ex.h_x = {6, 19, 44, 85, 146, 231, 344, 442, 492, 510, 512, 512};
  ex.h_t = {6, 21, 56, 126, 252, 462, 792, 1282, 1972, 2898, 4088, 5558};
  ex.h_bar = {0, 2, 12, 41, 106, 231, 448, 840, 1480, 2388, 3576, 5046};
  ex.delta_lower = {320, 128, 48, 24, 7, 4, 1, 1, 1, 1, 1, 1};
  ex.singleton = {507, 494, 469, 428, 367, 282, 169, 71, 21, 3, 1, 1};
  return ex;
}

GoldenExample dense_example() {
  GoldenExample ex;
  ex.name = "dense 3x4";
  ex.q = 11;
  ex.kind = InputKind::matrix;
  ex.n = 3;
  ex.m = 4;
  ex.entries = {3, 1, 0, 1, 0, 4, 2, 2, 3, 1, 4, 3};
  ex.y_sizes = {10, 5, 10};
  ex.m_size = 10;
  ex.x_size = 50;
  ex.n_size = 2;
  ex.r_x = 6;
  ex.h_x = {4, 10, 20, 32, 44, 50};
  ex.h_t = {4, 10, 20, 35, 56, 84};
  ex.h_bar = {0, 0, 0, 3, 12, 34};
  ex.delta_lower = {20, 3, 1, 1, 1, 1};
  ex.singleton = {47, 41, 31, 19, 7, 1};
  return ex;
}

template <class T>
void expect(std::vector<std::string>& out, const std::string& what, const T& got,
            const T& want) {
  if (got == want) return;
  std::ostringstream o;
  o << what << ": got " << got << ", want " << want;
  out.push_back(o.str());
}

}  // namespace

const std::vector<GoldenExample>& builtin_examples() {
  static const std::vector<GoldenExample> all = {
      two_triangles_example(), hexagon_example(), dense_example()};
  return all;
}

std::vector<std::string> check_example(const GoldenExample& ex) {
  std::vector<std::string> out;

  RunConfig cfg;
  cfg.q = ex.q;
  cfg.kind = ex.kind;
  const long long rows = ex.h_x.size();
  cfg.d_max = rows;

  Analysis a;
  try {
    if (ex.kind == InputKind::matrix) {
      ExponentMatrix mat(ex.n, ex.m, ex.entries);
      a = analyze_matrix(mat, cfg, ex.name);
    } else {
      a = analyze_clutter(make_clutter(ex.vertices, ex.edges), cfg, ex.name);
    }
  } catch (const std::exception& e) {
    out.push_back(ex.name + ": analysis failed: " + e.what());
    return out;
  }

  const std::string tag = ex.name + ": ";
  expect(out, tag + "y_sizes count", a.cert.y_sizes.size(), ex.y_sizes.size());
  if (a.cert.y_sizes.size() == ex.y_sizes.size())
    for (std::size_t j = 0; j < ex.y_sizes.size(); ++j)
      expect(out, tag + "|Y_" + std::to_string(j + 1) + "|", a.cert.y_sizes[j],
             ex.y_sizes[j]);
  expect(out, tag + "|M|", a.cert.m_size, ex.m_size);
  expect(out, tag + "|X|", a.cert.x_size, ex.x_size);
  if (ex.n_size) {
    if (!a.cert.n_size)
      out.push_back(tag + "n_size missing");
    else
      expect(out, tag + "n_size", *a.cert.n_size, *ex.n_size);
  }
  expect(out, tag + "r_X", a.profile.r_x, ex.r_x);

  expect(out, tag + "row count", (long long)a.rows.size(), rows);
  const long long have = std::min<long long>(rows, a.rows.size());
  for (long long i = 0; i < have; ++i) {
    const DegreeRow& r = a.rows[i];
    const std::string at = tag + "d=" + std::to_string(i + 1) + " ";
    expect(out, at + "H_X", r.h_x, ex.h_x[i]);
    expect(out, at + "H_T", r.h_t, ex.h_t[i]);
    expect(out, at + "Hbar", r.h_bar, ex.h_bar[i]);
    if (!r.delta_lower)
      out.push_back(at + "delta_lower missing");
    else
      expect(out, at + "delta_lower", *r.delta_lower, ex.delta_lower[i]);
    expect(out, at + "singleton", r.singleton, ex.singleton[i]);
  }

  for (const auto& c : a.checks)
    if (c.status == CheckStatus::discrepant)
      out.push_back(tag + "check " + c.name + " discrepant: " + c.details);

  return out;
}

}  // namespace ppcode
