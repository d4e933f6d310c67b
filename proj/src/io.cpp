#include "io.hpp"

#include <fstream>
#include <sstream>

#include "errors.hpp"
#include "json.hpp"

namespace ppcode {
namespace {

using nlohmann::json;

void require_keys(const json& j, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional) {
  for (const char* k : required)
    if (!j.contains(k)) throw input_error(std::string("missing key \"") + k + "\"");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : required)
      if (it.key() == k) known = true;
    for (const char* k : optional)
      if (it.key() == k) known = true;
    if (!known) throw input_error("unknown key \"" + it.key() + "\"");
  }
}

long long int_field(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_number_integer()) throw input_error(std::string("\"") + key + "\" must be an integer");
  return v.get<long long>();
}

const char* method_name(HilbertMethod m) {
  switch (m) {
    case HilbertMethod::rank: return "rank";
    case HilbertMethod::character: return "character";
    case HilbertMethod::stabilized: return "stabilized";
  }
  return "?";
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::discrepant: return "discrepant";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

std::string pad(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

}  // namespace

ParsedInput parse_input_text(const std::string& text, InputKind kind) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw input_error("input must be a JSON object");

  ParsedInput in;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) throw input_error("\"name\" must be a string");
    in.name = j.at("name").get<std::string>();
  }

  if (kind == InputKind::matrix) {
    require_keys(j, {"q", "matrix"}, {"name"});
    in.q = int_field(j, "q");
    const json& rows = j.at("matrix");
    if (!rows.is_array() || rows.empty())
      throw input_error("\"matrix\" must be a nonempty array of rows");
    const std::size_t m = rows.at(0).is_array() ? rows.at(0).size() : 0;
    if (m == 0) throw input_error("matrix rows must be nonempty arrays");
    std::vector<long long> entries;
    for (const json& row : rows) {
      if (!row.is_array() || row.size() != m)
        throw input_error("matrix rows must all have the same length");
      for (const json& v : row) {
        if (!v.is_number_integer()) throw input_error("matrix entries must be integers");
        entries.push_back(v.get<long long>());
      }
    }
    in.matrix = ExponentMatrix((long long)rows.size(), (long long)m, std::move(entries));
    return in;
  }

  require_keys(j, {"q", "vertices", "edges"}, {"name"});
  in.q = int_field(j, "q");
  long long vertices = int_field(j, "vertices");
  const json& edges = j.at("edges");
  if (!edges.is_array()) throw input_error("\"edges\" must be an array");
  std::vector<std::vector<long long>> e;
  for (const json& edge : edges) {
    if (!edge.is_array()) throw input_error("each edge must be an array of vertices");
    std::vector<long long> one;
    for (const json& v : edge) {
      if (!v.is_number_integer()) throw input_error("edge vertices must be integers");
      one.push_back(v.get<long long>());
    }
    e.push_back(std::move(one));
  }
  in.clutter = make_clutter(vertices, e);
  return in;
}

ParsedInput parse_input_file(const std::string& path, InputKind kind) {
  std::ifstream f(path);
  if (!f) throw input_error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_input_text(buf.str(), kind);
}

Analysis run_analysis(const ParsedInput& input, RunConfig cfg) {
  cfg.q = input.q;
  if (cfg.kind == InputKind::matrix) {
    if (!input.matrix) throw input_error("matrix analysis needs a matrix input");
    return analyze_matrix(*input.matrix, cfg, input.name);
  }
  if (!input.clutter) throw input_error("graph/clutter analysis needs an edge input");
  return analyze_clutter(*input.clutter, cfg, input.name);
}

std::string render_table(const Analysis& a) {
  std::ostringstream o;
  if (!a.name.empty()) o << a.name << "\n";
  o << "q = " << a.config.q << ", n = " << a.n << ", m = " << a.m;
  if (a.alpha) o << ", alpha = " << *a.alpha;
  if (a.graph)
    o << ", graph: " << (a.graph->connected ? "connected" : "disconnected") << " "
      << (a.graph->bipartite ? "bipartite" : "non-bipartite");
  o << "\n";
  o << "|X| = " << a.cert.x_size << ", |T| = " << a.cert.x_size + a.y_size
    << ", |Y| = " << a.y_size << ", |M| = " << a.cert.m_size
    << (a.cert.m_size_indirect ? " (indirect)" : "") << "\n";
  o << "|Y_j| =";
  for (long long y : a.cert.y_sizes) o << " " << y;
  o << "\n";
  o << "r_X = " << a.profile.r_x << ", r_T = " << a.r_t << "\n";
  o << "numerator =";
  for (long long h : a.profile.numerator) o << " " << h;
  o << "\n";

  bool any_lower = false, any_upper = false, any_exact = false;
  for (const auto& r : a.rows) {
    any_lower |= r.delta_lower.has_value();
    any_upper |= r.delta_upper.has_value();
    any_exact |= r.delta_exact.has_value();
  }
  const std::size_t block = 8, w = 9, label = 12;
  for (std::size_t lo = 0; lo < a.rows.size(); lo += block) {
    const std::size_t hi = std::min(lo + block, a.rows.size());
    auto line = [&](const std::string& name, auto value) {
      o << name << std::string(label - name.size(), ' ') << "|";
      for (std::size_t i = lo; i < hi; ++i) o << pad(value(a.rows[i]), w);
      o << "\n";
    };
    o << "\n";
    line("d", [](const DegreeRow& r) { return std::to_string(r.d); });
    line("H_X", [](const DegreeRow& r) { return std::to_string(r.h_x); });
    line("H_T", [](const DegreeRow& r) { return std::to_string(r.h_t); });
    line("Hbar", [](const DegreeRow& r) { return std::to_string(r.h_bar); });
    if (any_lower)
      line("delta_low", [](const DegreeRow& r) {
        return r.delta_lower ? std::to_string(*r.delta_lower) : std::string();
      });
    line("singleton", [](const DegreeRow& r) { return std::to_string(r.singleton); });
    if (any_upper)
      line("delta_up", [](const DegreeRow& r) {
        return r.delta_upper ? std::to_string(*r.delta_upper) : std::string();
      });
    if (any_exact)
      line("exact", [](const DegreeRow& r) {
        if (!r.delta_exact) return std::string();
        return std::to_string(*r.delta_exact) + (r.delta_exact_is_exact ? "" : "*");
      });
  }
  if (any_exact) o << "\n(* sampled upper bound, not exact)\n";

  o << "\nchecks:\n";
  for (const auto& c : a.checks) {
    o << "  " << c.name << std::string(c.name.size() < 28 ? 28 - c.name.size() : 1, ' ')
      << status_name(c.status);
    if (!c.details.empty()) o << "  " << c.details;
    o << "\n";
  }
  return o.str();
}

std::string render_csv(const Analysis& a) {
  std::ostringstream o;
  o << "d,H_X,H_T,Hbar,delta_lower,singleton,delta_exact,delta_exact_method\n";
  for (const auto& r : a.rows) {
    o << r.d << "," << r.h_x << "," << r.h_t << "," << r.h_bar << ",";
    if (r.delta_lower) o << *r.delta_lower;
    o << "," << r.singleton << ",";
    if (r.delta_exact) o << *r.delta_exact;
    o << ",";
    if (r.delta_exact) o << (r.delta_exact_is_exact ? "enumeration" : "sampled");
    o << "\n";
  }
  return o.str();
}

std::string render_json(const Analysis& a) {
  json j;
  j["q"] = a.config.q;
  j["n"] = a.n;
  j["m"] = a.m;
  if (!a.name.empty()) j["name"] = a.name;
  if (a.alpha) j["alpha"] = *a.alpha;
  if (a.graph) {
    j["graph"]["connected"] = a.graph->connected;
    j["graph"]["bipartite"] = a.graph->bipartite;
  }
  j["length"]["x_size"] = a.cert.x_size;
  j["length"]["y_sizes"] = a.cert.y_sizes;
  j["length"]["y_product"] = a.cert.y_product;
  j["length"]["m_size"] = a.cert.m_size;
  j["length"]["m_size_indirect"] = a.cert.m_size_indirect;
  if (a.cert.n_size) j["length"]["n_size"] = *a.cert.n_size;
  j["torus_size"] = a.cert.x_size + a.y_size;
  j["y_size"] = a.y_size;
  j["regularity"]["r_x"] = a.profile.r_x;
  j["regularity"]["r_t"] = a.r_t;
  j["hilbert"]["values"] = a.profile.values;
  j["hilbert"]["numerator"] = a.profile.numerator;
  {
    std::vector<std::string> methods;
    for (auto m : a.profile.methods) methods.push_back(method_name(m));
    j["hilbert"]["methods"] = methods;
  }
  j["rows"] = json::array();
  for (const auto& r : a.rows) {
    json row;
    row["d"] = r.d;
    row["h_x"] = r.h_x;
    row["h_t"] = r.h_t;
    row["h_bar"] = r.h_bar;
    row["h_method"] = method_name(r.h_method);
    if (r.delta_lower) {
      row["delta_lower"] = *r.delta_lower;
      row["delta_lower_num"] = r.delta_lower_exact->num;
      row["delta_lower_den"] = r.delta_lower_exact->den;
    }
    row["singleton"] = r.singleton;
    if (r.delta_upper) row["delta_upper"] = *r.delta_upper;
    if (r.delta_exact) {
      row["delta_exact"] = *r.delta_exact;
      row["delta_exact_method"] = r.delta_exact_is_exact ? "enumeration" : "sampled";
    }
    j["rows"].push_back(row);
  }
  j["checks"] = json::array();
  for (const auto& c : a.checks) {
    json check;
    check["name"] = c.name;
    check["status"] = status_name(c.status);
    check["details"] = c.details;
    j["checks"].push_back(check);
  }
  return j.dump(2) + "\n";
}

std::string render(const Analysis& a, const std::string& format) {
  if (format == "table") return render_table(a);
  if (format == "csv") return render_csv(a);
  if (format == "json") return render_json(a);
  throw input_error("unknown format \"" + format + "\" (want table, csv or json)");
}

std::vector<CsvRow> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) ||
      line != "d,H_X,H_T,Hbar,delta_lower,singleton,delta_exact,delta_exact_method")
    throw input_error("unexpected CSV header");
  std::vector<CsvRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::string cur;
    for (char ch : line) {
      if (ch == ',') {
        f.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    f.push_back(cur);
    if (f.size() != 8) throw input_error("CSV row with wrong field count");
    CsvRow r;
    r.d = std::stoll(f[0]);
    r.h_x = std::stoll(f[1]);
    r.h_t = std::stoll(f[2]);
    r.h_bar = std::stoll(f[3]);
    if (!f[4].empty()) r.delta_lower = std::stoll(f[4]);
    r.singleton = std::stoll(f[5]);
    if (!f[6].empty()) r.delta_exact = std::stoll(f[6]);
    r.delta_exact_method = f[7];
    rows.push_back(r);
  }
  return rows;
}

}  // namespace ppcode
