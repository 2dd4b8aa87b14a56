#include "twosphere/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace twosphere {

namespace {

// strip comments and split into whitespace-separated fields
std::vector<std::string> fields_of(const std::string& raw) {
  std::string line = raw;
  auto hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

long long parse_ll(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
}

VertexId parse_vertex(const std::string& tok, int line) {
  long long v = parse_ll(tok, line);
  if (v < 0) throw ParseError(line, "vertex ids must be non-negative");
  return static_cast<VertexId>(v);
}

}  // namespace

ComplexFile parse_2sc(std::istream& in) {
  ComplexFile out;
  std::string raw;
  int lineno = 0;
  bool header_seen = false;
  std::vector<Triangle> tris;
  std::map<Triangle, long long> wmap;
  bool any_weight = false;

  while (std::getline(in, raw)) {
    ++lineno;
    auto f = fields_of(raw);
    if (f.empty()) continue;
    if (!header_seen) {
      if (f.size() != 2 || f[0] != "2sc" || f[1] != "1")
        throw ParseError(lineno, "expected header '2sc 1'");
      header_seen = true;
      continue;
    }
    if (f[0] == "t") {
      if (f.size() != 4 && f.size() != 5)
        throw ParseError(lineno, "triangle line needs 't a b c' or 't a b c w'");
      VertexId a = parse_vertex(f[1], lineno), b = parse_vertex(f[2], lineno),
               c = parse_vertex(f[3], lineno);
      Triangle t = [&] {
        try {
          return Triangle(a, b, c);
        } catch (const DegenerateTriangle& e) {
          throw ParseError(lineno, e.what());
        }
      }();
      long long w = 1;
      if (f.size() == 5) {
        w = parse_ll(f[4], lineno);
        if (w <= 0) throw ParseError(lineno, "weights must be positive");
        any_weight = true;
      }
      tris.push_back(t);
      wmap[t] = w;
    } else if (f[0] == "e") {
      if (f.size() != 3) throw ParseError(lineno, "edge line needs 'e a b'");
      VertexId a = parse_vertex(f[1], lineno), b = parse_vertex(f[2], lineno);
      if (a == b) throw ParseError(lineno, "degenerate edge");
      out.maximal_edges.push_back(Edge(a, b));
    } else if (f[0] == "v") {
      if (f.size() != 2) throw ParseError(lineno, "vertex line needs 'v a'");
      out.isolated_vertices.push_back(parse_vertex(f[1], lineno));
    } else {
      throw ParseError(lineno, "unknown record '" + f[0] + "'");
    }
  }
  if (!header_seen) throw ParseError(lineno == 0 ? 1 : lineno, "missing header '2sc 1'");

  out.complex = Complex2::from_triangles(tris);
  if (any_weight) {
    out.weights.reserve(out.complex.triangle_count());
    for (const Triangle& t : out.complex.triangles()) out.weights.push_back(wmap.at(t));
  }
  return out;
}

ComplexFile parse_2sc_string(const std::string& text) {
  std::istringstream is(text);
  return parse_2sc(is);
}

ComplexFile load_2sc(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_2sc(in);
}

std::string write_2sc(const Complex2& k, const std::string& header_comment) {
  std::ostringstream os;
  os << "2sc 1\n";
  if (!header_comment.empty()) os << "# " << header_comment << "\n";
  for (const Triangle& t : k.triangles())
    os << "t " << t.v[0] << " " << t.v[1] << " " << t.v[2] << "\n";
  return os.str();
}

std::string write_2sc_weighted(const Complex2& k, const std::vector<long long>& weights,
                               const std::string& header_comment) {
  if (weights.size() != k.triangle_count())
    throw Error("write_2sc_weighted: weight vector size mismatch");
  std::ostringstream os;
  os << "2sc 1\n";
  if (!header_comment.empty()) os << "# " << header_comment << "\n";
  for (std::size_t i = 0; i < k.triangle_count(); ++i) {
    const Triangle& t = k.triangles()[i];
    os << "t " << t.v[0] << " " << t.v[1] << " " << t.v[2] << " " << weights[i] << "\n";
  }
  return os.str();
}

std::string write_json_complex(const Complex2& k, const std::vector<long long>* weights) {
  nlohmann::json j;
  j["triangles"] = nlohmann::json::array();
  for (const Triangle& t : k.triangles()) j["triangles"].push_back({t.v[0], t.v[1], t.v[2]});
  if (weights) {
    nlohmann::json w = nlohmann::json::object();
    for (std::size_t i = 0; i < weights->size(); ++i) w[std::to_string(i)] = (*weights)[i];
    j["weights"] = w;
  }
  return j.dump();
}

ComplexFile parse_json_complex(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, std::string("invalid JSON: ") + e.what());
  }
  ComplexFile out;
  if (!j.contains("triangles") || !j["triangles"].is_array())
    throw ParseError(1, "JSON complex needs a 'triangles' array");
  std::vector<Triangle> tris;
  for (const auto& e : j["triangles"]) {
    if (!e.is_array() || e.size() != 3) throw ParseError(1, "triangle entries must be [a,b,c]");
    tris.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>(), e[2].get<VertexId>());
  }
  out.complex = Complex2::from_triangles(std::move(tris));
  if (j.contains("weights") && !j["weights"].empty()) {
    out.weights.assign(out.complex.triangle_count(), 1);
    for (auto it = j["weights"].begin(); it != j["weights"].end(); ++it) {
      std::size_t idx = static_cast<std::size_t>(std::stoull(it.key()));
      if (idx >= out.weights.size()) throw ParseError(1, "weight index out of range");
      out.weights[idx] = it.value().get<long long>();
      if (out.weights[idx] <= 0) throw ParseError(1, "weights must be positive");
    }
  }
  return out;
}

GridTilingInstance parse_gt(std::istream& in) {
  GridTilingInstance g;
  std::string raw;
  int lineno = 0;
  int stage = 0;  // 0: header, 1: n k, 2: memberships
  while (std::getline(in, raw)) {
    ++lineno;
    auto f = fields_of(raw);
    if (f.empty()) continue;
    if (stage == 0) {
      if (f.size() != 2 || f[0] != "gt" || f[1] != "1")
        throw ParseError(lineno, "expected header 'gt 1'");
      stage = 1;
    } else if (stage == 1) {
      if (f.size() != 2) throw ParseError(lineno, "expected 'n k'");
      g.n = static_cast<int>(parse_ll(f[0], lineno));
      g.k = static_cast<int>(parse_ll(f[1], lineno));
      if (g.n <= 0 || g.k <= 0) throw ParseError(lineno, "n and k must be positive");
      stage = 2;
    } else {
      if (f.size() != 4) throw ParseError(lineno, "expected membership 'i j a b'");
      int i = static_cast<int>(parse_ll(f[0], lineno));
      int j = static_cast<int>(parse_ll(f[1], lineno));
      int a = static_cast<int>(parse_ll(f[2], lineno));
      int b = static_cast<int>(parse_ll(f[3], lineno));
      if (i < 1 || i > g.k || j < 1 || j > g.k)
        throw ParseError(lineno, "tile index out of range");
      if (a < 1 || a > g.n || b < 1 || b > g.n)
        throw ParseError(lineno, "pair entry out of range");
      g.sets[{i, j}].emplace_back(a, b);
    }
  }
  if (stage < 2) throw ParseError(lineno == 0 ? 1 : lineno, "incomplete grid tiling file");
  for (auto& [ij, s] : g.sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  try {
    g.validate();
  } catch (const Error& e) {
    throw ParseError(lineno, e.what());
  }
  return g;
}

GridTilingInstance parse_gt_string(const std::string& text) {
  std::istringstream is(text);
  return parse_gt(is);
}

GridTilingInstance load_gt(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_gt(in);
}

std::string write_gt(const GridTilingInstance& g) {
  std::ostringstream os;
  os << "gt 1\n" << g.n << " " << g.k << "\n";
  for (const auto& [ij, s] : g.sets)
    for (auto [a, b] : s) os << ij.first << " " << ij.second << " " << a << " " << b << "\n";
  return os.str();
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << text;
}

}  // namespace twosphere
