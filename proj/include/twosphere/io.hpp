#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "twosphere/complex.hpp"
#include "twosphere/gridtiling.hpp"

namespace twosphere {

struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& what)
      : Error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

/// Contents of a ".2sc" file. The complex holds the triangles; maximal edges
/// and isolated vertices allowed by the format are recorded separately.
struct ComplexFile {
  Complex2 complex;
  std::vector<long long> weights;  // empty unless any triangle line carried one
  std::vector<Edge> maximal_edges;
  std::vector<VertexId> isolated_vertices;

  bool weighted() const { return !weights.empty(); }
};

ComplexFile parse_2sc(std::istream& in);
ComplexFile parse_2sc_string(const std::string& text);
ComplexFile load_2sc(const std::string& path);

std::string write_2sc(const Complex2& k, const std::string& header_comment = "");
std::string write_2sc_weighted(const Complex2& k, const std::vector<long long>& weights,
                               const std::string& header_comment = "");

/// {"triangles":[[a,b,c],...],"weights":{"index":w,...}}
std::string write_json_complex(const Complex2& k, const std::vector<long long>* weights = nullptr);
ComplexFile parse_json_complex(const std::string& text);

GridTilingInstance parse_gt(std::istream& in);
GridTilingInstance parse_gt_string(const std::string& text);
GridTilingInstance load_gt(const std::string& path);
std::string write_gt(const GridTilingInstance& g);

void save_text(const std::string& path, const std::string& text);

}  // namespace twosphere
