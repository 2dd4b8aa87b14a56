#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace twosphere {

using VertexId = std::uint32_t;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateTriangle : Error {
  using Error::Error;
};
struct NotEdgeConnected : Error {
  using Error::Error;
};
struct IdentificationCollapse : Error {
  using Error::Error;
};
struct InvalidBudget : Error {
  using Error::Error;
};
struct OracleTooLarge : Error {
  using Error::Error;
};
struct GuardExceeded : Error {
  using Error::Error;
};
struct SelectionOutOfSet : Error {
  using Error::Error;
};
struct NotPuncturedSphere : Error {
  using Error::Error;
};

/// Undirected edge, endpoints stored sorted.
struct Edge {
  std::array<VertexId, 2> v{0, 0};

  Edge() = default;
  Edge(VertexId a, VertexId b);

  auto operator<=>(const Edge&) const = default;
  bool has_vertex(VertexId x) const { return v[0] == x || v[1] == x; }
  VertexId other(VertexId x) const { return v[0] == x ? v[1] : v[0]; }
};

/// Triangle with corners stored in strictly increasing order.
struct Triangle {
  std::array<VertexId, 3> v{0, 0, 0};

  Triangle() = default;
  Triangle(VertexId a, VertexId b, VertexId c);

  auto operator<=>(const Triangle&) const = default;
  std::array<Edge, 3> edges() const;
  bool has_vertex(VertexId x) const { return v[0] == x || v[1] == x || v[2] == x; }
  bool has_edge(const Edge& e) const;
  VertexId opposite(const Edge& e) const;
};

std::string to_string(const Triangle& t);

/// A pure 2-dimensional simplicial complex: a canonical (sorted, deduplicated)
/// set of triangles plus derived edge and vertex incidence. Immutable after
/// construction; all operations on it are pure functions.
class Complex2 {
 public:
  Complex2() = default;

  static Complex2 from_triples(const std::vector<std::array<VertexId, 3>>& triples);
  static Complex2 from_triangles(std::vector<Triangle> tris);

  const std::vector<Triangle>& triangles() const { return tris_; }
  bool empty() const { return tris_.empty(); }
  std::size_t triangle_count() const { return tris_.size(); }
  std::size_t edge_count() const { return edge_index_.size(); }
  std::size_t vertex_count() const { return vertex_index_.size(); }

  /// Edge -> indices into triangles() of the triangles containing it.
  const std::map<Edge, std::vector<std::uint32_t>>& edge_index() const { return edge_index_; }
  /// Vertex -> indices into triangles() of the triangles containing it.
  const std::map<VertexId, std::vector<std::uint32_t>>& vertex_index() const {
    return vertex_index_;
  }

  std::size_t edge_multiplicity(const Edge& e) const;
  bool contains(const Triangle& t) const;
  std::optional<std::uint32_t> index_of(const Triangle& t) const;

  std::vector<VertexId> vertices() const;
  /// One past the largest vertex id in use (0 for the empty complex).
  VertexId fresh_vertex_start() const;

  bool operator==(const Complex2& other) const { return tris_ == other.tris_; }

 private:
  std::vector<Triangle> tris_;
  std::map<Edge, std::vector<std::uint32_t>> edge_index_;
  std::map<VertexId, std::vector<std::uint32_t>> vertex_index_;
};

enum class SurfaceKind { Sphere, PuncturedSphere, ClosedOther, WithBoundaryOther, NotSurface };

const char* to_string(SurfaceKind k);

struct SurfaceClass {
  SurfaceKind kind = SurfaceKind::NotSurface;
  long long euler_characteristic = 0;
  /// Number of boundary circles; only nonzero for PuncturedSphere.
  int boundary_cycles = 0;
  bool closed = false;
  bool orientable = false;
};

/// Partition of the triangles into maximal edge-connected subcomplexes.
/// Vertices may belong to several components.
struct ComponentDecomposition {
  std::vector<std::vector<Triangle>> components;
};

long long euler_characteristic(const Complex2& k);

ComponentDecomposition edge_connected_components(const Complex2& k);

/// Edges contained in exactly one triangle.
std::vector<Edge> boundary_edges(const Complex2& k);

/// Triangles having at least one edge of multiplicity >= 3.
std::vector<Triangle> conflict_triangles(const Complex2& k);

/// Classify a nonempty edge-connected complex. Throws NotEdgeConnected when the
/// complex does not have exactly one edge-connected component. Uses edge
/// multiplicities, vertex links, boundary-cycle structure, orientation
/// propagation and the Euler characteristic.
SurfaceClass classify_surface(const Complex2& k);

/// Relabel vertices by identification classes and rebuild. Classes must be
/// pairwise disjoint; ids not mentioned map to themselves. Throws
/// IdentificationCollapse if a triangle degenerates or two triangles merge.
Complex2 quotient_by_vertex_identifications(const Complex2& k,
                                            const std::vector<std::vector<VertexId>>& classes);

Complex2 subcomplex_of(const std::vector<Triangle>& tris);
Complex2 remove_triangles(const Complex2& k, const std::vector<Triangle>& tris);

/// True iff the complex is nonempty, has a single edge-connected component and
/// that component classifies as a 2-sphere.
bool whole_complex_is_sphere(const Complex2& k);

}  // namespace twosphere
