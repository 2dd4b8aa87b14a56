#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twosphere/deletion.hpp"
#include "twosphere/enumerate.hpp"
#include "twosphere/io.hpp"
#include "twosphere/random_gen.hpp"
#include "twosphere/search.hpp"
#include "twosphere/skeleton.hpp"

namespace py = pybind11;
using namespace twosphere;

namespace {

using Triples = std::vector<std::array<VertexId, 3>>;

Complex2 complex_of(const Triples& triples) { return Complex2::from_triples(triples); }

Triples triples_of(const std::vector<Triangle>& ts) {
  Triples out;
  out.reserve(ts.size());
  for (const Triangle& t : ts) out.push_back(t.v);
  return out;
}

Triples triples_of_complex(const Complex2& k) { return triples_of(k.triangles()); }

py::dict classify_dict(const SurfaceClass& c) {
  py::dict d;
  d["kind"] = to_string(c.kind);
  d["euler_characteristic"] = c.euler_characteristic;
  d["boundary_cycles"] = c.boundary_cycles;
  d["closed"] = c.closed;
  d["orientable"] = c.orientable;
  return d;
}

SearchEngine engine_of(const std::string& name) {
  if (name == "backtracking") return SearchEngine::Backtracking;
  if (name == "color-coding") return SearchEngine::ColorCoding;
  throw Error("unknown engine '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_twosphere, m) {
  m.doc() = "2-sphere subcomplex search and triangle-deletion preprocessing for "
            "2-dimensional simplicial complexes";

  py::register_exception<Error>(m, "TwosphereError");

  m.def("euler_characteristic",
        [](const Triples& t) { return euler_characteristic(complex_of(t)); });
  m.def("canonical_triangles",
        [](const Triples& t) { return triples_of_complex(complex_of(t)); });
  m.def("classify_surface",
        [](const Triples& t) { return classify_dict(classify_surface(complex_of(t))); });
  m.def("edge_connected_components", [](const Triples& t) {
    std::vector<Triples> out;
    for (auto& comp : edge_connected_components(complex_of(t)).components)
      out.push_back(triples_of(comp));
    return out;
  });
  m.def("boundary_edges", [](const Triples& t) {
    std::vector<std::array<VertexId, 2>> out;
    for (const Edge& e : boundary_edges(complex_of(t))) out.push_back(e.v);
    return out;
  });
  m.def("conflict_triangles",
        [](const Triples& t) { return triples_of(conflict_triangles(complex_of(t))); });
  m.def("barycentric_subdivision",
        [](const Triples& t) { return triples_of_complex(barycentric_subdivision(complex_of(t))); });
  m.def("skeleton_with_dims", [](const Triples& t) {
    ColoredSkeleton g = skeleton_with_dims(complex_of(t));
    py::dict d;
    py::list verts;
    for (const auto& v : g.vertices) verts.append(py::make_tuple(v.simplex, v.dim));
    d["vertices"] = verts;
    d["edges"] = g.edges;
    return d;
  });
  m.def("enumerate_sphere_triangulations", [](int max_triangles) {
    std::vector<Triples> out;
    for (const Complex2& k : enumerate_sphere_triangulations(max_triangles))
      out.push_back(triples_of_complex(k));
    return out;
  });
  m.def(
      "find_sphere",
      [](const Triples& t, long long k, bool exact, const std::string& engine,
         std::uint64_t seed, double delta, std::uint64_t max_trials, unsigned threads) {
        SearchOutcome r = find_sphere_subcomplex(
            complex_of(t), k, exact ? SearchMode::Exactly : SearchMode::AtMost,
            engine_of(engine), ColorCodingOptions{seed, delta, max_trials, threads});
        return py::make_tuple(r.found,
                              r.found ? py::cast(triples_of(*r.witness)) : py::none().cast<py::object>());
      },
      py::arg("triangles"), py::arg("k"), py::arg("exact") = false,
      py::arg("engine") = "backtracking", py::arg("seed") = 0, py::arg("delta") = 0.01,
      py::arg("max_trials") = 0, py::arg("threads") = 1);
  m.def(
      "brute_force_sphere",
      [](const Triples& t, long long k, bool exact) {
        SearchOutcome r = brute_force_sphere_subcomplex(
            complex_of(t), k, exact ? SearchMode::Exactly : SearchMode::AtMost);
        return py::make_tuple(r.found,
                              r.found ? py::cast(triples_of(*r.witness)) : py::none().cast<py::object>());
      },
      py::arg("triangles"), py::arg("k"), py::arg("exact") = false);
  m.def(
      "delete_to_sphere",
      [](const Triples& t, long long k, const std::string& engine) {
        DeletionInstance inst{complex_of(t), k};
        DeletionOutcome r;
        if (engine == "branching")
          r = solve_branching(inst);
        else if (engine == "conflict")
          r = solve_conflict_param(inst);
        else if (engine == "brute")
          r = brute_force_deletion(inst);
        else
          throw Error("unknown engine '" + engine + "'");
        return py::make_tuple(r.feasible,
                              r.feasible ? py::cast(triples_of(*r.deleted)) : py::none().cast<py::object>());
      },
      py::arg("triangles"), py::arg("k"), py::arg("engine") = "branching");
  m.def(
      "delete_to_sphere_weighted",
      [](const Triples& t, const std::vector<long long>& weights, long long k) {
        DeletionOutcome r = solve_branching_weighted({complex_of(t), weights, k});
        return py::make_tuple(r.feasible,
                              r.feasible ? py::cast(triples_of(*r.deleted)) : py::none().cast<py::object>());
      },
      py::arg("triangles"), py::arg("weights"), py::arg("k"));

  auto kernel_dict = [](const KernelOutcome& r) {
    py::dict d;
    if (r.kind == KernelOutcome::Kind::Decided) {
      d["kind"] = "decided";
      d["answer"] = r.answer;
      if (r.answer && r.certificate) d["certificate"] = triples_of(*r.certificate);
    } else if (r.kind == KernelOutcome::Kind::Reduced) {
      d["kind"] = "reduced";
      d["triangles"] = triples_of_complex(r.reduced->complex);
      d["budget"] = r.reduced->budget;
    } else {
      d["kind"] = "reduced-weighted";
      d["triangles"] = triples_of_complex(r.reduced_weighted->complex);
      d["weights"] = r.reduced_weighted->weights;
      d["budget"] = r.reduced_weighted->budget;
    }
    return d;
  };
  m.def("kernelize", [kernel_dict](const Triples& t, long long k) {
    return kernel_dict(kernelize({complex_of(t), k}));
  });
  m.def("compress", [kernel_dict](const Triples& t, long long k) {
    return kernel_dict(compress({complex_of(t), k}));
  });

  m.def(
      "random_complex",
      [](std::uint64_t seed, std::size_t triangles, double conflict_density) {
        RandomComplexParams p;
        p.target_triangles = triangles;
        p.conflict_density = conflict_density;
        return triples_of_complex(random_complex(seed, p));
      },
      py::arg("seed"), py::arg("triangles") = 12, py::arg("conflict_density") = 0.3);

  m.def("parse_2sc", [](const std::string& text) {
    ComplexFile f = parse_2sc_string(text);
    py::dict d;
    d["triangles"] = triples_of_complex(f.complex);
    d["weights"] = f.weights;
    py::list me;
    for (const Edge& e : f.maximal_edges) me.append(e.v);
    d["maximal_edges"] = me;
    d["isolated_vertices"] = f.isolated_vertices;
    return d;
  });
  m.def("write_2sc", [](const Triples& t) { return write_2sc(complex_of(t)); });
  m.def("write_2sc_weighted", [](const Triples& t, const std::vector<long long>& w) {
    return write_2sc_weighted(complex_of(t), w);
  });

  // grid tiling
  using PySets = std::map<std::pair<int, int>, std::vector<std::pair<int, int>>>;
  auto instance_of = [](int n, int k, const PySets& sets) {
    GridTilingInstance g;
    g.n = n;
    g.k = k;
    g.sets = sets;
    g.validate();
    return g;
  };
  m.def("solve_grid_tiling", [instance_of](int n, int k, const PySets& sets) {
    auto sel = solve_grid_tiling(instance_of(n, k, sets));
    return sel ? py::cast(*sel) : py::none().cast<py::object>();
  });
  m.def("generate_reduction", [instance_of](int n, int k, const PySets& sets) {
    ReductionOutput r = generate_reduction(instance_of(n, k, sets));
    py::dict d;
    d["triangles"] = triples_of_complex(r.complex);
    d["k_prime"] = r.k_prime;
    py::dict tiles;
    for (const auto& [key, ts] : r.tile_squares) {
      auto name = py::make_tuple(key[0], key[1], key[2], key[3]);
      tiles[name] = triples_of(ts);
    }
    d["tile_squares"] = tiles;
    d["back_sheet"] = triples_of(r.back_sheet);
    return d;
  });
  m.def("assemble_solution",
        [instance_of](int n, int k, const PySets& sets, const Selection& selection) {
          ReductionOutput r = generate_reduction(instance_of(n, k, sets));
          return triples_of(assemble_solution(r, selection));
        });
}
