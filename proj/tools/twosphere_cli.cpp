#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "twosphere/deletion.hpp"
#include "twosphere/enumerate.hpp"
#include "twosphere/io.hpp"
#include "twosphere/random_gen.hpp"
#include "twosphere/search.hpp"
#include "twosphere/skeleton.hpp"

using nlohmann::json;
using namespace twosphere;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFormat = 3;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

ComplexFile load_instance(const std::string& path) {
  if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json_complex(ss.str());
  }
  return load_2sc(path);
}

json instance_stats(const ComplexFile& f) {
  const Complex2& k = f.complex;
  json j;
  j["triangles"] = k.triangle_count();
  j["edges"] = k.edge_count();
  j["vertices"] = k.vertex_count();
  j["euler_characteristic"] = euler_characteristic(k);
  j["components"] = edge_connected_components(k).components.size();
  j["boundary_edges"] = boundary_edges(k).size();
  j["conflict_triangles"] = conflict_triangles(k).size();
  j["maximal_edges"] = f.maximal_edges.size();
  j["isolated_vertices"] = f.isolated_vertices.size();
  j["weighted"] = f.weighted();
  return j;
}

json triangles_json(const std::vector<Triangle>& ts) {
  json out = json::array();
  for (const Triangle& t : ts) out.push_back({t.v[0], t.v[1], t.v[2]});
  return out;
}

void emit(const json& report, const std::string& human) {
  std::cout << report.dump() << std::endl;
  std::cerr << human << std::endl;
}

std::string write_complex(const Complex2& k, const std::string& format,
                          const std::vector<long long>* weights, const std::string& comment) {
  if (format == "json") return write_json_complex(k, weights);
  if (weights) return write_2sc_weighted(k, *weights, comment);
  return write_2sc(k, comment);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-sphere subcomplex search, triangle-deletion solving and preprocessing "
               "for 2-dimensional simplicial complexes"};
  app.require_subcommand(1);

  std::string in_path, out_path, gt_path;
  long long k_budget = 0;
  bool exact = false, weighted = false;
  std::string engine = "backtracking";
  std::uint64_t seed = 0;
  double delta = 0.01;
  std::uint64_t max_trials = 0;
  unsigned threads = 1;
  std::string format = "2sc";
  std::size_t gen_triangles = 12;
  double conflict_density = 0.3;
  int repeat = 3;

  auto add_in = [&](CLI::App* cmd) {
    cmd->add_option("input", in_path, "input file")->required();
  };

  auto* c_validate = app.add_subcommand("validate", "parse and validate a .2sc file");
  add_in(c_validate);
  auto* c_stats = app.add_subcommand("stats", "instance statistics");
  add_in(c_stats);
  auto* c_recognize = app.add_subcommand("recognize", "surface classification");
  add_in(c_recognize);
  auto* c_components = app.add_subcommand("components", "edge-connected components");
  add_in(c_components);
  auto* c_sd = app.add_subcommand("sd", "barycentric subdivision");
  add_in(c_sd);
  c_sd->add_option("--out", out_path, "output file")->required();
  c_sd->add_option("--format", format, "2sc|json")->check(CLI::IsMember({"2sc", "json"}));

  auto* c_find = app.add_subcommand("find-sphere", "find a small 2-sphere subcomplex");
  add_in(c_find);
  c_find->add_option("--k", k_budget, "triangle budget")->required();
  c_find->add_flag("--exact", exact, "require exactly k triangles");
  c_find->add_option("--engine", engine, "backtracking|color-coding|brute")
      ->check(CLI::IsMember({"backtracking", "color-coding", "brute"}));
  c_find->add_option("--seed", seed, "color-coding seed");
  c_find->add_option("--delta", delta, "color-coding failure probability");
  c_find->add_option("--max-trials", max_trials, "cap on color-coding trials (0 = formula)");
  c_find->add_option("--threads", threads, "color-coding trial workers");

  std::string del_engine = "branching";
  auto* c_del = app.add_subcommand("delete-to-sphere", "delete at most k triangles to a sphere");
  add_in(c_del);
  c_del->add_option("--k", k_budget, "deletion budget")->required();
  c_del->add_option("--engine", del_engine, "branching|conflict|brute")
      ->check(CLI::IsMember({"branching", "conflict", "brute"}));
  c_del->add_flag("--weighted", weighted, "weighted instance (branching engine)");

  auto* c_kern = app.add_subcommand("kernelize", "reduce to an equivalent instance");
  add_in(c_kern);
  c_kern->add_option("--k", k_budget, "deletion budget")->required();
  c_kern->add_option("--out", out_path, "output file")->required();
  c_kern->add_option("--format", format, "2sc|json")->check(CLI::IsMember({"2sc", "json"}));

  auto* c_comp = app.add_subcommand("compress", "weighted compression");
  add_in(c_comp);
  c_comp->add_option("--k", k_budget, "deletion budget")->required();
  c_comp->add_option("--out", out_path, "output file")->required();
  c_comp->add_option("--format", format, "2sc|json")->check(CLI::IsMember({"2sc", "json"}));

  auto* c_ggt = app.add_subcommand("gen-grid-tiling", "build the reduction complex from a .gt");
  add_in(c_ggt);
  c_ggt->add_option("--out", out_path, "output .2sc file")->required();
  c_ggt->add_option("--format", format, "2sc|json")->check(CLI::IsMember({"2sc", "json"}));

  auto* c_sgt = app.add_subcommand("solve-grid-tiling", "brute-force a .gt instance");
  add_in(c_sgt);

  auto* c_rand = app.add_subcommand("gen-random", "seeded random complex by triangle gluing");
  c_rand->add_option("--out", out_path, "output file")->required();
  c_rand->add_option("--seed", seed, "seed");
  c_rand->add_option("--triangles", gen_triangles, "target triangle count");
  c_rand->add_option("--conflict-density", conflict_density, "conflict gluing probability");
  c_rand->add_option("--format", format, "2sc|json")->check(CLI::IsMember({"2sc", "json"}));

  auto* c_bench = app.add_subcommand("bench", "time an engine on an instance");
  add_in(c_bench);
  c_bench->add_option("--k", k_budget, "budget")->required();
  c_bench->add_option("--engine", engine,
                      "backtracking|color-coding|brute|branching|conflict")
      ->check(CLI::IsMember({"backtracking", "color-coding", "brute", "branching", "conflict"}));
  c_bench->add_option("--seed", seed, "color-coding seed");
  c_bench->add_option("--delta", delta, "color-coding failure probability");
  c_bench->add_option("--max-trials", max_trials, "color-coding trial cap");
  c_bench->add_option("--repeat", repeat, "repetitions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  Timer timer;
  json report;
  report["report"] = 1;

  try {
    if (c_validate->parsed() || c_stats->parsed()) {
      ComplexFile f = load_instance(in_path);
      report["command"] = c_validate->parsed() ? "validate" : "stats";
      report["instance"] = instance_stats(f);
      report["verdict"] = "ok";
      report["timing_ms"] = timer.ms();
      emit(report, std::string(c_validate->parsed() ? "valid " : "") + "instance with " +
                       std::to_string(f.complex.triangle_count()) + " triangles");
      return kExitYes;
    }

    if (c_recognize->parsed()) {
      ComplexFile f = load_instance(in_path);
      report["command"] = "recognize";
      report["instance"] = instance_stats(f);
      auto comps = edge_connected_components(f.complex).components;
      json per = json::array();
      for (auto& comp : comps) {
        auto cls = classify_surface(Complex2::from_triangles(comp));
        json c;
        c["kind"] = to_string(cls.kind);
        c["euler_characteristic"] = cls.euler_characteristic;
        c["boundary_cycles"] = cls.boundary_cycles;
        c["orientable"] = cls.orientable;
        c["closed"] = cls.closed;
        c["triangles"] = comp.size();
        per.push_back(c);
      }
      report["component_classes"] = per;
      if (comps.size() == 1) {
        auto cls = classify_surface(f.complex);
        report["verdict"] = to_string(cls.kind);
        report["euler_characteristic"] = cls.euler_characteristic;
        if (cls.kind == SurfaceKind::PuncturedSphere)
          report["boundary_cycles"] = cls.boundary_cycles;
        report["timing_ms"] = timer.ms();
        emit(report, std::string("kind = ") + to_string(cls.kind) +
                         ", chi = " + std::to_string(cls.euler_characteristic));
        return kExitYes;
      }
      report["verdict"] = "NotEdgeConnected";
      report["timing_ms"] = timer.ms();
      emit(report, "not edge-connected (" + std::to_string(comps.size()) + " components)");
      return kExitNo;
    }

    if (c_components->parsed()) {
      ComplexFile f = load_instance(in_path);
      report["command"] = "components";
      report["instance"] = instance_stats(f);
      json arr = json::array();
      for (auto& comp : edge_connected_components(f.complex).components) {
        Complex2 cc = Complex2::from_triangles(comp);
        json c;
        c["triangles"] = comp.size();
        c["boundary_edges"] = boundary_edges(cc).size();
        c["kind"] = to_string(classify_surface(cc).kind);
        arr.push_back(c);
      }
      report["components"] = arr;
      report["verdict"] = "ok";
      report["timing_ms"] = timer.ms();
      emit(report, std::to_string(arr.size()) + " components");
      return kExitYes;
    }

    if (c_sd->parsed()) {
      ComplexFile f = load_instance(in_path);
      Complex2 sd = barycentric_subdivision(f.complex);
      save_text(out_path, write_complex(sd, format, nullptr, "barycentric subdivision"));
      report["command"] = "sd";
      report["instance"] = instance_stats(f);
      report["output"] = {{"path", out_path},
                          {"triangles", sd.triangle_count()},
                          {"euler_characteristic", euler_characteristic(sd)}};
      report["verdict"] = "ok";
      report["timing_ms"] = timer.ms();
      emit(report, "wrote " + out_path);
      return kExitYes;
    }

    if (c_find->parsed()) {
      ComplexFile f = load_instance(in_path);
      report["command"] = "find-sphere";
      report["instance"] = instance_stats(f);
      if (!f.maximal_edges.empty() || !f.isolated_vertices.empty())
        report["note"] = "maximal edges/vertices present; ignored for subcomplex search";
      SearchMode mode = exact ? SearchMode::Exactly : SearchMode::AtMost;
      SearchOutcome r;
      json eng;
      eng["name"] = engine;
      if (engine == "brute") {
        r = brute_force_sphere_subcomplex(f.complex, k_budget, mode);
      } else if (engine == "color-coding") {
        ColorCodingOptions cc{seed, delta, max_trials, threads};
        eng["seed"] = seed;
        eng["delta"] = delta;
        eng["max_trials"] = max_trials;
        r = find_sphere_subcomplex(f.complex, k_budget, mode, SearchEngine::ColorCoding, cc);
      } else {
        r = find_sphere_subcomplex(f.complex, k_budget, mode, SearchEngine::Backtracking);
      }
      report["engine"] = eng;
      report["verdict"] = r.found ? "found" : "not-found";
      if (r.found) report["certificate"] = triangles_json(*r.witness);
      report["timing_ms"] = timer.ms();
      emit(report, r.found ? "found a sphere subcomplex with " +
                                 std::to_string(r.witness->size()) + " triangles"
                           : "no sphere subcomplex within budget");
      return r.found ? kExitYes : kExitNo;
    }

    if (c_del->parsed()) {
      ComplexFile f = load_instance(in_path);
      report["command"] = "delete-to-sphere";
      report["instance"] = instance_stats(f);
      report["engine"] = {{"name", del_engine}};
      if (!f.maximal_edges.empty() || !f.isolated_vertices.empty()) {
        // maximal lower simplices cannot be removed by triangle deletions
        report["note"] = "maximal edges/vertices present; instance is infeasible";
        report["verdict"] = "no";
        report["timing_ms"] = timer.ms();
        emit(report, "no (maximal lower-dimensional simplices present)");
        return kExitNo;
      }
      DeletionOutcome r;
      if (weighted) {
        if (del_engine != "branching")
          throw Error("weighted instances are solved by the branching engine");
        std::vector<long long> w =
            f.weighted() ? f.weights : std::vector<long long>(f.complex.triangle_count(), 1);
        r = solve_branching_weighted({f.complex, w, k_budget});
      } else if (del_engine == "conflict") {
        r = solve_conflict_param({f.complex, k_budget});
      } else if (del_engine == "brute") {
        r = brute_force_deletion({f.complex, k_budget});
      } else {
        r = solve_branching({f.complex, k_budget});
      }
      report["verdict"] = r.feasible ? "yes" : "no";
      if (r.feasible) report["certificate"] = triangles_json(*r.deleted);
      report["timing_ms"] = timer.ms();
      emit(report, r.feasible
                       ? "yes, delete " + std::to_string(r.deleted->size()) + " triangles"
                       : "no");
      return r.feasible ? kExitYes : kExitNo;
    }

    if (c_kern->parsed() || c_comp->parsed()) {
      bool is_compress = c_comp->parsed();
      ComplexFile f = load_instance(in_path);
      report["command"] = is_compress ? "compress" : "kernelize";
      report["instance"] = instance_stats(f);
      if (!f.maximal_edges.empty() || !f.isolated_vertices.empty()) {
        report["note"] = "maximal edges/vertices present; instance is infeasible";
        report["verdict"] = "decided-no";
        report["timing_ms"] = timer.ms();
        emit(report, "decided: no (maximal lower-dimensional simplices present)");
        return kExitNo;
      }
      DeletionInstance inst{f.complex, k_budget};
      KernelOutcome r = is_compress ? compress(inst) : kernelize(inst);
      if (r.kind == KernelOutcome::Kind::Decided) {
        report["verdict"] = r.answer ? "decided-yes" : "decided-no";
        if (r.answer && r.certificate) report["certificate"] = triangles_json(*r.certificate);
        report["timing_ms"] = timer.ms();
        emit(report, std::string("decided: ") + (r.answer ? "yes" : "no"));
        return r.answer ? kExitYes : kExitNo;
      }
      std::string comment = "reduced instance, original budget k=" + std::to_string(k_budget);
      if (r.kind == KernelOutcome::Kind::Reduced) {
        save_text(out_path, write_complex(r.reduced->complex, format, nullptr, comment));
        report["output"] = {{"path", out_path},
                            {"triangles", r.reduced->complex.triangle_count()},
                            {"budget", r.reduced->budget}};
      } else {
        save_text(out_path, write_complex(r.reduced_weighted->complex, format,
                                          &r.reduced_weighted->weights, comment));
        report["output"] = {{"path", out_path},
                            {"triangles", r.reduced_weighted->complex.triangle_count()},
                            {"budget", r.reduced_weighted->budget}};
      }
      report["verdict"] = "reduced";
      report["timing_ms"] = timer.ms();
      emit(report, "wrote reduced instance to " + out_path);
      return kExitYes;
    }

    if (c_ggt->parsed()) {
      GridTilingInstance g = load_gt(in_path);
      ReductionOutput r = generate_reduction(g);
      save_text(out_path, write_complex(r.complex, format, nullptr,
                                        "grid tiling reduction, k'=" + std::to_string(r.k_prime)));
      // sidecar: tile squares and back sheet as triangle indices
      json side;
      side["k_prime"] = r.k_prime;
      json tiles = json::object();
      for (const auto& [key, ts] : r.tile_squares) {
        std::string name = std::to_string(key[0]) + "," + std::to_string(key[1]) + "," +
                           std::to_string(key[2]) + "," + std::to_string(key[3]);
        json idxs = json::array();
        for (const Triangle& t : ts) idxs.push_back(*r.complex.index_of(t));
        tiles[name] = idxs;
      }
      side["tiles"] = tiles;
      json bs = json::array();
      for (const Triangle& t : r.back_sheet) bs.push_back(*r.complex.index_of(t));
      side["back_sheet"] = bs;
      save_text(out_path + ".json", side.dump());

      report["command"] = "gen-grid-tiling";
      report["k_prime"] = r.k_prime;
      report["output"] = {{"path", out_path},
                          {"sidecar", out_path + ".json"},
                          {"triangles", r.complex.triangle_count()}};
      report["verdict"] = "ok";
      report["timing_ms"] = timer.ms();
      emit(report, "wrote " + out_path + " (k' = " + std::to_string(r.k_prime) + ")");
      return kExitYes;
    }

    if (c_sgt->parsed()) {
      GridTilingInstance g = load_gt(in_path);
      report["command"] = "solve-grid-tiling";
      auto sel = solve_grid_tiling(g);
      report["verdict"] = sel ? "yes" : "no";
      if (sel) {
        json s = json::object();
        for (const auto& [ij, ab] : *sel)
          s[std::to_string(ij.first) + "," + std::to_string(ij.second)] = {ab.first, ab.second};
        report["selection"] = s;
      }
      report["timing_ms"] = timer.ms();
      emit(report, sel ? "yes" : "no");
      return sel ? kExitYes : kExitNo;
    }

    if (c_rand->parsed()) {
      RandomComplexParams p;
      p.target_triangles = gen_triangles;
      p.conflict_density = conflict_density;
      Complex2 k = random_complex(seed, p);
      save_text(out_path,
                write_complex(k, format, nullptr, "random instance, seed=" + std::to_string(seed)));
      report["command"] = "gen-random";
      report["engine"] = {{"name", "gluing"}, {"seed", seed}};
      report["output"] = {{"path", out_path}, {"triangles", k.triangle_count()}};
      report["verdict"] = "ok";
      report["timing_ms"] = timer.ms();
      emit(report, "wrote " + out_path);
      return kExitYes;
    }

    if (c_bench->parsed()) {
      ComplexFile f = load_instance(in_path);
      report["command"] = "bench";
      report["instance"] = instance_stats(f);
      report["engine"] = {{"name", engine}, {"seed", seed}};
      json runs = json::array();
      std::string verdict;
      for (int i = 0; i < repeat; ++i) {
        Timer t1;
        if (engine == "branching")
          verdict = solve_branching({f.complex, k_budget}).feasible ? "yes" : "no";
        else if (engine == "conflict")
          verdict = solve_conflict_param({f.complex, k_budget}).feasible ? "yes" : "no";
        else if (engine == "brute")
          verdict =
              brute_force_sphere_subcomplex(f.complex, k_budget).found ? "found" : "not-found";
        else if (engine == "color-coding")
          verdict = find_sphere_subcomplex(f.complex, k_budget, SearchMode::AtMost,
                                           SearchEngine::ColorCoding,
                                           {seed, delta, max_trials, threads})
                            .found
                        ? "found"
                        : "not-found";
        else
          verdict = find_sphere_subcomplex(f.complex, k_budget).found ? "found" : "not-found";
        runs.push_back(t1.ms());
      }
      report["runs_ms"] = runs;
      report["verdict"] = verdict;
      report["timing_ms"] = timer.ms();
      emit(report, "bench done");
      return kExitYes;
    }
  } catch (const ParseError& e) {
    report["verdict"] = "error";
    report["error"] = e.what();
    report["timing_ms"] = timer.ms();
    emit(report, std::string("format error: ") + e.what());
    return kExitFormat;
  } catch (const Error& e) {
    report["verdict"] = "error";
    report["error"] = e.what();
    report["timing_ms"] = timer.ms();
    emit(report, std::string("error: ") + e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
