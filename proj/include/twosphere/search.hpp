#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "twosphere/complex.hpp"
#include "twosphere/skeleton.hpp"
#include "twosphere/treedecomp.hpp"

namespace twosphere {

struct SearchOutcome {
  bool found = false;
  std::optional<std::vector<Triangle>> witness;
};

enum class SearchMode { AtMost, Exactly };
enum class SearchEngine { Backtracking, ColorCoding };

struct ColorCodingOptions {
  std::uint64_t seed = 0;
  double delta = 0.01;
  /// 0 means the full budget ceil(e^m ln(1/delta)) per pattern.
  std::uint64_t max_trials = 0;
  unsigned threads = 1;
};

/// Number of independent trial colorings for a pattern skeleton with m
/// vertices and one-sided failure probability delta (saturating).
std::uint64_t color_coding_trial_count(std::size_t m, double delta);

/// Deterministic coloring of host_n vertices with labels in [0, m) derived
/// from (seed, trial_index) only.
std::vector<std::uint32_t> trial_coloring_for(std::uint64_t seed, std::uint64_t trial_index,
                                              std::size_t host_n, std::size_t m);

/// One color-coding trial: dynamic programming over a tree decomposition of
/// the pattern skeleton. Returns a label-rainbow, dim-preserving subgraph
/// embedding (pattern vertex -> host vertex) if one exists under the given
/// coloring; the mapping is verified before being returned.
std::optional<std::vector<std::uint32_t>> colorful_match_once(
    const ColoredSkeleton& host, const ColoredSkeleton& pattern,
    const std::vector<std::uint32_t>& trial_coloring, const TreeDecomposition& td);

/// Solve 2-Dim-Sphere: find a subcomplex with at most (or exactly) k triangles
/// homeomorphic to S^2. The backtracking engine is exact; the color-coding
/// engine has one-sided error at most delta per pattern. Any returned witness
/// is verified with classify_surface before find = true is reported.
SearchOutcome find_sphere_subcomplex(const Complex2& host, long long k,
                                     SearchMode mode = SearchMode::AtMost,
                                     SearchEngine engine = SearchEngine::Backtracking,
                                     const ColorCodingOptions& cc = {});

/// Exact answer by subset enumeration in increasing size, testing
/// classify_surface on each candidate. Guarded.
SearchOutcome brute_force_sphere_subcomplex(const Complex2& host, long long k,
                                            SearchMode mode = SearchMode::AtMost,
                                            std::size_t guard = 25);

}  // namespace twosphere
