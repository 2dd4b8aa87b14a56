#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "twosphere/complex.hpp"

namespace twosphere {

struct DeletionInstance {
  Complex2 complex;
  long long budget = 0;
};

/// Per-triangle positive integer weights aligned with complex.triangles().
struct WeightedInstance {
  Complex2 complex;
  std::vector<long long> weights;
  long long budget = 0;
};

struct DeletionOutcome {
  bool feasible = false;
  std::optional<std::vector<Triangle>> deleted;
};

struct KernelOutcome {
  enum class Kind { Decided, Reduced, ReducedWeighted };
  Kind kind = Kind::Decided;
  bool answer = false;
  std::optional<std::vector<Triangle>> certificate;  // for Decided(yes)
  std::optional<DeletionInstance> reduced;
  std::optional<WeightedInstance> reduced_weighted;
};

struct Rule1Result {
  DeletionInstance instance;
  std::vector<Triangle> removed;
};

/// Exhaustively delete triangles having an edge of multiplicity one,
/// decrementing the budget per removal (cascading). The budget may go
/// negative; the caller decides "no" in that case.
Rule1Result apply_rule_1(const DeletionInstance& instance);

/// Reject when there are more than 7k conflict triangles.
KernelOutcome apply_rule_2(const DeletionInstance& instance);

/// Handle boundaryless components of K minus the conflict triangles: answer
/// yes when such a component is a sphere that everything else fits in the
/// budget, otherwise delete the component.
KernelOutcome apply_rule_3(const DeletionInstance& instance);

/// Delete boundary components that are not punctured spheres.
Rule1Result apply_rule_4(const DeletionInstance& instance);

/// Pairs of boundary edges of c that share a triangle of c.
std::vector<std::pair<Edge, Edge>> cofacial_boundary_pairs(const Complex2& c);

/// Lemma-style replacement of a punctured-sphere component: same boundary,
/// same homeomorphism type, all cofacial boundary pairs preserved, at most
/// 4*l + 6*b triangles, interior vertices starting at fresh_start.
Complex2 replace_component(const Complex2& c, const std::vector<std::pair<Edge, Edge>>& pairs,
                           VertexId fresh_start);

/// Grow a punctured-sphere component past `target` triangles by repeated
/// interior 1-to-3 triangle subdivision (+2 triangles per step).
Complex2 pad_component(const Complex2& c, long long target, VertexId fresh_start);

/// Rules 1-4 to exhaustion, then replacement of components larger than k
/// (padded back above k). Output has at most O(k^2) triangles.
KernelOutcome kernelize(const DeletionInstance& instance);

/// Rules 1-4 to exhaustion, then replacement of every component with weights
/// preserving the (capped) deletion cost. Output has O(k) triangles.
KernelOutcome compress(const DeletionInstance& instance);

/// 3-way branching on an edge shared by at least three triangles.
DeletionOutcome solve_branching(const DeletionInstance& instance);
DeletionOutcome solve_branching_weighted(const WeightedInstance& instance);

/// Polynomial base case: all edge multiplicities at most two.
DeletionOutcome solve_base_case(const DeletionInstance& instance);

/// Enumerate deletions among the conflict triangles (2^t guesses).
DeletionOutcome solve_conflict_param(const DeletionInstance& instance, int guard_t = 20);

/// Exact oracle by subset enumeration; guarded.
DeletionOutcome brute_force_deletion(const DeletionInstance& instance, std::size_t guard = 18);

}  // namespace twosphere
