#pragma once

#include "stpath/errors.hpp"
#include "stpath/fractional.hpp"
#include "stpath/graph.hpp"
#include "stpath/rational.hpp"

#include <optional>

namespace stpath {

/// Largest vertex count handled by exhaustive partition separation.
inline constexpr int kPartitionSeparationLimit = 12;

enum class ConstraintKind { partition, even_cut };

/// A row of the relaxation that x violates: lhs < rhs.
/// `partition` is set for partition rows, `cut` for even-cut rows.
struct ViolatedConstraint {
  ConstraintKind kind = ConstraintKind::even_cut;
  std::optional<Partition> partition;
  std::optional<VertexSet> cut;
  Rational lhs;
  Rational rhs;
};

/// Most violated row x(delta(S)) >= 2 over S with |S ∩ {s,t}| even, or none.
/// The returned S avoids both terminals. Per-vertex max-flows run in parallel.
std::optional<ViolatedConstraint> separate_even_cuts(const Graph& g, const FractionalSolution& x);
/// Serial reference for separate_even_cuts; returns the identical row.
std::optional<ViolatedConstraint> separate_even_cuts_serial(const Graph& g, const FractionalSolution& x);

/// Most violated row x(delta(W)) >= |W| - 1 by exhaustive enumeration of set partitions.
/// Ties go to the lexicographically smallest restricted-growth labelling.
/// Throws ScaleLimitError when g.n() > limit.
std::optional<ViolatedConstraint> separate_partitions(const Graph& g, const FractionalSolution& x,
                                                      int limit = kPartitionSeparationLimit);
std::optional<ViolatedConstraint> separate_partitions_serial(const Graph& g, const FractionalSolution& x,
                                                             int limit = kPartitionSeparationLimit);

struct RelaxationOptions {
  bool parallel = true;
  int partition_limit = kPartitionSeparationLimit;
};

struct RelaxationResult {
  FractionalSolution x;
  Rational lp_value;
  int iterations = 0;
  int rows = 0;
};

/// Cutting-plane solve of the s-t path relaxation: bounds 0 <= x <= 2, partition rows,
/// and x(delta(S)) >= 2 for every S that contains both or neither terminal.
RelaxationResult solve_relaxation(const Graph& g, const RelaxationOptions& options = {});

}  // namespace stpath
