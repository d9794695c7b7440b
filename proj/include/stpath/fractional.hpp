#pragma once

#include "stpath/graph.hpp"
#include "stpath/rational.hpp"

#include <span>
#include <vector>

namespace stpath {

/// Edge-indexed rational vector with every entry in [0, 2].
class FractionalSolution {
 public:
  FractionalSolution() = default;
  explicit FractionalSolution(std::vector<Rational> values);
  static FractionalSolution uniform(int m, const Rational& value);

  int size() const { return static_cast<int>(values_.size()); }
  const Rational& operator[](int e) const { return values_[static_cast<std::size_t>(e)]; }
  std::span<const Rational> values() const { return values_; }

  Rational total() const;
  /// x(delta(side)).
  Rational cut_value(const Graph& g, const VertexSet& side) const;
  /// x(delta(W)).
  Rational partition_value(const Graph& g, const Partition& partition) const;

  friend bool operator==(const FractionalSolution&, const FractionalSolution&) = default;

 private:
  std::vector<Rational> values_;
};

}  // namespace stpath
