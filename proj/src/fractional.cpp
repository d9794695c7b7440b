#include "stpath/fractional.hpp"

#include <stdexcept>

namespace stpath {

FractionalSolution::FractionalSolution(std::vector<Rational> values) : values_(std::move(values)) {
  for (auto& v : values_) {
    v.canonicalize();
    if (v < 0 || v > 2) throw std::invalid_argument("fractional value outside [0, 2]: " + to_fraction_string(v));
  }
}

FractionalSolution FractionalSolution::uniform(int m, const Rational& value) {
  return FractionalSolution(std::vector<Rational>(static_cast<std::size_t>(m), value));
}

Rational FractionalSolution::total() const {
  Rational sum;
  for (const auto& v : values_) sum += v;
  return sum;
}

Rational FractionalSolution::cut_value(const Graph& g, const VertexSet& side) const {
  Rational sum;
  for (int e = 0; e < g.m(); ++e)
    if (side.contains(g.edge(e).u) != side.contains(g.edge(e).v)) sum += (*this)[e];
  return sum;
}

Rational FractionalSolution::partition_value(const Graph& g, const Partition& partition) const {
  Rational sum;
  for (int e = 0; e < g.m(); ++e)
    if (partition.block_of(g.edge(e).u) != partition.block_of(g.edge(e).v)) sum += (*this)[e];
  return sum;
}

}  // namespace stpath
