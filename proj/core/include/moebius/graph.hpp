#pragma once

#include "moebius/polynomial.hpp"
#include "moebius/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace moebius {

using VertexId = std::uint32_t;

/// Simple undirected graph on vertices 0..V-1. Adjacency is stored as one
/// flat array with per-vertex sorted ranges (CSR); the structure is immutable
/// after construction.
class Graph {
 public:
  // Rejects out-of-range endpoints, self-loops and duplicate edges.
  Graph(VertexId vertex_count,
        std::span<const std::pair<VertexId, VertexId>> edges);

  VertexId vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const;
  VertexId degree(VertexId v) const;

 private:
  VertexId vertex_count_ = 0;
  std::vector<std::size_t> offsets_;  // size V+1
  std::vector<VertexId> adjacency_;   // grouped by vertex, each group sorted
};

/// Exact all-pairs distance table of a connected graph: symmetric, zero
/// diagonal, off-diagonal entries >= 1 (enforced at construction).
class DistanceMatrix {
 public:
  DistanceMatrix(VertexId size, std::vector<std::uint32_t> entries);

  VertexId size() const noexcept { return size_; }

  std::uint32_t operator()(VertexId i, VertexId j) const {
    return entries_[static_cast<std::size_t>(i) * size_ + j];
  }

  std::span<const std::uint32_t> row(VertexId i) const;

  // Diameter of the originating graph.
  std::uint32_t max_entry() const;

  bool operator==(const DistanceMatrix& other) const = default;

 private:
  VertexId size_ = 0;
  std::vector<std::uint32_t> entries_;  // row-major, size*size
};

// Shortest-path lengths from source to every vertex (one breadth-first
// search). Throws if some vertex is unreachable, naming it.
std::vector<std::uint32_t> bfs_distances(const Graph& g, VertexId source);

// All-pairs table, one BFS per source. Rows are filled in parallel for
// larger graphs; the result is independent of scheduling.
DistanceMatrix distance_matrix(const Graph& g);

std::uint32_t diameter(const Graph& g);

// Brute-force Hosoya polynomial: c_k = number of unordered pairs at
// distance k. Requires a connected graph with at least two vertices.
HosoyaPolynomial hosoya_polynomial(const Graph& g);

// Direct summations over a distance table, the reference route for the
// polynomial relations. Sums run over unordered pairs u < v.
Rational wiener_from_distances(const DistanceMatrix& d);         // sum d
Rational hyper_wiener_from_distances(const DistanceMatrix& d);   // 1/2 sum (d^2 + d)
Rational harary_from_distances(const DistanceMatrix& d);         // sum 1/d
Rational tsz_from_distances(const DistanceMatrix& d);            // 1/6 sum d(d+1)(d+2)

// Reciprocal-square variant, sum 1/d^2. A distinct quantity from
// harary_from_distances.
Rational harary_squared(const DistanceMatrix& d);

}  // namespace moebius
