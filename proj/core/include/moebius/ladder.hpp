#pragma once

#include "moebius/graph.hpp"

#include <array>
#include <cstdint>

namespace moebius {

/// Parameters of the generalized Moebius ladder M(m,n): take the grid
/// P_m x P_n and identify the first column with the reversed last column
/// (a half twist). The result has n*(m-1) vertices. Internally, vertex
/// (column i, row j) with i in 0..m-2, j in 0..n-1 gets index i*n + j.
struct LadderSpec {
  std::uint32_t m = 0;  // grid columns before identification, >= 4
  std::uint32_t n = 0;  // rows, >= 2

  std::uint32_t vertex_count() const noexcept { return n * (m - 1); }

  VertexId vertex_index(std::uint32_t column, std::uint32_t row) const noexcept {
    return column * n + row;
  }
};

// Builds M(m,n). Edges: rungs (i,j)-(i,j+1), rails (i,j)-(i+1,j), and twist
// edges (m-2,j)-(0,n-1-j) closing the band with a row reversal.
// Throws for m < 4 or n < 2 (m = 3 would create a parallel edge between the
// last column and column 0 at the self-symmetric middle row).
Graph build_ladder(const LadderSpec& spec);

/// 3x3 table of distances between two columns of M(m,3): entry (j,j') of
/// block q is d((r,j), (r+q,j')), independent of r.
using BlockMatrix = std::array<std::array<std::uint32_t, 3>, 3>;

// Block q of M(m,3) for 0 <= q <= m-2, by the per-parity case formulas
// (even m >= 6: five cases; odd m >= 7: four cases). Symmetric for q >= 1;
// entries differ pairwise by at most 2.
BlockMatrix block_matrix(std::uint32_t q, std::uint32_t m);

// The 3(m-1) x 3(m-1) distance table of M(m,3) assembled from blocks only:
// block position (r,c) with r <= c carries block c-r (so block q appears
// m-1-q times on the qth secondary diagonal), lower triangle by symmetry.
// Equals distance_matrix(build_ladder({m,3})) entrywise.
DistanceMatrix assemble_block_distance_matrix(std::uint32_t m);

}  // namespace moebius
