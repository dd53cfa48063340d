#include "moebius/ladder.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace moebius {

namespace {

// Distances inside one column of M(m,3) (rows 0,1,2)...
constexpr BlockMatrix kInColumn{{{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}};
// ...and the same pattern with rows reversed, as seen across the twist.
constexpr BlockMatrix kAcrossTwist{{{2, 1, 0}, {1, 0, 1}, {0, 1, 2}}};

BlockMatrix shifted(const BlockMatrix& base, std::uint32_t offset) {
  BlockMatrix out{};
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) out[j][k] = base[j][k] + offset;
  }
  return out;
}

void require_block_range(std::uint32_t m) {
  const bool even_ok = (m % 2 == 0 && m >= 6);
  const bool odd_ok = (m % 2 == 1 && m >= 7);
  if (!even_ok && !odd_ok) {
    throw std::invalid_argument(
        "block construction requires even m >= 6 or odd m >= 7 (got m = " +
        std::to_string(m) + ")");
  }
}

}  // namespace

Graph build_ladder(const LadderSpec& spec) {
  if (spec.m < 4 || spec.n < 2) {
    throw std::invalid_argument(
        "parameters outside supported range: generalized Moebius ladder "
        "requires m >= 4 and n >= 2 (got m = " +
        std::to_string(spec.m) + ", n = " + std::to_string(spec.n) + ")");
  }
  const std::uint32_t columns = spec.m - 1;
  const std::uint32_t rows = spec.n;

  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(static_cast<std::size_t>(columns) * (rows - 1) +
                static_cast<std::size_t>(columns - 1) * rows + rows);
  // Rungs within each column.
  for (std::uint32_t i = 0; i < columns; ++i) {
    for (std::uint32_t j = 0; j + 1 < rows; ++j) {
      edges.emplace_back(spec.vertex_index(i, j), spec.vertex_index(i, j + 1));
    }
  }
  // Rails between consecutive columns.
  for (std::uint32_t i = 0; i + 1 < columns; ++i) {
    for (std::uint32_t j = 0; j < rows; ++j) {
      edges.emplace_back(spec.vertex_index(i, j), spec.vertex_index(i + 1, j));
    }
  }
  // Twist edges: last column to column 0 with rows reversed.
  for (std::uint32_t j = 0; j < rows; ++j) {
    edges.emplace_back(spec.vertex_index(columns - 1, j),
                       spec.vertex_index(0, rows - 1 - j));
  }
  return Graph(spec.vertex_count(), edges);
}

BlockMatrix block_matrix(std::uint32_t q, std::uint32_t m) {
  require_block_range(m);
  if (q > m - 2) {
    throw std::invalid_argument("block index q outside 0..m-2 (q = " +
                                std::to_string(q) + ", m = " +
                                std::to_string(m) + ")");
  }
  const std::uint32_t half = m / 2;
  if (q == 0) return kInColumn;

  if (m % 2 == 0) {
    // Even m: direct band, two transition blocks at q = (m-2)/2 and m/2,
    // then the band reached through the twist.
    if (q <= (m - 4) / 2) return shifted(kInColumn, q);
    if (q == (m - 2) / 2) {
      return BlockMatrix{{{half - 1, half, half},
                          {half, half - 1, half},
                          {half, half, half - 1}}};
    }
    if (q == half) {
      return BlockMatrix{{{half, half, half - 1},
                          {half, half - 1, half},
                          {half - 1, half, half}}};
    }
    return shifted(kAcrossTwist, m - 1 - q);
  }

  // Odd m: one transition block at q = (m-1)/2, where the two routes tie.
  if (q <= (m - 3) / 2) return shifted(kInColumn, q);
  if (q == (m - 1) / 2) {
    const std::uint32_t near = (m - 1) / 2;
    const std::uint32_t far = (m + 1) / 2;
    return BlockMatrix{
        {{near, far, near}, {far, near, far}, {near, far, near}}};
  }
  return shifted(kAcrossTwist, m - 1 - q);
}

DistanceMatrix assemble_block_distance_matrix(std::uint32_t m) {
  require_block_range(m);
  const std::uint32_t block_count = m - 1;
  const VertexId n = 3 * block_count;
  std::vector<std::uint32_t> entries(static_cast<std::size_t>(n) * n);

  for (std::uint32_t r = 0; r < block_count; ++r) {
    for (std::uint32_t c = r; c < block_count; ++c) {
      const BlockMatrix block = block_matrix(c - r, m);
      for (std::uint32_t j = 0; j < 3; ++j) {
        for (std::uint32_t k = 0; k < 3; ++k) {
          const std::size_t row = 3 * r + j;
          const std::size_t col = 3 * c + k;
          entries[row * n + col] = block[j][k];
          entries[col * n + row] = block[j][k];
        }
      }
    }
  }
  return DistanceMatrix(n, std::move(entries));
}

}  // namespace moebius
