#include "moebius/graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

namespace moebius {

namespace {

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

// Static partition of sources 0..count-1 across worker threads. Each chunk
// writes disjoint state, so the assembled result is schedule-independent.
template <typename Body>
void for_each_source(VertexId count, Body&& body) {
  constexpr VertexId kParallelThreshold = 256;
  unsigned workers = std::thread::hardware_concurrency();
  if (count < kParallelThreshold || workers <= 1) {
    body(0u, count, 0u);
    return;
  }
  workers = std::min<unsigned>(workers, count);
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const VertexId chunk = (count + workers - 1) / workers;
  for (unsigned t = 0; t < workers; ++t) {
    const VertexId begin = t * chunk;
    const VertexId end = std::min<VertexId>(begin + chunk, count);
    if (begin >= end) break;
    pool.emplace_back([&body, begin, end, t] { body(begin, end, t); });
  }
}

// BFS into a caller-provided row; assumes source is in range.
void bfs_into(const Graph& g, VertexId source, std::uint32_t* dist,
              std::vector<VertexId>& queue) {
  const VertexId n = g.vertex_count();
  std::fill(dist, dist + n, kUnvisited);
  queue.clear();
  queue.push_back(source);
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId u = queue[head];
    const std::uint32_t next = dist[u] + 1;
    for (VertexId v : g.neighbors(u)) {
      if (dist[v] == kUnvisited) {
        dist[v] = next;
        queue.push_back(v);
      }
    }
  }
}

// Distance ops are defined on connected graphs only; one BFS from vertex 0
// settles it for the whole (undirected) graph.
void require_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return;
  std::vector<std::uint32_t> dist(g.vertex_count());
  std::vector<VertexId> queue;
  queue.reserve(g.vertex_count());
  bfs_into(g, 0, dist.data(), queue);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (dist[v] == kUnvisited) {
      throw std::invalid_argument("graph not connected: vertex " +
                                  std::to_string(v) +
                                  " is unreachable from vertex 0");
    }
  }
}

}  // namespace

Graph::Graph(VertexId vertex_count,
             std::span<const std::pair<VertexId, VertexId>> edges)
    : vertex_count_(vertex_count) {
  if (vertex_count == 0) {
    throw std::invalid_argument("graph requires at least one vertex");
  }
  offsets_.assign(static_cast<std::size_t>(vertex_count) + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (VertexId v = 0; v < vertex_count; ++v) offsets_[v + 1] += offsets_[v];

  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    adjacency_[cursor[u]++] = v;
    adjacency_[cursor[v]++] = u;
  }
  for (VertexId v = 0; v < vertex_count; ++v) {
    auto begin = adjacency_.begin() + offsets_[v];
    auto end = adjacency_.begin() + offsets_[v + 1];
    std::sort(begin, end);
    if (std::adjacent_find(begin, end) != end) {
      throw std::invalid_argument("duplicate edge at vertex " +
                                  std::to_string(v));
    }
  }
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  if (v >= vertex_count_) {
    throw std::out_of_range("vertex index out of range");
  }
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

VertexId Graph::degree(VertexId v) const {
  return static_cast<VertexId>(neighbors(v).size());
}

DistanceMatrix::DistanceMatrix(VertexId size, std::vector<std::uint32_t> entries)
    : size_(size), entries_(std::move(entries)) {
  if (size == 0) {
    throw std::invalid_argument("distance matrix requires positive size");
  }
  if (entries_.size() != static_cast<std::size_t>(size) * size) {
    throw std::invalid_argument("distance matrix entry count != size^2");
  }
  for (VertexId i = 0; i < size; ++i) {
    if ((*this)(i, i) != 0) {
      throw std::invalid_argument("distance matrix diagonal must be zero");
    }
    for (VertexId j = i + 1; j < size; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) {
        throw std::invalid_argument("distance matrix must be symmetric");
      }
      if ((*this)(i, j) == 0) {
        throw std::invalid_argument(
            "distance matrix off-diagonal entries must be >= 1");
      }
    }
  }
}

std::span<const std::uint32_t> DistanceMatrix::row(VertexId i) const {
  if (i >= size_) {
    throw std::out_of_range("row index out of range");
  }
  return {entries_.data() + static_cast<std::size_t>(i) * size_, size_};
}

std::uint32_t DistanceMatrix::max_entry() const {
  return *std::max_element(entries_.begin(), entries_.end());
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, VertexId source) {
  if (source >= g.vertex_count()) {
    throw std::invalid_argument("source vertex out of range");
  }
  std::vector<std::uint32_t> dist(g.vertex_count());
  std::vector<VertexId> queue;
  queue.reserve(g.vertex_count());
  bfs_into(g, source, dist.data(), queue);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (dist[v] == kUnvisited) {
      throw std::invalid_argument("graph not connected: vertex " +
                                  std::to_string(v) +
                                  " is unreachable from vertex " +
                                  std::to_string(source));
    }
  }
  return dist;
}

DistanceMatrix distance_matrix(const Graph& g) {
  require_connected(g);
  const VertexId n = g.vertex_count();
  std::vector<std::uint32_t> entries(static_cast<std::size_t>(n) * n);
  for_each_source(n, [&](VertexId begin, VertexId end, unsigned) {
    std::vector<VertexId> queue;
    queue.reserve(n);
    for (VertexId s = begin; s < end; ++s) {
      bfs_into(g, s, entries.data() + static_cast<std::size_t>(s) * n, queue);
    }
  });
  return DistanceMatrix(n, std::move(entries));
}

std::uint32_t diameter(const Graph& g) {
  require_connected(g);
  const VertexId n = g.vertex_count();
  std::vector<std::uint32_t> row_max(n, 0);
  for_each_source(n, [&](VertexId begin, VertexId end, unsigned) {
    std::vector<std::uint32_t> dist(n);
    std::vector<VertexId> queue;
    queue.reserve(n);
    for (VertexId s = begin; s < end; ++s) {
      bfs_into(g, s, dist.data(), queue);
      row_max[s] = *std::max_element(dist.begin(), dist.end());
    }
  });
  return *std::max_element(row_max.begin(), row_max.end());
}

HosoyaPolynomial hosoya_polynomial(const Graph& g) {
  if (g.vertex_count() < 2) {
    throw std::invalid_argument(
        "Hosoya polynomial undefined: graph has no vertex pairs");
  }
  require_connected(g);
  const VertexId n = g.vertex_count();

  // One histogram per worker, merged afterwards; each pair {u,v} is counted
  // once, in the chunk owning the smaller endpoint.
  const unsigned slots = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::vector<std::uint64_t>> histograms(
      slots, std::vector<std::uint64_t>(n, 0));
  for_each_source(n, [&](VertexId begin, VertexId end, unsigned worker) {
    auto& hist = histograms[worker];
    std::vector<std::uint32_t> dist(n);
    std::vector<VertexId> queue;
    queue.reserve(n);
    for (VertexId s = begin; s < end; ++s) {
      bfs_into(g, s, dist.data(), queue);
      for (VertexId v = s + 1; v < n; ++v) ++hist[dist[v]];
    }
  });

  std::vector<std::uint64_t> counts(n, 0);
  for (const auto& hist : histograms) {
    for (VertexId k = 0; k < n; ++k) counts[k] += hist[k];
  }
  std::size_t top = n - 1;
  while (top > 1 && counts[top] == 0) --top;
  return HosoyaPolynomial(
      std::vector<std::uint64_t>(counts.begin() + 1, counts.begin() + top + 1));
}

namespace {

template <typename Term>
Rational sum_over_pairs(const DistanceMatrix& d, Term&& term) {
  Rational acc = 0;
  for (VertexId i = 0; i < d.size(); ++i) {
    for (VertexId j = i + 1; j < d.size(); ++j) {
      acc += term(Integer(d(i, j)));
    }
  }
  return acc;
}

}  // namespace

Rational wiener_from_distances(const DistanceMatrix& d) {
  return sum_over_pairs(d, [](const Integer& k) { return Rational(k); });
}

Rational hyper_wiener_from_distances(const DistanceMatrix& d) {
  return sum_over_pairs(
             d, [](const Integer& k) { return Rational(k * k + k); }) /
         2;
}

Rational harary_from_distances(const DistanceMatrix& d) {
  return sum_over_pairs(d, [](const Integer& k) { return Rational(1, k); });
}

Rational tsz_from_distances(const DistanceMatrix& d) {
  return sum_over_pairs(d,
                        [](const Integer& k) {
                          return Rational(k * (k + 1) * (k + 2));
                        }) /
         6;
}

Rational harary_squared(const DistanceMatrix& d) {
  return sum_over_pairs(d, [](const Integer& k) { return Rational(1, k * k); });
}

}  // namespace moebius
