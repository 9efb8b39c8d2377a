// Copyright 2026 The QPR Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace qpr {

/// Vertex index. Zero-based in memory; every file and report renders
/// vertices one-based.
using Vertex = std::uint32_t;

struct Edge {
  Vertex from;
  Vertex to;
  auto operator<=>(const Edge&) const = default;
};

struct Point {
  double x;
  double y;
  bool operator==(const Point&) const = default;
};

/// Seed of a deterministic pseudorandom stream. Identical seeds and
/// parameters give bit-identical outputs.
struct Seed {
  std::uint64_t value = 0;
  bool operator==(const Seed&) const = default;
};

/// Simple graph on vertices 0..M-1: no self-loops, no duplicate edges.
///
/// A directed graph stores arcs `from -> to`. An undirected graph stores
/// each edge once with `from < to`; `arcs()` expands both orientations.
/// Construction validates and canonicalises (sorts) the edge set, so two
/// graphs with the same edges compare equal regardless of input order.
class Graph {
 public:
  Graph() = default;

  /// Throws ParameterError on out-of-range ids, self-loops or duplicates.
  static Graph directed(std::size_t vertex_count, std::vector<Edge> edges);
  /// Accepts either orientation of each edge; (u,v) and (v,u) together are
  /// a duplicate.
  static Graph undirected(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  bool is_directed() const noexcept { return directed_; }

  /// Stored edges (arcs for directed graphs, canonical pairs otherwise).
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// Undirected graphs count each edge once.
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Directed adjacency; undirected edges contribute both orientations.
  std::vector<Edge> arcs() const;
  bool has_arc(Vertex from, Vertex to) const;

  std::vector<std::size_t> out_degrees() const;
  std::vector<std::size_t> in_degrees() const;
  /// Degrees of the undirected view.
  std::vector<std::size_t> degrees() const;

  /// Forget orientation; antiparallel arcs merge into one edge.
  Graph undirected_view() const;

  const std::optional<std::vector<Point>>& coordinates() const noexcept { return coordinates_; }
  /// Attach one point per vertex (spatial graphs).
  Graph with_coordinates(std::vector<Point> points) const;

  bool operator==(const Graph&) const = default;

 private:
  Graph(std::size_t n, bool directed, std::vector<Edge> edges);

  std::size_t vertex_count_ = 0;
  bool directed_ = true;
  std::vector<Edge> edges_;
  std::optional<std::vector<Point>> coordinates_;
};

// Generators. Undirected families return undirected graphs; rank them
// directly (each edge counts both ways) or pass through random_orientation.

/// Each unordered pair joined independently with probability p.
Graph gen_bernoulli(std::size_t n, double p, Seed seed);

/// Ring lattice with k neighbours per side; each lattice edge is rewired
/// with probability p_rewire by keeping its first endpoint and redrawing
/// the second uniformly among current non-neighbours. The default k = 2
/// starts from the 4-regular ring.
Graph gen_watts_strogatz(std::size_t n, double p_rewire, Seed seed, std::size_t k = 2);

/// Preferential attachment grown from a single vertex. Vertex v attaches
/// min(k, v) edges to distinct earlier vertices, each drawn with weight
/// equal to its degree (weight 1 while the degree is zero).
Graph gen_barabasi_albert(std::size_t n, std::size_t k, Seed seed);

/// Directed citation-style growth: vertex v points min(k, v) arcs at
/// distinct earlier vertices drawn with weight in_degree + a.
Graph gen_price(std::size_t n, std::size_t k, double a, Seed seed);

/// n uniform points in the unit square, edges between points at
/// Euclidean distance <= r. Coordinates are attached to the result.
Graph gen_spatial(std::size_t n, double r, Seed seed);

/// Zachary's karate club: 34 vertices, 78 undirected edges.
Graph zachary();

/// Replace every undirected edge by one orientation chosen by a fair coin.
/// Throws UsageError for directed input.
Graph random_orientation(const Graph& g, Seed seed);

}  // namespace qpr
