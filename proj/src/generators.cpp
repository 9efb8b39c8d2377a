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

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "qpr/error.hpp"
#include "qpr/graph.hpp"

namespace qpr {

namespace {

using Rng = std::mt19937_64;

void require_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError(std::string(name) + " must lie in [0,1], got " + std::to_string(p));
  }
}

// Draws min(k, candidates) distinct vertices from [0, pool) with the given
// weights; a drawn vertex gets weight zero for the remaining draws.
std::vector<Vertex> weighted_distinct(std::vector<double> weights, std::size_t k, Rng& rng) {
  std::vector<Vertex> picked;
  k = std::min(k, weights.size());
  while (picked.size() < k) {
    std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
    auto v = static_cast<Vertex>(pick(rng));
    picked.push_back(v);
    weights[v] = 0.0;
  }
  return picked;
}

}  // namespace

Graph gen_bernoulli(std::size_t n, double p, Seed seed) {
  if (n < 1) throw ParameterError("bernoulli graph needs n >= 1");
  require_probability(p, "edge probability p");
  Rng rng(seed.value);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph::undirected(n, std::move(edges));
}

Graph gen_watts_strogatz(std::size_t n, double p_rewire, Seed seed, std::size_t k) {
  if (n < 3) throw ParameterError("watts-strogatz graph needs n >= 3");
  if (k < 1) throw ParameterError("watts-strogatz graph needs k >= 1");
  if (2 * k >= n) {
    throw ParameterError("watts-strogatz graph needs 2k < n (k=" + std::to_string(k) +
                         ", n=" + std::to_string(n) + ")");
  }
  require_probability(p_rewire, "rewiring probability");

  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<Edge> lattice;
  for (Vertex i = 0; i < n; ++i) {
    for (std::size_t j = 1; j <= k; ++j) {
      auto v = static_cast<Vertex>((i + j) % n);
      lattice.push_back({i, v});
      adj[i][v] = adj[v][i] = 1;
    }
  }

  Rng rng(seed.value);
  std::bernoulli_distribution coin(p_rewire);
  for (const auto& e : lattice) {
    if (!coin(rng)) continue;
    std::vector<Vertex> candidates;
    for (Vertex w = 0; w < n; ++w) {
      if (w != e.from && !adj[e.from][w]) candidates.push_back(w);
    }
    if (candidates.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    Vertex w = candidates[pick(rng)];
    adj[e.from][e.to] = adj[e.to][e.from] = 0;
    adj[e.from][w] = adj[w][e.from] = 1;
  }

  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (adj[u][v]) edges.push_back({u, v});
    }
  }
  return Graph::undirected(n, std::move(edges));
}

Graph gen_barabasi_albert(std::size_t n, std::size_t k, Seed seed) {
  if (k < 1) throw ParameterError("barabasi-albert graph needs k >= 1");
  if (n <= k) {
    throw ParameterError("barabasi-albert graph needs n >= k+1 (n=" + std::to_string(n) +
                         ", k=" + std::to_string(k) + ")");
  }
  Rng rng(seed.value);
  std::vector<std::size_t> degree(n, 0);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    std::vector<double> weights(v);
    for (Vertex u = 0; u < v; ++u) weights[u] = degree[u] == 0 ? 1.0 : static_cast<double>(degree[u]);
    for (Vertex u : weighted_distinct(std::move(weights), k, rng)) {
      edges.push_back({u, v});
      ++degree[u];
      ++degree[v];
    }
  }
  return Graph::undirected(n, std::move(edges));
}

Graph gen_price(std::size_t n, std::size_t k, double a, Seed seed) {
  if (n < 2) throw ParameterError("price graph needs n >= 2");
  if (k < 1) throw ParameterError("price graph needs k >= 1");
  if (!(a > 0.0)) throw ParameterError("price graph needs attractiveness a > 0, got " + std::to_string(a));
  Rng rng(seed.value);
  std::vector<std::size_t> in_degree(n, 0);
  std::vector<Edge> arcs;
  for (Vertex v = 1; v < n; ++v) {
    std::vector<double> weights(v);
    for (Vertex u = 0; u < v; ++u) weights[u] = static_cast<double>(in_degree[u]) + a;
    for (Vertex u : weighted_distinct(std::move(weights), k, rng)) {
      arcs.push_back({v, u});
      ++in_degree[u];
    }
  }
  return Graph::directed(n, std::move(arcs));
}

Graph gen_spatial(std::size_t n, double r, Seed seed) {
  if (n < 1) throw ParameterError("spatial graph needs n >= 1");
  if (!(r >= 0.0)) throw ParameterError("spatial graph needs r >= 0, got " + std::to_string(r));
  Rng rng(seed.value);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Point> points(n);
  for (auto& pt : points) {
    pt.x = unit(rng);
    pt.y = unit(rng);
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (std::hypot(points[u].x - points[v].x, points[u].y - points[v].y) <= r) edges.push_back({u, v});
    }
  }
  return Graph::undirected(n, std::move(edges)).with_coordinates(std::move(points));
}

Graph random_orientation(const Graph& g, Seed seed) {
  if (g.is_directed()) throw UsageError("random_orientation expects an undirected graph");
  Rng rng(seed.value);
  std::bernoulli_distribution coin(0.5);
  std::vector<Edge> arcs;
  arcs.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    arcs.push_back(coin(rng) ? e : Edge{e.to, e.from});
  }
  Graph out = Graph::directed(g.vertex_count(), std::move(arcs));
  if (g.coordinates()) out = out.with_coordinates(*g.coordinates());
  return out;
}

}  // namespace qpr
