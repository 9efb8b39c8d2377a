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

#include "qpr/graph.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "qpr/error.hpp"

namespace qpr {

namespace {

std::string describe(const Edge& e) {
  return "(" + std::to_string(e.from + 1) + "," + std::to_string(e.to + 1) + ")";
}

}  // namespace

Graph::Graph(std::size_t n, bool directed, std::vector<Edge> edges)
    : vertex_count_(n), directed_(directed), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.from >= n || e.to >= n) {
      throw ParameterError("edge " + describe(e) + " outside vertex range 1.." + std::to_string(n));
    }
    if (e.from == e.to) throw ParameterError("self-loop at vertex " + std::to_string(e.from + 1));
    if (!directed && e.from > e.to) std::swap(e.from, e.to);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) throw ParameterError("duplicate edge " + describe(*dup));
}

Graph Graph::directed(std::size_t vertex_count, std::vector<Edge> edges) {
  return Graph(vertex_count, true, std::move(edges));
}

Graph Graph::undirected(std::size_t vertex_count, std::vector<Edge> edges) {
  return Graph(vertex_count, false, std::move(edges));
}

std::vector<Edge> Graph::arcs() const {
  if (directed_) return edges_;
  std::vector<Edge> out;
  out.reserve(2 * edges_.size());
  for (const auto& e : edges_) {
    out.push_back(e);
    out.push_back({e.to, e.from});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Graph::has_arc(Vertex from, Vertex to) const {
  Edge key{from, to};
  if (!directed_ && key.from > key.to) std::swap(key.from, key.to);
  return std::binary_search(edges_.begin(), edges_.end(), key);
}

std::vector<std::size_t> Graph::out_degrees() const {
  std::vector<std::size_t> deg(vertex_count_, 0);
  for (const auto& e : edges_) {
    ++deg[e.from];
    if (!directed_) ++deg[e.to];
  }
  return deg;
}

std::vector<std::size_t> Graph::in_degrees() const {
  std::vector<std::size_t> deg(vertex_count_, 0);
  for (const auto& e : edges_) {
    ++deg[e.to];
    if (!directed_) ++deg[e.from];
  }
  return deg;
}

std::vector<std::size_t> Graph::degrees() const { return undirected_view().out_degrees(); }

Graph Graph::undirected_view() const {
  if (!directed_) return *this;
  std::vector<Edge> pairs;
  pairs.reserve(edges_.size());
  for (auto e : edges_) {
    if (e.from > e.to) std::swap(e.from, e.to);
    pairs.push_back(e);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  Graph g(vertex_count_, false, std::move(pairs));
  g.coordinates_ = coordinates_;
  return g;
}

Graph Graph::with_coordinates(std::vector<Point> points) const {
  if (points.size() != vertex_count_) {
    throw ParameterError("expected " + std::to_string(vertex_count_) + " coordinates, got " +
                         std::to_string(points.size()));
  }
  Graph g = *this;
  g.coordinates_ = std::move(points);
  return g;
}

}  // namespace qpr
