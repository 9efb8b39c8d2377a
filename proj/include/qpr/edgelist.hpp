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

#include <filesystem>
#include <iosfwd>

#include "qpr/graph.hpp"

namespace qpr {

// Edge-list text format, LF-terminated:
//
//   M                 vertex count
//   u v               one arc u -> v per line, one-based ids
//   ...
//   #undirected       optional: the lines above are undirected edges
//   #coords           optional: followed by exactly M lines "x y"
//   x y
//
// Every violation raises ParseError carrying the 1-based line number.

void write_edgelist(const Graph& g, std::ostream& out);
Graph read_edgelist(std::istream& in);

void save_edgelist(const Graph& g, const std::filesystem::path& path);
Graph load_edgelist(const std::filesystem::path& path);

}  // namespace qpr
