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

#include "qpr/edgelist.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "qpr/error.hpp"

namespace qpr {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    auto next = line.find(' ', pos);
    out.push_back(line.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view field, std::size_t line_no, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(line_no, std::string("expected ") + what + ", got '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

void write_edgelist(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) out << e.from + 1 << ' ' << e.to + 1 << '\n';
  if (!g.is_directed()) out << "#undirected\n";
  if (const auto& pts = g.coordinates()) {
    out << "#coords\n";
    char buf[64];
    for (const auto& p : *pts) {
      auto end = std::to_chars(buf, buf + sizeof buf, p.x).ptr;
      *end++ = ' ';
      end = std::to_chars(end, buf + sizeof buf, p.y).ptr;
      out << std::string_view(buf, static_cast<std::size_t>(end - buf)) << '\n';
    }
  }
}

Graph read_edgelist(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++line_no;
    return true;
  };

  if (!next_line()) throw ParseError(1, "missing vertex count");
  auto count = parse_number<long long>(line, line_no, "vertex count");
  if (count < 1) throw ParseError(line_no, "vertex count must be positive");
  const auto n = static_cast<std::size_t>(count);

  std::vector<Edge> edges;
  std::set<Edge> seen;
  bool undirected = false;
  bool has_coords = false;
  std::vector<Point> points;

  while (next_line()) {
    if (line.empty()) {
      if (in.peek() == std::char_traits<char>::eof()) break;
      throw ParseError(line_no, "blank line");
    }
    if (line == "#undirected") {
      if (undirected || has_coords) throw ParseError(line_no, "unexpected #undirected marker");
      undirected = true;
      continue;
    }
    if (line == "#coords") {
      if (has_coords) throw ParseError(line_no, "repeated #coords block");
      has_coords = true;
      continue;
    }
    if (line.front() == '#') throw ParseError(line_no, "unknown metadata '" + line + "'");
    auto fields = split_fields(line);
    if (fields.size() != 2) throw ParseError(line_no, "expected two space-separated fields");

    if (has_coords) {
      if (points.size() == n) throw ParseError(line_no, "more than " + std::to_string(n) + " coordinates");
      points.push_back({parse_number<double>(fields[0], line_no, "coordinate"),
                        parse_number<double>(fields[1], line_no, "coordinate")});
      continue;
    }
    if (undirected) throw ParseError(line_no, "edge after #undirected marker");

    auto u = parse_number<long long>(fields[0], line_no, "vertex id");
    auto v = parse_number<long long>(fields[1], line_no, "vertex id");
    for (auto id : {u, v}) {
      if (id < 1 || id > count) {
        throw ParseError(line_no, "vertex id " + std::to_string(id) + " outside 1.." + std::to_string(count));
      }
    }
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    Edge e{static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)};
    // Orientation is only known once the #undirected marker is read; the
    // Graph constructor catches reversed duplicates.
    if (!seen.insert(e).second) throw ParseError(line_no, "duplicate edge " + line);
    edges.push_back(e);
  }
  if (has_coords && points.size() != n) {
    throw ParseError(line_no, "expected " + std::to_string(n) + " coordinates, got " + std::to_string(points.size()));
  }

  Graph g;
  try {
    g = undirected ? Graph::undirected(n, std::move(edges)) : Graph::directed(n, std::move(edges));
  } catch (const ParameterError& err) {
    throw ParseError(line_no, err.what());
  }
  if (has_coords) g = g.with_coordinates(std::move(points));
  return g;
}

void save_edgelist(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  write_edgelist(g, out);
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

Graph load_edgelist(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  return read_edgelist(in);
}

}  // namespace qpr
