// Copyright 2026 The coremix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coremix/edge_list.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "coremix/error.h"

namespace coremix {

Multigraph read_edge_list(std::istream& in) {
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) {
    throw InvalidArgument("edge list: malformed header, expected \"n m\"");
  }
  Multigraph g(static_cast<std::size_t>(n));
  for (long long i = 0; i < m; ++i) {
    long long u = -1;
    long long v = -1;
    if (!(in >> u >> v)) {
      throw InvalidArgument("edge list: expected " + std::to_string(m) +
                            " edges, found " + std::to_string(i));
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InvalidArgument("edge list: endpoint out of range on edge " +
                            std::to_string(i));
    }
    g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  return g;
}

void write_edge_list(std::ostream& out, const Multigraph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Multigraph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  return read_edge_list(in);
}

void save_edge_list(const std::string& path, const Multigraph& g) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  write_edge_list(out, g);
}

}  // namespace coremix
