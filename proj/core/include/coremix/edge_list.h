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

// Plain-text edge list: a header line "n m" followed by m lines "u v"
// (0-based, loops written "u u"). Reading then writing reproduces the input
// byte for byte when it uses single spaces and '\n' line ends.

#ifndef COREMIX_EDGE_LIST_H_
#define COREMIX_EDGE_LIST_H_

#include <iosfwd>
#include <string>

#include "coremix/multigraph.h"

namespace coremix {

Multigraph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Multigraph& g);

Multigraph load_edge_list(const std::string& path);
void save_edge_list(const std::string& path, const Multigraph& g);

}  // namespace coremix

#endif  // COREMIX_EDGE_LIST_H_
